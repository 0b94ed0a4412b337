use serde::{Deserialize, Serialize};

/// Caps and budgets guarding the exponential searches.
///
/// Exceeding a cap is reported as an error, never by truncating output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest group order accepted by the catalog and subgroup enumeration.
    pub group_order: usize,
    /// Largest Rees matrix semigroup order.
    pub rees_order: usize,
    /// Vertex cap for exact clique number.
    pub clique_vertices: usize,
    /// Vertex cap for exact chromatic number.
    pub chromatic_vertices: usize,
    /// Vertex cap per graph for isomorphism search.
    pub iso_vertices: usize,
    /// Node expansions allowed in left-path search.
    pub path_budget: u64,
    /// Maximal cliques allowed in one enumeration.
    pub clique_output: usize,
}

pub const DEFAULT_PATH_BUDGET: u64 = 10_000_000;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            group_order: 64,
            rees_order: 512,
            clique_vertices: 256,
            chromatic_vertices: 128,
            iso_vertices: 64,
            path_budget: DEFAULT_PATH_BUDGET,
            clique_output: 1_000_000,
        }
    }
}
