//! Cayley-table semigroups and groups.

mod group;
mod named;
mod table;

pub use group::FiniteGroup;
pub use named::{
    alternating4, cyclic, dicyclic, dihedral, direct_product, named_group, named_group_with_cap,
    quaternion, symmetric, DEFAULT_NAMED_CAP,
};
pub use table::{ElementSet, MulSystem};
