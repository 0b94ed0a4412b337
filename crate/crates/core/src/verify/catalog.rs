use crate::algebra::{named_group, FiniteGroup};

/// Order through which [`GroupCatalog::standard`] lists every group up to
/// isomorphism.
pub const CATALOG_COMPLETE_UP_TO: usize = 15;

/// One representative per isomorphism class of order at most 15, by order.
const STANDARD: &[&str] = &[
    "C1", "C2", "C3", "C4", "C2 x C2", "C5", "C6", "S3", "C7", "C8", "C4 x C2", "C2 x C2 x C2",
    "D4", "Q8", "C9", "C3 x C3", "C10", "D5", "C11", "C12", "C6 x C2", "A4", "D6", "Dic3", "C13",
    "C14", "D7", "C15",
];

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    /// A spec accepted by [`named_group`].
    pub name: String,
    pub group: FiniteGroup,
}

/// Finite list of groups together with the order through which the list is
/// known to be complete up to isomorphism.
#[derive(Debug, Clone)]
pub struct GroupCatalog {
    entries: Vec<CatalogEntry>,
    complete_up_to: usize,
}

impl GroupCatalog {
    /// All 28 groups of order at most 15.
    pub fn standard() -> Self {
        Self::up_to(CATALOG_COMPLETE_UP_TO)
    }

    /// The standard groups of order at most `max_order`.
    pub fn up_to(max_order: usize) -> Self {
        let entries = STANDARD
            .iter()
            .map(|&name| CatalogEntry {
                name: name.to_string(),
                group: named_group(name).expect("standard catalog spec"),
            })
            .filter(|e| e.group.order() <= max_order)
            .collect();
        GroupCatalog {
            entries,
            complete_up_to: max_order.min(CATALOG_COMPLETE_UP_TO),
        }
    }

    /// A user-supplied catalog; `complete_up_to` is taken on trust.
    pub fn new(entries: Vec<CatalogEntry>, complete_up_to: usize) -> Self {
        GroupCatalog {
            entries,
            complete_up_to,
        }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn complete_up_to(&self) -> usize {
        self.complete_up_to
    }

    pub fn of_order(&self, order: usize) -> impl Iterator<Item = &CatalogEntry> + '_ {
        self.entries.iter().filter(move |e| e.group.order() == order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_per_order() {
        let cat = GroupCatalog::standard();
        let counts: Vec<usize> = (1..=15).map(|n| cat.of_order(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1]);
        assert_eq!(cat.complete_up_to(), 15);
    }

    #[test]
    fn truncated() {
        let cat = GroupCatalog::up_to(9);
        assert_eq!(cat.entries().len(), 16);
        assert_eq!(cat.complete_up_to(), 9);
        assert_eq!(GroupCatalog::up_to(40).complete_up_to(), 15);
    }
}
