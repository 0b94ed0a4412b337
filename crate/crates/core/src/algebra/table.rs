//! Finite multiplicative systems given by Cayley tables.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};

/// A finite semigroup stored as a validated Cayley table.
///
/// Elements are the indices `0..order`; labels are only for display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulSystem {
    order: usize,
    table: Vec<usize>,
    labels: Vec<String>,
}

/// Sorted, duplicate-free set of element indices of some parent system.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementSet {
    members: Vec<usize>,
}

impl ElementSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        ElementSet { members }
    }

    pub fn empty() -> Self {
        ElementSet {
            members: Vec::new(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        ElementSet::new(iter.into_iter().collect())
    }
}

impl MulSystem {
    /// Validates a Cayley table: entries in range, labels distinct, and all
    /// `order^3` associativity triples.
    pub fn from_table(order: usize, table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let system = Self::from_rows_unchecked_assoc(order, table, labels)?;
        system.check_associative()?;
        Ok(system)
    }

    /// Same as [`MulSystem::from_table`] with labels `"0".."order-1"`.
    pub fn from_table_unlabeled(order: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_table(order, table, default_labels(order))
    }

    fn from_rows_unchecked_assoc(
        order: usize,
        table: Vec<Vec<usize>>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::DimensionMismatch("order must be positive".into()));
        }
        if table.len() != order {
            return Err(Error::DimensionMismatch(format!(
                "table has {} rows, expected {order}",
                table.len()
            )));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (r, row) in table.into_iter().enumerate() {
            if row.len() != order {
                return Err(Error::DimensionMismatch(format!(
                    "row {r} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for v in row {
                if v >= order {
                    return Err(out_of_range("table entry", v, order));
                }
                flat.push(v);
            }
        }
        Self::from_flat(order, flat, labels)
    }

    /// Builds from a row-major flat table, checking ranges and labels only.
    pub(crate) fn from_flat(order: usize, flat: Vec<usize>, labels: Vec<String>) -> Result<Self> {
        debug_assert_eq!(flat.len(), order * order);
        if labels.len() != order {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {order} elements",
                labels.len()
            )));
        }
        let mut seen = HashSet::with_capacity(order);
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(MulSystem {
            order,
            table: flat,
            labels,
        })
    }

    /// Builds a table with no validation at all; used for fault injection.
    pub(crate) fn from_flat_unchecked(order: usize, flat: Vec<usize>, labels: Vec<String>) -> Self {
        MulSystem {
            order,
            table: flat,
            labels,
        }
    }

    pub(crate) fn check_associative(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// Index of the element carrying `label`.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub(crate) fn flat_table(&self) -> &[usize] {
        &self.table
    }

    /// `{ x : xy = yx for all y }`.
    pub fn center(&self) -> ElementSet {
        (0..self.order)
            .filter(|&x| (0..self.order).all(|y| self.commute(x, y)))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.commute(x, y)))
    }

    /// Serializes to the Cayley text format: order, one row per line, then
    /// a comma-separated label line.
    pub fn to_cayley_text(&self) -> Result<String> {
        for label in &self.labels {
            if label.contains(',') || label.contains('\n') || label.trim() != label {
                return Err(Error::InvalidLabel(label.clone()));
            }
        }
        let mut out = String::new();
        writeln!(out, "{}", self.order).unwrap();
        for a in 0..self.order {
            let row: Vec<String> = self.row(a).iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
        writeln!(out, "{}", self.labels.join(",")).unwrap();
        Ok(out)
    }

    /// Parses the Cayley text format. The label line is optional.
    pub fn from_cayley_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let order: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty Cayley table".into()))?
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad order line: {e}")))?;
        let mut rows = Vec::with_capacity(order);
        for r in 0..order {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing table row {r}")))?;
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|e| Error::Parse(format!("row {r}: {t:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let labels = match lines.next() {
            Some(line) => line.split(',').map(|s| s.trim().to_string()).collect(),
            None => default_labels(order),
        };
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("trailing content {extra:?}")));
        }
        Self::from_table(order, rows, labels)
    }
}

pub(crate) fn default_labels(order: usize) -> Vec<String> {
    (0..order).map(|i| i.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t3() -> MulSystem {
        // xy = f(x) with f(0) = f(1) = 0, f(2) = 2
        let f = [0, 0, 2];
        let table = (0..3).map(|x| vec![f[x]; 3]).collect();
        MulSystem::from_table(3, table, vec!["a".into(), "b".into(), "c".into()]).unwrap()
    }

    #[test]
    fn trivial_system() {
        let s = MulSystem::from_table_unlabeled(1, vec![vec![0]]).unwrap();
        assert_eq!(s.order(), 1);
        assert_eq!(s.center().members(), &[0]);
        assert!(s.is_abelian());
    }

    #[test]
    fn left_constant_system_is_valid() {
        let s = t3();
        // independent check: f idempotent gives associativity
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    assert_eq!(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)));
                }
            }
        }
        assert!(!s.is_abelian());
        assert!(s.center().is_empty());
    }

    #[test]
    fn semilattice_is_valid() {
        let s = MulSystem::from_table_unlabeled(2, vec![vec![0, 1], vec![1, 1]]).unwrap();
        assert!(s.is_abelian());
    }

    #[test]
    fn rejects_out_of_range() {
        let err = MulSystem::from_table_unlabeled(2, vec![vec![0, 2], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { index: 2, .. }));
    }

    #[test]
    fn rejects_non_associative() {
        // x*y = 1 - x: (0*0)*0 = 1*0 = 0, 0*(0*0) = 0*1 = 1
        let err = MulSystem::from_table_unlabeled(2, vec![vec![1, 1], vec![0, 0]]).unwrap_err();
        assert_eq!(err, Error::NotAssociative { a: 0, b: 0, c: 0 });
    }

    #[test]
    fn rejects_duplicate_labels() {
        let err = MulSystem::from_table(2, vec![vec![0, 1], vec![1, 1]], vec!["x".into(), "x".into()])
            .unwrap_err();
        assert_eq!(err, Error::DuplicateLabel("x".into()));
    }

    #[test]
    fn cayley_text_round_trip() {
        let s = t3();
        let text = s.to_cayley_text().unwrap();
        assert_eq!(text, "3\n0 0 0\n0 0 0\n2 2 2\na,b,c\n");
        assert_eq!(MulSystem::from_cayley_text(&text).unwrap(), s);
    }

    #[test]
    fn cayley_text_without_labels() {
        let s = MulSystem::from_cayley_text("2\n0 1\n1 0\n").unwrap();
        assert_eq!(s.labels(), &["0".to_string(), "1".to_string()]);
    }

    #[test]
    fn cayley_text_rejects_comma_labels() {
        let s = MulSystem::from_table(1, vec![vec![0]], vec!["a,b".into()]).unwrap();
        assert!(matches!(s.to_cayley_text(), Err(Error::InvalidLabel(_))));
    }
}
