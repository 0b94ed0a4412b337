//! Rees matrix semigroups `M(G; I, Λ; P)` over finite groups.
//!
//! Elements are triples `(i, x, λ)` with product
//! `(i, x, λ)(j, y, μ) = (i, x·p(λ, j)·y, μ)`. The sandwich matrix is indexed
//! `p(λ, i)`: rows come from Λ, columns from I.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{ElementSet, FiniteGroup, MulSystem};
use crate::error::{out_of_range, Error, Result};

/// Λ × I matrix of group elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SandwichMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<usize>,
}

impl SandwichMatrix {
    pub fn new(entries: Vec<Vec<usize>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("sandwich matrix must be non-empty".into()));
        }
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("sandwich matrix rows differ in length".into()));
        }
        Ok(SandwichMatrix {
            rows,
            cols,
            entries: entries.into_iter().flatten().collect(),
        })
    }

    /// Every entry equal to the group identity.
    pub fn identity(group: &FiniteGroup, rows: usize, cols: usize) -> Self {
        SandwichMatrix {
            rows,
            cols,
            entries: vec![group.identity(); rows * cols],
        }
    }

    /// Entries drawn uniformly from the group, row-major, with a seeded ChaCha8
    /// generator.
    pub fn random(group: &FiniteGroup, rows: usize, cols: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries = (0..rows * cols).map(|_| rng.gen_range(0..group.order())).collect();
        SandwichMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `p(λ, i)`.
    #[inline]
    pub fn entry(&self, lambda: usize, i: usize) -> usize {
        self.entries[lambda * self.cols + i]
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.cols).map(<[usize]>::to_vec).collect()
    }
}

/// An element `(i, x, λ)` of a Rees matrix semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub i: usize,
    pub x: usize,
    pub lambda: usize,
}

impl Triple {
    pub fn new(i: usize, x: usize, lambda: usize) -> Self {
        Triple { i, x, lambda }
    }
}

#[derive(Debug, Clone)]
pub struct ReesMatrixSemigroup {
    group: FiniteGroup,
    i_size: usize,
    lambda_size: usize,
    p: SandwichMatrix,
    view: MulSystem,
}

pub const DEFAULT_REES_CAP: usize = 512;

impl ReesMatrixSemigroup {
    pub fn build(group: FiniteGroup, i_size: usize, lambda_size: usize, p: SandwichMatrix) -> Result<Self> {
        Self::build_with_cap(group, i_size, lambda_size, p, DEFAULT_REES_CAP)
    }

    /// Builds the semigroup and its Cayley-table view. The view is re-checked
    /// for associativity whenever the order is at most [`DEFAULT_REES_CAP`].
    pub fn build_with_cap(
        group: FiniteGroup,
        i_size: usize,
        lambda_size: usize,
        p: SandwichMatrix,
        cap: usize,
    ) -> Result<Self> {
        if i_size == 0 || lambda_size == 0 {
            return Err(Error::DimensionMismatch("index sets must be non-empty".into()));
        }
        if p.rows() != lambda_size || p.cols() != i_size {
            return Err(Error::DimensionMismatch(format!(
                "sandwich matrix is {}x{}, expected {lambda_size}x{i_size} (|Λ| x |I|)",
                p.rows(),
                p.cols()
            )));
        }
        if let Some(&bad) = p.entries.iter().find(|&&e| e >= group.order()) {
            return Err(out_of_range("sandwich entry", bad, group.order()));
        }
        let order = i_size
            .saturating_mul(group.order())
            .saturating_mul(lambda_size);
        if order > cap {
            return Err(Error::SizeLimitExceeded {
                what: "Rees matrix semigroup".into(),
                size: order,
                cap,
            });
        }
        let mut s = ReesMatrixSemigroup {
            group,
            i_size,
            lambda_size,
            p,
            view: MulSystem::from_flat_unchecked(0, Vec::new(), Vec::new()),
        };
        s.view = s.build_view()?;
        if order <= DEFAULT_REES_CAP {
            s.view.check_associative()?;
        }
        Ok(s)
    }

    fn build_view(&self) -> Result<MulSystem> {
        let n = self.order();
        let mut flat = Vec::with_capacity(n * n);
        for a in 0..n {
            let ta = self.triple(a);
            for b in 0..n {
                flat.push(self.encode(self.product(ta, self.triple(b))));
            }
        }
        let labels = (0..n)
            .map(|a| {
                let t = self.triple(a);
                format!("({},{},{})", t.i, self.group.label(t.x), t.lambda)
            })
            .collect();
        MulSystem::from_flat(n, flat, labels)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn i_size(&self) -> usize {
        self.i_size
    }

    pub fn lambda_size(&self) -> usize {
        self.lambda_size
    }

    pub fn sandwich(&self) -> &SandwichMatrix {
        &self.p
    }

    pub fn order(&self) -> usize {
        self.i_size * self.group.order() * self.lambda_size
    }

    /// At least one of the index sets has more than one element.
    pub fn has_nontrivial_index(&self) -> bool {
        self.i_size > 1 || self.lambda_size > 1
    }

    /// The Cayley-table view of the semigroup.
    pub fn as_system(&self) -> &MulSystem {
        &self.view
    }

    /// Flat index `i·|G|·|Λ| + x·|Λ| + λ`.
    #[inline]
    pub fn encode(&self, t: Triple) -> usize {
        (t.i * self.group.order() + t.x) * self.lambda_size + t.lambda
    }

    #[inline]
    pub fn triple(&self, a: usize) -> Triple {
        let lambda = a % self.lambda_size;
        let rest = a / self.lambda_size;
        Triple {
            i: rest / self.group.order(),
            x: rest % self.group.order(),
            lambda,
        }
    }

    pub fn check_triple(&self, t: Triple) -> Result<()> {
        if t.i >= self.i_size {
            return Err(out_of_range("triple i", t.i, self.i_size));
        }
        if t.x >= self.group.order() {
            return Err(out_of_range("triple x", t.x, self.group.order()));
        }
        if t.lambda >= self.lambda_size {
            return Err(out_of_range("triple lambda", t.lambda, self.lambda_size));
        }
        Ok(())
    }

    #[inline]
    fn product(&self, a: Triple, b: Triple) -> Triple {
        let g = &self.group;
        let mid = g.mul(g.mul(a.x, self.p.entry(a.lambda, b.i)), b.x);
        Triple::new(a.i, mid, b.lambda)
    }

    /// `(i, x, λ)(j, y, μ) = (i, x·p(λ, j)·y, μ)`.
    pub fn rees_product(&self, a: Triple, b: Triple) -> Result<Triple> {
        self.check_triple(a)?;
        self.check_triple(b)?;
        Ok(self.product(a, b))
    }

    /// H-classes `{i} × G × {λ}` in row-major `(i, λ)` order.
    pub fn h_classes(&self) -> Vec<ElementSet> {
        let mut blocks = Vec::with_capacity(self.i_size * self.lambda_size);
        for i in 0..self.i_size {
            for lambda in 0..self.lambda_size {
                blocks.push(
                    (0..self.group.order())
                        .map(|x| self.encode(Triple::new(i, x, lambda)))
                        .collect(),
                );
            }
        }
        blocks
    }

    /// Commutation decided by the criterion `i = j`, `λ = μ` and
    /// `x·p(λ,i)·y = y·p(λ,i)·x`, without forming either product.
    pub fn commute_by_lemma(&self, a: Triple, b: Triple) -> bool {
        if a.i != b.i || a.lambda != b.lambda {
            return false;
        }
        let g = &self.group;
        let p = self.p.entry(a.lambda, a.i);
        g.mul(g.mul(a.x, p), b.x) == g.mul(g.mul(b.x, p), a.x)
    }

    /// `(i, p(λ,i)^{-1}·x, λ)`: the isomorphism from `G` onto the H-class
    /// group at `(i, λ)`.
    pub fn translate(&self, i: usize, lambda: usize, x: usize) -> Triple {
        let g = &self.group;
        Triple::new(i, g.mul(g.inverse(self.p.entry(lambda, i)), x), lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::named_group;

    fn c3_example() -> ReesMatrixSemigroup {
        // p(0,0) = 1, p(1,0) = 0
        let g = named_group("C3").unwrap();
        let p = SandwichMatrix::new(vec![vec![1], vec![0]]).unwrap();
        ReesMatrixSemigroup::build(g, 1, 2, p).unwrap()
    }

    #[test]
    fn sizes() {
        let c1 = named_group("C1").unwrap();
        let p = SandwichMatrix::identity(&c1, 2, 2);
        assert_eq!(ReesMatrixSemigroup::build(c1, 2, 2, p).unwrap().order(), 4);
        let s3 = named_group("S3").unwrap();
        let p = SandwichMatrix::random(&s3, 1, 2, 5);
        assert_eq!(ReesMatrixSemigroup::build(s3, 2, 1, p).unwrap().order(), 12);
    }

    #[test]
    fn dimension_mismatch() {
        let g = named_group("C2").unwrap();
        let p = SandwichMatrix::new(vec![vec![0, 0]]).unwrap();
        assert!(matches!(
            ReesMatrixSemigroup::build(g, 2, 2, p),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn entry_out_of_range() {
        let g = named_group("C2").unwrap();
        let p = SandwichMatrix::new(vec![vec![2]]).unwrap();
        assert!(matches!(
            ReesMatrixSemigroup::build(g, 1, 1, p),
            Err(Error::IndexOutOfRange { index: 2, .. })
        ));
    }

    #[test]
    fn order_cap() {
        let g = named_group("S4").unwrap();
        let p = SandwichMatrix::identity(&g, 5, 5);
        assert!(matches!(
            ReesMatrixSemigroup::build(g, 5, 5, p),
            Err(Error::SizeLimitExceeded { size: 600, .. })
        ));
    }

    #[test]
    fn products_in_additive_c3() {
        let s = c3_example();
        let t = Triple::new;
        assert_eq!(s.rees_product(t(0, 1, 0), t(0, 1, 1)).unwrap(), t(0, 0, 1));
        assert_eq!(s.rees_product(t(0, 0, 1), t(0, 0, 0)).unwrap(), t(0, 0, 0));
        assert_eq!(s.rees_product(t(0, 2, 0), t(0, 2, 0)).unwrap(), t(0, 2, 0));
        assert!(s.rees_product(t(1, 0, 0), t(0, 0, 0)).is_err());
    }

    #[test]
    fn encoding_round_trip() {
        let s = c3_example();
        for a in 0..s.order() {
            assert_eq!(s.encode(s.triple(a)), a);
        }
        assert_eq!(s.encode(Triple::new(0, 2, 1)), 2 * 2 + 1);
    }

    #[test]
    fn h_class_blocks() {
        let c2 = named_group("C2").unwrap();
        let p = SandwichMatrix::identity(&c2, 1, 2);
        let s = ReesMatrixSemigroup::build(c2, 2, 1, p).unwrap();
        let blocks = s.h_classes();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.len() == 2));

        let s3 = named_group("S3").unwrap();
        let p = SandwichMatrix::identity(&s3, 1, 1);
        assert_eq!(ReesMatrixSemigroup::build(s3, 1, 1, p).unwrap().h_classes().len(), 1);

        let c1 = named_group("C1").unwrap();
        let p = SandwichMatrix::identity(&c1, 2, 3);
        let blocks = ReesMatrixSemigroup::build(c1, 3, 2, p).unwrap().h_classes();
        assert_eq!(blocks.len(), 6);
        assert!(blocks.iter().all(|b| b.len() == 1));
    }

    #[test]
    fn lemma_examples() {
        let s3 = named_group("S3").unwrap();
        let p = SandwichMatrix::identity(&s3, 1, 2);
        let s = ReesMatrixSemigroup::build(s3.clone(), 2, 1, p).unwrap();
        let a = Triple::new(0, 1, 0);
        let b = Triple::new(1, 1, 0);
        assert!(!s.commute_by_lemma(a, b));
        assert!(s.commute_by_lemma(a, a));
        let t12 = s3.index_of("(12)").unwrap();
        let t13 = s3.index_of("(13)").unwrap();
        assert!(!s.commute_by_lemma(Triple::new(0, t12, 0), Triple::new(0, t13, 0)));
    }

    #[test]
    fn translate_examples() {
        let s = c3_example();
        assert_eq!(s.translate(0, 1, 2), Triple::new(0, 2, 1));
        assert_eq!(s.translate(0, 0, 0), Triple::new(0, 2, 0));
    }

    #[test]
    fn singleton_index_sets_give_the_group() {
        let g = named_group("S3").unwrap();
        let p = SandwichMatrix::new(vec![vec![3]]).unwrap();
        let s = ReesMatrixSemigroup::build(g.clone(), 1, 1, p).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                let lhs = s.rees_product(s.translate(0, 0, x), s.translate(0, 0, y)).unwrap();
                assert_eq!(lhs, s.translate(0, 0, g.mul(x, y)));
            }
        }
    }
}
