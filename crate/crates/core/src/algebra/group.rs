//! Finite groups and their abelian subgroups.

use std::collections::{HashSet, VecDeque};
use std::ops::Deref;

use super::table::{ElementSet, MulSystem};
use crate::error::{Error, Result};

/// A group given by a validated Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    system: MulSystem,
    identity: usize,
    inverse: Vec<usize>,
}

impl Deref for FiniteGroup {
    type Target = MulSystem;

    fn deref(&self) -> &MulSystem {
        &self.system
    }
}

impl FiniteGroup {
    /// Validates the table as a semigroup, then locates the identity and
    /// inverses.
    pub fn from_table(order: usize, table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        Self::from_system(MulSystem::from_table(order, table, labels)?)
    }

    pub fn from_system(system: MulSystem) -> Result<Self> {
        let n = system.order();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| system.mul(e, x) == x && system.mul(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        let inverse = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| system.mul(x, y) == identity && system.mul(y, x) == identity)
                    .ok_or(Error::MissingInverse(x))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup {
            system,
            identity,
            inverse,
        })
    }

    pub fn system(&self) -> &MulSystem {
        &self.system
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }

    /// Multiplicative order of `x`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Abelian subgroups, optionally only the inclusion-maximal ones, sorted by
    /// size descending and then lexicographically by member list.
    ///
    /// Subgroups are reached by repeatedly adjoining an element that
    /// centralizes an already-found abelian subgroup, starting from the
    /// trivial subgroup; every abelian subgroup arises along such a chain.
    pub fn abelian_subgroups(&self, maximal_only: bool, cap: usize) -> Result<Vec<ElementSet>> {
        let n = self.order();
        if n > cap || n > 64 {
            return Err(Error::SizeLimitExceeded {
                what: "group for subgroup enumeration".into(),
                size: n,
                cap: cap.min(64),
            });
        }
        let trivial: u64 = 1 << self.identity;
        let mut seen: HashSet<u64> = HashSet::from([trivial]);
        let mut queue = VecDeque::from([trivial]);
        while let Some(h) = queue.pop_front() {
            let members: Vec<usize> = bits(h).collect();
            for g in 0..n {
                if h & (1 << g) != 0 || !members.iter().all(|&m| self.commute(m, g)) {
                    continue;
                }
                let k = self.adjoin_central(h, &members, g);
                if seen.insert(k) {
                    queue.push_back(k);
                }
            }
        }
        let mut masks: Vec<u64> = seen.into_iter().collect();
        if maximal_only {
            let all = masks.clone();
            masks.retain(|&m| !all.iter().any(|&o| o != m && o & m == m));
        }
        let mut sets: Vec<ElementSet> = masks.into_iter().map(|m| bits(m).collect()).collect();
        sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.members().cmp(b.members())));
        Ok(sets)
    }

    /// `<H, g>` for `g` centralizing `H`: the union of cosets `H g^k`.
    fn adjoin_central(&self, h: u64, members: &[usize], g: usize) -> u64 {
        let mut result = h;
        let mut power = g;
        while h & (1 << power) == 0 {
            for &m in members {
                result |= 1 << self.mul(m, power);
            }
            power = self.mul(power, g);
        }
        result
    }

    pub fn max_abelian_subgroup_size(&self, cap: usize) -> Result<usize> {
        Ok(self
            .abelian_subgroups(true, cap)?
            .first()
            .map_or(1, ElementSet::len))
    }

    /// True when `set` contains the identity and is closed under products
    /// and inverses.
    pub fn is_subgroup(&self, set: &ElementSet) -> bool {
        set.contains(self.identity)
            && set.iter().all(|x| set.contains(self.inverse(x)))
            && set
                .iter()
                .all(|x| set.iter().all(|y| set.contains(self.mul(x, y))))
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask & (1u64 << i) != 0)
}
