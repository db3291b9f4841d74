//! Finite groups and the fuzzy-subgroup test.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::degree::Degree;
use crate::multiset::FuzzySubset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("operation table is not closed over the element set")]
    NotClosed,
    #[error("operation table is not associative")]
    NotAssociative,
    #[error("identity element does not satisfy the identity laws")]
    BadIdentity,
    #[error("some element has no inverse")]
    MissingInverse,
    #[error("fuzzy subset mentions an element outside the group")]
    OutsideSupport,
}

/// A finite group given by its full operation table. The group laws are
/// checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup<E: Ord> {
    elements: BTreeSet<E>,
    table: BTreeMap<(E, E), E>,
    inverses: BTreeMap<E, E>,
    identity: E,
}

impl<E: Ord + Clone> FiniteGroup<E> {
    pub fn new(
        elements: impl IntoIterator<Item = E>,
        table: BTreeMap<(E, E), E>,
        identity: E,
    ) -> Result<FiniteGroup<E>, GroupError> {
        let elements: BTreeSet<E> = elements.into_iter().collect();
        if !elements.contains(&identity) {
            return Err(GroupError::BadIdentity);
        }
        for a in &elements {
            for b in &elements {
                match table.get(&(a.clone(), b.clone())) {
                    Some(c) if elements.contains(c) => {}
                    _ => return Err(GroupError::NotClosed),
                }
            }
        }
        let op = |a: &E, b: &E| table[&(a.clone(), b.clone())].clone();
        for a in &elements {
            if op(&identity, a) != *a || op(a, &identity) != *a {
                return Err(GroupError::BadIdentity);
            }
        }
        for a in &elements {
            for b in &elements {
                for c in &elements {
                    if op(&op(a, b), c) != op(a, &op(b, c)) {
                        return Err(GroupError::NotAssociative);
                    }
                }
            }
        }
        let mut inverses = BTreeMap::new();
        for a in &elements {
            let inv = elements
                .iter()
                .find(|b| op(a, b) == identity && op(b, a) == identity)
                .ok_or(GroupError::MissingInverse)?;
            inverses.insert(a.clone(), inv.clone());
        }
        Ok(FiniteGroup {
            elements,
            table,
            inverses,
            identity,
        })
    }

    pub fn elements(&self) -> &BTreeSet<E> {
        &self.elements
    }

    pub fn identity(&self) -> &E {
        &self.identity
    }

    pub fn op(&self, a: &E, b: &E) -> &E {
        &self.table[&(a.clone(), b.clone())]
    }

    pub fn inverse(&self, a: &E) -> &E {
        &self.inverses[a]
    }

    /// Rosenfeld's test: `A` is a fuzzy subgroup iff
    /// `min{A(a), A(b)} ≤ A(a ∗ b⁻¹)` for all `a, b`.
    pub fn is_fuzzy_subgroup(&self, a: &FuzzySubset<E>) -> Result<bool, GroupError> {
        if a.support().any(|(e, _)| !self.elements.contains(e)) {
            return Err(GroupError::OutsideSupport);
        }
        for x in &self.elements {
            for y in &self.elements {
                let lhs = a.degree(x).min(a.degree(y));
                let target = self.op(x, self.inverse(y));
                if lhs > a.degree(target) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl FiniteGroup<u64> {
    /// The cyclic group Z_n under addition modulo `n`.
    pub fn cyclic(n: u64) -> FiniteGroup<u64> {
        assert!(n > 0, "cyclic group needs at least one element");
        let mut table = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                table.insert((a, b), (a + b) % n);
            }
        }
        FiniteGroup::new(0..n, table, 0).expect("modular addition forms a group")
    }
}
