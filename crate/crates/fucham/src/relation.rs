//! Fuzzy binary relations over declared finite domains.
//!
//! A relation stores only pairs with nonzero degree (canonical form); pairs
//! absent from the graph have degree 0. Composition is max–min, union is
//! pointwise max.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::degree::Degree;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationError {
    #[error("pair refers to an element outside the declared domains")]
    OutOfDomain,
    #[error("relation domains do not match")]
    DomainMismatch,
}

/// A fuzzy subset of `A × B` with explicit finite domains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyRelation<A: Ord, B: Ord> {
    left: BTreeSet<A>,
    right: BTreeSet<B>,
    graph: BTreeMap<(A, B), Degree>,
}

impl<A: Ord + Clone, B: Ord + Clone> FuzzyRelation<A, B> {
    pub fn new(left: impl IntoIterator<Item = A>, right: impl IntoIterator<Item = B>) -> Self {
        FuzzyRelation {
            left: left.into_iter().collect(),
            right: right.into_iter().collect(),
            graph: BTreeMap::new(),
        }
    }

    /// Sets the degree of `(a, b)`; degree 0 removes the pair.
    pub fn set(&mut self, a: A, b: B, d: Degree) -> Result<(), RelationError> {
        if !self.left.contains(&a) || !self.right.contains(&b) {
            return Err(RelationError::OutOfDomain);
        }
        if d.is_zero() {
            self.graph.remove(&(a, b));
        } else {
            self.graph.insert((a, b), d);
        }
        Ok(())
    }

    pub fn degree(&self, a: &A, b: &B) -> Degree {
        self.graph
            .get(&(a.clone(), b.clone()))
            .copied()
            .unwrap_or(Degree::ZERO)
    }

    pub fn left_domain(&self) -> &BTreeSet<A> {
        &self.left
    }

    pub fn right_domain(&self) -> &BTreeSet<B> {
        &self.right
    }

    /// Pairs with nonzero degree, in domain order.
    pub fn pairs(&self) -> impl Iterator<Item = (&A, &B, Degree)> {
        self.graph.iter().map(|((a, b), d)| (a, b, *d))
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    /// The converse relation: `result(b, a) = self(a, b)`.
    pub fn inverse(&self) -> FuzzyRelation<B, A> {
        let mut out = FuzzyRelation::new(self.right.iter().cloned(), self.left.iter().cloned());
        for ((a, b), d) in &self.graph {
            out.graph.insert((b.clone(), a.clone()), *d);
        }
        out
    }

    /// Max–min composition; requires `self`'s right domain to equal `other`'s
    /// left domain.
    pub fn compose<C: Ord + Clone>(
        &self,
        other: &FuzzyRelation<B, C>,
    ) -> Result<FuzzyRelation<A, C>, RelationError> {
        if self.right != other.left {
            return Err(RelationError::DomainMismatch);
        }
        let mut out = FuzzyRelation::new(self.left.iter().cloned(), other.right.iter().cloned());
        for ((a, b), d1) in &self.graph {
            for ((b2, c), d2) in &other.graph {
                if b != b2 {
                    continue;
                }
                let through = (*d1).min(*d2);
                let key = (a.clone(), c.clone());
                let cur = out.graph.get(&key).copied().unwrap_or(Degree::ZERO);
                if through > cur && !through.is_zero() {
                    out.graph.insert(key, through);
                }
            }
        }
        Ok(out)
    }

    /// Pointwise-max union; requires matching domains.
    pub fn union(&self, other: &FuzzyRelation<A, B>) -> Result<FuzzyRelation<A, B>, RelationError> {
        if self.left != other.left || self.right != other.right {
            return Err(RelationError::DomainMismatch);
        }
        let mut out = self.clone();
        for ((a, b), d) in &other.graph {
            let cur = out.degree(a, b);
            if *d > cur {
                out.graph.insert((a.clone(), b.clone()), *d);
            }
        }
        Ok(out)
    }
}

impl<A: Ord + Clone> FuzzyRelation<A, A> {
    /// The identity relation: degree 1 on the diagonal, 0 elsewhere.
    pub fn identity(domain: impl IntoIterator<Item = A>) -> Self {
        let dom: BTreeSet<A> = domain.into_iter().collect();
        let mut rel = FuzzyRelation::new(dom.iter().cloned(), dom.iter().cloned());
        for a in &dom {
            rel.graph.insert((a.clone(), a.clone()), Degree::ONE);
        }
        rel
    }
}

/// Identity relation over `domain`.
pub fn rel_identity<A: Ord + Clone>(domain: impl IntoIterator<Item = A>) -> FuzzyRelation<A, A> {
    FuzzyRelation::identity(domain)
}

impl<A: Ord + fmt::Display, B: Ord + fmt::Display> fmt::Display for FuzzyRelation<A, B> {
    /// One `left right degree` line per nonzero pair.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((a, b), d) in &self.graph {
            writeln!(f, "{a} {b} {d}")?;
        }
        Ok(())
    }
}
