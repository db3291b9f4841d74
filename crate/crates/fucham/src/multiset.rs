//! Fuzzy subsets and fuzzy multisets.
//!
//! A fuzzy subset maps elements to membership degrees; a fuzzy multiset
//! counts occurrences per `(element, degree)` pair. Both are kept in
//! canonical form: no zero-degree entries in subsets, no zero counts in
//! multisets, so structural equality coincides with semantic equality.

use std::collections::BTreeMap;

use crate::degree::Degree;

/// A finite-support fuzzy subset; elements absent from the map have degree 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FuzzySubset<E: Ord> {
    support: BTreeMap<E, Degree>,
}

impl<E: Ord + Clone> FuzzySubset<E> {
    pub fn new() -> Self {
        FuzzySubset {
            support: BTreeMap::new(),
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (E, Degree)>) -> Self {
        let mut set = FuzzySubset::new();
        for (e, d) in pairs {
            set.set(e, d);
        }
        set
    }

    /// Sets the membership degree of `e`; setting degree 0 removes the entry.
    pub fn set(&mut self, e: E, d: Degree) {
        if d.is_zero() {
            self.support.remove(&e);
        } else {
            self.support.insert(e, d);
        }
    }

    pub fn degree(&self, e: &E) -> Degree {
        self.support.get(e).copied().unwrap_or(Degree::ZERO)
    }

    pub fn support(&self) -> impl Iterator<Item = (&E, Degree)> {
        self.support.iter().map(|(e, d)| (e, *d))
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }
}

/// A fuzzy multiset: finite map from `(element, degree)` to a positive count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FuzzyMultiset<E: Ord> {
    entries: BTreeMap<(E, Degree), u64>,
}

impl<E: Ord + Clone> FuzzyMultiset<E> {
    pub fn new() -> Self {
        FuzzyMultiset {
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (E, Degree, u64)>) -> Self {
        let mut m = FuzzyMultiset::new();
        for (e, d, n) in entries {
            m.insert(e, d, n);
        }
        m
    }

    /// Adds `n` copies of `(e, d)`; inserting zero copies is a no-op.
    pub fn insert(&mut self, e: E, d: Degree, n: u64) {
        if n == 0 {
            return;
        }
        *self.entries.entry((e, d)).or_insert(0) += n;
    }

    /// Removes `n` copies of `(e, d)`. Returns false (and leaves the multiset
    /// unchanged) when fewer than `n` copies are present.
    pub fn remove(&mut self, e: &E, d: Degree, n: u64) -> bool {
        let key = (e.clone(), d);
        match self.entries.get_mut(&key) {
            Some(count) if *count > n => {
                *count -= n;
                true
            }
            Some(count) if *count == n => {
                self.entries.remove(&key);
                true
            }
            _ => false,
        }
    }

    pub fn count(&self, e: &E, d: Degree) -> u64 {
        self.entries.get(&(e.clone(), d)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total number of copies, with multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Number of distinct `(element, degree)` keys.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&E, Degree, u64)> {
        self.entries.iter().map(|((e, d), n)| (e, *d, *n))
    }

    /// Multiset sum: pointwise addition of counts per `(element, degree)` key.
    pub fn msum(&self, other: &FuzzyMultiset<E>) -> FuzzyMultiset<E> {
        let mut out = self.clone();
        for (e, d, n) in other.iter() {
            out.insert(e.clone(), d, n);
        }
        out
    }

    /// True when every key of `self` occurs in `other` with at least the same count.
    pub fn is_submultiset_of(&self, other: &FuzzyMultiset<E>) -> bool {
        self.iter().all(|(e, d, n)| other.count(e, d) >= n)
    }

    /// Pointwise subtraction; `None` when `other` is not a sub-multiset.
    pub fn checked_sub(&self, other: &FuzzyMultiset<E>) -> Option<FuzzyMultiset<E>> {
        if !other.is_submultiset_of(self) {
            return None;
        }
        let mut out = self.clone();
        for (e, d, n) in other.iter() {
            out.remove(e, d, n);
        }
        Some(out)
    }
}

/// Multiset sum of two fuzzy multisets.
pub fn msum<E: Ord + Clone>(m1: &FuzzyMultiset<E>, m2: &FuzzyMultiset<E>) -> FuzzyMultiset<E> {
    m1.msum(m2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Degree {
        s.parse().unwrap()
    }

    #[test]
    fn msum_adds_counts_pointwise() {
        let m1 = FuzzyMultiset::from_entries([("a", d("0.5"), 2)]);
        let m2 = FuzzyMultiset::from_entries([("a", d("0.5"), 1), ("b", d("0.7"), 1)]);
        let sum = msum(&m1, &m2);
        assert_eq!(sum.count(&"a", d("0.5")), 3);
        assert_eq!(sum.count(&"b", d("0.7")), 1);
        assert_eq!(sum.total(), 4);
    }

    #[test]
    fn msum_empty_is_identity() {
        let m = FuzzyMultiset::from_entries([("a", d("0.5"), 2), ("b", d("1"), 1)]);
        assert_eq!(msum(&m, &FuzzyMultiset::new()), m);
        assert_eq!(msum(&FuzzyMultiset::new(), &m), m);
    }

    #[test]
    fn distinct_degrees_are_distinct_keys() {
        let m1 = FuzzyMultiset::from_entries([("a", d("0.5"), 1)]);
        let m2 = FuzzyMultiset::from_entries([("a", d("0.6"), 1)]);
        let sum = msum(&m1, &m2);
        assert_eq!(sum.distinct(), 2);
        assert_eq!(sum.count(&"a", d("0.5")), 1);
        assert_eq!(sum.count(&"a", d("0.6")), 1);
    }

    #[test]
    fn removal_keeps_canonical_form() {
        let mut m = FuzzyMultiset::from_entries([("a", d("0.5"), 2)]);
        assert!(m.remove(&"a", d("0.5"), 2));
        assert!(m.is_empty());
        assert!(!m.remove(&"a", d("0.5"), 1));
    }

    #[test]
    fn checked_sub_requires_submultiset() {
        let m = FuzzyMultiset::from_entries([("a", d("0.5"), 2), ("b", d("1"), 1)]);
        let sub = FuzzyMultiset::from_entries([("a", d("0.5"), 1)]);
        let diff = m.checked_sub(&sub).unwrap();
        assert_eq!(diff.count(&"a", d("0.5")), 1);
        let too_many = FuzzyMultiset::from_entries([("a", d("0.5"), 3)]);
        assert!(m.checked_sub(&too_many).is_none());
    }

    #[test]
    fn subset_strips_zero_degrees() {
        let mut s = FuzzySubset::new();
        s.set("x", d("0.3"));
        s.set("x", Degree::ZERO);
        assert!(s.is_empty());
        assert_eq!(s.degree(&"x"), Degree::ZERO);
    }
}
