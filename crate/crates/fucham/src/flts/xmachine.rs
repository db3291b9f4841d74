//! Fuzzy automata and their X-machine relabeling.
//!
//! The relabeling replaces every edge label α by the inverse left
//! multiplication L_α⁻¹ over the free monoid of action words; states, degrees
//! and initial/final sets are preserved. Support is representational only.

use std::collections::BTreeSet;
use std::fmt;

use crate::degree::Degree;

use super::{Flts, FltsError};

/// `L_a⁻¹(b) = x` iff `b = a · x` (word concatenation); undefined otherwise.
pub fn left_mult_inverse(a: &str, b: &str) -> Option<String> {
    b.strip_prefix(a).map(str::to_string)
}

/// An FLTS with initial and final state sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyAutomaton {
    pub lts: Flts,
    pub initial: BTreeSet<String>,
    pub finals: BTreeSet<String>,
}

impl FuzzyAutomaton {
    pub fn new(
        lts: Flts,
        initial: impl IntoIterator<Item = String>,
        finals: impl IntoIterator<Item = String>,
    ) -> Result<FuzzyAutomaton, FltsError> {
        let initial: BTreeSet<String> = initial.into_iter().collect();
        let finals: BTreeSet<String> = finals.into_iter().collect();
        if !initial.is_subset(lts.states()) || !finals.is_subset(lts.states()) {
            return Err(FltsError::BadStateSubset);
        }
        Ok(FuzzyAutomaton {
            lts,
            initial,
            finals,
        })
    }
}

/// The partial function L_α⁻¹, identified by its action α.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct InverseLeftMul(pub String);

impl InverseLeftMul {
    pub fn apply(&self, word: &str) -> Option<String> {
        left_mult_inverse(&self.0, word)
    }
}

impl fmt::Display for InverseLeftMul {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L_{}^-1", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct XEdge {
    pub from: String,
    pub label: InverseLeftMul,
    pub to: String,
    pub degree: Degree,
}

/// An automaton over the alphabet Φ = {L_α⁻¹ | α ∈ Σ}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XMachine {
    pub states: BTreeSet<String>,
    pub initial: BTreeSet<String>,
    pub finals: BTreeSet<String>,
    pub edges: Vec<XEdge>,
    /// The machine type Φ.
    pub phi: BTreeSet<InverseLeftMul>,
}

/// Edge-for-edge relabeling of an automaton into a fuzzy X-machine.
pub fn to_fuzzy_x_machine(a: &FuzzyAutomaton) -> XMachine {
    let edges = a
        .lts
        .transitions()
        .iter()
        .map(|t| XEdge {
            from: t.from.clone(),
            label: InverseLeftMul(t.action.clone()),
            to: t.to.clone(),
            degree: t.degree,
        })
        .collect();
    XMachine {
        states: a.lts.states().clone(),
        initial: a.initial.clone(),
        finals: a.finals.clone(),
        edges,
        phi: a
            .lts
            .actions()
            .iter()
            .map(|alpha| InverseLeftMul(alpha.clone()))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_flts;
    use super::*;

    #[test]
    fn inverse_left_multiplication() {
        assert_eq!(left_mult_inverse("ab", "abc"), Some("c".to_string()));
        assert_eq!(left_mult_inverse("", "word"), Some("word".to_string()));
        assert_eq!(left_mult_inverse("b", "abc"), None);
        assert_eq!(left_mult_inverse("abc", "abc"), Some(String::new()));
    }

    #[test]
    fn relabeling_preserves_shape() {
        let lts = parse_flts("states: p q\ntrans: p -a@0.5-> q\n").unwrap();
        let auto =
            FuzzyAutomaton::new(lts, ["p".to_string()], ["q".to_string()]).unwrap();
        let m = to_fuzzy_x_machine(&auto);
        assert_eq!(m.edges.len(), 1);
        assert_eq!(m.edges[0].label, InverseLeftMul("a".to_string()));
        assert_eq!(m.edges[0].degree, "0.5".parse().unwrap());
        assert_eq!(m.phi.len(), 1);
        assert_eq!(m.initial, auto.initial);
        assert_eq!(m.finals, auto.finals);
    }

    #[test]
    fn empty_automaton_gives_empty_machine() {
        let lts = parse_flts("states: p\n").unwrap();
        let auto = FuzzyAutomaton::new(lts, [], []).unwrap();
        let m = to_fuzzy_x_machine(&auto);
        assert!(m.edges.is_empty());
        assert!(m.phi.is_empty());
    }

    #[test]
    fn edge_count_is_preserved() {
        let lts = parse_flts(
            "states: s0 s1 s2\n\
             trans: s0 -a@0.1-> s1\n\
             trans: s0 -b@0.2-> s2\n\
             trans: s1 -a@0.3-> s2\n\
             trans: s1 -c@0.4-> s0\n\
             trans: s2 -b@0.5-> s0\n",
        )
        .unwrap();
        let auto = FuzzyAutomaton::new(lts.clone(), ["s0".to_string()], []).unwrap();
        let m = to_fuzzy_x_machine(&auto);
        assert_eq!(m.edges.len(), lts.transitions().len());
        assert_eq!(m.phi.len(), lts.actions().len());
    }

    #[test]
    fn automaton_validates_subsets() {
        let lts = parse_flts("states: p\n").unwrap();
        assert!(FuzzyAutomaton::new(lts, ["zzz".to_string()], []).is_err());
    }
}
