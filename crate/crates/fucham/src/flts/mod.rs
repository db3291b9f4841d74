//! Fuzzy labeled transition systems and strong fuzzy (bi)simulation checking.
//!
//! A candidate relation relates states of a first system to states of a
//! second one. The checker's matching direction is fixed: every move of the
//! FIRST system must be matched by the SECOND system (the second strongly
//! fuzzily simulates the first). Pairs absent from the relation carry degree
//! 0 and impose no obligations.

mod search;
mod text;
mod xmachine;

pub use search::{bisimilar_at, greatest_bisimulation, greatest_simulation};
pub use text::{parse_flts, parse_relation};
pub use xmachine::{left_mult_inverse, to_fuzzy_x_machine, InverseLeftMul, XEdge, XMachine};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::degree::Degree;
use crate::relation::FuzzyRelation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FltsError {
    #[error("transition `{0} -{1}-> {2}` refers to an unknown state")]
    UnknownState(String, String, String),
    #[error("transition uses action `{0}` outside the declared action set")]
    UnknownAction(String),
    #[error("duplicate transition triple `{0} -{1}-> {2}`")]
    DuplicateTransition(String, String, String),
    #[error("state `{0}` is not part of the system")]
    NoSuchState(String),
    #[error("path is empty")]
    EmptyPath,
    #[error("path is not chained at step {0}")]
    BrokenChain(usize),
    #[error("path step {0} is not a transition of the system")]
    NotATransition(usize),
    #[error("candidate relation domains do not match the systems' state sets")]
    DomainMismatch,
    #[error("initial or final states are not a subset of the state set")]
    BadStateSubset,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// One degree-weighted labeled transition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Transition {
    pub from: String,
    pub action: String,
    pub to: String,
    pub degree: Degree,
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -{}@{}-> {}",
            self.from, self.action, self.degree, self.to
        )
    }
}

/// A fuzzy labeled transition system over finite state and action sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flts {
    states: BTreeSet<String>,
    actions: BTreeSet<String>,
    transitions: Vec<Transition>,
}

impl Flts {
    /// Validates membership of every endpoint/action and rejects duplicate
    /// `(source, action, target)` triples.
    pub fn new(
        states: impl IntoIterator<Item = String>,
        actions: impl IntoIterator<Item = String>,
        transitions: Vec<Transition>,
    ) -> Result<Flts, FltsError> {
        let states: BTreeSet<String> = states.into_iter().collect();
        let actions: BTreeSet<String> = actions.into_iter().collect();
        let mut seen = BTreeSet::new();
        for t in &transitions {
            if !states.contains(&t.from) || !states.contains(&t.to) {
                return Err(FltsError::UnknownState(
                    t.from.clone(),
                    t.action.clone(),
                    t.to.clone(),
                ));
            }
            if !actions.contains(&t.action) {
                return Err(FltsError::UnknownAction(t.action.clone()));
            }
            if !seen.insert((t.from.clone(), t.action.clone(), t.to.clone())) {
                return Err(FltsError::DuplicateTransition(
                    t.from.clone(),
                    t.action.clone(),
                    t.to.clone(),
                ));
            }
        }
        let mut transitions = transitions;
        transitions.sort();
        Ok(Flts {
            states,
            actions,
            transitions,
        })
    }

    pub fn states(&self) -> &BTreeSet<String> {
        &self.states
    }

    pub fn actions(&self) -> &BTreeSet<String> {
        &self.actions
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn outgoing<'a>(&'a self, state: &'a str) -> impl Iterator<Item = &'a Transition> {
        self.transitions.iter().filter(move |t| t.from == state)
    }

    /// All transition degrees occurring in the system.
    pub fn degrees(&self) -> BTreeSet<Degree> {
        self.transitions.iter().map(|t| t.degree).collect()
    }

    /// Plausibility degree of a derivative reached through `path`: the
    /// minimum of the chained transitions' degrees.
    pub fn derivative_degree(&self, path: &[(&str, &str, &str)]) -> Result<Degree, FltsError> {
        if path.is_empty() {
            return Err(FltsError::EmptyPath);
        }
        let mut degree = Degree::ONE;
        for (i, (from, action, to)) in path.iter().enumerate() {
            if i > 0 && path[i - 1].2 != *from {
                return Err(FltsError::BrokenChain(i));
            }
            let t = self
                .transitions
                .iter()
                .find(|t| t.from == *from && t.action == *action && t.to == *to)
                .ok_or(FltsError::NotATransition(i))?;
            degree = degree.min(t.degree);
        }
        Ok(degree)
    }
}

/// A candidate simulation: a fuzzy relation between two state sets plus the
/// simulation degree `s` above which pairs are checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSimulation {
    pub relation: FuzzyRelation<String, String>,
    pub threshold: Degree,
}

impl CandidateSimulation {
    pub fn new(relation: FuzzyRelation<String, String>, threshold: Degree) -> Self {
        CandidateSimulation {
            relation,
            threshold,
        }
    }

    /// The same candidate read in the opposite direction.
    pub fn inverse(&self) -> CandidateSimulation {
        CandidateSimulation {
            relation: self.relation.inverse(),
            threshold: self.threshold,
        }
    }
}

/// Why a checked pair failed on one of its transitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationReason {
    /// The second state has no transition with the required action.
    NoMatchingAction,
    /// Matching-action transitions exist but none has degree ≥ the move's.
    DegreeTooLow,
    /// Degree-adequate matches exist but no successor pair is related at
    /// least as strongly as the checked pair.
    SuccessorRelationTooLow,
}

impl fmt::Display for ViolationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationReason::NoMatchingAction => "no-matching-action",
            ViolationReason::DegreeTooLow => "degree-too-low",
            ViolationReason::SuccessorRelationTooLow => "successor-relation-too-low",
        };
        f.write_str(s)
    }
}

/// Which half of a bisimulation check a violation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Backward,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

/// One unmatched transition of a checked pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub direction: Direction,
    /// The pair, always oriented as (first-system state, second-system state).
    pub pair: (String, String),
    /// The offending transition (of the first system for forward violations,
    /// of the second system for backward ones).
    pub transition: Transition,
    pub reason: ViolationReason,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "violation[{}]: pair=({}, {}) via {}: {}",
            self.direction, self.pair.0, self.pair.1, self.transition, self.reason
        )
    }
}

/// Outcome of a (bi)simulation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

/// Orientation note printed at the top of every report.
pub const CHECK_ORIENTATION: &str =
    "orientation: every move of the first system must be matched by the second system";

impl CheckReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{CHECK_ORIENTATION}")?;
        writeln!(f, "holds: {}", self.holds())?;
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

fn check_domains(a: &Flts, b: &Flts, cand: &CandidateSimulation) -> Result<(), FltsError> {
    if cand.relation.left_domain() != a.states() || cand.relation.right_domain() != b.states() {
        return Err(FltsError::DomainMismatch);
    }
    Ok(())
}

/// Collects the unmatched transitions of one checked pair `(p, q)` at
/// relation value `v`: every `p`-move must be matched by a `q`-move with the
/// same action, at least the same degree, and successors related at ≥ `v`.
fn pair_violations(
    a: &Flts,
    b: &Flts,
    rel: &FuzzyRelation<String, String>,
    p: &str,
    q: &str,
    v: Degree,
    direction: Direction,
    out: &mut Vec<Violation>,
) {
    for t in a.outgoing(p) {
        let mut best_reason = ViolationReason::NoMatchingAction;
        let mut matched = false;
        for u in b.outgoing(q) {
            if u.action != t.action {
                continue;
            }
            best_reason = best_reason.max(ViolationReason::DegreeTooLow);
            if u.degree < t.degree {
                continue;
            }
            best_reason = best_reason.max(ViolationReason::SuccessorRelationTooLow);
            if rel.degree(&t.to.to_string(), &u.to.to_string()) >= v {
                matched = true;
                break;
            }
        }
        if !matched {
            let pair = match direction {
                Direction::Forward => (p.to_string(), q.to_string()),
                Direction::Backward => (q.to_string(), p.to_string()),
            };
            out.push(Violation {
                direction,
                pair,
                transition: t.clone(),
                reason: best_reason,
            });
        }
    }
}

fn simulation_violations(
    a: &Flts,
    b: &Flts,
    cand: &CandidateSimulation,
    direction: Direction,
) -> Vec<Violation> {
    let mut out = Vec::new();
    for (p, q, v) in cand.relation.pairs() {
        if v < cand.threshold {
            continue;
        }
        pair_violations(a, b, &cand.relation, p, q, v, direction, &mut out);
    }
    out.sort();
    out
}

/// Checks whether `cand` is a strong fuzzy simulation: for every related pair
/// `(p, q)` at degree ≥ the threshold, each transition of `p` in `a` is
/// matched by a transition of `q` in `b`.
pub fn check_strong_fuzzy_simulation(
    a: &Flts,
    b: &Flts,
    cand: &CandidateSimulation,
) -> Result<CheckReport, FltsError> {
    check_domains(a, b, cand)?;
    Ok(CheckReport {
        violations: simulation_violations(a, b, cand, Direction::Forward),
    })
}

/// Checks both `cand` and its inverse; violations carry the direction they
/// were found in, with pairs reported in `(a-state, b-state)` orientation.
pub fn check_strong_fuzzy_bisimulation(
    a: &Flts,
    b: &Flts,
    cand: &CandidateSimulation,
) -> Result<CheckReport, FltsError> {
    check_domains(a, b, cand)?;
    let mut violations = simulation_violations(a, b, cand, Direction::Forward);
    violations.extend(simulation_violations(b, a, &cand.inverse(), Direction::Backward));
    violations.sort();
    Ok(CheckReport { violations })
}
