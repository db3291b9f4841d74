//! Greatest-simulation search by downward refinement on a finite degree
//! lattice.
//!
//! All definitional conditions compare degrees against transition degrees,
//! the threshold, 0 and 1, so restricting candidate values to that lattice
//! loses no passing relations. Refinement starts from the all-ones relation
//! and only ever lowers values, so it terminates.

use std::collections::BTreeSet;

use crate::degree::Degree;
use crate::relation::FuzzyRelation;

use super::{Flts, FltsError};

fn lattice(a: &Flts, b: &Flts, extra: Degree) -> Vec<Degree> {
    let mut set: BTreeSet<Degree> = a.degrees();
    set.extend(b.degrees());
    set.insert(Degree::ZERO);
    set.insert(Degree::ONE);
    set.insert(extra);
    set.into_iter().collect()
}

struct Pairs<'a> {
    a_states: Vec<&'a str>,
    b_states: Vec<&'a str>,
    values: Vec<Degree>,
}

impl<'a> Pairs<'a> {
    fn new(a: &'a Flts, b: &'a Flts) -> Pairs<'a> {
        let a_states: Vec<&str> = a.states().iter().map(|s| s.as_str()).collect();
        let b_states: Vec<&str> = b.states().iter().map(|s| s.as_str()).collect();
        let values = vec![Degree::ONE; a_states.len() * b_states.len()];
        Pairs {
            a_states,
            b_states,
            values,
        }
    }

    fn idx(&self, p: &str, q: &str) -> usize {
        let i = self.a_states.binary_search(&p).expect("state of a");
        let j = self.b_states.binary_search(&q).expect("state of b");
        i * self.b_states.len() + j
    }

    fn get(&self, p: &str, q: &str) -> Degree {
        self.values[self.idx(p, q)]
    }

    fn into_relation(self, a: &Flts, b: &Flts) -> FuzzyRelation<String, String> {
        let mut rel = FuzzyRelation::new(a.states().iter().cloned(), b.states().iter().cloned());
        for (i, p) in self.a_states.iter().enumerate() {
            for (j, q) in self.b_states.iter().enumerate() {
                let d = self.values[i * self.b_states.len() + j];
                if !d.is_zero() {
                    rel.set(p.to_string(), q.to_string(), d).unwrap();
                }
            }
        }
        rel
    }
}

/// Does the pair `(p, q)` satisfy the one-directional simulation condition at
/// value `v`, given the current pair values?
fn condition_holds(a: &Flts, b: &Flts, pairs: &Pairs<'_>, p: &str, q: &str, v: Degree) -> bool {
    a.outgoing(p).all(|t| {
        b.outgoing(q).any(|u| {
            u.action == t.action && u.degree >= t.degree && pairs.get(&t.to, &u.to) >= v
        })
    })
}

/// A pair value is admissible when the pair is exempt (absent, or below the
/// threshold) or its simulation condition holds at that value.
fn admissible(
    a: &Flts,
    b: &Flts,
    pairs: &Pairs<'_>,
    p: &str,
    q: &str,
    v: Degree,
    s: Degree,
    bisim: bool,
) -> bool {
    if v.is_zero() || v < s {
        return true;
    }
    if !condition_holds(a, b, pairs, p, q, v) {
        return false;
    }
    if bisim {
        // Backward direction reuses the same value table, with the roles of
        // the systems swapped.
        b.outgoing(q).all(|u| {
            a.outgoing(p).any(|t| {
                t.action == u.action && t.degree >= u.degree && pairs.get(&t.to, &u.to) >= v
            })
        })
    } else {
        true
    }
}

fn refine(a: &Flts, b: &Flts, s: Degree, bisim: bool) -> FuzzyRelation<String, String> {
    let lat = lattice(a, b, s);
    let mut pairs = Pairs::new(a, b);
    loop {
        let mut changed = false;
        for i in 0..pairs.a_states.len() {
            for j in 0..pairs.b_states.len() {
                let p = pairs.a_states[i];
                let q = pairs.b_states[j];
                let current = pairs.values[i * pairs.b_states.len() + j];
                if admissible(a, b, &pairs, p, q, current, s, bisim) {
                    continue;
                }
                // Largest surviving lattice value strictly below the current
                // one; 0 is always admissible (the pair leaves the relation).
                let next = lat
                    .iter()
                    .rev()
                    .copied()
                    .filter(|v| *v < current)
                    .find(|v| admissible(a, b, &pairs, p, q, *v, s, bisim))
                    .unwrap_or(Degree::ZERO);
                pairs.values[i * pairs.b_states.len() + j] = next;
                changed = true;
            }
        }
        if !changed {
            return pairs.into_relation(a, b);
        }
    }
}

/// The pointwise-greatest relation over the systems' degree lattice that
/// passes the strong fuzzy simulation check at threshold `s`.
pub fn greatest_simulation(a: &Flts, b: &Flts, s: Degree) -> FuzzyRelation<String, String> {
    refine(a, b, s, false)
}

/// The pointwise-greatest relation passing the bisimulation check (both
/// directions) at threshold `s`.
pub fn greatest_bisimulation(a: &Flts, b: &Flts, s: Degree) -> FuzzyRelation<String, String> {
    refine(a, b, s, true)
}

/// Are `p` and `q` strongly fuzzily bisimilar with degree `d`?
///
/// True when some lattice threshold `s ≤ d` admits a strong fuzzy
/// bisimulation whose relation contains `(p, q)` at degree ≥ `s` (and > 0;
/// a vacuously absent pair does not witness bisimilarity).
pub fn bisimilar_at(a: &Flts, b: &Flts, p: &str, q: &str, d: Degree) -> Result<bool, FltsError> {
    if !a.states().contains(p) {
        return Err(FltsError::NoSuchState(p.to_string()));
    }
    if !b.states().contains(q) {
        return Err(FltsError::NoSuchState(q.to_string()));
    }
    let thresholds: Vec<Degree> = lattice(a, b, d).into_iter().filter(|s| *s <= d).collect();
    for s in thresholds {
        let witness = greatest_bisimulation(a, b, s);
        let v = witness.degree(&p.to_string(), &q.to_string());
        if v >= s && !v.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{
        check_strong_fuzzy_simulation, parse_flts, CandidateSimulation,
    };
    use super::*;

    fn d(s: &str) -> Degree {
        s.parse().unwrap()
    }

    #[test]
    fn output_always_passes_the_check() {
        let a = figure1_right();
        let b = figure1_left();
        for s in ["0", "0.4", "0.5", "0.6", "1"] {
            let rel = greatest_simulation(&a, &b, d(s));
            let cand = CandidateSimulation::new(rel, d(s));
            assert!(
                check_strong_fuzzy_simulation(&a, &b, &cand).unwrap().holds(),
                "threshold {s}"
            );
        }
    }

    #[test]
    fn identical_self_loop_systems_relate_fully() {
        let a = parse_flts("states: p0\ntrans: p0 -a@0.7-> p0\n").unwrap();
        let b = parse_flts("states: q0\ntrans: q0 -a@0.7-> q0\n").unwrap();
        let rel = greatest_simulation(&a, &b, d("0.5"));
        assert_eq!(rel.degree(&"p0".into(), &"q0".into()), Degree::ONE);
    }

    #[test]
    fn moving_state_drops_below_threshold_against_inert_system() {
        let a = parse_flts("states: p0 p1\ntrans: p0 -a@0.7-> p1\n").unwrap();
        let b = parse_flts("states: q0\n").unwrap();
        let rel = greatest_simulation(&a, &b, d("0.5"));
        assert!(rel.degree(&"p0".into(), &"q0".into()) < d("0.5"));
        assert_eq!(rel.degree(&"p1".into(), &"q0".into()), Degree::ONE);
    }

    #[test]
    fn inert_first_system_relates_everything() {
        let a = parse_flts("states: p0 p1\n").unwrap();
        let b = parse_flts("states: q0 q1\ntrans: q0 -a@0.5-> q1\n").unwrap();
        let rel = greatest_simulation(&a, &b, d("0.5"));
        for p in a.states() {
            for q in b.states() {
                assert_eq!(rel.degree(p, q), Degree::ONE);
            }
        }
    }

    #[test]
    fn bisimilar_at_identity() {
        let f = figure1_left();
        for p in f.states() {
            for deg in ["0", "0.3", "1"] {
                assert_eq!(bisimilar_at(&f, &f, p, p, d(deg)), Ok(true));
            }
        }
    }

    #[test]
    fn bisimilar_at_rejects_move_against_inert() {
        let a = parse_flts("states: p0 p1\ntrans: p0 -a@1-> p1\n").unwrap();
        let b = parse_flts("states: q0\n").unwrap();
        assert_eq!(bisimilar_at(&a, &b, "p0", "q0", Degree::ONE), Ok(false));
        assert_eq!(bisimilar_at(&a, &b, "p1", "q0", Degree::ONE), Ok(true));
    }

    #[test]
    fn bisimilar_at_is_symmetric() {
        let a = figure1_right();
        let b = figure1_left();
        for p in a.states() {
            for q in b.states() {
                for deg in ["0", "0.5", "1"] {
                    assert_eq!(
                        bisimilar_at(&a, &b, p, q, d(deg)),
                        bisimilar_at(&b, &a, q, p, d(deg)),
                        "pair ({p}, {q}) at {deg}"
                    );
                }
            }
        }
    }

    #[test]
    fn bisimilar_at_unknown_state_errors() {
        let f = figure1_left();
        assert!(bisimilar_at(&f, &f, "nope", "p0", Degree::ONE).is_err());
    }
}
