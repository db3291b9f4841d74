//! Line-oriented text formats for transition systems and relations.
//!
//! System files:
//! ```text
//! # comment
//! states: p0 p1 p2
//! trans: p0 -a@0.50-> p1
//! ```
//! Relation files hold one `left right degree` triple per line.

use std::collections::BTreeSet;

use crate::degree::Degree;
use crate::relation::FuzzyRelation;

use super::{Flts, FltsError, Transition};

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
    .trim()
}

fn err(line: usize, msg: impl Into<String>) -> FltsError {
    FltsError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses the `states:`/`trans:` format. The action set is the set of
/// actions mentioned by transitions.
pub fn parse_flts(text: &str) -> Result<Flts, FltsError> {
    let mut states: BTreeSet<String> = BTreeSet::new();
    let mut transitions: Vec<Transition> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("states:") {
            states.extend(rest.split_whitespace().map(str::to_string));
        } else if let Some(rest) = line.strip_prefix("trans:") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            let [from, arrow, to] = parts.as_slice() else {
                return Err(err(lineno, "expected `trans: SRC -ACTION@DEGREE-> DST`"));
            };
            let inner = arrow
                .strip_prefix('-')
                .and_then(|a| a.strip_suffix("->"))
                .ok_or_else(|| err(lineno, "malformed transition arrow"))?;
            let (action, degree) = inner
                .split_once('@')
                .ok_or_else(|| err(lineno, "transition needs an `@degree` annotation"))?;
            if action.is_empty() {
                return Err(err(lineno, "empty action name"));
            }
            let degree: Degree = degree
                .parse()
                .map_err(|e| err(lineno, format!("bad degree: {e}")))?;
            if !states.contains(*from) {
                return Err(err(lineno, format!("unknown state `{from}`")));
            }
            if !states.contains(*to) {
                return Err(err(lineno, format!("unknown state `{to}`")));
            }
            transitions.push(Transition {
                from: from.to_string(),
                action: action.to_string(),
                to: to.to_string(),
                degree,
            });
        } else {
            return Err(err(lineno, format!("unrecognized directive `{line}`")));
        }
    }
    let actions: BTreeSet<String> = transitions.iter().map(|t| t.action.clone()).collect();
    Flts::new(states, actions, transitions)
}

/// Parses one `left right degree` triple per line, validated against the two
/// given domains.
pub fn parse_relation(
    text: &str,
    left_domain: &BTreeSet<String>,
    right_domain: &BTreeSet<String>,
) -> Result<FuzzyRelation<String, String>, FltsError> {
    let mut rel = FuzzyRelation::new(left_domain.iter().cloned(), right_domain.iter().cloned());
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [a, b, degree] = parts.as_slice() else {
            return Err(err(lineno, "expected `left right degree`"));
        };
        let degree: Degree = degree
            .parse()
            .map_err(|e| err(lineno, format!("bad degree: {e}")))?;
        rel.set(a.to_string(), b.to_string(), degree)
            .map_err(|_| err(lineno, format!("pair ({a}, {b}) is outside the domains")))?;
    }
    Ok(rel)
}

/// Canonical text for a system, re-parseable by [`parse_flts`].
pub fn format_flts(f: &Flts) -> String {
    let mut out = String::from("states:");
    for s in f.states() {
        out.push(' ');
        out.push_str(s);
    }
    out.push('\n');
    for t in f.transitions() {
        out.push_str(&format!(
            "trans: {} -{}@{}-> {}\n",
            t.from, t.action, t.degree, t.to
        ));
    }
    out
}
