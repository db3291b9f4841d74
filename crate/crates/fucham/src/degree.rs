//! Exact membership/feasibility degrees on `[0, 1]`.
//!
//! Every degree is stored as an integer count of millionths, so comparison,
//! min/max, addition, subtraction and absolute difference are exact. Text
//! input with more than six fractional digits is rejected rather than
//! rounded.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Number of representable steps per unit: degrees have resolution 10⁻⁶.
pub const DEGREE_SCALE: u32 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DegreeError {
    #[error("degree `{0}` is not a decimal in [0, 1]")]
    Invalid(String),
    #[error("degree `{0}` is outside [0, 1]")]
    OutOfRange(String),
    #[error("degree `{0}` has more than 6 fractional digits")]
    TooPrecise(String),
}

/// A membership degree in `[0, 1]`, exact to a millionth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(u32);

impl Degree {
    pub const ZERO: Degree = Degree(0);
    pub const ONE: Degree = Degree(DEGREE_SCALE);

    /// Builds a degree from a count of millionths.
    pub fn from_micros(micros: u32) -> Result<Degree, DegreeError> {
        if micros > DEGREE_SCALE {
            return Err(DegreeError::OutOfRange(format!("{micros}e-6")));
        }
        Ok(Degree(micros))
    }

    /// The underlying count of millionths.
    pub fn micros(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn min(self, other: Degree) -> Degree {
        Degree(self.0.min(other.0))
    }

    pub fn max(self, other: Degree) -> Degree {
        Degree(self.0.max(other.0))
    }

    /// Exact addition; errors when the sum leaves `[0, 1]`.
    pub fn checked_add(self, other: Degree) -> Result<Degree, DegreeError> {
        let sum = self.0 + other.0;
        if sum > DEGREE_SCALE {
            return Err(DegreeError::OutOfRange(format!("{self} + {other}")));
        }
        Ok(Degree(sum))
    }

    /// `self − other`, clamped at zero.
    pub fn saturating_sub(self, other: Degree) -> Degree {
        Degree(self.0.saturating_sub(other.0))
    }

    /// `|self − other|`, exact.
    pub fn abs_diff(self, other: Degree) -> Degree {
        Degree(self.0.abs_diff(other.0))
    }

    /// `1 − self`.
    pub fn complement(self) -> Degree {
        Degree(DEGREE_SCALE - self.0)
    }

    /// Similarity of two degree-carrying processes: `1 − |d1 − d2|`.
    pub fn similarity(self, other: Degree) -> Degree {
        self.abs_diff(other).complement()
    }
}

/// Similarity degree of two processes given their degrees: `1 − |d1 − d2|`.
pub fn process_similarity(d1: Degree, d2: Degree) -> Degree {
    d1.similarity(d2)
}

impl FromStr for Degree {
    type Err = DegreeError;

    fn from_str(s: &str) -> Result<Degree, DegreeError> {
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int_part.is_empty()
            || !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
            || (s.contains('.') && frac_part.is_empty())
        {
            return Err(DegreeError::Invalid(s.to_string()));
        }
        if frac_part.len() > 6 {
            return Err(DegreeError::TooPrecise(s.to_string()));
        }
        let int: u32 = int_part
            .parse()
            .map_err(|_| DegreeError::Invalid(s.to_string()))?;
        let mut frac: u32 = 0;
        for b in frac_part.bytes() {
            frac = frac * 10 + u32::from(b - b'0');
        }
        frac *= 10u32.pow(6 - frac_part.len() as u32);
        let micros = int
            .checked_mul(DEGREE_SCALE)
            .and_then(|v| v.checked_add(frac))
            .ok_or_else(|| DegreeError::OutOfRange(s.to_string()))?;
        if micros > DEGREE_SCALE {
            return Err(DegreeError::OutOfRange(s.to_string()));
        }
        Ok(Degree(micros))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let int = self.0 / DEGREE_SCALE;
        let frac = self.0 % DEGREE_SCALE;
        if frac == 0 {
            return write!(f, "{int}");
        }
        let digits = format!("{frac:06}");
        write!(f, "{int}.{}", digits.trim_end_matches('0'))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Degree {
        s.parse().unwrap()
    }

    #[test]
    fn parses_and_prints_canonically() {
        assert_eq!(d("0.75").micros(), 750_000);
        assert_eq!(d("1").micros(), 1_000_000);
        assert_eq!(d("1.0"), Degree::ONE);
        assert_eq!(d("0.000001").micros(), 1);
        assert_eq!(d("0.50").to_string(), "0.5");
        assert_eq!(d("1.000000").to_string(), "1");
        assert_eq!(d("0").to_string(), "0");
        assert_eq!(d("0.05").to_string(), "0.05");
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            "1.5".parse::<Degree>(),
            Err(DegreeError::OutOfRange(_))
        ));
        assert!(matches!(
            "0.1234567".parse::<Degree>(),
            Err(DegreeError::TooPrecise(_))
        ));
        assert!("".parse::<Degree>().is_err());
        assert!(".".parse::<Degree>().is_err());
        assert!(".5".parse::<Degree>().is_err());
        assert!("1.".parse::<Degree>().is_err());
        assert!("0.5x".parse::<Degree>().is_err());
        assert!("-0.5".parse::<Degree>().is_err());
        assert!(Degree::from_micros(1_000_001).is_err());
    }

    #[test]
    fn similarity_matches_definition() {
        assert_eq!(process_similarity(d("0.6"), d("0.6")), Degree::ONE);
        assert_eq!(process_similarity(Degree::ONE, Degree::ZERO), Degree::ZERO);
        assert_eq!(process_similarity(d("0.75"), d("0.5")), d("0.75"));
    }

    #[test]
    fn arithmetic_is_exact() {
        assert_eq!(d("0.1").checked_add(d("0.2")).unwrap(), d("0.3"));
        assert!(d("0.7").checked_add(d("0.7")).is_err());
        assert_eq!(d("0.2").saturating_sub(d("0.5")), Degree::ZERO);
        assert_eq!(d("0.5").saturating_sub(d("0.2")), d("0.3"));
        assert_eq!(d("0.9").abs_diff(d("0.2")), d("0.7"));
        assert_eq!(d("0.3").min(d("0.4")), d("0.3"));
        assert_eq!(d("0.3").max(d("0.4")), d("0.4"));
    }
}
