//! Exponent pairs (a, b) for the curves y^a = 1 - x^b.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Rat, Result};

/// The curve y^a = 1 - x^b.  (2,2) is the circular (Bernoulli) curve,
/// (2,4) the lemniscatic (Hurwitz) curve.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CurveSpec {
    a: u32,
    b: u32,
}

impl CurveSpec {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a < 2 || b < 2 {
            return Err(Error::InvalidCurve { a, b });
        }
        Ok(CurveSpec { a, b })
    }

    pub fn circular() -> Self {
        CurveSpec { a: 2, b: 2 }
    }

    pub fn lemniscatic() -> Self {
        CurveSpec { a: 2, b: 4 }
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// The binomial exponent -(a-1)/a of the integrand y^(1-a).
    pub fn alpha(&self) -> Rat {
        Rat::new(-((self.a - 1) as i64), self.a as i64)
    }

    pub fn pair(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    /// The stock small-exponent curves the test suites exercise.
    pub fn presets() -> Vec<CurveSpec> {
        let mut out = Vec::new();
        for a in [2u32, 3] {
            for b in [2u32, 3, 4, 6] {
                out.push(CurveSpec { a, b });
            }
        }
        out
    }
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

impl FromStr for CurveSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidRequest(format!("curve must be \"a,b\", got {:?}", s));
        let (a, b) = s.split_once(',').ok_or_else(invalid)?;
        let a: u32 = a.trim().parse().map_err(|_| invalid())?;
        let b: u32 = b.trim().parse().map_err(|_| invalid())?;
        CurveSpec::new(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_of_the_classical_curves() {
        assert_eq!(CurveSpec::circular().alpha(), Rat::new(-1, 2));
        assert_eq!(CurveSpec::lemniscatic().alpha(), Rat::new(-1, 2));
        assert_eq!(CurveSpec::new(3, 2).unwrap().alpha(), Rat::new(-2, 3));
    }

    #[test]
    fn rejects_degenerate_exponents() {
        assert!(matches!(CurveSpec::new(1, 4), Err(Error::InvalidCurve { a: 1, b: 4 })));
        assert!(matches!(CurveSpec::new(2, 0), Err(Error::InvalidCurve { a: 2, b: 0 })));
    }

    #[test]
    fn parses_and_prints_the_flag_form() {
        let c: CurveSpec = "2,4".parse().unwrap();
        assert_eq!(c, CurveSpec::lemniscatic());
        assert_eq!(c.to_string(), "2,4");
        assert!(" 3 , 6 ".parse::<CurveSpec>().is_ok());
        assert!("2".parse::<CurveSpec>().is_err());
        assert!("2,x".parse::<CurveSpec>().is_err());
        assert!("1,4".parse::<CurveSpec>().is_err());
    }

    #[test]
    fn preset_grid() {
        let presets = CurveSpec::presets();
        assert_eq!(presets.len(), 8);
        assert!(presets.contains(&CurveSpec::circular()));
        assert!(presets.contains(&CurveSpec::lemniscatic()));
    }
}
