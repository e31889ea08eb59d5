//! Truncated Laurent expansions with a finite pole part.
//!
//! A `Laurent` is stored as u^(-pole) * S(u) for a plain power series S,
//! so the known window of exponents is -pole .. -pole + S.order().
//! Arithmetic aligns poles and truncates to the common known window,
//! following the same precision discipline as `Series`.

use std::fmt;

use crate::ring::CoefficientRing;
use crate::series::Series;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct Laurent<R: CoefficientRing> {
    pole: usize,
    series: Series<R>,
}

impl<R: CoefficientRing> Laurent<R> {
    pub fn new(pole: usize, series: Series<R>) -> Self {
        Laurent { pole, series }
    }

    pub fn from_series(series: Series<R>) -> Self {
        Laurent { pole: 0, series }
    }

    pub fn pole(&self) -> usize {
        self.pole
    }

    /// The series S in u^(-pole) * S(u).
    pub fn unit_part(&self) -> &Series<R> {
        &self.series
    }

    /// Lowest known exponent.
    pub fn min_exponent(&self) -> i64 {
        -(self.pole as i64)
    }

    /// Highest known exponent, inclusive.
    pub fn max_exponent(&self) -> i64 {
        self.series.order() as i64 - self.pole as i64 - 1
    }

    /// Coefficient of u^n, for any n in the known window.
    pub fn coeff(&self, n: i64) -> Result<&R::Elem> {
        let idx = n + self.pole as i64;
        if idx < 0 || idx >= self.series.order() as i64 {
            return Err(Error::PrecisionExceeded {
                requested: n.unsigned_abs() as usize,
                order: self.series.order(),
            });
        }
        self.series.coeff(idx as usize)
    }

    pub fn is_zero(&self) -> bool {
        let ring = self.series.ring();
        self.series.coeffs().iter().all(|c| ring.is_zero(c))
    }

    /// Rewrites with a larger pole, padding exact zeros below.
    fn with_pole(&self, pole: usize) -> Self {
        assert!(pole >= self.pole);
        Laurent {
            pole,
            series: self.series.shift_left(pole - self.pole),
        }
    }

    pub fn neg(&self) -> Self {
        Laurent { pole: self.pole, series: self.series.neg() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let pole = self.pole.max(other.pole);
        let a = self.with_pole(pole);
        let b = other.with_pole(pole);
        Laurent { pole, series: a.series.add(&b.series) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Laurent {
            pole: self.pole + other.pole,
            series: self.series.mul(&other.series),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        Laurent {
            pole: self.pole * e as usize,
            series: self.series.pow(e),
        }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        Laurent { pole: self.pole, series: self.series.scale(c) }
    }

    /// Termwise derivative: d/du [u^(-p) S] = u^(-p-1) (u S' - p S).
    pub fn differentiate(&self) -> Self {
        let p = self.pole as i64;
        // u S' keeps the order of S; S is truncated to match before the sum.
        let u_sprime = self.series.differentiate().shift_left(1);
        let n = u_sprime.order().min(self.series.order());
        let series = u_sprime.truncate(n).sub(&self.series.truncate(n).mul_int(p));
        Laurent { pole: self.pole + 1, series }
    }
}

impl<R: CoefficientRing> fmt::Display for Laurent<R> {
    /// Dump format: one coefficient per line, `n: value`, from the pole up.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.series.coeffs().iter().enumerate() {
            writeln!(f, "{}: {}", i as i64 - self.pole as i64, c)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::factorial;
    use crate::ring::RatField;
    use crate::series::weierstrass_p_tail;
    use crate::Rat;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn sin_series(order: usize) -> Series<RatField> {
        Series::from_fn(RatField, order, |k| {
            if k % 2 == 0 {
                Rat::zero()
            } else {
                let c = Rat::from(factorial(k as u64)).recip();
                if k % 4 == 1 {
                    c
                } else {
                    -c
                }
            }
        })
    }

    /// p(u) = u^-2 + Q(u) as a Laurent pair, unit part 1 + u^2 Q.
    fn weierstrass_p(g2: &Rat, g3: &Rat, tail_order: usize) -> Laurent<RatField> {
        let tail = weierstrass_p_tail(g2, g3, tail_order);
        let one = Series::one(RatField, tail_order + 2);
        Laurent::new(2, one.add(&tail.shift_left(2)))
    }

    #[test]
    fn reciprocal_of_sin_squared() {
        // 1/sin^2 u = u^-2 + 1/3 + u^2/15 + 2 u^4/189 + ...
        let sin = sin_series(12);
        let unit = sin.shift_right_exact(1).unwrap();
        let inv_sq = Laurent::new(2, unit.pow(2).recip().unwrap());
        assert_eq!(*inv_sq.coeff(-2).unwrap(), r("1"));
        assert_eq!(*inv_sq.coeff(-1).unwrap(), r("0"));
        assert_eq!(*inv_sq.coeff(0).unwrap(), r("1/3"));
        assert_eq!(*inv_sq.coeff(2).unwrap(), r("1/15"));
        assert_eq!(*inv_sq.coeff(4).unwrap(), r("2/189"));
    }

    #[test]
    fn pole_alignment_in_addition() {
        let a = Laurent::new(2, Series::from_coeffs(RatField, vec![r("1"), r("0"), r("5")]));
        let b = Laurent::from_series(Series::from_coeffs(RatField, vec![r("-5"), r("3")]));
        let sum = a.add(&b);
        assert_eq!(sum.pole(), 2);
        assert_eq!(*sum.coeff(-2).unwrap(), r("1"));
        assert_eq!(*sum.coeff(0).unwrap(), r("0"));
        assert!(sum.coeff(1).is_err());
        assert!(!sum.is_zero());
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn derivative_of_pole() {
        // d/du (u^-2) = -2 u^-3
        let p = Laurent::new(2, Series::one(RatField, 4));
        let d = p.differentiate();
        assert_eq!(d.pole(), 3);
        assert_eq!(*d.coeff(-3).unwrap(), r("-2"));
        assert!(d.coeff(-2).unwrap().is_zero());
        assert!(d.coeff(-1).unwrap().is_zero());
    }

    #[test]
    fn weierstrass_differential_equation() {
        // (p')^2 = 4 p^3 - g2 p - g3, as Laurent expansions.
        for (g2, g3) in [(r("4"), r("0")), (r("5"), r("7")), (r("0"), r("3"))] {
            let p = weierstrass_p(&g2, &g3, 20);
            let dp = p.differentiate();
            let lhs = dp.mul(&dp);
            let rhs = p
                .pow(3)
                .scale(&r("4"))
                .sub(&p.scale(&g2))
                .sub(&Laurent::from_series(Series::constant(RatField, g3.clone(), 30)));
            let diff = lhs.sub(&rhs);
            assert!(
                diff.is_zero(),
                "ODE residue nonzero for g2={}, g3={}:\n{}",
                g2,
                g3,
                diff
            );
        }
    }

    #[test]
    fn display_runs_from_the_pole_up() {
        let l = Laurent::new(1, Series::from_coeffs(RatField, vec![r("2"), r("-1/3")]));
        assert_eq!(l.to_string(), "-1: 2\n0: -1/3\n");
    }
}
