//! Exact rational arithmetic and elementary number-theoretic helpers.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::primes::is_prime;
use crate::{Error, Result};

/// Arbitrary-precision rational kept in canonical lowest terms.
///
/// The denominator is always positive and coprime to the numerator, and zero
/// is stored as 0/1.  Canonical form is restored on every construction, so
/// equality, ordering, and hashing are structural.  The canonical text form
/// is `num/den`, with `/den` omitted when the denominator is 1; that exact
/// form is used in all exports.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// Builds `numer/denom` in lowest terms.  Panics if `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let denom = denom.into();
        assert!(!denom.is_zero(), "rational with zero denominator");
        Rat(BigRational::new(numer.into(), denom))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// True when the denominator is 1.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse.  Panics on zero.
    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    /// Integer power, with negative exponents inverting first.  Powers of
    /// coprime pairs stay coprime, so no reduction pass is needed.
    pub fn pow(&self, exp: i32) -> Rat {
        if exp < 0 {
            let p = exp.unsigned_abs();
            let r = self.recip();
            Rat(BigRational::new_raw(r.numer().pow(p), r.denom().pow(p)))
        } else {
            Rat(BigRational::new_raw(
                self.numer().pow(exp as u32),
                self.denom().pow(exp as u32),
            ))
        }
    }

    /// Largest integer not exceeding the value.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<u64> for Rat {
    fn from(n: u64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                self.$method(&rhs)
            }
        }
    };
}

// The base impls skip BigRational's gcd reduction when both operands are
// integers; with coprime inputs the result is already canonical.
impl Add<&Rat> for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        if self.0.denom().is_one() && rhs.0.denom().is_one() {
            return Rat(BigRational::new_raw(
                self.0.numer() + rhs.0.numer(),
                BigInt::one(),
            ));
        }
        Rat(&self.0 + &rhs.0)
    }
}

impl Sub<&Rat> for &Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        if self.0.denom().is_one() && rhs.0.denom().is_one() {
            return Rat(BigRational::new_raw(
                self.0.numer() - rhs.0.numer(),
                BigInt::one(),
            ));
        }
        Rat(&self.0 - &rhs.0)
    }
}

impl Mul<&Rat> for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        if self.0.denom().is_one() && rhs.0.denom().is_one() {
            return Rat(BigRational::new_raw(
                self.0.numer() * rhs.0.numer(),
                BigInt::one(),
            ));
        }
        Rat(&self.0 * &rhs.0)
    }
}

impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        Rat(&self.0 / &rhs.0)
    }
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        *self = &*self + rhs;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat({})", self)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let parse_int = |x: &str| BigInt::from_str(x).map_err(|_| Error::ParseRat(s.to_string()));
        match t.split_once('/') {
            None => Ok(Rat(BigRational::from_integer(parse_int(t)?))),
            Some((n, d)) => {
                let denom = parse_int(d)?;
                if denom.is_zero() {
                    return Err(Error::ParseRat(s.to_string()));
                }
                Ok(Rat(BigRational::new(parse_int(n)?, denom)))
            }
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// p-adic valuation of a rational, with a tagged value for v_p(0).
///
/// `Infinite` compares greater than every finite valuation, so bounds like
/// `v >= 1` can be tested uniformly via [`Valuation::at_least`] or `Ord`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn at_least(self, bound: i64) -> bool {
        match self {
            Valuation::Finite(v) => v >= bound,
            Valuation::Infinite => true,
        }
    }

    /// True when the value is p-integral, i.e. the valuation is >= 0.
    pub fn is_nonnegative(self) -> bool {
        self.at_least(0)
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Valuation::*;
        match (self, other) {
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{}", v),
            Valuation::Infinite => write!(f, "+inf"),
        }
    }
}

/// Exact valuation of a nonzero integer at `p`.
fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    let mut v = 0i64;
    let mut rem = n.clone();
    loop {
        let (q, r) = rem.div_rem(p);
        if r.is_zero() {
            v += 1;
            rem = q;
        } else {
            return v;
        }
    }
}

/// p-adic valuation v_p(r), rejecting non-prime `p`.
pub fn padic_valuation(r: &Rat, p: u64) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if r.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let p = BigInt::from(p);
    Ok(Valuation::Finite(
        int_valuation(r.numer(), &p) - int_valuation(r.denom(), &p),
    ))
}

/// Fractional part r - floor(r), always in [0, 1).
pub fn frac_mod_int(r: &Rat) -> Rat {
    r - &Rat::from(r.floor_int())
}

/// Generalized binomial coefficient C(alpha, k) for rational alpha.
pub fn rational_binomial(alpha: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    for j in 0..k {
        acc = acc * (alpha - &Rat::from(j)) / Rat::from(j + 1);
    }
    acc
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Trial-division factorization of a positive integer, smallest prime first.
///
/// Runs in time proportional to the square root of the largest prime factor,
/// which is fine for the denominator-smooth integers appearing here.
pub fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    assert!(n.is_positive(), "factor requires a positive integer");
    let mut out = Vec::new();
    let mut rem = n.clone();
    let two = BigInt::from(2);
    let mut d = two.clone();
    while &d * &d <= rem {
        let mut e = 0u32;
        loop {
            let (q, r) = rem.div_rem(&d);
            if r.is_zero() {
                rem = q;
                e += 1;
            } else {
                break;
            }
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += if d == two { BigInt::one() } else { two.clone() };
    }
    if rem > BigInt::one() {
        out.push((rem, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_on_construction() {
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(Rat::new(1, -2), Rat::new(-1, 2));
        assert_eq!(Rat::new(0, -7), Rat::zero());
        assert_eq!(Rat::new(-6, -4), Rat::new(3, 2));
    }

    #[test]
    fn canonical_text_form() {
        assert_eq!(r("-691/2730").to_string(), "-691/2730");
        assert_eq!(Rat::new(8, 2).to_string(), "4");
        assert_eq!(Rat::zero().to_string(), "0");
        assert_eq!(r(" 3/9 ").to_string(), "1/3");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("1/0".parse::<Rat>().is_err());
        assert!("a/b".parse::<Rat>().is_err());
        assert!("".parse::<Rat>().is_err());
    }

    #[test]
    fn valuation_of_zero_is_infinite() {
        assert_eq!(padic_valuation(&Rat::zero(), 7).unwrap(), Valuation::Infinite);
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(
            padic_valuation(&r("9/4"), 3).unwrap(),
            Valuation::Finite(2)
        );
        assert_eq!(
            padic_valuation(&r("9/4"), 2).unwrap(),
            Valuation::Finite(-2)
        );
    }

    #[test]
    fn valuation_of_bernoulli_twelve_at_seven() {
        // Independent oracle: factor 2730 by trial division and confirm the
        // denominator carries exactly one factor of 7.
        let denom = BigInt::from(2730);
        let factors = factor(&denom);
        let sevens: Vec<_> = factors.iter().filter(|(p, _)| *p == BigInt::from(7)).collect();
        assert_eq!(sevens, vec![&(BigInt::from(7), 1)]);
        assert_eq!(
            padic_valuation(&r("-691/2730"), 7).unwrap(),
            Valuation::Finite(-1)
        );
    }

    #[test]
    fn valuation_rejects_composite_modulus() {
        assert!(matches!(
            padic_valuation(&Rat::one(), 6),
            Err(Error::NotPrime(6))
        ));
        assert!(matches!(
            padic_valuation(&Rat::one(), 1),
            Err(Error::NotPrime(1))
        ));
    }

    #[test]
    fn valuation_ordering() {
        assert!(Valuation::Infinite > Valuation::Finite(i64::MAX));
        assert!(Valuation::Finite(-1) < Valuation::Finite(0));
        assert!(Valuation::Infinite.at_least(1));
        assert!(!Valuation::Finite(0).at_least(1));
    }

    #[test]
    fn fractional_part_examples() {
        assert_eq!(frac_mod_int(&r("-5/6")), r("1/6"));
        assert_eq!(frac_mod_int(&r("7/3")), r("1/3"));
        assert_eq!(frac_mod_int(&r("4")), Rat::zero());
    }

    #[test]
    fn rational_binomial_examples() {
        assert_eq!(rational_binomial(&r("-1/2"), 2), r("3/8"));
        assert_eq!(rational_binomial(&r("-1"), 3), r("-1"));
        assert_eq!(rational_binomial(&r("5"), 2), r("10"));
        assert_eq!(rational_binomial(&r("1"), 2), Rat::zero());
        assert_eq!(rational_binomial(&r("7/2"), 0), Rat::one());
    }

    #[test]
    fn factor_small_numbers() {
        assert_eq!(
            factor(&BigInt::from(2730)),
            vec![
                (BigInt::from(2), 1),
                (BigInt::from(3), 1),
                (BigInt::from(5), 1),
                (BigInt::from(7), 1),
                (BigInt::from(13), 1),
            ]
        );
        assert_eq!(factor(&BigInt::from(1)), vec![]);
        assert_eq!(factor(&BigInt::from(97)), vec![(BigInt::from(97), 1)]);
        assert_eq!(factor(&BigInt::from(72)), vec![(BigInt::from(2), 3), (BigInt::from(3), 2)]);
    }

    #[test]
    fn pow_and_recip() {
        assert_eq!(r("2/3").pow(3), r("8/27"));
        assert_eq!(r("2/3").pow(-2), r("9/4"));
        assert_eq!(r("-5/7").recip(), r("-7/5"));
    }

    #[test]
    fn floor_of_negatives() {
        assert_eq!(r("-5/6").floor_int(), BigInt::from(-1));
        assert_eq!(r("5/6").floor_int(), BigInt::from(0));
        assert_eq!(r("-2").floor_int(), BigInt::from(-2));
    }
}
