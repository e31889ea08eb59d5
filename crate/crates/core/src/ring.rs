//! Coefficient-ring contract for the series engine.
//!
//! Rings are passed around as small values rather than type-level tokens so
//! that a ring can carry configuration; the polynomial ring uses this for
//! its weight cutoff.  Every ring here is a commutative Q-algebra, which is
//! why exact division by a nonzero integer is part of the contract.

use std::fmt;

use crate::{MPoly, Rat};

pub trait CoefficientRing: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;

    /// Exact division by a nonzero integer.
    fn div_int(&self, a: &Self::Elem, n: i64) -> Self::Elem;

    /// Multiplicative inverse, or None when the element is not a unit.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn mul_int(&self, a: &Self::Elem, n: i64) -> Self::Elem {
        self.mul(a, &self.from_int(n))
    }
}

/// The rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RatField;

impl CoefficientRing for RatField {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }

    fn one(&self) -> Rat {
        Rat::one()
    }

    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }

    fn neg(&self, a: &Rat) -> Rat {
        -a
    }

    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }

    fn from_int(&self, n: i64) -> Rat {
        Rat::from(n)
    }

    fn div_int(&self, a: &Rat, n: i64) -> Rat {
        assert!(n != 0, "division by zero integer");
        a / Rat::from(n)
    }

    fn inv(&self, a: &Rat) -> Option<Rat> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
}

/// Polynomials in c1, c2, ... with an optional isobaric weight cutoff.
///
/// With `max_weight = Some(w)` every product discards terms of weight
/// above w, which keeps series arithmetic over the c-variables bounded.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct PolyRing {
    pub max_weight: Option<u64>,
}

impl PolyRing {
    /// Ring without a weight cutoff.
    pub fn exact() -> Self {
        PolyRing { max_weight: None }
    }

    /// Ring discarding products of weight above `w`.
    pub fn truncated(w: u64) -> Self {
        PolyRing { max_weight: Some(w) }
    }
}

impl CoefficientRing for PolyRing {
    type Elem = MPoly;

    fn zero(&self) -> MPoly {
        MPoly::zero()
    }

    fn one(&self) -> MPoly {
        MPoly::one()
    }

    fn is_zero(&self, a: &MPoly) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a + b
    }

    fn neg(&self, a: &MPoly) -> MPoly {
        -a
    }

    fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        a.mul_truncated(b, self.max_weight)
    }

    fn from_int(&self, n: i64) -> MPoly {
        MPoly::constant(Rat::from(n))
    }

    fn div_int(&self, a: &MPoly, n: i64) -> MPoly {
        assert!(n != 0, "division by zero integer");
        a.scale(&Rat::from(n).recip())
    }

    fn inv(&self, a: &MPoly) -> Option<MPoly> {
        // Only constants are units here; that covers every reciprocal the
        // series engine takes over this ring.
        match a.as_constant() {
            Some(c) if !c.is_zero() => Some(MPoly::constant(c.recip())),
            _ => None,
        }
    }
}
