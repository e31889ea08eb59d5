//! Sparse multivariate polynomials over `Rat` in the variables c1, c2, ...
//! carrying the isobaric grading weight(c_i) = i.
//!
//! Terms are kept in a canonical order: ascending weight, and within one
//! weight class the monomial with the larger exponent on the earliest
//! variable comes first.  Printing, hashing, and iteration all follow this
//! order, so textual forms are stable.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::frac_mod_int;
use crate::{Error, Rat, Result};

/// Monomial c1^e1 * c2^e2 * ..., stored sparsely as index -> exponent.
/// Zero exponents are never stored; the empty map is the constant monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: BTreeMap<u32, u32>,
}

impl Monomial {
    /// The constant monomial 1.
    pub fn one() -> Self {
        Monomial { exps: BTreeMap::new() }
    }

    /// The single variable c_i.  Variable indices start at 1.
    pub fn var(i: u32) -> Self {
        Self::from_pairs(&[(i, 1)])
    }

    /// Builds a monomial from (variable, exponent) pairs, dropping zero
    /// exponents and merging repeats.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        let mut exps = BTreeMap::new();
        for &(i, e) in pairs {
            assert!(i >= 1, "variable indices start at c1");
            if e > 0 {
                *exps.entry(i).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn is_constant(&self) -> bool {
        self.exps.is_empty()
    }

    /// Isobaric weight: the sum of index * exponent over all variables.
    pub fn weight(&self) -> u64 {
        self.exps
            .iter()
            .map(|(&i, &e)| u64::from(i) * u64::from(e))
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&i, &e) in &other.exps {
            *exps.entry(i).or_insert(0) += e;
        }
        Monomial { exps }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        let exps = self.exps.iter().map(|(&i, &x)| (i, x * e)).collect();
        Monomial { exps }
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps.iter().map(|(&i, &e)| (i, e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| {
            // Within a weight class: lexicographic with c1 ranked highest,
            // the lex-larger monomial ordered first.
            let mut a = self.exps.iter();
            let mut b = other.exps.iter();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Less,
                    (None, Some(_)) => return Ordering::Greater,
                    (Some((ia, ea)), Some((ib, eb))) => match ia.cmp(ib) {
                        Ordering::Less => return Ordering::Less,
                        Ordering::Greater => return Ordering::Greater,
                        Ordering::Equal => match ea.cmp(eb) {
                            Ordering::Equal => continue,
                            Ordering::Less => return Ordering::Greater,
                            Ordering::Greater => return Ordering::Less,
                        },
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&i, &e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "c{}", i)?;
            } else {
                write!(f, "c{}^{}", i, e)?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with `Rat` coefficients; zero coefficients are never
/// stored, so the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MPoly { terms }
    }

    /// The variable c_i as a polynomial.
    pub fn var(i: u32) -> Self {
        Self::from_terms(vec![(Monomial::var(i), Rat::one())])
    }

    /// Builds a polynomial from terms, merging duplicates and dropping zeros.
    pub fn from_terms(terms: Vec<(Monomial, Rat)>) -> Self {
        let mut map: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m, c) in terms {
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += &c;
                }
            }
        }
        map.retain(|_, c| !c.is_zero());
        MPoly { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial, zero when absent.
    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one())
    }

    /// Some(c) when the polynomial is the constant c, including zero.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Largest term weight, or 0 for the zero polynomial.
    pub fn max_weight(&self) -> u64 {
        self.terms.keys().map(Monomial::weight).max().unwrap_or(0)
    }

    /// True when every term has weight exactly `w` (vacuously for zero).
    pub fn is_homogeneous(&self, w: u64) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Rat::is_integer)
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Product with every result term of weight above `max_weight` dropped.
    /// `None` disables truncation.
    pub fn mul_truncated(&self, other: &MPoly, max_weight: Option<u64>) -> MPoly {
        let mut acc: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            let wa = ma.weight();
            for (mb, cb) in &other.terms {
                if let Some(w) = max_weight {
                    if wa + mb.weight() > w {
                        continue;
                    }
                }
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += &c;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { terms: acc }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..e {
            acc = acc.mul_truncated(self, None);
        }
        acc
    }

    /// Substitutes rational values for every variable.  The assignment must
    /// cover all variables that occur; a gap is reported with its index.
    pub fn specialize(&self, assign: &BTreeMap<u32, Rat>) -> Result<Rat> {
        let mut powers: HashMap<(u32, u32), Rat> = HashMap::new();
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, e) in m.exponents() {
                let value = assign.get(&i).ok_or(Error::MissingAssignment(i))?;
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| value.pow(e as i32));
                term = term * &*p;
            }
            total += &term;
        }
        Ok(total)
    }

    /// Termwise fractional part: each coefficient is reduced to [0, 1) and
    /// terms that become zero vanish.
    pub fn frac_mod_int(&self) -> MPoly {
        MPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), frac_mod_int(c)))
                .collect(),
        )
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.entry(m.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += c;
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MPoly { terms }
    }
}
poly_binop!(Add, add);

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &(-rhs)
    }
}
poly_binop!(Sub, sub);

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.mul_truncated(rhs, None)
    }
}
poly_binop!(Mul, mul);

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if m.is_constant() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", mag, m)?;
            }
        }
        Ok(())
    }
}
