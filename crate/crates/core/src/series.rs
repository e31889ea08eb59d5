//! Truncated formal power series over an abstract coefficient ring.
//!
//! A `Series` of order N is an exact representative of a power series
//! modulo t^N: exactly the coefficients of t^0 .. t^(N-1) are known.
//! Asking for a coefficient at or beyond the truncation order is an error,
//! never a silent zero, and every binary operation truncates to the smaller
//! of the two operand orders.

use std::fmt;

use crate::rational::rational_binomial;
use crate::ring::{CoefficientRing, RatField};
use crate::{Error, Rat, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct Series<R: CoefficientRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: CoefficientRing> Series<R> {
    /// Wraps explicit coefficients; the vector length is the truncation order.
    pub fn from_coeffs(ring: R, coeffs: Vec<R::Elem>) -> Self {
        Series { ring, coeffs }
    }

    /// Fills coefficients 0..order from a function.
    pub fn from_fn(ring: R, order: usize, f: impl Fn(usize) -> R::Elem) -> Self {
        let coeffs = (0..order).map(f).collect();
        Series { ring, coeffs }
    }

    pub fn zero(ring: R, order: usize) -> Self {
        let coeffs = (0..order).map(|_| ring.zero()).collect();
        Series { ring, coeffs }
    }

    pub fn one(ring: R, order: usize) -> Self {
        Self::monomial(ring, 0, order)
    }

    /// The identity series t.
    pub fn identity(ring: R, order: usize) -> Self {
        Self::monomial(ring, 1, order)
    }

    /// The single monomial t^k with unit coefficient (zero if k >= order).
    pub fn monomial(ring: R, k: usize, order: usize) -> Self {
        let mut s = Self::zero(ring, order);
        if k < order {
            s.coeffs[k] = s.ring.one();
        }
        s
    }

    pub fn constant(ring: R, c: R::Elem, order: usize) -> Self {
        let mut s = Self::zero(ring, order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Truncation order: the number of known coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    /// Coefficient of t^n.  Requests beyond the truncation order are an
    /// error: the data simply is not there.
    pub fn coeff(&self, n: usize) -> Result<&R::Elem> {
        self.coeffs.get(n).ok_or(Error::PrecisionExceeded {
            requested: n,
            order: self.order(),
        })
    }

    /// Equality on the first min(order, order) coefficients.
    pub fn eq_to_common_order(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..n] == other.coeffs[..n]
    }

    /// Drops coefficients to a smaller order.  Panics when asked to extend,
    /// since the extra coefficients would be unknown.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot truncate order {} series to larger order {}",
            self.order(),
            order
        );
        Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    /// Extends with zero coefficients.  Private: the appended coefficients
    /// are placeholders, valid only where the caller can bound the error,
    /// as in the Newton iteration.
    fn padded(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() < order {
            coeffs.push(self.ring.zero());
        }
        Series { ring: self.ring.clone(), coeffs }
    }

    pub fn neg(&self) -> Self {
        Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series {
            ring: self.ring.clone(),
            coeffs: (0..n)
                .map(|i| self.ring.add(&self.coeffs[i], &other.coeffs[i]))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series {
            ring: self.ring.clone(),
            coeffs: (0..n)
                .map(|i| self.ring.sub(&self.coeffs[i], &other.coeffs[i]))
                .collect(),
        }
    }

    /// Cauchy product, truncated to the smaller operand order.
    pub fn mul(&self, other: &Self) -> Self {
        let ring = &self.ring;
        let n = self.order().min(other.order());
        let mut out: Vec<R::Elem> = (0..n).map(|_| ring.zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                if ring.is_zero(b) {
                    continue;
                }
                out[i + j] = ring.add(&out[i + j], &ring.mul(a, b));
            }
        }
        Series { ring: ring.clone(), coeffs: out }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect(),
        }
    }

    pub fn mul_int(&self, n: i64) -> Self {
        Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| self.ring.mul_int(a, n)).collect(),
        }
    }

    pub fn div_int(&self, n: i64) -> Self {
        Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| self.ring.div_int(a, n)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Series::one(self.ring.clone(), self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplication by t^k.  The product is known to k more coefficients.
    pub fn shift_left(&self, k: usize) -> Self {
        let mut coeffs: Vec<R::Elem> = (0..k).map(|_| self.ring.zero()).collect();
        coeffs.extend(self.coeffs.iter().cloned());
        Series { ring: self.ring.clone(), coeffs }
    }

    /// Exact division by t^k, requiring the first k coefficients to vanish.
    pub fn shift_right_exact(&self, k: usize) -> Result<Self> {
        for (i, c) in self.coeffs.iter().enumerate().take(k) {
            if !self.ring.is_zero(c) {
                return Err(Error::InexactShift { shift: k, index: i });
            }
        }
        let start = k.min(self.order());
        Ok(Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs[start..].to_vec(),
        })
    }

    /// Termwise derivative; one coefficient of precision is consumed.
    pub fn differentiate(&self) -> Self {
        if self.order() == 0 {
            return self.clone();
        }
        Series {
            ring: self.ring.clone(),
            coeffs: (1..self.order())
                .map(|i| self.ring.mul_int(&self.coeffs[i], i as i64))
                .collect(),
        }
    }

    /// Termwise antiderivative with zero constant term; gains a coefficient.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(self.ring.zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(self.ring.div_int(c, (i + 1) as i64));
        }
        Series { ring: self.ring.clone(), coeffs }
    }

    /// Composition self(g), requiring g(0) = 0.  Evaluated by Horner's
    /// scheme in O(N) series multiplications.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if g.order() > 0 && !self.ring.is_zero(&g.coeffs[0]) {
            return Err(Error::ComposeConstantTerm(g.coeffs[0].to_string()));
        }
        let n = self.order().min(g.order());
        let mut acc = Series::zero(self.ring.clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(g);
            acc.coeffs[0] = self.ring.add(&acc.coeffs[0], &self.coeffs[k]);
        }
        Ok(acc)
    }

    /// Multiplicative inverse, requiring an invertible constant term.
    pub fn recip(&self) -> Result<Self> {
        let ring = &self.ring;
        if self.order() == 0 {
            return Ok(self.clone());
        }
        let inv0 = ring
            .inv(&self.coeffs[0])
            .ok_or_else(|| Error::NotInvertible(self.coeffs[0].to_string()))?;
        let n = self.order();
        let mut out: Vec<R::Elem> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for m in 1..n {
            let mut acc = ring.zero();
            for i in 1..=m {
                if ring.is_zero(&self.coeffs[i]) {
                    continue;
                }
                acc = ring.add(&acc, &ring.mul(&self.coeffs[i], &out[m - i]));
            }
            out.push(ring.neg(&ring.mul(&inv0, &acc)));
        }
        Ok(Series { ring: ring.clone(), coeffs: out })
    }

    fn check_revert_preconditions(&self) -> Result<()> {
        if self.order() < 2 {
            return Err(Error::PrecisionExceeded {
                requested: 1,
                order: self.order(),
            });
        }
        if !self.ring.is_zero(&self.coeffs[0]) {
            return Err(Error::RevertConstantTerm(self.coeffs[0].to_string()));
        }
        if self.coeffs[1] != self.ring.one() {
            return Err(Error::RevertLeadingCoefficient(self.coeffs[1].to_string()));
        }
        Ok(())
    }

    /// Compositional inverse g with self(g(t)) = g(self(t)) = t,
    /// for series of the form t + a2 t^2 + ...
    ///
    /// This is the direct coefficient recursion: writing g = sum b_k t^k and
    /// matching coefficients in sum_k b_k f^k = t gives the triangular system
    /// b_m = -sum_{k<m} b_k [t^m] f^k, since [t^m] f^m = 1.
    pub fn revert(&self) -> Result<Self> {
        self.revert_direct()
    }

    /// See [`Series::revert`].
    pub fn revert_direct(&self) -> Result<Self> {
        self.check_revert_preconditions()?;
        let ring = &self.ring;
        let n = self.order();
        // powers[k-1] = f^k truncated at order n, for k = 1 .. n-1.
        let mut powers: Vec<Series<R>> = Vec::with_capacity(n.saturating_sub(1));
        powers.push(self.clone());
        for _ in 2..n {
            let next = powers.last().unwrap().mul(self);
            powers.push(next);
        }
        let mut b: Vec<R::Elem> = (0..n).map(|_| ring.zero()).collect();
        if n > 1 {
            b[1] = ring.one();
        }
        for m in 2..n {
            let mut acc = ring.zero();
            for k in 1..m {
                if ring.is_zero(&b[k]) {
                    continue;
                }
                acc = ring.add(&acc, &ring.mul(&b[k], &powers[k - 1].coeffs[m]));
            }
            b[m] = ring.neg(&acc);
        }
        Ok(Series { ring: ring.clone(), coeffs: b })
    }

    /// Compositional inverse by Newton iteration with order doubling:
    /// g <- g - (f(g) - t) / f'(g), starting from g = t.
    ///
    /// Agrees coefficient for coefficient with [`Series::revert_direct`];
    /// the tests insist on it.
    pub fn revert_newton(&self) -> Result<Self> {
        self.check_revert_preconditions()?;
        let ring = self.ring.clone();
        let n = self.order();
        let fprime = self.differentiate();
        let mut g = Series::identity(ring.clone(), 2);
        let mut m = 2usize;
        while m < n {
            let m2 = (2 * m).min(n);
            let gx = g.padded(m2);
            // f(gx) agrees with t through t^(m-1) exactly, so the
            // numerator is divisible by t^m and the quotient needs the
            // reciprocal only to order m2 - m.
            let num = self.truncate(m2).compose(&gx)?.sub(&Series::identity(ring.clone(), m2));
            let den = fprime.truncate(fprime.order().min(m2)).compose(&gx)?;
            let corr = num
                .shift_right_exact(m)?
                .mul(&den.recip()?)
                .shift_left(m);
            g = gx.sub(&corr);
            m = m2;
        }
        Ok(g)
    }
}

impl<R: CoefficientRing> fmt::Display for Series<R> {
    /// Dump format: one coefficient per line, `n: value`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "{}: {}", i, c)?;
        }
        Ok(())
    }
}

/// The binomial series (1 - t^b)^alpha = sum_k C(alpha, k) (-1)^k t^(b k).
pub fn binomial_series(alpha: &Rat, b: u32, order: usize) -> Series<RatField> {
    assert!(b >= 1, "binomial series needs b >= 1");
    let mut s = Series::zero(RatField, order);
    let mut k = 0u64;
    loop {
        let idx = (b as u64) * k;
        if idx >= order as u64 {
            break;
        }
        let mut c = rational_binomial(alpha, k);
        if k % 2 == 1 {
            c = -c;
        }
        s.coeffs[idx as usize] = c;
        k += 1;
    }
    s
}

/// Regular tail Q(u) of the Weierstrass p-function for invariants (g2, g3):
/// p(u) = u^-2 + Q(u) with Q = sum_{k>=2} q_k u^(2k-2), where
/// q_2 = g2/20, q_3 = g3/28, and for k >= 4
/// q_k = 3/((2k+1)(k-3)) * sum_{m=2}^{k-2} q_m q_{k-m}.
pub fn weierstrass_p_tail(g2: &Rat, g3: &Rat, order: usize) -> Series<RatField> {
    let mut s = Series::zero(RatField, order);
    if order == 0 {
        return s;
    }
    let kmax = (order + 1) / 2;
    let mut q: Vec<Rat> = vec![Rat::zero(); kmax + 1];
    for k in 2..=kmax {
        let val = match k {
            2 => g2 / Rat::from(20i64),
            3 => g3 / Rat::from(28i64),
            _ => {
                let mut acc = Rat::zero();
                for m in 2..=(k - 2) {
                    acc += &(&q[m] * &q[k - m]);
                }
                acc * Rat::new(3, (2 * k as i64 + 1) * (k as i64 - 3))
            }
        };
        let idx = 2 * k - 2;
        if idx < order {
            s.coeffs[idx] = val.clone();
        }
        q[k] = val;
    }
    s
}
