//! Generalized Bernoulli-Hurwitz numbers for the curves y^a = 1 - x^b.
//!
//! The curve's logarithm is the Abelian integral u = F(x) = integral of
//! (1 - t^b)^(-(a-1)/a); its compositional inverse x(u) plays the role of
//! the exponential.  The canonical GBH_n is n! [t^n] (t/x(t)), and the same
//! values arise by specializing the universal Bernoulli polynomials at the
//! curve's coefficient sequence.

use std::collections::BTreeMap;

use crate::families::curves::CurveSpec;
use crate::families::universal::universal_bernoulli_table;
use crate::laurent::Laurent;
use crate::mpoly::MPoly;
use crate::rational::factorial;
use crate::ring::RatField;
use crate::series::{binomial_series, Series};
use crate::{Rat, Result};

/// c_0 .. c_max with c_i = [t^i] (1 - t^b)^(-(a-1)/a); zero off multiples of b.
pub fn c_sequence(curve: &CurveSpec, max_i: usize) -> Vec<Rat> {
    binomial_series(&curve.alpha(), curve.b(), max_i + 1)
        .coeffs()
        .to_vec()
}

/// F(x) = sum_i c_i x^(i+1)/(i+1): the curve's Abelian integral.
pub fn cyclotomic_logarithm(curve: &CurveSpec, order: usize) -> Series<RatField> {
    if order == 0 {
        return Series::zero(RatField, 0);
    }
    binomial_series(&curve.alpha(), curve.b(), order - 1).integrate()
}

/// x(u): the compositional inverse of the logarithm.
pub fn inverse_series(curve: &CurveSpec, order: usize) -> Series<RatField> {
    cyclotomic_logarithm(curve, order).revert().unwrap()
}

/// GBH_0 .. GBH_max by the reversion route: n! [t^n] (t/x(t)).
pub fn gbh_table(curve: &CurveSpec, max_n: u64) -> Vec<Rat> {
    let x = inverse_series(curve, max_n as usize + 2);
    let tg = x.shift_right_exact(1).unwrap().recip().unwrap();
    (0..=max_n)
        .map(|n| tg.coeff(n as usize).unwrap() * Rat::from(factorial(n)))
        .collect()
}

pub fn gbh(curve: &CurveSpec, n: u64) -> Rat {
    gbh_table(curve, n).pop().unwrap()
}

/// The same table by specializing precomputed universal polynomials
/// Bhat_0 .. Bhat_max at the curve's coefficient sequence.
pub fn gbh_table_from_universal(universal: &[MPoly], curve: &CurveSpec) -> Result<Vec<Rat>> {
    if universal.is_empty() {
        return Ok(Vec::new());
    }
    let max_n = universal.len() - 1;
    let c = c_sequence(curve, max_n);
    let assign: BTreeMap<u32, Rat> = (1..=max_n as u32)
        .map(|i| (i, c[i as usize].clone()))
        .collect();
    universal.iter().map(|p| p.specialize(&assign)).collect()
}

/// Convenience wrapper that builds the universal table itself.
pub fn gbh_table_universal(curve: &CurveSpec, max_n: u64) -> Result<Vec<Rat>> {
    gbh_table_from_universal(&universal_bernoulli_table(max_n), curve)
}

/// 1/x(u)^a as a Laurent expansion: pole order a, unit part to `order`.
pub fn pe_analogue(curve: &CurveSpec, order: usize) -> Laurent<RatField> {
    let x = inverse_series(curve, order + 1);
    let unit = x.shift_right_exact(1).unwrap();
    Laurent::new(
        curve.a() as usize,
        unit.pow(curve.a()).recip().unwrap(),
    )
}
