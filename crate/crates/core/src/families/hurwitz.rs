//! Hurwitz numbers H_m (m a positive multiple of 4).
//!
//! Normalization: the Weierstrass function for invariants (4, 0) expands as
//! u^-2 + sum_{m} (2^m H_m / m) u^(m-2) / (m-2)!, so H_m is read off the
//! tail coefficient of u^(m-2) as coeff * m * (m-2)! / 2^m.  A second route
//! goes through the lemniscatic sine: sl = revert(integral of
//! (1-t^4)^(-1/2)) and the same function equals 1/sl^2.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::rational::factorial;
use crate::series::{binomial_series, weierstrass_p_tail};
use crate::{Error, Rat, Result};

fn check_index(m: u64) -> Result<()> {
    if m == 0 || m % 4 != 0 {
        return Err(Error::HurwitzIndex(m));
    }
    Ok(())
}

/// coeff of u^(m-2) -> H_m.
fn from_tail_coeff(m: u64, coeff: &Rat) -> Rat {
    let scale = Rat::from(factorial(m - 2) * BigInt::from(m)) / Rat::from(2i64).pow(m as i32);
    coeff * scale
}

pub fn hurwitz(m: u64) -> Result<Rat> {
    check_index(m)?;
    Ok(hurwitz_table(m).remove(&m).unwrap())
}

/// {m -> H_m} for multiples of 4 up to max_m, from the tail recurrence.
pub fn hurwitz_table(max_m: u64) -> BTreeMap<u64, Rat> {
    let mut out = BTreeMap::new();
    if max_m < 4 {
        return out;
    }
    let tail = weierstrass_p_tail(&Rat::from(4i64), &Rat::zero(), max_m as usize - 1);
    for m in (4..=max_m).step_by(4) {
        let coeff = tail.coeff(m as usize - 2).unwrap();
        out.insert(m, from_tail_coeff(m, coeff));
    }
    out
}

/// Same table via 1/sl^2, sl the reverted lemniscatic integral.
pub fn hurwitz_table_lemniscatic(max_m: u64) -> BTreeMap<u64, Rat> {
    let mut out = BTreeMap::new();
    if max_m < 4 {
        return out;
    }
    let order = max_m as usize + 2;
    let sl = binomial_series(&Rat::new(-1, 2), 4, order - 1)
        .integrate()
        .revert()
        .unwrap();
    let unit = sl.shift_right_exact(1).unwrap();
    // 1/sl^2 = u^-2 * inv; the u^(m-2) coefficient sits at index m of inv.
    let inv = unit.pow(2).recip().unwrap();
    for m in (4..=max_m).step_by(4) {
        out.insert(m, from_tail_coeff(m, inv.coeff(m as usize).unwrap()));
    }
    out
}
