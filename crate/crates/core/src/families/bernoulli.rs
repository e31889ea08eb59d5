//! Bernoulli numbers for the generator t/(e^t - 1), so B_1 = -1/2.
//!
//! Three independent routes produce the same table: the convolution
//! recurrence, direct series division, and reversion of the specialized
//! universal logarithm.  The test suites insist they agree.

use crate::rational::{binomial, factorial};
use crate::ring::RatField;
use crate::series::Series;
use crate::Rat;

/// B_n by the recurrence route.
pub fn bernoulli(n: u64) -> Rat {
    bernoulli_table(n).pop().unwrap()
}

/// B_0 .. B_max from sum_{k=0}^{n} C(n+1, k) B_k = 0.
pub fn bernoulli_table(max_n: u64) -> Vec<Rat> {
    let mut b = Vec::with_capacity(max_n as usize + 1);
    b.push(Rat::one());
    for n in 1..=max_n {
        let mut acc = Rat::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += &(&Rat::from(binomial(n + 1, k as u64)) * bk);
        }
        b.push(-acc / Rat::from(n as i64 + 1));
    }
    b
}

/// B_0 .. B_max as n! [t^n] t/(e^t - 1), dividing out the exponential
/// series built directly from factorials.
pub fn bernoulli_table_series(max_n: u64) -> Vec<Rat> {
    let order = max_n as usize + 2;
    let expm1 = Series::from_fn(RatField, order, |k| {
        if k == 0 {
            Rat::zero()
        } else {
            Rat::from(factorial(k as u64)).recip()
        }
    });
    let tg = expm1.shift_right_exact(1).unwrap().recip().unwrap();
    (0..=max_n)
        .map(|n| tg.coeff(n as usize).unwrap() * Rat::from(factorial(n)))
        .collect()
}

/// B_0 .. B_max through the universal construction specialized at
/// c_i = (-1)^i: the logarithm sum_i c_i t^(i+1)/(i+1) becomes log(1+t),
/// and the table is read off t/G for its compositional inverse G.
pub fn bernoulli_table_universal(max_n: u64) -> Vec<Rat> {
    let order = max_n as usize + 2;
    let f = Series::from_fn(RatField, order, |k| {
        if k == 0 {
            Rat::zero()
        } else if k % 2 == 1 {
            Rat::new(1, k as i64)
        } else {
            Rat::new(-1, k as i64)
        }
    });
    let g = f.revert().unwrap();
    let tg = g.shift_right_exact(1).unwrap().recip().unwrap();
    (0..=max_n)
        .map(|n| tg.coeff(n as usize).unwrap() * Rat::from(factorial(n)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        let b = bernoulli_table(12);
        assert_eq!(b[0], r("1"));
        assert_eq!(b[1], r("-1/2"));
        assert_eq!(b[2], r("1/6"));
        assert_eq!(b[4], r("-1/30"));
        assert_eq!(b[8], r("-1/30"));
        assert_eq!(b[12], r("-691/2730"));
        assert_eq!(bernoulli(12), r("-691/2730"));
    }

    #[test]
    fn odd_values_vanish() {
        let b = bernoulli_table(21);
        for n in (3..=21).step_by(2) {
            assert!(b[n].is_zero(), "B_{} should vanish", n);
        }
    }

    #[test]
    fn routes_agree() {
        let recurrence = bernoulli_table(30);
        assert_eq!(recurrence, bernoulli_table_series(30));
        assert_eq!(recurrence, bernoulli_table_universal(30));
    }
}
