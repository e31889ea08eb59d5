//! Universal Bernoulli numbers: polynomials in the indeterminates c_1, c_2, ...
//!
//! With F(t) = sum_{i>=0} c_i t^(i+1)/(i+1), c_0 = 1, and G its compositional
//! inverse, the numbers are defined by t/G(t) = sum_n Bhat_n t^n / n!.
//! Bhat_n is isobaric of weight n under weight(c_i) = i, which is why the
//! whole pipeline can run with products truncated at weight max_n without
//! disturbing any of the returned entries.

use crate::mpoly::MPoly;
use crate::rational::factorial;
use crate::ring::PolyRing;
use crate::series::Series;
use crate::Rat;

/// Bhat_0 .. Bhat_max.
pub fn universal_bernoulli_table(max_n: u64) -> Vec<MPoly> {
    let ring = PolyRing::truncated(max_n);
    let order = max_n as usize + 2;
    let f = Series::from_fn(ring, order, |k| {
        if k == 0 {
            MPoly::zero()
        } else if k == 1 {
            MPoly::one()
        } else {
            MPoly::var(k as u32 - 1).scale(&Rat::new(1, k as i64))
        }
    });
    let g = f.revert().unwrap();
    let tg = g.shift_right_exact(1).unwrap().recip().unwrap();
    (0..=max_n)
        .map(|n| tg.coeff(n as usize).unwrap().scale(&Rat::from(factorial(n))))
        .collect()
}

pub fn universal_bernoulli(n: u64) -> MPoly {
    universal_bernoulli_table(n).pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::bernoulli::bernoulli_table;
    use std::collections::BTreeMap;

    #[test]
    fn first_four_polynomials() {
        let t = universal_bernoulli_table(3);
        assert_eq!(t[0].to_string(), "1");
        assert_eq!(t[1].to_string(), "1/2*c1");
        assert_eq!(t[2].to_string(), "-1/2*c1^2 + 2/3*c2");
        assert_eq!(t[3].to_string(), "3/2*c1^3 - 3*c1*c2 + 3/2*c3");
    }

    #[test]
    fn isobaric_of_weight_n() {
        for (n, poly) in universal_bernoulli_table(8).iter().enumerate() {
            assert!(poly.is_homogeneous(n as u64), "Bhat_{} not isobaric", n);
        }
    }

    #[test]
    fn weight_truncation_does_not_disturb_the_prefix() {
        let small = universal_bernoulli_table(4);
        let large = universal_bernoulli_table(8);
        assert_eq!(small[..], large[..5]);
    }

    #[test]
    fn classical_specialization() {
        let b = bernoulli_table(10);
        for (n, poly) in universal_bernoulli_table(10).iter().enumerate() {
            let assign: BTreeMap<u32, Rat> = (1..=n as u32)
                .map(|i| (i, if i % 2 == 0 { Rat::one() } else { -Rat::one() }))
                .collect();
            assert_eq!(poly.specialize(&assign).unwrap(), b[n], "at n = {}", n);
        }
    }

    #[test]
    fn fractional_part_of_the_third() {
        assert_eq!(
            universal_bernoulli(3).frac_mod_int().to_string(),
            "1/2*c1^3 + 1/2*c3"
        );
    }
}
