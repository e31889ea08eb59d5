//! Randomized invariants for the exact-arithmetic layers.

use std::collections::BTreeMap;

use proptest::prelude::*;

use bhlab_core::rational::{binomial, frac_mod_int, padic_valuation, rational_binomial};
use bhlab_core::{MPoly, Monomial, Rat, RatField, Series, Valuation};

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| Rat::new(n, d))
}

fn nonzero_rat_strategy() -> impl Strategy<Value = Rat> {
    rat_strategy().prop_filter("nonzero", |r| !r.is_zero())
}

fn small_poly_strategy() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((1u32..4, 0u32..4), -9i64..10), 0..5).prop_map(|terms| {
        MPoly::from_terms(
            terms
                .into_iter()
                .map(|((var, pow), c)| (Monomial::var(var).pow(pow), Rat::from(c)))
                .collect(),
        )
    })
}

fn assignment() -> BTreeMap<u32, Rat> {
    [(1, Rat::new(2, 3)), (2, Rat::new(-1, 2)), (3, Rat::new(5, 1))]
        .into_iter()
        .collect()
}

proptest! {
    #[test]
    fn valuation_is_additive(a in nonzero_rat_strategy(), b in nonzero_rat_strategy(), p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 37, 47])) {
        let va = padic_valuation(&a, p).unwrap().finite().unwrap();
        let vb = padic_valuation(&b, p).unwrap().finite().unwrap();
        let vab = padic_valuation(&(a * b), p).unwrap().finite().unwrap();
        prop_assert_eq!(vab, va + vb);
    }

    #[test]
    fn valuation_of_zero_is_infinite(p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        prop_assert_eq!(padic_valuation(&Rat::zero(), p).unwrap(), Valuation::Infinite);
    }

    #[test]
    fn floor_and_fraction_reassemble(r in rat_strategy()) {
        let frac = frac_mod_int(&r);
        prop_assert!(!frac.is_negative());
        prop_assert!(frac < Rat::one());
        prop_assert_eq!(Rat::from(r.floor_int()) + frac, r);
    }

    #[test]
    fn rational_binomial_extends_the_integer_one(n in 0u64..30, k in 0u64..30) {
        let expected = if k > n { Rat::zero() } else { Rat::from(binomial(n, k)) };
        prop_assert_eq!(rational_binomial(&Rat::from(n), k), expected);
    }

    #[test]
    fn polynomial_ring_laws(a in small_poly_strategy(), b in small_poly_strategy(), c in small_poly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, MPoly::zero());
    }

    #[test]
    fn specialization_is_a_ring_map(a in small_poly_strategy(), b in small_poly_strategy()) {
        let at = assignment();
        let sa = a.specialize(&at).unwrap();
        let sb = b.specialize(&at).unwrap();
        prop_assert_eq!((&a + &b).specialize(&at).unwrap(), &sa + &sb);
        prop_assert_eq!((&a * &b).specialize(&at).unwrap(), sa * sb);
    }

    #[test]
    fn monomial_weight_is_additive(v1 in 1u32..6, p1 in 1u32..5, v2 in 1u32..6, p2 in 1u32..5) {
        let m1 = Monomial::var(v1).pow(p1);
        let m2 = Monomial::var(v2).pow(p2);
        prop_assert_eq!(m1.mul(&m2).weight(), m1.weight() + m2.weight());
    }
}

fn invertible_series(tail: Vec<i64>) -> Series<RatField> {
    let mut coeffs = vec![Rat::zero(), Rat::one()];
    coeffs.extend(tail.into_iter().map(Rat::from));
    Series::from_coeffs(RatField, coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reversion_inverts_composition(tail in prop::collection::vec(-3i64..4, 14)) {
        let f = invertible_series(tail);
        let g = f.revert().unwrap();
        let back = f.compose(&g).unwrap();
        prop_assert!(back.eq_to_common_order(&Series::identity(RatField, back.order())));
        let forth = g.compose(&f).unwrap();
        prop_assert!(forth.eq_to_common_order(&Series::identity(RatField, forth.order())));
    }

    #[test]
    fn reversion_routes_agree(tail in prop::collection::vec(-3i64..4, 14)) {
        let f = invertible_series(tail);
        prop_assert_eq!(f.revert_direct().unwrap(), f.revert_newton().unwrap());
    }

    #[test]
    fn reversion_is_stable_under_truncation(tail in prop::collection::vec(-3i64..4, 14)) {
        let f = invertible_series(tail);
        let full = f.revert().unwrap();
        let short = f.truncate(9).revert().unwrap();
        prop_assert_eq!(full.truncate(short.order()), short);
    }

    #[test]
    fn series_product_truncates_to_the_shorter_factor(
        a in prop::collection::vec(-5i64..6, 4..10),
        b in prop::collection::vec(-5i64..6, 4..10),
    ) {
        let sa = Series::from_coeffs(RatField, a.iter().copied().map(Rat::from).collect());
        let sb = Series::from_coeffs(RatField, b.iter().copied().map(Rat::from).collect());
        let prod = sa.mul(&sb);
        prop_assert_eq!(prod.order(), sa.order().min(sb.order()));
        let wider = sa.mul(&sa);
        prop_assert_eq!(wider.order(), sa.order());
    }
}
