//! Property tests of the algebraic invariants.

mod common;

use cmline::exactalg::{
    binomial_fit, derivative_at_zero, from_binomial_basis, q, to_binomial_basis, Rational, RationalFunctionEps, UniPoly,
};
use cmline::family::{fibred_product, proj_bundle, scale, twist, FamilyData};
use cmline::lines::{cm_degree_intersection, cm_degree_lambda, cm_prime_degree, futaki, WeightData};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=7).prop_map(|(n, d)| q(n, d))
}

fn poly(max_degree: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_rational(), 1..=max_degree + 1).prop_map(UniPoly::new)
}

fn split_degrees() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 2..=4)
}

fn same_profile(a: &FamilyData, b: &FamilyData) -> bool {
    a.clone().with_label("") == b.clone().with_label("")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn binomial_round_trip(p in poly(12)) {
        let c = to_binomial_basis(&p).unwrap();
        prop_assert_eq!(from_binomial_basis(&c), p);
    }

    #[test]
    fn integer_valued_polys_have_integral_binomial_coefficients(
        ints in prop::collection::vec(-50i64..=50, 1..=10)
    ) {
        // Σ c_i C(k, i) sampled at k = 0..=d+2 and refitted
        let coeffs: Vec<Rational> = ints.iter().map(|&c| Rational::from(c)).collect();
        let p = from_binomial_basis(&coeffs);
        let samples: Vec<Rational> = (0..=coeffs.len() as i64 * 2 + 2).map(|k| p.eval_int(k)).collect();
        for s in &samples {
            prop_assert!(s.is_integer());
        }
        let fitted = binomial_fit(&samples, coeffs.len().saturating_sub(1)).unwrap();
        for c in &fitted {
            prop_assert!(c.is_integer());
        }
        prop_assert_eq!(fitted, coeffs);
    }

    #[test]
    fn derivative_at_zero_matches_series_and_difference_quotient(
        num in poly(4),
        den_tail in prop::collection::vec(-10i64..=10, 0..=3),
        d0 in prop_oneof![12i64..=20, -20i64..=-12],
    ) {
        let mut den = vec![d0];
        den.extend(den_tail);
        let den = UniPoly::from_ints(&den);
        let f = RationalFunctionEps::new(num.clone(), den.clone()).unwrap();
        let slope = derivative_at_zero(&f).unwrap();
        // power series: c0 = n0/d0, c1 = (n1 − c0·d1)/d0
        let c0 = num.coeff(0) / den.coeff(0);
        let c1 = (num.coeff(1) - &c0 * den.coeff(1)) / den.coeff(0);
        prop_assert_eq!(&slope, &c1);
        let h = q(1, 1_000_000_000);
        let quotient = (num.eval(&h) / den.eval(&h) - &c0) / &h;
        prop_assert!((quotient - &slope).abs() < q(1, 1000));
    }

    #[test]
    fn twist_and_scale_compose(degrees in split_degrees(), s in small_rational(), t in small_rational(), a in 1i64..=4, b in 1i64..=4) {
        let f = proj_bundle(1, &degrees).unwrap();
        prop_assert!(same_profile(&twist(&twist(&f, &s).unwrap(), &t).unwrap(), &twist(&f, &(&s + &t)).unwrap()));
        prop_assert!(same_profile(&scale(&scale(&f, a).unwrap(), b).unwrap(), &scale(&f, a * b).unwrap()));
        // (L ⊗ π*O(t/a))^a = L^a ⊗ π*O(t)
        let left = twist(&scale(&f, a).unwrap(), &t).unwrap();
        let right = scale(&twist(&f, &(&t / &Rational::from(a))).unwrap(), a).unwrap();
        prop_assert!(same_profile(&left, &right));
    }

    #[test]
    fn product_commutes_and_cm_prime_adds(d1 in split_degrees(), d2 in split_degrees(), t in small_rational()) {
        let f = twist(&proj_bundle(0, &d1).unwrap(), &t).unwrap();
        let g = proj_bundle(0, &d2).unwrap();
        let fg = fibred_product(&f, &g).unwrap();
        prop_assert!(same_profile(&fg, &fibred_product(&g, &f).unwrap()));
        prop_assert_eq!(
            cm_prime_degree(&fg).unwrap(),
            cm_prime_degree(&f).unwrap() + cm_prime_degree(&g).unwrap()
        );
    }

    #[test]
    fn futaki_is_invariant_under_linearisation_shift(
        degrees in split_degrees(), b0 in small_rational(), b1 in small_rational(), c in small_rational()
    ) {
        let f = proj_bundle(0, &degrees).unwrap();
        let w = WeightData { b0: b0.clone(), b1: b1.clone() };
        let shifted = WeightData { b0: &b0 + &c * f.a0(), b1: &b1 + &c * f.a1() };
        prop_assert_eq!(futaki(&f, &w), futaki(&f, &shifted));
        let proportional = WeightData { b0: &c * f.a0(), b1: &c * f.a1() };
        prop_assert!(futaki(&f, &proportional).is_zero());
        let n = f.n() as u32;
        prop_assert_eq!(futaki(&f, &w), common::futaki_by_hand(n, &f.a0(), &f.a1(), &b0, &b1));
    }

    #[test]
    fn cm_routes_agree_on_twisted_split_bundles(degrees in split_degrees(), genus in 0u32..=3, t in small_rational(), r in 1i64..=3) {
        let f = scale(&twist(&proj_bundle(genus, &degrees).unwrap(), &t).unwrap(), r).unwrap();
        let by_lambda = cm_degree_lambda(&f).unwrap();
        prop_assert_eq!(&cm_degree_intersection(&f), &by_lambda);
        prop_assert!(by_lambda.is_zero());
    }
}
