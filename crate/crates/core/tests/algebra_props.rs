use num_bigint::BigInt;
use proptest::prelude::*;
use qcharlier::algebra::{
    binomial, qbinomial, qfactorial, qint, qstirling1, qstirling2, qstirling2_alternating,
};
use qcharlier::{LaurentPoly, TriPoly};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..6, -20i64..20), 0..6).prop_map(LaurentPoly::from_terms)
}

fn tripoly() -> impl Strategy<Value = TriPoly> {
    prop::collection::vec((0u32..4, 0u32..4, laurent()), 0..5).prop_map(|ts| {
        let mut p = TriPoly::zero();
        for (a, x, c) in ts {
            p.add_term(a, x, c);
        }
        p
    })
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert_eq!(-(-&a), a);
    }

    #[test]
    fn exact_division_undoes_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn invert_q_is_an_involutive_ring_map(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.invert_q().invert_q(), a.clone());
        prop_assert_eq!((&a * &b).invert_q(), &a.invert_q() * &b.invert_q());
    }

    #[test]
    fn rewriting_in_q_minus_one_round_trips(coeffs in prop::collection::vec(-9i64..9, 0..7)) {
        let p = LaurentPoly::from_coeffs(&coeffs);
        let r = p.in_powers_of_q_minus_one().unwrap();
        let back = r.terms().fold(LaurentPoly::zero(), |acc, (k, c)| {
            &acc + &LaurentPoly::from_coeffs(&[-1, 1]).pow(k as u32).scale(c)
        });
        prop_assert_eq!(back, p);
    }

    #[test]
    fn tripoly_ring_axioms(a in tripoly(), b in tripoly(), c in tripoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(TriPoly::from_entries(a.entries()), a);
    }

    #[test]
    fn q_one_is_a_ring_map(a in tripoly(), b in tripoly()) {
        prop_assert_eq!((&a * &b).at_q_one(), &a.at_q_one() * &b.at_q_one());
    }

    #[test]
    fn q_pascal(n in 1i64..12, k in 0i64..12) {
        let lhs = qbinomial(n, k);
        let rhs = &qbinomial(n - 1, k - 1) + &qbinomial(n - 1, k).shift(k);
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(&lhs, &qbinomial(n, n - k));
        prop_assert_eq!(lhs.eval_one(), binomial(n, k));
    }

    #[test]
    fn stirling_paths_agree(n in 0usize..9, k in 0usize..9) {
        prop_assert_eq!(qstirling2(n, k), qstirling2_alternating(n, k));
    }
}

#[test]
fn q_numbers_at_one() {
    for n in 0..10 {
        assert_eq!(qint(n).eval_one(), BigInt::from(n));
        let f: u64 = (1..=n as u64).product();
        assert_eq!(qfactorial(n).eval_one(), BigInt::from(f));
    }
}

#[test]
fn stirling_inversion() {
    for n in 0..7 {
        for m in 0..7 {
            let mut sum = LaurentPoly::zero();
            for k in 0..=n {
                let t = &qstirling1(n, k) * &qstirling2(k, m);
                sum += &if (n - k) % 2 == 1 { -&t } else { t };
            }
            assert_eq!(sum.is_one(), n == m, "({n}, {m})");
            assert_eq!(sum.is_zero(), n != m, "({n}, {m})");
        }
    }
}
