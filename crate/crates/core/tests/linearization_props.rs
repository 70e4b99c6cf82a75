use proptest::prelude::*;
use qcharlier::config::enumerate_configs;
use qcharlier::linearization::formulas::{
    canonical_order, double_sum, linearization_formula, q1_formula, triple_sum,
};
use qcharlier::linearization::involutions::in_fix;
use qcharlier::linearization::properties::{coefficient_symmetry, positive_in_r};
use qcharlier::linearization::{phi, Step};
use qcharlier::moments::linearization_bruteforce;
use qcharlier::TriPoly;

fn triple(max: usize) -> impl Strategy<Value = [usize; 3]> {
    [0..=max, 0..=max, 0..=max]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn formula_matches_functional(t in triple(4)) {
        let brute = linearization_bruteforce(&t);
        prop_assert_eq!(linearization_formula(t).unwrap(), brute.clone());
        let [n1, n2, n3] = canonical_order(t);
        prop_assert_eq!(triple_sum(n1, n2, n3).unwrap(), brute.clone());
        prop_assert_eq!(brute.at_q_one(), q1_formula(t));
    }

    #[test]
    fn formula_ignores_factor_order(t in triple(5)) {
        let want = linearization_formula(t).unwrap();
        prop_assert_eq!(linearization_formula([t[2], t[0], t[1]]).unwrap(), want.clone());
        prop_assert_eq!(linearization_formula([t[1], t[0], t[2]]).unwrap(), want.clone());
        prop_assert!(positive_in_r(&want).unwrap());
        let [n1, n2, n3] = canonical_order(t);
        prop_assert!(coefficient_symmetry(n1, n2, n3).unwrap());
    }

    #[test]
    fn involutions_reverse_sign_and_pair_up(t in triple(3), k in 1usize..5, pick in any::<prop::sample::Index>()) {
        let configs: Vec<_> = enumerate_configs(t).collect();
        prop_assume!(!configs.is_empty());
        let c = &configs[pick.index(configs.len())];
        prop_assume!(k == 1 || in_fix(k - 1, c));
        if let Step::Image(d) = phi(k, c).unwrap() {
            prop_assert_eq!(d.weight(), c.weight().negated());
            prop_assert_eq!(phi(k, &d).unwrap(), Step::Image(c.clone()));
        }
    }
}

#[test]
fn outside_the_triangle_is_zero() {
    assert!(linearization_formula([1, 1, 3]).unwrap().is_zero());
    assert!(double_sum(2, 0, 3).unwrap().is_zero());
    assert_eq!(linearization_formula([0, 0, 0]).unwrap(), TriPoly::one());
}
