//! Positivity and symmetry properties of the linearization coefficients, and
//! the cancelling pair showing the final fixed-point set is not optimal.

use crate::algebra::{LaurentPoly, SignedMonomial, TriPoly};
use crate::config::TripleConfig;
use crate::error::Result;
use crate::moments::linearization_bruteforce;

use super::formulas::double_sum;
use super::involutions::in_fix5;
use super::wtilde::fix5_with_b2;

/// `L_q(C_n1 ... C_nk)` through the moment functional.
pub fn linearization_k(ns: &[usize]) -> TriPoly {
    linearization_bruteforce(ns)
}

/// The coefficient of `a^max(ns)` is a polynomial in `q` with nonnegative
/// coefficients, and no lower power of `a` occurs.
pub fn lowest_coefficient_positive(ns: &[usize]) -> bool {
    let l = linearization_k(ns);
    let top = ns.iter().copied().max().unwrap_or(0) as u32;
    if l.is_zero() {
        return true;
    }
    let c = l.coeff_a(top);
    l.lowest_a_power() == Some(top) && c.is_polynomial() && c.has_nonnegative_coeffs()
}

/// For `n3 >= n1 >= n2`, the coefficient of `a^(n1+n2-i)` equals
/// `(q-1)^(n1+n2-n3-2i)` times that of `a^(n3+i)`.
pub fn coefficient_symmetry(n1: usize, n2: usize, n3: usize) -> Result<bool> {
    let l = double_sum(n1, n2, n3)?;
    if n1 + n2 < n3 {
        return Ok(l.is_zero());
    }
    let d = n1 + n2 - n3;
    let q_minus_one = LaurentPoly::from_coeffs(&[-1, 1]);
    Ok((0..=d / 2).all(|i| {
        let high = l.coeff_a((n1 + n2 - i) as u32);
        let low = l.coeff_a((n3 + i) as u32);
        high == &q_minus_one.pow((d - 2 * i) as u32) * &low
    }))
}

/// Every `a`-coefficient, rewritten in powers of `r = q - 1`, has
/// nonnegative coefficients.
pub fn positive_in_r(value: &TriPoly) -> Result<bool> {
    for (_, c) in value.terms() {
        if !c.in_powers_of_q_minus_one()?.has_nonnegative_coeffs() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The two final fixed points of `L(2, 2, 2)` with weights `-a^3 q^3` and
/// `a^3 q^3`: `B_2 = {2}` with `w = 12121`, and `B_2` empty with
/// `w = 123123`.
pub fn cancelling_witnesses() -> [(TripleConfig, SignedMonomial); 2] {
    let find = |b2: &[usize], word: &[u32]| {
        let c = fix5_with_b2([2, 2, 2], b2)
            .into_iter()
            .find(|c| c.word() == word)
            .expect("witness is a final fixed point");
        debug_assert!(in_fix5(&c));
        let w = c.weight();
        (c, w)
    };
    [find(&[2], &[1, 2, 1, 2, 1]), find(&[], &[1, 2, 3, 1, 2, 3])]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regression_triple_symmetry() {
        assert!(coefficient_symmetry(2, 1, 2).unwrap());
        let l = double_sum(2, 1, 2).unwrap();
        assert!(positive_in_r(&l).unwrap());
        assert!(lowest_coefficient_positive(&[2, 2, 1]));
    }

    #[test]
    fn four_factors() {
        assert!(lowest_coefficient_positive(&[1, 1, 1, 1]));
        assert!(positive_in_r(&linearization_k(&[1, 1, 1, 1])).unwrap());
    }

    #[test]
    fn witnesses_cancel() {
        let [(_, w1), (_, w2)] = cancelling_witnesses();
        assert_eq!(w1, SignedMonomial::new(true, 3, 0, 3));
        assert_eq!(w2, SignedMonomial::new(false, 3, 0, 3));
    }
}
