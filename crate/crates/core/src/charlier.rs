//! The q-Charlier polynomials `C_n(x, a; q)` by recurrence, explicit sum and
//! partial-permutation enumeration.

use crate::algebra::{qbinomial, qint, LaurentPoly, MonomialSum, TriPoly};
use crate::perm::{CyclePermutation, PartialPermutation};

/// `C_0, ..., C_n` from `C_{k+1} = (x - a q^k - [k]) C_k - a [k] q^(k-1) C_{k-1}`.
pub fn charlier_sequence(n: usize) -> Vec<TriPoly> {
    let mut out = vec![TriPoly::one()];
    let x = TriPoly::x();
    for k in 0..n {
        let qk = qint(k);
        let mut factor = &x - &TriPoly::monomial(LaurentPoly::qpow(k as i64), 1, 0);
        factor -= &TriPoly::from_laurent(qk.clone());
        let mut next = &factor * &out[k];
        if k > 0 {
            let c = TriPoly::monomial(qk.shift(k as i64 - 1), 1, 0);
            next -= &(&c * &out[k - 1]);
        }
        out.push(next);
    }
    out
}

pub fn charlier_recurrence(n: usize) -> TriPoly {
    charlier_sequence(n).pop().unwrap()
}

/// `prod_{i<k} (x - [i]_q)` by direct multiplication.
pub fn falling_product(k: usize) -> TriPoly {
    (0..k).fold(TriPoly::one(), |acc, i| {
        &acc * &(&TriPoly::x() - &TriPoly::from_laurent(qint(i)))
    })
}

/// `prod_{i<k} (x - [i]_q)` as `sum (-1)^(k - cyc) q^inv x^cyc` over permutations of `[k]`.
pub fn falling_product_by_permutations(k: usize) -> TriPoly {
    let elems: Vec<usize> = (1..=k).collect();
    CyclePermutation::all(&elems)
        .into_iter()
        .map(|s| PartialPermutation::from_parts(k, Vec::new(), s).weight())
        .collect::<MonomialSum>()
        .to_tripoly()
}

/// `sum_k [n, k] (-a)^(n-k) q^C(n-k, 2) prod_{i<k} (x - [i])`.
pub fn charlier_explicit(n: usize) -> TriPoly {
    let mut out = TriPoly::zero();
    for k in 0..=n {
        let d = (n - k) as i64;
        let mut c = qbinomial(n as i64, k as i64).shift(d * (d - 1) / 2);
        if d % 2 == 1 {
            c = -c;
        }
        out += &falling_product(k).scale(&c).shift(d as u32, 0);
    }
    out
}

/// Sum of the partial permutation weights over `[n]`.
pub fn charlier_combinatorial(n: usize) -> TriPoly {
    PartialPermutation::all(n)
        .iter()
        .map(PartialPermutation::weight)
        .collect::<MonomialSum>()
        .to_tripoly()
}

pub fn poly_product(ps: &[TriPoly]) -> TriPoly {
    ps.iter().fold(TriPoly::one(), |acc, p| &acc * p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degrees() {
        assert_eq!(charlier_recurrence(0), TriPoly::one());
        let c1 = &TriPoly::x() - &TriPoly::a();
        assert_eq!(charlier_recurrence(1), c1);
        let mut c2 = TriPoly::zero();
        c2.add_term(0, 2, LaurentPoly::one());
        c2.add_term(0, 1, LaurentPoly::constant(-1));
        c2.add_term(1, 1, LaurentPoly::from_coeffs(&[-1, -1]));
        c2.add_term(2, 0, LaurentPoly::q());
        assert_eq!(charlier_recurrence(2), c2);
        assert_eq!(charlier_explicit(2), c2);
        assert_eq!(charlier_combinatorial(2), c2);
        assert_eq!(poly_product(&[]), TriPoly::one());
    }

    #[test]
    fn falling_products_agree() {
        for k in 0..=6 {
            assert_eq!(falling_product(k), falling_product_by_permutations(k));
        }
    }

    #[test]
    fn three_routes_agree() {
        for n in 0..=6 {
            let r = charlier_recurrence(n);
            assert_eq!(r, charlier_explicit(n), "explicit n={n}");
            assert_eq!(r, charlier_combinatorial(n), "combinatorial n={n}");
        }
    }
}
