//! Closed forms for `L_q(C_n1 C_n2 C_n3)`.

use num_bigint::BigInt;

use crate::algebra::{qbinomial, qfactorial, LaurentPoly, TriPoly};
use crate::error::{Error, Result};

fn c2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn qfact(n: i64) -> LaurentPoly {
    qfactorial(n as usize)
}

fn product(factors: &[LaurentPoly]) -> LaurentPoly {
    factors.iter().fold(LaurentPoly::one(), |acc, f| &acc * f)
}

fn check_order(n1: usize, n2: usize, n3: usize) -> Result<()> {
    if n3 >= n1 && n1 >= n2 {
        Ok(())
    } else {
        Err(Error::DomainViolation(format!(
            "need n3 >= n1 >= n2, got ({n1}, {n2}, {n3})"
        )))
    }
}

/// Orders an arbitrary triple as `(n1, n2, n3)` with `n3 >= n1 >= n2`. The
/// functional applied to a product does not see the order of the factors.
pub fn canonical_order(sizes: [usize; 3]) -> [usize; 3] {
    let mut s = sizes;
    s.sort_unstable();
    [s[1], s[0], s[2]]
}

/// The double sum over `(l, j)` with exponent `K`.
pub fn double_sum(n1: usize, n2: usize, n3: usize) -> Result<TriPoly> {
    check_order(n1, n2, n3)?;
    let (n1, n2, n3) = (n1 as i64, n2 as i64, n3 as i64);
    let q_minus_one = LaurentPoly::from_coeffs(&[-1, 1]);
    let mut out = TriPoly::zero();
    for l in 0..=n1 + n2 - n3 {
        let mut coeff = LaurentPoly::zero();
        for j in 0..=l {
            let binoms = [
                qbinomial(n2, l - j),
                qbinomial(n1, j),
                qbinomial(n2 - l + j, n3 - n1 + j),
                qbinomial(n1 + n2 - n3 - l, j),
            ];
            if binoms.iter().any(LaurentPoly::is_zero) {
                continue;
            }
            let k = c2(l - j)
                + c2(n1)
                + j * (-n3 - j + 1)
                + c2(j)
                + c2(n2 - l + j)
                + (n3 - n1 + j) * (n3 - n2 + l)
                + j * (n3 - n2 + l);
            let num = product(&[
                LaurentPoly::qpow(k),
                q_minus_one.pow((l - j) as u32),
                qfact(n1 - j),
                qfact(n3),
                qfact(j),
                qfact(n1 - j),
                product(&binoms),
            ]);
            let den = &qfact(n1 - l) * &qfact(n3 - n2 + l);
            coeff += &num.exact_divide(&den)?;
        }
        out.add_term((n3 + l) as u32, 0, coeff);
    }
    Ok(out)
}

/// The triple sum over `(l, s, j)` with exponent `L`, before the `s`-sum is
/// collapsed by the q-binomial theorem.
pub fn triple_sum(n1: usize, n2: usize, n3: usize) -> Result<TriPoly> {
    check_order(n1, n2, n3)?;
    let (n1, n2, n3) = (n1 as i64, n2 as i64, n3 as i64);
    let mut out = TriPoly::zero();
    for l in 0..=n1 + n2 - n3 {
        let mut coeff = LaurentPoly::zero();
        for s in 0..=l {
            for j in 0..=s {
                let binoms = [
                    qbinomial(n2, l - s),
                    qbinomial(n1, j),
                    qbinomial(n3 - n1 + s, s - j),
                    qbinomial(n2 - l + s, n3 - n1 + s),
                    qbinomial(n1 + n2 - n3 - l, j),
                ];
                if binoms.iter().any(LaurentPoly::is_zero) {
                    continue;
                }
                let big_l = c2(n1) + c2(l - s) + j * (-n3 - s + 1) + c2(j)
                    - c2(s - j)
                    - (s - j) * (n3 - n1 + j)
                    + c2(n2 - l + s)
                    + (n3 - n1 + s) * (n3 - n2 + l)
                    + j * (n3 - n2 + l);
                let num = product(&[
                    LaurentPoly::qpow(big_l),
                    qfact(n3),
                    qfact(j),
                    qfact(n1 - j),
                    product(&binoms),
                ]);
                let mut term = num.exact_divide(&qfact(n3 - n2 + l))?;
                if (l - s) % 2 == 1 {
                    term = -&term;
                }
                coeff += &term;
            }
        }
        out.add_term((n3 + l) as u32, 0, coeff);
    }
    Ok(out)
}

/// `L_q(C_n1 C_n2 C_n3)` for any triple, through [`double_sum`] after
/// reordering. Empty when the largest index exceeds the sum of the others.
pub fn linearization_formula(sizes: [usize; 3]) -> Result<TriPoly> {
    let [n1, n2, n3] = canonical_order(sizes);
    double_sum(n1, n2, n3)
}

/// The closed form of `sum q^ls(w_a w~_b)` over `Fix W~(j)`, exponent `A`.
pub fn fix_wtilde_closed(
    n1: usize,
    n2: usize,
    n3: usize,
    l: usize,
    s: usize,
    j: usize,
) -> Result<LaurentPoly> {
    let (n1, n2, n3, l, s, j) = (
        n1 as i64, n2 as i64, n3 as i64, l as i64, s as i64, j as i64,
    );
    if n3 - n2 + l < 0 || j > n1 {
        return Ok(LaurentPoly::zero());
    }
    let binoms = [
        qbinomial(n2 - l + s, n3 - n1 + s),
        qbinomial(n1 + n2 - n3 - l, j),
    ];
    if binoms.iter().any(LaurentPoly::is_zero) {
        return Ok(LaurentPoly::zero());
    }
    let a = c2(n1) + c2(n2 - l + s) + (n3 - n1 + s + j) * (n3 - n2 + l);
    product(&[
        LaurentPoly::qpow(a),
        qfact(j),
        qfact(n1 - j),
        product(&binoms),
    ])
    .exact_divide(&qfact(n3 - n2 + l))
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

/// The `q = 1` value, a polynomial in `a` with positive integer
/// coefficients. Terms with a negative factorial argument vanish, so any
/// order of the triple works.
pub fn q1_formula(sizes: [usize; 3]) -> TriPoly {
    let [n1, n2, n3] = sizes.map(|n| n as i64);
    let mut out = TriPoly::zero();
    let mut l = 0;
    while n1 + n2 - n3 - 2 * l >= 0 {
        let parts = [l, n3 - n2 + l, n3 - n1 + l, n1 + n2 - n3 - 2 * l];
        if parts.iter().all(|&p| p >= 0) {
            let num = factorial(n1) * factorial(n2) * factorial(n3);
            let den: BigInt = parts.iter().map(|&p| factorial(p)).product();
            out.add_term((n3 + l) as u32, 0, LaurentPoly::constant(num / den));
        }
        l += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn regression() -> TriPoly {
        let mut want = TriPoly::zero();
        want.add_term(2, 0, LaurentPoly::from_coeffs(&[0, 1, 2, 1]));
        want.add_term(3, 0, LaurentPoly::from_coeffs(&[0, -1, -1, 1, 1]));
        want
    }

    #[test]
    fn regression_triple() {
        assert_eq!(double_sum(2, 1, 2).unwrap(), regression());
        assert_eq!(triple_sum(2, 1, 2).unwrap(), regression());
        assert_eq!(linearization_formula([2, 2, 1]).unwrap(), regression());
    }

    #[test]
    fn orthogonality_cases() {
        assert_eq!(double_sum(1, 0, 1).unwrap(), TriPoly::a());
        assert!(double_sum(1, 0, 2).unwrap().is_zero());
        assert!(matches!(
            double_sum(1, 2, 3),
            Err(Error::DomainViolation(_))
        ));
    }

    #[test]
    fn q_one_values() {
        assert_eq!(q1_formula([1, 1, 0]), TriPoly::a());
        let mut four_a2 = TriPoly::zero();
        four_a2.add_term(2, 0, LaurentPoly::constant(4));
        assert_eq!(q1_formula([2, 2, 1]).coeff_a(2), four_a2.coeff_a(2));
        assert!(q1_formula([1, 1, 3]).is_zero());
        for t in [[2, 2, 1], [3, 2, 2], [1, 3, 2]] {
            assert_eq!(linearization_formula(t).unwrap().at_q_one(), q1_formula(t));
        }
    }
}
