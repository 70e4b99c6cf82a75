//! The classical q-Charlier polynomials, rescaled so that their recurrence
//! coefficients are q-analogues of `a + n` and `a n`. The variable `z` is
//! stored in the `x` slot of [`TriPoly`].

use crate::algebra::{binomial, qbinomial, qint, qstirling2, LaurentPoly, TriPoly};
use crate::error::Result;
use crate::moments::MomentFunctional;

fn a_times(c: LaurentPoly) -> TriPoly {
    TriPoly::monomial(c, 1, 0)
}

/// The explicit sum defining the rescaled monic family.
pub fn classical_explicit(n: usize) -> TriPoly {
    let mut out = TriPoly::zero();
    let mut falling = TriPoly::one();
    for k in 0..=n {
        if k > 0 {
            let i = k - 1;
            let factor = &TriPoly::monomial(LaurentPoly::qpow(i as i64), 0, 1)
                - &TriPoly::from_laurent(qint(i));
            falling = &falling * &factor;
        }
        let mut c = &qbinomial(n as i64, k as i64) * &LaurentPoly::qpow((k * (k + 1) / 2) as i64);
        if (n - k) % 2 == 1 {
            c = -&c;
        }
        out += &falling.scale(&c).shift((n - k) as u32, 0);
    }
    out.scale(&LaurentPoly::qpow(-((n * n) as i64)))
}

/// `(b_n, lambda_n)` of the rescaled family, as polynomials in `a`.
pub fn classical_recurrence_coeffs(n: usize) -> (TriPoly, TriPoly) {
    let ni = n as i64;
    let one_minus_q = LaurentPoly::from_coeffs(&[1, -1]);
    // 1 + a (1 - q) q^-n
    let bracket = &TriPoly::one() + &a_times(one_minus_q.shift(-ni));
    let b = &bracket.scale(&qint(n).shift(-ni)) + &a_times(LaurentPoly::qpow(-1 - 2 * ni));
    let lambda = bracket.scale(&qint(n).shift(1 - 3 * ni)).shift(1, 0);
    (b, lambda)
}

/// `(b_n, lambda_n)` before rescaling.
pub fn classical_recurrence_coeffs_unscaled(n: usize) -> (TriPoly, TriPoly) {
    let ni = n as i64;
    let mut b = TriPoly::from_laurent(LaurentPoly::qpow(-ni));
    b += &a_times(LaurentPoly::from_terms([
        (-1 - 2 * ni, 1),
        (-2 * ni, 1),
        (-ni, -1),
    ]));
    // -a q^(1-2n) (1 - q^-n) (1 + a q^-n)
    let first = LaurentPoly::from_terms([(1 - 2 * ni, -1), (1 - 3 * ni, 1)]);
    let lambda = &a_times(first.clone()) + &TriPoly::monomial(first.shift(-ni), 2, 0);
    (b, lambda)
}

fn three_term(n_max: usize, coeffs: impl Fn(usize) -> (TriPoly, TriPoly)) -> Vec<TriPoly> {
    let mut out = vec![TriPoly::one()];
    let mut prev = TriPoly::zero();
    for n in 0..n_max {
        let (b, lambda) = coeffs(n);
        let next = &(&(&TriPoly::x() - &b) * &out[n]) - &(&lambda * &prev);
        prev = out[n].clone();
        out.push(next);
    }
    out
}

/// The rescaled family generated from its three-term recurrence.
pub fn classical_from_recurrence(n_max: usize) -> Vec<TriPoly> {
    three_term(n_max, classical_recurrence_coeffs)
}

/// The unscaled monic family generated from its three-term recurrence.
pub fn classical_unscaled_from_recurrence(n_max: usize) -> Vec<TriPoly> {
    three_term(n_max, classical_recurrence_coeffs_unscaled)
}

/// Moments of the rescaled family,
/// `mu_n = sum_j q^(-C(j,2) - n) S_{1/q}(n, j) a^j`.
pub fn classical_moments(n_max: usize) -> MomentFunctional {
    let mu = (0..=n_max)
        .map(|n| {
            let mut m = TriPoly::zero();
            for j in 0..=n {
                let c = qstirling2(n, j)
                    .invert_q()
                    .shift(-((j * j.saturating_sub(1) / 2 + n) as i64));
                m.add_term(j as u32, 0, c);
            }
            m
        })
        .collect();
    MomentFunctional::new(mu)
}

/// Moments of the unscaled family, `prod_{i=1}^n (1 + a q^-i)`.
pub fn classical_moments_product(n_max: usize) -> MomentFunctional {
    let mut mu = vec![TriPoly::one()];
    for i in 1..=n_max {
        let factor = &TriPoly::one() + &a_times(LaurentPoly::qpow(-(i as i64)));
        let next = &mu[i - 1] * &factor;
        mu.push(next);
    }
    MomentFunctional::new(mu)
}

/// The product moments pushed through `a -> a (1 - q)` and
/// `x = 1 + z (1 - q)`: `mu^_n = (1-q)^-n sum_k C(n,k) (-1)^(n-k) mu_k`.
pub fn classical_moments_rescaled(n_max: usize) -> Result<MomentFunctional> {
    let one_minus_q = LaurentPoly::from_coeffs(&[1, -1]);
    let product = classical_moments_product(n_max);
    let scaled: Vec<TriPoly> = product
        .moments()
        .iter()
        .map(|m| {
            let mut out = TriPoly::zero();
            for ((ae, xe), c) in m.terms() {
                out.add_term(ae, xe, c * &one_minus_q.pow(ae));
            }
            out
        })
        .collect();
    let mut mu = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut sum = TriPoly::zero();
        for (k, m) in scaled.iter().enumerate().take(n + 1) {
            let mut c = binomial(n as i64, k as i64);
            if (n - k) % 2 == 1 {
                c = -c;
            }
            sum += &m.scale(&LaurentPoly::constant(c));
        }
        let den = one_minus_q.pow(n as u32);
        let mut out = TriPoly::zero();
        for ((ae, xe), c) in sum.terms() {
            out.add_term(ae, xe, c.exact_divide(&den)?);
        }
        mu.push(out);
    }
    Ok(MomentFunctional::new(mu))
}

/// Whether some `a`-coefficient has both a positive and a negative `q`-term.
pub fn has_mixed_signs(p: &TriPoly) -> bool {
    p.terms().any(|(_, c)| {
        let pos = c.terms().any(|(_, v)| v.sign() == num_bigint::Sign::Plus);
        let neg = c.terms().any(|(_, v)| v.sign() == num_bigint::Sign::Minus);
        pos && neg
    })
}
