//! Moments and the linear functional they define.

use crate::algebra::{
    qfactorial, qstirling2, qstirling2_alternating, LaurentPoly, MonomialSum, SignedMonomial,
    TriPoly,
};
use crate::charlier::{charlier_sequence, poly_product};
use crate::error::{Error, Result};
use crate::partitions::rg_words;

/// `mu_0, ..., mu_N`; applying it sends `x^k` to `mu_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentFunctional {
    mu: Vec<TriPoly>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingPath {
    Recurrence,
    Alternating,
}

impl MomentFunctional {
    pub fn new(mu: Vec<TriPoly>) -> Self {
        Self { mu }
    }

    pub fn moments(&self) -> &[TriPoly] {
        &self.mu
    }

    pub fn max_degree(&self) -> usize {
        self.mu.len().saturating_sub(1)
    }

    pub fn apply(&self, p: &TriPoly) -> Result<TriPoly> {
        apply_functional(p, self)
    }
}

/// `mu_n = sum_k S_q(n, k) a^k`.
pub fn moments_closed(n_max: usize, path: StirlingPath) -> MomentFunctional {
    let mu = (0..=n_max)
        .map(|n| {
            let mut m = TriPoly::zero();
            for k in 0..=n {
                let s = match path {
                    StirlingPath::Recurrence => qstirling2(n, k),
                    StirlingPath::Alternating => qstirling2_alternating(n, k),
                };
                m.add_term(k as u32, 0, s);
            }
            m
        })
        .collect();
    MomentFunctional { mu }
}

/// `mu_n = sum a^#blocks q^rs` over all set partitions of `[n]`.
pub fn moments_enumerated(n_max: usize) -> MomentFunctional {
    let mu = (0..=n_max)
        .map(|n| {
            rg_words(n)
                .map(|w| SignedMonomial::new(false, w.num_blocks(), 0, w.stats().rs as i64))
                .collect::<MonomialSum>()
                .to_tripoly()
        })
        .collect();
    MomentFunctional { mu }
}

/// Replaces each `x^k` by `mu_k`.
pub fn apply_functional(p: &TriPoly, m: &MomentFunctional) -> Result<TriPoly> {
    let degree = p.x_degree().unwrap_or(0) as usize;
    if degree >= m.mu.len() {
        return Err(Error::DegreeExceeded {
            degree,
            available: m.mu.len(),
        });
    }
    let mut out = TriPoly::zero();
    for ((i, j), c) in p.terms() {
        out += &m.mu[j as usize].scale(c).shift(i, 0);
    }
    Ok(out)
}

/// `L(C_n C_m)`.
pub fn orthogonality_check(n: usize, m: usize) -> TriPoly {
    let cs = charlier_sequence(n.max(m));
    let mf = moments_closed(n + m, StirlingPath::Recurrence);
    apply_functional(&(&cs[n] * &cs[m]), &mf).expect("enough moments were computed")
}

/// `a^n q^C(n,2) [n]_q!`.
pub fn squared_norm(n: usize) -> TriPoly {
    let e = (n * n.saturating_sub(1) / 2) as i64;
    TriPoly::monomial(qfactorial(n).shift(e), n as u32, 0)
}

/// `L(C_n1 C_n2 ... C_nk)` through the moments.
pub fn linearization_bruteforce(ns: &[usize]) -> TriPoly {
    let top = ns.iter().copied().max().unwrap_or(0);
    let cs = charlier_sequence(top);
    let product = poly_product(&ns.iter().map(|&n| cs[n].clone()).collect::<Vec<_>>());
    let mf = moments_closed(ns.iter().sum(), StirlingPath::Recurrence);
    apply_functional(&product, &mf).expect("enough moments were computed")
}

/// Sets `a = 1` in an `x`-free polynomial.
pub fn at_a_one(p: &TriPoly) -> LaurentPoly {
    p.terms().fold(LaurentPoly::zero(), |acc, (_, c)| &acc + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charlier::charlier_recurrence;

    #[test]
    fn first_moments() {
        let m = moments_closed(3, StirlingPath::Recurrence);
        assert_eq!(m.moments()[0], TriPoly::one());
        assert_eq!(m.moments()[2], &TriPoly::a() + &TriPoly::a().pow(2));
        let mut mu3 = TriPoly::a();
        mu3.add_term(2, 0, LaurentPoly::from_coeffs(&[2, 1]));
        mu3.add_term(3, 0, LaurentPoly::one());
        assert_eq!(m.moments()[3], mu3);
    }

    #[test]
    fn three_moment_routes() {
        let e = moments_enumerated(8);
        assert_eq!(moments_closed(8, StirlingPath::Recurrence), e);
        assert_eq!(moments_closed(8, StirlingPath::Alternating), e);
    }

    #[test]
    fn functional_basics() {
        let m = moments_closed(4, StirlingPath::Recurrence);
        assert_eq!(
            apply_functional(&TriPoly::one(), &m).unwrap(),
            TriPoly::one()
        );
        assert!(apply_functional(&charlier_recurrence(1), &m)
            .unwrap()
            .is_zero());
        assert!(matches!(
            apply_functional(&TriPoly::x().pow(5), &m),
            Err(Error::DegreeExceeded { .. })
        ));
        let expect = TriPoly::monomial(LaurentPoly::from_coeffs(&[0, 1, 1]), 2, 0);
        assert_eq!(orthogonality_check(2, 2), expect);
        assert!(orthogonality_check(0, 1).is_zero());
    }
}
