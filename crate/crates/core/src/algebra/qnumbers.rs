//! `[n]_q`, `[n]_q!`, q-binomials and q-Stirling numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::LaurentPoly;

/// `1 + q + ... + q^(n-1)`.
pub fn qint(n: usize) -> LaurentPoly {
    LaurentPoly::from_terms((0..n as i64).map(|e| (e, 1)))
}

pub fn qfactorial(n: usize) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, i| &acc * &qint(i))
}

/// Gaussian binomial, zero outside `0 <= k <= n`.
pub fn qbinomial(n: i64, k: i64) -> LaurentPoly {
    if n < 0 || k < 0 || k > n {
        return LaurentPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    // row[j] holds [m, j] while m runs up to n
    let mut row = vec![LaurentPoly::one()];
    for m in 1..=n {
        let mut next = vec![LaurentPoly::zero(); (m + 1).min(k + 1)];
        for (j, slot) in next.iter_mut().enumerate() {
            if j > 0 {
                *slot += &row[j - 1];
            }
            if j < row.len() && j < m {
                *slot += &row[j].shift(j as i64);
            }
        }
        row = next;
    }
    row[k].clone()
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `S_q(n, k)` by the triangular recurrence.
pub fn qstirling2(n: usize, k: usize) -> LaurentPoly {
    if k > n {
        return LaurentPoly::zero();
    }
    let mut row = vec![LaurentPoly::one()];
    for m in 1..=n {
        let mut next = vec![LaurentPoly::zero(); m + 1];
        for j in 1..=m {
            let mut v = row[j - 1].clone();
            if j < row.len() {
                v += &(&qint(j) * &row[j]);
            }
            next[j] = v;
        }
        row = next;
    }
    row[k].clone()
}

/// `S_q(n, k)` from the alternating sum, dividing out `(1-q)^(n-k)` exactly.
pub fn qstirling2_alternating(n: usize, k: usize) -> LaurentPoly {
    if k > n {
        return LaurentPoly::zero();
    }
    let (n, k) = (n as i64, k as i64);
    let mut sum = LaurentPoly::zero();
    for j in 0..=n - k {
        let term = qbinomial(k + j, j).scale(&binomial(n, k + j));
        if j % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    let den = LaurentPoly::from_coeffs(&[1, -1]).pow((n - k) as u32);
    sum.exact_divide(&den)
        .expect("the alternating sum is always divisible by (1-q)^(n-k)")
}

/// Signless `c_q(n, k)`, generating function of `q^inv` over permutations with `k` cycles.
pub fn qstirling1(n: usize, k: usize) -> LaurentPoly {
    if k > n {
        return LaurentPoly::zero();
    }
    let mut row = vec![LaurentPoly::one()];
    for m in 1..=n {
        let mut next = vec![LaurentPoly::zero(); m + 1];
        let w = qint(m - 1);
        for j in 0..=m {
            let mut v = LaurentPoly::zero();
            if j > 0 {
                v += &row[j - 1];
            }
            if j < row.len() {
                v += &(&w * &row[j]);
            }
            next[j] = v;
        }
        row = next;
    }
    row[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c)
    }

    #[test]
    fn small_values() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(3), lp(&[1, 1, 1]));
        assert_eq!(qfactorial(3), &lp(&[1, 1]) * &lp(&[1, 1, 1]));
        assert_eq!(qbinomial(4, 2), lp(&[1, 1, 2, 1, 1]));
        assert_eq!(qbinomial(5, 0), LaurentPoly::one());
        assert!(qbinomial(2, 3).is_zero());
        assert!(qbinomial(-1, 0).is_zero());
        assert_eq!(qstirling2(3, 2), lp(&[2, 1]));
        assert_eq!(qstirling2(4, 2), lp(&[3, 3, 1]));
        assert_eq!(qstirling1(3, 1), lp(&[1, 1]));
        assert_eq!(qstirling1(3, 2), lp(&[2, 1]));
        assert_eq!(qstirling1(4, 4), LaurentPoly::one());
    }

    #[test]
    fn two_stirling_paths_agree() {
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(qstirling2(n, k), qstirling2_alternating(n, k), "({n},{k})");
            }
        }
    }

    #[test]
    fn classical_specialisations() {
        let s2 = |n: i64, k: i64| -> i64 {
            (0..=k)
                .map(|j| {
                    let t = binomial(k, j) * BigInt::from(j).pow(n as u32);
                    if (k - j) % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                })
                .sum::<BigInt>()
                .try_into()
                .map(|v: i64| v / (1..=k).product::<i64>())
                .unwrap()
        };
        let mut c1 = vec![vec![0i64; 10]; 10];
        c1[0][0] = 1;
        for n in 1..10 {
            for k in 1..=n {
                c1[n][k] = c1[n - 1][k - 1] + (n as i64 - 1) * c1[n - 1][k];
            }
        }
        for (n, row) in c1.iter().enumerate().take(9) {
            assert_eq!(qint(n).eval_one(), BigInt::from(n));
            for (k, &c) in row.iter().enumerate().take(n + 1) {
                let (ni, ki) = (n as i64, k as i64);
                assert_eq!(qbinomial(ni, ki).eval_one(), binomial(ni, ki));
                assert_eq!(qstirling2(n, k).eval_one(), BigInt::from(s2(ni, ki)));
                assert_eq!(qstirling1(n, k).eval_one(), BigInt::from(c));
            }
        }
    }

    #[test]
    fn nonnegative_coefficients() {
        for n in 0..8 {
            assert!(qfactorial(n).has_nonnegative_coeffs());
            for k in 0..=n as i64 {
                assert!(qbinomial(n as i64, k).has_nonnegative_coeffs());
            }
        }
    }
}
