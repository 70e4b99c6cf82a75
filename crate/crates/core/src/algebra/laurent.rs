//! Sparse Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A finite sum `sum c_e q^e` with `e` any signed integer.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::qpow(1)
    }

    /// `q^exp`, with `exp` possibly negative.
    pub fn qpow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds `sum coeffs[i] q^i`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (e, &c) in coeffs.iter().enumerate() {
            p.add_term(e as i64, BigInt::from(c));
        }
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Adds `c q^exp` in place, pruning a coefficient that cancels to zero.
    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Iterates `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when no negative power of `q` occurs.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The substitution `q -> 1/q`.
    pub fn invert_q(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Rewrites a polynomial in `q` as a polynomial in `r = q - 1`.
    pub fn in_powers_of_q_minus_one(&self) -> Result<Self> {
        if !self.is_polynomial() {
            return Err(Error::InvalidInput(format!(
                "cannot substitute q = 1 + r into {self}: negative powers of q"
            )));
        }
        let one_plus_r = Self::from_coeffs(&[1, 1]);
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out += &one_plus_r.pow(e as u32).scale(c);
        }
        Ok(out)
    }

    /// Exact quotient `self / den` in the Laurent ring `Z[q, 1/q]`.
    ///
    /// Fails with [`Error::NotDivisible`] when a nonzero remainder is left or
    /// an integer coefficient would not divide evenly.
    pub fn exact_divide(&self, den: &LaurentPoly) -> Result<Self> {
        let (Some(den_lo), Some(den_hi)) = (den.min_exp(), den.max_exp()) else {
            return Err(Error::InvalidInput(
                "division by the zero polynomial".into(),
            ));
        };
        let Some(num_lo) = self.min_exp() else {
            return Ok(Self::zero());
        };
        let not_divisible = || Error::NotDivisible {
            numerator: self.to_string(),
            denominator: den.to_string(),
        };
        // Normalise both to genuine polynomials with nonzero constant term.
        let mut rem = self.shift(-num_lo);
        let d = den.shift(-den_lo);
        let d_deg = den_hi - den_lo;
        let lead = d.coeff(d_deg);
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exp() {
            if top < d_deg {
                return Err(not_divisible());
            }
            let (c, r) = rem.coeff(top).div_rem(&lead);
            if !r.is_zero() {
                return Err(not_divisible());
            }
            let k = top - d_deg;
            rem -= &d.scale(&c).shift(k);
            quot.add_term(k, c);
        }
        Ok(quot.shift(num_lo - den_lo))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident, $ty:ty) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
    };
}
pub(crate) use forward_owned_binop;

forward_owned_binop!(Add, add, LaurentPoly);
forward_owned_binop!(Sub, sub, LaurentPoly);
forward_owned_binop!(Mul, mul, LaurentPoly);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(coeffs)
    }

    #[test]
    fn zero_is_canonical() {
        let a = p(&[1, 2, 3]);
        assert!((&a - &a).is_zero());
        assert_eq!(p(&[0, 0, 0]), LaurentPoly::zero());
        assert_eq!((&a - &a).num_terms(), 0);
    }

    #[test]
    fn divide_difference_of_squares() {
        let num = p(&[-1, 0, 1]);
        let den = p(&[-1, 1]);
        assert_eq!(num.exact_divide(&den).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn division_by_monomial_is_a_shift() {
        let num = p(&[1, 1]);
        let got = num.exact_divide(&LaurentPoly::q()).unwrap();
        assert_eq!(got, LaurentPoly::from_terms([(-1, 1), (0, 1)]));
    }

    #[test]
    fn non_divisible_is_reported() {
        let err = p(&[1, 0, 1]).exact_divide(&p(&[1, 1])).unwrap_err();
        assert!(matches!(err, Error::NotDivisible { .. }));
        // Integer content must divide too.
        assert!(p(&[1, 1]).exact_divide(&LaurentPoly::constant(2)).is_err());
    }

    #[test]
    fn substitute_q_minus_one() {
        // q^2 = (1 + r)^2 = 1 + 2r + r^2
        let got = LaurentPoly::qpow(2).in_powers_of_q_minus_one().unwrap();
        assert_eq!(got, p(&[1, 2, 1]));
        assert!(LaurentPoly::qpow(-1).in_powers_of_q_minus_one().is_err());
    }

    #[test]
    fn display_is_descending() {
        let x = LaurentPoly::from_terms([(-2, 3), (0, -1), (1, 1)]);
        assert_eq!(x.to_string(), "q - 1 + 3*q^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i64..5, -6i64..7), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn product_divides_back(a in arb_laurent(), b in arb_laurent()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_divide(&b).unwrap(), a);
        }
    }
}
