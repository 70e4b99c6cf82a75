//! Polynomials in `a` and `x` whose coefficients are Laurent polynomials in `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;

use super::laurent::{forward_owned_binop, LaurentPoly};

/// `sum_{i,j} c_{ij}(q) a^i x^j`, keyed by `(a-exponent, x-exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriPoly {
    terms: BTreeMap<(u32, u32), LaurentPoly>,
}

/// One entry of a flattened coefficient listing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TermEntry {
    pub a: u32,
    pub x: u32,
    pub q: i64,
    pub coeff: BigInt,
}

impl TriPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn x() -> Self {
        Self::monomial(LaurentPoly::one(), 0, 1)
    }

    pub fn a() -> Self {
        Self::monomial(LaurentPoly::one(), 1, 0)
    }

    pub fn from_laurent(c: LaurentPoly) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: LaurentPoly, a_exp: u32, x_exp: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(a_exp, x_exp, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a_exp: u32, x_exp: u32, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a_exp, x_exp)).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&(a_exp, x_exp));
        }
    }

    /// Iterates `((a-exp, x-exp), coefficient)` in lexicographic key order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &LaurentPoly)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, a_exp: u32, x_exp: u32) -> LaurentPoly {
        self.terms.get(&(a_exp, x_exp)).cloned().unwrap_or_default()
    }

    /// Coefficient of `a^i` in a polynomial free of `x`.
    pub fn coeff_a(&self, a_exp: u32) -> LaurentPoly {
        self.coeff(a_exp, 0)
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, x)| x).max()
    }

    pub fn a_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    pub fn lowest_a_power(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).min()
    }

    pub fn is_x_free(&self) -> bool {
        self.terms.keys().all(|&(_, x)| x == 0)
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, f(c));
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        self.map_coeffs(|v| v * c)
    }

    /// Multiplies by `a^i x^j`.
    pub fn shift(&self, a_exp: u32, x_exp: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + a_exp, j + x_exp), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes `x -> value`.
    pub fn eval_x(&self, value: &TriPoly) -> Self {
        let mut out = Self::zero();
        let mut powers: Vec<TriPoly> = vec![Self::one()];
        for (&(i, j), c) in &self.terms {
            while powers.len() <= j as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            out += &powers[j as usize].scale(c).shift(i, 0);
        }
        out
    }

    /// Substitutes `a -> value`.
    pub fn eval_a(&self, value: &TriPoly) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out += &value.pow(i).scale(c).shift(0, j);
        }
        out
    }

    /// Substitutes `q = 1`, leaving integer constants as coefficients.
    pub fn at_q_one(&self) -> Self {
        self.map_coeffs(|c| LaurentPoly::constant(c.eval_one()))
    }

    /// Flattened `(a, x, q, c)` listing, sorted lexicographically.
    pub fn entries(&self) -> Vec<TermEntry> {
        let mut out = Vec::new();
        for (&(a, x), c) in &self.terms {
            for (q, coeff) in c.terms() {
                out.push(TermEntry {
                    a,
                    x,
                    q,
                    coeff: coeff.clone(),
                });
            }
        }
        out
    }

    pub fn from_entries<I: IntoIterator<Item = TermEntry>>(entries: I) -> Self {
        let mut out = Self::zero();
        for e in entries {
            out.add_term(e.a, e.x, LaurentPoly::monomial(e.coeff, e.q));
        }
        out
    }
}

impl From<LaurentPoly> for TriPoly {
    fn from(c: LaurentPoly) -> Self {
        Self::from_laurent(c)
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let mut vars = Vec::new();
            match i {
                0 => {}
                1 => vars.push("a".to_string()),
                _ => vars.push(format!("a^{i}")),
            }
            match j {
                0 => {}
                1 => vars.push("x".to_string()),
                _ => vars.push(format!("x^{j}")),
            }
            if vars.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "({c})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&TriPoly> for TriPoly {
    fn add_assign(&mut self, rhs: &TriPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}

impl SubAssign<&TriPoly> for TriPoly {
    fn sub_assign(&mut self, rhs: &TriPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, -c);
        }
    }
}

impl MulAssign<&TriPoly> for TriPoly {
    fn mul_assign(&mut self, rhs: &TriPoly) {
        *self = &*self * rhs;
    }
}

impl Add for &TriPoly {
    type Output = TriPoly;
    fn add(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &TriPoly {
    type Output = TriPoly;
    fn sub(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        -&self
    }
}

forward_owned_binop!(Add, add, TriPoly);
forward_owned_binop!(Sub, sub, TriPoly);
forward_owned_binop!(Mul, mul, TriPoly);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_tripoly() -> impl Strategy<Value = TriPoly> {
        prop::collection::vec((0u32..3, 0u32..3, -2i64..3, -4i64..5), 0..6).prop_map(|ts| {
            let mut p = TriPoly::zero();
            for (i, j, e, c) in ts {
                p.add_term(i, j, LaurentPoly::monomial(c, e));
            }
            p
        })
    }

    #[test]
    fn square_of_x_minus_a() {
        let c1 = &TriPoly::x() - &TriPoly::a();
        let sq = &c1 * &c1;
        let mut want = TriPoly::zero();
        want.add_term(0, 2, LaurentPoly::one());
        want.add_term(1, 1, LaurentPoly::constant(-2));
        want.add_term(2, 0, LaurentPoly::one());
        assert_eq!(sq, want);
    }

    #[test]
    fn entries_roundtrip_sorted() {
        let p = &(&TriPoly::x() * &TriPoly::a()) + &TriPoly::from_laurent(LaurentPoly::qpow(-3));
        let e = p.entries();
        assert!(e.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(TriPoly::from_entries(e), p);
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_tripoly(), b in arb_tripoly(), c in arb_tripoly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn substitution_is_a_ring_map(a in arb_tripoly(), b in arb_tripoly(), v in arb_tripoly()) {
            prop_assert_eq!((&a * &b).eval_x(&v), &a.eval_x(&v) * &b.eval_x(&v));
            prop_assert_eq!((&a + &b).eval_a(&v), &a.eval_a(&v) + &b.eval_a(&v));
            prop_assert_eq!((&a * &b).eval_a(&v), &a.eval_a(&v) * &b.eval_a(&v));
        }
    }
}
