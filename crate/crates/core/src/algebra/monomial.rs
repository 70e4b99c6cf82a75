//! Signed monomials `±a^i x^j q^k` and a fast accumulator for enumeration sums.

use std::collections::HashMap;

use super::{LaurentPoly, TriPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedMonomial {
    pub negative: bool,
    pub a: u32,
    pub x: u32,
    pub q: i64,
}

impl SignedMonomial {
    pub const ONE: SignedMonomial = SignedMonomial {
        negative: false,
        a: 0,
        x: 0,
        q: 0,
    };

    pub fn new(negative: bool, a: u32, x: u32, q: i64) -> Self {
        Self { negative, a, x, q }
    }

    pub fn sign(&self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn times(self, other: SignedMonomial) -> Self {
        Self {
            negative: self.negative != other.negative,
            a: self.a + other.a,
            x: self.x + other.x,
            q: self.q + other.q,
        }
    }

    pub fn negated(self) -> Self {
        Self {
            negative: !self.negative,
            ..self
        }
    }

    pub fn to_tripoly(self) -> TriPoly {
        TriPoly::monomial(LaurentPoly::monomial(self.sign(), self.q), self.a, self.x)
    }
}

/// Sums of many signed monomials, kept in machine integers until converted.
#[derive(Clone, Debug, Default)]
pub struct MonomialSum {
    counts: HashMap<(u32, u32, i64), i128>,
}

impl MonomialSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, m: SignedMonomial) {
        *self.counts.entry((m.a, m.x, m.q)).or_insert(0) += m.sign() as i128;
    }

    pub fn merge(&mut self, other: &MonomialSum) {
        for (&k, &c) in &other.counts {
            *self.counts.entry(k).or_insert(0) += c;
        }
    }

    pub fn to_tripoly(&self) -> TriPoly {
        let mut out = TriPoly::zero();
        for (&(a, x, q), &c) in &self.counts {
            if c != 0 {
                out.add_term(a, x, LaurentPoly::monomial(c, q));
            }
        }
        out
    }
}

impl Extend<SignedMonomial> for MonomialSum {
    fn extend<I: IntoIterator<Item = SignedMonomial>>(&mut self, iter: I) {
        for m in iter {
            self.add(m);
        }
    }
}

impl FromIterator<SignedMonomial> for MonomialSum {
    fn from_iter<I: IntoIterator<Item = SignedMonomial>>(iter: I) -> Self {
        let mut s = Self::new();
        s.extend(iter);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancelling_terms_vanish() {
        let m = SignedMonomial::new(false, 2, 1, -3);
        let s: MonomialSum = [m, m.negated(), m].into_iter().collect();
        assert_eq!(s.to_tripoly(), m.to_tripoly());
    }
}
