//! Permutations in standard cycle form and partial permutations.

use std::fmt;

use crate::algebra::SignedMonomial;
use crate::error::{Error, Result};

/// A permutation of a finite set of positive integers, stored with each cycle
/// rotated to start at its minimum and cycles sorted by their minima.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclePermutation {
    cycles: Vec<Vec<usize>>,
}

impl CyclePermutation {
    pub fn new(cycles: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen: Vec<usize> = cycles.iter().flatten().copied().collect();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("cycles are not disjoint".into()));
        }
        if cycles.iter().any(|c| c.is_empty()) {
            return Err(Error::InvalidInput("empty cycle".into()));
        }
        Ok(Self::normalised(cycles))
    }

    fn normalised(mut cycles: Vec<Vec<usize>>) -> Self {
        for c in &mut cycles {
            let p = (0..c.len()).min_by_key(|&i| c[i]).unwrap_or(0);
            c.rotate_left(p);
        }
        cycles.sort_by_key(|c| c[0]);
        Self { cycles }
    }

    pub(crate) fn from_standard(cycles: Vec<Vec<usize>>) -> Self {
        debug_assert!(cycles.iter().all(|c| c.iter().all(|&e| e >= c[0])));
        debug_assert!(cycles.windows(2).all(|w| w[0][0] < w[1][0]));
        Self { cycles }
    }

    pub fn identity(elements: &[usize]) -> Self {
        let mut e = elements.to_vec();
        e.sort_unstable();
        Self {
            cycles: e.into_iter().map(|x| vec![x]).collect(),
        }
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cyc(&self) -> usize {
        self.cycles.len()
    }

    pub fn size(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.cycles.iter().all(|c| c.len() == 1)
    }

    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.cycles.iter().flatten().copied().collect();
        s.sort_unstable();
        s
    }

    /// The word obtained by writing the cycles one after the other.
    pub fn flatten(&self) -> Vec<usize> {
        self.cycles.iter().flatten().copied().collect()
    }

    /// Inversions of the flattened word.
    pub fn inv(&self) -> usize {
        inversions(&self.flatten())
    }

    /// Image of `e`, if `e` is in the support.
    pub fn apply(&self, e: usize) -> Option<usize> {
        for c in &self.cycles {
            if let Some(p) = c.iter().position(|&x| x == e) {
                return Some(c[(p + 1) % c.len()]);
            }
        }
        None
    }

    /// All permutations of `elements`, sorted by their standard form.
    pub fn all(elements: &[usize]) -> Vec<CyclePermutation> {
        let mut e = elements.to_vec();
        e.sort_unstable();
        let mut out = Vec::new();
        let mut word: Vec<usize> = Vec::new();
        let mut starts: Vec<bool> = Vec::new();
        grow(&e, 0, &mut word, &mut starts, &mut out);
        out.sort();
        out
    }
}

// Inserting the next (largest) element either as a new cycle or right after an
// existing letter of the flattened word keeps the word in standard form.
fn grow(
    e: &[usize],
    i: usize,
    word: &mut Vec<usize>,
    starts: &mut Vec<bool>,
    out: &mut Vec<CyclePermutation>,
) {
    if i == e.len() {
        out.push(from_flat(word, starts));
        return;
    }
    word.push(e[i]);
    starts.push(true);
    grow(e, i + 1, word, starts, out);
    word.pop();
    starts.pop();
    for p in 0..word.len() {
        word.insert(p + 1, e[i]);
        starts.insert(p + 1, false);
        grow(e, i + 1, word, starts, out);
        word.remove(p + 1);
        starts.remove(p + 1);
    }
}

fn from_flat(word: &[usize], starts: &[bool]) -> CyclePermutation {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for (&x, &s) in word.iter().zip(starts) {
        if s {
            cycles.push(vec![x]);
        } else {
            cycles.last_mut().unwrap().push(x);
        }
    }
    CyclePermutation::from_standard(cycles)
}

impl fmt::Display for CyclePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for c in &self.cycles {
            let parts: Vec<String> = c.iter().map(|e| e.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

pub fn inversions<T: Ord>(w: &[T]) -> usize {
    let mut n = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                n += 1;
            }
        }
    }
    n
}

/// `sum (b - 1)` over `b` in `b_set`.
pub fn subset_inv(b_set: &[usize]) -> usize {
    b_set.iter().map(|&b| b - 1).sum()
}

/// A pair `(B, sigma)` with `B` a subset of `[n]` and `sigma` a permutation of
/// the complement.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPermutation {
    n: usize,
    b: Vec<usize>,
    sigma: CyclePermutation,
}

impl PartialPermutation {
    pub fn new(n: usize, mut b: Vec<usize>, sigma: CyclePermutation) -> Result<Self> {
        b.sort_unstable();
        b.dedup();
        let mut all = b.clone();
        all.extend(sigma.support());
        all.sort_unstable();
        if all != (1..=n).collect::<Vec<_>>() {
            return Err(Error::InvalidInput(format!(
                "B and the support of sigma must partition [{n}]"
            )));
        }
        Ok(Self { n, b, sigma })
    }

    pub(crate) fn from_parts(n: usize, b: Vec<usize>, sigma: CyclePermutation) -> Self {
        Self { n, b, sigma }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn sigma(&self) -> &CyclePermutation {
        &self.sigma
    }

    pub fn inv_b(&self) -> usize {
        subset_inv(&self.b)
    }

    /// `q^(inv sigma + inv B) (-1)^(n - cyc sigma) a^|B| x^(cyc sigma)`.
    pub fn weight(&self) -> SignedMonomial {
        let cyc = self.sigma.cyc();
        SignedMonomial::new(
            (self.n - cyc) % 2 == 1,
            self.b.len() as u32,
            cyc as u32,
            (self.sigma.inv() + self.inv_b()) as i64,
        )
    }

    /// Every partial permutation of `[n]`: subsets in binary-counter order,
    /// then permutations of the complement in standard-form order.
    pub fn all(n: usize) -> Vec<PartialPermutation> {
        let mut out = Vec::new();
        for mask in 0u64..(1 << n) {
            let b: Vec<usize> = (1..=n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
            let rest: Vec<usize> = (1..=n).filter(|&i| mask >> (i - 1) & 1 == 0).collect();
            for sigma in CyclePermutation::all(&rest) {
                out.push(Self {
                    n,
                    b: b.clone(),
                    sigma,
                });
            }
        }
        out
    }
}

impl fmt::Display for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.b.iter().map(|e| e.to_string()).collect();
        write!(f, "({{{}}}, {})", b.join(","), self.sigma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{qstirling1, LaurentPoly};

    #[test]
    fn standard_form() {
        let s = CyclePermutation::new(vec![vec![6, 5], vec![3, 4, 7, 2, 1], vec![8]]).unwrap();
        assert_eq!(s.to_string(), "(1,3,4,7,2)(5,6)(8)");
        assert_eq!(s.flatten(), vec![1, 3, 4, 7, 2, 5, 6, 8]);
        assert_eq!(s.inv(), 5);
        assert_eq!(s.cyc(), 3);
        assert_eq!(s.apply(2), Some(1));
        assert!(CyclePermutation::new(vec![vec![1, 2], vec![2]]).is_err());
    }

    #[test]
    fn small_cases() {
        let s = CyclePermutation::new(vec![vec![1, 3, 2]]).unwrap();
        assert_eq!((s.inv(), s.cyc()), (1, 1));
        let id = CyclePermutation::identity(&[1, 2, 3, 4]);
        assert_eq!((id.inv(), id.cyc()), (0, 4));
        assert_eq!(subset_inv(&[]), 0);
        assert_eq!(subset_inv(&[2, 3]), 3);
    }

    #[test]
    fn enumeration_matches_stirling_first_kind() {
        for n in 0..=7usize {
            let elems: Vec<usize> = (1..=n).collect();
            let all = CyclePermutation::all(&elems);
            assert_eq!(all.len(), (1..=n).product::<usize>());
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            for k in 0..=n {
                let gf = all
                    .iter()
                    .filter(|s| s.cyc() == k)
                    .fold(LaurentPoly::zero(), |acc, s| {
                        &acc + &LaurentPoly::qpow(s.inv() as i64)
                    });
                assert_eq!(gf, qstirling1(n, k));
            }
        }
    }

    #[test]
    fn partial_permutation_counts() {
        // sum_k C(n,k) (n-k)!
        let counts = [1, 2, 5, 16, 65, 326];
        for (n, &c) in counts.iter().enumerate() {
            assert_eq!(PartialPermutation::all(n).len(), c);
        }
        let one: Vec<_> = PartialPermutation::all(1)
            .iter()
            .map(|p| p.weight().to_tripoly())
            .collect();
        assert_eq!(one.len(), 2);
    }
}
