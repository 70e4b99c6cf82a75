//! Set partitions as restricted growth words, and the four statistics ls, lb, rs, rb.

use std::fmt;

use crate::error::{Error, Result};

/// A restricted growth word: `w_1 = 1` and each letter is at most one more
/// than the maximum of the letters before it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RgWord(Vec<u32>);

impl RgWord {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let mut max = 0;
        for (i, &l) in letters.iter().enumerate() {
            if l == 0 || l > max + 1 {
                return Err(Error::MalformedWord(format!(
                    "letter {l} at position {} breaks restricted growth",
                    i + 1
                )));
            }
            max = max.max(l);
        }
        Ok(Self(letters))
    }

    pub(crate) fn new_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(is_rg(&letters));
        Self(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn num_blocks(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn stats(&self) -> Stats {
        stats(&self.0)
    }
}

impl std::str::FromStr for RgWord {
    type Err = Error;

    /// Parses a digit string such as `123144124`, or comma separated letters
    /// when some letter exceeds 9.
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_word(s)?)
    }
}

impl fmt::Display for RgWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.0))
    }
}

pub fn is_rg(w: &[u32]) -> bool {
    let mut max = 0;
    for &l in w {
        if l == 0 || l > max + 1 {
            return false;
        }
        max = max.max(l);
    }
    true
}

/// Parses either a plain digit string or a comma separated list of letters.
pub fn parse_word(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.contains(',') {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::MalformedWord(format!("bad letter {t:?}")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::MalformedWord(format!("bad letter {c:?}")))
            })
            .collect()
    }
}

pub fn format_word(w: &[u32]) -> String {
    if w.iter().all(|&l| l < 10) {
        w.iter().map(|l| l.to_string()).collect()
    } else {
        w.iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Blocks of a partition of a totally ordered ground set, each block sorted
/// and blocks ordered by increasing minima.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartition<T> {
    blocks: Vec<Vec<T>>,
}

impl<T: Ord + Clone> SetPartition<T> {
    /// Normalises the block order; rejects empty or overlapping blocks.
    pub fn new(mut blocks: Vec<Vec<T>>) -> Result<Self> {
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidInput("empty block".into()));
            }
            b.sort();
        }
        blocks.sort_by(|x, y| x[0].cmp(&y[0]));
        let mut all: Vec<&T> = blocks.iter().flatten().collect();
        all.sort();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("blocks are not disjoint".into()));
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[Vec<T>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn ground(&self) -> Vec<T> {
        let mut g: Vec<T> = self.blocks.iter().flatten().cloned().collect();
        g.sort();
        g
    }
}

impl<T: fmt::Display> fmt::Display for SetPartition<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

pub fn rg_encode<T: Ord + Clone>(pi: &SetPartition<T>) -> RgWord {
    let mut tagged: Vec<(&T, u32)> = Vec::new();
    for (i, b) in pi.blocks.iter().enumerate() {
        tagged.extend(b.iter().map(|e| (e, i as u32 + 1)));
    }
    tagged.sort();
    RgWord::new_unchecked(tagged.into_iter().map(|(_, l)| l).collect())
}

pub fn rg_decode<T: Ord + Clone>(w: &RgWord, ground: &[T]) -> Result<SetPartition<T>> {
    if ground.len() != w.len() {
        return Err(Error::InvalidInput(format!(
            "word of length {} over a ground set of size {}",
            w.len(),
            ground.len()
        )));
    }
    let mut sorted = ground.to_vec();
    sorted.sort();
    let mut blocks = vec![Vec::new(); w.num_blocks() as usize];
    for (e, &l) in sorted.into_iter().zip(w.letters()) {
        blocks[l as usize - 1].push(e);
    }
    Ok(SetPartition { blocks })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Stats {
    pub ls: usize,
    pub lb: usize,
    pub rs: usize,
    pub rb: usize,
}

/// All four statistics of an arbitrary word over positive letters. Each
/// position counts distinct letter values, not occurrences.
pub fn stats(w: &[u32]) -> Stats {
    let k = w.iter().copied().max().unwrap_or(0) as usize;
    let mut right = vec![0usize; k + 1];
    for &l in w {
        right[l as usize] += 1;
    }
    let mut left = vec![false; k + 1];
    let mut s = Stats::default();
    for &l in w {
        let l = l as usize;
        right[l] -= 1;
        for j in 1..=k {
            if j < l {
                s.ls += left[j] as usize;
                s.rs += (right[j] > 0) as usize;
            } else if j > l {
                s.lb += left[j] as usize;
                s.rb += (right[j] > 0) as usize;
            }
        }
        left[l] = true;
    }
    s
}

pub fn ls(w: &[u32]) -> usize {
    stats(w).ls
}

pub fn lb(w: &[u32]) -> usize {
    stats(w).lb
}

pub fn rs(w: &[u32]) -> usize {
    stats(w).rs
}

pub fn rb(w: &[u32]) -> usize {
    stats(w).rb
}

/// The subword keeping only the letters `i` and `j`.
pub fn subword_restrict(w: &[u32], i: u32, j: u32) -> Vec<u32> {
    w.iter().copied().filter(|&l| l == i || l == j).collect()
}

pub fn support(w: &[u32]) -> Vec<u32> {
    let mut s = w.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

/// Contribution of the prefix `v = w[..split]` to `rs(w)`: over pairs
/// `i < j`, `rs(v_ij)` when `i` is absent from the suffix and `ls(v_ij)`
/// otherwise.
pub fn rs_prefix_contribution(w: &[u32], split: usize) -> usize {
    let (v, rest) = w.split_at(split);
    let k = w.iter().copied().max().unwrap_or(0);
    let in_rest = |i: u32| rest.contains(&i);
    let mut total = 0;
    for i in 1..=k {
        for j in i + 1..=k {
            let sub = subword_restrict(v, i, j);
            total += if in_rest(i) { ls(&sub) } else { rs(&sub) };
        }
    }
    total
}

/// The interpolating statistic: `rs` on pairs with `i` in `s`,
/// `ls` on the others.
pub fn mixed_statistic(w: &[u32], s: &[u32]) -> usize {
    let k = w.iter().copied().max().unwrap_or(0);
    let mut total = 0;
    for i in 1..=k {
        for j in i + 1..=k {
            let sub = subword_restrict(w, i, j);
            total += if s.contains(&i) { rs(&sub) } else { ls(&sub) };
        }
    }
    total
}

/// Every restricted growth word of length `n`, in lexicographic order.
pub fn rg_words(n: usize) -> RgWords {
    RgWords::new(n, None)
}

/// Restricted growth words of length `n` with exactly `k` blocks.
pub fn rg_words_with_blocks(n: usize, k: u32) -> impl Iterator<Item = RgWord> {
    RgWords::new(n, Some(k)).filter(move |w| w.num_blocks() == k)
}

pub struct RgWords {
    current: Option<Vec<u32>>,
    cap: Option<u32>,
}

impl RgWords {
    fn new(n: usize, cap: Option<u32>) -> Self {
        let start = if n == 0 {
            Some(Vec::new())
        } else if cap == Some(0) {
            None
        } else {
            Some(vec![1; n])
        };
        Self {
            current: start,
            cap,
        }
    }
}

impl Iterator for RgWords {
    type Item = RgWord;

    fn next(&mut self) -> Option<RgWord> {
        let out = self.current.take()?;
        let n = out.len();
        let mut w = out.clone();
        // prefix maxima
        let mut pm = vec![0u32; n];
        let mut m = 0;
        for i in 0..n {
            m = m.max(w[i]);
            pm[i] = m;
        }
        let cap = self.cap.unwrap_or(u32::MAX);
        let mut i = n;
        while i > 1 {
            i -= 1;
            if w[i] <= pm[i - 1] && w[i] < cap {
                w[i] += 1;
                for slot in &mut w[i + 1..] {
                    *slot = 1;
                }
                self.current = Some(w);
                break;
            }
        }
        Some(RgWord::new_unchecked(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{qstirling2, LaurentPoly};

    #[test]
    fn worked_example() {
        let pi =
            SetPartition::new(vec![vec![1, 4, 7], vec![2, 8], vec![3], vec![5, 6, 9]]).unwrap();
        let w = rg_encode(&pi);
        assert_eq!(w.to_string(), "123144124");
        assert_eq!(
            w.stats(),
            Stats {
                ls: 13,
                lb: 7,
                rs: 7,
                rb: 11
            }
        );
        assert_eq!(rg_decode(&w, &(1..=9).collect::<Vec<_>>()).unwrap(), pi);
        assert_eq!(subword_restrict(w.letters(), 1, 2), vec![1, 2, 1, 1, 2]);
        assert_eq!(stats(&[1]), Stats::default());
    }

    #[test]
    fn malformed_words_are_rejected() {
        assert!(RgWord::new(vec![2]).is_err());
        assert!(RgWord::new(vec![1, 3]).is_err());
        assert!("12a".parse::<RgWord>().is_err());
        assert_eq!("1,2,3".parse::<RgWord>().unwrap().letters(), &[1, 2, 3]);
    }

    #[test]
    fn enumeration_counts_are_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate() {
            let all: Vec<_> = rg_words(n).collect();
            assert_eq!(all.len(), b);
            assert!(all.windows(2).all(|p| p[0] < p[1]));
        }
        assert_eq!(rg_words_with_blocks(5, 2).count(), 15);
        assert_eq!(rg_words_with_blocks(3, 0).count(), 0);
        assert_eq!(rg_words_with_blocks(0, 0).count(), 1);
    }

    #[test]
    fn rs_generating_function_at_three_two() {
        let gf = rg_words_with_blocks(3, 2).fold(LaurentPoly::zero(), |acc, w| {
            &acc + &LaurentPoly::qpow(w.stats().rs as i64)
        });
        assert_eq!(gf, qstirling2(3, 2));
    }

    #[test]
    fn prefix_claim_on_example() {
        let w = [1, 2, 3, 1, 4, 4, 1, 2, 4];
        for split in 0..=w.len() {
            assert_eq!(rs_prefix_contribution(&w, split) + rs(&w[split..]), 7);
        }
        assert_eq!(rs_prefix_contribution(&w, w.len()), 7);
        assert_eq!(rs_prefix_contribution(&w, 0), 0);
    }

    #[test]
    fn roundtrip_all_small_partitions() {
        for n in 0..=8 {
            let ground: Vec<usize> = (1..=n).collect();
            for w in rg_words(n) {
                let pi = rg_decode(&w, &ground).unwrap();
                assert_eq!(rg_encode(&pi), w);
            }
        }
    }
}
