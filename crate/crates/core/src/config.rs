//! Three-colored configurations: three partial permutations together with a
//! set partition of their cycles.

use std::fmt;

use crate::algebra::{MonomialSum, SignedMonomial, TriPoly};
use crate::error::{Error, Result};
use crate::partitions::{is_rg, rg_words, stats};
use crate::perm::{CyclePermutation, PartialPermutation};

/// `((B_1, s_1), (B_2, s_2), (B_3, s_3); pi)`. The partition lives on the
/// cycles ordered by color and then by minimum, and is stored as its
/// restricted growth word, which therefore splits as `w_a w_b w_c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleConfig {
    pub(crate) parts: [PartialPermutation; 3],
    pub(crate) word: Vec<u32>,
}

impl TripleConfig {
    pub fn new(parts: [PartialPermutation; 3], word: Vec<u32>) -> Result<Self> {
        let cycles: usize = parts.iter().map(|p| p.sigma().cyc()).sum();
        if word.len() != cycles {
            return Err(Error::InvalidInput(format!(
                "partition word has length {} but there are {cycles} cycles",
                word.len()
            )));
        }
        if !is_rg(&word) {
            return Err(Error::MalformedWord(crate::partitions::format_word(&word)));
        }
        Ok(Self { parts, word })
    }

    pub(crate) fn from_parts_unchecked(parts: [PartialPermutation; 3], word: Vec<u32>) -> Self {
        debug_assert!(Self::new(parts.clone(), word.clone()).is_ok());
        Self { parts, word }
    }

    /// Builds a configuration from its blocks, each a list of `(color, cycle)`
    /// with colors 1 to 3. Elements of `[n_i]` in no cycle form `B_i`.
    pub fn from_blocks(sizes: [usize; 3], blocks: &[Vec<(usize, Vec<usize>)>]) -> Result<Self> {
        let mut cycles: [Vec<(Vec<usize>, usize)>; 3] = Default::default();
        for (bi, block) in blocks.iter().enumerate() {
            for (color, cycle) in block {
                if !(1..=3).contains(color) {
                    return Err(Error::InvalidInput(format!("color {color} out of range")));
                }
                if cycle.iter().any(|&e| e == 0 || e > sizes[color - 1]) {
                    return Err(Error::InvalidInput(format!(
                        "cycle {cycle:?} leaves [n_{color}]"
                    )));
                }
                cycles[color - 1].push((cycle.clone(), bi));
            }
        }
        let mut parts: [PartialPermutation; 3] = Default::default();
        let mut labels: Vec<usize> = Vec::new();
        for color in 0..3 {
            let sigma =
                CyclePermutation::new(cycles[color].iter().map(|(c, _)| c.clone()).collect())?;
            let mut tagged: Vec<(usize, usize)> = cycles[color]
                .iter()
                .map(|(c, b)| (*c.iter().min().unwrap(), *b))
                .collect();
            tagged.sort();
            labels.extend(tagged.into_iter().map(|(_, b)| b));
            let supp = sigma.support();
            let b: Vec<usize> = (1..=sizes[color])
                .filter(|e| supp.binary_search(e).is_err())
                .collect();
            parts[color] = PartialPermutation::new(sizes[color], b, sigma)?;
        }
        // relabel blocks by first appearance so the word is restricted growth
        let mut order: Vec<Option<u32>> = vec![None; blocks.len()];
        let mut next = 0;
        let mut word = Vec::with_capacity(labels.len());
        for b in labels {
            let l = *order[b].get_or_insert_with(|| {
                next += 1;
                next
            });
            word.push(l);
        }
        if order.iter().any(Option::is_none) {
            return Err(Error::InvalidInput("empty block".into()));
        }
        Self::new(parts, word)
    }

    /// Parses the block notation used by [`fmt::Display`]: blocks separated by
    /// `|`, cycles in parentheses, color 1 elements prefixed by `_`, color 3
    /// elements by `^`, color 2 unmarked.
    pub fn from_notation(sizes: [usize; 3], text: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        let text = text.trim();
        if !text.is_empty() {
            for block in text.split('|') {
                let mut cycles = Vec::new();
                for raw in block.split(')') {
                    let raw = raw.trim();
                    if raw.is_empty() {
                        continue;
                    }
                    let inner = raw
                        .strip_prefix('(')
                        .ok_or_else(|| Error::InvalidInput(format!("expected '(' in {raw:?}")))?;
                    let mut color = None;
                    let mut cycle = Vec::new();
                    for tok in inner.split(',') {
                        let tok = tok.trim();
                        let (c, digits) = match tok.chars().next() {
                            Some('_') => (1, &tok[1..]),
                            Some('^') => (3, &tok[1..]),
                            _ => (2, tok),
                        };
                        if *color.get_or_insert(c) != c {
                            return Err(Error::InvalidInput(format!("mixed colors in ({inner})")));
                        }
                        cycle.push(
                            digits
                                .parse::<usize>()
                                .map_err(|_| Error::InvalidInput(format!("bad element {tok:?}")))?,
                        );
                    }
                    cycles.push((color.unwrap(), cycle));
                }
                blocks.push(cycles);
            }
        }
        Self::from_blocks(sizes, &blocks)
    }

    pub fn parts(&self) -> &[PartialPermutation; 3] {
        &self.parts
    }

    pub fn part(&self, color: usize) -> &PartialPermutation {
        &self.parts[color - 1]
    }

    pub fn sizes(&self) -> [usize; 3] {
        [self.parts[0].n(), self.parts[1].n(), self.parts[2].n()]
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn num_blocks(&self) -> u32 {
        self.word.iter().copied().max().unwrap_or(0)
    }

    pub(crate) fn offsets(&self) -> [usize; 4] {
        let c1 = self.parts[0].sigma().cyc();
        let c2 = self.parts[1].sigma().cyc();
        [0, c1, c1 + c2, self.word.len()]
    }

    /// `(w_a, w_b, w_c)`.
    pub fn segments(&self) -> (&[u32], &[u32], &[u32]) {
        let o = self.offsets();
        (
            &self.word[..o[1]],
            &self.word[o[1]..o[2]],
            &self.word[o[2]..],
        )
    }

    pub fn segment(&self, color: usize) -> &[u32] {
        let o = self.offsets();
        &self.word[o[color - 1]..o[color]]
    }

    /// `prod omega(B_i, s_i) q^rs(pi) a^#blocks(pi)`, with the `x` powers of the
    /// partial permutation weights absorbed by the partition.
    pub fn weight(&self) -> SignedMonomial {
        let mut m = SignedMonomial::new(false, self.num_blocks(), 0, stats(&self.word).rs as i64);
        for p in &self.parts {
            let w = p.weight();
            m = m.times(SignedMonomial { x: 0, ..w });
        }
        m
    }

    /// The blocks as lists of `(color, cycle)`.
    pub fn blocks(&self) -> Vec<Vec<(usize, Vec<usize>)>> {
        let mut blocks = vec![Vec::new(); self.num_blocks() as usize];
        let mut pos = 0;
        for (ci, p) in self.parts.iter().enumerate() {
            for c in p.sigma().cycles() {
                blocks[self.word[pos] as usize - 1].push((ci + 1, c.clone()));
                pos += 1;
            }
        }
        blocks
    }
}

impl fmt::Display for TripleConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marks = ["_", "", "^"];
        let mut out = Vec::new();
        for block in self.blocks() {
            let mut s = String::new();
            for (color, cycle) in block {
                let elems: Vec<String> = cycle
                    .iter()
                    .map(|e| format!("{}{e}", marks[color - 1]))
                    .collect();
                s.push('(');
                s.push_str(&elems.join(","));
                s.push(')');
            }
            out.push(s);
        }
        let bs: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                p.b()
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(
            f,
            "B=[{{{}}},{{{}}},{{{}}}] pi={}",
            bs[0],
            bs[1],
            bs[2],
            out.join("|")
        )
    }
}

/// Every configuration of `L(n_1, n_2, n_3)`, each exactly once.
pub fn enumerate_configs(sizes: [usize; 3]) -> impl Iterator<Item = TripleConfig> {
    let p1 = PartialPermutation::all(sizes[0]);
    let p2 = PartialPermutation::all(sizes[1]);
    let p3 = PartialPermutation::all(sizes[2]);
    let triples: Vec<[PartialPermutation; 3]> = p1
        .iter()
        .flat_map(|a| {
            let p3 = &p3;
            p2.iter()
                .flat_map(move |b| p3.iter().map(move |c| [a.clone(), b.clone(), c.clone()]))
        })
        .collect();
    triples.into_iter().flat_map(|parts| {
        let cycles: usize = parts.iter().map(|p| p.sigma().cyc()).sum();
        rg_words(cycles).map(move |w| TripleConfig {
            parts: parts.clone(),
            word: w.into_letters(),
        })
    })
}

pub fn config_weight(c: &TripleConfig) -> TriPoly {
    c.weight().to_tripoly()
}

/// Signed weight sum over the whole family; equals `L(C_n1 C_n2 C_n3)`.
pub fn total_weight(sizes: [usize; 3]) -> TriPoly {
    enumerate_configs(sizes)
        .map(|c| c.weight())
        .collect::<MonomialSum>()
        .to_tripoly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LaurentPoly;

    #[test]
    fn tiny_families() {
        let empty: Vec<_> = enumerate_configs([0, 0, 0]).collect();
        assert_eq!(empty.len(), 1);
        assert_eq!(config_weight(&empty[0]), TriPoly::one());
        assert_eq!(enumerate_configs([1, 0, 0]).count(), 2);
    }

    #[test]
    fn regression_value() {
        let mut want = TriPoly::zero();
        want.add_term(2, 0, LaurentPoly::from_coeffs(&[0, 1, 2, 1]));
        want.add_term(3, 0, LaurentPoly::from_coeffs(&[0, -1, -1, 1, 1]));
        assert_eq!(total_weight([2, 2, 1]), want);
    }

    #[test]
    fn notation_roundtrip() {
        let text = "(_1)(^1,^2)(^6)|(_2,_8)(^5)|(_3)(_4)|(_5)(^3,^9)(^8)|(_6,_9)(_7)(^7)|(^4)";
        let c = TripleConfig::from_notation([9, 0, 10], text).unwrap();
        assert_eq!(c.part(3).b(), &[10]);
        assert_eq!(c.to_string(), format!("B=[{{}},{{}},{{10}}] pi={text}"));
        assert_eq!(c.segment(1), &[1, 2, 3, 3, 4, 5, 5]);
        assert_eq!(c.segment(3), &[1, 4, 6, 2, 1, 5, 4]);
        assert!(TripleConfig::from_notation([1, 0, 0], "(_1,^1)").is_err());
    }
}
