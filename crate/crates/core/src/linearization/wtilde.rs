//! The word sets `W(S)`, their images `W~(S)` under `Psi_S`, the star-fixing
//! description of those images, and the q-counting of `Fix W~(j)`.

use std::collections::BTreeSet;

use crate::algebra::{qbinomial, qfactorial, LaurentPoly, TriPoly};
use crate::config::TripleConfig;
use crate::error::{Error, Result};
use crate::partitions::{ls, rs, support};
use crate::perm::{CyclePermutation, PartialPermutation};

use super::formulas::fix_wtilde_closed;
use super::involutions::{in_fix5, wtilde_b};
use super::psi::psi_s;

/// Parameters `(n1, n2, n3, s, l, j)`. The tail `w~_b` has length
/// `n2 - l + s` (so `t = l - s` elements of color 2 sit in `B_2`), the
/// whole word has `n3 + s` blocks and `j = |S ∩ [n1]|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WTildeParams {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub s: usize,
    pub l: usize,
    pub j: usize,
}

impl WTildeParams {
    pub fn new(n1: usize, n2: usize, n3: usize, s: usize, l: usize, j: usize) -> Result<Self> {
        if !(n3 >= n1 && n1 >= n2) {
            return Err(Error::DomainViolation(format!(
                "need n3 >= n1 >= n2, got ({n1}, {n2}, {n3})"
            )));
        }
        if !(j <= s && s <= l && l - s <= n2 && j <= n1) {
            return Err(Error::InvalidInput(format!(
                "need j <= s <= l, l - s <= n2, j <= n1; got s={s} l={l} j={j}"
            )));
        }
        Ok(Self {
            n1,
            n2,
            n3,
            s,
            l,
            j,
        })
    }

    pub fn t(&self) -> usize {
        self.l - self.s
    }

    pub fn tail_len(&self) -> usize {
        self.n2 - self.t()
    }

    pub fn num_blocks(&self) -> u32 {
        (self.n3 + self.s) as u32
    }

    /// Every admissible parameter set for the triple.
    pub fn all(n1: usize, n2: usize, n3: usize) -> Vec<Self> {
        let mut out = Vec::new();
        if !(n3 >= n1 && n1 >= n2) || n1 + n2 < n3 {
            return out;
        }
        for l in 0..=n1 + n2 - n3 {
            for s in l.saturating_sub(n2)..=l {
                for j in 0..=s.min(n1) {
                    out.push(Self {
                        n1,
                        n2,
                        n3,
                        s,
                        l,
                        j,
                    });
                }
            }
        }
        out
    }
}

/// One position of a tail pattern: a letter that is forced, or a free letter
/// ranging over `1..=cap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Fixed(u32),
    Star(u32),
}

/// The patterns with no star fixed yet: first occurrences of `n1+1, ...,
/// n3+s` in increasing order, each star capped by the current maximum.
pub fn base_patterns(params: &WTildeParams) -> Vec<Vec<Slot>> {
    let len = params.tail_len();
    let k = params.num_blocks();
    let new_letters = k as usize - params.n1;
    let mut out = Vec::new();
    if new_letters > len {
        return out;
    }
    let mut pattern = Vec::with_capacity(len);
    grow_base(params.n1 as u32, k, len, &mut pattern, &mut out);
    out
}

fn grow_base(max: u32, k: u32, len: usize, pattern: &mut Vec<Slot>, out: &mut Vec<Vec<Slot>>) {
    let need = (k - max) as usize;
    let room = len - pattern.len();
    if room == 0 {
        out.push(pattern.clone());
        return;
    }
    if room > need && max > 0 {
        pattern.push(Slot::Star(max));
        grow_base(max, k, len, pattern, out);
        pattern.pop();
    }
    if need > 0 {
        pattern.push(Slot::Fixed(max + 1));
        grow_base(max + 1, k, len, pattern, out);
        pattern.pop();
    }
}

/// Sets the star at `idx` to its cap and lowers every star to its right.
pub fn fix_star(pattern: &[Slot], idx: usize) -> Option<Vec<Slot>> {
    let Slot::Star(cap) = pattern[idx] else {
        return None;
    };
    let mut out = pattern.to_vec();
    out[idx] = Slot::Fixed(cap);
    for slot in &mut out[idx + 1..] {
        if let Slot::Star(c) = slot {
            *c -= 1;
        }
    }
    Some(out)
}

/// The patterns after fixing `j` stars, one at a time, in every possible way.
pub fn star_patterns(params: &WTildeParams) -> BTreeSet<Vec<Slot>> {
    let mut current: BTreeSet<Vec<Slot>> = base_patterns(params).into_iter().collect();
    for _ in 0..params.j {
        let mut next = BTreeSet::new();
        for p in &current {
            for idx in 0..p.len() {
                if let Some(q) = fix_star(p, idx) {
                    next.insert(q);
                }
            }
        }
        current = next;
    }
    current
}

fn expand(pattern: &[Slot], out: &mut BTreeSet<Vec<u32>>) {
    let mut word = Vec::with_capacity(pattern.len());
    expand_from(pattern, &mut word, out);
}

fn expand_from(pattern: &[Slot], word: &mut Vec<u32>, out: &mut BTreeSet<Vec<u32>>) {
    match pattern.get(word.len()) {
        None => {
            out.insert(word.clone());
        }
        Some(&Slot::Fixed(v)) => {
            word.push(v);
            expand_from(pattern, word, out);
            word.pop();
        }
        Some(&Slot::Star(cap)) => {
            for v in 1..=cap {
                word.push(v);
                expand_from(pattern, word, out);
                word.pop();
            }
        }
    }
}

/// `W~({1, ..., j})` built by the star-fixing construction.
pub fn wtilde_by_stars(params: &WTildeParams) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for p in star_patterns(params) {
        expand(&p, &mut out);
    }
    out
}

/// `W(S)`: tails `w_b` with `12...n1 w_b` restricted growth with exactly
/// `n3 + s` blocks and every letter of `S ∩ [n1]` present in `w_b`.
pub fn w_set(params: &WTildeParams, s_set: &[u32]) -> Vec<Vec<u32>> {
    let k = params.num_blocks();
    let n1 = params.n1 as u32;
    let needed: Vec<u32> = s_set.iter().copied().filter(|&x| x <= n1).collect();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(params.tail_len());
    grow_tail(n1, k, params.tail_len(), &mut word, &mut |w: &[u32]| {
        if needed.iter().all(|x| w.contains(x)) {
            out.push(w.to_vec());
        }
    });
    out
}

fn grow_tail(max: u32, k: u32, len: usize, word: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if word.len() == len {
        if max == k {
            f(word);
        }
        return;
    }
    if ((k - max) as usize) > len - word.len() {
        return;
    }
    for v in 1..=(max + 1).min(k) {
        word.push(v);
        grow_tail(max.max(v), k, len, word, f);
        word.pop();
    }
}

/// `W~(S)` computed directly as the tails of `Psi_S(w_a W(S))`.
pub fn wtilde_direct(params: &WTildeParams, s_set: &[u32]) -> BTreeSet<Vec<u32>> {
    let k = params.num_blocks();
    let wa: Vec<u32> = (1..=params.n1 as u32).collect();
    w_set(params, s_set)
        .into_iter()
        .map(|wb| {
            let full: Vec<u32> = wa.iter().chain(&wb).copied().collect();
            psi_s(&full, s_set, k)[wa.len()..].to_vec()
        })
        .collect()
}

/// `Fix W~(j)`: members of `W~({1..j})` whose `i`-th letter is at least `i`.
pub fn fix_wtilde(params: &WTildeParams) -> Vec<Vec<u32>> {
    wtilde_by_stars(params)
        .into_iter()
        .filter(|w| w.iter().enumerate().all(|(i, &b)| b as usize > i))
        .collect()
}

/// `sum q^ls(w_a w~_b)` over `Fix W~(j)`.
pub fn fix_wtilde_sum(params: &WTildeParams) -> LaurentPoly {
    let wa: Vec<u32> = (1..=params.n1 as u32).collect();
    let mut out = LaurentPoly::zero();
    for wb in fix_wtilde(params) {
        let full: Vec<u32> = wa.iter().chain(&wb).copied().collect();
        out += &LaurentPoly::qpow(ls(&full) as i64);
    }
    out
}

pub fn fix_wtilde_formula(params: &WTildeParams) -> Result<LaurentPoly> {
    fix_wtilde_closed(
        params.n1, params.n2, params.n3, params.l, params.s, params.j,
    )
}

// ---------------------------------------------------------------------------
// grouping the final fixed points

/// Both sides of the decomposition of `rs` for a configuration in the final
/// fixed-point set: `rs(w)` and `rs(w_c) + ls(w_a w~_b) - sum (n3+s-u)` over
/// the letters `u` missing from `w_c`.
pub fn rs_decomposition(c: &TripleConfig) -> (i64, i64) {
    let (wa, _, wc) = c.segments();
    let k = c.num_blocks();
    let supp = support(wc);
    let missing: i64 = (1..=k)
        .filter(|u| supp.binary_search(u).is_err())
        .map(|u| (k - u) as i64)
        .sum();
    let full: Vec<u32> = wa.iter().copied().chain(wtilde_b(c)).collect();
    (
        rs(c.word()) as i64,
        rs(wc) as i64 + ls(&full) as i64 - missing,
    )
}

/// Final fixed points of `L(n1, n2, n3)` with the given `B_2`, built
/// directly rather than filtered out of the whole family.
pub fn fix5_with_b2(sizes: [usize; 3], b2: &[usize]) -> Vec<TripleConfig> {
    let [n1, n2, n3] = sizes;
    let rest: Vec<usize> = (1..=n2).filter(|e| !b2.contains(e)).collect();
    let parts = [
        PartialPermutation::from_parts(
            n1,
            vec![],
            CyclePermutation::identity(&(1..=n1).collect::<Vec<_>>()),
        ),
        PartialPermutation::from_parts(n2, b2.to_vec(), CyclePermutation::identity(&rest)),
        PartialPermutation::from_parts(
            n3,
            vec![],
            CyclePermutation::identity(&(1..=n3).collect::<Vec<_>>()),
        ),
    ];
    let mut out = Vec::new();
    let prefix: Vec<u32> = (1..=n1 as u32).collect();
    let mut tail = Vec::with_capacity(rest.len());
    // Supp(w_c) lies inside Supp(w_a w_b), so the block count is max(w_a w_b)
    grow_rg(n1 as u32, rest.len(), &mut tail, &mut |wb: &[u32]| {
        let k = prefix.iter().chain(wb).copied().max().unwrap_or(0);
        let mut wc = Vec::with_capacity(n3);
        distinct_words(k, n3, &mut wc, &mut |wc: &[u32]| {
            let word: Vec<u32> = prefix.iter().chain(wb).chain(wc).copied().collect();
            let c = TripleConfig::from_parts_unchecked(parts.clone(), word);
            if in_fix5(&c) {
                out.push(c);
            }
        });
    });
    out
}

fn grow_rg(max: u32, len: usize, word: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if word.len() == len {
        f(word);
        return;
    }
    for v in 1..=max + 1 {
        word.push(v);
        grow_rg(max.max(v), len, word, f);
        word.pop();
    }
}

fn distinct_words(k: u32, len: usize, w: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if w.len() == len {
        f(w);
        return;
    }
    for v in 1..=k {
        if !w.contains(&v) {
            w.push(v);
            distinct_words(k, len, w, f);
            w.pop();
        }
    }
}

/// `sum q^rs(pi)` over the final fixed points with `#blocks = n3 + s` and
/// `B_2 = b2`, `|b2| = l - s`.
pub fn inner_sum_enumerated(sizes: [usize; 3], s: usize, b2: &[usize]) -> LaurentPoly {
    let k = (sizes[2] + s) as u32;
    let mut out = LaurentPoly::zero();
    for c in fix5_with_b2(sizes, b2) {
        if c.num_blocks() == k {
            out += &LaurentPoly::qpow(rs(c.word()) as i64);
        }
    }
    out
}

/// The same inner sum through the mahonian factor `[n3]!` and the direct
/// `Fix W~(j)` sums.
pub fn inner_sum_grouped(
    n1: usize,
    n2: usize,
    n3: usize,
    l: usize,
    s: usize,
) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    let (n1i, n3i, si) = (n1 as i64, n3 as i64, s as i64);
    for j in 0..=s.min(n1) {
        let params = WTildeParams::new(n1, n2, n3, s, l, j)?;
        let ji = j as i64;
        let exp = ji * (-n3i - si + 1) + ji * (ji - 1) / 2
            - (si - ji) * (si - ji - 1) / 2
            - (si - ji) * (n3i - n1i + ji);
        let term = &(&fix_wtilde_sum(&params) * &LaurentPoly::qpow(exp))
            * &(&qbinomial(n1i, ji) * &qbinomial(n3i - n1i + si, si - ji));
        out += &term;
    }
    Ok(&out * &qfactorial(n3))
}

/// Reassembles `L_q(C_n1 C_n2 C_n3)` from the grouped inner sums, giving
/// `B_2` generating function `(-1)^(l-s) q^C(l-s,2) [n2, l-s]`.
pub fn grouped_linearization(n1: usize, n2: usize, n3: usize) -> Result<TriPoly> {
    let mut out = TriPoly::zero();
    if n1 + n2 < n3 {
        return Ok(out);
    }
    for l in 0..=n1 + n2 - n3 {
        let mut coeff = LaurentPoly::zero();
        for s in l.saturating_sub(n2)..=l {
            let t = (l - s) as i64;
            let mut b2 = &LaurentPoly::qpow(t * (t - 1) / 2) * &qbinomial(n2 as i64, t);
            if t % 2 == 1 {
                b2 = -&b2;
            }
            coeff += &(&b2 * &inner_sum_grouped(n1, n2, n3, l, s)?);
        }
        out.add_term((n3 + l) as u32, 0, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::rectangular_encoding;

    #[test]
    fn no_stars_fixed_is_plain_tails() {
        let params = WTildeParams::new(2, 2, 3, 1, 1, 0).unwrap();
        let direct = wtilde_direct(&params, &[]);
        assert_eq!(direct, wtilde_by_stars(&params));
        let tails: BTreeSet<Vec<u32>> = w_set(&params, &[]).into_iter().collect();
        assert_eq!(direct, tails);
    }

    #[test]
    fn single_star() {
        let params = WTildeParams::new(3, 3, 3, 1, 1, 1).unwrap();
        for i in 1..=3 {
            assert_eq!(wtilde_direct(&params, &[i]), wtilde_by_stars(&params));
        }
    }

    #[test]
    fn rectangle_example() {
        let rows = rectangular_encoding(&[1, 7, 5, 7, 8, 7], 8).unwrap().rows();
        assert_eq!(rows[0], "000010");
        assert_eq!(rows[7], "100000");
    }

    #[test]
    fn closed_form_small() {
        for params in WTildeParams::all(3, 2, 3) {
            assert_eq!(
                fix_wtilde_sum(&params),
                fix_wtilde_formula(&params).unwrap(),
                "{params:?}"
            );
        }
    }
}
