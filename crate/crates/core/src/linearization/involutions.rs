//! The five sign-reversing involutions on three-colored configurations and
//! their fixed-point sets.

use crate::config::TripleConfig;
use crate::error::{Error, Result};
use crate::partitions::support;
use crate::perm::{CyclePermutation, PartialPermutation};
use crate::tableaux::{
    column_move_step, partition_to_tableau, perm_to_tableau, symmetry_involution,
    tableau_to_partition, tableau_to_perm, Column, MoveOutcome, ZeroOneTableau,
};

use super::psi::{psi_s, psi_s_inverse};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Fixed,
    Image(TripleConfig),
}

impl Step {
    pub fn image(&self) -> Option<&TripleConfig> {
        match self {
            Step::Fixed => None,
            Step::Image(c) => Some(c),
        }
    }
}

/// Relabels block names by order of first appearance.
fn relabel(labels: &[u32]) -> Vec<u32> {
    let mut map: Vec<(u32, u32)> = Vec::new();
    labels
        .iter()
        .map(|&l| match map.iter().find(|(old, _)| *old == l) {
            Some(&(_, new)) => new,
            None => {
                let new = map.len() as u32 + 1;
                map.push((l, new));
                new
            }
        })
        .collect()
}

fn rebuild(
    c: &TripleConfig,
    color: usize,
    part: PartialPermutation,
    segment: Vec<u32>,
) -> TripleConfig {
    let mut parts = c.parts().clone();
    parts[color - 1] = part;
    let mut word = Vec::with_capacity(c.word().len() + 1);
    for col in 1..=3 {
        if col == color {
            word.extend_from_slice(&segment);
        } else {
            word.extend_from_slice(c.segment(col));
        }
    }
    TripleConfig::from_parts_unchecked(parts, relabel(&word))
}

fn has_distinct_letters(w: &[u32]) -> bool {
    support(w).len() == w.len()
}

fn is_increasing_run(w: &[u32]) -> bool {
    w.iter().enumerate().all(|(i, &l)| l == i as u32 + 1)
}

fn union_support(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    support(&v)
}

fn contains_all(big: &[u32], small: &[u32]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

// ---------------------------------------------------------------------------
// fixed-point predicates

pub fn in_fix1(c: &TripleConfig) -> bool {
    c.part(3).sigma().is_identity() && has_distinct_letters(c.segment(3))
}

pub fn in_fix2(c: &TripleConfig) -> bool {
    let (a, b, w) = c.segments();
    in_fix1(c) && c.part(3).b().is_empty() && contains_all(&union_support(a, b), &support(w))
}

pub fn in_fix3(c: &TripleConfig) -> bool {
    in_fix2(c) && c.part(1).sigma().is_identity() && is_increasing_run(c.segment(1))
}

pub fn in_fix4(c: &TripleConfig) -> bool {
    let (a, b, w) = c.segments();
    in_fix3(c)
        && c.part(1).b().is_empty()
        && a.len() == c.part(1).n()
        && contains_all(&union_support(b, w), &support(a))
}

/// The word `w~_b` with `Psi_S(w_a w_b) = w_a w~_b` for `S = [#blocks] - Supp(w_c)`.
pub fn wtilde_b(c: &TripleConfig) -> Vec<u32> {
    let (a, b, w) = c.segments();
    let k = c.num_blocks();
    let s = complement_support(w, k);
    let ab: Vec<u32> = a.iter().chain(b).copied().collect();
    psi_s(&ab, &s, k)[a.len()..].to_vec()
}

fn complement_support(w: &[u32], k: u32) -> Vec<u32> {
    let supp = support(w);
    (1..=k).filter(|x| supp.binary_search(x).is_err()).collect()
}

pub fn in_fix5(c: &TripleConfig) -> bool {
    in_fix4(c)
        && c.part(2).sigma().is_identity()
        && wtilde_b(c).iter().enumerate().all(|(i, &l)| l as usize > i)
}

/// Membership in the fixed-point set of the `k`-th involution; `k = 0` is
/// the whole family.
pub fn in_fix(k: usize, c: &TripleConfig) -> bool {
    match k {
        0 => true,
        1 => in_fix1(c),
        2 => in_fix2(c),
        3 => in_fix3(c),
        4 => in_fix4(c),
        5 => in_fix5(c),
        _ => false,
    }
}

fn require(k: usize, c: &TripleConfig) -> Result<()> {
    if in_fix(k - 1, c) {
        Ok(())
    } else {
        Err(Error::DomainViolation(format!(
            "involution {k} needs a fixed point of involution {}: {c}",
            k - 1
        )))
    }
}

// ---------------------------------------------------------------------------
// involution 1: forces sigma_3 to be the identity

pub fn phi1(c: &TripleConfig) -> Result<Step> {
    phi1_raw(c)
}

pub fn phi1_raw(c: &TripleConfig) -> Result<Step> {
    let p3 = c.part(3);
    let cycles = p3.sigma().cycles();
    let labels = c.segment(3);
    let r = cycles.len();
    // cycles after position idx that are 1-cycles, with their blocks
    let greater_singles = |idx: usize| -> Vec<(usize, u32)> {
        (idx + 1..r)
            .filter(|&t| cycles[t].len() == 1)
            .map(|t| (t, labels[t]))
            .collect()
    };
    let Some(ci) = (0..r)
        .rev()
        .find(|&t| cycles[t].len() >= 2 || greater_singles(t).iter().any(|&(_, b)| b == labels[t]))
    else {
        return Ok(Step::Fixed);
    };
    let block = labels[ci];
    // by maximality every later cycle is a 1-cycle, at most one per block
    let mut singles = greater_singles(ci);
    singles.sort_by_key(|&(_, b)| b);
    let mut new_cycles: Vec<Vec<usize>> = cycles.to_vec();
    let mut new_labels: Vec<u32> = labels.to_vec();
    let mut remove: Option<usize> = None;
    if singles.iter().any(|&(_, b)| b == block) {
        // glue the single in the leftmost block onto the selected cycle and
        // shift the chain of singles one block to the left
        let chain: Vec<(usize, u32)> = singles
            .iter()
            .copied()
            .filter(|&(_, b)| b <= block)
            .collect();
        let (g0, _) = chain[0];
        let e = cycles[g0][0];
        new_cycles[ci].push(e);
        for l in 1..chain.len() {
            new_labels[chain[l].0] = chain[l - 1].1;
        }
        remove = Some(g0);
    } else {
        // detach the last element and undo the shift
        let e = new_cycles[ci].pop().unwrap();
        let chain: Vec<(usize, u32)> = singles
            .iter()
            .copied()
            .filter(|&(_, b)| b < block)
            .collect();
        let target = chain.first().map_or(block, |&(_, b)| b);
        for l in 0..chain.len() {
            let to = chain.get(l + 1).map_or(block, |&(_, b)| b);
            new_labels[chain[l].0] = to;
        }
        new_cycles.push(vec![e]);
        new_labels.push(target);
    }
    let mut tagged: Vec<(Vec<usize>, u32)> = new_cycles.into_iter().zip(new_labels).collect();
    if let Some(g) = remove {
        tagged.remove(g);
    }
    tagged.sort_by_key(|(cy, _)| cy[0]);
    let (cys, segment): (Vec<Vec<usize>>, Vec<u32>) = tagged.into_iter().unzip();
    let part = PartialPermutation::from_parts(
        p3.n(),
        p3.b().to_vec(),
        CyclePermutation::from_standard(cys),
    );
    Ok(Step::Image(rebuild(c, 3, part, segment)))
}

// ---------------------------------------------------------------------------
// involution 2: forces B_3 to be empty

pub fn phi2(c: &TripleConfig) -> Result<Step> {
    require(2, c)?;
    phi2_raw(c)
}

pub fn phi2_raw(c: &TripleConfig) -> Result<Step> {
    let p3 = c.part(3);
    let (a, b, w) = c.segments();
    let k = c.num_blocks();
    let j0 = p3.b().first().map(|&x| x - 1);
    let j1 = if k > 0 && !a.contains(&k) && !b.contains(&k) {
        w.iter().position(|&l| l == k).map(|p| w.len() - 1 - p)
    } else {
        None
    };
    let mut elems = p3.sigma().support();
    let mut bset = p3.b().to_vec();
    let mut seg = w.to_vec();
    if let Some(j0) = j0.filter(|&j0| j1.is_none_or(|j1| j0 <= j1)) {
        bset.remove(0);
        let e = j0 + 1;
        let pos = elems.binary_search(&e).unwrap_err();
        elems.insert(pos, e);
        if j0 > seg.len() {
            return Err(Error::IllegalState(format!(
                "cannot leave {j0} letters after the new block"
            )));
        }
        seg.insert(seg.len() - j0, k + 1);
    } else if let Some(j1) = j1 {
        let e = j1 + 1;
        let p = elems
            .binary_search(&e)
            .map_err(|_| Error::IllegalState(format!("element {e} is not a 1-cycle")))?;
        elems.remove(p);
        seg.remove(seg.len() - 1 - j1);
        let pos = bset.binary_search(&e).unwrap_err();
        bset.insert(pos, e);
    } else {
        return Ok(Step::Fixed);
    }
    let part = PartialPermutation::from_parts(p3.n(), bset, CyclePermutation::identity(&elems));
    Ok(Step::Image(rebuild(c, 3, part, seg)))
}

// ---------------------------------------------------------------------------
// involution 3: forces sigma_1 to be the identity and w_a = 12...n

pub fn phi3(c: &TripleConfig) -> Result<Step> {
    require(3, c)?;
    phi3_raw(c)
}

pub fn phi3_raw(c: &TripleConfig) -> Result<Step> {
    let p1 = c.part(1);
    let (a, b, w) = c.segments();
    let n = p1.n() - p1.b().len();
    let m = a.iter().copied().max().unwrap_or(0);
    let rest = union_support(b, w);
    let s: Vec<u32> = (1..=m).filter(|x| rest.binary_search(x).is_err()).collect();
    let ta = perm_to_tableau(p1.sigma());
    let wa = crate::partitions::RgWord::new(psi_s(a, &s, m))
        .map_err(|e| Error::IllegalState(format!("w_a image is not restricted growth: {e}")))?;
    let tb = symmetry_involution(&partition_to_tableau(&wa));
    match column_move_step(&ta, &tb, n, m as usize)? {
        MoveOutcome::Fixed => Ok(Step::Fixed),
        MoveOutcome::Moved(ta2, tb2) => {
            let sigma = tableau_to_perm(&ta2, &p1.sigma().support())?;
            let wa2 = tableau_to_partition(&symmetry_involution(&tb2), m as usize)?;
            let seg = psi_s_inverse(wa2.letters(), &s, m);
            let part = PartialPermutation::from_parts(p1.n(), p1.b().to_vec(), sigma);
            Ok(Step::Image(rebuild(c, 1, part, seg)))
        }
    }
}

// ---------------------------------------------------------------------------
// involution 4: forces B_1 to be empty

pub fn phi4(c: &TripleConfig) -> Result<Step> {
    require(4, c)?;
    phi4_raw(c)
}

/// Also usable outside the domain, where it still toggles the smallest
/// element of `B_1` or singleton color-1 block.
pub fn phi4_raw(c: &TripleConfig) -> Result<Step> {
    let p1 = c.part(1);
    let (a, b, w) = c.segments();
    let rest = union_support(b, w);
    let elems = p1.sigma().support();
    let singleton = |e: usize| -> Option<u32> {
        let idx = p1.sigma().cycles().iter().position(|cy| cy == &vec![e])?;
        let letter = a[idx];
        let alone =
            a.iter().filter(|&&l| l == letter).count() == 1 && rest.binary_search(&letter).is_err();
        alone.then_some(letter)
    };
    let Some(i0) = (1..=p1.n()).find(|&e| p1.b().contains(&e) || singleton(e).is_some()) else {
        return Ok(Step::Fixed);
    };
    let mut bset = p1.b().to_vec();
    let mut new_elems = elems.clone();
    let mut word = c.word().to_vec();
    let off = c.offsets();
    let mut cycles: Vec<Vec<usize>> = p1.sigma().cycles().to_vec();
    if let Ok(pos) = bset.binary_search(&i0) {
        bset.remove(pos);
        let at = new_elems.binary_search(&i0).unwrap_err();
        new_elems.insert(at, i0);
        // the new block sits right before the first block whose minimum is greater
        let cidx = cycles.partition_point(|cy| cy[0] < i0);
        let blockno = if cidx == 0 {
            1
        } else {
            word[..cidx].iter().copied().max().unwrap() + 1
        };
        for l in word.iter_mut() {
            if *l >= blockno {
                *l += 1;
            }
        }
        word.insert(cidx, blockno);
        cycles.insert(cidx, vec![i0]);
    } else {
        let letter = singleton(i0).unwrap();
        let cidx = cycles.iter().position(|cy| cy == &vec![i0]).unwrap();
        cycles.remove(cidx);
        word.remove(off[0] + cidx);
        for l in word.iter_mut() {
            if *l > letter {
                *l -= 1;
            }
        }
        let at = bset.binary_search(&i0).unwrap_err();
        bset.insert(at, i0);
    }
    let mut parts = c.parts().clone();
    parts[0] =
        PartialPermutation::from_parts(p1.n(), bset, CyclePermutation::from_standard(cycles));
    Ok(Step::Image(TripleConfig::from_parts_unchecked(
        parts,
        relabel(&word),
    )))
}

// ---------------------------------------------------------------------------
// involution 5: forces sigma_2 to be the identity

pub fn phi5(c: &TripleConfig) -> Result<Step> {
    require(5, c)?;
    let [n1, n2, n3] = c.sizes();
    if !(n3 >= n1 && n1 >= n2) {
        return Err(Error::DomainViolation(format!(
            "involution 5 needs n3 >= n1 >= n2, got ({n1}, {n2}, {n3})"
        )));
    }
    let out = phi5_raw(c)?;
    if let Step::Image(img) = &out {
        if !in_fix4(img) {
            return Err(Error::IllegalState(format!("image {img} left the domain")));
        }
    }
    Ok(out)
}

pub fn phi5_raw(c: &TripleConfig) -> Result<Step> {
    let p2 = c.part(2);
    let (a, _, w) = c.segments();
    let k = c.num_blocks();
    let s = complement_support(w, k);
    let mut wt = wtilde_b(c);
    let t = perm_to_tableau(p2.sigma());
    let i0 = t.min_len();
    let h0 = wt
        .iter()
        .enumerate()
        .position(|(i, &l)| (l as usize) < i + 1)
        .map(|p| p + 1);
    let mut cols = t.columns().to_vec();
    if let Some(h0) = h0.filter(|&h0| i0.is_none_or(|i0| i0 >= h0)) {
        let letter = wt.remove(h0 - 1) as usize;
        cols.push(Column::from_bottom(h0 - 1, letter)?);
    } else if let Some(i0) = i0 {
        let col = cols.pop().unwrap();
        if i0 > wt.len() {
            return Err(Error::IllegalState(format!(
                "no room for a letter at position {}",
                i0 + 1
            )));
        }
        wt.insert(i0, col.row_from_bottom() as u32);
    } else {
        return Ok(Step::Fixed);
    }
    let sigma = tableau_to_perm(&ZeroOneTableau::new(cols), &p2.sigma().support())?;
    let ab: Vec<u32> = a.iter().chain(&wt).copied().collect();
    let back = psi_s_inverse(&ab, &s, k);
    let seg = back[a.len()..].to_vec();
    let part = PartialPermutation::from_parts(p2.n(), p2.b().to_vec(), sigma);
    Ok(Step::Image(rebuild(c, 2, part, seg)))
}

/// The `k`-th involution with its domain check.
pub fn phi(k: usize, c: &TripleConfig) -> Result<Step> {
    match k {
        1 => phi1(c),
        2 => phi2(c),
        3 => phi3(c),
        4 => phi4(c),
        5 => phi5(c),
        _ => Err(Error::InvalidInput(format!("there is no involution {k}"))),
    }
}

/// Runs the configuration through the chain; returns the first involution
/// that moves it, or `None` when it survives all five.
pub fn chain_stage(c: &TripleConfig) -> Result<Option<(usize, TripleConfig)>> {
    for k in 1..=5 {
        if let Step::Image(img) = phi(k, c)? {
            return Ok(Some((k, img)));
        }
    }
    Ok(None)
}
