//! 0-1 tableaux and their correspondences with set partitions and permutations.
//!
//! A column is a `(len, one_row)` pair with `one_row` counted from the top,
//! starting at 1. The zeros below the 1 are inversions, those above it are
//! non-inversions.

use crate::error::{Error, Result};
use crate::partitions::RgWord;
use crate::perm::CyclePermutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column {
    pub len: usize,
    pub one_row: usize,
}

impl Column {
    pub fn new(len: usize, one_row: usize) -> Result<Self> {
        if one_row == 0 || one_row > len {
            return Err(Error::InvalidInput(format!(
                "no row {one_row} in a column of length {len}"
            )));
        }
        Ok(Self { len, one_row })
    }

    /// Builds a column from the row of its 1 counted from the bottom.
    pub fn from_bottom(len: usize, row_from_bottom: usize) -> Result<Self> {
        if row_from_bottom == 0 || row_from_bottom > len {
            return Err(Error::InvalidInput(format!(
                "no row {row_from_bottom} in a column of length {len}"
            )));
        }
        Ok(Self {
            len,
            one_row: len + 1 - row_from_bottom,
        })
    }

    pub fn row_from_bottom(&self) -> usize {
        self.len + 1 - self.one_row
    }

    pub fn inv(&self) -> usize {
        self.len - self.one_row
    }

    pub fn nin(&self) -> usize {
        self.one_row - 1
    }

    pub fn reflect(&self) -> Self {
        Self {
            len: self.len,
            one_row: self.len + 1 - self.one_row,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroOneTableau {
    columns: Vec<Column>,
}

impl ZeroOneTableau {
    pub fn new(columns: Vec<Column>) -> Self {
        Self { columns }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn cells(&self) -> usize {
        self.columns.iter().map(|c| c.len).sum()
    }

    pub fn inv_nin(&self) -> (usize, usize) {
        self.columns
            .iter()
            .fold((0, 0), |(i, n), c| (i + c.inv(), n + c.nin()))
    }

    pub fn inv(&self) -> usize {
        self.inv_nin().0
    }

    pub fn nin(&self) -> usize {
        self.inv_nin().1
    }

    pub fn min_len(&self) -> Option<usize> {
        self.columns.iter().map(|c| c.len).min()
    }

    /// Rendering as rows of 0s and 1s, top row first, columns left to right.
    pub fn rows(&self) -> Vec<String> {
        let h = self.columns.iter().map(|c| c.len).max().unwrap_or(0);
        (1..=h)
            .map(|r| {
                self.columns
                    .iter()
                    .filter(|c| r <= c.len)
                    .map(|c| if c.one_row == r { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

impl From<Vec<Column>> for ZeroOneTableau {
    fn from(columns: Vec<Column>) -> Self {
        Self { columns }
    }
}

/// Reflects every column top to bottom, exchanging `inv` and `nin`.
pub fn symmetry_involution(t: &ZeroOneTableau) -> ZeroOneTableau {
    ZeroOneTableau {
        columns: t.columns.iter().map(Column::reflect).collect(),
    }
}

/// One column per non-pivot position `j` of the restricted growth word: its
/// length is the number of blocks opened before `j`, its 1 sits in row
/// `w_j`. Columns come in position order, so lengths weakly increase.
pub fn partition_to_tableau(w: &RgWord) -> ZeroOneTableau {
    let mut max = 0;
    let mut columns = Vec::new();
    for &l in w.letters() {
        if l > max {
            max = l;
        } else {
            columns.push(Column {
                len: max as usize,
                one_row: l as usize,
            });
        }
    }
    ZeroOneTableau { columns }
}

/// Inverse of [`partition_to_tableau`] for a partition with `k` blocks.
pub fn tableau_to_partition(t: &ZeroOneTableau, k: usize) -> Result<RgWord> {
    let mut cur = 0usize;
    let mut word = Vec::with_capacity(t.columns.len() + k);
    for c in &t.columns {
        if c.len < cur || c.len > k || c.len == 0 {
            return Err(Error::InvalidInput(format!(
                "column lengths must weakly increase and stay within 1..={k}"
            )));
        }
        while cur < c.len {
            cur += 1;
            word.push(cur as u32);
        }
        word.push(c.one_row as u32);
    }
    while cur < k {
        cur += 1;
        word.push(cur as u32);
    }
    Ok(RgWord::new_unchecked(word))
}

/// One column per element `e` that is not a cycle minimum. If `e` sits at
/// position `i` of the flattened cycle word restricted to the `e` smallest
/// elements, the column has length `e - 1` and its 1 in row `i - 1`.
/// Elements are replaced by their ranks in the support. Columns come in
/// decreasing length.
pub fn perm_to_tableau(sigma: &CyclePermutation) -> ZeroOneTableau {
    let support = sigma.support();
    let rank = |x: usize| support.binary_search(&x).unwrap() + 1;
    let flat: Vec<usize> = sigma.flatten().into_iter().map(rank).collect();
    let minima: Vec<usize> = sigma.cycles().iter().map(|c| rank(c[0])).collect();
    let mut columns = Vec::new();
    for e in (1..=flat.len()).rev() {
        if minima.contains(&e) {
            continue;
        }
        let pos = flat
            .iter()
            .filter(|&&x| x <= e)
            .position(|&x| x == e)
            .unwrap()
            + 1;
        columns.push(Column {
            len: e - 1,
            one_row: pos - 1,
        });
    }
    ZeroOneTableau { columns }
}

/// Inverse of [`perm_to_tableau`]; the ranks are mapped back to `elements`.
pub fn tableau_to_perm(t: &ZeroOneTableau, elements: &[usize]) -> Result<CyclePermutation> {
    let mut elems = elements.to_vec();
    elems.sort_unstable();
    let n = elems.len();
    let mut by_len: Vec<Option<usize>> = vec![None; n.max(1)];
    for c in &t.columns {
        if c.len == 0 || c.len >= n || by_len[c.len].is_some() {
            return Err(Error::InvalidInput(
                "permutation tableaux need distinct column lengths below the size".into(),
            ));
        }
        by_len[c.len] = Some(c.one_row);
    }
    let mut word: Vec<usize> = Vec::with_capacity(n);
    let mut starts: Vec<bool> = Vec::with_capacity(n);
    for e in 1..=n {
        match by_len.get(e - 1).copied().flatten() {
            Some(r) if e > 1 => {
                word.insert(r, e);
                starts.insert(r, false);
            }
            _ => {
                word.push(e);
                starts.push(true);
            }
        }
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for (&x, &s) in word.iter().zip(&starts) {
        let v = elems[x - 1];
        if s {
            cycles.push(vec![v]);
        } else {
            cycles.last_mut().unwrap().push(v);
        }
    }
    Ok(CyclePermutation::from_standard(cycles))
}

/// A word `b_1 ... b_z` with letters at most `height` drawn in a
/// `height x z` rectangle, column `i` carrying its 1 in row `b_i` from the
/// bottom.
pub fn rectangular_encoding(w: &[u32], height: usize) -> Result<ZeroOneTableau> {
    let columns = w
        .iter()
        .map(|&b| Column::from_bottom(height, b as usize))
        .collect::<Result<Vec<_>>>()?;
    Ok(ZeroOneTableau { columns })
}

/// The rectangular encoding with the bottom `i - 1` cells of column `i`
/// removed; only defined when `b_i >= i`.
pub fn reduced_rectangular_encoding(w: &[u32], height: usize) -> Result<ZeroOneTableau> {
    let mut columns = Vec::with_capacity(w.len());
    for (i, &b) in w.iter().enumerate() {
        let b = b as usize;
        if b <= i || height <= i {
            return Err(Error::InvalidInput(format!(
                "letter {b} at position {} is below it",
                i + 1
            )));
        }
        columns.push(Column::from_bottom(height - i, b - i)?);
    }
    Ok(ZeroOneTableau { columns })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveOutcome {
    Fixed,
    Moved(ZeroOneTableau, ZeroOneTableau),
}

/// The column exchange between a permutation tableau `a` (distinct lengths,
/// all below `n`, decreasing order) and a tableau `b` (lengths at most `m`,
/// weakly increasing order). The shorter side gives up its rightmost
/// shortest column; ties go from `a` to `b`.
pub fn column_move_step(
    a: &ZeroOneTableau,
    b: &ZeroOneTableau,
    n: usize,
    m: usize,
) -> Result<MoveOutcome> {
    if a.columns.windows(2).any(|w| w[0].len <= w[1].len) || a.columns.iter().any(|c| c.len >= n) {
        return Err(Error::IllegalState(
            "first tableau must have distinct decreasing lengths below n".into(),
        ));
    }
    if b.columns.windows(2).any(|w| w[0].len > w[1].len) || b.columns.iter().any(|c| c.len > m) {
        return Err(Error::IllegalState(
            "second tableau must have weakly increasing lengths at most m".into(),
        ));
    }
    let la = a.columns.last().map(|c| c.len);
    let lb = b.columns.first().map(|c| c.len);
    let mut a2 = a.columns.clone();
    let mut b2 = b.columns.clone();
    if let Some(lb) = lb.filter(|&lb| la.is_none_or(|la| lb < la)) {
        let idx = b2.iter().take_while(|c| c.len == lb).count() - 1;
        a2.push(b2.remove(idx));
    } else if let Some(la) = la {
        if la > m {
            return Err(Error::IllegalState(format!(
                "column of length {la} cannot join a tableau bounded by {m}"
            )));
        }
        let col = a2.pop().unwrap();
        let idx = b2.iter().take_while(|c| c.len == la).count();
        b2.insert(idx, col);
    } else {
        return Ok(MoveOutcome::Fixed);
    }
    Ok(MoveOutcome::Moved(
        ZeroOneTableau { columns: a2 },
        ZeroOneTableau { columns: b2 },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cols(v: &[(usize, usize)]) -> ZeroOneTableau {
        ZeroOneTableau::new(v.iter().map(|&(l, r)| Column::new(l, r).unwrap()).collect())
    }

    #[test]
    fn partition_example() {
        let w: RgWord = "112133132432".parse().unwrap();
        let t = partition_to_tableau(&w);
        assert_eq!(
            t,
            cols(&[
                (1, 1),
                (2, 1),
                (3, 3),
                (3, 1),
                (3, 3),
                (3, 2),
                (4, 3),
                (4, 2)
            ])
        );
        assert_eq!(t.inv_nin(), (7, 8));
        assert_eq!(symmetry_involution(&t).inv_nin(), (8, 7));
        assert_eq!(tableau_to_partition(&t, 4).unwrap(), w);
    }

    #[test]
    fn permutation_example() {
        let s = CyclePermutation::new(vec![vec![1, 3, 4, 7, 2], vec![5, 6], vec![8]]).unwrap();
        let t = perm_to_tableau(&s);
        assert_eq!(t, cols(&[(6, 3), (5, 5), (3, 2), (2, 1), (1, 1)]));
        assert_eq!(t.inv(), 5);
        assert_eq!(
            tableau_to_perm(&t, &(1..=8).collect::<Vec<_>>()).unwrap(),
            s
        );
        assert!(perm_to_tableau(&CyclePermutation::identity(&[1, 2, 3])).is_empty());
    }

    #[test]
    fn single_column_statistics() {
        assert_eq!(cols(&[(3, 2)]).inv_nin(), (1, 1));
        assert_eq!(ZeroOneTableau::empty().inv_nin(), (0, 0));
    }

    #[test]
    fn rectangle() {
        let t = rectangular_encoding(&[1, 7, 5, 7, 8, 7], 8).unwrap();
        assert_eq!(
            t.rows(),
            vec!["000010", "010101", "000000", "001000", "000000", "000000", "000000", "100000"]
        );
        assert_eq!(t.inv(), 6 + 4 + 6 + 7 + 6);
        let r = reduced_rectangular_encoding(&[1, 7, 5, 7, 8, 7], 8).unwrap();
        assert_eq!(r.cells(), 48 - 15);
        assert_eq!(r.inv() + 15, t.inv());
    }

    #[test]
    fn column_move_orbit() {
        let e = ZeroOneTableau::empty();
        assert_eq!(column_move_step(&e, &e, 3, 2).unwrap(), MoveOutcome::Fixed);
        let b = cols(&[(1, 1)]);
        let MoveOutcome::Moved(a1, b1) = column_move_step(&e, &b, 3, 2).unwrap() else {
            panic!()
        };
        assert_eq!((a1.num_columns(), b1.num_columns()), (1, 0));
        assert_eq!(
            column_move_step(&a1, &b1, 3, 2).unwrap(),
            MoveOutcome::Moved(e, b)
        );
    }
}
