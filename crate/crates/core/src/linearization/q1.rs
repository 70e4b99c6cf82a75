//! Fixed points of the `q = 1` involution: all `B_i` empty, all `sigma_i`
//! the identity, each of `w_a, w_b, w_c` with distinct letters and each
//! segment's support inside the union of the other two.

use crate::algebra::{LaurentPoly, TriPoly};

/// Restricted growth words `w_a w_b w_c` with the segment lengths `sizes`
/// satisfying the conditions above.
pub fn q1_fixed_words(sizes: [usize; 3]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut w = Vec::with_capacity(sizes.iter().sum());
    dfs(sizes, &mut w, 0, &mut out);
    out
}

fn segment_start(sizes: [usize; 3], pos: usize) -> usize {
    if pos < sizes[0] {
        0
    } else if pos < sizes[0] + sizes[1] {
        sizes[0]
    } else {
        sizes[0] + sizes[1]
    }
}

fn dfs(sizes: [usize; 3], w: &mut Vec<u32>, max: u32, out: &mut Vec<Vec<u32>>) {
    let total: usize = sizes.iter().sum();
    if w.len() == total {
        if supports_covered(sizes, w) {
            out.push(w.clone());
        }
        return;
    }
    // every block needs letters from two segments, so at most total/2 blocks
    let start = segment_start(sizes, w.len());
    for l in 1..=max + 1 {
        if w[start..].contains(&l) || (l == max + 1 && (2 * l as usize) > total) {
            continue;
        }
        w.push(l);
        dfs(sizes, w, max.max(l), out);
        w.pop();
    }
}

fn supports_covered(sizes: [usize; 3], w: &[u32]) -> bool {
    let segs = [
        &w[..sizes[0]],
        &w[sizes[0]..sizes[0] + sizes[1]],
        &w[sizes[0] + sizes[1]..],
    ];
    (0..3).all(|i| {
        segs[i]
            .iter()
            .all(|l| (0..3).any(|k| k != i && segs[k].contains(l)))
    })
}

/// `sum a^#blocks` over the fixed points.
pub fn q1_fixedpoints(sizes: [usize; 3]) -> TriPoly {
    let mut out = TriPoly::zero();
    for w in q1_fixed_words(sizes) {
        let k = w.iter().copied().max().unwrap_or(0);
        out.add_term(k, 0, LaurentPoly::one());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linearization::formulas::q1_formula;

    #[test]
    fn small_values() {
        assert_eq!(q1_fixedpoints([1, 1, 0]), TriPoly::a());
        assert_eq!(q1_fixed_words([1, 1, 0]), vec![vec![1, 1]]);
        assert!(q1_fixedpoints([1, 1, 3]).is_zero());
        assert_eq!(q1_fixedpoints([0, 0, 0]), TriPoly::one());
    }

    #[test]
    fn matches_closed_form() {
        for n1 in 0..=3 {
            for n2 in 0..=3 {
                for n3 in 0..=3 {
                    assert_eq!(q1_fixedpoints([n1, n2, n3]), q1_formula([n1, n2, n3]));
                }
            }
        }
    }
}
