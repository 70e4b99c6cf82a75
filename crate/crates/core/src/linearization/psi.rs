//! The bijections `Psi_i` and `Psi_S` on restricted growth words.

/// `Psi_i` on a word of maximum at most `k`. The identity when `i >= k` or
/// when `i + 1` does not occur.
pub fn psi_i(w: &[u32], i: u32, k: u32) -> Vec<u32> {
    let mut out = w.to_vec();
    if i >= k {
        return out;
    }
    let Some(first) = w.iter().position(|&l| l == i + 1) else {
        return out;
    };
    match w.iter().rposition(|&l| l == i).filter(|&p| p > first) {
        Some(p) => {
            out[p] = i + 1;
            for l in &mut out[p + 1..] {
                if *l == i + 1 {
                    *l = i;
                }
            }
        }
        None => {
            for l in &mut out[first + 1..] {
                if *l == i + 1 {
                    *l = i;
                }
            }
        }
    }
    out
}

pub fn psi_i_inverse(u: &[u32], i: u32, k: u32) -> Vec<u32> {
    let mut out = u.to_vec();
    if i >= k {
        return out;
    }
    let Some(first) = u.iter().position(|&l| l == i + 1) else {
        return out;
    };
    let last = u.iter().rposition(|&l| l == i + 1).unwrap();
    if first == last {
        for l in &mut out[first + 1..] {
            if *l == i {
                *l = i + 1;
            }
        }
    } else {
        out[last] = i;
        for l in &mut out[last + 1..] {
            if *l == i {
                *l = i + 1;
            }
        }
    }
    out
}

/// `Psi_S`: for `s` in `S` from the largest down, apply `Psi_s`, then
/// `Psi_{s+1}`, up to `Psi_k`.
pub fn psi_s(w: &[u32], s: &[u32], k: u32) -> Vec<u32> {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    let mut out = w.to_vec();
    for &start in sorted.iter().rev() {
        for i in start..=k {
            out = psi_i(&out, i, k);
        }
    }
    out
}

pub fn psi_s_inverse(u: &[u32], s: &[u32], k: u32) -> Vec<u32> {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    let mut out = u.to_vec();
    for &start in &sorted {
        for i in (start..=k).rev() {
            out = psi_i_inverse(&out, i, k);
        }
    }
    out
}

/// The constant `sum_{s in S} (k - s)` of the interpolation identity.
pub fn psi_offset(s: &[u32], k: u32) -> usize {
    s.iter().map(|&x| (k - x) as usize).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::parse_word;

    fn w(s: &str) -> Vec<u32> {
        parse_word(s).unwrap()
    }

    #[test]
    fn single_steps() {
        assert_eq!(psi_i(&w("111212332122"), 1, 3), w("111212332211"));
        assert_eq!(psi_i(&w("1112232"), 1, 3), w("1112131"));
        assert_eq!(psi_i(&w("1112232"), 3, 3), w("1112232"));
        for x in ["111212332122", "1112232", "12121"] {
            for i in 1..=3 {
                assert_eq!(psi_i_inverse(&psi_i(&w(x), i, 3), i, 3), w(x));
            }
        }
    }

    #[test]
    fn composite() {
        let u = psi_s(&w("1234561265"), &[1], 6);
        assert_eq!(u, w("1234566154"));
        assert_eq!(psi_s_inverse(&w("123456654"), &[1], 6), w("123456165"));
        assert_eq!(psi_s(&w("1213"), &[], 3), w("1213"));
    }
}
