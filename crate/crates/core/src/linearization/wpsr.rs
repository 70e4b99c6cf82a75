//! A generic checker for weight-preserving sign-reversing involutions.

use std::fmt;

use crate::algebra::{MonomialSum, SignedMonomial, TriPoly};
use crate::config::{enumerate_configs, TripleConfig};
use crate::error::Result;

use super::involutions::{in_fix, phi, Step};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WpsrReport {
    pub family_size: usize,
    pub pairs: usize,
    pub fixed_points: usize,
    /// Signed weight of the elements moved by the involution; zero on success.
    pub paired_weight: TriPoly,
    pub fixed_weight: TriPoly,
}

impl WpsrReport {
    pub fn total_weight(&self) -> TriPoly {
        &self.paired_weight + &self.fixed_weight
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WpsrFailure {
    pub element: String,
    pub reason: String,
}

impl fmt::Display for WpsrFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.reason, self.element)
    }
}

impl std::error::Error for WpsrFailure {}

/// Checks that `involution` pairs the non-fixed members of `family` into
/// opposite-weight orbits of size two that stay inside `domain`, and that its
/// fixed points are exactly those satisfying `is_fixed`.
pub fn wpsr_verify<T, I, F, W, D, P>(
    family: I,
    involution: F,
    weight: W,
    domain: D,
    is_fixed: P,
) -> std::result::Result<WpsrReport, WpsrFailure>
where
    T: PartialEq + fmt::Display,
    I: IntoIterator<Item = T>,
    F: Fn(&T) -> Result<Option<T>>,
    W: Fn(&T) -> SignedMonomial,
    D: Fn(&T) -> bool,
    P: Fn(&T) -> bool,
{
    let fail = |e: &T, reason: String| WpsrFailure {
        element: e.to_string(),
        reason,
    };
    let mut size = 0;
    let mut moved = 0;
    let mut fixed = 0;
    let mut paired = MonomialSum::new();
    let mut fixed_sum = MonomialSum::new();
    for e in family {
        size += 1;
        let w = weight(&e);
        match involution(&e).map_err(|err| fail(&e, err.to_string()))? {
            None => {
                if !is_fixed(&e) {
                    return Err(fail(
                        &e,
                        "fixed but outside the predicted fixed-point set".into(),
                    ));
                }
                fixed += 1;
                fixed_sum.add(w);
            }
            Some(img) => {
                if is_fixed(&e) {
                    return Err(fail(&e, format!("predicted fixed but moved to {img}")));
                }
                if img == e {
                    return Err(fail(
                        &e,
                        "image equals the element but is not reported fixed".into(),
                    ));
                }
                if !domain(&img) {
                    return Err(fail(&e, format!("image {img} leaves the family")));
                }
                if weight(&img) != w.negated() {
                    return Err(fail(
                        &e,
                        format!("image {img} does not carry the opposite weight"),
                    ));
                }
                match involution(&img).map_err(|err| fail(&img, err.to_string()))? {
                    Some(back) if back == e => {}
                    Some(back) => {
                        return Err(fail(&e, format!("not an involution: {img} maps to {back}")))
                    }
                    None => return Err(fail(&e, format!("not an involution: {img} is fixed"))),
                }
                moved += 1;
                paired.add(w);
            }
        }
    }
    Ok(WpsrReport {
        family_size: size,
        pairs: moved / 2,
        fixed_points: fixed,
        paired_weight: paired.to_tripoly(),
        fixed_weight: fixed_sum.to_tripoly(),
    })
}

/// The contract for the `k`-th involution on the fixed points of the previous
/// one inside `L(n_1, n_2, n_3)`.
pub fn verify_involution(
    k: usize,
    sizes: [usize; 3],
) -> std::result::Result<WpsrReport, WpsrFailure> {
    wpsr_verify(
        enumerate_configs(sizes).filter(|c| in_fix(k - 1, c)),
        |c: &TripleConfig| {
            Ok(match phi(k, c)? {
                Step::Fixed => None,
                Step::Image(img) => Some(img),
            })
        },
        TripleConfig::weight,
        |c| in_fix(k - 1, c),
        |c| in_fix(k, c),
    )
}

/// Weight sum of the configurations surviving the first `k` involutions.
pub fn fixed_point_sum(k: usize, sizes: [usize; 3]) -> TriPoly {
    enumerate_configs(sizes)
        .filter(|c| in_fix(k, c))
        .map(|c| c.weight())
        .collect::<MonomialSum>()
        .to_tripoly()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_involution_fixes_everything() {
        let r = wpsr_verify(
            enumerate_configs([1, 1, 0]),
            |_| Ok(None),
            TripleConfig::weight,
            |_| true,
            |_| true,
        )
        .unwrap();
        assert_eq!(r.pairs, 0);
        assert_eq!(r.fixed_points, r.family_size);
    }

    #[test]
    fn first_involution_small_family() {
        let r = verify_involution(1, [2, 1, 1]).unwrap();
        assert!(r.paired_weight.is_zero());
    }
}
