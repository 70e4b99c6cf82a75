//! Runnable identity suites. Each criterion checks exact equalities over a
//! range of instances and reports the first counterexample it meets.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use crate::algebra::{
    binomial, qfactorial, qint, qstirling1, qstirling2, LaurentPoly, SignedMonomial, TriPoly,
};
use crate::charlier::{
    charlier_combinatorial, charlier_explicit, charlier_recurrence, charlier_sequence,
};
use crate::classical::{
    classical_explicit, classical_from_recurrence, classical_moments, classical_moments_product,
    classical_moments_rescaled, classical_recurrence_coeffs, classical_unscaled_from_recurrence,
    has_mixed_signs,
};
use crate::linearization::formulas::{double_sum, linearization_formula, q1_formula, triple_sum};
use crate::linearization::properties::{
    cancelling_witnesses, coefficient_symmetry, linearization_k, lowest_coefficient_positive,
    positive_in_r,
};
use crate::linearization::psi::{psi_s, psi_s_inverse};
use crate::linearization::q1::q1_fixedpoints;
use crate::linearization::wpsr::{fixed_point_sum, verify_involution, wpsr_verify};
use crate::linearization::wtilde::{
    fix_wtilde_formula, fix_wtilde_sum, grouped_linearization, wtilde_by_stars, wtilde_direct,
    WTildeParams,
};
use crate::moments::{
    linearization_bruteforce, moments_closed, moments_enumerated, orthogonality_check,
    squared_norm, MomentFunctional, StirlingPath,
};
use crate::partitions::{ls, mixed_statistic, rg_decode, rg_encode, rg_words, stats, RgWord};
use crate::perm::CyclePermutation;
use crate::tableaux::{
    column_move_step, partition_to_tableau, perm_to_tableau, symmetry_involution,
    tableau_to_partition, tableau_to_perm, Column, MoveOutcome, ZeroOneTableau,
};

/// Default cap on instance sizes for brute-force work.
pub const DEFAULT_MAX_SIZE: usize = 9;

/// Caps the instance sizes of every criterion. A criterion whose natural
/// range exceeds the cap runs on the clipped range and says so.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_size: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_size: DEFAULT_MAX_SIZE,
        }
    }
}

impl Budget {
    pub fn new(max_size: usize) -> Self {
        Self { max_size }
    }

    /// No clipping at all.
    pub fn unbounded() -> Self {
        Self {
            max_size: usize::MAX,
        }
    }

    fn cap(&self, natural: usize) -> usize {
        natural.min(self.max_size)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: usize,
    pub slug: &'static str,
    pub name: &'static str,
    /// `Err` holds the first counterexample.
    pub result: Result<usize, String>,
    pub clipped: bool,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let clip = if self.clipped { " (clipped)" } else { "" };
        match &self.result {
            Ok(n) => write!(
                f,
                "PASS [{:>2}] {}: {n} checks{clip} in {:.2?}",
                self.id, self.name, self.elapsed
            ),
            Err(e) => write!(f, "FAIL [{:>2}] {}{clip}: {e}", self.id, self.name),
        }
    }
}

type Check = Result<usize, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `(id, slug, name, natural instance size)` for every criterion. Size 0
/// marks a fixed instance that always runs in full.
pub const CRITERIA: [(usize, &str, &str, usize); 13] = [
    (1, "polynomials", "three routes to C_n agree", 8),
    (
        2,
        "moments",
        "moments by both Stirling paths and by enumeration",
        10,
    ),
    (3, "orthogonality", "orthogonality", 6),
    (4, "regression", "regression value L(C2 C2 C1)", 0),
    (
        5,
        "formulas",
        "closed linearization formulas against brute force",
        5,
    ),
    (6, "involutions", "sign-reversing involutions", 7),
    (7, "psi", "Psi_S identity and bijectivity", 7),
    (
        8,
        "wtilde",
        "W~(S) construction and its closed fixed-point sum",
        4,
    ),
    (
        9,
        "equidistribution",
        "equidistribution of the four statistics",
        8,
    ),
    (10, "tableaux", "0-1 tableau layer", 7),
    (
        11,
        "positivity",
        "positivity and symmetry of the coefficients",
        4,
    ),
    (12, "q-one", "q = 1 degeneration", 5),
    (13, "classical", "classical q-Charlier family", 5),
];

/// Looks a criterion up by number or slug.
pub fn criterion_id(key: &str) -> Option<usize> {
    CRITERIA
        .iter()
        .find(|(id, slug, _, _)| *slug == key || id.to_string() == key)
        .map(|c| c.0)
}

/// Runs one criterion. Panics if `id` is not in `1..=13`.
pub fn run(id: usize, budget: Budget) -> Outcome {
    let (_, slug, name, natural) = CRITERIA[id - 1];
    let cap = budget.cap(natural);
    let start = Instant::now();
    let result = match id {
        1 => c01(cap),
        2 => c02(cap),
        3 => c03(cap),
        4 => c04(),
        5 => c05(cap),
        6 => c06(cap),
        7 => c07(cap),
        8 => c08(cap),
        9 => c09(cap),
        10 => c10(cap),
        11 => c11(cap),
        12 => c12(cap),
        _ => c13(cap),
    };
    Outcome {
        id,
        slug,
        name,
        result,
        clipped: cap < natural,
        elapsed: start.elapsed(),
    }
}

/// Every criterion, each on its own thread, in criterion order.
pub fn run_all(budget: Budget) -> Vec<Outcome> {
    std::thread::scope(|s| {
        let handles: Vec<_> = (1..=CRITERIA.len())
            .map(|id| s.spawn(move || run(id, budget)))
            .collect();
        handles
            .into_iter()
            .zip(1..)
            .map(|(h, id)| {
                h.join().unwrap_or_else(|_| Outcome {
                    id,
                    slug: CRITERIA[id - 1].1,
                    name: CRITERIA[id - 1].2,
                    result: Err("panicked".into()),
                    clipped: false,
                    elapsed: Duration::ZERO,
                })
            })
            .collect()
    })
}

fn ordered_triples(max_n3: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..=max_n3).flat_map(|n3| (0..=n3).flat_map(move |n1| (0..=n1).map(move |n2| [n1, n2, n3])))
}

fn all_triples(max: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..=max).flat_map(move |a| (0..=max).flat_map(move |b| (0..=max).map(move |c| [a, b, c])))
}

fn regression_value() -> TriPoly {
    let mut want = TriPoly::zero();
    want.add_term(2, 0, LaurentPoly::from_coeffs(&[0, 1, 2, 1]));
    want.add_term(3, 0, LaurentPoly::from_coeffs(&[0, -1, -1, 1, 1]));
    want
}

fn norm(n: usize) -> TriPoly {
    TriPoly::monomial(
        &qfactorial(n) * &LaurentPoly::qpow((n * n.saturating_sub(1) / 2) as i64),
        n as u32,
        0,
    )
}

fn c01(cap: usize) -> Check {
    let rec = charlier_sequence(cap);
    for (n, p) in rec.iter().enumerate() {
        ensure(*p == charlier_recurrence(n), || {
            format!("recurrence disagrees with itself at n={n}")
        })?;
        ensure(*p == charlier_explicit(n), || {
            format!("explicit form differs at n={n}")
        })?;
        ensure(*p == charlier_combinatorial(n), || {
            format!("partial permutations differ at n={n}")
        })?;
    }
    Ok(3 * (cap + 1))
}

fn c02(cap: usize) -> Check {
    let a = moments_closed(cap, StirlingPath::Recurrence);
    let b = moments_closed(cap, StirlingPath::Alternating);
    let c = moments_enumerated(cap);
    for n in 0..=cap {
        ensure(a.moments()[n] == b.moments()[n], || {
            format!("Stirling paths differ at n={n}")
        })?;
        ensure(a.moments()[n] == c.moments()[n], || {
            format!("enumeration differs at n={n}")
        })?;
    }
    Ok(2 * (cap + 1))
}

fn c03(cap: usize) -> Check {
    let mut checks = 0;
    for n in 0..=cap {
        for m in 0..=cap {
            let want = if n == m { norm(n) } else { TriPoly::zero() };
            let got = orthogonality_check(n, m);
            ensure(got == want, || {
                format!("L(C_{n} C_{m}) = {got}, expected {want}")
            })?;
            checks += 1;
        }
        ensure(squared_norm(n) == norm(n), || {
            format!("squared norm at n={n}")
        })?;
    }
    Ok(checks)
}

fn c04() -> Check {
    let want = regression_value();
    let brute = linearization_bruteforce(&[2, 2, 1]);
    ensure(brute == want, || format!("moment functional gives {brute}"))?;
    let formula = linearization_formula([2, 2, 1]).map_err(|e| e.to_string())?;
    ensure(formula == want, || {
        format!("closed formula gives {formula}")
    })?;
    let chain = fixed_point_sum(5, [2, 1, 2]);
    ensure(chain == want, || format!("final fixed points give {chain}"))?;
    let total = crate::config::total_weight([2, 2, 1]);
    ensure(total == want, || format!("configuration sum gives {total}"))?;
    Ok(4)
}

fn c05(cap: usize) -> Check {
    let mut checks = 0;
    for [n1, n2, n3] in ordered_triples(cap) {
        let brute = linearization_bruteforce(&[n1, n2, n3]);
        let t3 = double_sum(n1, n2, n3).map_err(|e| e.to_string())?;
        let i62 = triple_sum(n1, n2, n3).map_err(|e| e.to_string())?;
        ensure(t3 == brute, || {
            format!("double sum differs at {:?}: {t3} vs {brute}", (n1, n2, n3))
        })?;
        ensure(i62 == brute, || {
            format!("triple sum differs at {:?}: {i62} vs {brute}", (n1, n2, n3))
        })?;
        for (_, c) in t3.terms() {
            ensure(c.is_polynomial(), || {
                format!("negative q-power left at {:?}", (n1, n2, n3))
            })?;
        }
        checks += 2;
    }
    Ok(checks)
}

fn c06(cap: usize) -> Check {
    let mut checks = 0;
    for s in 0..=cap {
        for n1 in 0..=s {
            for n2 in 0..=s - n1 {
                let sizes = [n1, n2, s - n1 - n2];
                let ordered = sizes[2] >= sizes[0] && sizes[0] >= sizes[1];
                let target = linearization_formula(sizes).map_err(|e| e.to_string())?;
                for k in 1..=5 {
                    if k == 5 && !ordered {
                        continue;
                    }
                    let r = verify_involution(k, sizes)
                        .map_err(|e| format!("involution {k} on {sizes:?}: {e}"))?;
                    ensure(r.paired_weight.is_zero(), || {
                        format!(
                            "involution {k} on {sizes:?} leaves paired weight {}",
                            r.paired_weight
                        )
                    })?;
                    ensure(r.fixed_weight == target, || {
                        format!(
                            "fixed points of involution {k} on {sizes:?} weigh {}",
                            r.fixed_weight
                        )
                    })?;
                    checks += r.family_size;
                }
            }
        }
    }
    Ok(checks)
}

fn first_occurrences(w: &[u32]) -> Vec<usize> {
    let mut seen = BTreeSet::new();
    w.iter()
        .enumerate()
        .filter(|(_, l)| seen.insert(**l))
        .map(|(i, _)| i)
        .collect()
}

fn c07(cap: usize) -> Check {
    let mut checks = 0;
    for n in 0..=cap {
        let words: Vec<RgWord> = rg_words(n).collect();
        for k in 0..=n as u32 {
            let class: Vec<&[u32]> = words
                .iter()
                .filter(|w| w.num_blocks() == k)
                .map(|w| w.letters())
                .collect();
            let domain: BTreeSet<&[u32]> = class.iter().copied().collect();
            for mask in 0u32..(1 << k) {
                let s: Vec<u32> = (1..=k).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let offset: usize = s.iter().map(|&x| (k - x) as usize).sum();
                let mut image = BTreeSet::new();
                for &w in &class {
                    let u = psi_s(w, &s, k);
                    ensure(ls(&u) == mixed_statistic(w, &s) + offset, || {
                        format!("identity fails for w={w:?}, S={s:?}")
                    })?;
                    ensure(first_occurrences(&u) == first_occurrences(w), || {
                        format!("first occurrences move for w={w:?}, S={s:?}")
                    })?;
                    ensure(psi_s_inverse(&u, &s, k) == w, || {
                        format!("inverse fails for w={w:?}, S={s:?}")
                    })?;
                    image.insert(u);
                    checks += 1;
                }
                ensure(
                    image.len() == domain.len()
                        && image.iter().all(|u| domain.contains(u.as_slice())),
                    || format!("not a bijection on RG({n},{k}) for S={s:?}"),
                )?;
            }
        }
    }
    Ok(checks)
}

fn c08(cap: usize) -> Check {
    let mut checks = 0;
    for [n1, n2, n3] in ordered_triples(cap) {
        for params in WTildeParams::all(n1, n2, n3) {
            let k = params.num_blocks();
            let built = wtilde_by_stars(&params);
            for mask in 0u32..(1 << k) {
                let s: Vec<u32> = (1..=k).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                if s.len() > params.s || s.iter().filter(|&&x| x as usize <= n1).count() != params.j
                {
                    continue;
                }
                ensure(wtilde_direct(&params, &s) == built, || {
                    format!("construction differs from Psi_S images for {params:?}, S={s:?}")
                })?;
                checks += 1;
            }
            let direct = fix_wtilde_sum(&params);
            let closed = fix_wtilde_formula(&params).map_err(|e| e.to_string())?;
            ensure(direct == closed, || {
                format!("closed form differs for {params:?}: {direct} vs {closed}")
            })?;
            checks += 1;
        }
        let grouped = grouped_linearization(n1, n2, n3).map_err(|e| e.to_string())?;
        let t3 = double_sum(n1, n2, n3).map_err(|e| e.to_string())?;
        ensure(grouped == t3, || {
            format!("grouped fixed-point count differs at {:?}", (n1, n2, n3))
        })?;
        checks += 1;
    }
    Ok(checks)
}

fn c09(cap: usize) -> Check {
    let mut checks = 0;
    for n in 0..=cap {
        let mut sums = vec![
            [
                LaurentPoly::zero(),
                LaurentPoly::zero(),
                LaurentPoly::zero(),
                LaurentPoly::zero()
            ];
            n + 1
        ];
        for w in rg_words(n) {
            let k = w.num_blocks() as usize;
            let st = stats(w.letters());
            for (slot, v) in [st.rs, st.lb, st.ls, st.rb].into_iter().enumerate() {
                sums[k][slot] += &LaurentPoly::qpow(v as i64);
            }
        }
        for (k, [rs, lb, ls, rb]) in sums.iter().enumerate() {
            let s = qstirling2(n, k);
            let shifted = s.shift((k * k.saturating_sub(1) / 2) as i64);
            ensure(*rs == s && *lb == s, || {
                format!("rs/lb not q-Stirling over RG({n},{k})")
            })?;
            ensure(*ls == shifted && *rb == shifted, || {
                format!("ls/rb not shifted q-Stirling over RG({n},{k})")
            })?;
            checks += 4;
        }
    }
    Ok(checks)
}

/// A pair of tableaux handled by the column exchange, with the parameters
/// it was built for.
#[derive(Clone, Debug, PartialEq, Eq)]
struct TableauPair(ZeroOneTableau, ZeroOneTableau);

impl fmt::Display for TableauPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.0.columns(), self.1.columns())
    }
}

fn tableau_pairs(n: usize, m: usize) -> Vec<TableauPair> {
    let elems: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for sigma in CyclePermutation::all(&elems) {
        let a = perm_to_tableau(&sigma);
        for w in rg_words(sigma.cyc()).filter(|w| w.num_blocks() as usize == m) {
            out.push(TableauPair(a.clone(), partition_to_tableau(&w)));
        }
    }
    out
}

fn c10(cap: usize) -> Check {
    let mut checks = 0;
    for n in 0..=cap {
        for w in rg_words(n) {
            let k = w.num_blocks() as usize;
            let t = partition_to_tableau(&w);
            let st = stats(w.letters());
            ensure(
                tableau_to_partition(&t, k).ok().as_ref() == Some(&w),
                || format!("partition round trip fails at {w}"),
            )?;
            ensure(
                t.inv() == st.lb && t.nin() + k * k.saturating_sub(1) / 2 == st.ls,
                || format!("statistics not transported for {w}"),
            )?;
            let r = symmetry_involution(&t);
            ensure(
                r.inv_nin() == (t.nin(), t.inv()) && symmetry_involution(&r) == t,
                || format!("symmetry involution misbehaves on {w}"),
            )?;
            let ground: Vec<usize> = (1..=n).collect();
            let pi = rg_decode(&w, &ground).map_err(|e| e.to_string())?;
            ensure(rg_encode(&pi) == w, || {
                format!("block round trip fails at {w}")
            })?;
            checks += 4;
        }
        let elems: Vec<usize> = (1..=n).collect();
        for sigma in CyclePermutation::all(&elems) {
            let t = perm_to_tableau(&sigma);
            ensure(
                t.inv() == sigma.inv() && t.num_columns() == n - sigma.cyc(),
                || format!("inversions differ for {sigma}"),
            )?;
            ensure(
                tableau_to_perm(&t, &elems).ok().as_ref() == Some(&sigma),
                || format!("permutation round trip fails at {sigma}"),
            )?;
            checks += 2;
        }
    }
    let word: RgWord = "112133132432"
        .parse()
        .map_err(|e: crate::Error| e.to_string())?;
    ensure(partition_to_tableau(&word).inv_nin() == (7, 8), || {
        "inv and nin of 112133132432".into()
    })?;
    let sigma = CyclePermutation::new(vec![vec![1, 3, 4, 7, 2], vec![5, 6], vec![8]])
        .map_err(|e| e.to_string())?;
    let want: Vec<Column> = [(6, 3), (5, 5), (3, 2), (2, 1), (1, 1)]
        .iter()
        .map(|&(l, r)| Column { len: l, one_row: r })
        .collect();
    ensure(perm_to_tableau(&sigma).columns() == want.as_slice(), || {
        "tableau of (1 3 4 7 2)(5 6)(8)".into()
    })?;
    checks += 2;

    let move_cap = cap.min(6);
    for n in 0..=move_cap {
        for m in 0..=n {
            let family = tableau_pairs(n, m);
            let valid = |p: &TableauPair| {
                let a = p.0.columns();
                let b = p.1.columns();
                a.windows(2).all(|w| w[0].len > w[1].len)
                    && a.iter().all(|c| c.len < n.max(1))
                    && b.windows(2).all(|w| w[0].len <= w[1].len)
                    && b.iter().all(|c| c.len <= m)
                    && a.len() + b.len() == n - m
            };
            let report = wpsr_verify(
                family.clone(),
                |p: &TableauPair| {
                    Ok(match column_move_step(&p.0, &p.1, n, m)? {
                        MoveOutcome::Fixed => None,
                        MoveOutcome::Moved(a, b) => Some(TableauPair(a, b)),
                    })
                },
                |p| {
                    SignedMonomial::new(
                        p.0.num_columns() % 2 == 1,
                        0,
                        0,
                        (p.0.inv() + p.1.inv()) as i64,
                    )
                },
                valid,
                |p| p.0.is_empty() && p.1.is_empty(),
            )
            .map_err(|e| format!("column exchange n={n} m={m}: {e}"))?;
            let want = if n == m {
                TriPoly::one()
            } else {
                TriPoly::zero()
            };
            ensure(report.fixed_weight == want, || {
                format!("column exchange fixed weight at n={n} m={m}")
            })?;
            // the weighted count is sum_k (-1)^(n-k) c_q(n,k) S_q(k,m)
            let mut alt = LaurentPoly::zero();
            for k in 0..=n {
                let mut t = &qstirling1(n, k) * &qstirling2(k, m);
                if (n - k) % 2 == 1 {
                    t = -&t;
                }
                alt += &t;
            }
            ensure(TriPoly::from_laurent(alt) == report.total_weight(), || {
                format!("Stirling inversion at n={n} m={m}")
            })?;
            checks += report.family_size;
        }
    }
    Ok(checks)
}

fn c11(cap: usize) -> Check {
    let mut checks = 0;
    for t in all_triples(cap) {
        let mut sorted = t;
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        ensure(lowest_coefficient_positive(&sorted), || {
            format!("lowest coefficient not positive for {sorted:?}")
        })?;
        let l = linearization_formula(t).map_err(|e| e.to_string())?;
        ensure(positive_in_r(&l).map_err(|e| e.to_string())?, || {
            format!("negative r-coefficient for {t:?}")
        })?;
        checks += 2;
    }
    for [n1, n2, n3] in ordered_triples(cap) {
        ensure(
            coefficient_symmetry(n1, n2, n3).map_err(|e| e.to_string())?,
            || format!("symmetry fails for {:?}", (n1, n2, n3)),
        )?;
        checks += 1;
    }
    for ns in [[1usize, 1, 1, 1], [2, 1, 1, 1]] {
        ensure(lowest_coefficient_positive(&ns), || {
            format!("lowest coefficient not positive for {ns:?}")
        })?;
        ensure(
            positive_in_r(&linearization_k(&ns)).map_err(|e| e.to_string())?,
            || format!("negative r-coefficient for {ns:?}"),
        )?;
        checks += 2;
    }
    let [(_, w1), (_, w2)] = cancelling_witnesses();
    ensure(
        w1 == SignedMonomial::new(true, 3, 0, 3) && w2 == w1.negated(),
        || "witness weights".into(),
    )?;
    Ok(checks + 1)
}

fn c12(cap: usize) -> Check {
    let mut checks = 0;
    for t in all_triples(cap) {
        let got = q1_fixedpoints(t);
        let want = q1_formula(t);
        ensure(got == want, || {
            format!("q = 1 fixed points of {t:?}: {got} vs {want}")
        })?;
        checks += 1;
    }
    for [n1, n2, n3] in ordered_triples(cap) {
        let l = double_sum(n1, n2, n3).map_err(|e| e.to_string())?;
        ensure(l.at_q_one() == q1_formula([n1, n2, n3]), || {
            format!("q = 1 limit at {:?}", (n1, n2, n3))
        })?;
        checks += 1;
    }
    let mu = moments_closed(cap + 3, StirlingPath::Recurrence);
    for (n, m) in mu.moments().iter().enumerate() {
        let mut want = TriPoly::zero();
        for k in 0..=n {
            let s = qstirling2(n, k).eval_one();
            want.add_term(k as u32, 0, LaurentPoly::constant(s));
        }
        ensure(m.at_q_one() == want, || format!("moment {n} at q = 1"))?;
        checks += 1;
    }
    let ps = charlier_sequence(cap + 3);
    let one = MomentFunctional::new(mu.moments().iter().map(TriPoly::at_q_one).collect());
    for n in 0..ps.len() {
        if n + 1 < ps.len() {
            // C_{n+1} = (x - a - n) C_n - a n C_{n-1}
            let shift = &(&TriPoly::x() - &TriPoly::a())
                - &TriPoly::from_laurent(LaurentPoly::constant(n as i64));
            let mut want = &shift * &ps[n].at_q_one();
            if n > 0 {
                want -= &ps[n - 1]
                    .at_q_one()
                    .shift(1, 0)
                    .scale(&LaurentPoly::constant(n as i64));
            }
            ensure(ps[n + 1].at_q_one() == want, || {
                format!("classical recurrence at n={n}")
            })?;
        }
        for m in 0..ps.len() {
            if n + m > one.max_degree() {
                continue;
            }
            let prod = &ps[n].at_q_one() * &ps[m].at_q_one();
            let got = one.apply(&prod).map_err(|e| e.to_string())?;
            let want = if n == m {
                let f: i64 = (1..=n as i64).product();
                TriPoly::monomial(LaurentPoly::constant(f), n as u32, 0)
            } else {
                TriPoly::zero()
            };
            ensure(got == want, || format!("q = 1 orthogonality at ({n}, {m})"))?;
            checks += 1;
        }
    }
    for n in 0..=cap {
        ensure(qint(n).eval_one() == num_bigint::BigInt::from(n), || {
            format!("[{n}] at q = 1")
        })?;
        let b = binomial(2 * n as i64, n as i64);
        ensure(
            crate::algebra::qbinomial(2 * n as i64, n as i64).eval_one() == b,
            || format!("binomial at {n}"),
        )?;
    }
    Ok(checks)
}

fn c13(cap: usize) -> Check {
    let mut checks = 0;
    let rec = classical_from_recurrence(cap);
    for (n, p) in rec.iter().enumerate() {
        ensure(*p == classical_explicit(n), || {
            format!("explicit and recurrence differ at n={n}")
        })?;
        checks += 1;
    }
    let orth = cap.min(4);
    let mu = classical_moments(2 * orth);
    let polys: Vec<TriPoly> = (0..=orth).map(classical_explicit).collect();
    let mut norm = TriPoly::one();
    for n in 0..=orth {
        if n > 0 {
            norm = &norm * &classical_recurrence_coeffs(n).1;
        }
        for m in 0..=orth {
            let got = mu
                .apply(&(&polys[n] * &polys[m]))
                .map_err(|e| e.to_string())?;
            let want = if n == m {
                norm.clone()
            } else {
                TriPoly::zero()
            };
            ensure(got == want, || {
                format!("rescaled orthogonality at ({n}, {m}): {got}")
            })?;
            checks += 1;
        }
    }
    let unscaled = classical_unscaled_from_recurrence(orth);
    let prod = classical_moments_product(2 * orth);
    for n in 0..=orth {
        for m in 0..n {
            let got = prod
                .apply(&(&unscaled[n] * &unscaled[m]))
                .map_err(|e| e.to_string())?;
            ensure(got.is_zero(), || {
                format!("product-moment orthogonality at ({n}, {m})")
            })?;
            checks += 1;
        }
    }
    let rescaled = classical_moments_rescaled(2 * orth).map_err(|e| e.to_string())?;
    ensure(rescaled.moments() == mu.moments(), || {
        "rescaled product moments differ from the Stirling form".into()
    })?;
    checks += 1;
    for n in 1..=cap {
        let (b, lambda) = classical_recurrence_coeffs(n);
        ensure(has_mixed_signs(&lambda) && has_mixed_signs(&b), || {
            format!("coefficients of sign-definite at n={n}")
        })?;
        checks += 1;
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_budget_runs_everything() {
        for id in 1..=13 {
            let o = run(id, Budget::new(3));
            assert!(o.passed(), "{o}");
        }
    }
}
