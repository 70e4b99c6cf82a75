//! Python bindings. Polynomials come back as lists of `(a, x, q, c)` tuples
//! sorted lexicographically, with `c` an exact Python integer.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qcharlier::linearization::formulas::{canonical_order, linearization_formula};
use qcharlier::linearization::wpsr::fixed_point_sum;
use qcharlier::moments::{
    linearization_bruteforce, moments_closed, orthogonality_check, StirlingPath,
};
use qcharlier::partitions::{parse_word, stats as word_stats, RgWord};
use qcharlier::verify::{criterion_id, run, run_all, Budget, CRITERIA, DEFAULT_MAX_SIZE};
use qcharlier::{algebra, charlier, classical, TriPoly};

type Terms = Vec<(u32, u32, i64, BigInt)>;

fn terms(p: &TriPoly) -> Terms {
    p.entries()
        .into_iter()
        .map(|e| (e.a, e.x, e.q, e.coeff))
        .collect()
}

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// `C_n(x, a; q)`.
#[pyfunction]
fn poly(n: usize) -> Terms {
    terms(&charlier::charlier_explicit(n))
}

/// `[mu_0, ..., mu_n]`.
#[pyfunction]
fn moments(n: usize) -> Vec<Terms> {
    moments_closed(n, StirlingPath::Recurrence)
        .moments()
        .iter()
        .map(terms)
        .collect()
}

/// q-Stirling number of the given kind as `(q, c)` pairs.
#[pyfunction]
fn stirling(kind: u8, n: usize, k: usize) -> PyResult<Vec<(i64, BigInt)>> {
    let s = match kind {
        1 => algebra::qstirling1(n, k),
        2 => algebra::qstirling2(n, k),
        _ => return Err(value_error(format!("kind must be 1 or 2, got {kind}"))),
    };
    Ok(s.terms().map(|(e, c)| (e, c.clone())).collect())
}

/// The statistics `ls, lb, rs, rb` of a restricted growth word.
#[pyfunction]
fn stats<'py>(py: Python<'py>, word: &str) -> PyResult<Bound<'py, PyDict>> {
    let letters = parse_word(word).map_err(value_error)?;
    RgWord::new(letters.clone()).map_err(value_error)?;
    let s = word_stats(&letters);
    let d = PyDict::new(py);
    for (k, v) in [("ls", s.ls), ("lb", s.lb), ("rs", s.rs), ("rb", s.rb)] {
        d.set_item(k, v)?;
    }
    Ok(d)
}

/// `L(C_n C_m)`.
#[pyfunction]
fn orth(n: usize, m: usize) -> Terms {
    terms(&orthogonality_check(n, m))
}

/// `L(C_n1 C_n2 C_n3)` by `"formula"`, `"bruteforce"` or `"fixedpoints"`.
#[pyfunction]
#[pyo3(signature = (n1, n2, n3, method = "formula"))]
fn linearize(n1: usize, n2: usize, n3: usize, method: &str) -> PyResult<Terms> {
    let sizes = [n1, n2, n3];
    let v = match method {
        "formula" => linearization_formula(sizes).map_err(value_error)?,
        "bruteforce" => linearization_bruteforce(&sizes),
        "fixedpoints" => fixed_point_sum(5, canonical_order(sizes)),
        _ => return Err(value_error(format!("unknown method {method}"))),
    };
    Ok(terms(&v))
}

/// The rescaled classical polynomial; `z` sits in the `x` slot.
#[pyfunction]
fn classical_poly(n: usize) -> Terms {
    terms(&classical::classical_explicit(n))
}

#[pyfunction]
fn classical_moments(n: usize) -> Vec<Terms> {
    classical::classical_moments(n)
        .moments()
        .iter()
        .map(terms)
        .collect()
}

/// Runs identity suites; one dict per criterion.
#[pyfunction]
#[pyo3(signature = (suite = "all", max_size = DEFAULT_MAX_SIZE))]
fn verify<'py>(py: Python<'py>, suite: &str, max_size: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let budget = Budget::new(max_size);
    let outcomes = if suite == "all" {
        py.detach(|| run_all(budget))
    } else {
        let id =
            criterion_id(suite).ok_or_else(|| value_error(format!("unknown suite {suite}")))?;
        vec![py.detach(|| run(id, budget))]
    };
    outcomes
        .into_iter()
        .map(|o| {
            let d = PyDict::new(py);
            d.set_item("id", o.id)?;
            d.set_item("suite", o.slug)?;
            d.set_item("passed", o.passed())?;
            d.set_item("checks", o.result.as_ref().ok().copied())?;
            d.set_item("counterexample", o.result.as_ref().err().cloned())?;
            d.set_item("clipped", o.clipped)?;
            Ok(d)
        })
        .collect()
}

#[pymodule]
fn pyqcharlier(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(poly, m)?)?;
    m.add_function(wrap_pyfunction!(moments, m)?)?;
    m.add_function(wrap_pyfunction!(stirling, m)?)?;
    m.add_function(wrap_pyfunction!(stats, m)?)?;
    m.add_function(wrap_pyfunction!(orth, m)?)?;
    m.add_function(wrap_pyfunction!(linearize, m)?)?;
    m.add_function(wrap_pyfunction!(classical_poly, m)?)?;
    m.add_function(wrap_pyfunction!(classical_moments, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("SUITES", CRITERIA.iter().map(|c| c.1).collect::<Vec<_>>())?;
    Ok(())
}
