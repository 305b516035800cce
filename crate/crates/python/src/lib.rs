//! Python bindings: languages, dimensions, exact depths, tree building and
//! validation, and the block-halving recognizer.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use subword_trees::builders::{self, BlockHalvingStrategy};
use subword_trees::cli::{build_tree, Algorithm, Built};
use subword_trees::oracle::{self, Measure, OracleCaps};
use subword_trees::tree::{validate, DecisionTree, Mode, Problem, Validation};
use subword_trees::{
    classify, count_slice, het, hom, parse_language_spec, trace_strategy, ExtendedNat, Word,
};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn word(s: &str) -> PyResult<Word> {
    s.parse().map_err(value_error)
}

fn finite(x: ExtendedNat) -> Option<u64> {
    x.finite()
}

fn problem(s: &str) -> PyResult<Problem> {
    match s {
        "recognition" => Ok(Problem::Recognition),
        "membership" => Ok(Problem::Membership),
        _ => Err(value_error(format!("problem must be recognition or membership, got {s:?}"))),
    }
}

fn mode(s: &str) -> PyResult<Mode> {
    match s {
        "det" => Ok(Mode::Det),
        "nondet" => Ok(Mode::Nondet),
        _ => Err(value_error(format!("mode must be det or nondet, got {s:?}"))),
    }
}

/// A binary subword-closed language given by forbidden subwords.
#[pyclass(name = "Language", frozen)]
struct PyLanguage {
    inner: subword_trees::Language,
}

#[pymethods]
impl PyLanguage {
    #[staticmethod]
    fn avoiding(name: &str, forbidden: Vec<String>) -> PyResult<Self> {
        let refs: Vec<&str> = forbidden.iter().map(String::as_str).collect();
        let inner = subword_trees::Language::avoiding(name, &refs).map_err(value_error)?;
        Ok(PyLanguage { inner })
    }

    /// Smallest subword-closed language containing `generators`.
    #[staticmethod]
    fn closure_of(name: &str, generators: Vec<String>) -> PyResult<Self> {
        let refs: Vec<&str> = generators.iter().map(String::as_str).collect();
        let inner = subword_trees::Language::closure_of(name, &refs).map_err(value_error)?;
        Ok(PyLanguage { inner })
    }

    /// Parses a language document (JSON text).
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyLanguage { inner: parse_language_spec(text).map_err(value_error)? })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn obstructions(&self) -> Vec<String> {
        self.inner.obstructions().members().iter().map(Word::to_string).collect()
    }

    fn contains(&self, w: &str) -> PyResult<bool> {
        Ok(self.inner.contains(&word(w)?))
    }

    fn slice(&self, n: usize) -> Vec<String> {
        subword_trees::slice(&self.inner, n).iter().map(Word::to_string).collect()
    }

    fn count(&self, n: usize) -> num_bigint::BigUint {
        count_slice(&self.inner, n)
    }

    /// `None` stands for an infinite dimension.
    fn hom(&self) -> Option<u64> {
        finite(hom(&self.inner))
    }

    fn het(&self) -> Option<u64> {
        finite(het(&self.inner))
    }

    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = classify(&self.inner);
        let d = PyDict::new(py);
        d.set_item("class", r.class_index.index())?;
        d.set_item("hom", finite(r.hom))?;
        d.set_item("het", finite(r.het))?;
        d.set_item("finite", r.is_finite_language)?;
        d.set_item("complement_empty", r.complement_empty)?;
        d.set_item("shortest_complement", r.shortest_complement_word_length)?;
        let p = r.predictions;
        for (key, g) in [("rd", p.rd), ("ra", p.ra), ("md", p.md), ("ma", p.ma)] {
            d.set_item(key, g.to_string())?;
        }
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!("Language({})", self.inner)
    }
}

/// A decision tree with word leaves (recognition) or bit leaves (membership).
#[pyclass(name = "Tree", frozen)]
struct PyTree {
    inner: DecisionTree,
}

#[pymethods]
impl PyTree {
    #[staticmethod]
    #[pyo3(signature = (text, problem = "recognition"))]
    fn from_json(text: &str, problem: &str) -> PyResult<Self> {
        let problem = self::problem(problem)?;
        Ok(PyTree { inner: DecisionTree::from_json(text, problem).map_err(value_error)? })
    }

    #[getter]
    fn depth(&self) -> usize {
        self.inner.depth()
    }

    #[getter]
    fn leaf_count(&self) -> usize {
        self.inner.leaf_count()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    /// Returns `(passed, message, witness)`.
    #[pyo3(signature = (language, n, problem = "recognition", mode = "det"))]
    fn validate(
        &self,
        language: &PyLanguage,
        n: usize,
        problem: &str,
        mode: &str,
    ) -> PyResult<(bool, String, Option<String>)> {
        let v = validate(&self.inner, &language.inner, n, self::problem(problem)?, self::mode(mode)?)
            .map_err(value_error)?;
        Ok(match v {
            Validation::Pass => (true, "pass".to_string(), None),
            Validation::Fail(why) => (false, why.to_string(), why.witness().map(Word::to_string)),
        })
    }
}

fn measure(s: &str) -> PyResult<Measure> {
    s.parse().map_err(value_error)
}

/// Exact minimum depth for one measure: "rd", "ra", "md" or "ma".
#[pyfunction]
fn exact_depth(language: &PyLanguage, n: usize, measure: &str) -> PyResult<usize> {
    let caps = OracleCaps::default();
    let l = &language.inner;
    match self::measure(measure)? {
        Measure::Rd => oracle::exact_h_rd(l, n, &caps),
        Measure::Ra => oracle::exact_h_ra(l, n, &caps),
        Measure::Md => oracle::exact_h_md(l, n, &caps),
        Measure::Ma => oracle::exact_h_ma(l, n, &caps),
    }
    .map_err(value_error)
}

/// Depth rows for `lo..=hi`; skipped cells are `None`.
/// `(n, rd, ra, md, ma)`, with `None` for a measure that was not computed.
type ProfileTuple = (usize, Option<usize>, Option<usize>, Option<usize>, Option<usize>);

#[pyfunction]
#[pyo3(signature = (language, lo, hi, measures = vec!["rd".into(), "ra".into(), "md".into(), "ma".into()]))]
fn depth_profile(
    language: &PyLanguage,
    lo: usize,
    hi: usize,
    measures: Vec<String>,
) -> PyResult<Vec<ProfileTuple>> {
    let measures = measures.iter().map(|m| measure(m)).collect::<PyResult<Vec<_>>>()?;
    let p = oracle::depth_profile(&language.inner, lo..=hi, &measures, false, &OracleCaps::default());
    Ok(p.rows.iter().map(|r| (r.n, r.rd.value, r.ra.value, r.md.value, r.ma.value)).collect())
}

#[pyfunction]
#[pyo3(signature = (language, n, problem = "recognition", mode = "det", algorithm = "exact"))]
fn build(language: &PyLanguage, n: usize, problem: &str, mode: &str, algorithm: &str) -> PyResult<PyTree> {
    let algorithm = match algorithm {
        "exact" => Algorithm::Exact,
        "paper" | "constructive" => Algorithm::Constructive,
        other => return Err(value_error(format!("algorithm must be exact or paper, got {other:?}"))),
    };
    let built = build_tree(
        &language.inner,
        n,
        self::problem(problem)?,
        self::mode(mode)?,
        algorithm,
        &OracleCaps::default(),
    )
    .map_err(value_error)?;
    match built {
        Built::Tree(inner) => Ok(PyTree { inner }),
        Built::Report(_) => Err(value_error("tree too large to write out; use trace_strategy")),
    }
}

/// Runs the block-halving recognizer on `w`; returns `(queries, label)`.
#[pyfunction]
fn trace(language: &PyLanguage, w: &str) -> PyResult<(Vec<usize>, String)> {
    let w = word(w)?;
    let s = BlockHalvingStrategy::new(&language.inner, w.len()).map_err(value_error)?;
    let t = trace_strategy(&s, &w, s.query_bound()).map_err(value_error)?;
    Ok((t.queries, t.label.to_string()))
}

/// `(w1, a, i, w2, j, w3)` with `w = w1 a^i w2 ā^j w3`.
#[pyfunction]
fn decompose(language: &PyLanguage, w: &str) -> PyResult<(String, u8, usize, String, usize, String)> {
    let d = builders::decompose(&language.inner, &word(w)?).map_err(value_error)?;
    Ok((d.w1.to_string(), d.a, d.i, d.w2.to_string(), d.j, d.w3.to_string()))
}

/// Separating `(position, bit)` pairs for `w`, at most `7t` of them.
#[pyfunction]
fn certificate(language: &PyLanguage, w: &str) -> PyResult<Vec<(usize, u8)>> {
    let w = word(w)?;
    let c = builders::build_certificate_7t(&language.inner, w.len(), &w).map_err(value_error)?;
    Ok(c.assignments())
}

#[pymodule]
fn pysubword(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLanguage>()?;
    m.add_class::<PyTree>()?;
    m.add_function(wrap_pyfunction!(exact_depth, m)?)?;
    m.add_function(wrap_pyfunction!(depth_profile, m)?)?;
    m.add_function(wrap_pyfunction!(build, m)?)?;
    m.add_function(wrap_pyfunction!(trace, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(certificate, m)?)?;
    Ok(())
}
