//! Python bindings: exact rational functions, representations, Hecke–Clifford
//! actions and the verification suites (reports come back as dicts).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use queer_howe::coord_alg::{coord_report, zero_weight_iso};
use queer_howe::duality::{
    census_report, classical_crosscheck, enumerate_strict_partitions, fixture_report, howe_verify,
    isotypic_census, sergeev_verify,
};
use queer_howe::hecke_clifford::{hc_check, hc_tensor_action, zero_weight_hc};
use queer_howe::report::VerifyReport;
use queer_howe::scalars::{EqualityMode, RatFunc};
use queer_howe::superlinalg::SOp;
use queer_howe::uq_queer::{check_defining_relations, tensor_rep, vector_rep, weight_spaces, Param};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn param(s: &str) -> PyResult<Param> {
    s.parse().map_err(err)
}

fn mode(name: &str, trials: usize, seed: u64) -> PyResult<EqualityMode> {
    match name {
        "exact" => Ok(EqualityMode::Exact),
        "prob" if trials >= 1 => Ok(EqualityMode::Probabilistic { trials, seed }),
        "prob" => Err(err("probabilistic mode needs trials >= 1")),
        other => Err(err(format!("unknown mode {other:?} (expected exact or prob)"))),
    }
}

/// Turns a serde value into plain Python objects.
pub fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => i.into_pyobject(py)?.into_any(),
            (None, Some(u)) => u.into_pyobject(py)?.into_any(),
            _ => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(a) => {
            let list = PyList::empty(py);
            for x in a {
                list.append(to_py(py, x)?)?;
            }
            list.into_any()
        }
        Value::Object(o) => {
            let d = PyDict::new(py);
            for (k, x) in o {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

fn report_py<'py>(py: Python<'py>, r: &VerifyReport) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &serde_json::to_value(r).map_err(err)?)
}

/// An element of Q(q).
#[pyclass(name = "RatFunc", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyRatFunc(RatFunc);

#[pymethods]
impl PyRatFunc {
    /// Parses a polynomial like `"q^2 - 1"` or a quotient `"(q^2-1)/(q)"`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyRatFunc).map_err(|e| err(format!("{e:?}")))
    }

    #[staticmethod]
    fn q() -> Self {
        PyRatFunc(RatFunc::q())
    }

    fn __add__(&self, o: &Self) -> Self {
        PyRatFunc(self.0.add(&o.0))
    }

    fn __sub__(&self, o: &Self) -> Self {
        PyRatFunc(self.0.sub(&o.0))
    }

    fn __mul__(&self, o: &Self) -> Self {
        PyRatFunc(self.0.mul(&o.0))
    }

    fn __truediv__(&self, o: &Self) -> PyResult<Self> {
        if o.0.is_zero() {
            return Err(err("division by zero"));
        }
        Ok(PyRatFunc(self.0.div(&o.0)))
    }

    fn __neg__(&self) -> Self {
        PyRatFunc(self.0.neg())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Value at `q = num/den`, as a `(numerator, denominator)` pair of strings.
    fn specialize(&self, num: i64, den: i64) -> PyResult<(String, String)> {
        if den == 0 {
            return Err(err("zero denominator"));
        }
        let c = num_rational::BigRational::new(num.into(), den.into());
        let v = self.0.specialize(&c).map_err(err)?;
        Ok((v.numer().to_string(), v.denom().to_string()))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("RatFunc('{}')", self.0)
    }
}

fn op_triples(op: &SOp<RatFunc>) -> Vec<(String, String, String)> {
    op.triples()
        .into_iter()
        .map(|(r, c, x)| (op.codomain().label(r).to_string(), op.domain().label(c).to_string(), x.to_string()))
        .collect()
}

/// A representation of the quantum queer superalgebra on `V^{⊗m}`.
#[pyclass(name = "QueerRep", frozen, skip_from_py_object)]
struct PyQueerRep(queer_howe::uq_queer::QueerRep);

#[pymethods]
impl PyQueerRep {
    /// The vector module of rank `n`.
    #[staticmethod]
    #[pyo3(signature = (n, param = "q"))]
    fn vector(n: usize, param: &str) -> PyResult<Self> {
        if n == 0 {
            return Err(err("rank must be positive"));
        }
        Ok(PyQueerRep(vector_rep(n, self::param(param)?)))
    }

    fn tensor_power(&self, m: usize) -> PyResult<Self> {
        if m == 0 {
            return Err(err("power must be positive"));
        }
        Ok(PyQueerRep(tensor_rep(&self.0, m)))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn param(&self) -> &'static str {
        self.0.param().name()
    }

    fn labels(&self) -> Vec<String> {
        self.0.space().labels().iter().map(|l| l.to_string()).collect()
    }

    /// Nonzero entries `(row, col, value)` of the generator `L_ij`.
    fn generator(&self, i: i32, j: i32) -> PyResult<Vec<(String, String, String)>> {
        let op = self
            .0
            .gens()
            .get(&(i, j))
            .ok_or_else(|| err(format!("no generator L[{i},{j}]")))?;
        Ok(op_triples(op))
    }

    /// Weight multiplicities as `{weight tuple: dim}`.
    fn weights<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (w, block) in weight_spaces(&self.0).map_err(err)? {
            d.set_item(pyo3::types::PyTuple::new(py, w.0)?, block.len())?;
        }
        Ok(d)
    }

    #[pyo3(signature = (mode = "exact", trials = 5, seed = 0))]
    fn check_relations<'py>(&self, py: Python<'py>, mode: &str, trials: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
        let m = self::mode(mode, trials, seed)?;
        report_py(py, &check_defining_relations(&self.0, m))
    }

    /// `hc_check` on the zero weight space (braid operators and `kbar`).
    fn zero_weight_hc<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let zw = zero_weight_hc(&self.0).map_err(err)?;
        report_py(py, &hc_check(&zw))
    }
}

/// Relation check of the Hecke–Clifford action on `V^{⊗m}`.
#[pyfunction]
#[pyo3(signature = (n, m, param = "q"))]
fn hc_tensor_check<'py>(py: Python<'py>, n: usize, m: usize, param: &str) -> PyResult<Bound<'py, PyAny>> {
    report_py(py, &hc_check(&hc_tensor_action(n, m, self::param(param)?)))
}

#[pyfunction]
fn strict_partitions(size: usize, max_len: usize) -> Vec<Vec<i64>> {
    enumerate_strict_partitions(size, max_len).into_iter().map(|p| p.0).collect()
}

/// Per-λ census of `V^{⊗m}` as a list of dicts.
#[pyfunction]
#[pyo3(signature = (n, m, param = "q"))]
fn census<'py>(py: Python<'py>, n: usize, m: usize, param: &str) -> PyResult<Bound<'py, PyAny>> {
    let c = isotypic_census(n, m, self::param(param)?).map_err(err)?;
    to_py(py, &serde_json::to_value(&c).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (n, m, param = "q"))]
fn census_suite<'py>(py: Python<'py>, n: usize, m: usize, param: &str) -> PyResult<Bound<'py, PyAny>> {
    report_py(py, &census_report(n, m, self::param(param)?).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (n, m, param = "q", mode = "exact", trials = 5, seed = 0, full = true))]
#[allow(clippy::too_many_arguments)]
fn sergeev<'py>(
    py: Python<'py>,
    n: usize,
    m: usize,
    param: &str,
    mode: &str,
    trials: usize,
    seed: u64,
    full: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let r = sergeev_verify(n, m, self::param(param)?, self::mode(mode, trials, seed)?, full).map_err(err)?;
    report_py(py, &r)
}

#[pyfunction]
#[pyo3(signature = (n, m, degree, param = "q"))]
fn howe<'py>(py: Python<'py>, n: usize, m: usize, degree: usize, param: &str) -> PyResult<Bound<'py, PyAny>> {
    report_py(py, &howe_verify(n, m, degree, self::param(param)?).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (n, m, degree, param = "q"))]
fn coord<'py>(py: Python<'py>, n: usize, m: usize, degree: usize, param: &str) -> PyResult<Bound<'py, PyAny>> {
    report_py(py, &coord_report(n, m, degree, self::param(param)?).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (n, m, param = "q"))]
fn zero_weight<'py>(py: Python<'py>, n: usize, m: usize, param: &str) -> PyResult<Bound<'py, PyAny>> {
    report_py(py, &zero_weight_iso(n, m, self::param(param)?).map_err(err)?)
}

#[pyfunction]
fn fixture(py: Python<'_>) -> PyResult<Bound<'_, PyAny>> {
    report_py(py, &fixture_report().map_err(err)?)
}

#[pyfunction]
fn classical<'py>(py: Python<'py>, n: usize, m: usize) -> PyResult<Bound<'py, PyAny>> {
    report_py(py, &classical_crosscheck(n, m).map_err(err)?)
}

#[pymodule]
#[pyo3(name = "queer_howe")]
fn queer_howe_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRatFunc>()?;
    m.add_class::<PyQueerRep>()?;
    m.add_function(wrap_pyfunction!(hc_tensor_check, m)?)?;
    m.add_function(wrap_pyfunction!(strict_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(census_suite, m)?)?;
    m.add_function(wrap_pyfunction!(sergeev, m)?)?;
    m.add_function(wrap_pyfunction!(howe, m)?)?;
    m.add_function(wrap_pyfunction!(coord, m)?)?;
    m.add_function(wrap_pyfunction!(zero_weight, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(classical, m)?)?;
    Ok(())
}
