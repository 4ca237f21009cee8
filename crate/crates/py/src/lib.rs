//! Python module `gaussphi`: Gaussian integers, φ, minimal division,
//! expansions and gcds.

use gaussphi as core;
use core::{Engine, Error, GInt};
use num_bigint::BigInt;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A Gaussian integer x + yi with arbitrary-precision coordinates.
#[pyclass(name = "GInt", frozen, eq, hash, ord, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PyGInt(GInt);

/// Anything accepted where a Gaussian integer is expected: a `GInt`,
/// a Python int, or text such as "4+i".
#[derive(FromPyObject)]
pub enum GArg<'py> {
    G(PyRef<'py, PyGInt>),
    Int(BigInt),
    Text(String),
}

impl GArg<'_> {
    fn value(&self) -> PyResult<GInt> {
        match self {
            GArg::G(g) => Ok(g.0.clone()),
            GArg::Int(x) => Ok(GInt::new(x.clone(), 0)),
            GArg::Text(s) => s.parse().map_err(to_py),
        }
    }
}

fn wrap(z: GInt) -> PyGInt {
    PyGInt(z)
}

#[pymethods]
impl PyGInt {
    #[new]
    #[pyo3(signature = (x, y = BigInt::from(0)))]
    fn new(x: BigInt, y: BigInt) -> Self {
        PyGInt(GInt::new(x, y))
    }

    /// Parses "a+bi" style text.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(PyGInt).map_err(to_py)
    }

    #[getter]
    fn x(&self) -> BigInt {
        self.0.x.clone()
    }

    #[getter]
    fn y(&self) -> BigInt {
        self.0.y.clone()
    }

    fn norm(&self) -> BigInt {
        self.0.norm().into()
    }

    fn conj(&self) -> Self {
        wrap(self.0.conj())
    }

    fn is_unit(&self) -> bool {
        self.0.is_unit()
    }

    fn canonical_associate(&self) -> Self {
        wrap(self.0.canonical_associate())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GInt('{}')", self.0)
    }

    fn __bool__(&self) -> bool {
        !self.0.is_zero()
    }

    fn __neg__(&self) -> Self {
        wrap(-&self.0)
    }

    fn __add__(&self, other: GArg) -> PyResult<Self> {
        Ok(wrap(&self.0 + &other.value()?))
    }

    fn __radd__(&self, other: GArg) -> PyResult<Self> {
        self.__add__(other)
    }

    fn __sub__(&self, other: GArg) -> PyResult<Self> {
        Ok(wrap(&self.0 - &other.value()?))
    }

    fn __rsub__(&self, other: GArg) -> PyResult<Self> {
        Ok(wrap(&other.value()? - &self.0))
    }

    fn __mul__(&self, other: GArg) -> PyResult<Self> {
        Ok(wrap(&self.0 * &other.value()?))
    }

    fn __rmul__(&self, other: GArg) -> PyResult<Self> {
        self.__mul__(other)
    }
}

#[pyfunction]
fn phi(z: GArg) -> PyResult<u64> {
    core::phi(&z.value()?).map_err(to_py)
}

/// Returns `(phi, j, n, branch)`.
#[pyfunction]
fn phi_parts(z: GArg) -> PyResult<(u64, u64, u64, &'static str)> {
    let p = core::phi_parts(&z.value()?).map_err(to_py)?;
    let branch = match p.branch {
        core::PhiBranch::Within => "within",
        core::PhiBranch::Beyond => "beyond",
    };
    Ok((p.value, p.j, p.n, branch))
}

#[pyfunction]
fn w(m: u64) -> BigInt {
    core::w(m).into()
}

#[pyfunction]
fn phi_le(z: GArg, n: u64) -> PyResult<bool> {
    core::phi_le(&z.value()?, n).map_err(to_py)
}

#[pyfunction]
fn phi_int(x: BigInt) -> PyResult<u64> {
    core::phi_int(&x).map_err(to_py)
}

#[pyfunction]
fn norm(z: GArg) -> PyResult<BigInt> {
    Ok(z.value()?.norm().into())
}

#[pyfunction]
fn v2(z: GArg) -> PyResult<u64> {
    z.value()?.v2().map_err(to_py)
}

#[pyfunction]
fn v1pi(z: GArg) -> PyResult<u64> {
    z.value()?.v1pi().map_err(to_py)
}

/// The unit u with u·z on the positive real axis side, as "1", "i", "-1" or "-i".
#[pyfunction]
fn canonical_unit(z: GArg) -> PyResult<String> {
    Ok(z.value()?.canonical_unit().map_err(to_py)?.to_string())
}

#[pyfunction]
fn gauss_divide(a: GArg, b: GArg) -> PyResult<(PyGInt, PyGInt)> {
    let (q, r) = core::gauss_divide(&a.value()?, &b.value()?).map_err(to_py)?;
    Ok((wrap(q), wrap(r)))
}

/// Division with φ(r) < φ(b); returns a dict with the quotient, remainder,
/// the Gauss pair and which adjustment was used.
#[pyfunction]
fn minimal_divide<'py>(py: Python<'py>, a: GArg, b: GArg) -> PyResult<Bound<'py, PyDict>> {
    let out = core::minimal_divide(&a.value()?, &b.value()?).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("quotient", wrap(out.quotient))?;
    d.set_item("remainder", wrap(out.remainder))?;
    d.set_item("gauss_quotient", wrap(out.gauss_quotient))?;
    d.set_item("gauss_remainder", wrap(out.gauss_remainder))?;
    d.set_item("strategy", out.strategy.as_str())?;
    d.set_item("condition", out.condition.map(|c| c.as_str()))?;
    d.set_item("phi_b", out.phi_b)?;
    d.set_item("phi_r", out.phi_r)?;
    Ok(d)
}

/// Digits little-endian as text, e.g. "0,0,-i".
#[pyfunction]
fn minimal_expansion(z: GArg) -> PyResult<String> {
    Ok(core::minimal_expansion(&z.value()?).map_err(to_py)?.to_string())
}

#[pyfunction]
fn eval_expansion(digits: &str) -> PyResult<PyGInt> {
    let e: core::Expansion = digits.parse().map_err(to_py)?;
    Ok(wrap(e.eval()))
}

#[pyfunction]
fn min_degree_bfs(z: GArg) -> PyResult<u64> {
    core::min_degree_bfs(&z.value()?).map_err(to_py)
}

fn gcd_with(a: GArg, b: GArg, engine: Engine) -> PyResult<(PyGInt, usize)> {
    let t = core::euclid::gcd_trace(&a.value()?, &b.value()?, engine).map_err(to_py)?;
    Ok((wrap(t.gcd_canonical), t.steps.len()))
}

/// Returns `(gcd, steps)` using φ-decreasing division.
#[pyfunction]
fn gcd_minimal(a: GArg, b: GArg) -> PyResult<(PyGInt, usize)> {
    gcd_with(a, b, Engine::Minimal)
}

/// Returns `(gcd, steps)` using Gauss division.
#[pyfunction]
fn gcd_norm(a: GArg, b: GArg) -> PyResult<(PyGInt, usize)> {
    gcd_with(a, b, Engine::Norm)
}

/// Returns `(g, s, t)` with s·a + t·b = g.
#[pyfunction]
fn xgcd(a: GArg, b: GArg) -> PyResult<(PyGInt, PyGInt, PyGInt)> {
    let bz = core::xgcd(&a.value()?, &b.value()?).map_err(to_py)?;
    Ok((wrap(bz.g), wrap(bz.s), wrap(bz.t)))
}

#[pymodule]
#[pyo3(name = "gaussphi")]
fn gaussphi_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGInt>()?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_parts, m)?)?;
    m.add_function(wrap_pyfunction!(w, m)?)?;
    m.add_function(wrap_pyfunction!(phi_le, m)?)?;
    m.add_function(wrap_pyfunction!(phi_int, m)?)?;
    m.add_function(wrap_pyfunction!(norm, m)?)?;
    m.add_function(wrap_pyfunction!(v2, m)?)?;
    m.add_function(wrap_pyfunction!(v1pi, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_unit, m)?)?;
    m.add_function(wrap_pyfunction!(gauss_divide, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_divide, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(eval_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(min_degree_bfs, m)?)?;
    m.add_function(wrap_pyfunction!(gcd_minimal, m)?)?;
    m.add_function(wrap_pyfunction!(gcd_norm, m)?)?;
    m.add_function(wrap_pyfunction!(xgcd, m)?)?;
    Ok(())
}
