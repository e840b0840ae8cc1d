//! Python bindings: thin wrappers over the core element types plus the
//! verification-suite entry point. Rationals cross the boundary as strings
//! ("p/q") or integers.

use std::str::FromStr;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use capelli::suite::{run_suite, SuiteName, SuiteParams, SuiteSpec};
use capelli::{
    chi, chi_0n, gelfand_g, DopElement, GlRank, Q, RhoMap, TensorCtx, TensorElement, UglElement,
};

fn parse_q(text: &str) -> PyResult<Q> {
    Q::from_str(text.trim()).map_err(|e| PyValueError::new_err(format!("bad rational: {e}")))
}

fn rank_of(first: usize, last: usize) -> PyResult<GlRank> {
    if last < first {
        return Err(PyValueError::new_err("empty index range"));
    }
    Ok(GlRank::new(first, last))
}

/// Element of U(gl(N)) over the index range first..=last.
#[pyclass(name = "Ugl")]
#[derive(Clone)]
struct PyUgl {
    inner: UglElement,
}

#[pymethods]
impl PyUgl {
    /// The generator E[i, j].
    #[staticmethod]
    fn gen(first: usize, last: usize, i: usize, j: usize) -> PyResult<Self> {
        let rank = rank_of(first, last)?;
        if !rank.contains(i) || !rank.contains(j) {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(PyUgl {
            inner: UglElement::gen(rank, i, j),
        })
    }

    /// The scalar c (given as "p/q" or an integer string).
    #[staticmethod]
    fn scalar(first: usize, last: usize, c: &str) -> PyResult<Self> {
        Ok(PyUgl {
            inner: UglElement::scalar(rank_of(first, last)?, parse_q(c)?),
        })
    }

    /// The trace element G_1.
    #[staticmethod]
    fn g1(first: usize, last: usize) -> PyResult<Self> {
        Ok(PyUgl {
            inner: UglElement::g1(rank_of(first, last)?),
        })
    }

    fn __add__(&self, other: &PyUgl) -> PyUgl {
        PyUgl {
            inner: self.inner.add(&other.inner),
        }
    }

    fn __sub__(&self, other: &PyUgl) -> PyUgl {
        PyUgl {
            inner: self.inner.sub(&other.inner),
        }
    }

    fn __mul__(&self, other: &PyUgl) -> PyUgl {
        PyUgl {
            inner: self.inner.mul(&other.inner),
        }
    }

    fn __neg__(&self) -> PyUgl {
        PyUgl {
            inner: self.inner.neg(),
        }
    }

    fn scale(&self, c: &str) -> PyResult<PyUgl> {
        Ok(PyUgl {
            inner: self.inner.scale(&parse_q(c)?),
        })
    }

    fn commutator(&self, other: &PyUgl) -> PyUgl {
        PyUgl {
            inner: self.inner.commutator(&other.inner),
        }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_central(&self) -> bool {
        self.inner.is_central()
    }

    fn __eq__(&self, other: &PyUgl) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

/// Differential operator on C[t_0^(+-1), t_1, ..., t_n].
#[pyclass(name = "Dop")]
#[derive(Clone)]
struct PyDop {
    inner: DopElement,
}

#[pymethods]
impl PyDop {
    /// t_a d_b.
    #[staticmethod]
    fn t_d(n: usize, a: usize, b: usize) -> PyResult<Self> {
        if a > n || b > n {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(PyDop {
            inner: DopElement::t_d(n, a, b),
        })
    }

    /// t_i / t_0 for i >= 1.
    #[staticmethod]
    fn t_ratio(n: usize, i: usize) -> PyResult<Self> {
        if i < 1 || i > n {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(PyDop {
            inner: DopElement::t_ratio(n, i),
        })
    }

    /// The Euler operator, sum of t_i d_i.
    #[staticmethod]
    fn euler(n: usize) -> Self {
        PyDop {
            inner: capelli::euler(n),
        }
    }

    fn __add__(&self, other: &PyDop) -> PyDop {
        PyDop {
            inner: self.inner.add(&other.inner),
        }
    }

    fn __sub__(&self, other: &PyDop) -> PyDop {
        PyDop {
            inner: self.inner.sub(&other.inner),
        }
    }

    fn __mul__(&self, other: &PyDop) -> PyDop {
        PyDop {
            inner: self.inner.mul(&other.inner),
        }
    }

    fn commutator(&self, other: &PyDop) -> PyDop {
        PyDop {
            inner: self.inner.commutator(&other.inner),
        }
    }

    /// Apply to the monomial t^e; returns {exponent tuple: "p/q"}.
    fn apply(&self, e: Vec<i64>) -> PyResult<std::collections::BTreeMap<Vec<i64>, String>> {
        if e.len() != self.inner.n() + 1 {
            return Err(PyValueError::new_err("exponent arity mismatch"));
        }
        if e.iter().skip(1).any(|&x| x < 0) {
            return Err(PyValueError::new_err("t_1..t_n exponents must be >= 0"));
        }
        Ok(self
            .inner
            .apply_monomial(&e)
            .into_iter()
            .map(|(k, v)| (k, v.to_string()))
            .collect())
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn __eq__(&self, other: &PyDop) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

/// Element of D'(n) tensor U(gl(n)).
#[pyclass(name = "Tensor")]
#[derive(Clone)]
struct PyTensor {
    inner: TensorElement,
}

#[pymethods]
impl PyTensor {
    #[staticmethod]
    fn from_dop(d: &PyDop) -> PyTensor {
        let ctx = TensorCtx::standard(d.inner.n());
        PyTensor {
            inner: TensorElement::from_dop(ctx, &d.inner),
        }
    }

    /// 1 tensor u, for u over gl(n) with indices 1..=n.
    #[staticmethod]
    fn from_ugl(u: &PyUgl) -> PyResult<PyTensor> {
        let rank = u.inner.rank();
        if rank.first != 1 {
            return Err(PyValueError::new_err(
                "second factor must be gl(n) with indices 1..=n",
            ));
        }
        let ctx = TensorCtx::standard(rank.last);
        Ok(PyTensor {
            inner: TensorElement::from_ugl(ctx, &u.inner),
        })
    }

    #[staticmethod]
    fn r1(n: usize) -> PyTensor {
        PyTensor {
            inner: capelli::r1(n),
        }
    }

    #[staticmethod]
    fn r2(n: usize) -> PyTensor {
        PyTensor {
            inner: capelli::r2(n),
        }
    }

    fn __add__(&self, other: &PyTensor) -> PyTensor {
        PyTensor {
            inner: self.inner.add(&other.inner),
        }
    }

    fn __sub__(&self, other: &PyTensor) -> PyTensor {
        PyTensor {
            inner: self.inner.sub(&other.inner),
        }
    }

    fn __mul__(&self, other: &PyTensor) -> PyTensor {
        PyTensor {
            inner: self.inner.mul(&other.inner),
        }
    }

    fn commutator(&self, other: &PyTensor) -> PyTensor {
        PyTensor {
            inner: self.inner.commutator(&other.inner),
        }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_central(&self) -> bool {
        self.inner.is_central()
    }

    fn __eq__(&self, other: &PyTensor) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

/// Image of a gl(n+1) element (indices 0..=n) under rho.
#[pyfunction]
fn rho(x: &PyUgl) -> PyResult<PyTensor> {
    let rank = x.inner.rank();
    if rank.first != 0 || rank.last < 1 {
        return Err(PyValueError::new_err(
            "rho expects a gl(n+1) element with indices 0..=n, n >= 1",
        ));
    }
    let map = RhoMap::new(rank.last);
    Ok(PyTensor {
        inner: map.apply(&x.inner),
    })
}

/// The Gelfand invariant G_k over the given index range.
#[pyfunction]
fn gelfand(first: usize, last: usize, k: usize) -> PyResult<PyUgl> {
    Ok(PyUgl {
        inner: gelfand_g(rank_of(first, last)?, k),
    })
}

/// Harish-Chandra image of a central element, as canonical polynomial text.
#[pyfunction]
fn chi_text(z: &PyUgl) -> PyResult<String> {
    chi(&z.inner)
        .map(|img| img.poly.to_string())
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Mixed Harish-Chandra image of a tensor element in C[Euler] tensor Z.
#[pyfunction]
fn chi_mixed_text(z: &PyTensor) -> PyResult<String> {
    chi_0n(&z.inner)
        .map(|img| img.poly.to_string())
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Run a named verification suite; returns the JSON report as a string.
#[pyfunction]
#[pyo3(signature = (suite, n=1, kmax=3, series_order=4, trunc_degree=3, seed=0))]
fn run_suite_json(
    suite: &str,
    n: usize,
    kmax: usize,
    series_order: usize,
    trunc_degree: usize,
    seed: u64,
) -> PyResult<String> {
    let spec = SuiteSpec {
        suite: SuiteName::parse(suite).map_err(|e| PyValueError::new_err(e.to_string()))?,
        params: SuiteParams {
            n,
            kmax,
            series_order,
            trunc_degree,
            seed,
        },
    };
    let report = run_suite(&spec).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(report.to_json())
}

#[pymodule]
fn capelli_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyUgl>()?;
    m.add_class::<PyDop>()?;
    m.add_class::<PyTensor>()?;
    m.add_function(wrap_pyfunction!(rho, m)?)?;
    m.add_function(wrap_pyfunction!(gelfand, m)?)?;
    m.add_function(wrap_pyfunction!(chi_text, m)?)?;
    m.add_function(wrap_pyfunction!(chi_mixed_text, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite_json, m)?)?;
    Ok(())
}
