use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ::hwtheta as core;
use core::{BarbellDescriptor, ManifoldData, WhNormalForm};

fn to_py(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// pi_1, pi_2 and characteristic data, parsed from a manifold file.
#[pyclass(name = "Manifold", frozen, skip_from_py_object, module = "hwtheta")]
#[derive(Clone)]
struct PyManifold {
    inner: ManifoldData,
}

#[pyclass(name = "NormalForm", frozen, skip_from_py_object, eq, module = "hwtheta")]
#[derive(Clone, PartialEq)]
struct PyNormalForm {
    inner: WhNormalForm,
    text: String,
}

#[pyclass(name = "Barbell", frozen, skip_from_py_object, module = "hwtheta")]
#[derive(Clone)]
struct PyBarbell {
    inner: BarbellDescriptor,
    manifold: ManifoldData,
}

impl PyManifold {
    fn normal_form(&self, nf: WhNormalForm) -> PyNormalForm {
        let text = nf.show(self.inner.group()).to_string();
        PyNormalForm { inner: nf, text }
    }

    fn own(&self, b: &PyBarbell) -> PyResult<()> {
        if b.manifold != self.inner {
            return Err(PyValueError::new_err("barbell belongs to a different manifold"));
        }
        Ok(())
    }
}

#[pymethods]
impl PyManifold {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyManifold { inner: core::parse_manifold(text).map_err(to_py)? })
    }

    /// Canonical conjugacy representative and conjugator of a word.
    fn conjugacy_rep(&self, word: &str) -> PyResult<(String, String)> {
        let g = self.inner.group();
        let w = core::parse_word(word, &self.inner).map_err(to_py)?;
        let cd = g.conjugacy_rep(&w);
        Ok((g.show(&cd.canonical).to_string(), g.show(&cd.conjugator).to_string()))
    }

    fn normalize(&self, expr: &str) -> PyResult<PyNormalForm> {
        let x = core::parse_wh(expr, &self.inner).map_err(to_py)?;
        Ok(self.normal_form(core::wh_normalize(&x, &self.inner).map_err(to_py)?))
    }

    fn equal(&self, lhs: &str, rhs: &str) -> PyResult<bool> {
        let a = core::parse_wh(lhs, &self.inner).map_err(to_py)?;
        let b = core::parse_wh(rhs, &self.inner).map_err(to_py)?;
        core::wh_equal(&a, &b, &self.inner).map_err(to_py)
    }

    /// Normal form of the involution applied to `expr`.
    fn bar(&self, expr: &str) -> PyResult<PyNormalForm> {
        let x = core::parse_wh(expr, &self.inner).map_err(to_py)?;
        let y = core::involute(&x, &self.inner).map_err(to_py)?;
        Ok(self.normal_form(core::wh_normalize(&y, &self.inner).map_err(to_py)?))
    }

    fn barbell(&self, text: &str) -> PyResult<PyBarbell> {
        let inner = core::parse_barbell(text, &self.inner).map_err(to_py)?;
        Ok(PyBarbell { inner, manifold: self.inner.clone() })
    }

    fn theta(&self, barbell: &PyBarbell) -> PyResult<PyNormalForm> {
        self.own(barbell)?;
        Ok(self.normal_form(core::theta(&barbell.inner, &self.inner).map_err(to_py)?))
    }

    fn theta_g(&self, barbell: &PyBarbell) -> PyResult<PyNormalForm> {
        self.own(barbell)?;
        Ok(self.normal_form(core::theta_g(&barbell.inner, &self.inner).map_err(to_py)?))
    }

    fn theta_special(&self, sigma: &str, gammas: Vec<String>) -> PyResult<PyNormalForm> {
        let sigma = core::parse_module_elem(sigma, &self.inner).map_err(to_py)?;
        let gammas = gammas
            .iter()
            .map(|g| core::parse_word(g, &self.inner))
            .collect::<core::Result<Vec<_>>>()
            .map_err(to_py)?;
        Ok(self.normal_form(core::theta_special(&sigma, &gammas, &self.inner).map_err(to_py)?))
    }

    /// Invariant of Cerf intersection data written as a Wh element.
    fn theta_cerf(&self, expr: &str) -> PyResult<PyNormalForm> {
        let x = core::parse_wh(expr, &self.inner).map_err(to_py)?;
        let data = core::CerfIntersectionData::from_element(&x);
        Ok(self.normal_form(core::theta_cerf(&data, &self.inner).map_err(to_py)?))
    }

    fn realize(&self, sigma: &str, alpha: &str) -> PyResult<PyBarbell> {
        let sigma = core::parse_module_elem(sigma, &self.inner).map_err(to_py)?;
        let alpha = core::parse_word(alpha, &self.inner).map_err(to_py)?;
        let inner = core::realize(&sigma, &alpha, &self.inner).map_err(to_py)?;
        Ok(PyBarbell { inner, manifold: self.inner.clone() })
    }

    #[pyo3(signature = (expr, steps=20, seed=0))]
    fn walk(&self, expr: &str, steps: usize, seed: u64) -> PyResult<String> {
        let x = core::parse_wh(expr, &self.inner).map_err(to_py)?;
        x.check(&self.inner).map_err(to_py)?;
        let y = core::random_relation_walk(&x, &self.inner, steps, seed);
        Ok(y.show(self.inner.group()).to_string())
    }

    fn __str__(&self) -> String {
        core::format_manifold(&self.inner)
    }
}

#[pymethods]
impl PyNormalForm {
    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.text.clone()
    }

    fn __repr__(&self) -> String {
        format!("NormalForm({:?})", self.text)
    }
}

#[pymethods]
impl PyBarbell {
    fn add_meridians(&self, deltas: Vec<String>) -> PyResult<PyBarbell> {
        let deltas = deltas
            .iter()
            .map(|d| core::parse_word(d, &self.manifold))
            .collect::<core::Result<Vec<_>>>()
            .map_err(to_py)?;
        let inner = core::add_meridian_terms(&self.inner, deltas.len(), &deltas).map_err(to_py)?;
        Ok(PyBarbell { inner, manifold: self.manifold.clone() })
    }

    fn __len__(&self) -> usize {
        self.inner.circles.len()
    }

    fn __str__(&self) -> String {
        core::format_barbell(&self.inner, &self.manifold)
    }
}

/// The barbell delta_k in S^1 x D^3 together with its manifold.
#[pyfunction]
fn delta_k(k: i64) -> PyResult<(PyManifold, PyBarbell)> {
    let (x, b) = core::delta_k(k).map_err(to_py)?;
    Ok((PyManifold { inner: x.clone() }, PyBarbell { inner: b, manifold: x }))
}

/// Returns `(agree, trials)` for the lattice-oracle comparison over Z/m.
#[pyfunction]
#[pyo3(signature = (m, rank=0, trials=500, seed=0))]
fn oracle_check(m: u64, rank: usize, trials: usize, seed: u64) -> PyResult<(usize, usize)> {
    let setup = core::FiniteSetup::new(m, rank).map_err(to_py)?;
    let report = core::oracle::agreement_run(setup, trials, seed).map_err(to_py)?;
    Ok((report.agree, report.trials))
}

#[pymodule]
fn hwtheta(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyManifold>()?;
    m.add_class::<PyNormalForm>()?;
    m.add_class::<PyBarbell>()?;
    m.add_function(wrap_pyfunction!(delta_k, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_check, m)?)?;
    Ok(())
}
