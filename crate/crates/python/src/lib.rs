//! Python bindings: polytopes, gauges, the four radii and the chain verifier.

use gauge_radii::chain::ChainReport;
use gauge_radii::functionals::{self, FunctionalValue};
use gauge_radii::polytope::{self, difference_body, minkowski_sum};
use gauge_radii::radii::{self, RadiiResult};
use gauge_radii::{BodyKind, BodySpec, GeometryError, VPolytope as CoreVPolytope, Vector, Witness};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(gauge_radii, GeometryException, PyValueError);
create_exception!(gauge_radii, SolverException, PyRuntimeError);

fn err(e: GeometryError) -> PyErr {
    match e {
        GeometryError::Solver { .. } | GeometryError::Lp(_) => {
            SolverException::new_err(e.to_string())
        }
        _ => GeometryException::new_err(e.to_string()),
    }
}

/// A convex polytope given by its points (the convex hull is implied).
#[pyclass(
    name = "VPolytope",
    module = "gauge_radii",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyVPolytope {
    inner: CoreVPolytope,
}

impl From<CoreVPolytope> for PyVPolytope {
    fn from(inner: CoreVPolytope) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyVPolytope {
    #[new]
    fn new(vertices: Vec<Vec<f64>>) -> PyResult<Self> {
        CoreVPolytope::from_rows(vertices)
            .map(Self::from)
            .map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        CoreVPolytope::from_json(text)
            .map(Self::from)
            .map_err(|e| GeometryException::new_err(e.to_string()))
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn vertices(&self) -> Vec<Vec<f64>> {
        self.inner
            .vertices()
            .iter()
            .map(|v| v.coords().to_vec())
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "VPolytope(dim={}, vertices={})",
            self.inner.dim(),
            self.inner.len()
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn support(&self, u: Vec<f64>) -> PyResult<f64> {
        functionals::support(&self.inner, &u)
            .map(|v| v.value)
            .map_err(err)
    }

    fn width(&self, u: Vec<f64>) -> PyResult<f64> {
        functionals::width_fn(&self.inner, &u)
            .map(|v| v.value)
            .map_err(err)
    }

    fn max_chord(&self, u: Vec<f64>) -> PyResult<f64> {
        functionals::max_chord(&self.inner, &u)
            .map(|v| v.value)
            .map_err(err)
    }

    #[pyo3(signature = (x, tol = 1e-9))]
    fn contains(&self, x: Vec<f64>, tol: f64) -> PyResult<bool> {
        polytope::member(&self.inner, &x, tol).map_err(err)
    }

    fn translate(&self, offset: Vec<f64>) -> PyResult<Self> {
        self.inner
            .translate(&Vector::new(offset))
            .map(Self::from)
            .map_err(err)
    }

    fn scaled(&self, s: f64) -> PyResult<Self> {
        self.inner.scaled(s).map(Self::from).map_err(err)
    }

    fn reflected(&self) -> Self {
        self.inner.reflected().into()
    }

    /// The vertices of the convex hull, redundant points removed.
    fn reduced(&self) -> Self {
        self.inner.reduced().into()
    }

    fn difference_body(&self) -> Self {
        difference_body(&self.inner).into()
    }

    fn minkowski_sum(&self, other: &Self) -> PyResult<Self> {
        minkowski_sum(&self.inner, &other.inner)
            .map(Self::from)
            .map_err(err)
    }
}

/// The gauge (Minkowski functional) of a body with the origin in its interior.
#[pyclass(name = "GaugeBody", module = "gauge_radii", frozen)]
struct PyGaugeBody {
    inner: functionals::GaugeBody,
}

#[pymethods]
impl PyGaugeBody {
    #[new]
    fn new(body: &PyVPolytope) -> PyResult<Self> {
        functionals::GaugeBody::new(body.inner.clone())
            .map(|inner| Self { inner })
            .map_err(err)
    }

    fn __call__(&self, x: Vec<f64>) -> PyResult<f64> {
        self.inner.eval(&x).map_err(err)
    }

    fn radial(&self, u: Vec<f64>) -> PyResult<f64> {
        functionals::radial(&self.inner, &u)
            .map(|v| v.value)
            .map_err(err)
    }

    #[getter]
    fn body(&self) -> PyVPolytope {
        self.inner.body().clone().into()
    }
}

/// One of the four radii with its witness.
#[pyclass(name = "RadiiResult", module = "gauge_radii", frozen, get_all)]
struct PyRadiiResult {
    /// `"R"`, `"r"`, `"D"` or `"omega"`.
    quantity: &'static str,
    value: f64,
    /// Translation of the optimal homothet (`R`, `r`).
    center: Option<Vec<f64>>,
    /// Indices of a diametral vertex pair (`D`).
    pair: Option<(usize, usize)>,
    /// Unit normal of a thinnest slab (`omega`).
    direction: Option<Vec<f64>>,
}

#[pymethods]
impl PyRadiiResult {
    fn __repr__(&self) -> String {
        format!("RadiiResult({}={})", self.quantity, self.value)
    }

    fn __float__(&self) -> f64 {
        self.value
    }
}

fn result(r: RadiiResult) -> PyRadiiResult {
    let quantity = match r.quantity {
        radii::Quantity::Circumradius => "R",
        radii::Quantity::Inradius => "r",
        radii::Quantity::Diameter => "D",
        radii::Quantity::MinWidth => "omega",
    };
    let (mut center, mut pair, mut direction) = (None, None, None);
    match r.witness {
        Witness::Center(x) => center = Some(x.into_inner()),
        Witness::Pair(i, j) => pair = Some((i, j)),
        Witness::Direction(u) => direction = Some(u.into_inner()),
    }
    PyRadiiResult {
        quantity,
        value: r.value,
        center,
        pair,
        direction,
    }
}

/// Smallest `λ` with `K ⊆ x + λC` for some `x`.
#[pyfunction]
fn circumradius(k: &PyVPolytope, c: &PyVPolytope) -> PyResult<PyRadiiResult> {
    radii::circumradius(&k.inner, &c.inner)
        .map(result)
        .map_err(err)
}

/// Largest `λ` with `x + λC ⊆ K` for some `x`.
#[pyfunction]
fn inradius(k: &PyVPolytope, c: &PyVPolytope) -> PyResult<PyRadiiResult> {
    radii::inradius(&k.inner, &c.inner).map(result).map_err(err)
}

/// `2 sup R({x, y}, C)` over pairs of points of `K`.
#[pyfunction]
fn diameter(k: &PyVPolytope, c: &PyVPolytope) -> PyResult<PyRadiiResult> {
    radii::diameter(&k.inner, &c.inner).map(result).map_err(err)
}

/// `2 inf h_{K-K}(u) / h_{C-C}(u)` over directions `u`.
#[pyfunction]
fn min_width(k: &PyVPolytope, c: &PyVPolytope) -> PyResult<PyRadiiResult> {
    radii::min_width(&k.inner, &c.inner)
        .map(result)
        .map_err(err)
}

/// The norm `x ↦ 2R({0, x}, C)`.
#[pyfunction]
fn induced_norm(c: &PyVPolytope, x: Vec<f64>) -> PyResult<f64> {
    radii::induced_norm(&c.inner, &x)
        .map(|v: FunctionalValue| v.value)
        .map_err(err)
}

fn chain_dict<'py>(py: Python<'py>, r: &ChainReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (key, v) in ["a1", "a2", "a3", "a4", "a5"].iter().zip(r.values()) {
        d.set_item(key, v)?;
    }
    d.set_item("a1_exact", r.a1_exact)?;
    d.set_item("chord_ratio", r.chord_ratio)?;
    d.set_item("circumradius", r.circumradius)?;
    d.set_item("tol", r.tol)?;
    let f = &r.flags;
    let flags = PyDict::new(py);
    flags.set_item("a1_eq_a2", f.a1_eq_a2)?;
    flags.set_item("a2_eq_a3", f.a2_eq_a3)?;
    flags.set_item("a3_le_a4", f.a3_le_a4)?;
    flags.set_item("a4_le_a5", f.a4_le_a5)?;
    flags.set_item("chord_ratio", f.chord_ratio)?;
    flags.set_item("diameter_bound", f.diameter_bound)?;
    flags.set_item("centered_gauge", f.centered_gauge)?;
    flags.set_item("centered_equality", f.centered_equality)?;
    d.set_item("flags", flags)?;
    d.set_item("all_hold", r.all_hold())?;
    Ok(d)
}

/// Computes the five chain values independently and reports which relations hold.
#[pyfunction]
#[pyo3(signature = (k, c, tol = 1e-7))]
fn verify_chain<'py>(
    py: Python<'py>,
    k: &PyVPolytope,
    c: &PyVPolytope,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let report = gauge_radii::verify_chain(&k.inner, &c.inner, tol).map_err(err)?;
    chain_dict(py, &report)
}

/// A reference body: `cube`, `simplex`, `cross_polytope`, `segment`,
/// `regular_ngon`, `reuleaux_triangle`, `paper_triangle` or `paper_square`.
#[pyfunction]
#[pyo3(signature = (kind, dim = 2, n = 96, scale = 1.0))]
fn make_body(kind: &str, dim: usize, n: usize, scale: f64) -> PyResult<PyVPolytope> {
    let kind: BodyKind = kind.parse().map_err(err)?;
    gauge_radii::make_body(&BodySpec::new(kind).dim(dim).n(n).scale(scale))
        .map(PyVPolytope::from)
        .map_err(err)
}

#[pymodule(name = "gauge_radii")]
fn gauge_radii_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyVPolytope>()?;
    m.add_class::<PyGaugeBody>()?;
    m.add_class::<PyRadiiResult>()?;
    m.add_function(wrap_pyfunction!(circumradius, m)?)?;
    m.add_function(wrap_pyfunction!(inradius, m)?)?;
    m.add_function(wrap_pyfunction!(diameter, m)?)?;
    m.add_function(wrap_pyfunction!(min_width, m)?)?;
    m.add_function(wrap_pyfunction!(induced_norm, m)?)?;
    m.add_function(wrap_pyfunction!(verify_chain, m)?)?;
    m.add_function(wrap_pyfunction!(make_body, m)?)?;
    m.add("GeometryError", m.py().get_type::<GeometryException>())?;
    m.add("SolverError", m.py().get_type::<SolverException>())?;
    Ok(())
}
