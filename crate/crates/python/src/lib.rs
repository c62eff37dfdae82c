//! Python bindings: partitions, polynomials, universal characters, the phase model and
//! MacMahon series. Rationals cross the boundary as `fractions.Fraction`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use ucphase::macmahon::{self as mm, QSeries};
use ucphase::partitions::Partition as CorePartition;
use ucphase::phase::{self, PhaseModel as CoreModel};
use ucphase::polyring::{Cutoffs, Degree, Poly as CorePoly};
use ucphase::report::CheckReport;
use ucphase::scalars::{parse_rational, rational_to_string, Rational};
use ucphase::symfunc::{uc_decompose, uc_synthesize, universal_character_jt, universal_character_op, UcVector};
use ucphase::vertex::raise_uc;

fn err(e: ucphase::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((rational_to_string(r),))
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    parse_rational(&obj.str()?.to_string()).map_err(err)
}

fn json_value<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.getattr("loads")?.call1((v.to_string(),))
}

fn report<'py>(py: Python<'py>, r: CheckReport) -> PyResult<Bound<'py, PyAny>> {
    json_value(py, &r.to_json())
}

/// Accepts a `Partition`, a comma-separated string or a sequence of parts.
fn partition(obj: &Bound<'_, PyAny>) -> PyResult<CorePartition> {
    if let Ok(p) = obj.downcast::<Partition>() {
        return Ok(p.get().inner.clone());
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.parse().map_err(err);
    }
    CorePartition::new(obj.extract::<Vec<usize>>()?).map_err(err)
}

#[pyclass(frozen, module = "ucphase")]
#[derive(Clone)]
struct Partition {
    inner: CorePartition,
}

#[pymethods]
impl Partition {
    #[new]
    fn new(parts: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Partition { inner: partition(parts)? })
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.inner.parts().to_vec()
    }

    #[getter]
    fn weight(&self) -> usize {
        self.inner.weight()
    }

    fn conjugate(&self) -> Partition {
        Partition { inner: self.inner.conjugate() }
    }

    #[staticmethod]
    fn all_of_weight(n: usize) -> Vec<Partition> {
        CorePartition::all_of_weight(n).into_iter().map(|inner| Partition { inner }).collect()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.inner.parts())
    }
}

#[pyclass(frozen, module = "ucphase")]
#[derive(Clone)]
struct Poly {
    inner: CorePoly,
}

#[pymethods]
impl Poly {
    /// Parses text such as `"x1*y1 - 1"` in the ring with `x` and `y` variables of each kind.
    #[new]
    #[pyo3(signature = (text, x = 4, y = 4))]
    fn new(text: &str, x: usize, y: usize) -> PyResult<Self> {
        Ok(Poly { inner: CorePoly::parse(text, Cutoffs::new(x, y)).map_err(err)? })
    }

    #[getter]
    fn cutoffs(&self) -> (usize, usize) {
        let c = self.inner.cutoffs();
        (c.x, c.y)
    }

    /// Degree with `deg x_n = n`, `deg y_n = -n`; `None` when inhomogeneous.
    fn degree(&self) -> PyResult<Option<i64>> {
        match self.inner.graded_degree().map_err(err)? {
            Degree::Homogeneous(d) => Ok(Some(d)),
            _ => Ok(None),
        }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn with_cutoffs(&self, x: usize, y: usize) -> PyResult<Poly> {
        Ok(Poly { inner: self.inner.with_cutoffs(Cutoffs::new(x, y)).map_err(err)? })
    }

    /// Coefficients in the universal-character basis, keyed by `(lambda, mu)` strings.
    fn decompose<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        uc_dict(py, &uc_decompose(&self.inner).map_err(err)?)
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_value(py, &self.inner.to_json())
    }

    #[staticmethod]
    fn from_json(obj: &Bound<'_, PyAny>) -> PyResult<Poly> {
        let text: String = obj.py().import("json")?.getattr("dumps")?.call1((obj,))?.extract()?;
        let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(Poly { inner: CorePoly::from_json(&v).map_err(err)? })
    }

    fn __add__(&self, other: &Poly) -> PyResult<Poly> {
        Ok(Poly { inner: self.inner.try_add(&other.inner).map_err(err)? })
    }

    fn __sub__(&self, other: &Poly) -> PyResult<Poly> {
        Ok(Poly { inner: self.inner.try_sub(&other.inner).map_err(err)? })
    }

    fn __mul__(&self, other: &Poly) -> PyResult<Poly> {
        Ok(Poly { inner: self.inner.try_mul(&other.inner).map_err(err)? })
    }

    fn __eq__(&self, other: &Poly) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        let c = self.inner.cutoffs();
        format!("Poly({:?}, x={}, y={})", self.inner.to_string(), c.x, c.y)
    }
}

fn uc_dict<'py>(py: Python<'py>, v: &UcVector) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for ((l, m), c) in v {
        d.set_item((l.to_string(), m.to_string()), fraction(py, c)?)?;
    }
    Ok(d)
}

fn uc_vector(d: &Bound<'_, PyDict>) -> PyResult<UcVector> {
    let mut v = UcVector::new();
    for (k, c) in d.iter() {
        let (l, m): (Bound<'_, PyAny>, Bound<'_, PyAny>) = k.extract()?;
        v.insert((partition(&l)?, partition(&m)?), rational(&c)?);
    }
    Ok(v)
}

/// `S[lambda, mu]` by `"jacobi-trudi"`, `"operator"` or `"raising"`. The ring defaults to
/// `|lambda| + |mu|` variables of each kind.
#[pyfunction]
#[pyo3(signature = (lam, mu, method = "jacobi-trudi", cutoffs = None))]
fn universal_character(
    lam: &Bound<'_, PyAny>,
    mu: &Bound<'_, PyAny>,
    method: &str,
    cutoffs: Option<(usize, usize)>,
) -> PyResult<Poly> {
    let (l, m) = (partition(lam)?, partition(mu)?);
    let n = (l.weight() + m.weight()).max(1);
    let cut = cutoffs.map_or(Cutoffs::new(n, n), |(x, y)| Cutoffs::new(x, y));
    let inner = match method {
        "jacobi-trudi" => universal_character_jt(&l, &m, cut),
        "operator" => universal_character_op(&l, &m, cut),
        "raising" => raise_uc(&l, &m, cut),
        other => return Err(PyValueError::new_err(format!("unknown method `{other}`"))),
    }
    .map_err(err)?;
    Ok(Poly { inner })
}

/// Inverse of `Poly.decompose`.
#[pyfunction]
fn synthesize(coeffs: &Bound<'_, PyDict>, x: usize, y: usize) -> PyResult<Poly> {
    Ok(Poly { inner: uc_synthesize(&uc_vector(coeffs)?, Cutoffs::new(x, y)).map_err(err)? })
}

#[pyclass(frozen, module = "ucphase")]
struct PhaseModel {
    inner: CoreModel,
}

fn roots(us: &Bound<'_, PyList>) -> PyResult<Vec<Rational>> {
    us.iter().map(|u| rational(&u)).collect()
}

#[pymethods]
impl PhaseModel {
    /// Two chains with `m1 + 1` and `m2 + 1` sites, or a single chain when `m2` is `None`.
    #[new]
    #[pyo3(signature = (m1, m2 = None))]
    fn new(m1: usize, m2: Option<usize>) -> Self {
        let inner = match m2 {
            Some(m2) => CoreModel::two_chain(m1, m2),
            None => CoreModel::single_chain(m1),
        };
        PhaseModel { inner }
    }

    #[getter]
    fn m1(&self) -> usize {
        self.inner.m1
    }

    #[getter]
    fn m2(&self) -> Option<usize> {
        self.inner.m2
    }

    /// The Bethe vector on the occupation basis, keyed by `"n0,n1|m0,m1"`.
    fn bethe_state<'py>(&self, py: Python<'py>, us: &Bound<'_, PyList>) -> PyResult<Bound<'py, PyDict>> {
        let v = phase::bethe_state(&self.inner, &roots(us)?).map_err(err)?;
        let d = PyDict::new(py);
        for (s, c) in v.terms() {
            d.set_item(s.to_string(), fraction(py, c)?)?;
        }
        Ok(d)
    }

    /// The Bethe vector projected to universal characters.
    fn bethe_projected<'py>(&self, py: Python<'py>, us: &Bound<'_, PyList>) -> PyResult<Bound<'py, PyDict>> {
        let v = phase::bethe_state(&self.inner, &roots(us)?).map_err(err)?;
        uc_dict(py, &phase::project(&v))
    }

    /// The Schur-function sum the projected Bethe vector should equal.
    fn bethe_expansion<'py>(&self, py: Python<'py>, us: &Bound<'_, PyList>) -> PyResult<Bound<'py, PyDict>> {
        uc_dict(py, &phase::bethe_expansion(&self.inner, &roots(us)?))
    }

    fn phase_algebra_check<'py>(&self, py: Python<'py>, cap: usize) -> PyResult<Bound<'py, PyAny>> {
        report(py, phase::phase_algebra_check(&self.inner, cap).map_err(err)?)
    }

    #[pyo3(signature = (cap = 2, seed = 2024, samples = None))]
    fn rtt_check<'py>(
        &self,
        py: Python<'py>,
        cap: usize,
        seed: u64,
        samples: Option<usize>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let n = samples.unwrap_or_else(|| phase::default_sample_count(&self.inner));
        report(py, phase::rtt_check(&self.inner, &phase::sample_pairs(n, seed), cap).map_err(err)?)
    }

    fn creation_check<'py>(&self, py: Python<'py>, cap: usize) -> PyResult<Bound<'py, PyAny>> {
        report(py, phase::creation_pieri_sweep(&self.inner, cap).map_err(err)?)
    }

    fn __repr__(&self) -> String {
        match self.inner.m2 {
            Some(m2) => format!("PhaseModel({}, {m2})", self.inner.m1),
            None => format!("PhaseModel({})", self.inner.m1),
        }
    }
}

fn q_list<'py>(py: Python<'py>, s: QSeries, order: usize) -> PyResult<Vec<Bound<'py, PyAny>>> {
    s.q_coeffs(order).iter().map(|c| fraction(py, c)).collect()
}

/// Coefficients of `prod (1 - q^n)^-n` through `q^order` by `"product"`, `"correlator"`
/// or `"enumerate"`.
#[pyfunction]
#[pyo3(signature = (order, method = "product"))]
fn macmahon<'py>(py: Python<'py>, order: usize, method: &str) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let s = match method {
        "product" => mm::macmahon_series(order),
        "correlator" => mm::correlator_full(order),
        "enumerate" => mm::plane_partition_series(order),
        other => return Err(PyValueError::new_err(format!("unknown method `{other}`"))),
    }
    .map_err(err)?;
    q_list(py, s, order)
}

#[pyfunction]
fn plane_partition_count(n: usize) -> PyResult<u64> {
    mm::plane_partition_count(n).map_err(err)
}

#[pyfunction]
fn macmahon_check(py: Python<'_>, order: usize) -> PyResult<Bound<'_, PyAny>> {
    report(py, mm::macmahon_check(order).map_err(err)?)
}

#[pymodule]
#[pyo3(name = "ucphase")]
fn ucphase_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Partition>()?;
    m.add_class::<Poly>()?;
    m.add_class::<PhaseModel>()?;
    m.add_function(wrap_pyfunction!(universal_character, m)?)?;
    m.add_function(wrap_pyfunction!(synthesize, m)?)?;
    m.add_function(wrap_pyfunction!(macmahon, m)?)?;
    m.add_function(wrap_pyfunction!(plane_partition_count, m)?)?;
    m.add_function(wrap_pyfunction!(macmahon_check, m)?)?;
    Ok(())
}
