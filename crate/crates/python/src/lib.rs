//! Python bindings. Partitions are accepted as lists of ints, partition
//! functions as dicts (family id -> list) or bare lists, and rationals as
//! ints, strings like "5/2", or `fractions.Fraction`.

use std::fmt::Display;
use std::hash::{DefaultHasher, Hash, Hasher};

use macsym_core::charmap::{self, CharData, ClassData};
use macsym_core::macdonald::{self as mac, MacKind};
use macsym_core::partitions::partitions_of;
use macsym_core::positivity;
use macsym_core::ratfunc::{parse_rational, parse_simple};
use macsym_core::spherical::{self, Route, UnipotentCoset};
use macsym_core::symfunc::{self, BasisLabel, FamilyKind, PartitionFn};
use macsym_core::{Binding, FamilyLabel, Partition, RatQT, SymFunc};
use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyString;

fn err(e: impl Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_loads<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn json_dumps(obj: &Bound<'_, PyAny>) -> PyResult<String> {
    if let Ok(s) = obj.cast::<PyString>() {
        return Ok(s.to_string());
    }
    obj.py()
        .import("json")?
        .call_method1("dumps", (obj,))?
        .extract()
}

fn to_fraction<'py>(py: Python<'py>, r: &BigRational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.to_string(),))
}

fn rational_arg(obj: &Bound<'_, PyAny>) -> PyResult<BigRational> {
    parse_rational(&obj.str()?.to_string()).map_err(err)
}

#[derive(FromPyObject)]
enum PartArg<'py> {
    Part(PyRef<'py, PyPartition>),
    List(Vec<usize>),
}

impl PartArg<'_> {
    fn get(&self) -> PyResult<Partition> {
        match self {
            PartArg::Part(p) => Ok(p.0.clone()),
            PartArg::List(v) => Partition::new(v.clone()).map_err(err),
        }
    }
}

#[derive(FromPyObject)]
enum RatArg<'py> {
    Rat(PyRef<'py, PyRatQT>),
    Int(i64),
    Str(String),
}

impl RatArg<'_> {
    fn get(&self) -> PyResult<RatQT> {
        match self {
            RatArg::Rat(r) => Ok(r.0.clone()),
            RatArg::Int(i) => Ok(RatQT::from_int(*i)),
            RatArg::Str(s) => parse_simple(s).map_err(err),
        }
    }
}

fn partition_fn(obj: &Bound<'_, PyAny>, kind: FamilyKind) -> PyResult<PartitionFn> {
    let s = json_dumps(obj)?;
    if s.trim_start().starts_with('[') {
        let p = macsym_core::partitions::parse_partition(&s).map_err(err)?;
        let fam = match kind {
            FamilyKind::M => FamilyLabel::f1(),
            FamilyKind::L => FamilyLabel::triv(),
        };
        return Ok(PartitionFn::single(fam, p));
    }
    PartitionFn::parse(&s, kind).map_err(err)
}

fn family(s: &str) -> PyResult<FamilyLabel> {
    let kind = if s == "triv" || s.starts_with("phi") {
        FamilyKind::L
    } else {
        FamilyKind::M
    };
    FamilyLabel::parse(s, kind).map_err(err)
}

fn binding(s: &str) -> PyResult<Binding> {
    Binding::parse(s).map_err(err)
}

#[pyclass(name = "Partition", module = "macsym", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartition(Partition);

#[pymethods]
impl PyPartition {
    #[new]
    #[pyo3(signature = (parts=Vec::new()))]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        Partition::new(parts).map(Self).map_err(err)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn conjugate(&self) -> Self {
        Self(self.0.conjugate())
    }

    fn n(&self) -> usize {
        self.0.n_stat()
    }

    fn z(&self) -> u128 {
        self.0.z()
    }

    fn sign(&self) -> i64 {
        self.0.sign()
    }

    fn dominated_by(&self, other: PartArg<'_>) -> PyResult<bool> {
        self.0.dominance_leq(&other.get()?).map_err(err)
    }

    fn contains(&self, other: PartArg<'_>) -> PyResult<bool> {
        Ok(self.0.contains(&other.get()?))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }
}

#[pyclass(name = "RatQT", module = "macsym", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRatQT(RatQT);

#[pymethods]
impl PyRatQT {
    /// Accepts an int, a RatQT, or a simple expression such as "q^2" or "1/2".
    #[new]
    #[pyo3(signature = (value=RatArg::Int(0)))]
    fn new(value: RatArg<'_>) -> PyResult<Self> {
        value.get().map(Self)
    }

    #[staticmethod]
    fn q() -> Self {
        Self(RatQT::q())
    }

    #[staticmethod]
    fn t() -> Self {
        Self(RatQT::t())
    }

    #[staticmethod]
    fn from_json(obj: &Bound<'_, PyAny>) -> PyResult<Self> {
        let s = json_dumps(obj)?;
        let v: serde_json::Value = serde_json::from_str(&s).map_err(err)?;
        RatQT::from_json_value(&v).map(Self).map_err(err)
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_loads(py, &self.0.to_json_value())
    }

    fn __add__(&self, o: RatArg<'_>) -> PyResult<Self> {
        Ok(Self(self.0.add_ref(&o.get()?)))
    }

    fn __radd__(&self, o: RatArg<'_>) -> PyResult<Self> {
        self.__add__(o)
    }

    fn __sub__(&self, o: RatArg<'_>) -> PyResult<Self> {
        Ok(Self(self.0.sub_ref(&o.get()?)))
    }

    fn __rsub__(&self, o: RatArg<'_>) -> PyResult<Self> {
        Ok(Self(o.get()?.sub_ref(&self.0)))
    }

    fn __mul__(&self, o: RatArg<'_>) -> PyResult<Self> {
        Ok(Self(self.0.mul_ref(&o.get()?)))
    }

    fn __rmul__(&self, o: RatArg<'_>) -> PyResult<Self> {
        self.__mul__(o)
    }

    fn __truediv__(&self, o: RatArg<'_>) -> PyResult<Self> {
        self.0.checked_div(&o.get()?).map(Self).map_err(err)
    }

    fn __rtruediv__(&self, o: RatArg<'_>) -> PyResult<Self> {
        o.get()?.checked_div(&self.0).map(Self).map_err(err)
    }

    fn __neg__(&self) -> Self {
        Self(self.0.neg_ref())
    }

    fn __pow__(&self, k: i64, _modulo: Option<i64>) -> PyResult<Self> {
        self.0.pow(k).map(Self).map_err(err)
    }

    fn __eq__(&self, o: &Bound<'_, PyAny>) -> bool {
        o.extract::<RatArg<'_>>()
            .ok()
            .and_then(|r| r.get().ok())
            .is_some_and(|r| r == self.0)
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_polynomial(&self) -> bool {
        self.0.is_polynomial()
    }

    /// Substitutes q and t simultaneously.
    fn subst(&self, q: RatArg<'_>, t: RatArg<'_>) -> PyResult<Self> {
        self.0.subst(&q.get()?, &t.get()?).map(Self).map_err(err)
    }

    /// Value at a rational q; the result must be t-free.
    fn eval_q<'py>(&self, py: Python<'py>, q0: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        let v = self.0.eval_q(&rational_arg(q0)?).map_err(err)?;
        to_fraction(py, &v)
    }

    fn latex(&self) -> String {
        self.0.to_latex()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("RatQT({})", self.0)
    }
}

#[pyclass(name = "SymFunc", module = "macsym", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PySymFunc(SymFunc);

#[pymethods]
impl PySymFunc {
    #[staticmethod]
    #[pyo3(signature = (rho, family="f1"))]
    fn p(rho: PartArg<'_>, family: &str) -> PyResult<Self> {
        Ok(Self(SymFunc::p(&self::family(family)?, rho.get()?)))
    }

    #[staticmethod]
    #[pyo3(signature = (lam, family="f1"))]
    fn s(lam: PartArg<'_>, family: &str) -> PyResult<Self> {
        Ok(Self(SymFunc::s(&self::family(family)?, lam.get()?)))
    }

    #[staticmethod]
    #[pyo3(signature = (lam, family="f1"))]
    fn m(lam: PartArg<'_>, family: &str) -> PyResult<Self> {
        Ok(Self(SymFunc::m(&self::family(family)?, lam.get()?)))
    }

    #[staticmethod]
    #[pyo3(signature = (n, family="f1"))]
    fn e(n: usize, family: &str) -> PyResult<Self> {
        Ok(Self(SymFunc::e(&self::family(family)?, n)))
    }

    #[staticmethod]
    #[pyo3(signature = (n, family="f1"))]
    fn h(n: usize, family: &str) -> PyResult<Self> {
        Ok(Self(SymFunc::h(&self::family(family)?, n)))
    }

    #[staticmethod]
    fn scalar(c: RatArg<'_>) -> PyResult<Self> {
        Ok(Self(SymFunc::scalar(c.get()?)))
    }

    fn __add__(&self, o: &Self) -> Self {
        Self(self.0.add(&o.0))
    }

    fn __sub__(&self, o: &Self) -> Self {
        Self(self.0.sub(&o.0))
    }

    fn __neg__(&self) -> Self {
        Self(self.0.neg())
    }

    fn __mul__(&self, o: &Self) -> PyResult<Self> {
        self.0.multiply(&o.0).map(Self).map_err(err)
    }

    fn scale(&self, c: RatArg<'_>) -> PyResult<Self> {
        Ok(Self(self.0.scale(&c.get()?)))
    }

    fn to_p(&self) -> PyResult<Self> {
        self.0.to_p().map(Self).map_err(err)
    }

    /// Rewrites in `m|e|h|p|s|P|Q|J`; Macdonald bases use `binding`.
    #[pyo3(signature = (basis, binding="qt"))]
    fn to_basis(&self, basis: &str, binding: &str) -> PyResult<Self> {
        let b = BasisLabel::parse(basis, &self::binding(binding)?).map_err(err)?;
        self.0.to_basis(&b).map(Self).map_err(err)
    }

    fn omega(&self) -> PyResult<Self> {
        symfunc::omega(&self.0).map(Self).map_err(err)
    }

    /// Pairing: "hall", "sp", "gl", "dual", or a binding for the (q,t) product.
    #[pyo3(signature = (other, pairing="qt"))]
    fn inner(&self, other: &Self, pairing: &str) -> PyResult<PyRatQT> {
        let (f, g) = (&self.0, &other.0);
        let v = match pairing {
            "hall" => symfunc::hall(f, g),
            "sp" => symfunc::inner_sp(f, g),
            "gl" => symfunc::inner_gl(f, g),
            "dual" => symfunc::inner_dual(f, g),
            b => symfunc::inner_qt(f, g, &binding(b)?),
        };
        v.map(PyRatQT).map_err(err)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_loads(py, &self.0.to_json_value())
    }

    fn latex(&self) -> String {
        self.0.to_latex()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SymFunc({})", self.0)
    }
}

/// All partitions of n in reverse lexicographic order.
#[pyfunction]
fn partitions(n: i64) -> PyResult<Vec<PyPartition>> {
    Ok(partitions_of(n).map_err(err)?.into_iter().map(PyPartition).collect())
}

/// Macdonald `P`, `Q` or `J` for λ under `binding`, written in `basis`.
#[pyfunction]
#[pyo3(signature = (kind, lam, binding="qt", basis="p"))]
fn macdonald(kind: &str, lam: PartArg<'_>, binding: &str, basis: &str) -> PyResult<PySymFunc> {
    let kind = match kind {
        "P" => MacKind::P,
        "Q" => MacKind::Q,
        "J" => MacKind::J,
        other => return Err(err(format!("unknown kind {other:?}"))),
    };
    let b = self::binding(binding)?;
    let v = mac::mac_in_p(kind, &lam.get()?, &b).map_err(err)?;
    let f = SymFunc::from_pvec(&FamilyLabel::f1(), &v.into_iter().collect());
    let target = BasisLabel::parse(basis, &b).map_err(err)?;
    f.to_basis(&target).map(PySymFunc).map_err(err)
}

/// Green polynomial `Q^μ_ρ(t)`.
#[pyfunction]
fn green(rho: PartArg<'_>, mu: PartArg<'_>) -> PyResult<PyRatQT> {
    let (rho, mu) = (rho.get()?, mu.get()?);
    if rho.size() != mu.size() {
        return Err(err("ρ and μ must have the same size"));
    }
    let g = mac::green_polynomials(rho.size()).map_err(err)?;
    Ok(PyRatQT(g.get(&rho, &mu).clone()))
}

/// Characteristic image of the spherical function for λ (L-families).
#[pyfunction]
fn ch_spherical(lam: &Bound<'_, PyAny>) -> PyResult<PySymFunc> {
    let ch = CharData::new(partition_fn(lam, FamilyKind::L)?).map_err(err)?;
    charmap::ch_spherical(&ch).map(PySymFunc).map_err(err)
}

/// Characteristic image of the indicator of a double coset (M-families).
#[pyfunction]
fn ch_sp_indicator(mu: &Bound<'_, PyAny>) -> PyResult<PySymFunc> {
    let cl = ClassData::new(partition_fn(mu, FamilyKind::M)?).map_err(err)?;
    charmap::ch_sp_indicator(&cl).map(PySymFunc).map_err(err)
}

/// Spherical function value for λ on a unipotent coset.
///
/// `coset` is "identity", "transvection" or a partition of n; `route` is
/// "a", "b" or "c" (transvection only).
#[pyfunction]
#[pyo3(signature = (lam, coset=None, route="a"))]
fn spherical_value(
    lam: &Bound<'_, PyAny>,
    coset: Option<&Bound<'_, PyAny>>,
    route: &str,
) -> PyResult<PyRatQT> {
    let ch = CharData::new(partition_fn(lam, FamilyKind::L)?).map_err(err)?;
    let n = ch.n();
    let coset = match coset {
        None => UnipotentCoset::identity(n),
        Some(c) => match c.extract::<String>().ok().as_deref() {
            Some("identity") => UnipotentCoset::identity(n),
            Some("transvection") => UnipotentCoset::transvection(n).map_err(err)?,
            Some(other) => return Err(err(format!("unknown coset {other:?}"))),
            None => UnipotentCoset::new(c.extract::<PartArg<'_>>()?.get()?),
        },
    };
    if coset.n() != n {
        return Err(err(format!("coset has weight {} but λ has weight {n}", coset.n())));
    }
    let route = match route {
        "a" => Route::A,
        "b" => Route::B,
        "c" => Route::C,
        other => return Err(err(format!("unknown route {other:?}"))),
    };
    spherical::spherical_value(&ch, &coset, route)
        .map(|v| PyRatQT(v.value))
        .map_err(err)
}

/// Coefficient of `s_ν` in the skew `J_{λ/μ}` at `(q, q^2)`, normalized.
#[pyfunction]
fn positivity_coefficient(lam: PartArg<'_>, mu: PartArg<'_>, nu: PartArg<'_>) -> PyResult<PyRatQT> {
    mac::schur_expansion_c(&lam.get()?, &mu.get()?, &nu.get()?, &Binding::q_q2())
        .map(PyRatQT)
        .map_err(err)
}

/// Whether the coefficient is predicted to vanish identically.
#[pyfunction]
fn vanishing_predicted(lam: PartArg<'_>, mu: PartArg<'_>, nu: PartArg<'_>) -> PyResult<bool> {
    Ok(positivity::vanishing_predicate(&lam.get()?, &mu.get()?, &nu.get()?))
}

/// Nonnegative q-coefficients of the Haglund polynomial, or None.
#[pyfunction]
#[pyo3(signature = (lam, nu, mu=None))]
fn haglund_check(
    lam: PartArg<'_>,
    nu: PartArg<'_>,
    mu: Option<PartArg<'_>>,
) -> PyResult<Option<Vec<String>>> {
    let (lam, nu) = (lam.get()?, nu.get()?);
    let r = match mu {
        None => positivity::haglund_check(&lam, &nu),
        Some(mu) => positivity::haglund_skew_check(&lam, &mu.get()?, &nu),
    };
    Ok(r.map_err(err)?.map(|v| v.iter().map(ToString::to_string).collect()))
}

/// Runs a positivity scan; returns `{"reports": [...], "falsifications": [...]}`.
#[pyfunction]
#[pyo3(signature = (max_n, max_mu=None, qs=None))]
fn positivity_scan<'py>(
    py: Python<'py>,
    max_n: usize,
    max_mu: Option<usize>,
    qs: Option<Vec<Bound<'py, PyAny>>>,
) -> PyResult<Bound<'py, PyAny>> {
    let qs = match qs {
        Some(v) => v.iter().map(rational_arg).collect::<PyResult<Vec<_>>>()?,
        None => [3, 5, 7, 9]
            .into_iter()
            .map(|x| BigRational::from_integer(x.into()))
            .collect(),
    };
    let max_mu = max_mu.unwrap_or(max_n);
    let res = py
        .detach(|| positivity::positivity_scan(max_n, max_mu, &qs))
        .map_err(err)?;
    json_loads(py, &serde_json::to_value(&res).map_err(err)?)
}

#[pymodule]
pub fn macsym(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyRatQT>()?;
    m.add_class::<PySymFunc>()?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(macdonald, m)?)?;
    m.add_function(wrap_pyfunction!(green, m)?)?;
    m.add_function(wrap_pyfunction!(ch_spherical, m)?)?;
    m.add_function(wrap_pyfunction!(ch_sp_indicator, m)?)?;
    m.add_function(wrap_pyfunction!(spherical_value, m)?)?;
    m.add_function(wrap_pyfunction!(positivity_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(vanishing_predicted, m)?)?;
    m.add_function(wrap_pyfunction!(haglund_check, m)?)?;
    m.add_function(wrap_pyfunction!(positivity_scan, m)?)?;
    Ok(())
}
