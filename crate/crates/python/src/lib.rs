use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use slicecheck::auxiliary::{self, RealizeTarget};
use slicecheck::casework::{self, Declared, Verdict};
use slicecheck::exotica;
use slicecheck::genus;
use slicecheck::homology::HomologyClass;
use slicecheck::io;
use slicecheck::knot::{self, RootOfUnity, SeifertMatrix};

fn err(e: slicecheck::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn root(r: i64, m: i64) -> PyResult<RootOfUnity> {
    RootOfUnity::new(r, m).map_err(err)
}

#[pyclass(name = "KnotRecord", module = "slicecheck", frozen, from_py_object)]
#[derive(Clone)]
struct PyKnotRecord {
    inner: knot::KnotRecord,
}

#[pymethods]
impl PyKnotRecord {
    /// samples maps "r/m" to σ(e^{2πi r/m}).
    #[new]
    #[pyo3(signature = (name, g4, arf, samples, seifert=None))]
    fn new(name: &str, g4: u32, arf: u8, samples: BTreeMap<String, i64>, seifert: Option<Vec<Vec<i64>>>) -> PyResult<Self> {
        let samples = samples
            .into_iter()
            .map(|(k, v)| Ok((k.parse::<RootOfUnity>().map_err(err)?, v)))
            .collect::<PyResult<Vec<_>>>()?;
        let seifert = seifert.map(SeifertMatrix::new).transpose().map_err(err)?;
        let inner = knot::KnotRecord::new(name, g4, arf, samples, seifert).map_err(err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn name(&self) -> &str {
        &self.inner.name
    }

    #[getter]
    fn g4(&self) -> u32 {
        self.inner.g4
    }

    #[getter]
    fn arf(&self) -> u8 {
        self.inner.arf
    }

    fn signature(&self, r: i64, m: i64) -> PyResult<i64> {
        self.inner.signature(root(r, m)?).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("KnotRecord({:?}, g4={}, arf={})", self.inner.name, self.inner.g4, self.inner.arf)
    }
}

#[pyclass(name = "Certificate", module = "slicecheck", frozen)]
struct PyCertificate {
    inner: casework::Certificate,
}

#[pymethods]
impl PyCertificate {
    /// "NOT_SLICE" or "INCONCLUSIVE".
    #[getter]
    fn verdict(&self) -> String {
        self.inner.verdict.to_string()
    }

    #[getter]
    fn not_slice(&self) -> bool {
        self.inner.verdict == Verdict::NotSlice
    }

    #[getter]
    fn reasons(&self) -> Vec<String> {
        self.inner.reasons.clone()
    }

    #[getter]
    fn citations(&self) -> Vec<String> {
        self.inner.leaf_citations()
    }

    #[getter]
    fn rokhlin(&self) -> String {
        format!("{:?}", self.inner.rokhlin).to_lowercase()
    }

    /// Independent re-check; returns the list of problems (empty if sound).
    fn replay(&self) -> Vec<String> {
        casework::replay_certificate(&self.inner).err().unwrap_or_default()
    }

    fn to_json(&self) -> String {
        io::certificate_json(&self.inner)
    }

    fn to_markdown(&self) -> String {
        io::certificate_markdown(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Certificate({}, lk={}, {})", self.inner.input.knot, self.inner.input.lk, self.inner.verdict)
    }
}

#[pyfunction]
fn load_knot_table(path: &str) -> PyResult<Vec<PyKnotRecord>> {
    Ok(io::ingest_knot_table(path).map_err(err)?.into_iter().map(|inner| PyKnotRecord { inner }).collect())
}

#[pyfunction]
#[pyo3(signature = (knot, lk, a1=true, a3=true))]
fn certify(knot: &PyKnotRecord, lk: i64, a1: bool, a3: bool) -> PyCertificate {
    PyCertificate { inner: casework::certify_not_slice(&knot.inner, lk, Declared { a1, a3 }) }
}

#[pyfunction]
fn ruberman_genus(a: i64, b: i64) -> u64 {
    genus::ruberman_genus(&HomologyClass::pair(a, b))
}

#[pyfunction]
fn classes_of_genus_at_most(g: u64, bound: i64) -> Vec<(i64, i64)> {
    genus::classes_of_genus_at_most(g, bound).iter().map(|c| (c.coords[0], c.coords[1])).collect()
}

#[pyfunction]
fn lt_signature(seifert: Vec<Vec<i64>>, r: i64, m: i64) -> PyResult<i64> {
    let v = SeifertMatrix::new(seifert).map_err(err)?;
    knot::lt_signature_seifert(&v, root(r, m)?).map_err(err)
}

#[pyfunction]
fn torus2_signature(q: i64, r: i64, m: i64) -> PyResult<i64> {
    knot::torus2_signature(q, root(r, m)?).map_err(err)
}

/// (f_a, f_b) pairs with det Q = −1 (or < 0 with allow_indefinite).
#[pyfunction]
#[pyo3(signature = (lk, bound, allow_indefinite=false))]
fn framing_search(lk: i64, bound: i64, allow_indefinite: bool) -> PyResult<Vec<(i64, i64)>> {
    Ok(exotica::framing_search(lk, bound, allow_indefinite).map_err(err)?.iter().map(|f| (f.f_a, f.f_b)).collect())
}

#[pyfunction]
fn rokhlin(lk: i64) -> String {
    format!("{:?}", exotica::rokhlin_vanishes(lk)).to_lowercase()
}

/// f_m(d) as a (numerator, denominator) pair.
#[pyfunction]
fn kprt_f(m: u64, d: i64) -> PyResult<(i64, i64)> {
    let f = auxiliary::kprt_f(m, d).map_err(err)?;
    Ok((*f.numer(), *f.denom()))
}

#[pyfunction]
#[pyo3(signature = (a, b, c, target="s2xs2"))]
fn yasuhara_realize(a: i64, b: i64, c: i64, target: &str) -> PyResult<[[i64; 3]; 2]> {
    let t: RealizeTarget = target.parse().map_err(err)?;
    auxiliary::yasuhara_realize(a, b, c, t).map_err(err)
}

#[pyfunction]
fn verify_c7t23() -> PyResult<bool> {
    Ok(auxiliary::verify_c7t23_not_slice_in_cp2s().map_err(err)?.obstructed)
}

#[pymodule]
fn _slicecheck(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyKnotRecord>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(load_knot_table, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(ruberman_genus, m)?)?;
    m.add_function(wrap_pyfunction!(classes_of_genus_at_most, m)?)?;
    m.add_function(wrap_pyfunction!(lt_signature, m)?)?;
    m.add_function(wrap_pyfunction!(torus2_signature, m)?)?;
    m.add_function(wrap_pyfunction!(framing_search, m)?)?;
    m.add_function(wrap_pyfunction!(rokhlin, m)?)?;
    m.add_function(wrap_pyfunction!(kprt_f, m)?)?;
    m.add_function(wrap_pyfunction!(yasuhara_realize, m)?)?;
    m.add_function(wrap_pyfunction!(verify_c7t23, m)?)?;
    Ok(())
}
