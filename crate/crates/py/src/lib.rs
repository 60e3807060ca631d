//! Python bindings for `stabconv`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use stabconv::synth::{self, OrderOptions};
use stabconv::verify::step_passes;
use stabconv::{library, ConversionCircuit, PauliOperator, StabilizerCode};

fn err(e: stabconv::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_pauli(s: &str) -> PyResult<PauliOperator> {
    s.parse().map_err(err)
}

#[pyclass(name = "Pauli", module = "stabconv_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPauli {
    inner: PauliOperator,
}

#[pymethods]
impl PyPauli {
    #[new]
    fn new(s: &str) -> PyResult<Self> {
        Ok(PyPauli {
            inner: parse_pauli(s)?,
        })
    }

    #[getter]
    fn num_qubits(&self) -> usize {
        self.inner.num_qubits()
    }

    #[getter]
    fn sign(&self) -> i8 {
        self.inner.sign()
    }

    fn weight(&self) -> usize {
        self.inner.weight()
    }

    fn commutes_with(&self, other: &PyPauli) -> PyResult<bool> {
        self.inner.commutes_with(&other.inner).map_err(err)
    }

    fn __mul__(&self, other: &PyPauli) -> PyResult<PyPauli> {
        Ok(PyPauli {
            inner: self.inner.multiply(&other.inner).map_err(err)?,
        })
    }

    fn sparse(&self) -> String {
        self.inner.to_sparse_string()
    }

    fn __eq__(&self, other: &PyPauli) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Pauli('{}')", self.inner)
    }
}

#[pyclass(name = "Code", module = "stabconv_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCode {
    inner: StabilizerCode,
}

#[pymethods]
impl PyCode {
    /// Build a code from Pauli strings such as `"XZZXI"`.
    #[new]
    fn new(generators: Vec<String>) -> PyResult<Self> {
        let refs: Vec<&str> = generators.iter().map(String::as_str).collect();
        Ok(PyCode {
            inner: StabilizerCode::from_strs(&refs).map_err(err)?,
        })
    }

    /// Parse the `n k` header plus generator line text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyCode {
            inner: StabilizerCode::parse_text(text).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.num_qubits()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.num_logical()
    }

    fn generators(&self) -> Vec<String> {
        self.inner
            .generators()
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    /// Syndrome as `+1`/`-1` eigenvalues.
    fn syndrome(&self, error: &str) -> PyResult<Vec<i8>> {
        let e = parse_pauli(error)?;
        Ok(self.inner.syndrome(&e).map_err(err)?.eigenvalues())
    }

    fn distance_at_least_3(&self) -> (bool, Option<String>) {
        let d = self.inner.distance_at_least_3();
        (d.at_least_3, d.witness.map(|w| w.to_sparse_string()))
    }

    fn same_group(&self, other: &PyCode) -> bool {
        self.inner.same_group(&other.inner)
    }

    fn augment(&self, m: usize) -> PyCode {
        PyCode {
            inner: self.inner.augment(m),
        }
    }

    fn apply(&self, circuit: &PyCircuit) -> PyResult<PyCode> {
        Ok(PyCode {
            inner: self.inner.apply_circuit(&circuit.inner).map_err(err)?,
        })
    }

    fn standard_form(&self) -> PyResult<String> {
        let sf = stabconv::to_standard_form(&self.inner).map_err(err)?;
        Ok(sf.code().matrix_string())
    }

    /// IABC form with `m` ancillas: (matrix, record listing).
    #[pyo3(signature = (m = 0))]
    fn iabc(&self, m: usize) -> PyResult<(String, String)> {
        let f = stabconv::augmented_iabc(&self.inner, m).map_err(err)?;
        Ok((
            f.code().matrix_string(),
            stabconv::circuit::listing(f.u_record()),
        ))
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        format!(
            "Code([[{},{}]], {:?})",
            self.inner.num_qubits(),
            self.inner.num_logical(),
            self.generators()
        )
    }
}

#[pyclass(name = "Circuit", module = "stabconv_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCircuit {
    inner: ConversionCircuit,
}

#[pymethods]
impl PyCircuit {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyCircuit {
            inner: ConversionCircuit::from_json(text).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.num_qubits()
    }

    fn gates(&self) -> Vec<String> {
        self.inner.gates().iter().map(ToString::to_string).collect()
    }

    /// (phase label, gate) pairs.
    fn steps(&self) -> Vec<(String, String)> {
        self.inner
            .steps()
            .iter()
            .map(|s| (s.phase.label().to_string(), s.gate.to_string()))
            .collect()
    }

    fn two_qubit_count(&self) -> usize {
        self.inner.two_qubit_count()
    }

    fn inverse(&self) -> PyCircuit {
        PyCircuit {
            inner: self.inner.inverse(),
        }
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.listing()
    }
}

#[pyfunction]
fn builtin(name: &str) -> PyResult<PyCode> {
    Ok(PyCode {
        inner: library::builtin(name).map_err(err)?,
    })
}

/// Hand-ordered reference circuit: `five-steane`, `steane-rm15` or `steane-qpc`.
#[pyfunction]
fn reference_circuit(name: &str) -> PyResult<PyCircuit> {
    let inner = match name {
        "five-steane" => library::reference::five_to_steane(),
        "steane-rm15" => library::reference::steane_to_rm15(),
        "steane-qpc" => library::reference::steane_to_qpc(),
        _ => return Err(PyValueError::new_err(format!("unknown reference {name}"))),
    };
    Ok(PyCircuit { inner })
}

/// Synthesize a fault-tolerantly ordered conversion circuit.
#[pyfunction]
#[pyo3(signature = (source, target, m1 = None, m2 = None, budget = 100_000))]
fn synthesize(
    py: Python<'_>,
    source: &PyCode,
    target: &PyCode,
    m1: Option<usize>,
    m2: Option<usize>,
    budget: usize,
) -> PyResult<PyCircuit> {
    let opts = OrderOptions {
        budget,
        ..OrderOptions::default()
    };
    let (s, t) = (source.inner.clone(), target.inner.clone());
    let result = py.detach(move || match (m1, m2) {
        (Some(a), Some(b)) => synth::synthesize(&s, &t, a, b, opts),
        (None, None) => synth::synthesize_default_ancillas(&s, &t, opts),
        _ => Err(stabconv::Error::Layout(
            "give both m1 and m2 or neither".into(),
        )),
    });
    Ok(PyCircuit {
        inner: result.map_err(err)?.circuit,
    })
}

/// Canonical draft circuit without reordering.
#[pyfunction]
fn draft(source: &PyCode, target: &PyCode, m1: usize, m2: usize) -> PyResult<PyCircuit> {
    let plan = synth::plan_conversion(&source.inner, &target.inner, m1, m2).map_err(err)?;
    Ok(PyCircuit {
        inner: plan.circuit,
    })
}

/// Step-by-step check of `circuit` on `code` (already padded with ancillas).
/// Returns (passed, summary, report json).
#[pyfunction]
#[pyo3(signature = (code, circuit, exhaustive = false))]
fn verify(
    code: &PyCode,
    circuit: &PyCircuit,
    exhaustive: bool,
) -> PyResult<(bool, String, String)> {
    let r = stabconv::verify_circuit(&code.inner, &circuit.inner, exhaustive).map_err(err)?;
    Ok((r.passed, r.summary(), r.to_json()))
}

#[pyfunction]
fn simplify(code: &PyCode, circuit: &PyCircuit) -> PyCircuit {
    PyCircuit {
        inner: synth::simplify(&code.inner, &circuit.inner, &step_passes),
    }
}

#[pymodule]
fn stabconv_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPauli>()?;
    m.add_class::<PyCode>()?;
    m.add_class::<PyCircuit>()?;
    m.add_function(wrap_pyfunction!(builtin, m)?)?;
    m.add_function(wrap_pyfunction!(reference_circuit, m)?)?;
    m.add_function(wrap_pyfunction!(synthesize, m)?)?;
    m.add_function(wrap_pyfunction!(draft, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(simplify, m)?)?;
    Ok(())
}
