//! Python bindings: instance specs, Betti tables, the symbolic pipeline,
//! Groebner queries, and the oracle checks, as a native `xyres` module.

// the #[pymethods] expansion trips useless_conversion on recent clippy
#![allow(clippy::useless_conversion)]

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use xyres::betti;
use xyres::constructions::{
    build_instance, height_sequence, orders, regular_sequence_by_coprime_lt, transversal_by_oracle,
    transversal_by_support, Kind, TransversalityVerdict,
};
use xyres::groebner::{colon, ideal_equal, Ideal};
use xyres::ring::parse_polynomial;
use xyres::Polynomial;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// serde_json -> Python conversion for report-shaped data.
fn json_to_py(py: Python<'_>, v: &serde_json::Value) -> PyObject {
    match v {
        serde_json::Value::Null => py.None(),
        serde_json::Value::Bool(b) => b.into_py(py),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_py(py)
            } else if let Some(u) = n.as_u64() {
                u.into_py(py)
            } else {
                n.as_f64().unwrap().into_py(py)
            }
        }
        serde_json::Value::String(s) => s.into_py(py),
        serde_json::Value::Array(items) => {
            let list = PyList::empty_bound(py);
            for item in items {
                list.append(json_to_py(py, item)).unwrap();
            }
            list.into_py(py)
        }
        serde_json::Value::Object(map) => {
            let dict = PyDict::new_bound(py);
            for (k, item) in map {
                dict.set_item(k, json_to_py(py, item)).unwrap();
            }
            dict.into_py(py)
        }
    }
}

fn to_py<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyObject {
    json_to_py(py, &serde_json::to_value(value).unwrap())
}

fn kind_of(s: &str) -> PyResult<Kind> {
    match s {
        "generic" => Ok(Kind::Generic),
        "symmetric" => Ok(Kind::Symmetric),
        other => Err(value_err(format!(
            "kind must be 'generic' or 'symmetric', got '{}'",
            other
        ))),
    }
}

/// Problem instance: size n, generic or symmetric, and the pivot rows (i, j).
#[pyclass(frozen, name = "InstanceSpec")]
#[derive(Clone)]
struct PySpec {
    inner: xyres::constructions::InstanceSpec,
}

impl PySpec {
    fn order(&self, name: &str) -> PyResult<xyres::MonomialOrder> {
        orders::by_name(name, &self.inner)
            .ok_or_else(|| value_err(format!("unknown order name '{}'", name)))
    }
}

#[pymethods]
impl PySpec {
    #[new]
    #[pyo3(signature = (n, kind="generic", ij=(1, 2)))]
    fn new(n: u8, kind: &str, ij: (u8, u8)) -> PyResult<Self> {
        let inner =
            xyres::constructions::InstanceSpec::new(n, kind_of(kind)?, ij).map_err(value_err)?;
        Ok(PySpec { inner })
    }

    #[getter]
    fn n(&self) -> u8 {
        self.inner.n
    }

    #[getter]
    fn kind(&self) -> String {
        self.inner.kind.to_string()
    }

    #[getter]
    fn ij(&self) -> (u8, u8) {
        self.inner.pivot
    }

    fn __repr__(&self) -> String {
        format!(
            "InstanceSpec(n={}, kind='{}', ij={:?})",
            self.inner.n, self.inner.kind, self.inner.pivot
        )
    }

    /// The 2x2 minors of Xt_ij as text, under the named order.
    #[pyo3(signature = (order="default"))]
    fn minors(&self, order: &str) -> PyResult<Vec<String>> {
        let ord = self.order(order)?;
        let inst = build_instance(&self.inner);
        inst.minors.iter().map(|m| Ok(m.to_text(&ord))).collect()
    }

    /// The bilinear forms g_1..g_n as text, under the named order.
    #[pyo3(signature = (order="default"))]
    fn g(&self, order: &str) -> PyResult<Vec<String>> {
        let ord = self.order(order)?;
        let inst = build_instance(&self.inner);
        inst.g.iter().map(|g| Ok(g.to_text(&ord))).collect()
    }

    /// Reduced Groebner basis of a named ideal ('minors', 'minors-g', 'g')
    /// or an explicit list of polynomial strings.
    #[pyo3(signature = (ideal, order="default"))]
    fn groebner(&self, ideal: &Bound<'_, PyAny>, order: &str) -> PyResult<Vec<String>> {
        let ord = self.order(order)?;
        let inst = build_instance(&self.inner);
        let gens: Vec<Polynomial> = if let Ok(name) = ideal.extract::<String>() {
            match name.as_str() {
                "minors" => inst.minors.clone(),
                "minors-g" => {
                    let mut v = inst.minors.clone();
                    v.extend(inst.g.iter().cloned());
                    v
                }
                "g" => inst.g.clone(),
                other => {
                    return Err(value_err(format!(
                        "unknown ideal name '{}'; expected minors | minors-g | g",
                        other
                    )))
                }
            }
        } else {
            let texts: Vec<String> = ideal.extract()?;
            texts
                .iter()
                .map(|t| parse_polynomial(t).map_err(value_err))
                .collect::<PyResult<_>>()?
        };
        let gb = Ideal::new(gens).reduced_gb(&ord).map_err(value_err)?;
        Ok(gb.iter().map(|g| g.to_text(&ord)).collect())
    }

    /// Runs the full symbolic pipeline; returns the step-by-step report.
    #[pyo3(signature = (stages=0, trials=0, seed=42))]
    fn pipeline_verify(
        &self,
        py: Python<'_>,
        stages: u8,
        trials: usize,
        seed: u64,
    ) -> PyResult<PyObject> {
        let report =
            betti::pipeline_verify(&self.inner, stages, trials, seed).map_err(value_err)?;
        Ok(to_py(py, &report))
    }

    /// True iff (I2 + <g_i>) : g_j equals the pivot row-variable ideal.
    fn colon_check(&self) -> PyResult<bool> {
        let inst = build_instance(&self.inner);
        let (i, j) = self.inner.pivot;
        let ord = orders::stage_order(&self.inner);
        let mut gens = inst.minor_ideal().generators().to_vec();
        gens.push(inst.g_at(i).clone());
        let lhs = colon(&Ideal::new(gens), inst.g_at(j), &ord).map_err(value_err)?;
        let rhs = Ideal::new(
            inst.colon_row_vars()
                .into_iter()
                .map(Polynomial::var)
                .collect(),
        );
        ideal_equal(&lhs, &rhs, &ord).map_err(value_err)
    }

    /// True iff the staircase minors have pairwise coprime leading terms
    /// under the height order (a sufficient regular-sequence certificate).
    fn regular_sequence_check(&self) -> PyResult<bool> {
        let inst = build_instance(&self.inner);
        let ord = orders::height_order(&self.inner);
        regular_sequence_by_coprime_lt(&height_sequence(&inst), &ord).map_err(value_err)
    }

    /// Support criterion + elimination oracle for the stage-`step`
    /// transversality claim (step 0: minors vs g_i).
    #[pyo3(signature = (step=0))]
    fn transversality_check(&self, step: u8) -> PyResult<bool> {
        if self.inner.n < 2 || step > self.inner.n - 2 {
            return Err(value_err(format!("step must be <= n-2, got {}", step)));
        }
        let inst = build_instance(&self.inner);
        let seq = inst.g_sequence();
        let (left, right_idx, ord) = if step == 0 {
            (
                inst.minor_ideal(),
                seq[0],
                orders::stage0_transversality_order(&self.inner),
            )
        } else {
            let mut gens = inst.minor_ideal().generators().to_vec();
            for &l in &seq[..step as usize + 1] {
                gens.push(inst.g_at(l).clone());
            }
            (
                Ideal::new(gens),
                seq[step as usize + 1],
                orders::stage_order(&self.inner),
            )
        };
        let right = Ideal::new(vec![inst.g_at(right_idx).clone()]);
        let support = transversal_by_support(&left, &right, &ord).map_err(value_err)?;
        let oracle = transversal_by_oracle(&left, &right, &ord).map_err(value_err)?;
        Ok(support == TransversalityVerdict::Transversal && oracle)
    }
}

/// Closed-form stage table of total Betti numbers for size n.
#[pyfunction]
fn table(py: Python<'_>, n: u8) -> PyResult<PyObject> {
    let t = betti::table(n).map_err(value_err)?;
    Ok(to_py(py, &t))
}

/// Ranks of the determinantal (Eagon-Northcott) resolution of I2.
#[pyfunction]
fn en_ranks(n: u8) -> PyResult<Vec<u64>> {
    betti::en_ranks(n).map_err(value_err)
}

/// Betti numbers of the two-equation base quotient.
#[pyfunction]
fn base_row(n: u8) -> PyResult<Vec<u64>> {
    betti::base_row(n).map_err(value_err)
}

/// One transversal tensor stage: convolution of the row with (1, 1).
#[pyfunction]
fn pascal_step(row: Vec<u64>) -> Vec<u64> {
    betti::pascal_step(&row)
}

/// Signed sum b_0 - b_1 + b_2 - ...; zero for every resolved quotient.
#[pyfunction]
fn alternating_sum(row: Vec<u64>) -> i64 {
    betti::alternating_sum(&row)
}

#[pymodule]
#[pyo3(name = "xyres")]
fn xyres_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySpec>()?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(en_ranks, m)?)?;
    m.add_function(wrap_pyfunction!(base_row, m)?)?;
    m.add_function(wrap_pyfunction!(pascal_step, m)?)?;
    m.add_function(wrap_pyfunction!(alternating_sum, m)?)?;
    Ok(())
}
