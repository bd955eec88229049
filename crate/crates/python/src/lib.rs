//! Python bindings. Elements cross the boundary as floats (`inf`/`-inf` for
//! the infinite zeros and units), functions and fuzzy sets as `dict`s, and
//! matrices as lists of rows.

use std::collections::BTreeMap;

use idempotent::fuzzy::universe;
use idempotent::sample::{sample_interval, sample_scalar};
use idempotent::{
    check_axioms, solve_gauss_seidel, solve_interval, solve_jacobi, solve_star, AxiomOutcome,
    BellmanSolution, DequantizationParameter, Error, FiniteSFunction, FuzzySet, GraphProblem,
    IdempotentMeasure, IntervalSemiring, Matrix, Method, Query, ScalarRing, Semiring as _,
};
use pyo3::create_exception;
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

create_exception!(idempotent, DivergenceError, PyValueError, "A star or iteration that does not settle.");

fn err(e: Error) -> PyErr {
    match e {
        Error::Divergence { .. } => DivergenceError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn ring(name: &str) -> PyResult<ScalarRing> {
    name.parse().map_err(err)
}

/// A built-in scalar semiring, looked up by name.
#[pyclass(name = "Semiring", frozen)]
struct PySemiring {
    ring: ScalarRing,
}

#[pymethods]
impl PySemiring {
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(Self { ring: ring(name)? })
    }

    #[staticmethod]
    fn names() -> Vec<&'static str> {
        ScalarRing::ALL.iter().map(|r| r.as_str()).collect()
    }

    #[getter]
    fn name(&self) -> &'static str {
        self.ring.as_str()
    }

    #[getter]
    fn zero(&self) -> f64 {
        self.ring.zero()
    }

    #[getter]
    fn one(&self) -> f64 {
        self.ring.one()
    }

    #[getter]
    fn is_idempotent(&self) -> bool {
        self.ring.is_idempotent()
    }

    fn add(&self, a: f64, b: f64) -> PyResult<f64> {
        self.ring.try_add(&a, &b).map_err(err)
    }

    fn mul(&self, a: f64, b: f64) -> PyResult<f64> {
        self.ring.try_mul(&a, &b).map_err(err)
    }

    /// Standard order `a ⪯ b`, i.e. `a ⊕ b == b`.
    fn leq(&self, a: f64, b: f64) -> PyResult<bool> {
        self.ring.check(&a).and(self.ring.check(&b)).map_err(err)?;
        self.ring.leq(&a, &b).map_err(err)
    }

    /// Random-sample axiom check; maps each axiom name to `"pass"`,
    /// `"not claimed"` or a failure message.
    #[pyo3(signature = (trials = 1000, seed = 0, interval = false))]
    fn check_axioms(&self, trials: usize, seed: u64, interval: bool) -> PyResult<BTreeMap<String, String>> {
        let ring = self.ring;
        let mut rng = StdRng::seed_from_u64(seed);
        let report = if interval {
            let iring = IntervalSemiring::new(ring).map_err(err)?;
            let sampler = |r: &mut StdRng| sample_interval(&iring, r, |r| sample_scalar(ring, r));
            check_axioms(&iring, sampler, &mut rng, trials)
        } else {
            check_axioms(&ring, |r: &mut StdRng| sample_scalar(ring, r), &mut rng, trials)
        };
        Ok(report
            .outcomes
            .iter()
            .map(|(axiom, outcome)| {
                let text = match outcome {
                    AxiomOutcome::Passed => "pass".to_string(),
                    AxiomOutcome::NotClaimed => "not claimed".to_string(),
                    AxiomOutcome::Failed(msg) => format!("fail: {msg}"),
                };
                (axiom.as_str().to_string(), text)
            })
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("Semiring({:?})", self.ring.as_str())
    }
}

/// Dense matrix over a scalar semiring.
#[pyclass(name = "Matrix", frozen)]
struct PyMatrix {
    inner: Matrix<ScalarRing>,
}

#[pymethods]
impl PyMatrix {
    #[new]
    fn new(ring_name: &str, rows: Vec<Vec<f64>>) -> PyResult<Self> {
        Ok(Self {
            inner: Matrix::from_rows(ring(ring_name)?, rows).map_err(err)?,
        })
    }

    #[staticmethod]
    fn identity(ring_name: &str, n: usize) -> PyResult<Self> {
        Ok(Self {
            inner: Matrix::identity(ring(ring_name)?, n).map_err(err)?,
        })
    }

    /// Parses whitespace-separated rows; `_` stands for the zero.
    #[staticmethod]
    fn parse(ring_name: &str, text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: Matrix::parse(ring(ring_name)?, text).map_err(err)?,
        })
    }

    #[getter]
    fn ring(&self) -> &'static str {
        self.inner.ring().as_str()
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.inner.rows(), self.inner.cols())
    }

    fn to_list(&self) -> Vec<Vec<f64>> {
        self.inner.to_rows()
    }

    fn __add__(&self, other: &PyMatrix) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.add(&other.inner).map_err(err)?,
        })
    }

    fn __matmul__(&self, other: &PyMatrix) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.mul(&other.inner).map_err(err)?,
        })
    }

    fn __eq__(&self, other: &PyMatrix) -> bool {
        self.inner == other.inner
    }

    fn transpose(&self) -> Self {
        Self {
            inner: self.inner.transpose(),
        }
    }

    /// Kleene star `I ⊕ H ⊕ H² ⊕ …`; raises `DivergenceError` if it does
    /// not settle.
    fn star(&self) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.star().map_err(err)?,
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Matrix({:?}, {:?})", self.ring(), self.inner.to_rows())
    }
}

/// Solves `X = H ⊙ X ⊕ F`; returns `(X, iterations, converged)`.
#[pyfunction]
#[pyo3(signature = (h, f, method = "star", max_iter = None))]
fn solve_bellman(h: &PyMatrix, f: &PyMatrix, method: &str, max_iter: Option<usize>) -> PyResult<(PyMatrix, usize, bool)> {
    let method: Method = method.parse().map_err(err)?;
    let max_iter = max_iter.unwrap_or(h.inner.rows());
    let sol: BellmanSolution<ScalarRing> = match method {
        Method::Star => solve_star(&h.inner, &f.inner),
        Method::Jacobi => solve_jacobi(&h.inner, &f.inner, max_iter),
        Method::GaussSeidel => solve_gauss_seidel(&h.inner, &f.inner, max_iter),
    }
    .map_err(err)?;
    Ok((PyMatrix { inner: sol.x }, sol.iterations, sol.converged))
}

type Rows = Vec<Vec<f64>>;

/// Interval system with bounds given as separate matrices; returns the
/// lower and upper solution matrices.
#[pyfunction]
fn solve_interval_system(ring_name: &str, h_lo: Rows, h_hi: Rows, f_lo: Rows, f_hi: Rows) -> PyResult<(Rows, Rows)> {
    let base = ring(ring_name)?;
    let iring = IntervalSemiring::new(base).map_err(err)?;
    let pair = |lo: Rows, hi: Rows| -> PyResult<Matrix<IntervalSemiring<ScalarRing>>> {
        if lo.len() != hi.len() || lo.iter().zip(&hi).any(|(a, b)| a.len() != b.len()) {
            return Err(PyValueError::new_err("bound matrices differ in shape"));
        }
        let rows = lo
            .into_iter()
            .zip(hi)
            .map(|(a, b)| a.into_iter().zip(b).map(|(x, y)| iring.interval(x, y)).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()
            .map_err(err)?;
        Matrix::from_rows(iring.clone(), rows).map_err(err)
    };
    let sol = solve_interval(&pair(h_lo, h_hi)?, &pair(f_lo, f_hi)?).map_err(err)?;
    let rows = sol.x.to_rows();
    Ok((
        rows.iter().map(|r| r.iter().map(|i| *i.lo()).collect()).collect(),
        rows.iter().map(|r| r.iter().map(|i| *i.hi()).collect()).collect(),
    ))
}

/// All-pairs path values of a graph in edge-list or JSON form.
#[pyfunction]
fn shortest_paths(ring_name: &str, graph: &str) -> PyResult<PyMatrix> {
    let g = GraphProblem::parse(graph, ring(ring_name)?, Query::Closure).map_err(err)?;
    Ok(PyMatrix {
        inner: g.shortest_paths().map_err(err)?,
    })
}

#[pyfunction]
fn dequantized_add(u: f64, v: f64, h: f64) -> PyResult<f64> {
    idempotent::dequantized_add(u, v, DequantizationParameter::new(h).map_err(err)?).map_err(err)
}

#[pyfunction]
fn dequantize_map(x: f64, h: f64) -> PyResult<f64> {
    idempotent::dequantize_map(x, DequantizationParameter::new(h).map_err(err)?).map_err(err)
}

fn function(ring: ScalarRing, values: BTreeMap<String, f64>) -> PyResult<FiniteSFunction<ScalarRing>> {
    FiniteSFunction::from_pairs(ring, values).map_err(err)
}

fn to_dict(f: &FiniteSFunction<ScalarRing>) -> BTreeMap<String, f64> {
    f.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[pyfunction]
fn integrate(ring_name: &str, phi: BTreeMap<String, f64>) -> PyResult<f64> {
    Ok(function(ring(ring_name)?, phi)?.integrate())
}

#[pyfunction]
fn integrate_against(ring_name: &str, phi: BTreeMap<String, f64>, density: BTreeMap<String, f64>) -> PyResult<f64> {
    let r = ring(ring_name)?;
    let m = IdempotentMeasure::new(function(r, density)?);
    idempotent::integrate_against(&function(r, phi)?, &m).map_err(err)
}

#[pyfunction]
fn measure_of(ring_name: &str, density: BTreeMap<String, f64>, subset: Vec<String>) -> PyResult<f64> {
    let m = IdempotentMeasure::new(function(ring(ring_name)?, density)?);
    m.measure_of(subset.iter().map(String::as_str)).map_err(|e| PyKeyError::new_err(e.to_string()))
}

fn fuzzy_pair(
    ring_name: &str,
    a: BTreeMap<String, f64>,
    b: BTreeMap<String, f64>,
) -> PyResult<(FuzzySet<ScalarRing>, FuzzySet<ScalarRing>)> {
    let r = ring(ring_name)?;
    let u = universe(a.keys().chain(b.keys()).cloned());
    Ok((
        FuzzySet::new(u.clone(), function(r, a)?).map_err(err)?,
        FuzzySet::new(u, function(r, b)?).map_err(err)?,
    ))
}

#[pyfunction]
fn fuzzy_union(ring_name: &str, a: BTreeMap<String, f64>, b: BTreeMap<String, f64>) -> PyResult<BTreeMap<String, f64>> {
    let (a, b) = fuzzy_pair(ring_name, a, b)?;
    Ok(to_dict(a.union(&b).map_err(err)?.membership()))
}

#[pyfunction]
fn fuzzy_intersection(ring_name: &str, a: BTreeMap<String, f64>, b: BTreeMap<String, f64>) -> PyResult<BTreeMap<String, f64>> {
    let (a, b) = fuzzy_pair(ring_name, a, b)?;
    Ok(to_dict(a.intersection(&b).map_err(err)?.membership()))
}

/// Possibility of the fuzzy event `a` under the distribution `psi`.
#[pyfunction]
fn possibility(ring_name: &str, a: BTreeMap<String, f64>, psi: BTreeMap<String, f64>) -> PyResult<f64> {
    let (a, psi) = fuzzy_pair(ring_name, a, psi)?;
    a.possibility(&IdempotentMeasure::new(psi.membership().clone())).map_err(err)
}

#[pymodule]
#[pyo3(name = "idempotent")]
fn idempotent_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DivergenceError", m.py().get_type::<DivergenceError>())?;
    m.add_class::<PySemiring>()?;
    m.add_class::<PyMatrix>()?;
    m.add_function(wrap_pyfunction!(solve_bellman, m)?)?;
    m.add_function(wrap_pyfunction!(solve_interval_system, m)?)?;
    m.add_function(wrap_pyfunction!(shortest_paths, m)?)?;
    m.add_function(wrap_pyfunction!(dequantized_add, m)?)?;
    m.add_function(wrap_pyfunction!(dequantize_map, m)?)?;
    m.add_function(wrap_pyfunction!(integrate, m)?)?;
    m.add_function(wrap_pyfunction!(integrate_against, m)?)?;
    m.add_function(wrap_pyfunction!(measure_of, m)?)?;
    m.add_function(wrap_pyfunction!(fuzzy_union, m)?)?;
    m.add_function(wrap_pyfunction!(fuzzy_intersection, m)?)?;
    m.add_function(wrap_pyfunction!(possibility, m)?)?;
    Ok(())
}
