//! Problem dispatch and result documents for the `idempotent` command.
//!
//! The binary is a thin clap wrapper around [`run_problem`]; keeping the
//! dispatch here lets tests drive it without spawning a process.

use std::time::Instant;

use idempotent::{
    solve_gauss_seidel, solve_interval, solve_jacobi, solve_star, BellmanSolution, ElementText,
    Error, GraphProblem, Interval, IntervalSemiring, Matrix, Method, Query, ScalarRing,
};
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DIVERGENCE: i32 = 3;

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub method: Method,
    /// Defaults to the node count.
    pub max_iter: Option<usize>,
    /// Right-hand side `F` in matrix text form, for `Query::Bellman`.
    pub rhs: Option<String>,
    pub timing: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            method: Method::Star,
            max_iter: None,
            rhs: None,
            timing: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProblemEcho {
    pub ring: String,
    pub query: String,
    pub nodes: usize,
    pub edges: Value,
}

/// Everything `solve` reports. Field order is the JSON key order.
#[derive(Debug, Clone, Serialize)]
pub struct ResultDocument {
    pub problem: ProblemEcho,
    pub method: String,
    pub converged: bool,
    pub iterations: usize,
    /// A flat array for `dist:<src>`, an array of rows otherwise.
    pub solution: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
    #[serde(skip)]
    pub text_rows: Vec<Vec<String>>,
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialises") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "ring: {}\nquery: {}\nmethod: {}\nconverged: {}\niterations: {}\n",
            self.problem.ring, self.problem.query, self.method, self.converged, self.iterations
        );
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed_ms: {ms:.3}\n"));
        }
        for row in &self.text_rows {
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// JSON rendering of an element: finite numbers as numbers, infinities as
/// `"inf"`/`"-inf"`, intervals as `[lo, hi]`.
pub trait EntryJson: ElementText {
    fn entry_json(&self, x: &Self::Elem) -> Value;
}

impl EntryJson for ScalarRing {
    fn entry_json(&self, x: &f64) -> Value {
        if x.is_finite() {
            // normalise −0
            json!(if *x == 0.0 { 0.0 } else { *x })
        } else {
            json!(self.format_elem(x))
        }
    }
}

impl EntryJson for IntervalSemiring<ScalarRing> {
    fn entry_json(&self, x: &Interval<ScalarRing>) -> Value {
        json!([self.base().entry_json(x.lo()), self.base().entry_json(x.hi())])
    }
}

/// Runs `problem` and returns the result document. Divergence (including a
/// Jacobi or Gauss–Seidel run that exhausts its iteration budget) is an
/// [`Error::Divergence`].
pub fn run_problem(problem: &GraphProblem, opts: &SolveOptions) -> Result<ResultDocument, Error> {
    let start = Instant::now();
    let mut doc = if problem.has_interval_weights() {
        let h = problem.interval_matrix()?;
        dispatch(problem, opts, h, solve_interval)?
    } else {
        let h = problem.point_matrix()?;
        dispatch(problem, opts, h, solve_star)?
    };
    if opts.timing {
        doc.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(doc)
}

type StarSolver<S> = fn(&Matrix<S>, &Matrix<S>) -> Result<BellmanSolution<S>, Error>;

fn dispatch<S: EntryJson>(
    problem: &GraphProblem,
    opts: &SolveOptions,
    h: Matrix<S>,
    star: StarSolver<S>,
) -> Result<ResultDocument, Error> {
    let ring = h.ring().clone();
    let n = problem.nodes;
    // Path values from `src` are the column (Hᵀ)* e_src; all scalar rings
    // are commutative, so this is row `src` of H*.
    let (h, f) = match problem.query {
        Query::Closure => {
            let f = Matrix::identity(ring.clone(), n)?;
            (h, f)
        }
        Query::Distances(src) => {
            let mut f = Matrix::zeros(ring.clone(), n, 1)?;
            f.set(src, 0, ring.one())?;
            (h.transpose(), f)
        }
        Query::Bellman => {
            let text = opts
                .rhs
                .as_deref()
                .ok_or_else(|| Error::Domain("query bellman needs a right-hand side (--rhs)".into()))?;
            let f = Matrix::parse(ring.clone(), text)?;
            if f.rows() != n {
                return Err(Error::Shape(format!(
                    "right-hand side has {} rows, graph has {n} nodes",
                    f.rows()
                )));
            }
            (h, f)
        }
    };

    let max_iter = opts.max_iter.unwrap_or(n);
    let sol = match opts.method {
        Method::Star => star(&h, &f),
        Method::Jacobi => solve_jacobi(&h, &f, max_iter).and_then(BellmanSolution::into_result),
        Method::GaussSeidel => solve_gauss_seidel(&h, &f, max_iter).and_then(BellmanSolution::into_result),
    };
    let sol = match (sol, problem.query) {
        // report star witnesses in the orientation of the input graph
        (Err(Error::Divergence { row, col, bound }), Query::Distances(_)) if opts.method == Method::Star => {
            return Err(Error::Divergence { row: col, col: row, bound })
        }
        (sol, _) => sol?,
    };

    let (solution, text_rows) = match problem.query {
        Query::Distances(_) => {
            let col: Vec<&S::Elem> = sol.x.entries().iter().collect();
            (
                Value::Array(col.iter().map(|x| ring.entry_json(x)).collect()),
                vec![col.iter().map(|x| ring.format_elem(x)).collect()],
            )
        }
        _ => {
            let rows = sol.x.to_rows();
            (
                Value::Array(
                    rows.iter()
                        .map(|r| Value::Array(r.iter().map(|x| ring.entry_json(x)).collect()))
                        .collect(),
                ),
                rows.iter()
                    .map(|r| r.iter().map(|x| ring.format_elem(x)).collect())
                    .collect(),
            )
        }
    };

    Ok(ResultDocument {
        problem: ProblemEcho {
            ring: problem.ring.to_string(),
            query: problem.query.to_string(),
            nodes: n,
            edges: problem.to_json()["edges"].clone(),
        },
        method: sol.method.to_string(),
        converged: sol.converged,
        iterations: sol.iterations,
        solution,
        elapsed_ms: None,
        text_rows,
    })
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Divergence { .. } => EXIT_DIVERGENCE,
        _ => EXIT_INVALID,
    }
}

/// Structured error report; for a divergence it names the witnessing entry.
pub fn error_document(err: &Error) -> Value {
    match err {
        Error::Divergence { row, col, bound } => {
            let mut doc = json!({
                "error": "divergence",
                "message": err.to_string(),
                "entry": [row, col],
            });
            if let Some(b) = bound {
                doc["bound"] = json!(b.to_string());
            }
            doc
        }
        Error::Parse { line, .. } => json!({
            "error": "parse",
            "message": err.to_string(),
            "line": line,
        }),
        _ => json!({
            "error": "invalid",
            "message": err.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "3\n0 1 4\n1 2 1\n0 2 7\n";

    fn run(text: &str, ring: ScalarRing, query: Query, method: Method) -> Result<ResultDocument, Error> {
        let g = GraphProblem::parse(text, ring, query)?;
        run_problem(
            &g,
            &SolveOptions {
                method,
                ..Default::default()
            },
        )
    }

    #[test]
    fn triangle_distances_all_methods() {
        for method in [Method::Star, Method::Jacobi, Method::GaussSeidel] {
            let doc = run(TRIANGLE, ScalarRing::MinPlus, Query::Distances(0), method).unwrap();
            assert_eq!(doc.solution, json!([0.0, 4.0, 5.0]), "{method}");
            assert!(doc.converged);
        }
    }

    #[test]
    fn bottleneck_from_zero_to_two() {
        let doc = run(TRIANGLE, ScalarRing::MaxMin, Query::Distances(0), Method::Star).unwrap();
        assert_eq!(doc.solution[2], json!(7.0));
        assert_eq!(doc.solution[0], json!("inf"));
    }

    #[test]
    fn negative_cycle_is_divergence() {
        let text = "2\n0 1 1\n1 0 -2\n";
        for method in [Method::Star, Method::Jacobi, Method::GaussSeidel] {
            let err = run(text, ScalarRing::MinPlus, Query::Distances(0), method).unwrap_err();
            assert_eq!(exit_code(&err), EXIT_DIVERGENCE);
            assert_eq!(error_document(&err)["error"], "divergence");
        }
    }

    #[test]
    fn interval_graph_uses_interval_solver() {
        let text = "2\n0 1 3,1\n1 0 2\n";
        let star = run(text, ScalarRing::MinPlus, Query::Closure, Method::Star).unwrap();
        assert_eq!(star.solution, json!([[[0.0, 0.0], [3.0, 1.0]], [[2.0, 2.0], [0.0, 0.0]]]));
        let jac = run(text, ScalarRing::MinPlus, Query::Closure, Method::Jacobi).unwrap();
        assert_eq!(jac.solution, star.solution);
        assert_eq!(star.text_rows[0], vec!["[0, 0]", "[3, 1]"]);
    }

    #[test]
    fn bellman_query_needs_rhs() {
        let g = GraphProblem::parse(TRIANGLE, ScalarRing::MinPlus, Query::Bellman).unwrap();
        let err = run_problem(&g, &SolveOptions::default()).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_INVALID);
        let opts = SolveOptions {
            rhs: Some("inf\ninf\n0\n".into()),
            ..Default::default()
        };
        let doc = run_problem(&g, &opts).unwrap();
        // distances into node 2
        assert_eq!(doc.solution, json!([[5.0], [1.0], [0.0]]));
        let bad = SolveOptions {
            rhs: Some("0\n0\n".into()),
            ..Default::default()
        };
        assert!(matches!(run_problem(&g, &bad), Err(Error::Shape(_))));
    }

    #[test]
    fn iteration_budget_exhaustion_is_divergence() {
        let g = GraphProblem::parse("4\n0 1 1\n1 2 1\n2 3 1\n", ScalarRing::MinPlus, Query::Closure).unwrap();
        let opts = SolveOptions {
            method: Method::Jacobi,
            max_iter: Some(1),
            ..Default::default()
        };
        assert_eq!(exit_code(&run_problem(&g, &opts).unwrap_err()), EXIT_DIVERGENCE);
    }

    #[test]
    fn text_rendering() {
        let doc = run(TRIANGLE, ScalarRing::MinPlus, Query::Closure, Method::Star).unwrap();
        assert_eq!(
            doc.to_text(),
            "ring: min-plus\nquery: closure\nmethod: star\nconverged: true\niterations: 3\n0 4 5\ninf 0 1\ninf inf 0\n"
        );
    }
}
