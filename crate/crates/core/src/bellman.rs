//! Solvers for the stationary Bellman equation `X = H ⊙ X ⊕ F`.
//!
//! Over an idempotent semiring the least solution is `X = H* ⊙ F`. Two
//! iterative schemes reach it: the Jacobi iteration (all entries updated
//! from the previous iterate, the algebraic form of Bellman's shortest path
//! algorithm) and the Gauss–Seidel sweep (entries updated in place, the
//! form of Ford's algorithm).

use std::fmt;
use std::str::FromStr;

use crate::error::{Bound, Error, Result};
use crate::interval::{Interval, IntervalSemiring};
use crate::matrix::Matrix;
use crate::semiring::Semiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Jacobi,
    GaussSeidel,
    Star,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Jacobi => "jacobi",
            Method::GaussSeidel => "gauss-seidel",
            Method::Star => "star",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "jacobi" => Ok(Method::Jacobi),
            "gauss-seidel" | "gauss_seidel" | "gaussseidel" => Ok(Method::GaussSeidel),
            "star" => Ok(Method::Star),
            _ => Err(Error::domain(format!(
                "unknown method {s:?} (expected jacobi, gauss-seidel or star)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BellmanSolution<S: Semiring> {
    pub x: Matrix<S>,
    pub iterations: usize,
    /// When set, `x = H ⊙ x ⊕ F` holds exactly.
    pub converged: bool,
    pub method: Method,
    /// For a run that stopped without a fixed point: an entry that changed
    /// in the last iteration.
    pub unsettled: Option<(usize, usize)>,
}

impl<S: Semiring> BellmanSolution<S> {
    /// Turns a non-converged run into a [`Error::Divergence`].
    pub fn into_result(self) -> Result<Self> {
        match (self.converged, self.unsettled) {
            (true, _) => Ok(self),
            (false, Some((row, col))) => Err(Error::Divergence {
                row,
                col,
                bound: None,
            }),
            (false, None) => Err(Error::Divergence {
                row: 0,
                col: 0,
                bound: None,
            }),
        }
    }
}

fn check_system<S: Semiring>(h: &Matrix<S>, f: &Matrix<S>) -> Result<()> {
    h.ring().ensure_same(f.ring())?;
    if !h.is_square() {
        return Err(Error::Shape(format!(
            "H must be square, got {}×{}",
            h.rows(),
            h.cols()
        )));
    }
    if f.rows() != h.rows() {
        return Err(Error::Shape(format!(
            "F must have {} rows, got {}",
            h.rows(),
            f.rows()
        )));
    }
    Ok(())
}

/// Jacobi iteration `X_{k+1} = H ⊙ X_k ⊕ F` from `X_0 = F`, stopping at the
/// first exact repeat. Running out of `max_iter` is reported through
/// `converged = false`, not as an error.
pub fn solve_jacobi<S: Semiring>(
    h: &Matrix<S>,
    f: &Matrix<S>,
    max_iter: usize,
) -> Result<BellmanSolution<S>> {
    check_system(h, f)?;
    let mut x = f.clone();
    let mut unsettled = None;
    for k in 1..=max_iter {
        let next = h.mul(&x)?.add(f)?;
        match next.first_difference(&x) {
            None => {
                return Ok(BellmanSolution {
                    x: next,
                    iterations: k,
                    converged: true,
                    method: Method::Jacobi,
                    unsettled: None,
                })
            }
            Some(at) => unsettled = Some(at),
        }
        x = next;
    }
    Ok(BellmanSolution {
        x,
        iterations: max_iter,
        converged: false,
        method: Method::Jacobi,
        unsettled,
    })
}

/// Gauss–Seidel sweeps: rows are updated in ascending order and each update
/// already sees the rows refreshed earlier in the same sweep.
pub fn solve_gauss_seidel<S: Semiring>(
    h: &Matrix<S>,
    f: &Matrix<S>,
    max_iter: usize,
) -> Result<BellmanSolution<S>> {
    check_system(h, f)?;
    let ring = h.ring().clone();
    let (n, m) = (f.rows(), f.cols());
    let mut x = f.to_rows();
    let mut unsettled = None;
    for sweep in 1..=max_iter {
        let mut changed = None;
        for i in 0..n {
            for j in 0..m {
                let mut acc = f.get(i, j).clone();
                for (k, hik) in h.row(i).iter().enumerate() {
                    if !ring.is_zero(hik) {
                        acc = ring.add(&acc, &ring.mul(hik, &x[k][j]));
                    }
                }
                if acc != x[i][j] {
                    changed.get_or_insert((i, j));
                    x[i][j] = acc;
                }
            }
        }
        if changed.is_none() {
            return Ok(BellmanSolution {
                x: Matrix::from_rows(ring, x)?,
                iterations: sweep,
                converged: true,
                method: Method::GaussSeidel,
                unsettled: None,
            });
        }
        unsettled = changed;
    }
    Ok(BellmanSolution {
        x: Matrix::from_rows(ring, x)?,
        iterations: max_iter,
        converged: false,
        method: Method::GaussSeidel,
        unsettled,
    })
}

/// `X = H* ⊙ F`. Divergence of the star is an error.
pub fn solve_star<S: Semiring>(h: &Matrix<S>, f: &Matrix<S>) -> Result<BellmanSolution<S>> {
    check_system(h, f)?;
    let (star, iterations) = h.star_counted()?;
    Ok(BellmanSolution {
        x: star.mul(f)?,
        iterations,
        converged: true,
        method: Method::Star,
        unsettled: None,
    })
}

/// Exact interval solution over `I(S)`.
///
/// The lower and upper bound systems are solved separately over `S` and the
/// results paired up. Because `⊕` and `⊙` are monotone, every point system
/// `(H, F)` inside the interval data has its solution inside the result.
pub fn solve_interval<S: Semiring>(
    h: &Matrix<IntervalSemiring<S>>,
    f: &Matrix<IntervalSemiring<S>>,
) -> Result<BellmanSolution<IntervalSemiring<S>>> {
    check_system(h, f)?;
    let iring = h.ring().clone();
    let base = iring.base().clone();

    let solve_bound = |bound: Bound, pick: fn(&Interval<S>) -> &S::Elem| {
        let hb = h.map(base.clone(), |x| pick(x).clone());
        let fb = f.map(base.clone(), |x| pick(x).clone());
        solve_star(&hb, &fb).map_err(|e| match e {
            Error::Divergence { row, col, .. } => Error::Divergence {
                row,
                col,
                bound: Some(bound),
            },
            other => other,
        })
    };
    let lower = solve_bound(Bound::Lower, Interval::lo)?;
    let upper = solve_bound(Bound::Upper, Interval::hi)?;

    let data = lower
        .x
        .entries()
        .iter()
        .zip(upper.x.entries())
        .map(|(lo, hi)| iring.interval(lo.clone(), hi.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(BellmanSolution {
        x: Matrix::new(iring, f.rows(), f.cols(), data)?,
        iterations: lower.iterations.max(upper.iterations),
        converged: true,
        method: Method::Star,
        unsettled: None,
    })
}
