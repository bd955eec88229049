//! Idempotent semirings and the algebra built on top of them.
//!
//! The crate is organised around the [`Semiring`] trait. Every algorithm
//! (matrix products, Kleene star, Bellman solvers, idempotent integrals,
//! fuzzy-set operations) is written once against that trait and works for
//! any carrier: the scalar catalogue in [`ScalarRing`], the weak interval
//! extension [`IntervalSemiring`], or the pointwise algebra of fuzzy sets
//! [`FuzzySetAlgebra`].

pub mod analysis;
pub mod axioms;
pub mod bellman;
pub mod dequantize;
pub mod error;
pub mod fuzzy;
pub mod graph;
pub mod interval;
pub mod matrix;
pub mod sample;
pub mod semiring;

pub use analysis::{integrate_against, FiniteSFunction, IdempotentMeasure};
pub use axioms::{check_axioms, Axiom, AxiomOutcome, AxiomReport};
pub use bellman::{
    solve_gauss_seidel, solve_interval, solve_jacobi, solve_star, BellmanSolution, Method,
};
pub use dequantize::{dequantize_map, dequantized_add, DequantizationParameter};
pub use error::{Bound, Error, Result};
pub use fuzzy::{FuzzySet, FuzzySetAlgebra};
pub use graph::{Edge, GraphProblem, Query, Weight};
pub use interval::{Interval, IntervalSemiring};
pub use matrix::Matrix;
pub use semiring::{ElementText, ScalarRing, Semiring};
