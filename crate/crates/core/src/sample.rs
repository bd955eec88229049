//! Random element generators used by the axiom harness and property tests.
//!
//! Finite values for the `+`-based rings are drawn from the grid
//! `{k/8 : |k/8| ≤ 100}`. Sums of such values are exact in `f64`, which is
//! what makes bitwise-exact associativity checks meaningful.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::Rng;

use crate::analysis::FiniteSFunction;
use crate::fuzzy::FuzzySet;
use crate::interval::{Interval, IntervalSemiring};
use crate::semiring::{ScalarRing, Semiring};

const GRID: f64 = 8.0;

/// A grid value in `[lo, hi]` with spacing `1/8`.
pub fn grid_value<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    let k = rng.random_range((lo * GRID) as i64..=(hi * GRID) as i64);
    k as f64 / GRID
}

/// One element of `ring`, with the zero and unit appearing often enough to
/// exercise the neutral and absorbing laws.
pub fn sample_scalar<R: Rng + ?Sized>(ring: ScalarRing, rng: &mut R) -> f64 {
    let roll: f64 = rng.random();
    if roll < 0.08 {
        return ring.zero();
    }
    if roll < 0.14 {
        return ring.one();
    }
    match ring {
        ScalarRing::MaxPlus | ScalarRing::MinPlus => grid_value(rng, -100.0, 100.0),
        ScalarRing::Boolean => {
            if rng.random_bool(0.5) {
                1.0
            } else {
                0.0
            }
        }
        ScalarRing::Fuzzy => rng.random::<f64>(),
        ScalarRing::MaxMin => grid_value(rng, -100.0, 100.0),
        ScalarRing::Arith => rng.random_range(0.0..100.0),
    }
}

/// An interval `[a, a ⊕ b]`; valid in any idempotent base because
/// `a ⪯ a ⊕ b` always holds.
pub fn sample_interval<S, R, F>(iring: &IntervalSemiring<S>, rng: &mut R, mut base: F) -> Interval<S>
where
    S: Semiring,
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> S::Elem,
{
    let a = base(rng);
    let b = base(rng);
    let hi = iring.base().add(&a, &b);
    Interval::new(iring.base().clone(), a, hi).expect("a ⪯ a ⊕ b")
}

/// A function on `points` with each point present with probability 0.7.
pub fn sample_function<S, R, F>(ring: &S, points: &[&str], rng: &mut R, mut value: F) -> FiniteSFunction<S>
where
    S: Semiring,
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> S::Elem,
{
    let mut f = FiniteSFunction::new(ring.clone());
    for p in points {
        if rng.random_bool(0.7) {
            f.insert(*p, value(rng)).expect("sampler yields carrier elements");
        }
    }
    f
}

pub fn sample_fuzzy_set<S, R, F>(
    ring: &S,
    universe: &Arc<BTreeSet<String>>,
    rng: &mut R,
    value: F,
) -> FuzzySet<S>
where
    S: Semiring,
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> S::Elem,
{
    let points: Vec<&str> = universe.iter().map(String::as_str).collect();
    let membership = sample_function(ring, &points, rng, value);
    FuzzySet::new(universe.clone(), membership).expect("support drawn from the universe")
}
