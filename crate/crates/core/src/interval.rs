//! Closed intervals in the standard order and the weak interval extension.
//!
//! An interval `[lo, hi]` is the set `{x : lo ⪯ x ⪯ hi}`. Bounds are stored
//! in the *standard* order of the base semiring, so in min-plus the lower
//! bound is the numerically larger value: `[5, 2]` is valid there.
//!
//! `I(S)` combines intervals componentwise and is itself a semiring, so
//! matrices, solvers and fuzzy sets all work over it unchanged.

use crate::error::{Error, Result};
use crate::semiring::{ElementText, Semiring};

#[derive(Debug, Clone, PartialEq)]
pub struct Interval<S: Semiring> {
    lo: S::Elem,
    hi: S::Elem,
    base: S,
}

impl<S: Semiring> Interval<S> {
    /// Builds `[lo, hi]`, checking carrier membership and `lo ⪯ hi`.
    pub fn new(base: S, lo: S::Elem, hi: S::Elem) -> Result<Self> {
        if !base.leq(&lo, &hi)? {
            return Err(Error::domain(format!(
                "[{lo:?}, {hi:?}] is not an interval of {}: lower bound is not ⪯ upper bound",
                base.name()
            )));
        }
        Ok(Self { lo, hi, base })
    }

    /// The degenerate interval `[a, a]`.
    pub fn point(base: S, a: S::Elem) -> Result<Self> {
        Self::new(base, a.clone(), a)
    }

    pub(crate) fn from_bounds_unchecked(base: S, lo: S::Elem, hi: S::Elem) -> Self {
        debug_assert!(
            base.leq(&lo, &hi).unwrap_or(false),
            "base operations must be monotone in the standard order"
        );
        Self { lo, hi, base }
    }

    pub fn lo(&self) -> &S::Elem {
        &self.lo
    }

    pub fn hi(&self) -> &S::Elem {
        &self.hi
    }

    pub fn base(&self) -> &S {
        &self.base
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    /// `lo ⪯ e ⪯ hi`. Elements outside the carrier are not contained.
    pub fn contains(&self, e: &S::Elem) -> bool {
        self.base.leq(&self.lo, e).unwrap_or(false) && self.base.leq(e, &self.hi).unwrap_or(false)
    }

    /// `[x̲ ⊕ y̲, x̄ ⊕ ȳ]`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.base.ensure_same(&other.base)?;
        Ok(Self::from_bounds_unchecked(
            self.base.clone(),
            self.base.add(&self.lo, &other.lo),
            self.base.add(&self.hi, &other.hi),
        ))
    }

    /// `[x̲ ⊙ y̲, x̄ ⊙ ȳ]`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.base.ensure_same(&other.base)?;
        Ok(Self::from_bounds_unchecked(
            self.base.clone(),
            self.base.mul(&self.lo, &other.lo),
            self.base.mul(&self.hi, &other.hi),
        ))
    }
}

/// The weak interval extension `I(S)` of an idempotent semiring.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalSemiring<S: Semiring> {
    base: S,
}

impl<S: Semiring> IntervalSemiring<S> {
    pub fn new(base: S) -> Result<Self> {
        base.require_idempotent("interval extension")?;
        Ok(Self { base })
    }

    pub fn base(&self) -> &S {
        &self.base
    }

    pub fn interval(&self, lo: S::Elem, hi: S::Elem) -> Result<Interval<S>> {
        Interval::new(self.base.clone(), lo, hi)
    }

    /// The embedding `a ↦ [a, a]`.
    pub fn point(&self, a: S::Elem) -> Result<Interval<S>> {
        Interval::point(self.base.clone(), a)
    }
}

impl<S: Semiring> Semiring for IntervalSemiring<S> {
    type Elem = Interval<S>;

    fn name(&self) -> String {
        format!("I({})", self.base.name())
    }

    fn zero(&self) -> Interval<S> {
        let z = self.base.zero();
        Interval::from_bounds_unchecked(self.base.clone(), z.clone(), z)
    }

    fn one(&self) -> Interval<S> {
        let u = self.base.one();
        Interval::from_bounds_unchecked(self.base.clone(), u.clone(), u)
    }

    fn add(&self, a: &Interval<S>, b: &Interval<S>) -> Interval<S> {
        Interval::from_bounds_unchecked(
            self.base.clone(),
            self.base.add(&a.lo, &b.lo),
            self.base.add(&a.hi, &b.hi),
        )
    }

    fn mul(&self, a: &Interval<S>, b: &Interval<S>) -> Interval<S> {
        Interval::from_bounds_unchecked(
            self.base.clone(),
            self.base.mul(&a.lo, &b.lo),
            self.base.mul(&a.hi, &b.hi),
        )
    }

    fn contains(&self, x: &Interval<S>) -> bool {
        x.base == self.base && self.base.leq(&x.lo, &x.hi).unwrap_or(false)
    }

    fn is_idempotent(&self) -> bool {
        true
    }

    fn is_commutative(&self) -> bool {
        self.base.is_commutative()
    }
}

impl<S: ElementText> ElementText for IntervalSemiring<S> {
    /// Accepts `[lo, hi]`, `lo,hi`, or a single element for a degenerate
    /// interval.
    fn parse_elem(&self, token: &str) -> Result<Interval<S>> {
        let t = token.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .unwrap_or(t);
        match inner.split_once(',') {
            Some((lo, hi)) => {
                let lo = self.base.parse_elem(lo)?;
                let hi = self.base.parse_elem(hi)?;
                self.interval(lo, hi)
            }
            None => self.point(self.base.parse_elem(inner)?),
        }
    }

    fn format_elem(&self, x: &Interval<S>) -> String {
        format!(
            "[{}, {}]",
            self.base.format_elem(&x.lo),
            self.base.format_elem(&x.hi)
        )
    }
}
