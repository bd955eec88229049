//! Generalized fuzzy sets: membership functions from a finite universe into
//! an idempotent semiring.
//!
//! Union and intersection are the pointwise `⊕` and `⊙`. Over the unit
//! segment with `max`/`min` these are Zadeh's operations; restricted to
//! `{0̸, 1̄}`-valued sets they are ordinary set union and intersection.
//! Over `I(S)` the same code gives interval-valued fuzzy sets.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::analysis::{integrate_against, FiniteSFunction, IdempotentMeasure};
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalSemiring};
use crate::semiring::{ScalarRing, Semiring};

pub type Universe = Arc<BTreeSet<String>>;

/// Builds a universe from point labels.
pub fn universe<I, K>(points: I) -> Universe
where
    I: IntoIterator<Item = K>,
    K: Into<String>,
{
    Arc::new(points.into_iter().map(Into::into).collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySet<S: Semiring> {
    universe: Universe,
    membership: FiniteSFunction<S>,
}

impl<S: Semiring> FuzzySet<S> {
    /// Membership grades off the stored points are `0̸`. Every stored point
    /// must belong to the universe.
    pub fn new(universe: Universe, membership: FiniteSFunction<S>) -> Result<Self> {
        if let Some(p) = membership.support().find(|p| !universe.contains(*p)) {
            return Err(Error::domain(format!("point {p:?} is not in the universe")));
        }
        Ok(Self {
            universe,
            membership,
        })
    }

    /// The empty set: `0̸` everywhere.
    pub fn empty(ring: S, universe: Universe) -> Self {
        Self {
            universe,
            membership: FiniteSFunction::new(ring),
        }
    }

    /// The full set: `1̄` everywhere.
    pub fn full(ring: S, universe: Universe) -> Self {
        let one = ring.one();
        let mut membership = FiniteSFunction::new(ring);
        for p in universe.iter() {
            membership.insert(p.clone(), one.clone()).expect("1̄ is in the carrier");
        }
        Self {
            universe,
            membership,
        }
    }

    /// A crisp set: `1̄` on `members`, `0̸` elsewhere.
    pub fn crisp<'a, I>(ring: S, universe: Universe, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let one = ring.one();
        let membership = FiniteSFunction::from_pairs(ring, members.into_iter().map(|m| (m, one.clone())))?;
        Self::new(universe, membership)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn membership(&self) -> &FiniteSFunction<S> {
        &self.membership
    }

    pub fn ring(&self) -> &S {
        self.membership.ring()
    }

    pub fn grade(&self, point: &str) -> S::Elem {
        self.membership.get(point)
    }

    fn ensure_compatible(&self, other: &Self) -> Result<()> {
        self.ring().ensure_same(other.ring())?;
        if self.universe != other.universe {
            return Err(Error::domain("fuzzy sets are defined over different universes"));
        }
        Ok(())
    }

    /// Pointwise `⊕`.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.ensure_compatible(other)?;
        Ok(Self {
            universe: self.universe.clone(),
            membership: self.membership.pointwise_add(&other.membership)?,
        })
    }

    /// Pointwise `⊙`.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.ensure_compatible(other)?;
        Ok(Self {
            universe: self.universe.clone(),
            membership: self.membership.pointwise_mul(&other.membership)?,
        })
    }

    /// Every grade is `0̸` or `1̄`.
    pub fn is_crisp(&self) -> bool {
        let ring = self.ring();
        let (zero, one) = (ring.zero(), ring.one());
        self.membership.iter().all(|(_, v)| *v == zero || *v == one)
    }

    /// Points whose grade is not `0̸`.
    pub fn members(&self) -> impl Iterator<Item = &str> {
        self.membership
            .iter()
            .filter(|(_, v)| !self.ring().is_zero(v))
            .map(|(k, _)| k)
    }

    /// Pointwise standard order.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.ensure_compatible(other)?;
        self.membership.leq(&other.membership)
    }

    /// `⊕_ω A(ω) ⊙ ψ(ω)` for the possibility distribution `ψ`. For a crisp
    /// `A` this is `⊕_{ω∈A} ψ(ω)`, the possibility of the event `A`.
    pub fn possibility(&self, distribution: &IdempotentMeasure<S>) -> Result<S::Elem> {
        if let Some(p) = distribution
            .density()
            .support()
            .find(|p| !self.universe.contains(*p))
        {
            return Err(Error::domain(format!(
                "distribution point {p:?} is not in the universe"
            )));
        }
        integrate_against(&self.membership, distribution)
    }

    /// Pairs a lower and an upper membership function into an
    /// interval-valued fuzzy set over `I(S)`.
    pub fn to_interval(lower: &Self, upper: &Self) -> Result<FuzzySet<IntervalSemiring<S>>> {
        lower.ensure_compatible(upper)?;
        let base = lower.ring().clone();
        let iring = IntervalSemiring::new(base.clone())?;
        let mut membership = FiniteSFunction::new(iring);
        for p in lower.membership.support().chain(upper.membership.support()) {
            if membership.contains_point(p) {
                continue;
            }
            let (lo, hi) = (lower.grade(p), upper.grade(p));
            let iv = Interval::new(base.clone(), lo, hi).map_err(|_| {
                Error::domain(format!(
                    "lower membership exceeds upper membership at {p:?}"
                ))
            })?;
            membership.insert(p, iv)?;
        }
        FuzzySet::new(lower.universe.clone(), membership)
    }
}

impl<S: Semiring> FuzzySet<IntervalSemiring<S>> {
    /// Lower and upper membership functions of an interval fuzzy set.
    pub fn bounds(&self) -> (FuzzySet<S>, FuzzySet<S>) {
        let base = self.ring().base().clone();
        let mut lo = FiniteSFunction::new(base.clone());
        let mut hi = FiniteSFunction::new(base);
        for (p, iv) in self.membership.iter() {
            lo.insert(p, iv.lo().clone()).expect("bounds are carrier elements");
            hi.insert(p, iv.hi().clone()).expect("bounds are carrier elements");
        }
        (
            FuzzySet {
                universe: self.universe.clone(),
                membership: lo,
            },
            FuzzySet {
                universe: self.universe.clone(),
                membership: hi,
            },
        )
    }
}

impl FuzzySet<ScalarRing> {
    /// Classical complement `1 − A(ω)`, defined only over the unit segment.
    ///
    /// A general idempotent semiring has no negation, so this sits outside
    /// the semiring operations and is offered for the Zadeh case alone.
    pub fn complement(&self) -> Result<Self> {
        if *self.ring() != ScalarRing::Fuzzy {
            return Err(Error::Unsupported(format!(
                "complement is only defined for fuzzy, not {}",
                self.ring()
            )));
        }
        let mut membership = FiniteSFunction::new(ScalarRing::Fuzzy);
        for p in self.universe.iter() {
            membership.insert(p.clone(), 1.0 - self.grade(p))?;
        }
        Ok(Self {
            universe: self.universe.clone(),
            membership,
        })
    }
}

/// `ℱ(S)`: fuzzy sets over a fixed universe as a semiring under pointwise
/// operations.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySetAlgebra<S: Semiring> {
    base: S,
    universe: Universe,
}

impl<S: Semiring> FuzzySetAlgebra<S> {
    pub fn new(base: S, universe: Universe) -> Result<Self> {
        base.require_idempotent("generalized fuzzy sets")?;
        Ok(Self { base, universe })
    }

    pub fn base(&self) -> &S {
        &self.base
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }
}

impl<S: Semiring> Semiring for FuzzySetAlgebra<S> {
    type Elem = FuzzySet<S>;

    fn name(&self) -> String {
        format!("F({})", self.base.name())
    }

    fn zero(&self) -> FuzzySet<S> {
        FuzzySet::empty(self.base.clone(), self.universe.clone())
    }

    fn one(&self) -> FuzzySet<S> {
        FuzzySet::full(self.base.clone(), self.universe.clone())
    }

    fn add(&self, a: &FuzzySet<S>, b: &FuzzySet<S>) -> FuzzySet<S> {
        a.union(b).expect("elements of the same algebra")
    }

    fn mul(&self, a: &FuzzySet<S>, b: &FuzzySet<S>) -> FuzzySet<S> {
        a.intersection(b).expect("elements of the same algebra")
    }

    fn contains(&self, x: &FuzzySet<S>) -> bool {
        x.universe == self.universe
            && *x.ring() == self.base
            && x.membership.iter().all(|(_, v)| self.base.contains(v))
    }

    fn is_idempotent(&self) -> bool {
        true
    }

    fn is_commutative(&self) -> bool {
        self.base.is_commutative()
    }
}
