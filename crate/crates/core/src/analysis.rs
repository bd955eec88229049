//! Idempotent integration on finite point sets.
//!
//! A [`FiniteSFunction`] is a finitely supported map `X → S`; points outside
//! the stored support take the value `0̸`. Its idempotent integral is the
//! `⊕`-sum of its values (a supremum in max-plus, an infimum in the
//! conventional order for min-plus). A density `ψ` defines the measure
//! `m_ψ(Y) = ⊕_{x∈Y} ψ(x)` and the integral `⊕_x φ(x) ⊙ ψ(x)`, which is
//! also the idempotent scalar product of `φ` and `ψ`.
//!
//! Only finite supports are handled, so every function here is bounded in
//! the standard order and no boundedness check is needed.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::{ElementText, Semiring};

/// Point labels are opaque strings kept in lexicographic order.
#[derive(Debug, Clone)]
pub struct FiniteSFunction<S: Semiring> {
    ring: S,
    values: BTreeMap<String, S::Elem>,
}

impl<S: Semiring> FiniteSFunction<S> {
    /// The zero function (empty support).
    pub fn new(ring: S) -> Self {
        Self {
            ring,
            values: BTreeMap::new(),
        }
    }

    /// Builds a function from `(point, value)` pairs. A repeated point is a
    /// domain error.
    pub fn from_pairs<K, I>(ring: S, pairs: I) -> Result<Self>
    where
        K: Into<String>,
        I: IntoIterator<Item = (K, S::Elem)>,
    {
        let mut f = Self::new(ring);
        for (k, v) in pairs {
            let k = k.into();
            if f.values.contains_key(&k) {
                return Err(Error::domain(format!("point {k:?} given twice")));
            }
            f.insert(k, v)?;
        }
        Ok(f)
    }

    pub fn ring(&self) -> &S {
        &self.ring
    }

    pub fn insert(&mut self, point: impl Into<String>, value: S::Elem) -> Result<()> {
        self.ring.check(&value)?;
        self.values.insert(point.into(), value);
        Ok(())
    }

    /// Value at `point`, `0̸` off the support.
    pub fn get(&self, point: &str) -> S::Elem {
        self.values
            .get(point)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn support(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &S::Elem)> {
        self.values.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn contains_point(&self, point: &str) -> bool {
        self.values.contains_key(point)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `⊕_{x ∈ support} φ(x)`; `0̸` on an empty support.
    pub fn integrate(&self) -> S::Elem {
        self.ring.sum(self.values.values())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&S::Elem, &S::Elem) -> S::Elem) -> Result<Self> {
        self.ring.ensure_same(&other.ring)?;
        let mut values = BTreeMap::new();
        for k in self.values.keys().chain(other.values.keys()) {
            if !values.contains_key(k) {
                values.insert(k.clone(), op(&self.get(k), &other.get(k)));
            }
        }
        Ok(Self {
            ring: self.ring.clone(),
            values,
        })
    }

    /// `(f ⊕ g)(x) = f(x) ⊕ g(x)` over the union of supports.
    pub fn pointwise_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.ring.add(a, b))
    }

    /// `(f ⊙ g)(x) = f(x) ⊙ g(x)` over the union of supports.
    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.ring.mul(a, b))
    }

    /// `(c ⊙ f)(x) = c ⊙ f(x)`.
    pub fn scalar_mul(&self, c: &S::Elem) -> Result<Self> {
        self.ring.check(c)?;
        Ok(Self {
            ring: self.ring.clone(),
            values: self
                .values
                .iter()
                .map(|(k, v)| (k.clone(), self.ring.mul(c, v)))
                .collect(),
        })
    }

    /// Pointwise standard order over the union of supports.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.ring.ensure_same(&other.ring)?;
        for k in self.values.keys().chain(other.values.keys()) {
            if !self.ring.leq(&self.get(k), &other.get(k))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Equal when the values agree at every point; explicit `0̸` entries and
/// absent points are indistinguishable.
impl<S: Semiring> PartialEq for FiniteSFunction<S> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self
                .values
                .keys()
                .chain(other.values.keys())
                .all(|k| self.get(k) == other.get(k))
    }
}

impl<S: ElementText> FiniteSFunction<S> {
    /// Parses `point:value` pairs separated by whitespace, e.g.
    /// `"a:1 b:5 c:inf"`. Interval values use `point:[lo, hi]` or
    /// `point:lo,hi`.
    pub fn parse(ring: S, text: &str) -> Result<Self> {
        let tokens = crate::matrix::split_tokens(text).map_err(|m| Error::parse(1, m))?;
        let mut pairs = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let (point, value) = tok
                .split_once(':')
                .ok_or_else(|| Error::parse(1, format!("expected point:value, found {tok:?}")))?;
            if point.is_empty() {
                return Err(Error::parse(1, format!("empty point label in {tok:?}")));
            }
            let value = ring
                .parse_elem(value)
                .map_err(|e| Error::parse(1, e.to_string()))?;
            pairs.push((point.to_string(), value));
        }
        Self::from_pairs(ring, pairs)
    }
}

impl<S: ElementText> fmt::Display for FiniteSFunction<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in &self.values {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{k}:{}", self.ring.format_elem(v))?;
        }
        Ok(())
    }
}

/// The idempotent measure `m_ψ` with density `ψ`.
#[derive(Debug, Clone, PartialEq)]
pub struct IdempotentMeasure<S: Semiring> {
    density: FiniteSFunction<S>,
}

impl<S: Semiring> IdempotentMeasure<S> {
    pub fn new(density: FiniteSFunction<S>) -> Self {
        Self { density }
    }

    pub fn density(&self) -> &FiniteSFunction<S> {
        &self.density
    }

    pub fn ring(&self) -> &S {
        self.density.ring()
    }

    /// `m_ψ(Y) = ⊕_{x ∈ Y} ψ(x)`. Every point of `Y` must be in the support
    /// of the density.
    pub fn measure_of<'a, I>(&self, subset: I) -> Result<S::Elem>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let ring = self.density.ring();
        let mut acc = ring.zero();
        for p in subset {
            let v = self
                .density
                .values
                .get(p)
                .ok_or_else(|| Error::domain(format!("point {p:?} is not in the support")))?;
            acc = ring.add(&acc, v);
        }
        Ok(acc)
    }

    /// Measure of the whole support, equal to the integral of the density.
    pub fn total(&self) -> S::Elem {
        self.density.integrate()
    }
}

/// `I_ψ(φ) = ⊕_x φ(x) ⊙ ψ(x)`. Points missing from either support
/// contribute `0̸`.
pub fn integrate_against<S: Semiring>(
    phi: &FiniteSFunction<S>,
    measure: &IdempotentMeasure<S>,
) -> Result<S::Elem> {
    let psi = &measure.density;
    let ring = phi.ring();
    ring.ensure_same(psi.ring())?;
    // only the common support can contribute something other than 0̸
    Ok(phi
        .values
        .iter()
        .filter_map(|(k, v)| psi.values.get(k).map(|w| ring.mul(v, w)))
        .fold(ring.zero(), |acc, x| ring.add(&acc, &x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::ScalarRing::{self, *};

    fn f(ring: ScalarRing, text: &str) -> FiniteSFunction<ScalarRing> {
        FiniteSFunction::parse(ring, text).unwrap()
    }

    #[test]
    fn integrate_examples() {
        assert_eq!(f(MaxPlus, "a:1 b:5 c:3").integrate(), 5.0);
        assert_eq!(FiniteSFunction::new(MaxPlus).integrate(), f64::NEG_INFINITY);
        assert_eq!(f(MinPlus, "a:1 b:5").integrate(), 1.0);
    }

    #[test]
    fn measure_examples() {
        let m = IdempotentMeasure::new(f(MaxPlus, "a:2 b:7"));
        assert_eq!(m.measure_of(["a"]).unwrap(), 2.0);
        assert_eq!(m.measure_of(["a", "b"]).unwrap(), m.density().integrate());
        assert_eq!(m.measure_of([]).unwrap(), f64::NEG_INFINITY);
        assert!(m.measure_of(["z"]).is_err());
        let weather = IdempotentMeasure::new(f(Fuzzy, "sunny:0.8 rain:0.5"));
        assert_eq!(weather.measure_of(["rain"]).unwrap(), 0.5);
    }

    #[test]
    fn integrate_against_examples() {
        let m = IdempotentMeasure::new(f(MaxPlus, "a:10 b:0"));
        assert_eq!(integrate_against(&f(MaxPlus, "a:1 b:5"), &m).unwrap(), 11.0);
        let m = IdempotentMeasure::new(f(MinPlus, "a:10 b:0"));
        assert_eq!(integrate_against(&f(MinPlus, "a:1 b:5"), &m).unwrap(), 5.0);
        let phi = f(MaxPlus, "a:-3 b:4 c:2");
        let ones = IdempotentMeasure::new(f(MaxPlus, "a:0 b:0 c:0"));
        assert_eq!(integrate_against(&phi, &ones).unwrap(), phi.integrate());
    }

    #[test]
    fn ring_mismatch() {
        let m = IdempotentMeasure::new(f(MinPlus, "a:1"));
        assert!(matches!(
            integrate_against(&f(MaxPlus, "a:1"), &m),
            Err(Error::RingMismatch { .. })
        ));
        assert!(f(MaxPlus, "a:1").pointwise_add(&f(MinPlus, "a:1")).is_err());
    }

    #[test]
    fn semimodule_operations() {
        let s = f(MaxPlus, "a:1").pointwise_add(&f(MaxPlus, "a:4 b:2")).unwrap();
        assert_eq!(s, f(MaxPlus, "a:4 b:2"));
        let g = f(MaxPlus, "a:4 b:2");
        assert_eq!(g.scalar_mul(&0.0).unwrap(), g);
        assert_eq!(g.scalar_mul(&f64::NEG_INFINITY).unwrap(), FiniteSFunction::new(MaxPlus));
        assert!(g.scalar_mul(&f64::INFINITY).is_err());
    }

    #[test]
    fn literal_format() {
        let g = f(MinPlus, "c:inf b:5 a:1");
        assert_eq!(g.to_string(), "a:1 b:5 c:inf");
        assert_eq!(f(MinPlus, &g.to_string()), g);
        assert!(FiniteSFunction::parse(MinPlus, "a1").is_err());
        assert!(FiniteSFunction::parse(MinPlus, "a:1 a:2").is_err());
        assert!(FiniteSFunction::parse(Fuzzy, "a:2").is_err());
        assert!(FiniteSFunction::parse(Fuzzy, ":0.5").is_err());
    }

    #[test]
    fn explicit_zero_equals_absent_point() {
        assert_eq!(f(MaxPlus, "a:1 b:-inf"), f(MaxPlus, "a:1"));
        assert_ne!(f(MaxPlus, "a:1 b:0"), f(MaxPlus, "a:1"));
    }
}
