//! The semiring contract and the built-in scalar catalogue.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A semiring `(S, ⊕, ⊙, 0̸, 1̄)`.
///
/// Implementors are descriptors: small values that know how to combine
/// elements of their carrier. Elements themselves carry no ring tag, so a
/// descriptor is threaded through every container (matrices, functions,
/// fuzzy sets) and compared with `==` to detect mixing of rings.
///
/// Element equality is `PartialEq` on [`Semiring::Elem`]. For `f64`
/// carriers that is bitwise equality except that `-0.0 == +0.0`; `NaN` is
/// never a member of any carrier.
pub trait Semiring: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    /// `a ⊕ b`. Arguments are assumed to be in the carrier.
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// `a ⊙ b`. Arguments are assumed to be in the carrier.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Carrier membership.
    fn contains(&self, x: &Self::Elem) -> bool;

    fn is_idempotent(&self) -> bool;

    fn is_semifield(&self) -> bool {
        false
    }

    /// Whether `⊙` is claimed to be commutative.
    fn is_commutative(&self) -> bool {
        true
    }

    /// Multiplicative inverse of a nonzero element, if it exists.
    fn inverse(&self, _x: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    /// Equality used by the axiom harness. Exact unless the ring rounds.
    fn approx_eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        *x == self.zero()
    }

    fn check(&self, x: &Self::Elem) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{x:?} is not an element of {}",
                self.name()
            )))
        }
    }

    /// Carrier-checked `⊕`.
    fn try_add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    /// Carrier-checked `⊙`.
    fn try_mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// The standard partial order: `a ⪯ b` iff `a ⊕ b = b`.
    ///
    /// Only a partial order when `⊕` is idempotent, so other rings get
    /// [`Error::Unsupported`].
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool> {
        self.require_idempotent("standard order")?;
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b) == *b)
    }

    fn require_idempotent(&self, what: &str) -> Result<()> {
        if self.is_idempotent() {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "{what} requires an idempotent semiring, {} is not",
                self.name()
            )))
        }
    }

    /// `⊕`-sum of a sequence; `0̸` for an empty one.
    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn ensure_same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.name(),
                right: other.name(),
            })
        }
    }
}

/// Textual encoding of elements, shared by the matrix, function and graph
/// formats.
pub trait ElementText: Semiring {
    fn parse_elem(&self, token: &str) -> Result<Self::Elem>;
    fn format_elem(&self, x: &Self::Elem) -> String;
}

/// The built-in scalar semirings. All use `f64` as the element type;
/// infinities are the IEEE signed infinities and Boolean values are `0.0`
/// and `1.0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarRing {
    /// `ℝ ∪ {−∞}`, `⊕ = max`, `⊙ = +`, `0̸ = −∞`, `1̄ = 0`.
    MaxPlus,
    /// `ℝ ∪ {+∞}`, `⊕ = min`, `⊙ = +`, `0̸ = +∞`, `1̄ = 0`.
    MinPlus,
    /// `{0, 1}` with disjunction and conjunction.
    Boolean,
    /// `[0, 1]` with `⊕ = max`, `⊙ = min`.
    Fuzzy,
    /// `ℝ ∪ {±∞}` with `⊕ = max`, `⊙ = min`, `0̸ = −∞`, `1̄ = +∞`.
    MaxMin,
    /// Nonnegative reals with ordinary `+` and `×`. Not idempotent.
    Arith,
}

impl ScalarRing {
    pub const ALL: [ScalarRing; 6] = [
        ScalarRing::MaxPlus,
        ScalarRing::MinPlus,
        ScalarRing::Boolean,
        ScalarRing::Fuzzy,
        ScalarRing::MaxMin,
        ScalarRing::Arith,
    ];

    pub const IDEMPOTENT: [ScalarRing; 5] = [
        ScalarRing::MaxPlus,
        ScalarRing::MinPlus,
        ScalarRing::Boolean,
        ScalarRing::Fuzzy,
        ScalarRing::MaxMin,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ScalarRing::MaxPlus => "max-plus",
            ScalarRing::MinPlus => "min-plus",
            ScalarRing::Boolean => "boolean",
            ScalarRing::Fuzzy => "fuzzy",
            ScalarRing::MaxMin => "max-min",
            ScalarRing::Arith => "arith",
        }
    }

    /// Whether `⊕` and `⊙` are the lattice supremum and infimum.
    pub fn is_lattice(&self) -> bool {
        matches!(
            self,
            ScalarRing::Boolean | ScalarRing::Fuzzy | ScalarRing::MaxMin
        )
    }
}

impl fmt::Display for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ScalarRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        ScalarRing::ALL
            .into_iter()
            .find(|r| r.as_str() == lower)
            .ok_or_else(|| {
                Error::domain(format!(
                    "unknown semiring {s:?} (expected one of max-plus, min-plus, boolean, fuzzy, max-min, arith)"
                ))
            })
    }
}

impl Semiring for ScalarRing {
    type Elem = f64;

    fn name(&self) -> String {
        self.as_str().to_string()
    }

    fn zero(&self) -> f64 {
        match self {
            ScalarRing::MaxPlus | ScalarRing::MaxMin => f64::NEG_INFINITY,
            ScalarRing::MinPlus => f64::INFINITY,
            ScalarRing::Boolean | ScalarRing::Fuzzy | ScalarRing::Arith => 0.0,
        }
    }

    fn one(&self) -> f64 {
        match self {
            ScalarRing::MaxPlus | ScalarRing::MinPlus => 0.0,
            ScalarRing::MaxMin => f64::INFINITY,
            ScalarRing::Boolean | ScalarRing::Fuzzy | ScalarRing::Arith => 1.0,
        }
    }

    fn add(&self, a: &f64, b: &f64) -> f64 {
        match self {
            ScalarRing::MaxPlus | ScalarRing::Boolean | ScalarRing::Fuzzy | ScalarRing::MaxMin => {
                a.max(*b)
            }
            ScalarRing::MinPlus => a.min(*b),
            ScalarRing::Arith => a + b,
        }
    }

    fn mul(&self, a: &f64, b: &f64) -> f64 {
        match self {
            // The zero absorbs before any arithmetic happens, so −∞ + ∞
            // is never evaluated.
            ScalarRing::MaxPlus => {
                if *a == f64::NEG_INFINITY || *b == f64::NEG_INFINITY {
                    f64::NEG_INFINITY
                } else {
                    a + b
                }
            }
            ScalarRing::MinPlus => {
                if *a == f64::INFINITY || *b == f64::INFINITY {
                    f64::INFINITY
                } else {
                    a + b
                }
            }
            ScalarRing::Boolean | ScalarRing::Fuzzy | ScalarRing::MaxMin => a.min(*b),
            ScalarRing::Arith => {
                if *a == 0.0 || *b == 0.0 {
                    0.0
                } else {
                    a * b
                }
            }
        }
    }

    fn contains(&self, x: &f64) -> bool {
        let x = *x;
        match self {
            ScalarRing::MaxPlus => !x.is_nan() && x != f64::INFINITY,
            ScalarRing::MinPlus => !x.is_nan() && x != f64::NEG_INFINITY,
            ScalarRing::Boolean => x == 0.0 || x == 1.0,
            ScalarRing::Fuzzy => (0.0..=1.0).contains(&x),
            ScalarRing::MaxMin => !x.is_nan(),
            ScalarRing::Arith => x.is_finite() && x >= 0.0,
        }
    }

    fn is_idempotent(&self) -> bool {
        !matches!(self, ScalarRing::Arith)
    }

    fn is_semifield(&self) -> bool {
        matches!(
            self,
            ScalarRing::MaxPlus | ScalarRing::MinPlus | ScalarRing::Boolean | ScalarRing::Arith
        )
    }

    fn inverse(&self, x: &f64) -> Option<f64> {
        if self.is_zero(x) || !self.contains(x) {
            return None;
        }
        match self {
            ScalarRing::MaxPlus | ScalarRing::MinPlus => Some(if *x == 0.0 { 0.0 } else { -x }),
            ScalarRing::Boolean => Some(1.0),
            ScalarRing::Arith => Some(1.0 / x),
            ScalarRing::Fuzzy | ScalarRing::MaxMin => (*x == self.one()).then_some(*x),
        }
    }

    fn approx_eq(&self, a: &f64, b: &f64) -> bool {
        match self {
            ScalarRing::Arith => a == b || (a - b).abs() <= 1e-9 * a.abs().max(b.abs()),
            _ => a == b,
        }
    }
}

/// Formats a scalar using `inf`/`-inf` for the infinities. Finite values
/// use the shortest representation that parses back to the same `f64`.
pub fn format_scalar(x: f64) -> String {
    if x == f64::INFINITY {
        "inf".to_string()
    } else if x == f64::NEG_INFINITY {
        "-inf".to_string()
    } else if x == 0.0 {
        // normalise −0
        "0".to_string()
    } else {
        format!("{x}")
    }
}

pub fn parse_scalar(token: &str) -> Result<f64> {
    let t = token.trim();
    match t.to_ascii_lowercase().as_str() {
        "inf" | "+inf" | "infinity" | "+infinity" => Ok(f64::INFINITY),
        "-inf" | "-infinity" => Ok(f64::NEG_INFINITY),
        "true" => Ok(1.0),
        "false" => Ok(0.0),
        lower if lower.contains("nan") => Err(Error::domain(format!("{t:?} is not a number"))),
        _ => t
            .parse::<f64>()
            .map_err(|_| Error::domain(format!("cannot parse {t:?} as a number"))),
    }
}

impl ElementText for ScalarRing {
    /// Accepts numbers, `inf`/`-inf`, `true`/`false`, and `_` for the zero.
    fn parse_elem(&self, token: &str) -> Result<f64> {
        let x = if token.trim() == "_" {
            self.zero()
        } else {
            parse_scalar(token)?
        };
        self.check(&x)?;
        Ok(x)
    }

    fn format_elem(&self, x: &f64) -> String {
        format_scalar(*x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use ScalarRing::*;

    const INF: f64 = f64::INFINITY;

    #[test]
    fn add_examples() {
        assert_eq!(MaxPlus.try_add(&3.0, &5.0).unwrap(), 5.0);
        assert_eq!(MinPlus.try_add(&3.0, &INF).unwrap(), 3.0);
        assert_eq!(Fuzzy.try_add(&0.4, &0.4).unwrap(), 0.4);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(MaxPlus.try_mul(&3.0, &5.0).unwrap(), 8.0);
        assert_eq!(MaxPlus.try_mul(&-INF, &7.0).unwrap(), -INF);
        assert_eq!(Fuzzy.try_mul(&0.4, &0.7).unwrap(), 0.4);
    }

    #[test]
    fn carrier_rejects_foreign_infinity() {
        assert!(matches!(MaxPlus.try_add(&INF, &1.0), Err(Error::Domain(_))));
        assert!(matches!(MinPlus.try_mul(&-INF, &1.0), Err(Error::Domain(_))));
        assert!(matches!(Fuzzy.try_add(&1.5, &0.0), Err(Error::Domain(_))));
        assert!(matches!(Boolean.try_add(&0.5, &0.0), Err(Error::Domain(_))));
        assert!(matches!(Arith.try_add(&-1.0, &0.0), Err(Error::Domain(_))));
        assert!(MaxMin.check(&INF).is_ok() && MaxMin.check(&-INF).is_ok());
        assert!(MaxMin.check(&f64::NAN).is_err());
    }

    #[test]
    fn zero_absorbs_in_max_min_even_against_top() {
        assert_eq!(MaxMin.mul(&-INF, &INF), -INF);
        assert_eq!(MinPlus.mul(&INF, &-3.0), INF);
    }

    #[test]
    fn leq_examples() {
        assert!(MaxPlus.leq(&2.0, &5.0).unwrap());
        // min(5, 2) = 2, so 5 ⪯ 2 in min-plus
        assert!(MinPlus.leq(&5.0, &2.0).unwrap());
        assert!(!MinPlus.leq(&2.0, &5.0).unwrap());
        for r in ScalarRing::IDEMPOTENT {
            assert!(r.leq(&r.zero(), &r.one()).unwrap(), "{r}");
        }
        assert!(matches!(Arith.leq(&1.0, &2.0), Err(Error::Unsupported(_))));
    }

    #[test]
    fn names_are_case_insensitive() {
        assert_eq!("MAX-PLUS".parse::<ScalarRing>().unwrap(), MaxPlus);
        assert_eq!(" Min-Plus ".parse::<ScalarRing>().unwrap(), MinPlus);
        assert_eq!("Boolean".parse::<ScalarRing>().unwrap(), Boolean);
        assert!("tropical".parse::<ScalarRing>().is_err());
    }

    #[test]
    fn element_text() {
        assert_eq!(MinPlus.parse_elem("inf").unwrap(), INF);
        assert_eq!(MinPlus.parse_elem("_").unwrap(), INF);
        assert_eq!(MaxPlus.parse_elem("_").unwrap(), -INF);
        assert!(MaxPlus.parse_elem("inf").is_err());
        assert!(Boolean.parse_elem("1.5").is_err());
        assert!(MaxMin.parse_elem("nan").is_err());
        assert_eq!(MaxPlus.format_elem(&-INF), "-inf");
        assert_eq!(MaxPlus.format_elem(&4.0), "4");
        assert_eq!(MaxPlus.format_elem(&-0.0), "0");
        assert_eq!(Fuzzy.format_elem(&0.1), "0.1");
    }

    #[test]
    fn zero_ne_one() {
        for r in ScalarRing::ALL {
            assert_ne!(r.zero(), r.one(), "{r}");
        }
    }

    #[test]
    fn negative_zero_equals_positive_zero() {
        assert!(MaxPlus.approx_eq(&-0.0, &0.0));
        assert!(MaxPlus.leq(&-0.0, &0.0).unwrap());
    }
}
