//! Dequantization of `(ℝ₊, +, ×)` onto `ℝmax`.
//!
//! Under `x ↦ h ln x` ordinary addition becomes
//! `u ⊕_h v = h ln(e^{u/h} + e^{v/h})` and multiplication becomes `+`.
//! As `h → 0`, `⊕_h` tends to `max`.

use crate::error::{Error, Result};

/// The dequantization scale `h > 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct DequantizationParameter(f64);

impl DequantizationParameter {
    pub fn new(h: f64) -> Result<Self> {
        if h > 0.0 && h.is_finite() {
            Ok(Self(h))
        } else {
            Err(Error::domain(format!(
                "dequantization parameter must be a positive finite real, got {h}"
            )))
        }
    }

    pub fn h(&self) -> f64 {
        self.0
    }
}

/// `h ln(e^{u/h} + e^{v/h})`, evaluated as `max + h ln(1 + e^{−|u−v|/h})`.
///
/// The exact value is strictly greater than `max(u, v)` for finite
/// arguments. When the correction term is too small to move `max(u, v)`
/// in double precision, the result is rounded up to the next representable
/// value so that the strict inequality survives.
///
/// `−∞` (the image of `0`) is accepted and acts as the neutral element.
pub fn dequantized_add(u: f64, v: f64, p: DequantizationParameter) -> Result<f64> {
    for x in [u, v] {
        if x.is_nan() || x == f64::INFINITY {
            return Err(Error::domain(format!(
                "dequantized addition is defined on ℝ ∪ {{−∞}}, got {x}"
            )));
        }
    }
    if u == f64::NEG_INFINITY {
        return Ok(v);
    }
    if v == f64::NEG_INFINITY {
        return Ok(u);
    }
    let h = p.h();
    let hi = u.max(v);
    let gap = (u - v).abs();
    let correction = h * (-gap / h).exp().ln_1p();
    let sum = hi + correction;
    Ok(if sum > hi { sum } else { hi.next_up() })
}

/// `Φ_h(x) = h ln x`, with `Φ_h(0) = −∞`.
pub fn dequantize_map(x: f64, p: DequantizationParameter) -> Result<f64> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::domain(format!(
            "dequantization map is defined on nonnegative reals, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    Ok(p.h() * x.ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: f64) -> DequantizationParameter {
        DequantizationParameter::new(v).unwrap()
    }

    #[test]
    fn rejects_nonpositive_scale() {
        assert!(DequantizationParameter::new(0.0).is_err());
        assert!(DequantizationParameter::new(-1.0).is_err());
        assert!(DequantizationParameter::new(f64::NAN).is_err());
    }

    #[test]
    fn equal_arguments_give_h_ln2() {
        let r = dequantized_add(0.0, 0.0, h(1.0)).unwrap();
        assert!((r - std::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn far_apart_arguments_collapse_to_max() {
        // exact value is 10 + 0.01·ln(1 + e^{−1000})
        let r = dequantized_add(0.0, 10.0, h(0.01)).unwrap();
        assert!(r > 10.0);
        assert!(r - 10.0 <= 2.0 * f64::EPSILON * 10.0);
    }

    #[test]
    fn decreases_to_max_as_h_shrinks() {
        let vals: Vec<f64> = [1.0, 0.1, 0.01]
            .iter()
            .map(|&s| dequantized_add(3.0, 5.0, h(s)).unwrap())
            .collect();
        assert!(vals[0] > vals[1] && vals[1] > vals[2]);
        assert!(vals[2] > 5.0 && vals[2] - 5.0 < 1e-12);
    }

    #[test]
    fn naive_form_would_overflow() {
        // e^{1000/0.5} overflows; the factored form does not
        let r = dequantized_add(1000.0, 999.0, h(0.5)).unwrap();
        let expected = 1000.0 + 0.5 * (-2.0f64).exp().ln_1p();
        assert!((r - expected).abs() < 1e-12);
    }

    #[test]
    fn neg_infinity_is_neutral() {
        assert_eq!(dequantized_add(f64::NEG_INFINITY, 2.5, h(1.0)).unwrap(), 2.5);
        assert!(dequantized_add(f64::INFINITY, 2.5, h(1.0)).is_err());
    }

    #[test]
    fn map_examples() {
        assert_eq!(dequantize_map(1.0, h(0.5)).unwrap(), 0.0);
        assert_eq!(dequantize_map(0.0, h(1.0)).unwrap(), f64::NEG_INFINITY);
        let e2 = std::f64::consts::E * std::f64::consts::E;
        assert!((dequantize_map(e2, h(1.0)).unwrap() - 2.0).abs() < 1e-15);
        assert!(dequantize_map(-1.0, h(1.0)).is_err());
    }
}
