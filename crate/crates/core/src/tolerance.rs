//! Magnitude-scaled comparison of jets.
//!
//! Derivative magnitudes grow roughly like `n!/(n-r)!`, so components are
//! compared as `|a - b| / max(|a|, |b|, 1)`.

use crate::curve::DerivativeJet;

#[inline]
pub fn scaled_error(a: f64, b: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    if !(a.is_finite() && b.is_finite()) {
        return f64::INFINITY;
    }
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

/// Largest scaled error over paired components.
pub fn slice_deviation(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(&x, &y)| scaled_error(x, y))
        .fold(0.0, f64::max)
}

/// Largest scaled error over all orders held by both jets.
pub fn jet_deviation(a: &DerivativeJet, b: &DerivativeJet) -> f64 {
    jet_deviation_upto(a, b, a.max_order().min(b.max_order()))
}

/// Largest scaled error over orders `0..=r`.
pub fn jet_deviation_upto(a: &DerivativeJet, b: &DerivativeJet, r: usize) -> f64 {
    (0..=r)
        .map(|j| slice_deviation(a.order(j), b.order(j)))
        .fold(0.0, f64::max)
}

/// Per-order deviations `0..=r`.
pub fn order_deviations(a: &DerivativeJet, b: &DerivativeJet, r: usize) -> Vec<f64> {
    (0..=r).map(|j| slice_deviation(a.order(j), b.order(j))).collect()
}
