//! Linear-time geometric evaluation of rational Bézier curves.
//!
//! For a degree-`n` curve with weights `w_i` the scheme computes
//!
//! ```text
//! h_0 = 1,  Q_0 = W_0
//! h_i = w_i h_{i-1} t (n-i+1) / (w_{i-1} i (1-t) + w_i h_{i-1} t (n-i+1))
//! Q_i = (1 - h_i) Q_{i-1} + h_i W_i
//! ```
//!
//! and returns `Q_n`. Every `h_i` lies in `[0, 1]` for `t` in `[0, 1]`, so
//! each step is a convex combination of two points. The `h_i` depend only on
//! the weights, the degree and `t`, which lets many curves share one
//! [`HState`].

use crate::counters;
use crate::curve::{check_parameter, check_weights, ControlPolygon, Point, RationalCurve};
use crate::error::{Error, Result};

/// The quantities `h_i` and `f_i = h_i / (t h_{i-1})` at one parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct HState {
    n: usize,
    t: f64,
    h: Vec<f64>,
    /// `f[i - 1]` holds `f_i` for `i = 1..=n`.
    f: Vec<f64>,
}

impl HState {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn parameter(&self) -> f64 {
        self.t
    }

    /// `h_0, ..., h_n`.
    pub fn h(&self) -> &[f64] {
        &self.h
    }

    /// `f_1, ..., f_n`.
    pub fn f(&self) -> &[f64] {
        &self.f
    }

    /// `f_i` for `1 <= i <= n`.
    pub fn f_at(&self, i: usize) -> f64 {
        self.f[i - 1]
    }

    /// h-values of a polynomial curve (all weights one).
    pub fn polynomial(n: usize, t: f64) -> Result<Self> {
        check_parameter(t)?;
        let mut h = vec![0.0; n + 1];
        let mut f = vec![0.0; n];
        fill_h(None, n, t, &mut h, Some(&mut f));
        Ok(HState { n, t, h, f })
    }
}

/// Computes the [`HState`] of a curve with the given weights.
pub fn h_values(weights: &[f64], t: f64) -> Result<HState> {
    if weights.is_empty() {
        return Err(Error::EmptyCurve);
    }
    check_weights(weights)?;
    check_parameter(t)?;
    let n = weights.len() - 1;
    let mut h = vec![0.0; n + 1];
    let mut f = vec![0.0; n];
    fill_h(Some(weights), n, t, &mut h, Some(&mut f));
    Ok(HState { n, t, h, f })
}

/// Core recurrence. `weights == None` means all weights are one.
///
/// `f_i` uses the denominator of the h-recurrence,
/// `w_{i-1} i (1-t) + w_i h_{i-1} t (n-i+1)`, so that `h_i = f_i t h_{i-1}`.
#[inline]
pub(crate) fn fill_h(
    weights: Option<&[f64]>,
    n: usize,
    t: f64,
    h: &mut [f64],
    mut f: Option<&mut [f64]>,
) {
    counters::add_h_values(n + 1);
    let s = 1.0 - t;
    h[0] = 1.0;
    for i in 1..=n {
        let up = (n - i + 1) as f64;
        let down = i as f64;
        let (c, a) = match weights {
            Some(w) => (w[i] * up, w[i - 1] * down),
            None => (up, down),
        };
        let num = c * t * h[i - 1];
        let den = a * s + num;
        h[i] = num / den;
        if let Some(f) = f.as_deref_mut() {
            f[i - 1] = c / den;
        }
    }
}

/// Runs `Q_i = (1 - h_i) Q_{i-1} + h_i W_i` over flat points of stride `dim`,
/// writing `Q_n` into `out`.
#[inline]
pub(crate) fn blend_with_h(h: &[f64], points: &[f64], dim: usize, out: &mut [f64]) {
    out.copy_from_slice(&points[..dim]);
    for (i, &hi) in h.iter().enumerate().skip(1) {
        let w = &points[i * dim..(i + 1) * dim];
        let g = 1.0 - hi;
        for (q, &p) in out.iter_mut().zip(w) {
            *q = g * *q + hi * p;
        }
    }
}

/// Evaluates the curve with control points `points` using a precomputed
/// [`HState`]. The same state can be reused for every curve sharing the
/// degree, weights and parameter.
pub fn eval_with_h(points: &ControlPolygon, h: &HState) -> Result<Point> {
    if points.len() != h.n + 1 {
        return Err(Error::LengthMismatch {
            expected: h.n + 1,
            found: points.len(),
        });
    }
    let mut out = vec![0.0; points.dim()];
    blend_with_h(&h.h, points.as_flat(), points.dim(), &mut out);
    Ok(Point(out))
}

/// Evaluates a rational Bézier curve at `t` in `[0, 1]` in `O(nd)`.
pub fn eval_rational(curve: &RationalCurve, t: f64) -> Result<Point> {
    check_parameter(t)?;
    let n = curve.degree();
    let mut h = vec![0.0; n + 1];
    fill_h(Some(curve.weights()), n, t, &mut h, None);
    let mut out = vec![0.0; curve.dim()];
    blend_with_h(&h, curve.polygon().as_flat(), curve.dim(), &mut out);
    Ok(Point(out))
}

/// Evaluates the rational object `sum w_k b_k W_k / sum w_k b_k` for
/// arbitrary nonnegative basis values `b_k` (not necessarily normalized).
pub fn eval_parametric(points: &ControlPolygon, weights: &[f64], basis: &[f64]) -> Result<Point> {
    let len = points.len();
    if let Some(found) = [weights.len(), basis.len()].into_iter().find(|&l| l != len) {
        return Err(Error::LengthMismatch {
            expected: len,
            found,
        });
    }
    check_weights(weights)?;
    if let Some((index, &value)) = basis
        .iter()
        .enumerate()
        .find(|(_, b)| !(b.is_finite() && **b >= 0.0))
    {
        return Err(Error::NegativeBasis { index, value });
    }
    let mut out = vec![0.0; points.dim()];
    let coeffs = weights.iter().zip(basis).map(|(w, b)| w * b);
    if !blend_parametric(coeffs, points.as_flat(), points.dim(), &mut out) {
        return Err(Error::DegenerateBasis);
    }
    Ok(Point(out))
}

/// Geometric scheme for a rational object with combined coefficients
/// `c_k = w_k b_k >= 0`. Indices with `c_k = 0` contribute nothing and are
/// skipped, so the recurrence runs between consecutive positive entries:
/// `h = c_i h_p / (c_p + c_i h_p)` with `p` the previous positive index.
///
/// Returns `false` when every coefficient is zero.
pub(crate) fn blend_parametric(
    coeffs: impl Iterator<Item = f64>,
    points: &[f64],
    dim: usize,
    out: &mut [f64],
) -> bool {
    let mut prev: Option<(f64, f64)> = None;
    for (i, c) in coeffs.enumerate() {
        if c <= 0.0 {
            continue;
        }
        let w = &points[i * dim..(i + 1) * dim];
        match prev {
            None => {
                out.copy_from_slice(w);
                prev = Some((c, 1.0));
            }
            Some((cp, hp)) => {
                let num = c * hp;
                let h = num / (cp + num);
                let g = 1.0 - h;
                for (q, &p) in out.iter_mut().zip(w) {
                    *q = g * *q + h * p;
                }
                prev = Some((c, h));
            }
        }
    }
    prev.is_some()
}
