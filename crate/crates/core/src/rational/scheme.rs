//! Derivatives by differentiating the geometric scheme itself.
//!
//! Differentiating `h_i (w_{i-1} i (1-t) + w_i h_{i-1} t (n-i+1)) =
//! w_i h_{i-1} t (n-i+1)` and `Q_i = (1 - h_i) Q_{i-1} + h_i W_i` `k` times
//! gives, with `rho_i = w_{i-1} i / (w_i (n-i+1))` and
//! `g_{j,i} = t h^(j)_i + j h^(j-1)_i`,
//!
//! ```text
//! h^(k)_i = f_i ((1 - h_i) g_{k,i-1} + k rho_i h^(k-1)_i
//!                - sum_{j=1}^{k-1} C(k,j) h^(k-j)_i g_{j,i-1})
//! Q^(k)_i = h^(k)_i (W_i - Q_{i-1}) + Q^(k)_{i-1}
//!           - sum_{j=0}^{k-1} C(k,j) h^(j)_i Q^(k-j)_{i-1}
//! ```
//!
//! starting from `h^(k)_0 = 0`, `Q^(k)_0 = 0`. The cost is `O(n d r^2)`.

use crate::bernstein::FloatBinomials;
use crate::curve::{check_parameter, DerivativeJet, RationalCurve};
use crate::error::Result;
use crate::geometric::fill_h;

use super::reverse_curve;

/// Controls the symmetric evaluation near `t = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeOptions {
    /// For `t` above this value the reversed curve is differentiated at
    /// `1 - t` and odd orders change sign. `None` never reverses.
    pub reverse_above: Option<f64>,
}

impl Default for SchemeOptions {
    fn default() -> Self {
        SchemeOptions {
            reverse_above: Some(0.5),
        }
    }
}

impl SchemeOptions {
    /// Options that always run the scheme at the given `t`.
    pub fn forward_only() -> Self {
        SchemeOptions {
            reverse_above: None,
        }
    }

    fn reverses(&self, t: f64) -> bool {
        self.reverse_above.is_some_and(|c| t > c)
    }
}

/// Full grids `h^(k)_i`, `Q^(k)_i` of the differentiated scheme at one
/// parameter, without any reversal.
#[derive(Debug, Clone, PartialEq)]
pub struct SchemeDiffState {
    n: usize,
    r: usize,
    dim: usize,
    t: f64,
    /// `h[k * (n + 1) + i]`.
    h: Vec<f64>,
    /// `q[(k * (n + 1) + i) * dim ..]`.
    q: Vec<f64>,
}

impl SchemeDiffState {
    pub fn new(curve: &RationalCurve, t: f64, r: usize) -> Result<Self> {
        check_parameter(t)?;
        let n = curve.degree();
        let d = curve.dim();
        let w = curve.weights();
        let pts = curve.polygon().as_flat();
        let stride = n + 1;
        let binom = FloatBinomials::new(r);

        let mut h = vec![0.0; (r + 1) * stride];
        let mut f = vec![0.0; n];
        fill_h(Some(w), n, t, &mut h[..stride], Some(&mut f));
        let mut q = vec![0.0; (r + 1) * stride * d];
        q[..d].copy_from_slice(&pts[..d]);

        let mut g = vec![0.0; r + 1];
        let mut diff = vec![0.0; d];
        for i in 1..=n {
            let rho = w[i - 1] * i as f64 / (w[i] * (n - i + 1) as f64);
            let fi = f[i - 1];
            let hi = h[i];
            // g_{j,i-1} for j = 1..=r.
            for (j, gj) in g.iter_mut().enumerate().skip(1) {
                *gj = t * h[j * stride + i - 1] + j as f64 * h[(j - 1) * stride + i - 1];
            }
            for k in 1..=r {
                let mut acc = (1.0 - hi) * g[k] + k as f64 * rho * h[(k - 1) * stride + i];
                for j in 1..k {
                    acc -= binom.get(k, j) * h[(k - j) * stride + i] * g[j];
                }
                h[k * stride + i] = fi * acc;
            }
            let prev0 = (i - 1) * d;
            for c in 0..d {
                diff[c] = pts[i * d + c] - q[prev0 + c];
            }
            for k in 1..=r {
                let hk = h[k * stride + i];
                let at = (k * stride + i) * d;
                for c in 0..d {
                    let mut v = hk * diff[c] + (1.0 - hi) * q[(k * stride + i - 1) * d + c];
                    for j in 1..k {
                        v -= binom.get(k, j) * h[j * stride + i] * q[((k - j) * stride + i - 1) * d + c];
                    }
                    q[at + c] = v;
                }
            }
            for c in 0..d {
                q[i * d + c] = q[prev0 + c] + hi * diff[c];
            }
        }
        Ok(SchemeDiffState {
            n,
            r,
            dim: d,
            t,
            h,
            q,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn max_order(&self) -> usize {
        self.r
    }

    pub fn parameter(&self) -> f64 {
        self.t
    }

    /// `h^(k)_i`.
    pub fn h(&self, k: usize, i: usize) -> f64 {
        self.h[k * (self.n + 1) + i]
    }

    /// `Q^(k)_i`.
    pub fn q(&self, k: usize, i: usize) -> &[f64] {
        let at = (k * (self.n + 1) + i) * self.dim;
        &self.q[at..at + self.dim]
    }

    /// `g_{j,i} = t h^(j)_i + j h^(j-1)_i` for `1 <= j <= r`.
    pub fn g(&self, j: usize, i: usize) -> f64 {
        self.t * self.h(j, i) + j as f64 * self.h(j - 1, i)
    }

    /// `Q^(0)_n, ..., Q^(r)_n`.
    pub fn jet(&self) -> DerivativeJet {
        let mut data = Vec::with_capacity((self.r + 1) * self.dim);
        for k in 0..=self.r {
            data.extend_from_slice(self.q(k, self.n));
        }
        DerivativeJet::from_flat(self.dim, data)
    }
}

/// Value and derivatives `1..=r` through the differentiated scheme, with
/// the default reversal for `t > 1/2`.
pub fn scheme_jet(curve: &RationalCurve, t: f64, r: usize) -> Result<DerivativeJet> {
    scheme_jet_with(curve, t, r, &SchemeOptions::default())
}

pub fn scheme_jet_with(
    curve: &RationalCurve,
    t: f64,
    r: usize,
    options: &SchemeOptions,
) -> Result<DerivativeJet> {
    check_parameter(t)?;
    if options.reverses(t) {
        let mut jet = SchemeDiffState::new(&reverse_curve(curve), 1.0 - t, r)?.jet();
        jet.flip_odd_orders();
        Ok(jet)
    } else {
        Ok(SchemeDiffState::new(curve, t, r)?.jet())
    }
}

/// Value, first and second derivative with the recurrences written out for
/// orders one and two:
///
/// ```text
/// h'_i  = f_i ((1-h_i)(t h'_{i-1} + h_{i-1}) + rho_i h_i)
/// h''_i = f_i ((1-h_i)(t h''_{i-1} + 2 h'_{i-1}) - 2 h'_i (t h'_{i-1} + h_{i-1}) + 2 rho_i h'_i)
/// Q'_i  = (1-h_i) Q'_{i-1} + h'_i (W_i - Q_{i-1})
/// Q''_i = h''_i (W_i - Q_{i-1}) - 2 h'_i Q'_{i-1} + (1-h_i) Q''_{i-1}
/// ```
///
/// Reverses for `t > 1/2` like [`scheme_jet`].
pub fn scheme_jet12(curve: &RationalCurve, t: f64) -> Result<DerivativeJet> {
    scheme_jet12_with(curve, t, &SchemeOptions::default())
}

pub fn scheme_jet12_with(curve: &RationalCurve, t: f64, options: &SchemeOptions) -> Result<DerivativeJet> {
    check_parameter(t)?;
    if options.reverses(t) {
        let mut jet = jet12_forward(&reverse_curve(curve), 1.0 - t);
        jet.flip_odd_orders();
        Ok(jet)
    } else {
        Ok(jet12_forward(curve, t))
    }
}

fn jet12_forward(curve: &RationalCurve, t: f64) -> DerivativeJet {
    let n = curve.degree();
    let d = curve.dim();
    let w = curve.weights();
    let pts = curve.polygon().as_flat();
    let mut jet = DerivativeJet::zeros(d, 2);
    let mut q0 = pts[..d].to_vec();
    let mut q1 = vec![0.0; d];
    let mut q2 = vec![0.0; d];
    let (mut h, mut h1, mut h2) = (1.0, 0.0, 0.0);
    let s = 1.0 - t;
    for i in 1..=n {
        let c = w[i] * (n - i + 1) as f64;
        let a = w[i - 1] * i as f64;
        let num = c * t * h;
        let den = a * s + num;
        let hi = num / den;
        let fi = c / den;
        let rho = a / c;
        let g1 = t * h1 + h;
        let g2 = t * h2 + 2.0 * h1;
        let hi1 = fi * ((1.0 - hi) * g1 + rho * hi);
        let hi2 = fi * ((1.0 - hi) * g2 - 2.0 * hi1 * g1 + 2.0 * rho * hi1);
        let wi = &pts[i * d..(i + 1) * d];
        for k in 0..d {
            let diff = wi[k] - q0[k];
            q2[k] = hi2 * diff - 2.0 * hi1 * q1[k] + (1.0 - hi) * q2[k];
            q1[k] = (1.0 - hi) * q1[k] + hi1 * diff;
            q0[k] += hi * diff;
        }
        h = hi;
        h1 = hi1;
        h2 = hi2;
    }
    crate::counters::add_h_values(n + 1);
    jet.order_mut(0).copy_from_slice(&q0);
    jet.order_mut(1).copy_from_slice(&q1);
    jet.order_mut(2).copy_from_slice(&q2);
    jet
}
