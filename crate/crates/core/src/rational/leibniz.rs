//! Derivatives from the Leibniz rule applied to `R(t) A(t) = N(t)`.
//!
//! With `A(t) = sum w_j B^n_j(t)` and `N(t) = sum w_j W_j B^n_j(t)`,
//!
//! ```text
//! N^(k) = sum_{i=0}^{k} C(k,i) R^(i) A_{k-i},    A_i = A^(i)(t)
//! ```
//!
//! so each new order costs one evaluation of `N^(k)` and a short sum over
//! the previous ones. `N^(k)` is a combination of the control points with
//! coefficients `b_j = w_j d^k B^n_j(t)`; these have mixed signs, so the
//! positive and negative parts are evaluated separately as rational
//! objects with nonnegative coefficients.

use crate::bernstein::{bernstein_from_h, fill_derivative_rows, FloatBinomials};
use crate::curve::{check_parameter, DerivativeJet, RationalCurve};
use crate::error::Result;
use crate::geometric::{blend_parametric, blend_with_h, fill_h};
use crate::poly::kept_degree_into;

/// Relative size of `|A_k|` against `B+_k + B-_k` below which `A_k` is
/// treated as zero.
pub const ZERO_A_THRESHOLD: f64 = 1e-12;

/// How one derivative order was obtained.
#[derive(Debug, Clone, PartialEq)]
pub enum OrderPath {
    /// `A_k != 0`: `N^(k) = B+ D+ - B- D- = A_k D`. A side whose sum
    /// vanishes is omitted.
    Split {
        d_plus: Option<Vec<f64>>,
        d_minus: Option<Vec<f64>>,
        d: Vec<f64>,
    },
    /// `A_k = 0`: the coefficients sum to zero and
    /// `V = sum_{j>=1} b_j (W_j - W_0)`.
    Vector { v: Vec<f64> },
    /// `k > n`: `N^(k) = 0` and `A_k = 0`.
    BeyondDegree,
}

/// Every intermediate quantity of the Leibniz method at one parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct LeibnizWorkspace {
    n: usize,
    r: usize,
    dim: usize,
    t: f64,
    /// `A_0..=A_r`, zero above `n`.
    a: Vec<f64>,
    /// `b_j = w_j d^k B^n_j(t)` for `k <= min(r, n)`, rows of `n + 1`.
    scaled: Vec<f64>,
    b_plus: Vec<f64>,
    b_minus: Vec<f64>,
    /// `paths[k - 1]` for orders `1..=r`.
    paths: Vec<OrderPath>,
    jet: DerivativeJet,
}

/// The weight derivatives, the scaled basis rows and their signed sums.
struct Tables {
    a: Vec<f64>,
    scaled: Vec<f64>,
    b_plus: Vec<f64>,
    b_minus: Vec<f64>,
}

/// The whole method. `paths` collects the per-order details when given;
/// otherwise the scratch buffers are reused and nothing else is allocated.
fn compute(
    curve: &RationalCurve,
    t: f64,
    r: usize,
    mut paths: Option<&mut Vec<OrderPath>>,
) -> Result<(Tables, DerivativeJet)> {
    check_parameter(t)?;
    let n = curve.degree();
    let d = curve.dim();
    let w = curve.weights();
    let pts = curve.polygon().as_flat();
    let top = r.min(n);
    let binom = FloatBinomials::new(r);

    // The polynomial h-values serve twice: for the weight polynomial as a
    // 1-D curve, and to recover the basis values.
    let mut h = vec![0.0; n + 1];
    fill_h(None, n, t, &mut h, None);
    let mut a_jet = DerivativeJet::zeros(1, top);
    kept_degree_into(&h, w, n, 1, top, &mut a_jet);
    let mut a = vec![0.0; r + 1];
    a[..=top].copy_from_slice(a_jet.as_flat());

    let width = n + 1;
    let mut scaled = vec![0.0; (top + 1) * width];
    bernstein_from_h(&h, &mut scaled[..width]);
    fill_derivative_rows(n, top, &mut scaled);
    let mut b_plus = vec![0.0; top + 1];
    let mut b_minus = vec![0.0; top + 1];
    for (k, row) in scaled.chunks_exact_mut(width).enumerate() {
        let (mut pos, mut neg) = (0.0, 0.0);
        for (x, &wj) in row.iter_mut().zip(w) {
            *x *= wj;
            if *x >= 0.0 {
                pos += *x;
            } else {
                neg -= *x;
            }
        }
        b_plus[k] = pos;
        b_minus[k] = neg;
    }

    let mut jet = DerivativeJet::zeros(d, r);
    fill_h(Some(w), n, t, &mut h, None);
    blend_with_h(&h, pts, d, jet.order_mut(0));
    let value = jet.value().to_vec();

    let a0 = a[0];
    let mut s = vec![0.0; d];
    let mut out = vec![0.0; d];
    let mut v = vec![0.0; d];
    let mut dp = vec![0.0; d];
    let mut dm = vec![0.0; d];
    for k in 1..=r {
        s.fill(0.0);
        for i in 1..k {
            let ak = a[k - i];
            if ak == 0.0 {
                continue;
            }
            let coef = binom.get(k, i) * ak;
            for (sc, &ri) in s.iter_mut().zip(jet.order(i)) {
                *sc += coef * ri;
            }
        }
        if k > n {
            for (o, &sc) in out.iter_mut().zip(&s) {
                *o = -sc / a0;
            }
            if let Some(p) = paths.as_deref_mut() {
                p.push(OrderPath::BeyondDegree);
            }
        } else {
            let b = &scaled[k * width..(k + 1) * width];
            let (bp, bm, ak) = (b_plus[k], b_minus[k], a[k]);
            if ak.abs() <= ZERO_A_THRESHOLD * (bp + bm) {
                v.fill(0.0);
                for (j, &bj) in b.iter().enumerate().skip(1) {
                    for c in 0..d {
                        v[c] += bj * (pts[j * d + c] - pts[c]);
                    }
                }
                // N^(k) = V + A_k W_0; the second term is kept since A_k
                // is only known to be small.
                for c in 0..d {
                    out[c] = (v[c] - s[c] + ak * (pts[c] - value[c])) / a0;
                }
                if let Some(p) = paths.as_deref_mut() {
                    p.push(OrderPath::Vector { v: v.clone() });
                }
            } else {
                let has_plus = bp > 0.0 && blend_parametric(b.iter().map(|&x| x.max(0.0)), pts, d, &mut dp);
                let has_minus = bm > 0.0 && blend_parametric(b.iter().map(|&x| (-x).max(0.0)), pts, d, &mut dm);
                v.fill(0.0);
                if has_plus {
                    for (x, &y) in v.iter_mut().zip(&dp) {
                        *x += bp / ak * y;
                    }
                }
                if has_minus {
                    for (x, &y) in v.iter_mut().zip(&dm) {
                        *x -= bm / ak * y;
                    }
                }
                for c in 0..d {
                    out[c] = ak / a0 * (v[c] - value[c]) - s[c] / a0;
                }
                if let Some(p) = paths.as_deref_mut() {
                    p.push(OrderPath::Split {
                        d_plus: has_plus.then(|| dp.clone()),
                        d_minus: has_minus.then(|| dm.clone()),
                        d: v.clone(),
                    });
                }
            }
        }
        jet.order_mut(k).copy_from_slice(&out);
    }
    Ok((
        Tables {
            a,
            scaled,
            b_plus,
            b_minus,
        },
        jet,
    ))
}

impl LeibnizWorkspace {
    pub fn new(curve: &RationalCurve, t: f64, r: usize) -> Result<Self> {
        let mut paths = Vec::with_capacity(r);
        let (tables, jet) = compute(curve, t, r, Some(&mut paths))?;
        Ok(LeibnizWorkspace {
            n: curve.degree(),
            r,
            dim: curve.dim(),
            t,
            a: tables.a,
            scaled: tables.scaled,
            b_plus: tables.b_plus,
            b_minus: tables.b_minus,
            paths,
            jet,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn max_order(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parameter(&self) -> f64 {
        self.t
    }

    /// `A_0..=A_r`.
    pub fn a(&self) -> &[f64] {
        &self.a
    }

    /// `b_j = w_j d^k B^n_j(t)` for `k <= min(r, n)`.
    pub fn scaled_row(&self, k: usize) -> &[f64] {
        &self.scaled[k * (self.n + 1)..(k + 1) * (self.n + 1)]
    }

    /// `B+_k`, the sum of the positive `b_j`, for `k <= min(r, n)`.
    pub fn b_plus(&self, k: usize) -> f64 {
        self.b_plus[k]
    }

    /// `B-_k`, minus the sum of the negative `b_j`.
    pub fn b_minus(&self, k: usize) -> f64 {
        self.b_minus[k]
    }

    /// Path taken for order `k`, `1 <= k <= r`.
    pub fn path(&self, k: usize) -> &OrderPath {
        &self.paths[k - 1]
    }

    pub fn jet(&self) -> &DerivativeJet {
        &self.jet
    }

    pub fn into_jet(self) -> DerivativeJet {
        self.jet
    }
}

/// Value and derivatives `1..=r` by the Leibniz method. Orders above the
/// degree are allowed.
pub fn leibniz_jet(curve: &RationalCurve, t: f64, r: usize) -> Result<DerivativeJet> {
    Ok(compute(curve, t, r, None)?.1)
}
