//! First and second derivatives from the last three de Casteljau columns.

use crate::casteljau::casteljau_tableau;
use crate::curve::{check_parameter, DerivativeJet, RationalCurve};
use crate::error::Result;
use crate::geometric::{blend_with_h, fill_h};

use super::leibniz::leibniz_jet;

/// Columns `n-2`, `n-1`, `n` of the rational de Casteljau table.
struct LastColumns {
    /// `w^(n-2)_k`, `k = 0..3`.
    w2: [f64; 3],
    /// `W^(n-2)_k`, flat.
    p2: Vec<f64>,
    w1: [f64; 2],
    p1: Vec<f64>,
    w0: f64,
    p0: Vec<f64>,
}

impl LastColumns {
    /// Finishes the table with two de Casteljau steps from column `n - 2`.
    fn from_column(w2: [f64; 3], p2: Vec<f64>, d: usize, t: f64) -> Self {
        let s = 1.0 - t;
        let mut w1 = [0.0; 2];
        let mut p1 = vec![0.0; 2 * d];
        for k in 0..2 {
            w1[k] = s * w2[k] + t * w2[k + 1];
            let a = s * w2[k] / w1[k];
            let b = t * w2[k + 1] / w1[k];
            for c in 0..d {
                p1[k * d + c] = a * p2[k * d + c] + b * p2[(k + 1) * d + c];
            }
        }
        let w0 = s * w1[0] + t * w1[1];
        let a = s * w1[0] / w0;
        let b = t * w1[1] / w0;
        let p0 = (0..d).map(|c| a * p1[c] + b * p1[d + c]).collect();
        LastColumns {
            w2,
            p2,
            w1,
            p1,
            w0,
            p0,
        }
    }
}

/// Writes value, first and second derivative from the last three columns.
fn apply_formulas(n: usize, cols: &LastColumns, d: usize, jet: &mut DerivativeJet) {
    jet.order_mut(0).copy_from_slice(&cols.p0);
    let nf = n as f64;
    let w00 = cols.w0;
    let first = nf * cols.w1[0] * cols.w1[1] / (w00 * w00);
    for c in 0..d {
        jet.order_mut(1)[c] = first * (cols.p1[d + c] - cols.p1[c]);
    }
    let cube = w00 * w00 * w00;
    let [a0, _, a2] = cols.w2;
    let [b0, b1] = cols.w1;
    let upper = nf * a2 / cube * (2.0 * nf * b0 * b0 - (nf - 1.0) * a0 * w00 - 2.0 * b0 * w00);
    let lower = nf * a0 / cube * (2.0 * nf * b1 * b1 - (nf - 1.0) * a2 * w00 - 2.0 * b1 * w00);
    let p = &cols.p2;
    for c in 0..d {
        jet.order_mut(2)[c] = upper * (p[2 * d + c] - p[d + c]) - lower * (p[d + c] - p[c]);
    }
}

/// Degree 0 and 1 curves: constant, or first derivative from columns 0/1
/// with the second taken from the Leibniz recurrence.
fn low_degree(curve: &RationalCurve, t: f64) -> Result<DerivativeJet> {
    let d = curve.dim();
    if curve.degree() == 0 {
        let mut jet = DerivativeJet::zeros(d, 2);
        jet.order_mut(0).copy_from_slice(curve.polygon().point(0));
        return Ok(jet);
    }
    let w = curve.weights();
    let s = 1.0 - t;
    let w0 = s * w[0] + t * w[1];
    let (p, q) = (curve.polygon().point(0), curve.polygon().point(1));
    let mut jet = DerivativeJet::zeros(d, 2);
    let (a, b) = (s * w[0] / w0, t * w[1] / w0);
    let first = w[0] * w[1] / (w0 * w0);
    for c in 0..d {
        jet.order_mut(0)[c] = a * p[c] + b * q[c];
        jet.order_mut(1)[c] = first * (q[c] - p[c]);
    }
    let second = leibniz_jet(curve, t, 2)?;
    jet.order_mut(2).copy_from_slice(second.order(2));
    Ok(jet)
}

/// Value, first and second derivative from the full rational de Casteljau
/// tableau (`O(n^2 d)`).
pub fn floater_jet2_baseline(curve: &RationalCurve, t: f64) -> Result<DerivativeJet> {
    check_parameter(t)?;
    let n = curve.degree();
    if n < 2 {
        return low_degree(curve, t);
    }
    let d = curve.dim();
    let tab = casteljau_tableau(curve, t)?;
    let gather = |i: usize, count: usize| -> Vec<f64> {
        (0..count).flat_map(|k| tab.point(i, k).to_vec()).collect()
    };
    let cols = LastColumns {
        w2: [tab.weight(n - 2, 0), tab.weight(n - 2, 1), tab.weight(n - 2, 2)],
        p2: gather(n - 2, 3),
        w1: [tab.weight(n - 1, 0), tab.weight(n - 1, 1)],
        p1: gather(n - 1, 2),
        w0: tab.weight(n, 0),
        p0: tab.value().to_vec(),
    };
    let mut jet = DerivativeJet::zeros(d, 2);
    apply_formulas(n, &cols, d, &mut jet);
    Ok(jet)
}

/// Same jet as [`floater_jet2_baseline`] in `O(nd)`: column `n - 2` comes
/// from three degree-`(n-2)` evaluations with the geometric scheme (the
/// weights as one polynomial scheme sharing h-values, the points as
/// rational curves), followed by two de Casteljau steps.
pub fn floater_jet2_fast(curve: &RationalCurve, t: f64) -> Result<DerivativeJet> {
    check_parameter(t)?;
    let n = curve.degree();
    if n < 2 {
        return low_degree(curve, t);
    }
    let d = curve.dim();
    let m = n - 2;
    let weights = curve.weights();
    let flat = curve.polygon().as_flat();
    let mut h = vec![0.0; m + 1];
    fill_h(None, m, t, &mut h, None);
    let mut w2 = [0.0; 3];
    for (k, slot) in w2.iter_mut().enumerate() {
        let mut out = [0.0];
        blend_with_h(&h, &weights[k..=k + m], 1, &mut out);
        *slot = out[0];
    }
    let mut p2 = vec![0.0; 3 * d];
    for k in 0..3 {
        fill_h(Some(&weights[k..=k + m]), m, t, &mut h, None);
        blend_with_h(&h, &flat[k * d..(k + m + 1) * d], d, &mut p2[k * d..(k + 1) * d]);
    }
    let cols = LastColumns::from_column(w2, p2, d, t);
    let mut jet = DerivativeJet::zeros(d, 2);
    apply_formulas(n, &cols, d, &mut jet);
    Ok(jet)
}
