//! Derivatives of polynomial Bézier curves in `O(rnd)`.
//!
//! Two routes are provided. [`derivatives_reduced`] differentiates the
//! control polygon into vector curves of decreasing degree and evaluates
//! each with the geometric scheme. [`derivatives_kept_degree`] rewrites every
//! derivative in the degree-`n` basis, so a single set of h-values serves
//! all orders.

use crate::curve::{check_parameter, ControlPolygon, DerivativeJet};
use crate::error::{Error, Result};
use crate::geometric::{blend_with_h, fill_h};

/// Control vectors `v^(j)_k` of the derivative curves.
///
/// Level `j` has `n - j + 1` vectors with
/// `v^(j)_k = (n - j + 1) (v^(j-1)_{k+1} - v^(j-1)_k)`; level 0 is the
/// control points themselves.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlVectorPyramid {
    n: usize,
    dim: usize,
    levels: Vec<Vec<f64>>,
}

impl ControlVectorPyramid {
    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    /// Level `j`, flat with stride `dim`.
    pub fn level(&self, j: usize) -> &[f64] {
        &self.levels[j]
    }

    pub fn vector(&self, j: usize, k: usize) -> &[f64] {
        &self.levels[j][k * self.dim..(k + 1) * self.dim]
    }

    pub fn level_len(&self, j: usize) -> usize {
        self.n - j + 1
    }
}

pub fn control_vector_pyramid(points: &ControlPolygon, r: usize) -> Result<ControlVectorPyramid> {
    let n = points.degree();
    if r > n {
        return Err(Error::OrderExceedsDegree { order: r, degree: n });
    }
    let d = points.dim();
    let mut levels = Vec::with_capacity(r + 1);
    levels.push(points.as_flat().to_vec());
    for j in 1..=r {
        levels.push(difference_level(&levels[j - 1], n - j, d));
    }
    Ok(ControlVectorPyramid { n, dim: d, levels })
}

/// One differencing step producing the `m + 1` control vectors of a
/// degree-`m` vector curve from the `m + 2` entries of `prev`.
#[inline]
fn difference_level(prev: &[f64], m: usize, d: usize) -> Vec<f64> {
    let scale = (m + 1) as f64;
    (0..(m + 1) * d)
        .map(|at| scale * (prev[at + d] - prev[at]))
        .collect()
}

/// Which polynomial algorithm to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyMethod {
    /// Control vectors of decreasing degree, one geometric evaluation each.
    Reduced,
    /// All orders expressed in the degree-`n` basis, one set of h-values.
    KeptDegree,
}

/// Value and derivatives `1..=r` of a polynomial curve.
///
/// Each order `j <= n` is the degree-`(n - j)` vector curve with control
/// vectors from [`control_vector_pyramid`], evaluated with its own h-values.
/// Orders above `n` are zero vectors.
pub fn derivatives_reduced(points: &ControlPolygon, t: f64, r: usize) -> Result<DerivativeJet> {
    check_parameter(t)?;
    let n = points.degree();
    let d = points.dim();
    let top = r.min(n);
    let mut jet = DerivativeJet::zeros(d, r);
    let mut h = vec![0.0; n + 1];
    let mut level = points.as_flat().to_vec();
    for j in 0..=top {
        let m = n - j;
        if j > 0 {
            level = difference_level(&level, m, d);
        }
        fill_h(None, m, t, &mut h[..=m], None);
        blend_with_h(&h[..=m], &level, d, jet.order_mut(j));
    }
    Ok(jet)
}

/// Kept-degree vectors `u^(j)_k`, `k = 0..=n`, for levels `0..=r`:
/// `u^(j)_k = (n - k) (u^(j-1)_{k+1} - u^(j-1)_k) + k (u^(j-1)_k - u^(j-1)_{k-1})`.
#[derive(Debug, Clone, PartialEq)]
pub struct KeptDegreeVectors {
    n: usize,
    dim: usize,
    levels: Vec<f64>,
}

impl KeptDegreeVectors {
    pub fn new(points: &ControlPolygon, r: usize) -> Self {
        let n = points.degree();
        let d = points.dim();
        let stride = (n + 1) * d;
        let mut levels = vec![0.0; (r + 1) * stride];
        levels[..stride].copy_from_slice(points.as_flat());
        for j in 1..=r {
            let (prev, cur) = levels[(j - 1) * stride..(j + 1) * stride].split_at_mut(stride);
            kept_degree_step(prev, cur, n, d);
        }
        KeptDegreeVectors { n, dim: d, levels }
    }

    pub fn level(&self, j: usize) -> &[f64] {
        let stride = (self.n + 1) * self.dim;
        &self.levels[j * stride..(j + 1) * stride]
    }

    pub fn vector(&self, j: usize, k: usize) -> &[f64] {
        let at = (j * (self.n + 1) + k) * self.dim;
        &self.levels[at..at + self.dim]
    }
}

/// One level of the kept-degree recurrence, accumulated as in the
/// streaming form: each difference `u_{k+1} - u_k` feeds slot `k` with
/// weight `n - k` and slot `k + 1` with weight `k + 1`.
#[inline]
fn kept_degree_step(prev: &[f64], cur: &mut [f64], n: usize, d: usize) {
    cur[..d].fill(0.0);
    for k in 0..n {
        let a = (n - k) as f64;
        let b = (k + 1) as f64;
        for c in 0..d {
            let delta = prev[(k + 1) * d + c] - prev[k * d + c];
            cur[k * d + c] += a * delta;
            cur[(k + 1) * d + c] = b * delta;
        }
    }
}

/// Value and derivatives `1..=r` of a polynomial curve using only the
/// degree-`n` h-values. Orders above `n` are zero vectors.
pub fn derivatives_kept_degree(points: &ControlPolygon, t: f64, r: usize) -> Result<DerivativeJet> {
    check_parameter(t)?;
    let n = points.degree();
    let d = points.dim();
    let top = r.min(n);
    let mut h = vec![0.0; n + 1];
    fill_h(None, n, t, &mut h, None);
    let mut jet = DerivativeJet::zeros(d, r);
    kept_degree_into(&h, points.as_flat(), n, d, top, &mut jet);
    Ok(jet)
}

pub(crate) fn kept_degree_into(h: &[f64], points: &[f64], n: usize, d: usize, top: usize, jet: &mut DerivativeJet) {
    let stride = (n + 1) * d;
    let mut prev = points.to_vec();
    let mut cur = vec![0.0; stride];
    blend_with_h(h, &prev, d, jet.order_mut(0));
    for j in 1..=top {
        kept_degree_step(&prev, &mut cur, n, d);
        blend_with_h(h, &cur, d, jet.order_mut(j));
        std::mem::swap(&mut prev, &mut cur);
    }
}

/// Jets for many curves of one degree at the same parameter.
///
/// The h-values of every level are computed once and shared by all
/// curves; each jet is bit-identical to the single-curve call.
pub fn derivatives_batch(
    curves: &[ControlPolygon],
    t: f64,
    r: usize,
    method: PolyMethod,
) -> Result<Vec<DerivativeJet>> {
    check_parameter(t)?;
    let Some(first) = curves.first() else {
        return Ok(Vec::new());
    };
    let n = first.degree();
    let d = first.dim();
    if curves.iter().any(|c| c.degree() != n || c.dim() != d) {
        return Err(Error::HeterogeneousBatch);
    }
    let top = r.min(n);
    let mut jets: Vec<DerivativeJet> = curves.iter().map(|_| DerivativeJet::zeros(d, r)).collect();
    match method {
        PolyMethod::Reduced => {
            let mut levels: Vec<Vec<f64>> = curves.iter().map(|c| c.as_flat().to_vec()).collect();
            let mut h = vec![0.0; n + 1];
            for j in 0..=top {
                let m = n - j;
                fill_h(None, m, t, &mut h[..=m], None);
                for (level, jet) in levels.iter_mut().zip(jets.iter_mut()) {
                    if j > 0 {
                        *level = difference_level(level, m, d);
                    }
                    blend_with_h(&h[..=m], level, d, jet.order_mut(j));
                }
            }
        }
        PolyMethod::KeptDegree => {
            let mut h = vec![0.0; n + 1];
            fill_h(None, n, t, &mut h, None);
            for (curve, jet) in curves.iter().zip(jets.iter_mut()) {
                kept_degree_into(&h, curve.as_flat(), n, d, top, jet);
            }
        }
    }
    Ok(jets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::casteljau::poly_derivatives_dc;
    use crate::geometric::{eval_with_h, HState};
    use crate::tolerance::jet_deviation;
    use proptest::prelude::*;

    fn quadratic() -> ControlPolygon {
        ControlPolygon::new([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0]]).unwrap()
    }

    #[test]
    fn pyramid_levels() {
        let p = control_vector_pyramid(&quadratic(), 2).unwrap();
        assert_eq!(p.level(1), &[2.0, 0.0, 0.0, 2.0]);
        assert_eq!(p.level(2), &[-2.0, 2.0]);
        assert_eq!(p.level_len(2), 1);

        let line = ControlPolygon::new([[0.5, 1.0], [2.0, -1.0]]).unwrap();
        let p = control_vector_pyramid(&line, 1).unwrap();
        assert_eq!(p.vector(1, 0), &[1.5, -2.0]);
        assert!(control_vector_pyramid(&line, 2).is_err());
    }

    #[test]
    fn quadratic_jets() {
        let q = quadratic();
        for jet in [
            derivatives_reduced(&q, 0.5, 2).unwrap(),
            derivatives_kept_degree(&q, 0.5, 2).unwrap(),
        ] {
            let expected = [[0.75, 0.25], [1.0, 1.0], [-2.0, 2.0]];
            for (j, e) in expected.iter().enumerate() {
                for c in 0..2 {
                    assert!((jet.order(j)[c] - e[c]).abs() <= 1e-14, "{jet:?}");
                }
            }
        }
    }

    #[test]
    fn orders_above_degree_are_exact_zeros() {
        let q = quadratic();
        for jet in [
            derivatives_reduced(&q, 0.3, 5).unwrap(),
            derivatives_kept_degree(&q, 0.3, 5).unwrap(),
        ] {
            for j in 3..=5 {
                assert_eq!(jet.order(j), &[0.0, 0.0]);
            }
        }
    }

    #[test]
    fn top_order_is_constant() {
        let pts = ControlPolygon::new([[0.1], [0.9], [-0.4], [0.3]]).unwrap();
        // 3! * (W3 - 3 W2 + 3 W1 - W0)
        let expected = 6.0 * (0.3 - 3.0 * -0.4 + 3.0 * 0.9 - 0.1);
        for t in [0.0, 0.25, 0.8, 1.0] {
            let jet = derivatives_reduced(&pts, t, 3).unwrap();
            assert!((jet.order(3)[0] - expected).abs() <= 1e-13);
        }
    }

    #[test]
    fn kept_degree_line() {
        let line = ControlPolygon::new([[0.5], [2.0]]).unwrap();
        let u = KeptDegreeVectors::new(&line, 1);
        assert_eq!(u.level(1), &[1.5, 1.5]);
        for t in [0.0, 0.4, 1.0] {
            assert_eq!(derivatives_kept_degree(&line, t, 1).unwrap().order(1), &[1.5]);
        }
    }

    #[test]
    fn kept_degree_order_zero_is_scheme_value() {
        let pts = ControlPolygon::new([[0.1, 0.2], [0.9, -0.3], [-0.4, 0.8], [0.3, 0.3]]).unwrap();
        let jet = derivatives_kept_degree(&pts, 0.6, 0).unwrap();
        let v = eval_with_h(&pts, &HState::polynomial(3, 0.6).unwrap()).unwrap();
        assert_eq!(jet.value(), v.coords());
    }

    #[test]
    fn endpoint_second_derivative() {
        let pts = ControlPolygon::new([[0.1], [0.9], [-0.4], [0.3], [0.6]]).unwrap();
        let w: Vec<f64> = pts.points().map(|p| p[0]).collect();
        let expected = 4.0 * 3.0 * (w[2] - 2.0 * w[1] + w[0]);
        let jet = derivatives_reduced(&pts, 0.0, 2).unwrap();
        assert!((jet.order(2)[0] - expected).abs() <= 1e-14);
    }

    #[test]
    fn batch_rejects_mixed_degrees() {
        let a = quadratic();
        let b = ControlPolygon::new([[0.0, 0.0], [1.0, 0.0]]).unwrap();
        assert_eq!(
            derivatives_batch(&[a, b], 0.5, 1, PolyMethod::Reduced),
            Err(Error::HeterogeneousBatch)
        );
    }

    fn polygon(n: usize, d: usize) -> impl Strategy<Value = ControlPolygon> {
        prop::collection::vec(-1.0f64..1.0, (n + 1) * d)
            .prop_map(move |c| ControlPolygon::from_flat(d, c).unwrap())
    }

    fn sized_polygon() -> impl Strategy<Value = ControlPolygon> {
        (1usize..=50, 1usize..=3).prop_flat_map(|(n, d)| polygon(n, d))
    }

    proptest! {
        #[test]
        fn reduced_and_kept_degree_agree(pts in (1usize..=10, 1usize..=3).prop_flat_map(|(n, d)| polygon(n, d)), t in 0.0f64..=1.0) {
            let n = pts.degree();
            let a = derivatives_reduced(&pts, t, n).unwrap();
            let b = derivatives_kept_degree(&pts, t, n).unwrap();
            prop_assert!(jet_deviation(&a, &b) <= 1e-11, "dev {}", jet_deviation(&a, &b));
        }

        // Each kept-degree level can grow magnitudes by 2n, so for high
        // degree the agreement is measured against (2n)^k rather than per
        // component.
        #[test]
        fn reduced_and_kept_degree_agree_at_high_degree(pts in sized_polygon(), t in 0.0f64..=1.0, frac in 0.0f64..=1.0) {
            let n = pts.degree();
            let r = ((n as f64) * frac).round() as usize;
            let a = derivatives_reduced(&pts, t, r).unwrap();
            let b = derivatives_kept_degree(&pts, t, r).unwrap();
            for k in 0..=r {
                let scale = (2.0 * n as f64).powi(k as i32);
                for (x, y) in a.order(k).iter().zip(b.order(k)) {
                    prop_assert!((x - y).abs() <= 1e-13 * scale, "k = {}: {} vs {}", k, x, y);
                }
            }
        }

        #[test]
        fn casteljau_agrees(pts in (1usize..=15, 1usize..=3).prop_flat_map(|(n, d)| polygon(n, d)), t in 0.0f64..=1.0) {
            let r = pts.degree();
            let a = derivatives_reduced(&pts, t, r).unwrap();
            let b = poly_derivatives_dc(&pts, t, r).unwrap();
            prop_assert!(jet_deviation(&a, &b) <= 1e-9);
        }

        #[test]
        fn batch_is_bit_identical(curves in prop::collection::vec(polygon(10, 2), 1..6), t in 0.0f64..=1.0, r in 0usize..=12) {
            for method in [PolyMethod::Reduced, PolyMethod::KeptDegree] {
                let jets = derivatives_batch(&curves, t, r, method).unwrap();
                for (c, jet) in curves.iter().zip(&jets) {
                    let single = match method {
                        PolyMethod::Reduced => derivatives_reduced(c, t, r).unwrap(),
                        PolyMethod::KeptDegree => derivatives_kept_degree(c, t, r).unwrap(),
                    };
                    prop_assert_eq!(jet, &single);
                }
            }
        }

        #[test]
        fn jets_are_linear(a in polygon(8, 2), b in polygon(8, 2), e in -3i32..=3, neg: bool, t in 0.0f64..=1.0) {
            // Power-of-two factors scale every intermediate exactly.
            let s = if neg { -1.0 } else { 1.0 } * 2f64.powi(e);
            let sum = ControlPolygon::from_flat(2, a.as_flat().iter().zip(b.as_flat()).map(|(x, y)| x + y).collect()).unwrap();
            let scaled = ControlPolygon::from_flat(2, a.as_flat().iter().map(|x| s * x).collect()).unwrap();
            let ja = derivatives_reduced(&a, t, 8).unwrap();
            let jb = derivatives_reduced(&b, t, 8).unwrap();
            let js = derivatives_reduced(&sum, t, 8).unwrap();
            let jk = derivatives_reduced(&scaled, t, 8).unwrap();
            let added = DerivativeJet::from_flat(2, ja.as_flat().iter().zip(jb.as_flat()).map(|(x, y)| x + y).collect());
            let mult = DerivativeJet::from_flat(2, ja.as_flat().iter().map(|x| s * x).collect());
            prop_assert_eq!(jk, mult);
            // Sums of inputs round, which high orders amplify by at most 8! 2^8.
            let scale: f64 = (1..=8).map(|m| 2.0 * m as f64).product();
            for (x, y) in js.as_flat().iter().zip(added.as_flat()) {
                prop_assert!((x - y).abs() <= 1e-14 * scale);
            }
        }

        #[test]
        fn first_order_matches_finite_difference(pts in (1usize..=10).prop_flat_map(|n| polygon(n, 2)), t in 0.01f64..0.99) {
            let delta = 1e-6;
            let jet = derivatives_reduced(&pts, t, 1).unwrap();
            let hi = derivatives_reduced(&pts, t + delta, 0).unwrap();
            let lo = derivatives_reduced(&pts, t - delta, 0).unwrap();
            for c in 0..2 {
                let fd = (hi.value()[c] - lo.value()[c]) / (2.0 * delta);
                let exact = jet.order(1)[c];
                prop_assert!((fd - exact).abs() <= 1e-5 * exact.abs().max(1.0));
            }
        }
    }
}
