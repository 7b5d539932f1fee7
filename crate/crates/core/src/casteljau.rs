//! Reference de Casteljau evaluation, `O(n^2 d)` per point.

use crate::curve::{check_parameter, ControlPolygon, DerivativeJet, RationalCurve};
use crate::error::{Error, Result};

/// All columns of the rational de Casteljau algorithm at one parameter.
///
/// Column `i` holds `n - i + 1` weights `w^(i)_k` and points `W^(i)_k`;
/// column 0 is the input and `W^(n)_0` is the curve value.
#[derive(Debug, Clone, PartialEq)]
pub struct CasteljauTableau {
    n: usize,
    dim: usize,
    t: f64,
    weights: Vec<f64>,
    points: Vec<f64>,
}

#[inline]
fn column_start(n: usize, i: usize) -> usize {
    // sum_{c < i} (n - c + 1)
    i * (n + 1) - i * i.saturating_sub(1) / 2
}

impl CasteljauTableau {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn parameter(&self) -> f64 {
        self.t
    }

    /// `w^(i)_k`.
    pub fn weight(&self, i: usize, k: usize) -> f64 {
        debug_assert!(k <= self.n - i);
        self.weights[column_start(self.n, i) + k]
    }

    /// `W^(i)_k`.
    pub fn point(&self, i: usize, k: usize) -> &[f64] {
        debug_assert!(k <= self.n - i);
        let at = (column_start(self.n, i) + k) * self.dim;
        &self.points[at..at + self.dim]
    }

    /// The curve value `W^(n)_0`.
    pub fn value(&self) -> &[f64] {
        self.point(self.n, 0)
    }
}

/// Runs the rational de Casteljau algorithm, keeping every column:
///
/// ```text
/// w^(i)_k = (1-t) w^(i-1)_k + t w^(i-1)_{k+1}
/// W^(i)_k = (1-t) (w^(i-1)_k / w^(i)_k) W^(i-1)_k + t (w^(i-1)_{k+1} / w^(i)_k) W^(i-1)_{k+1}
/// ```
pub fn casteljau_tableau(curve: &RationalCurve, t: f64) -> Result<CasteljauTableau> {
    check_parameter(t)?;
    let n = curve.degree();
    let d = curve.dim();
    let total = (n + 1) * (n + 2) / 2;
    let mut weights = Vec::with_capacity(total);
    let mut points = Vec::with_capacity(total * d);
    weights.extend_from_slice(curve.weights());
    points.extend_from_slice(curve.polygon().as_flat());
    let s = 1.0 - t;
    let mut prev = 0;
    for i in 1..=n {
        for k in 0..=n - i {
            let w0 = weights[prev + k];
            let w1 = weights[prev + k + 1];
            let w = s * w0 + t * w1;
            let a = s * w0 / w;
            let b = t * w1 / w;
            weights.push(w);
            for c in 0..d {
                let p = a * points[(prev + k) * d + c] + b * points[(prev + k + 1) * d + c];
                points.push(p);
            }
        }
        prev += n - i + 2;
    }
    Ok(CasteljauTableau {
        n,
        dim: d,
        t,
        weights,
        points,
    })
}

/// Value-only rational de Casteljau with `O(n)` memory.
pub fn casteljau_eval(curve: &RationalCurve, t: f64) -> Result<Vec<f64>> {
    check_parameter(t)?;
    let d = curve.dim();
    let mut w = curve.weights().to_vec();
    let mut p = curve.polygon().as_flat().to_vec();
    let s = 1.0 - t;
    for m in (1..=curve.degree()).rev() {
        for k in 0..m {
            let nw = s * w[k] + t * w[k + 1];
            let a = s * w[k] / nw;
            let b = t * w[k + 1] / nw;
            for c in 0..d {
                p[k * d + c] = a * p[k * d + c] + b * p[(k + 1) * d + c];
            }
            w[k] = nw;
        }
    }
    p.truncate(d);
    Ok(p)
}

/// Value and derivatives `1..=r` of a polynomial curve through the
/// classical identity `P^(j)(t) = n!/(n-j)! * Delta^j W^(n-j)_0`, where
/// column `n - j` of the polynomial de Casteljau table supplies the
/// `j + 1` points being differenced.
pub fn poly_derivatives_dc(points: &ControlPolygon, t: f64, r: usize) -> Result<DerivativeJet> {
    check_parameter(t)?;
    let n = points.degree();
    if r > n {
        return Err(Error::OrderExceedsDegree { order: r, degree: n });
    }
    let d = points.dim();
    let mut jet = DerivativeJet::zeros(d, r);
    let mut col = points.as_flat().to_vec();
    let mut diff = vec![0.0; (r + 1) * d];
    let s = 1.0 - t;
    // After `i` sweeps the first n - i + 1 entries of `col` are column i.
    for i in 0..=n {
        if i > 0 {
            for k in 0..=n - i {
                for c in 0..d {
                    col[k * d + c] = s * col[k * d + c] + t * col[(k + 1) * d + c];
                }
            }
        }
        let j = n - i;
        if j <= r {
            let len = (j + 1) * d;
            diff[..len].copy_from_slice(&col[..len]);
            for level in 1..=j {
                for k in 0..=j - level {
                    for c in 0..d {
                        diff[k * d + c] = diff[(k + 1) * d + c] - diff[k * d + c];
                    }
                }
            }
            let scale: f64 = ((n - j + 1)..=n).map(|m| m as f64).product();
            for (o, &v) in jet.order_mut(j).iter_mut().zip(&diff[..d]) {
                *o = scale * v;
            }
        }
    }
    Ok(jet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernstein::bernstein_all;
    use crate::geometric::eval_rational;

    fn quarter_circle() -> RationalCurve {
        RationalCurve::from_points(
            [[1.0, 0.0], [1.0, 1.0], [0.0, 1.0]],
            vec![1.0, std::f64::consts::FRAC_1_SQRT_2, 1.0],
        )
        .unwrap()
    }

    #[test]
    fn column_offsets() {
        assert_eq!(column_start(3, 0), 0);
        assert_eq!(column_start(3, 1), 4);
        assert_eq!(column_start(3, 2), 7);
        assert_eq!(column_start(3, 3), 9);
    }

    #[test]
    fn linear_interpolation() {
        let c = RationalCurve::polynomial(ControlPolygon::new([[0.0], [2.0]]).unwrap());
        let tab = casteljau_tableau(&c, 0.25).unwrap();
        assert_eq!(tab.point(1, 0), &[0.5]);
    }

    #[test]
    fn tableau_quarter_circle_and_endpoint() {
        let c = quarter_circle();
        let tab = casteljau_tableau(&c, 0.5).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((tab.value()[0] - s).abs() < 1e-15 && (tab.value()[1] - s).abs() < 1e-15);
        assert_eq!(casteljau_eval(&c, 0.5).unwrap(), tab.value().to_vec());

        let tab0 = casteljau_tableau(&c, 0.0).unwrap();
        for i in 0..=2 {
            assert_eq!(tab0.point(i, 0), &[1.0, 0.0]);
        }
    }

    #[test]
    fn tableau_weights_are_partial_bernstein_sums() {
        let w = [0.4, 1.3, 0.05, 2.0, 0.7, 1.1];
        let pts: Vec<[f64; 1]> = (0..6).map(|k| [k as f64]).collect();
        let c = RationalCurve::from_points(pts, w.to_vec()).unwrap();
        let t = 0.37;
        let tab = casteljau_tableau(&c, t).unwrap();
        for i in 0..=5 {
            let b = bernstein_all(i, t);
            for k in 0..=5 - i {
                let direct: f64 = (0..=i).map(|j| w[j + k] * b[j]).sum();
                assert!((tab.weight(i, k) - direct).abs() <= 1e-12 * direct);
                assert!(tab.weight(i, k) > 0.0);
            }
        }
        let v = eval_rational(&c, t).unwrap();
        assert!((v.0[0] - tab.value()[0]).abs() <= 1e-12 * v.0[0].abs());
    }

    #[test]
    fn quadratic_derivatives() {
        let pts = ControlPolygon::new([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0]]).unwrap();
        let jet = poly_derivatives_dc(&pts, 0.5, 2).unwrap();
        assert_eq!(jet.value(), &[0.75, 0.25]);
        assert_eq!(jet.order(1), &[1.0, 1.0]);
        assert_eq!(jet.order(2), &[-2.0, 2.0]);
        assert!(matches!(
            poly_derivatives_dc(&pts, 0.5, 3),
            Err(Error::OrderExceedsDegree { order: 3, degree: 2 })
        ));
    }

    #[test]
    fn endpoint_first_derivatives() {
        let pts = ControlPolygon::new([[0.3, -1.0], [0.9, 0.2], [-0.5, 0.7], [0.1, 0.1]]).unwrap();
        let j0 = poly_derivatives_dc(&pts, 0.0, 1).unwrap();
        let j1 = poly_derivatives_dc(&pts, 1.0, 1).unwrap();
        for c in 0..2 {
            assert!((j0.order(1)[c] - 3.0 * (pts.point(1)[c] - pts.point(0)[c])).abs() < 1e-15);
            assert!((j1.order(1)[c] - 3.0 * (pts.point(3)[c] - pts.point(2)[c])).abs() < 1e-15);
        }
    }
}
