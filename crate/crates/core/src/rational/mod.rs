//! Derivatives of rational Bézier curves.
//!
//! Three independent methods:
//!
//! - [`floater_jet2_baseline`] / [`floater_jet2_fast`]: closed forms for the
//!   first two derivatives in terms of the last de Casteljau columns.
//! - [`scheme_jet12`] / [`scheme_jet`]: the geometric scheme differentiated
//!   term by term, any order.
//! - [`leibniz_jet`]: the Leibniz rule on `R A = N`, any order.
//!
//! The scheme loses accuracy close to `t = 1`, so by default it evaluates
//! the [reversed](reverse_curve) curve at `1 - t` for `t > 1/2`.

mod floater;
mod leibniz;
mod scheme;

pub use floater::{floater_jet2_baseline, floater_jet2_fast};
pub use leibniz::{leibniz_jet, LeibnizWorkspace, OrderPath, ZERO_A_THRESHOLD};
pub use scheme::{scheme_jet, scheme_jet12, scheme_jet12_with, scheme_jet_with, SchemeDiffState, SchemeOptions};

use crate::curve::RationalCurve;

/// The same curve traversed backwards: control points and weights in
/// reverse order. Its value at `1 - t` equals the original at `t`, and its
/// `k`-th derivative there is `(-1)^k` times the original's.
pub fn reverse_curve(curve: &RationalCurve) -> RationalCurve {
    let mut weights = curve.weights().to_vec();
    weights.reverse();
    RationalCurve::new(curve.polygon().reversed(), weights)
        .expect("reversal preserves validity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometric::eval_rational;
    use crate::tolerance::slice_deviation;

    fn sample() -> RationalCurve {
        RationalCurve::from_points(
            [[0.1, 0.2], [0.9, -0.3], [-0.4, 0.8], [0.3, 0.3]],
            vec![0.3, 1.7, 0.05, 1.2],
        )
        .unwrap()
    }

    #[test]
    fn reversal_is_an_involution() {
        let c = sample();
        assert_eq!(reverse_curve(&reverse_curve(&c)), c);
    }

    #[test]
    fn palindromic_curve_is_fixed() {
        let c = RationalCurve::from_points([[0.0, 1.0], [2.0, 3.0], [0.0, 1.0]], vec![0.5, 2.0, 0.5]).unwrap();
        assert_eq!(reverse_curve(&c), c);
    }

    #[test]
    fn reversed_value_and_derivatives() {
        let c = sample();
        let rev = reverse_curve(&c);
        for t in [0.0, 0.25, 0.5, 0.875, 1.0] {
            let a = eval_rational(&c, t).unwrap();
            let b = eval_rational(&rev, 1.0 - t).unwrap();
            assert!(slice_deviation(&a.0, &b.0) <= 1e-13);
            let ja = leibniz_jet(&c, t, 3).unwrap();
            let jb = leibniz_jet(&rev, 1.0 - t, 3).unwrap();
            for k in 0..=3 {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                let flipped: Vec<f64> = jb.order(k).iter().map(|x| sign * x).collect();
                assert!(slice_deviation(ja.order(k), &flipped) <= 1e-11);
            }
        }
    }
}
