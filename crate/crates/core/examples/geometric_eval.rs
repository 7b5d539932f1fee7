//! Evaluating a rational curve with the geometric scheme, and sharing one
//! set of h-values across curves that have the same weights.

use bezjet::casteljau::casteljau_eval;
use bezjet::geometric::{eval_rational, eval_with_h, h_values};
use bezjet::{ControlPolygon, RationalCurve};

fn main() {
    let w = std::f64::consts::FRAC_1_SQRT_2;
    let circle = RationalCurve::from_points([[1.0, 0.0], [1.0, 1.0], [0.0, 1.0]], vec![1.0, w, 1.0]).unwrap();

    println!("quarter circle:");
    for i in 0..=4 {
        let t = i as f64 / 4.0;
        let p = eval_rational(&circle, t).unwrap();
        let radius = p.0.iter().map(|x| x * x).sum::<f64>().sqrt();
        println!("  t = {t:.2}  ({:+.6}, {:+.6})  |p| = {radius:.15}", p.0[0], p.0[1]);
    }

    // h depends on the weights and t only.
    let h = h_values(circle.weights(), 0.3).unwrap();
    println!("h at t = 0.3: {:?}", h.h());
    let shifted = ControlPolygon::new([[2.0, 0.0], [2.0, 2.0], [0.0, 2.0]]).unwrap();
    for poly in [circle.polygon(), &shifted] {
        let by_h = eval_with_h(poly, &h).unwrap();
        let by_dc = casteljau_eval(&RationalCurve::new(poly.clone(), circle.weights().to_vec()).unwrap(), 0.3).unwrap();
        println!("  shared h {:?}  de Casteljau {:?}", by_h.0, by_dc);
    }
}
