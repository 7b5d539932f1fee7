//! Exact derivatives in rational arithmetic, and how far the floating
//! point kernels land from them.

use bezjet::bench::CurveSampler;
use bezjet::exact::{expand_curve, rational_parameter, ExactDerivatives};
use bezjet::tolerance::order_deviations;
use bezjet::Method;

fn main() {
    // Dyadic data converts to rationals without error.
    let curve = CurveSampler::new(99).quantized(1024).curve(6, 2, true);
    let expanded = expand_curve(&curve);
    println!("denominator coefficients: {:?}", expanded.denominator().coeffs());

    let r = 6;
    let oracle = ExactDerivatives::new(&expanded, r);
    let t = rational_parameter(3, 8);
    let exact = oracle.jet_at(&t).unwrap();
    println!("R''(3/8) = ({}, {})", exact.order(2)[0], exact.order(2)[1]);

    let reference = exact.to_f64();
    for method in [Method::Scheme, Method::Leibniz] {
        let jet = method.jet(&curve, 0.375, r).unwrap();
        let devs: Vec<String> = order_deviations(&jet, &reference, r).iter().map(|d| format!("{d:.0e}")).collect();
        println!("{method:<8} per order: {}", devs.join(" "));
    }
}
