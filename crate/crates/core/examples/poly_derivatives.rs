//! Derivatives of a polynomial curve three ways: differences of a
//! de Casteljau column, reduced-degree control vectors and kept-degree
//! control vectors.

use bezjet::bench::CurveSampler;
use bezjet::casteljau::poly_derivatives_dc;
use bezjet::poly::{derivatives_kept_degree, derivatives_reduced};
use bezjet::tolerance::jet_deviation_upto;

fn main() {
    let (n, r, t) = (9, 4, 0.62);
    let poly = CurveSampler::new(2024).polygon(n, 2);

    let dc = poly_derivatives_dc(&poly, t, r).unwrap();
    let reduced = derivatives_reduced(&poly, t, r).unwrap();
    let kept = derivatives_kept_degree(&poly, t, r).unwrap();

    println!("degree {n} curve at t = {t}");
    for k in 0..=r {
        println!("  order {k}: {:+.10?}", reduced.order(k));
    }
    println!("reduced vs de Casteljau: {:.1e}", jet_deviation_upto(&reduced, &dc, r));
    println!("kept    vs de Casteljau: {:.1e}", jet_deviation_upto(&kept, &dc, r));

    // Orders above the degree are zero.
    let beyond = derivatives_reduced(&poly, t, n + 1).unwrap();
    println!("order {}: {:?}", n + 1, beyond.order(n + 1));
}
