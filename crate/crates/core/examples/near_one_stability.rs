//! The differentiated scheme run forward loses digits as t approaches 1;
//! evaluating the reversed curve at 1 - t does not.

use bezjet::bench::CurveSampler;
use bezjet::rational::{leibniz_jet, scheme_jet, scheme_jet_with, SchemeOptions};
use bezjet::tolerance::jet_deviation_upto;

fn main() {
    let (n, r) = (20, 10);
    let mut sampler = CurveSampler::new(3000);
    let curves: Vec<_> = (0..200).map(|_| sampler.curve(n, 2, true)).collect();
    println!("{:>8} {:>12} {:>12} {:>12}", "t", "forward max", "reversed max", "worse 1e-10");
    for t in [0.5, 0.9, 0.99, 0.998, 0.9999, 1.0] {
        let (mut fwd, mut rev, mut bad) = (0.0f64, 0.0f64, 0);
        for c in &curves {
            let reference = leibniz_jet(c, t, r).unwrap();
            let f = jet_deviation_upto(&scheme_jet_with(c, t, r, &SchemeOptions::forward_only()).unwrap(), &reference, r);
            let b = jet_deviation_upto(&scheme_jet(c, t, r).unwrap(), &reference, r);
            fwd = fwd.max(f);
            rev = rev.max(b);
            bad += usize::from(f > 1e-10);
        }
        println!("{t:>8} {fwd:>12.1e} {rev:>12.1e} {bad:>8}/200");
    }
}
