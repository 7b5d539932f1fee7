//! First and higher derivatives of a rational curve with every method.

use bezjet::bench::CurveSampler;
use bezjet::rational::{floater_jet2_baseline, floater_jet2_fast, leibniz_jet, scheme_jet, LeibnizWorkspace};
use bezjet::tolerance::jet_deviation_upto;
use bezjet::Method;

fn main() {
    let curve = CurveSampler::new(7).curve(8, 3, true);
    let t = 0.4;

    let leibniz = leibniz_jet(&curve, t, 5).unwrap();
    let scheme = scheme_jet(&curve, t, 5).unwrap();
    println!("weights {:.3?}", curve.weights());
    for k in 0..=5 {
        println!("  R^({k}) = {:+.8?}", leibniz.order(k));
    }
    println!("scheme vs leibniz, orders 0..=5: {:.1e}", jet_deviation_upto(&scheme, &leibniz, 5));

    let base = floater_jet2_baseline(&curve, t).unwrap();
    let fast = floater_jet2_fast(&curve, t).unwrap();
    println!("floater baseline vs fast: {:.1e}", jet_deviation_upto(&base, &fast, 2));
    println!("floater vs leibniz:       {:.1e}", jet_deviation_upto(&base, &leibniz, 2));

    // The Leibniz workspace shows how each order was obtained.
    let ws = LeibnizWorkspace::new(&curve, t, 10).unwrap();
    for k in [1, 8, 9, 10] {
        println!("  order {k:>2}: A_k = {:+.3e}, path {}", ws.a()[k], path_name(ws.path(k)));
    }

    for m in Method::ALL {
        println!("{m:<13} applies at r = 3: {}", m.applicable(&curve, 3));
    }
}

fn path_name(p: &bezjet::rational::OrderPath) -> &'static str {
    use bezjet::rational::OrderPath;
    match p {
        OrderPath::Split { .. } => "split",
        OrderPath::Vector { .. } => "vector",
        OrderPath::BeyondDegree => "beyond degree",
    }
}
