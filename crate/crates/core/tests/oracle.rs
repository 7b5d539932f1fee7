//! Kernels against jets computed in exact rational arithmetic.
//!
//! The oracle values are computed here, at test time, from the same
//! curves the kernels see; curve data is dyadic so it converts exactly.

use bezjet::bench::CurveSampler;
use bezjet::exact::{expand_curve, rational_parameter, ExactDerivatives};
use bezjet::tolerance::{jet_deviation_upto, order_deviations};
use bezjet::{DerivativeJet, Method, RationalCurve};
use num_rational::BigRational;

fn exact_at(curve: &RationalCurve, t: f64, r: usize) -> DerivativeJet {
    ExactDerivatives::new(&expand_curve(curve), r)
        .jet_f64(&BigRational::from_float(t).unwrap())
        .unwrap()
}

#[test]
fn quadratic_example() {
    let c = RationalCurve::from_points([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0]], vec![1.0; 3]).unwrap();
    let oracle = ExactDerivatives::new(&expand_curve(&c), 2)
        .jet_at(&rational_parameter(1, 2))
        .unwrap();
    let want = [[0.75, 0.25], [1.0, 1.0], [-2.0, 2.0]];
    assert_eq!(oracle.to_f64().as_flat(), want.concat());
    for method in Method::ALL {
        let jet = method.jet(&c, 0.5, 2).unwrap();
        assert!(jet_deviation_upto(&jet, &oracle.to_f64(), 2) <= 1e-14, "{method}");
    }
}

#[test]
fn rational_methods_at_low_degree() {
    // Degree two with very uneven weights, where every rational method has
    // its own special cases.
    let c = RationalCurve::from_points([[0.5, -0.25], [1.0, 2.0], [-1.0, 0.125]], vec![0.0625, 1.75, 0.5]).unwrap();
    for i in 0..=16 {
        let t = i as f64 / 16.0;
        let exact = exact_at(&c, t, 4);
        for method in [Method::Scheme, Method::Leibniz] {
            let dev = jet_deviation_upto(&method.jet(&c, t, 4).unwrap(), &exact, 4);
            assert!(dev <= 1e-9, "{method} at t={t}: {dev}");
        }
        for method in [Method::Floater, Method::FloaterFast] {
            let dev = jet_deviation_upto(&method.jet(&c, t, 2).unwrap(), &exact, 2);
            assert!(dev <= 1e-11, "{method} at t={t}: {dev}");
        }
    }
}

#[test]
fn orders_beyond_the_degree() {
    let mut sampler = CurveSampler::new(11).quantized(256);
    for n in 1..=3 {
        let rational = sampler.curve(n, 2, true);
        let poly = RationalCurve::polynomial(rational.polygon().clone());
        for t in [0.0, 0.375, 1.0] {
            let r = n + 3;
            let exact = exact_at(&rational, t, r);
            for method in [Method::Scheme, Method::Leibniz] {
                let devs = order_deviations(&method.jet(&rational, t, r).unwrap(), &exact, r);
                assert!(devs.iter().all(|&d| d <= 1e-9), "{method} n={n} t={t}: {devs:?}");
            }
            let exact = exact_at(&poly, t, r);
            // The polynomial kernels stop at order n and return exact zeros;
            // the rational ones compute the high orders and leave rounding.
            for (method, tol) in [(Method::Reduced, 0.0f64), (Method::Kept, 0.0), (Method::Scheme, 1e-9), (Method::Leibniz, 1e-9)] {
                let jet = method.jet(&poly, t, r).unwrap();
                assert!(jet_deviation_upto(&jet, &exact, r) <= tol.max(1e-12), "{method} n={n} t={t}");
                for k in n + 1..=r {
                    assert!(jet.order(k).iter().all(|&x| x.abs() <= tol), "{method} order {k}");
                }
            }
        }
    }
}

#[test]
fn random_curves_every_method() {
    let mut sampler = CurveSampler::new(12).quantized(1024);
    for _ in 0..20 {
        let n = sampler.integer(2, 10);
        let d = sampler.integer(1, 3);
        let rational = sampler.curve(n, d, true);
        let poly = RationalCurve::polynomial(rational.polygon().clone());
        let r = n.min(6);
        let rat = ExactDerivatives::new(&expand_curve(&rational), r);
        let pol = ExactDerivatives::new(&expand_curve(&poly), r);
        for i in 0..=20 {
            let t = i as f64 / 20.0;
            let tq = BigRational::from_float(t).unwrap();
            for method in Method::ALL {
                let (curve, oracle) = if method.polynomial_only() { (&poly, &pol) } else { (&rational, &rat) };
                let order = if matches!(method, Method::Floater | Method::FloaterFast) { 2 } else { r };
                let dev = jet_deviation_upto(&method.jet(curve, t, order).unwrap(), &oracle.jet_f64(&tq).unwrap(), order);
                assert!(dev <= 1e-8, "{method} n={n} t={t}: {dev}");
            }
        }
    }
}
