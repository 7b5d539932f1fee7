//! Operation counts, with the `instrument` feature that the test build
//! turns on.

use bezjet::bench::CurveSampler;
use bezjet::counters;
use bezjet::geometric::{eval_rational, h_values};
use bezjet::poly::{derivatives_kept_degree, derivatives_reduced};

fn count(f: impl FnOnce()) -> u64 {
    counters::reset();
    f();
    counters::h_values_computed()
}

#[test]
fn counting_is_enabled() {
    assert!(counters::ENABLED);
}

#[test]
fn plain_evaluation_computes_n_plus_one() {
    let mut sampler = CurveSampler::new(1);
    for n in [0, 1, 7, 30] {
        let c = sampler.curve(n, 2, true);
        assert_eq!(count(|| drop(eval_rational(&c, 0.4).unwrap())), n as u64 + 1);
        assert_eq!(count(|| drop(h_values(c.weights(), 0.4).unwrap())), n as u64 + 1);
    }
}

#[test]
fn kept_degree_is_independent_of_r() {
    let mut sampler = CurveSampler::new(2);
    for n in [5usize, 10, 20] {
        let p = sampler.polygon(n, 3);
        for r in 0..=n + 2 {
            assert_eq!(count(|| drop(derivatives_kept_degree(&p, 0.6, r).unwrap())), n as u64 + 1);
        }
    }
}

#[test]
fn reduced_degree_sums_the_levels() {
    let mut sampler = CurveSampler::new(3);
    for n in [5usize, 10, 20] {
        let p = sampler.polygon(n, 1);
        for r in 0..=n {
            let want = ((r + 1) * (2 * n + 2 - r) / 2) as u64;
            assert_eq!(count(|| drop(derivatives_reduced(&p, 0.6, r).unwrap())), want, "n={n} r={r}");
        }
        // Orders above the degree are zero and cost nothing extra.
        let full = ((n + 1) * (n + 2) / 2) as u64;
        assert_eq!(count(|| drop(derivatives_reduced(&p, 0.6, n + 3).unwrap())), full);
    }
}
