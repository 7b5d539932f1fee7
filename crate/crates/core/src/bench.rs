//! Reproducible random curves and a wall-clock benchmark harness.
//!
//! Curves are drawn with ChaCha8 seeded through `seed_from_u64`; a uniform
//! `f64` in `[0, 1)` is `(next_u64() >> 11) * 2^-53`. Points are uniform in
//! `[-1, 1]^d` and weights uniform in `[0.01, 2]`.
//!
//! A benchmark cell evaluates `sets * m` curves at every parameter of the
//! grid `t_i = i / 500` and reports the total time of the whole loop. One
//! untimed pass over the first set warms caches first.

use std::hint::black_box;
use std::io;
use std::time::{Duration, Instant};

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::casteljau::poly_derivatives_dc;
use crate::curve::{ControlPolygon, RationalCurve};
use crate::error::Result;
use crate::method::Method;
use crate::poly::{derivatives_batch, derivatives_kept_degree, derivatives_reduced, PolyMethod};

/// Number of parameters per curve in every benchmark.
pub const GRID_POINTS: usize = 501;

pub const WEIGHT_MIN: f64 = 0.01;
pub const WEIGHT_MAX: f64 = 2.0;

/// `count` equally spaced parameters `i / (count - 1)`, both ends included.
pub fn parameter_grid(count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..count).map(|i| i as f64 / (count - 1) as f64).collect(),
    }
}

/// Deterministic source of random curves.
#[derive(Debug, Clone)]
pub struct CurveSampler {
    rng: ChaCha8Rng,
    /// When set, every coordinate and weight is rounded to a multiple of
    /// `1 / quantum`.
    quantum: Option<f64>,
}

impl CurveSampler {
    pub fn new(seed: u64) -> Self {
        CurveSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            quantum: None,
        }
    }

    /// Rounds all generated values to multiples of `1 / quantum`. With a
    /// power of two this keeps exact arithmetic on the data cheap.
    pub fn quantized(mut self, quantum: u32) -> Self {
        self.quantum = Some(quantum as f64);
        self
    }

    /// Uniform in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`, before quantization.
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        let x = lo + (hi - lo) * self.uniform();
        match self.quantum {
            Some(q) => ((x * q).round() / q).clamp(lo, hi),
            None => x,
        }
    }

    /// Below `n` inclusive, uniform over `lo..=hi`.
    pub fn integer(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.rng.next_u64() % (hi - lo + 1) as u64) as usize
    }

    pub fn polygon(&mut self, n: usize, d: usize) -> ControlPolygon {
        let coords = (0..(n + 1) * d).map(|_| self.range(-1.0, 1.0)).collect();
        ControlPolygon::from_flat(d, coords).expect("finite coordinates")
    }

    pub fn weights(&mut self, n: usize) -> Vec<f64> {
        (0..=n).map(|_| self.range(WEIGHT_MIN, WEIGHT_MAX)).collect()
    }

    /// Points first, then weights; a polynomial curve skips the weights.
    pub fn curve(&mut self, n: usize, d: usize, rational: bool) -> RationalCurve {
        let poly = self.polygon(n, d);
        if rational {
            let w = self.weights(n);
            RationalCurve::new(poly, w).expect("weights are positive")
        } else {
            RationalCurve::polynomial(poly)
        }
    }
}

/// One benchmark result row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub n: usize,
    pub r: usize,
    pub d: usize,
    pub m: usize,
    pub method: Method,
    pub seconds: f64,
    pub evaluations: u64,
}

pub fn write_csv<W: io::Write>(records: &[BenchRecord], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for rec in records {
        w.serialize(rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: io::Read>(input: R) -> csv::Result<Vec<BenchRecord>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub degrees: Vec<usize>,
    pub orders: Vec<usize>,
    pub d: usize,
    /// Curves per set.
    pub m: usize,
    pub sets: usize,
    pub seed: u64,
    pub methods: Vec<Method>,
    /// A cell running longer than this is abandoned.
    pub timeout: Option<Duration>,
    pub grid: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            degrees: vec![20],
            orders: vec![2],
            d: 2,
            m: 1,
            sets: 100,
            seed: 1,
            methods: Method::ALL.to_vec(),
            timeout: None,
            grid: GRID_POINTS,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CellOutcome {
    Done(BenchRecord),
    /// The cell exceeded the configured timeout.
    TimedOut { n: usize, r: usize, method: Method },
    /// The method cannot produce the requested orders.
    NotApplicable,
}

/// The curve sets of one `(n, d)` cell: `sets` groups of `m` curves.
///
/// Polynomial methods receive the same control points without weights.
#[derive(Debug, Clone)]
pub struct CurveSets {
    rational: Vec<Vec<RationalCurve>>,
}

impl CurveSets {
    pub fn generate(seed: u64, n: usize, d: usize, m: usize, sets: usize) -> Self {
        let mut sampler = CurveSampler::new(seed);
        let rational = (0..sets)
            .map(|_| (0..m).map(|_| sampler.curve(n, d, true)).collect())
            .collect();
        CurveSets { rational }
    }

    pub fn rational(&self) -> &[Vec<RationalCurve>] {
        &self.rational
    }

    pub fn polygons(&self) -> Vec<Vec<ControlPolygon>> {
        self.rational
            .iter()
            .map(|set| set.iter().map(|c| c.polygon().clone()).collect())
            .collect()
    }
}

enum Workload {
    Poly(Vec<Vec<ControlPolygon>>),
    Rational(Vec<Vec<RationalCurve>>),
}

fn run_set(method: Method, work: &Workload, set: usize, t: f64, r: usize) -> Result<()> {
    match work {
        Workload::Poly(sets) => {
            let curves = &sets[set];
            let batch = match method {
                Method::Reduced => Some(PolyMethod::Reduced),
                Method::Kept => Some(PolyMethod::KeptDegree),
                _ => None,
            };
            match batch {
                Some(pm) if curves.len() > 1 => {
                    black_box(derivatives_batch(black_box(curves), t, r, pm)?);
                }
                _ => {
                    for c in curves {
                        let jet = match method {
                            Method::Casteljau => poly_derivatives_dc(black_box(c), t, r)?,
                            Method::Reduced => derivatives_reduced(black_box(c), t, r)?,
                            _ => derivatives_kept_degree(black_box(c), t, r)?,
                        };
                        black_box(jet);
                    }
                }
            }
        }
        Workload::Rational(sets) => {
            for c in &sets[set] {
                black_box(method.jet(black_box(c), t, r)?);
            }
        }
    }
    Ok(())
}

/// Times one method on pre-generated curves.
pub fn time_method(
    sets: &CurveSets,
    method: Method,
    r: usize,
    grid: usize,
    timeout: Option<Duration>,
) -> Result<CellOutcome> {
    let Some(first) = sets.rational.first().and_then(|s| s.first()) else {
        return Ok(CellOutcome::NotApplicable);
    };
    let (n, d) = (first.degree(), first.dim());
    if method.check(n, method.polynomial_only(), r).is_err() {
        return Ok(CellOutcome::NotApplicable);
    }
    let work = if method.polynomial_only() {
        Workload::Poly(sets.polygons())
    } else {
        Workload::Rational(sets.rational.clone())
    };
    let ts = parameter_grid(grid);
    for &t in &ts {
        run_set(method, &work, 0, t, r)?;
    }
    let m = sets.rational[0].len();
    let start = Instant::now();
    for set in 0..sets.rational.len() {
        for &t in &ts {
            run_set(method, &work, set, t, r)?;
        }
        if timeout.is_some_and(|limit| start.elapsed() > limit) {
            return Ok(CellOutcome::TimedOut { n, r, method });
        }
    }
    let seconds = start.elapsed().as_secs_f64();
    Ok(CellOutcome::Done(BenchRecord {
        n,
        r,
        d,
        m,
        method,
        seconds,
        evaluations: (sets.rational.len() * m * ts.len()) as u64,
    }))
}

/// Runs every `(n, r, method)` cell. Cells that time out are reported to
/// `on_timeout` and produce no record.
pub fn run(config: &BenchConfig, mut on_timeout: impl FnMut(usize, usize, Method)) -> Result<Vec<BenchRecord>> {
    let mut records = Vec::new();
    for &n in &config.degrees {
        let sets = CurveSets::generate(config.seed, n, config.d, config.m, config.sets);
        for &r in &config.orders {
            for &method in &config.methods {
                match time_method(&sets, method, r, config.grid, config.timeout)? {
                    CellOutcome::Done(rec) => records.push(rec),
                    CellOutcome::TimedOut { n, r, method } => on_timeout(n, r, method),
                    CellOutcome::NotApplicable => {}
                }
            }
        }
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_endpoints() {
        let g = parameter_grid(GRID_POINTS);
        assert_eq!(g.len(), 501);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[250], 0.5);
        assert_eq!(g[500], 1.0);
    }

    #[test]
    fn sampler_is_deterministic_and_in_range() {
        let mut a = CurveSampler::new(7);
        let mut b = CurveSampler::new(7);
        for _ in 0..100 {
            let ca = a.curve(5, 3, true);
            assert_eq!(ca, b.curve(5, 3, true));
            assert!(ca.polygon().as_flat().iter().all(|x| (-1.0..=1.0).contains(x)));
            assert!(ca.weights().iter().all(|w| (WEIGHT_MIN..=WEIGHT_MAX).contains(w)));
        }
    }

    #[test]
    fn quantized_values_are_dyadic() {
        let mut s = CurveSampler::new(3).quantized(1024);
        let c = s.curve(8, 2, true);
        for x in c.polygon().as_flat().iter().chain(c.weights()) {
            assert_eq!((x * 1024.0).fract(), 0.0);
        }
    }

    #[test]
    fn csv_round_trip() {
        let recs = vec![
            BenchRecord {
                n: 20,
                r: 2,
                d: 2,
                m: 1,
                method: Method::FloaterFast,
                seconds: 0.123456789012345,
                evaluations: 501,
            },
            BenchRecord {
                n: 300,
                r: 1,
                d: 1,
                m: 10,
                method: Method::Kept,
                seconds: 1e-7,
                evaluations: 5010,
            },
        ];
        let mut buf = Vec::new();
        write_csv(&recs, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("n,r,d,m,method,seconds,evaluations\n"));
        assert_eq!(read_csv(buf.as_slice()).unwrap(), recs);
    }

    #[test]
    fn small_run_produces_rows() {
        let config = BenchConfig {
            degrees: vec![4],
            orders: vec![1, 3],
            sets: 2,
            grid: 11,
            ..BenchConfig::default()
        };
        let recs = run(&config, |_, _, _| panic!("no timeout configured")).unwrap();
        // r = 3 drops both Floater variants.
        assert_eq!(recs.len(), 7 + 5);
        assert!(recs.iter().all(|r| r.evaluations == 22 && r.seconds >= 0.0));
    }

    #[test]
    fn zero_timeout_skips_cells() {
        let config = BenchConfig {
            degrees: vec![3],
            methods: vec![Method::Leibniz],
            timeout: Some(Duration::ZERO),
            grid: 5,
            sets: 2,
            ..BenchConfig::default()
        };
        let mut skipped = Vec::new();
        let recs = run(&config, |n, r, m| skipped.push((n, r, m))).unwrap();
        assert!(recs.is_empty());
        assert_eq!(skipped, vec![(3, 2, Method::Leibniz)]);
    }
}
