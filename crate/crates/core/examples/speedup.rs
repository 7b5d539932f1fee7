//! Small timing runs in the shape of the benchmark tables. Build with
//! `--release`.
//!
//! `cargo run --release --example speedup -- 200`

use bezjet::bench::{self, BenchConfig};
use bezjet::Method;

fn main() {
    let sets: usize = std::env::args().nth(1).map_or(50, |s| s.parse().expect("set count"));
    let cells = [
        (vec![20, 100, 300], vec![1, 2], 2, vec![Method::Casteljau, Method::Reduced, Method::Kept]),
        (vec![300], vec![1], 1, vec![Method::Reduced, Method::Kept]),
        (vec![100], vec![2], 2, vec![Method::Floater, Method::FloaterFast, Method::Scheme, Method::Leibniz]),
        (vec![50], vec![10], 2, vec![Method::Scheme, Method::Leibniz]),
    ];
    println!("{:>4} {:>3} {:>2} {:<13} {:>9} {:>10}", "n", "r", "d", "method", "seconds", "us/eval");
    for (degrees, orders, d, methods) in cells {
        let config = BenchConfig {
            degrees,
            orders,
            d,
            sets,
            seed: 1,
            methods,
            ..BenchConfig::default()
        };
        let records = bench::run(&config, |n, r, m| println!("n={n} r={r} {m}: max. time exceeded")).unwrap();
        for rec in records {
            let per = rec.seconds / rec.evaluations as f64 * 1e6;
            println!("{:>4} {:>3} {:>2} {:<13} {:>9.4} {:>10.3}", rec.n, rec.r, rec.d, rec.method.name(), rec.seconds, per);
        }
    }
}
