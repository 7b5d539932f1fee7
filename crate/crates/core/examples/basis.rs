//! Bernstein basis values and derivative rows at one parameter.
//!
//! `cargo run --example basis -- 5 0.3`

use bezjet::bernstein::{bernstein_all, bernstein_deriv_table, binomial_table};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(4, |s| s.parse().expect("degree"));
    let t: f64 = args.next().map_or(0.25, |s| s.parse().expect("parameter"));

    let values = bernstein_all(n, t);
    println!("B^{n}_i({t}) = {values:.6?}");
    println!("sum = {}", values.iter().sum::<f64>());

    let table = bernstein_deriv_table(n, t, n.min(3));
    for (k, row) in table.rows().enumerate().skip(1) {
        let sum: f64 = row.iter().sum();
        println!("d^{k}: {row:.4?}  (sum {sum:.1e})");
    }

    let binom = binomial_table(n).expect("fits in u128");
    println!("C({n}, .) = {:?}", binom.row(n));
}
