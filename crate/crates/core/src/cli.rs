//! Command-line front end: `eval`, `compare` and `bench`.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand};

use crate::bench::{self, parameter_grid, BenchConfig};
use crate::curve::RationalCurve;
use crate::curve_file::CurveFile;
use crate::method::Method;
use crate::tolerance::jet_deviation_upto;

#[derive(Debug, Parser)]
#[command(name = "bezjet", version, about = "Points and derivatives of Bezier curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the value and derivatives 1..=r of one curve at t, one line per order.
    Eval {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long, default_value = "leibniz")]
        method: Method,
    },
    /// Largest pairwise deviation between methods over a set of curves.
    Compare {
        /// Glob pattern selecting curve files.
        #[arg(long)]
        curves: String,
        #[arg(long)]
        r: usize,
        /// Number of equally spaced parameters, ends included.
        #[arg(long, default_value_t = 101)]
        grid: usize,
        /// Methods to compare; defaults to every method that applies.
        #[arg(long, value_delimiter = ',')]
        methods: Vec<Method>,
    },
    /// Time methods on random curves and write CSV rows.
    Bench {
        #[arg(long = "n", value_delimiter = ',', required = true)]
        degrees: Vec<usize>,
        #[arg(long = "r", value_delimiter = ',', required = true)]
        orders: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Curves per set.
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 100)]
        sets: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Seconds after which a cell is abandoned.
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long, value_delimiter = ',')]
        methods: Vec<Method>,
    },
}

impl clap::ValueEnum for Method {
    fn value_variants<'a>() -> &'a [Self] {
        &Method::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.name()))
    }
}

#[derive(Debug)]
enum Failure {
    /// Exit status 2.
    Usage(String),
    /// Exit status 1.
    Runtime(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn load(path: &PathBuf) -> Result<RationalCurve, Failure> {
    CurveFile::read(path)
        .map(|f| f.to_curve())
        .map_err(|e| Failure::Runtime(format!("parse error: {e}")))
}

fn check_parameter(t: f64) -> Result<(), Failure> {
    if (0.0..=1.0).contains(&t) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("--t must lie in [0, 1], got {t}")))
    }
}

/// Seventeen significant digits, enough to read back the same `f64`.
fn fmt_number(x: f64) -> String {
    format!("{x:.16e}")
}

fn eval(out: &mut dyn Write, path: &PathBuf, t: f64, r: usize, method: Method) -> Result<(), Failure> {
    check_parameter(t)?;
    let curve = load(path)?;
    method
        .check(curve.degree(), curve.is_polynomial(), r)
        .map_err(|e| Failure::Usage(format!("{method}: {e}")))?;
    let jet = method.jet(&curve, t, r).map_err(|e| Failure::Runtime(e.to_string()))?;
    for k in 0..=r {
        let line: Vec<String> = jet.order(k).iter().map(|&x| fmt_number(x)).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(())
}

fn compare(out: &mut dyn Write, pattern: &str, r: usize, grid: usize, methods: &[Method]) -> Result<(), Failure> {
    let paths: Vec<PathBuf> = glob::glob(pattern)
        .map_err(|e| Failure::Usage(format!("bad pattern: {e}")))?
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Runtime(e.to_string()))?;
    if paths.is_empty() {
        return Err(Failure::Usage(format!("no curve files match `{pattern}`")));
    }
    let curves = paths.iter().map(load).collect::<Result<Vec<_>, _>>()?;
    let candidates: &[Method] = if methods.is_empty() { &Method::ALL } else { methods };
    let mut chosen = Vec::new();
    for &m in candidates {
        let ok = curves.iter().all(|c| m.applicable(c, r));
        if ok && !chosen.contains(&m) {
            chosen.push(m);
        } else if !methods.is_empty() && !ok {
            return Err(Failure::Usage(format!("{m} does not apply to every curve at r = {r}")));
        }
    }
    if chosen.len() < 2 {
        return Err(Failure::Usage(
            "compare needs at least two applicable methods".to_string(),
        ));
    }
    if grid == 0 {
        return Err(Failure::Usage("--grid must be positive".to_string()));
    }
    let ts = parameter_grid(grid);
    // worst[(a, b)] = (deviation, t)
    let pairs: Vec<(usize, usize)> = (0..chosen.len())
        .flat_map(|a| (a + 1..chosen.len()).map(move |b| (a, b)))
        .collect();
    let mut worst = vec![(0.0f64, ts[0]); pairs.len()];
    for curve in &curves {
        for &t in &ts {
            let jets = chosen
                .iter()
                .map(|m| m.jet(curve, t, r))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::Runtime(e.to_string()))?;
            for (slot, &(a, b)) in worst.iter_mut().zip(&pairs) {
                let dev = jet_deviation_upto(&jets[a], &jets[b], r);
                if dev > slot.0 || dev.is_nan() {
                    *slot = (dev, t);
                }
            }
        }
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["method_a", "method_b", "max_scaled_dev", "argmax_t"])
        .map_err(|e| Failure::Runtime(e.to_string()))?;
    for (&(a, b), &(dev, t)) in pairs.iter().zip(&worst) {
        w.write_record([chosen[a].name(), chosen[b].name(), &format!("{dev:e}"), &format!("{t}")])
            .map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

fn run_command(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Eval { curve, t, r, method } => eval(out, &curve, t, r, method),
        Command::Compare {
            curves,
            r,
            grid,
            methods,
        } => compare(out, &curves, r, grid, &methods),
        Command::Bench {
            degrees,
            orders,
            d,
            m,
            sets,
            seed,
            out: path,
            timeout,
            methods,
        } => {
            if d == 0 || m == 0 || sets == 0 {
                return Err(Failure::Usage("--d, --m and --sets must be positive".to_string()));
            }
            let timeout = match timeout {
                Some(s) if !(s.is_finite() && s >= 0.0) => {
                    return Err(Failure::Usage(format!("--timeout must be non-negative, got {s}")))
                }
                other => other.map(Duration::from_secs_f64),
            };
            let config = BenchConfig {
                degrees,
                orders,
                d,
                m,
                sets,
                seed,
                methods: if methods.is_empty() { Method::ALL.to_vec() } else { methods },
                timeout,
                ..BenchConfig::default()
            };
            let mut skipped = Vec::new();
            let records = bench::run(&config, |n, r, method| skipped.push((n, r, method)))
                .map_err(|e| Failure::Runtime(e.to_string()))?;
            for (n, r, method) in skipped {
                writeln!(err, "n={n} r={r} {method}: max. time exceeded")?;
            }
            let file = File::create(&path).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
            bench::write_csv(&records, file).map_err(|e| Failure::Runtime(e.to_string()))?;
            Ok(())
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status: 0 on success, 1 on runtime and parse
/// failures, 2 on usage errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    match run_command(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}
