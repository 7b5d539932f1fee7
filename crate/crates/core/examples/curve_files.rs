//! Writing a curve to the text format, reading it back, and running the
//! command-line front end in-process.

use bezjet::bench::CurveSampler;
use bezjet::curve_file::CurveFile;

fn main() {
    let curve = CurveSampler::new(5).quantized(64).curve(3, 2, true);
    let file = CurveFile::from_curve(&curve);
    let text = file.to_text();
    print!("{text}");
    assert_eq!(CurveFile::parse(&text).unwrap().to_curve(), curve);

    let err = CurveFile::parse("degree 1\ndimension 2\npoint 0 0\npoint 1\n").unwrap_err();
    println!("malformed input: {err}");

    let dir = std::env::temp_dir().join(format!("bezjet-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cubic.txt");
    std::fs::write(&path, text).unwrap();
    let args = ["bezjet", "eval", "--curve", path.to_str().unwrap(), "--t", "0.5", "--r", "2", "--method", "leibniz"];
    let code = bezjet::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
    std::fs::remove_dir_all(&dir).ok();
    std::process::exit(code);
}
