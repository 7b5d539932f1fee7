//! Reading and writing curves as text.
//!
//! The line format is meant to be written by hand:
//!
//! ```text
//! # quarter of the unit circle
//! degree 2
//! dimension 2
//! weights 1 0.7071067811865476 1
//! point 1 0
//! point 1 1
//! point 0 1
//! ```
//!
//! Blank lines and `#` comments are ignored, keywords may come in any
//! order except that points are listed in control-point order, and the
//! `weights` line is optional (all ones when absent). A file whose first
//! non-blank character is `{` is read as JSON instead:
//!
//! ```text
//! {"degree": 2, "dimension": 2, "points": [[1, 0], [1, 1], [0, 1]], "weights": [1, 0.7071, 1]}
//! ```

use std::fmt::{self, Write as _};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::curve::{ControlPolygon, RationalCurve};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveFile {
    pub degree: usize,
    pub dimension: usize,
    pub points: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
}

/// A malformed curve file, with the 1-based line where the problem was
/// found when there is one.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line: Some(line),
            message: message.into(),
        }
    }

    fn whole(message: impl Into<String>) -> Self {
        ParseError {
            line: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

fn numbers(line: usize, fields: &[&str]) -> Result<Vec<f64>, ParseError> {
    fields
        .iter()
        .map(|s| {
            s.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| ParseError::at(line, format!("`{s}` is not a finite number")))
        })
        .collect()
}

fn count(line: usize, keyword: &str, fields: &[&str]) -> Result<usize, ParseError> {
    match fields {
        [v] => v
            .parse()
            .map_err(|_| ParseError::at(line, format!("`{keyword}` expects a non-negative integer, got `{v}`"))),
        _ => Err(ParseError::at(line, format!("`{keyword}` expects exactly one value"))),
    }
}

impl CurveFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_lines(text)
        }
    }

    fn parse_json(text: &str) -> Result<Self, ParseError> {
        let file: CurveFile =
            serde_json::from_str(text).map_err(|e| ParseError::at(e.line(), e.to_string()))?;
        file.validate(None)?;
        Ok(file)
    }

    fn parse_lines(text: &str) -> Result<Self, ParseError> {
        let mut degree = None;
        let mut dimension = None;
        let mut weights = None;
        let mut points = Vec::new();
        // Line of the first point, for shape errors.
        let mut point_lines = Vec::new();
        let mut weight_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            let mut fields = content.split_whitespace();
            let Some(keyword) = fields.next() else {
                continue;
            };
            let rest: Vec<&str> = fields.collect();
            match keyword {
                "degree" if degree.is_some() => return Err(ParseError::at(line, "`degree` given twice")),
                "degree" => degree = Some(count(line, keyword, &rest)?),
                "dimension" if dimension.is_some() => {
                    return Err(ParseError::at(line, "`dimension` given twice"))
                }
                "dimension" => dimension = Some(count(line, keyword, &rest)?),
                "weights" if weights.is_some() => return Err(ParseError::at(line, "`weights` given twice")),
                "weights" => {
                    weights = Some(numbers(line, &rest)?);
                    weight_line = line;
                }
                "point" => {
                    points.push(numbers(line, &rest)?);
                    point_lines.push(line);
                }
                other => return Err(ParseError::at(line, format!("unknown keyword `{other}`"))),
            }
        }
        let last = text.lines().count().max(1);
        let degree = degree.ok_or_else(|| ParseError::at(last, "missing `degree` line"))?;
        let dimension = dimension.ok_or_else(|| ParseError::at(last, "missing `dimension` line"))?;
        let file = CurveFile {
            degree,
            dimension,
            points,
            weights,
        };
        file.validate(Some((&point_lines, weight_line, last)))?;
        Ok(file)
    }

    /// Shape and positivity checks. `lines` maps points and weights back
    /// to source lines for the line format.
    fn validate(&self, lines: Option<(&[usize], usize, usize)>) -> Result<(), ParseError> {
        let err = |line: Option<usize>, msg: String| ParseError { line, message: msg };
        if self.dimension == 0 {
            return Err(err(None, "dimension must be at least 1".into()));
        }
        if self.points.len() != self.degree + 1 {
            return Err(err(
                lines.map(|l| l.2),
                format!(
                    "degree {} needs {} points, found {}",
                    self.degree,
                    self.degree + 1,
                    self.points.len()
                ),
            ));
        }
        for (k, p) in self.points.iter().enumerate() {
            if p.len() != self.dimension {
                return Err(err(
                    lines.map(|l| l.0[k]),
                    format!("point {k} has {} coordinates, expected {}", p.len(), self.dimension),
                ));
            }
            if let Some(x) = p.iter().find(|x| !x.is_finite()) {
                return Err(err(lines.map(|l| l.0[k]), format!("point {k} has non-finite coordinate {x}")));
            }
        }
        if let Some(w) = &self.weights {
            let line = lines.map(|l| l.1);
            if w.len() != self.degree + 1 {
                return Err(err(
                    line,
                    format!("expected {} weights, found {}", self.degree + 1, w.len()),
                ));
            }
            if let Some((k, x)) = w.iter().enumerate().find(|(_, x)| !(x.is_finite() && **x > 0.0)) {
                return Err(err(line, format!("weight {k} is {x}, weights must be positive")));
            }
        }
        Ok(())
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self, ParseError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| ParseError::whole(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| ParseError {
            message: format!("{}: {}", path.display(), e.message),
            ..e
        })
    }

    pub fn from_curve(curve: &RationalCurve) -> Self {
        CurveFile {
            degree: curve.degree(),
            dimension: curve.dim(),
            points: curve.polygon().points().map(<[f64]>::to_vec).collect(),
            weights: (!curve.weights().iter().all(|&w| w == 1.0)).then(|| curve.weights().to_vec()),
        }
    }

    pub fn to_curve(&self) -> RationalCurve {
        let poly = ControlPolygon::from_flat(self.dimension, self.points.concat()).expect("validated shape");
        match &self.weights {
            Some(w) => RationalCurve::new(poly, w.clone()).expect("validated weights"),
            None => RationalCurve::polynomial(poly),
        }
    }

    /// The line format; numbers are written so that they read back exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let join = |v: &[f64]| v.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>().join(" ");
        writeln!(out, "degree {}", self.degree).unwrap();
        writeln!(out, "dimension {}", self.dimension).unwrap();
        if let Some(w) = &self.weights {
            writeln!(out, "weights {}", join(w)).unwrap();
        }
        for p in &self.points {
            writeln!(out, "point {}", join(p)).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CIRCLE: &str = "\
# quarter circle
degree 2
dimension 2
weights 1 0.7071067811865476 1

point 1 0   # start
point 1 1
point 0 1
";

    #[test]
    fn reads_line_format() {
        let f = CurveFile::parse(CIRCLE).unwrap();
        assert_eq!(f.degree, 2);
        assert_eq!(f.points[1], vec![1.0, 1.0]);
        let c = f.to_curve();
        assert_eq!(c.weights(), &[1.0, std::f64::consts::FRAC_1_SQRT_2, 1.0]);
    }

    #[test]
    fn missing_weights_mean_polynomial() {
        let f = CurveFile::parse("degree 1\ndimension 1\npoint 0\npoint 2\n").unwrap();
        assert!(f.to_curve().is_polynomial());
        assert_eq!(f.to_curve().weights(), &[1.0, 1.0]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = CurveFile::parse("degree 1\ndimension 2\npoint 0 0\npoint 1 x\n").unwrap_err();
        assert_eq!(e.line, Some(4));
        let e = CurveFile::parse("degree 1\ndimension 2\npoint 0 0\npoint 1\n").unwrap_err();
        assert_eq!(e.line, Some(4));
        let e = CurveFile::parse("degree 1\ndimension 1\nweights 1 -1\npoint 0\npoint 1\n").unwrap_err();
        assert_eq!(e.line, Some(3));
        let e = CurveFile::parse("degree 2\ndimension 1\npoint 0\npoint 1\n").unwrap_err();
        assert_eq!(e.line, Some(4));
        let e = CurveFile::parse("degree 2\nsize 1\n").unwrap_err();
        assert_eq!(e.to_string(), "line 2: unknown keyword `size`");
    }

    #[test]
    fn json_alternative() {
        let f = CurveFile::parse(r#"{"degree": 1, "dimension": 2, "points": [[0, 0], [1, 2]]}"#).unwrap();
        assert_eq!(f.points, vec![vec![0.0, 0.0], vec![1.0, 2.0]]);
        let e = CurveFile::parse("{\n\"degree\": 1,\n\"dimension\": oops}").unwrap_err();
        assert_eq!(e.line, Some(3));
    }

    #[test]
    fn text_round_trip() {
        let f = CurveFile::parse(CIRCLE).unwrap();
        assert_eq!(CurveFile::parse(&f.to_text()).unwrap(), f);
        assert_eq!(CurveFile::from_curve(&f.to_curve()), f);
    }
}
