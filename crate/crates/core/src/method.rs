//! One name per evaluation method, with a uniform calling convention.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::casteljau::poly_derivatives_dc;
use crate::curve::{DerivativeJet, RationalCurve};
use crate::error::{Error, Result};
use crate::poly::{derivatives_kept_degree, derivatives_reduced};
use crate::rational::{floater_jet2_baseline, floater_jet2_fast, leibniz_jet, scheme_jet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Repeated differences of a de Casteljau column (polynomial).
    Casteljau,
    /// Reduced-degree control vectors (polynomial).
    Reduced,
    /// Kept-degree control vectors (polynomial).
    Kept,
    /// Closed forms on the full rational de Casteljau tableau, orders <= 2.
    Floater,
    /// Same closed forms with column `n - 2` from the geometric scheme.
    FloaterFast,
    /// Differentiated geometric scheme.
    Scheme,
    /// Leibniz rule on the weight polynomial.
    Leibniz,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Casteljau,
        Method::Reduced,
        Method::Kept,
        Method::Floater,
        Method::FloaterFast,
        Method::Scheme,
        Method::Leibniz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Casteljau => "casteljau",
            Method::Reduced => "reduced",
            Method::Kept => "kept",
            Method::Floater => "floater",
            Method::FloaterFast => "floater-fast",
            Method::Scheme => "scheme",
            Method::Leibniz => "leibniz",
        }
    }

    /// Whether the method only handles polynomial curves.
    pub fn polynomial_only(self) -> bool {
        matches!(self, Method::Casteljau | Method::Reduced | Method::Kept)
    }

    /// Checks that the method can produce orders `0..=r` for a curve of
    /// degree `n`, polynomial or not.
    pub fn check(self, n: usize, polynomial: bool, r: usize) -> Result<()> {
        if self.polynomial_only() && !polynomial {
            return Err(Error::RequiresPolynomial { method: self.name() });
        }
        match self {
            Method::Casteljau if r > n => Err(Error::OrderExceedsDegree { order: r, degree: n }),
            Method::Floater | Method::FloaterFast if r > 2 => {
                Err(Error::UnsupportedOrder { order: r, max: 2 })
            }
            _ => Ok(()),
        }
    }

    pub fn applicable(self, curve: &RationalCurve, r: usize) -> bool {
        self.check(curve.degree(), curve.is_polynomial(), r).is_ok()
    }

    /// Value and derivatives `1..=r` at `t`.
    pub fn jet(self, curve: &RationalCurve, t: f64, r: usize) -> Result<DerivativeJet> {
        self.check(curve.degree(), curve.is_polynomial(), r)?;
        let poly = curve.polygon();
        match self {
            Method::Casteljau => poly_derivatives_dc(poly, t, r),
            Method::Reduced => derivatives_reduced(poly, t, r),
            Method::Kept => derivatives_kept_degree(poly, t, r),
            Method::Floater => Ok(floater_jet2_baseline(curve, t)?.truncated(r)),
            Method::FloaterFast => Ok(floater_jet2_fast(curve, t)?.truncated(r)),
            Method::Scheme => scheme_jet(curve, t, r),
            Method::Leibniz => leibniz_jet(curve, t, r),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownMethod(pub String);

impl fmt::Display for UnknownMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = Method::ALL.iter().map(|m| m.name()).collect();
        write!(f, "unknown method `{}` (expected one of {})", self.0, names.join(", "))
    }
}

impl std::error::Error for UnknownMethod {}

impl FromStr for Method {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| UnknownMethod(s.to_string()))
    }
}
