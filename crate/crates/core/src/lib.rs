//! Value and derivative evaluation for polynomial and rational Bézier
//! curves in linear time.
//!
//! The core is a geometric evaluation scheme that replaces the quadratic
//! de Casteljau algorithm by `n` convex combinations of two points. On top
//! of it the crate provides derivatives of any order for polynomial curves
//! ([`poly`]) and three methods for rational curves ([`rational`]), an
//! exact rational-arithmetic oracle ([`exact`]) to check them against, and
//! a small benchmark harness ([`bench`]).

pub mod bench;
pub mod bernstein;
pub mod casteljau;
pub mod cli;
pub mod counters;
pub mod curve;
pub mod curve_file;
pub mod error;
pub mod exact;
pub mod geometric;
pub mod method;
pub mod poly;
pub mod rational;
pub mod tolerance;

pub use curve::{ControlPolygon, DerivativeJet, Point, RationalCurve, Vector};
pub use error::{Error, Result};
pub use method::Method;
