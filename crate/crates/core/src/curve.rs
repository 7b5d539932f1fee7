//! Curve and point types shared by every evaluation method.
//!
//! Control points are stored as one flat coordinate buffer with a fixed
//! stride (the dimension), so kernels can walk them without per-point
//! allocations. [`Point`] and [`Vector`] are the owned forms handed across
//! the public API.

use crate::error::{Error, Result};

/// An affine point in `E^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(pub Vec<f64>);

/// A displacement in `R^d` (derivative values, control vectors).
#[derive(Debug, Clone, PartialEq)]
pub struct Vector(pub Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Self {
        Point(coords)
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl Vector {
    pub fn new(comps: Vec<f64>) -> Self {
        Vector(comps)
    }

    pub fn zero(dim: usize) -> Self {
        Vector(vec![0.0; dim])
    }

    pub fn comps(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl From<Vec<f64>> for Point {
    fn from(v: Vec<f64>) -> Self {
        Point(v)
    }
}

impl<const D: usize> From<[f64; D]> for Point {
    fn from(v: [f64; D]) -> Self {
        Point(v.to_vec())
    }
}

/// The `n + 1` control points of a degree-`n` curve, stored flat.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlPolygon {
    dim: usize,
    coords: Vec<f64>,
}

impl ControlPolygon {
    /// Builds a polygon from a flat coordinate buffer with stride `dim`.
    pub fn from_flat(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if coords.is_empty() {
            return Err(Error::EmptyCurve);
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: coords.len() % dim,
            });
        }
        if let Some((index, &value)) = coords.iter().enumerate().find(|(_, c)| !c.is_finite()) {
            return Err(Error::NonFinite { index, value });
        }
        Ok(ControlPolygon { dim, coords })
    }

    pub fn new<P: Into<Point>>(points: impl IntoIterator<Item = P>) -> Result<Self> {
        let points: Vec<Point> = points.into_iter().map(Into::into).collect();
        let first = points.first().ok_or(Error::EmptyCurve)?;
        let dim = first.dim();
        let mut coords = Vec::with_capacity(points.len() * dim);
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            coords.extend_from_slice(p.coords());
        }
        Self::from_flat(dim, coords)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.len() - 1
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, k: usize) -> &[f64] {
        &self.coords[k * self.dim..(k + 1) * self.dim]
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.coords
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.dim)
    }

    pub fn to_points(&self) -> Vec<Point> {
        self.points().map(|p| Point(p.to_vec())).collect()
    }

    pub fn reversed(&self) -> Self {
        let mut coords = Vec::with_capacity(self.coords.len());
        for p in self.coords.chunks_exact(self.dim).rev() {
            coords.extend_from_slice(p);
        }
        ControlPolygon {
            dim: self.dim,
            coords,
        }
    }

    /// Applies `x -> m x + c` to every point, `m` given row-major as `dim x dim`.
    pub fn map_affine(&self, m: &[f64], c: &[f64]) -> Self {
        let d = self.dim;
        let mut coords = Vec::with_capacity(self.coords.len());
        for p in self.points() {
            for row in 0..d {
                let mut acc = c[row];
                for col in 0..d {
                    acc += m[row * d + col] * p[col];
                }
                coords.push(acc);
            }
        }
        ControlPolygon { dim: d, coords }
    }
}

/// A degree-`n` rational Bézier curve: control points with positive weights.
///
/// A polynomial curve is the special case with every weight equal to one.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalCurve {
    polygon: ControlPolygon,
    weights: Vec<f64>,
}

impl RationalCurve {
    pub fn new(polygon: ControlPolygon, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != polygon.len() {
            return Err(Error::LengthMismatch {
                expected: polygon.len(),
                found: weights.len(),
            });
        }
        check_weights(&weights)?;
        Ok(RationalCurve { polygon, weights })
    }

    pub fn from_points<P: Into<Point>>(
        points: impl IntoIterator<Item = P>,
        weights: Vec<f64>,
    ) -> Result<Self> {
        Self::new(ControlPolygon::new(points)?, weights)
    }

    pub fn polynomial(polygon: ControlPolygon) -> Self {
        let weights = vec![1.0; polygon.len()];
        RationalCurve { polygon, weights }
    }

    pub fn polygon(&self) -> &ControlPolygon {
        &self.polygon
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn degree(&self) -> usize {
        self.polygon.degree()
    }

    pub fn dim(&self) -> usize {
        self.polygon.dim()
    }

    /// True when all weights are equal, i.e. the curve is polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.weights.iter().all(|&w| w == self.weights[0])
    }
}

pub(crate) fn check_weights(weights: &[f64]) -> Result<()> {
    match weights
        .iter()
        .enumerate()
        .find(|(_, w)| !(w.is_finite() && **w > 0.0))
    {
        Some((index, &value)) => Err(Error::NonPositiveWeight { index, value }),
        None => Ok(()),
    }
}

pub(crate) fn check_parameter(t: f64) -> Result<()> {
    if (0.0..=1.0).contains(&t) {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange(t))
    }
}

/// The value of a curve at one parameter together with its derivatives
/// of orders `1..=r`.
///
/// Stored flat: order `j` occupies `data[j*dim..(j+1)*dim]`, order 0 being
/// the point itself.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeJet {
    dim: usize,
    data: Vec<f64>,
}

impl DerivativeJet {
    pub(crate) fn zeros(dim: usize, r: usize) -> Self {
        DerivativeJet {
            dim,
            data: vec![0.0; (r + 1) * dim],
        }
    }

    pub fn from_flat(dim: usize, data: Vec<f64>) -> Self {
        assert!(dim > 0 && data.len().is_multiple_of(dim) && !data.is_empty());
        DerivativeJet { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Highest derivative order held.
    pub fn max_order(&self) -> usize {
        self.data.len() / self.dim - 1
    }

    pub fn value(&self) -> &[f64] {
        &self.data[..self.dim]
    }

    /// Order `j` derivative; `order(0)` is the curve value.
    pub fn order(&self, j: usize) -> &[f64] {
        &self.data[j * self.dim..(j + 1) * self.dim]
    }

    pub(crate) fn order_mut(&mut self, j: usize) -> &mut [f64] {
        &mut self.data[j * self.dim..(j + 1) * self.dim]
    }

    pub fn value_point(&self) -> Point {
        Point(self.value().to_vec())
    }

    /// Derivative vectors of orders `1..=r`.
    pub fn orders(&self) -> Vec<Vector> {
        (1..=self.max_order())
            .map(|j| Vector(self.order(j).to_vec()))
            .collect()
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.data
    }

    /// Flips the sign of every odd order, mapping a jet of the reversed
    /// curve at `1 - t` onto the original curve at `t`.
    pub(crate) fn flip_odd_orders(&mut self) {
        for j in (1..=self.max_order()).step_by(2) {
            for c in self.order_mut(j) {
                *c = -*c;
            }
        }
    }

    /// Keeps orders `0..=r`.
    pub fn truncated(&self, r: usize) -> Self {
        DerivativeJet {
            dim: self.dim,
            data: self.data[..(r + 1) * self.dim].to_vec(),
        }
    }
}
