//! Exact reference jets in arbitrary-precision rational arithmetic.
//!
//! The curve is expanded into the monomial basis, differentiated with the
//! quotient rule and evaluated at a rational parameter without any
//! rounding; only the final result is rounded to `f64`. None of this shares
//! code or algebra with the fast methods, which is the point: it is slow
//! but independent.
//!
//! Every finite `f64` is a dyadic rational, so curves built from floating
//! point data are converted exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::curve::{DerivativeJet, RationalCurve};
use crate::error::{Error, Result};

/// Polynomial with exact rational coefficients, ascending powers of `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPolynomial {
    coeffs: Vec<BigRational>,
}

impl ExactPolynomial {
    /// Trailing zero coefficients are dropped; the zero polynomial has none.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        ExactPolynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(m, c)| c * BigInt::from(m))
            .collect();
        ExactPolynomial::new(coeffs)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }
}

/// `R(t) = N(t) / D(t)` with one numerator per coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedCurve {
    numerators: Vec<ExactPolynomial>,
    denominator: ExactPolynomial,
    degree: usize,
}

impl ExpandedCurve {
    pub fn numerators(&self) -> &[ExactPolynomial] {
        &self.numerators
    }

    pub fn denominator(&self) -> &ExactPolynomial {
        &self.denominator
    }

    pub fn dim(&self) -> usize {
        self.numerators.len()
    }

    /// Degree of the Bézier representation the expansion came from.
    pub fn bezier_degree(&self) -> usize {
        self.degree
    }
}

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("curve data is finite")
}

/// `C(n, k)` as an integer.
fn binomial(n: usize, k: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

/// Monomial coefficients of `B^n_j(t) = C(n,j) t^j (1-t)^(n-j)`.
fn bernstein_monomial(n: usize, j: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    let lead = binomial(n, j);
    for m in j..=n {
        let c = &lead * binomial(n - j, m - j);
        out[m] = if (m - j).is_multiple_of(2) { c } else { -c };
    }
    out
}

/// Expands exact data: `points[k]` are the coordinates of `W_k`.
pub fn expand_exact(points: &[Vec<BigRational>], weights: &[BigRational]) -> Result<ExpandedCurve> {
    let Some(first) = points.first() else {
        return Err(Error::EmptyCurve);
    };
    if weights.len() != points.len() {
        return Err(Error::LengthMismatch {
            expected: points.len(),
            found: weights.len(),
        });
    }
    let d = first.len();
    if let Some(p) = points.iter().find(|p| p.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: p.len(),
        });
    }
    let n = points.len() - 1;
    let mut num = vec![vec![BigRational::zero(); n + 1]; d];
    let mut den = vec![BigRational::zero(); n + 1];
    for (j, (p, w)) in points.iter().zip(weights).enumerate() {
        for (m, b) in bernstein_monomial(n, j).into_iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let wb = w * BigRational::from_integer(b);
            for (c, x) in p.iter().enumerate() {
                num[c][m] += &wb * x;
            }
            den[m] += wb;
        }
    }
    Ok(ExpandedCurve {
        numerators: num.into_iter().map(ExactPolynomial::new).collect(),
        denominator: ExactPolynomial::new(den),
        degree: n,
    })
}

/// Expands a floating point curve, converting every value exactly.
pub fn expand_curve(curve: &RationalCurve) -> ExpandedCurve {
    let points: Vec<Vec<BigRational>> = curve
        .polygon()
        .points()
        .map(|p| p.iter().copied().map(exact).collect())
        .collect();
    let weights: Vec<BigRational> = curve.weights().iter().copied().map(exact).collect();
    expand_exact(&points, &weights).expect("validated curve")
}

/// Exact jet: `orders[k][c]` is coordinate `c` of the `k`-th derivative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactJet {
    orders: Vec<Vec<BigRational>>,
}

impl ExactJet {
    pub fn order(&self, k: usize) -> &[BigRational] {
        &self.orders[k]
    }

    pub fn max_order(&self) -> usize {
        self.orders.len() - 1
    }

    /// Rounds every component once to the nearest `f64`.
    pub fn to_f64(&self) -> DerivativeJet {
        let dim = self.orders[0].len();
        let data = self.orders.iter().flatten().map(round).collect();
        DerivativeJet::from_flat(dim, data)
    }
}

fn round(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(if x.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// Quotient-rule numerators of every order, precomputed for fast repeated
/// evaluation.
///
/// Numerator and denominator are first multiplied by one common integer so
/// that all coefficients are integers; then `R^(k) = P_k / D^(k+1)` with
/// `P_0 = N` and `P_{k+1} = P_k' D - (k+1) P_k D'`, all integer polynomials.
/// `P_k` is kept at its nominal degree `n + k (n - 1)`, so at `t = p/q`
///
/// `R^(k)(t) = P~_k(p, q) q^k / D~(p, q)^(k+1)`
///
/// where `~` denotes homogenization to the nominal degree.
#[derive(Debug, Clone)]
pub struct ExactDerivatives {
    n: usize,
    dim: usize,
    /// `numerators[k][c]`, ascending, length `n + k (n - 1) + 1` (or `1` for `n = 0`).
    numerators: Vec<Vec<Vec<BigInt>>>,
    denominator: Vec<BigInt>,
}

fn integer_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn integer_derivative(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().enumerate().skip(1).map(|(m, c)| c * m).collect()
}

fn padded(mut a: Vec<BigInt>, len: usize) -> Vec<BigInt> {
    debug_assert!(a[len.min(a.len())..].iter().all(Zero::is_zero));
    a.resize(len, BigInt::zero());
    a
}

impl ExactDerivatives {
    pub fn new(curve: &ExpandedCurve, r: usize) -> Self {
        let n = curve.degree;
        let mut lcm = BigInt::one();
        let polys = curve.numerators.iter().chain([&curve.denominator]);
        for p in polys {
            for c in &p.coeffs {
                lcm = lcm.lcm(c.denom());
            }
        }
        let to_int = |p: &ExactPolynomial| -> Vec<BigInt> {
            let v = p
                .coeffs
                .iter()
                .map(|c| (c * &lcm).to_integer())
                .collect();
            padded(v, n + 1)
        };
        let denominator = to_int(&curve.denominator);
        let d_prime = integer_derivative(&denominator);
        let nominal = |k: usize| n + k * n.saturating_sub(1) + 1;
        let mut numerators = Vec::with_capacity(r + 1);
        numerators.push(curve.numerators.iter().map(to_int).collect::<Vec<_>>());
        for k in 0..r {
            let next = numerators[k]
                .iter()
                .map(|p: &Vec<BigInt>| {
                    let a = integer_poly_mul(&integer_derivative(p), &denominator);
                    let b = integer_poly_mul(p, &d_prime);
                    let len = a.len().max(b.len());
                    let mut out = vec![BigInt::zero(); len];
                    for (o, x) in out.iter_mut().zip(a) {
                        *o += x;
                    }
                    let scale = BigInt::from(k + 1);
                    for (o, x) in out.iter_mut().zip(b) {
                        *o -= &scale * x;
                    }
                    padded(out, nominal(k + 1))
                })
                .collect();
            numerators.push(next);
        }
        ExactDerivatives {
            n,
            dim: curve.dim(),
            numerators,
            denominator,
        }
    }

    pub fn max_order(&self) -> usize {
        self.numerators.len() - 1
    }

    /// Exact jet at `t = p / q`.
    pub fn jet_at(&self, t: &BigRational) -> Result<ExactJet> {
        let (p, q) = (t.numer(), t.denom());
        let top = self.numerators.last().map_or(0, |ps| ps[0].len());
        let len = top.max(self.n + 1).max(self.numerators.len());
        let mut q_pow = Vec::with_capacity(len);
        q_pow.push(BigInt::one());
        for i in 1..len {
            let next = &q_pow[i - 1] * q;
            q_pow.push(next);
        }
        let homogeneous = |c: &[BigInt]| -> BigInt {
            let deg = c.len() - 1;
            let mut acc = c[deg].clone();
            for m in (0..deg).rev() {
                acc = acc * p + &c[m] * &q_pow[deg - m];
            }
            acc
        };
        let den = homogeneous(&self.denominator);
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut den_pow = den.clone();
        let mut orders = Vec::with_capacity(self.numerators.len());
        for (k, ps) in self.numerators.iter().enumerate() {
            if k > 0 {
                den_pow *= &den;
            }
            let row: Vec<BigRational> = ps
                .iter()
                .map(|c| BigRational::new(homogeneous(c) * &q_pow[k], den_pow.clone()))
                .collect();
            orders.push(row);
        }
        debug_assert_eq!(orders[0].len(), self.dim);
        Ok(ExactJet { orders })
    }

    /// The exact jet at `t`, rounded once per component.
    pub fn jet_f64(&self, t: &BigRational) -> Result<DerivativeJet> {
        Ok(self.jet_at(t)?.to_f64())
    }
}

/// Exact jet of orders `0..=r` at a rational parameter.
pub fn exact_jet(curve: &ExpandedCurve, t: &BigRational, r: usize) -> Result<ExactJet> {
    ExactDerivatives::new(curve, r).jet_at(t)
}

/// `num / den` as an exact parameter.
pub fn rational_parameter(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::ControlPolygon;

    fn q(n: i64, d: i64) -> BigRational {
        rational_parameter(n, d)
    }

    #[test]
    fn linear_expansion() {
        let c = RationalCurve::from_points([[0.0], [1.0]], vec![1.0, 1.0]).unwrap();
        let e = expand_curve(&c);
        assert_eq!(e.numerators()[0], ExactPolynomial::new(vec![q(0, 1), q(1, 1)]));
        assert_eq!(e.denominator(), &ExactPolynomial::new(vec![q(1, 1)]));
    }

    #[test]
    fn unit_weights_give_unit_denominator() {
        let c = RationalCurve::from_points([[0.3, 1.0], [2.0, -1.0], [0.5, 0.5]], vec![1.0; 3]).unwrap();
        assert_eq!(expand_curve(&c).denominator().coeffs(), &[q(1, 1)]);
    }

    #[test]
    fn snapped_quarter_circle_denominator() {
        let w1 = std::f64::consts::FRAC_1_SQRT_2;
        let c = RationalCurve::from_points([[1.0, 0.0], [1.0, 1.0], [0.0, 1.0]], vec![1.0, w1, 1.0]).unwrap();
        let e = expand_curve(&c);
        let expected = q(1, 4) + BigRational::from_float(w1).unwrap() / BigInt::from(2) + q(1, 4);
        assert_eq!(e.denominator().eval(&q(1, 2)), expected);
    }

    #[test]
    fn quadratic_polynomial_jet() {
        let c = RationalCurve::polynomial(ControlPolygon::new([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0]]).unwrap());
        let jet = exact_jet(&expand_curve(&c), &q(1, 2), 3).unwrap();
        assert_eq!(jet.order(0), &[q(3, 4), q(1, 4)]);
        assert_eq!(jet.order(1), &[q(1, 1), q(1, 1)]);
        assert_eq!(jet.order(2), &[q(-2, 1), q(2, 1)]);
        assert_eq!(jet.order(3), &[q(0, 1), q(0, 1)]);
        assert_eq!(jet.to_f64().as_flat(), &[0.75, 0.25, 1.0, 1.0, -2.0, 2.0, 0.0, 0.0]);
    }

    #[test]
    fn constant_curve_has_zero_derivatives() {
        let c = RationalCurve::from_points([[0.5, -2.0]; 4], vec![0.3, 1.2, 0.7, 2.0]).unwrap();
        let jet = exact_jet(&expand_curve(&c), &q(3, 7), 5).unwrap();
        assert_eq!(jet.order(0), &[q(1, 2), q(-2, 1)]);
        for k in 1..=5 {
            assert!(jet.order(k).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn degree_one_rational_closed_form() {
        // R'(t) = w0 w1 (W1 - W0) / ((1-t) w0 + t w1)^2
        let c = RationalCurve::from_points([[0.0], [4.0]], vec![0.5, 1.5]).unwrap();
        let t = q(1, 3);
        let jet = exact_jet(&expand_curve(&c), &t, 2).unwrap();
        let den = (q(1, 1) - &t) * q(1, 2) + &t * q(3, 2);
        let first = q(3, 4) * q(4, 1) / (&den * &den);
        assert_eq!(jet.order(1)[0], first);
        // R'' = -2 A_1 R' / A_0 with A_1 = w1 - w0 = 1.
        assert_eq!(jet.order(2)[0], -q(2, 1) * &first / den);
    }

    #[test]
    fn rounding_is_to_nearest() {
        let jet = ExactJet {
            orders: vec![vec![q(1, 3), q(-2, 3), q(1, 10)]],
        };
        assert_eq!(jet.to_f64().as_flat(), &[1.0 / 3.0, -2.0 / 3.0, 0.1]);
    }

    #[test]
    fn degree_zero_curve() {
        let c = RationalCurve::from_points([[1.5, 2.0]], vec![0.25]).unwrap();
        let jet = exact_jet(&expand_curve(&c), &q(1, 2), 2).unwrap();
        assert_eq!(jet.to_f64().as_flat(), &[1.5, 2.0, 0.0, 0.0, 0.0, 0.0]);
    }
}
