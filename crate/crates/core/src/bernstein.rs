//! Bernstein basis values, their derivatives, and binomial tables.

use crate::error::{Error, Result};

/// Values `B^n_0(t), ..., B^n_n(t)`.
///
/// Built bottom-up with `B^m_k = t B^{m-1}_{k-1} + (1-t) B^{m-1}_k`, which
/// only forms convex combinations for `t` in `[0, 1]`.
pub fn bernstein_all(n: usize, t: f64) -> Vec<f64> {
    let mut b = vec![0.0; n + 1];
    fill_bernstein(n, t, &mut b);
    b
}

pub(crate) fn fill_bernstein(n: usize, t: f64, b: &mut [f64]) {
    let s = 1.0 - t;
    b[0] = 1.0;
    for m in 1..=n {
        b[m] = t * b[m - 1];
        for k in (1..m).rev() {
            b[k] = t * b[k - 1] + s * b[k];
        }
        b[0] *= s;
    }
}

/// Derivatives `d^k/dt^k B^n_j(t)` for `0 <= k <= r`, `0 <= j <= n`.
#[derive(Debug, Clone, PartialEq)]
pub struct BernsteinDerivTable {
    n: usize,
    r: usize,
    t: f64,
    values: Vec<f64>,
}

impl BernsteinDerivTable {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn max_order(&self) -> usize {
        self.r
    }

    pub fn parameter(&self) -> f64 {
        self.t
    }

    /// Row `k`: the `k`-th derivatives of all `n + 1` basis polynomials.
    pub fn row(&self, k: usize) -> &[f64] {
        let w = self.n + 1;
        &self.values[k * w..(k + 1) * w]
    }

    pub fn get(&self, k: usize, j: usize) -> f64 {
        self.values[k * (self.n + 1) + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.values.chunks_exact(self.n + 1)
    }
}

/// Builds the derivative table, row by row.
///
/// The differentiation operator acts on the degree-`n` basis through
/// `(B^n_j)' = (n-j+1) B^n_{j-1} + (2j-n) B^n_j - (j+1) B^n_{j+1}`, so if
/// row `k-1` holds `beta^T M^{k-1}` then row `k` is that row times `M`:
///
/// `row_k[j] = (n-j+1) row_{k-1}[j-1] + (2j-n) row_{k-1}[j] - (j+1) row_{k-1}[j+1]`
///
/// with out-of-range entries read as zero. Rows above `n` are exactly zero.
pub fn bernstein_deriv_table(n: usize, t: f64, r: usize) -> BernsteinDerivTable {
    let w = n + 1;
    let mut values = vec![0.0; (r + 1) * w];
    fill_bernstein(n, t, &mut values[..w]);
    fill_derivative_rows(n, r.min(n), &mut values);
    BernsteinDerivTable { n, r, t, values }
}

/// Rows `1..=top` of the derivative table from row 0, in `O(top * n)`.
pub(crate) fn fill_derivative_rows(n: usize, top: usize, values: &mut [f64]) {
    let w = n + 1;
    let nf = n as f64;
    for k in 1..=top {
        let (prev, cur) = values[(k - 1) * w..(k + 1) * w].split_at_mut(w);
        for j in 0..=n {
            let jf = j as f64;
            let mut acc = (2.0 * jf - nf) * prev[j];
            if j > 0 {
                acc += (nf - jf + 1.0) * prev[j - 1];
            }
            if j < n {
                acc -= (jf + 1.0) * prev[j + 1];
            }
            cur[j] = acc;
        }
    }
}

/// Basis values from the h-values of the polynomial scheme, in `O(n)`.
///
/// With `S_i = B_0 + ... + B_i` we have `S_n = 1`, `B_i = h_i S_i` and
/// `S_{i-1} = (1 - h_i) S_i`, so a backward sweep recovers every `B_i`
/// with products of numbers in `[0, 1]`.
pub(crate) fn bernstein_from_h(h: &[f64], b: &mut [f64]) {
    let mut s = 1.0;
    for i in (1..h.len()).rev() {
        b[i] = h[i] * s;
        s *= 1.0 - h[i];
    }
    b[0] = s;
}

/// Pascal's triangle up to row `r`, exact in `u128`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialTable {
    r: usize,
    entries: Vec<u128>,
}

impl BinomialTable {
    pub fn max_row(&self) -> usize {
        self.r
    }

    /// `C(k, i)`; zero for `i > k`.
    pub fn get(&self, k: usize, i: usize) -> u128 {
        if i > k {
            0
        } else {
            self.entries[k * (k + 1) / 2 + i]
        }
    }

    pub fn row(&self, k: usize) -> &[u128] {
        let start = k * (k + 1) / 2;
        &self.entries[start..start + k + 1]
    }

}

/// Pascal's triangle in `f64`, for the derivative recurrences. Entries are
/// exact up to `2^53` and rounded beyond; there is no overflow before row
/// 1020 or so.
pub(crate) struct FloatBinomials {
    entries: Vec<f64>,
}

impl FloatBinomials {
    pub(crate) fn new(r: usize) -> Self {
        let mut entries = Vec::with_capacity((r + 1) * (r + 2) / 2);
        entries.push(1.0);
        for k in 1..=r {
            let prev = (k - 1) * k / 2;
            entries.push(1.0);
            for i in 1..k {
                entries.push(entries[prev + i - 1] + entries[prev + i]);
            }
            entries.push(1.0);
        }
        FloatBinomials { entries }
    }

    #[inline]
    pub(crate) fn get(&self, k: usize, i: usize) -> f64 {
        self.entries[k * (k + 1) / 2 + i]
    }
}

pub fn binomial_table(r: usize) -> Result<BinomialTable> {
    let mut entries = Vec::with_capacity((r + 1) * (r + 2) / 2);
    entries.push(1u128);
    for k in 1..=r {
        let prev = (k - 1) * k / 2;
        entries.push(1);
        for i in 1..k {
            let c = entries[prev + i - 1]
                .checked_add(entries[prev + i])
                .ok_or(Error::BinomialOverflow { row: k })?;
            entries.push(c);
        }
        entries.push(1);
    }
    Ok(BinomialTable { r, entries })
}
