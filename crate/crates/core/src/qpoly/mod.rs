//! Exact arithmetic in `q`: Laurent polynomials, polynomials in `t` over
//! them, truncated power series in `t`, and the q-analogues built on top
//! (q-integers, q-factorials, Gaussian binomials, falling factorials).

mod laurent;
mod series;
mod tpoly;

pub use laurent::LaurentPoly;
pub use series::{series_from_rational, TSeries};
pub use tpoly::TPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QPolyError {
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// `[k]_q = 1 + q + ... + q^{k-1}`, with `[0]_q = 0`.
pub fn q_int(k: u64) -> LaurentPoly {
    LaurentPoly::from_terms((0..k as i64).map(|e| (e, 1)))
}

/// `[k]_q! = [1]_q [2]_q ... [k]_q`.
pub fn q_factorial(k: u64) -> LaurentPoly {
    (1..=k).map(q_int).product()
}

/// Gaussian binomial `[n k]_q`, zero when `k < 0` or `k > n`.
///
/// Computed with the Pascal rule `[n k] = [n-1 k-1] + q^k [n-1 k]`, so no
/// polynomial division is involved.
pub fn q_binomial(n: u64, k: i64) -> LaurentPoly {
    if k < 0 || k as u64 > n {
        return LaurentPoly::zero();
    }
    let k = k.min(n as i64 - k) as usize;
    // row[j] holds [m j] for the current m
    let mut row = vec![LaurentPoly::zero(); k + 1];
    row[0] = LaurentPoly::one();
    for m in 1..=n as usize {
        for j in (1..=k.min(m)).rev() {
            let shifted = row[j].shift(j as i64);
            row[j] = &row[j - 1] + &shifted;
        }
    }
    row.swap_remove(k)
}

/// Which falling-factorial family to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FallingKind {
    /// `t (t - [1]) ... (t - [k-1])`
    A,
    /// `(t - [1]) (t - [3]) ... (t - [2k-1])`
    B,
    /// The B product for `k < n`; for `k = n` the last factor becomes `t - [n-1]`.
    D,
    /// `(t - [1]) (t - [r+1]) ... (t - [r(k-1)+1])`
    R(u32),
}

fn linear(root: LaurentPoly) -> TPoly {
    TPoly::from_coeffs(vec![-root, LaurentPoly::one()])
}

/// The q-falling factorial of the given family. `n` only matters for the
/// type D family, whose top member `k = n` differs from the B product.
pub fn falling_factorial(kind: FallingKind, n: u64, k: u64) -> Result<TPoly, QPolyError> {
    let out = match kind {
        FallingKind::A => (0..k).map(|i| linear(q_int(i))).product(),
        FallingKind::B => (1..=k).map(|i| linear(q_int(2 * i - 1))).product(),
        FallingKind::R(0) => return Err(QPolyError::InvalidParams("color count r must be at least 1".into())),
        FallingKind::R(r) => (0..k).map(|i| linear(q_int(u64::from(r) * i + 1))).product(),
        FallingKind::D if k > n => {
            return Err(QPolyError::InvalidParams(format!(
                "type D falling factorial needs k <= n, got k={k}, n={n}"
            )))
        }
        FallingKind::D if k == n && n > 0 => {
            let head: TPoly = (1..n).map(|i| linear(q_int(2 * i - 1))).product();
            head * linear(q_int(n - 1))
        }
        FallingKind::D => (1..=k).map(|i| linear(q_int(2 * i - 1))).product(),
    };
    Ok(out)
}
