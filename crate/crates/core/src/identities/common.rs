use num_bigint::BigInt;

use crate::qpoly::{q_binomial, q_factorial, q_int, LaurentPoly, QPolyError, TPoly, TSeries};

use super::Params;

pub(super) fn n_of(p: &Params) -> usize {
    p.n.expect("normalized params carry n")
}

pub(super) fn r_of(p: &Params) -> u32 {
    p.r.expect("normalized params carry r")
}

pub(super) fn order_of(p: &Params) -> usize {
    p.order.expect("normalized params carry order")
}

pub(super) fn qi(k: usize) -> LaurentPoly {
    q_int(k as u64)
}

/// Gaussian binomial by the Pascal rule; zero when `k > n`.
pub(super) fn qbin(n: usize, k: usize) -> LaurentPoly {
    q_binomial(n as u64, k as i64)
}

/// Gaussian binomial in `q^r`.
pub(super) fn qbin_r(n: usize, k: usize, r: u32) -> LaurentPoly {
    qbin(n, k).subst_q_power(r)
}

/// `[k]_{q^r}!`
pub(super) fn qfact_r(k: usize, r: u32) -> LaurentPoly {
    q_factorial(k as u64).subst_q_power(r)
}

pub(super) fn at(row: &[LaurentPoly], i: usize) -> LaurentPoly {
    row.get(i).cloned().unwrap_or_default()
}

pub(super) fn constant(c: impl Into<BigInt>) -> LaurentPoly {
    LaurentPoly::constant(c)
}

/// `1 - t q^e`
pub(super) fn one_minus_t(e: i64) -> TPoly {
    TPoly::from_coeffs(vec![LaurentPoly::one(), -LaurentPoly::q_pow(e)])
}

/// `1 / ∏ (1 - t q^e)` as a product of geometric series `Σ_m q^{em} t^m`,
/// without any inversion.
pub(super) fn geometric_product(exps: impl IntoIterator<Item = i64>, order: usize) -> Result<TSeries, QPolyError> {
    let mut acc = TSeries::one(order);
    for e in exps {
        let g = TSeries::from_fn(order, |m| LaurentPoly::q_pow(e * m as i64));
        acc = acc.mul(&g)?;
    }
    Ok(acc)
}

/// `Σ_d q^{d}` over a histogram of defects.
pub(super) fn defect_poly(hist: &[u64]) -> LaurentPoly {
    LaurentPoly::from_terms(hist.iter().enumerate().map(|(d, &c)| (d as i64, c)))
}

pub(super) fn bump(hist: &mut Vec<u64>, d: usize) {
    if hist.len() <= d {
        hist.resize(d + 1, 0);
    }
    hist[d] += 1;
}

pub(super) fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

pub(super) fn c2(k: usize) -> i64 {
    (k * k.saturating_sub(1) / 2) as i64
}
