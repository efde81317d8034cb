use crate::qpoly::{q_factorial, series_from_rational, LaurentPoly, TPoly};
use crate::stirling::{classical, table, Family};

use super::common::{at, c2, constant, geometric_product, n_of, one_minus_t, order_of, qbin};
use super::memo::Workspace;
use super::{IdentityError, Params, Value};

/// Coefficients of `t A_n(t, q)` in `t`, with the empty-permutation
/// convention `t A_0 = 1`.
fn shifted_eulerian(ws: &Workspace, n: usize) -> Result<Vec<LaurentPoly>, IdentityError> {
    if n == 0 {
        return Ok(vec![LaurentPoly::one()]);
    }
    let eul = ws.eulerian_a(n)?;
    Ok(std::iter::once(LaurentPoly::zero())
        .chain(eul.iter().cloned())
        .collect())
}

pub(super) fn a_classical(ws: &Workspace, p: &Params, k: usize) -> Result<(LaurentPoly, LaurentPoly), IdentityError> {
    let n = n_of(p);
    let lhs = classical::factorial(k as i64) * classical::s_a(n as i64, k as i64);
    let eul = shifted_eulerian(ws, n)?;
    let rhs = (0..=k)
        .map(|l| at(&eul, l).eval_at_one() * qbin(n - l, k - l).eval_at_one())
        .sum::<num_bigint::BigInt>();
    Ok((constant(lhs), constant(rhs)))
}

/// `q^{C(k,2)} [k]! S[n,k]`
fn scaled_a(n: usize, k: usize) -> LaurentPoly {
    let s = table(Family::A, n).get(n as i64, k as i64);
    (q_factorial(k as u64) * s).shift(c2(k))
}

pub(super) fn a_q(ws: &Workspace, p: &Params, k: usize) -> Result<(LaurentPoly, LaurentPoly), IdentityError> {
    let n = n_of(p);
    let eul = shifted_eulerian(ws, n)?;
    let rhs = (0..=k)
        .map(|l| (at(&eul, l) * qbin(n - l, k - l)).shift((k * (k - l)) as i64))
        .sum();
    Ok((scaled_a(n, k), rhs))
}

pub(super) fn a_q_shifted(ws: &Workspace, p: &Params, k: usize) -> Result<(LaurentPoly, LaurentPoly), IdentityError> {
    let n = n_of(p);
    let s = table(Family::A, n + 1).get(n as i64 + 1, k as i64 + 1);
    let lhs = (q_factorial(k as u64) * s).shift(c2(k + 1));
    let eul = ws.eulerian_a(n)?;
    let rhs = (0..=k)
        .map(|l| (at(&eul, l) * qbin(n - l, k - l)).shift((k * (k - l)) as i64))
        .sum();
    Ok((lhs, rhs))
}

pub(super) fn frobenius_a(ws: &Workspace, p: &Params) -> Result<(Value, Value), IdentityError> {
    let (n, order) = (n_of(p), order_of(p));
    let t_an = TPoly::from_coeffs(shifted_eulerian(ws, n)?);
    let lhs = crate::qpoly::TSeries::from_tpoly(&t_an, order).mul(&geometric_product(0..=n as i64, order)?)?;
    let mut rhs = crate::qpoly::TSeries::zero(order);
    for k in 0..=n {
        let numer = TPoly::monomial(scaled_a(n, k), k);
        let denom: Vec<TPoly> = (0..=k as i64).map(one_minus_t).collect();
        rhs = rhs.add(&series_from_rational(&numer, &denom, order)?)?;
    }
    Ok((lhs.into(), rhs.into()))
}
