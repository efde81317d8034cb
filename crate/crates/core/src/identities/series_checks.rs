use crate::qpoly::{q_factorial, series_from_rational, LaurentPoly, TPoly, TSeries};

use super::common::{c2, n_of, one_minus_t, order_of, qbin};
use super::memo::Workspace;
use super::{IdentityError, Params, Value};

pub(super) fn q_binom_theorem(_: &Workspace, p: &Params) -> Result<(Value, Value), IdentityError> {
    let n = n_of(p);
    let lhs: TPoly = (0..n as i64).map(one_minus_t).product();
    let rhs = TPoly::from_coeffs(
        (0..=n)
            .map(|j| {
                let c = qbin(n, j).shift(c2(j));
                if j % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect(),
    );
    Ok((lhs.into(), rhs.into()))
}

pub(super) fn q_binom_negative(_: &Workspace, p: &Params) -> Result<(Value, Value), IdentityError> {
    let (n, order) = (n_of(p), order_of(p));
    let denom: Vec<TPoly> = (0..n as i64).map(one_minus_t).collect();
    let lhs = series_from_rational(&TPoly::one(), &denom, order)?;
    let rhs = TSeries::from_fn(order, |j| match (n, j) {
        (0, 0) => LaurentPoly::one(),
        (0, _) => LaurentPoly::zero(),
        _ => qbin(n + j - 1, j),
    });
    Ok((lhs.into(), rhs.into()))
}

pub(super) fn chu_vandermonde(_: &Workspace, p: &Params) -> Result<(Value, Value), IdentityError> {
    let n = n_of(p);
    let m = p.m.expect("normalized params carry m");
    let ell = p.ell.expect("normalized params carry ell");
    let f = |x: usize| q_factorial(x as u64);
    let lhs = f(n + m).div_exact(&(f(n) * f(m)))?;
    let rhs = (0..=n - ell)
        .filter(|&k| k <= m)
        .map(|k| (qbin(n - ell, k) * qbin(m + ell, m - k)).shift((k * (k + ell)) as i64))
        .sum::<LaurentPoly>();
    Ok((lhs.into(), rhs.into()))
}
