use crate::groups::{stats_a, stats_b, stats_r};
use crate::qpoly::{q_int, series_from_rational, LaurentPoly, TPoly, TSeries};
use crate::stirling::{stirling_a, stirling_b, stirling_r};

use super::common::{
    at, bump, c2, constant, defect_poly, factorial, geometric_product, n_of, one_minus_t, order_of, qbin_r, qfact_r,
    r_of,
};
use super::memo::Workspace;
use super::{IdentityError, Params, Value};

type Sides = Result<(Value, Value), IdentityError>;

/// `q^{r C(k+1,2) + (1-r)k} [r]_q^k [k]_{q^r}! S_r[n,k]`
fn scaled_r(r: u32, n: usize, k: usize) -> LaurentPoly {
    let e = i64::from(r) * c2(k + 1) + (1 - i64::from(r)) * k as i64;
    (q_int(u64::from(r)).pow(k as u32) * qfact_r(k, r) * stirling_r(r, n as i64, k as i64)).shift(e)
}

/// Factors `1 - t q^{ri}` for `0 <= i <= top`.
fn denominators(r: u32, top: usize) -> Vec<TPoly> {
    (0..=top as i64).map(|i| one_minus_t(i64::from(r) * i)).collect()
}

/// `Σ_k scaled_r(k) t^k / ∏_{i<=k} (1 - t q^{ri})` by series inversion.
fn stirling_side(r: u32, n: usize, order: usize) -> Result<TSeries, IdentityError> {
    let mut acc = TSeries::zero(order);
    for k in 0..=n {
        let numer = TPoly::monomial(scaled_r(r, n, k), k);
        acc = acc.add(&series_from_rational(&numer, &denominators(r, k), order)?)?;
    }
    Ok(acc)
}

/// `Σ_m [rm+1]_q^n t^m`
fn power_sum(r: u32, n: usize, order: usize) -> TSeries {
    TSeries::from_fn(order, |m| q_int(u64::from(r) * m as u64 + 1).pow(n as u32))
}

pub(super) fn genfun_r(_: &Workspace, p: &Params) -> Sides {
    let (r, n, order) = (r_of(p), n_of(p), order_of(p));
    Ok((stirling_side(r, n, order)?.into(), power_sum(r, n, order).into()))
}

pub(super) fn carlitz_r(ws: &Workspace, p: &Params) -> Sides {
    let (r, n, order) = (r_of(p), n_of(p), order_of(p));
    let eul = TPoly::from_coeffs(ws.eulerian_r(r, n)?.to_vec());
    let lhs = series_from_rational(&eul, &denominators(r, n), order)?;
    Ok((lhs.into(), power_sum(r, n, order).into()))
}

pub(super) fn frobenius_r(ws: &Workspace, p: &Params) -> Sides {
    let (r, n, order) = (r_of(p), n_of(p), order_of(p));
    let eul = TPoly::from_coeffs(ws.eulerian_r(r, n)?.to_vec());
    let geo = geometric_product((0..=n as i64).map(|i| i64::from(r) * i), order)?;
    let lhs = TSeries::from_tpoly(&eul, order).mul(&geo)?;
    Ok((lhs.into(), stirling_side(r, n, order)?.into()))
}

pub(super) fn thm_main_r(ws: &Workspace, p: &Params, k: usize) -> Result<(LaurentPoly, LaurentPoly), IdentityError> {
    let (r, n) = (r_of(p), n_of(p));
    let eul = ws.eulerian_r(r, n)?;
    let rhs = (0..=k)
        .map(|l| (at(&eul, l) * qbin_r(n - l, k - l, r)).shift(i64::from(r) * (k * (k - l)) as i64))
        .sum();
    Ok((scaled_r(r, n, k), rhs))
}

pub(super) fn q_extension(_: &Workspace, p: &Params) -> Sides {
    let (r, n, order) = (r_of(p), n_of(p), order_of(p));
    let ell = p.ell.expect("normalized params carry ell");
    let lhs = geometric_product((0..=n as i64).map(|i| i64::from(r) * i), order)?;
    let mut rhs = TSeries::zero(order);
    for k in ell..=n {
        let j = k - ell;
        let numer = TPoly::monomial(qbin_r(n - ell, j, r).shift(i64::from(r) * (k * j) as i64), j);
        rhs = rhs.add(&series_from_rational(&numer, &denominators(r, k), order)?)?;
    }
    Ok((lhs.into(), rhs.into()))
}

fn stirling_row(f: impl Fn(i64) -> LaurentPoly, n: usize) -> Value {
    TPoly::from_coeffs((0..=n as i64).map(f).collect()).into()
}

fn padded(row: &[LaurentPoly], n: usize) -> Value {
    let mut v = row.to_vec();
    v.resize(n + 1, LaurentPoly::zero());
    TPoly::from_coeffs(v).into()
}

fn variant(p: &Params) -> &str {
    p.variant.as_deref().expect("normalized params carry variant")
}

pub(super) fn specialize_r1(ws: &Workspace, p: &Params) -> Sides {
    let n = n_of(p);
    match variant(p) {
        "stirling" => {
            let lhs = stirling_row(|k| stirling_r(1, n as i64, k), n);
            let rhs = stirling_row(|k| stirling_a(n as i64 + 1, k + 1), n);
            Ok((lhs, rhs))
        }
        "eulerian" => Ok((padded(&ws.eulerian_r(1, n)?, n), padded(&ws.eulerian_a(n)?, n))),
        _ => {
            let mut hist = Vec::new();
            for perm in ws.caps.enumerate_colored(1, n)? {
                let (c, a) = (stats_r(&perm), stats_a(perm.base()));
                bump(&mut hist, c.des.abs_diff(a.des) + c.fmaj.abs_diff(a.maj));
            }
            Ok((defect_poly(&hist).into(), constant(factorial(n)).into()))
        }
    }
}

pub(super) fn specialize_r2(ws: &Workspace, p: &Params) -> Sides {
    let n = n_of(p);
    match variant(p) {
        "stirling" => {
            let lhs = stirling_row(|k| stirling_r(2, n as i64, k), n);
            let rhs = stirling_row(|k| stirling_b(n as i64, k), n);
            Ok((lhs, rhs))
        }
        "eulerian" => Ok((padded(&ws.eulerian_r(2, n)?, n), padded(&ws.eulerian_b(n)?, n))),
        _ => {
            let mut hist = Vec::new();
            for perm in ws.caps.enumerate_colored(2, n)? {
                let c = stats_r(&perm);
                let d = match perm.to_signed() {
                    Some(s) => {
                        let b = stats_b(&s);
                        c.des.abs_diff(b.des) + c.fmaj.abs_diff(b.fmaj)
                    }
                    None => 1,
                };
                bump(&mut hist, d);
            }
            let order = num_bigint::BigInt::from(2).pow(n as u32) * factorial(n);
            Ok((defect_poly(&hist).into(), constant(order).into()))
        }
    }
}
