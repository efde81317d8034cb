use crate::partitions::count_type_d_partitions;
use crate::qpoly::{falling_factorial, FallingKind, LaurentPoly, TPoly};
use crate::stirling::{classical, stirling_a, stirling_b, stirling_d, stirling_r};

use super::common::{constant, n_of, qi, r_of};
use super::memo::Workspace;
use super::{IdentityError, Params, Value};

type Sides = Result<(Value, Value), IdentityError>;

fn monomial(n: usize) -> Value {
    TPoly::monomial(LaurentPoly::one(), n).into()
}

fn at_one(p: &TPoly) -> TPoly {
    p.map_coeffs(|c| constant(c.eval_at_one()))
}

fn falling(kind: FallingKind, n: usize, k: usize) -> Result<TPoly, IdentityError> {
    Ok(falling_factorial(kind, n as u64, k as u64)?)
}

/// `Σ_k c(k) (t)_k` for the given falling-factorial family.
fn expand(
    kind: FallingKind,
    n: usize,
    classical: bool,
    coeff: impl Fn(usize) -> LaurentPoly,
) -> Result<TPoly, IdentityError> {
    let mut acc = TPoly::zero();
    for k in 0..=n {
        let mut ff = falling(kind, n, k)?;
        if classical {
            ff = at_one(&ff);
        }
        acc = &acc + &ff.scale(&coeff(k));
    }
    Ok(acc)
}

pub(super) fn basis_a(_: &Workspace, p: &Params) -> Sides {
    let n = n_of(p);
    let rhs = expand(FallingKind::A, n, true, |k| {
        constant(classical::s_a(n as i64, k as i64))
    })?;
    Ok((monomial(n), rhs.into()))
}

pub(super) fn basis_b(_: &Workspace, p: &Params) -> Sides {
    let n = n_of(p);
    let rhs = expand(FallingKind::B, n, true, |k| {
        constant(classical::s_b(n as i64, k as i64))
    })?;
    Ok((monomial(n), rhs.into()))
}

/// `n (t-1)^{n-1} - [n]_q q^{n-1} (t)^D_{n-1}`, zero for `n = 0`.
fn d_correction(n: usize, classical: bool) -> Result<TPoly, IdentityError> {
    if n == 0 {
        return Ok(TPoly::zero());
    }
    let t_minus_one = TPoly::from_coeffs(vec![-LaurentPoly::one(), LaurentPoly::one()]);
    let power = t_minus_one.pow((n - 1) as u32).scale(&constant(n));
    let mut ff = falling(FallingKind::D, n, n - 1)?.scale(&qi(n).shift(n as i64 - 1));
    if classical {
        ff = at_one(&ff);
    }
    Ok(&power - &ff)
}

pub(super) fn basis_d(_: &Workspace, p: &Params) -> Sides {
    let n = n_of(p);
    let sum = expand(FallingKind::D, n, true, |k| constant(count_type_d_partitions(n, k)))?;
    Ok((monomial(n), (&sum + &d_correction(n, true)?).into()))
}

pub(super) fn basis_a_q(_: &Workspace, p: &Params) -> Sides {
    let n = n_of(p);
    let rhs = expand(FallingKind::A, n, false, |k| stirling_a(n as i64, k as i64))?;
    Ok((monomial(n), rhs.into()))
}

pub(super) fn basis_b_q(_: &Workspace, p: &Params) -> Sides {
    let n = n_of(p);
    let rhs = expand(FallingKind::B, n, false, |k| stirling_b(n as i64, k as i64))?;
    Ok((monomial(n), rhs.into()))
}

pub(super) fn basis_d_q(_: &Workspace, p: &Params) -> Sides {
    let n = n_of(p);
    let sum = expand(FallingKind::D, n, false, |k| stirling_d(n as i64, k as i64))?;
    Ok((monomial(n), (&sum + &d_correction(n, false)?).into()))
}

pub(super) fn basis_bd_bridge(_: &Workspace, p: &Params) -> Sides {
    let n = n_of(p);
    let lhs: TPoly = (1..=n)
        .map(|i| TPoly::from_coeffs(vec![-qi(2 * i - 1), LaurentPoly::one()]))
        .product();
    let top = falling(FallingKind::D, n, n)?;
    let below = falling(FallingKind::D, n, n - 1)?.scale(&qi(n).shift(n as i64 - 1));
    Ok((lhs.into(), (&top - &below).into()))
}

pub(super) fn basis_r_q(_: &Workspace, p: &Params) -> Sides {
    let (n, r) = (n_of(p), r_of(p));
    let rhs = expand(FallingKind::R(r), n, false, |k| stirling_r(r, n as i64, k as i64))?;
    Ok((monomial(n), rhs.into()))
}
