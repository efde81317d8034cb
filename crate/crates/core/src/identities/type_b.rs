use num_bigint::BigInt;

use crate::groups::{psi, sign_type_profile, stats_b, SignedPerm};
use crate::partitions::count_type_b_partitions;
use crate::qpoly::LaurentPoly;
use crate::stirling::{chow_gessel, classical, stirling_b};

use super::common::{at, bump, constant, defect_poly, factorial, n_of, qbin_r, qfact_r, qi};
use super::memo::Workspace;
use super::{IdentityError, Params, Value};

type Pair = Result<(LaurentPoly, LaurentPoly), IdentityError>;

pub(super) fn b_classical(_: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    let lhs = (BigInt::from(2).pow(k as u32) * factorial(k)) * count_type_b_partitions(n, k);
    let rhs: BigInt = (0..=k)
        .map(|l| classical::eulerian_b(n as i64, l as i64) * classical::binomial((n - l) as i64, (k - l) as i64))
        .sum();
    Ok((constant(lhs), constant(rhs)))
}

/// `[2]_q^k [k]_{q^2}! S_B[n,k]`
pub(super) fn scaled_b(n: usize, k: usize) -> LaurentPoly {
    qi(2).pow(k as u32) * qfact_r(k, 2) * stirling_b(n as i64, k as i64)
}

fn main_b_rhs(ws: &Workspace, n: usize, k: usize, corrupt: bool) -> Result<LaurentPoly, IdentityError> {
    let eul = ws.eulerian_b(n)?;
    let (n, k) = (n as i64, k as i64);
    Ok((0..=k)
        .map(|l| {
            let e = k * (k - 2 * l) + i64::from(corrupt && l == 0);
            (at(&eul, l as usize) * qbin_r((n - l) as usize, (k - l) as usize, 2)).shift(e)
        })
        .sum())
}

pub(super) fn thm_main_b(ws: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    Ok((scaled_b(n, k), main_b_rhs(ws, n, k, false)?))
}

pub(super) fn thm_main_b_corrupted(ws: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    Ok((scaled_b(n, k), main_b_rhs(ws, n, k, true)?))
}

/// `Σ_ℓ q^{(n-k)(2ℓ-n-k)} B_{n,n-ℓ} [n-ℓ, k-ℓ]_{q^2}`
pub(super) fn ascent_sum(ws: &Workspace, n: usize, k: usize) -> Result<LaurentPoly, IdentityError> {
    let eul = ws.eulerian_b(n)?;
    let (ni, ki) = (n as i64, k as i64);
    Ok((0..=k)
        .map(|l| {
            let e = (ni - ki) * (2 * l as i64 - ni - ki);
            (at(&eul, n - l) * qbin_r(n - l, k - l, 2)).shift(e)
        })
        .sum())
}

pub(super) fn thm_main_b_transformed(ws: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    Ok((scaled_b(n, k), ascent_sum(ws, n, k)?))
}

pub(super) fn cg_relation(_: &Workspace, p: &Params, k: usize) -> Pair {
    let (n, k) = (n_of(p) as i64, k as i64);
    let rhs = (qi(2).pow(k as u32) * stirling_b(n, k)).shift(k * k);
    Ok((chow_gessel(n, k), rhs))
}

fn symmetry(ws: &Workspace, p: &Params, k: usize, extra: i64) -> Pair {
    let n = n_of(p);
    let lhs = at(&ws.eulerian_b(n)?, k);
    let e = (2 * n * k) as i64 - (n * n) as i64 + extra;
    let rhs = at(&ws.eulerian_b_elementwise(n)?, n - k).shift(e);
    Ok((lhs, rhs))
}

pub(super) fn b_symmetry(ws: &Workspace, p: &Params, k: usize) -> Pair {
    symmetry(ws, p, k, 0)
}

pub(super) fn b_symmetry_corrupted(ws: &Workspace, p: &Params, k: usize) -> Pair {
    symmetry(ws, p, k, 1)
}

/// `Σ_π q^{defect(π)}` over `B_n` against `|B_n| = 2^n n!`.
fn pointwise(
    ws: &Workspace,
    p: &Params,
    defect: impl Fn(&SignedPerm) -> usize,
) -> Result<(Value, Value), IdentityError> {
    let n = n_of(p);
    let mut hist = Vec::new();
    for perm in ws.caps.enumerate_bn(n)? {
        bump(&mut hist, defect(&perm));
    }
    let order = BigInt::from(2).pow(n as u32) * factorial(n);
    Ok((defect_poly(&hist).into(), constant(order).into()))
}

pub(super) fn psi_involution(ws: &Workspace, p: &Params) -> Result<(Value, Value), IdentityError> {
    pointwise(ws, p, |perm| usize::from(psi(&psi(perm)) != *perm))
}

pub(super) fn des_complement(ws: &Workspace, p: &Params) -> Result<(Value, Value), IdentityError> {
    let n = n_of(p);
    pointwise(ws, p, |perm| {
        let d = perm.descents().len();
        psi(perm).descents().len().abs_diff(n - d)
    })
}

pub(super) fn index_sums(ws: &Workspace, p: &Params) -> Result<(Value, Value), IdentityError> {
    let n = n_of(p);
    pointwise(ws, p, |perm| {
        let prof = sign_type_profile(perm);
        let lhs = prof.descents_pm.iter().sum::<usize>() + perm.neg();
        let tail = if perm.at(n) < 0 { n } else { 0 };
        lhs.abs_diff(prof.ascents_mp.iter().sum::<usize>() + tail)
    })
}

pub(super) fn fmaj_psi(ws: &Workspace, p: &Params) -> Result<(Value, Value), IdentityError> {
    let n = n_of(p) as i64;
    pointwise(ws, p, |perm| {
        let s = stats_b(perm);
        let t = stats_b(&psi(perm));
        let rhs = 2 * n * s.des as i64 - n * n + t.fmaj as i64;
        (s.fmaj as i64).abs_diff(rhs) as usize
    })
}
