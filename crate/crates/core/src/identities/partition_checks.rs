use num_bigint::BigInt;

use crate::partitions::{
    btilde_enum, btilde_rec, count_type_b_partitions, count_type_d_partitions, d_subset_weight, d_subset_weight_dp,
    enumerate_d_subset, pssp_weight,
};
use crate::qpoly::LaurentPoly;
use crate::stirling::{classical, stirling_b, stirling_d, table, Family};

use super::common::{constant, n_of, qi};
use super::memo::Workspace;
use super::{IdentityError, Params};

type Pair = Result<(LaurentPoly, LaurentPoly), IdentityError>;

/// `q^{k^2} [2]_q^k`
fn weight_factor(k: usize) -> LaurentPoly {
    qi(2).pow(k as u32).shift((k * k) as i64)
}

/// `S[n,k]_{q^2}`
fn stirling_a_q2(n: usize, k: usize) -> LaurentPoly {
    table(Family::A, n).get(n as i64, k as i64).subst_q_power(2)
}

pub(super) fn pssp_weight_check(_: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    Ok((pssp_weight(n, k)?, weight_factor(k) * stirling_b(n as i64, k as i64)))
}

pub(super) fn d_count(_: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    let count = enumerate_d_subset(n, k)?.count();
    let rhs = BigInt::from(2).pow(k as u32) * stirling_d(n as i64, k as i64).eval_at_one();
    Ok((constant(count), constant(rhs)))
}

pub(super) fn d_weight(_: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    Ok((
        d_subset_weight(n, k)?,
        weight_factor(k) * stirling_d(n as i64, k as i64),
    ))
}

pub(super) fn btilde(_: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    let e = (k * k.saturating_sub(1) + n) as i64;
    let rhs = (qi(2).pow(n as u32) * stirling_a_q2(n, k)).shift(e);
    Ok((btilde_enum(n, k)?, rhs))
}

pub(super) fn btilde_rec_check(_: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    Ok((btilde_rec(n as i64, k as i64), btilde_enum(n, k)?))
}

/// `n [2]_q^{n-k-1} q^{n-k-1} S[n-1,k]_{q^2}` for `k < n`, else 0.
fn d_correction(n: usize, k: usize) -> LaurentPoly {
    if k >= n {
        return LaurentPoly::zero();
    }
    let e = n - k - 1;
    (qi(2).pow(e as u32) * stirling_a_q2(n - 1, k))
        .shift(e as i64)
        .scale(&BigInt::from(n))
}

pub(super) fn b_from_a_q(_: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    let rhs = (k..=n)
        .map(|j| {
            let c = classical::binomial(n as i64, j as i64);
            (qi(2).pow((j - k) as u32) * stirling_a_q2(j, k))
                .shift((j - k) as i64)
                .scale(&c)
        })
        .sum();
    Ok((stirling_b(n as i64, k as i64), rhs))
}

pub(super) fn b_from_d_q(_: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    let s_d = d_subset_weight_dp(n, k).div_exact(&weight_factor(k))?;
    Ok((stirling_b(n as i64, k as i64), s_d + d_correction(n, k)))
}

pub(super) fn b_from_a(_: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    let rhs: BigInt = (k..=n)
        .map(|j| {
            BigInt::from(2).pow((j - k) as u32)
                * classical::binomial(n as i64, j as i64)
                * classical::s_a(j as i64, k as i64)
        })
        .sum();
    Ok((constant(count_type_b_partitions(n, k)), constant(rhs)))
}

pub(super) fn b_from_d(_: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    let mut rhs = count_type_d_partitions(n, k);
    if k < n {
        rhs += BigInt::from(n) * BigInt::from(2).pow((n - k - 1) as u32) * classical::s_a((n - 1) as i64, k as i64);
    }
    Ok((constant(stirling_b(n as i64, k as i64).eval_at_one()), constant(rhs)))
}
