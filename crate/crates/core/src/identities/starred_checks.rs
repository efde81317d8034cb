use std::collections::HashMap;

use crate::qpoly::{LaurentPoly, TPoly};
use crate::starred::{bfmaj_rec, enumerate_starred_with, fmaj_starred, insert_bar, insert_star, Letter, StarredPerm};

use super::common::{at, bump, constant, defect_poly, n_of};
use super::memo::Workspace;
use super::type_b::{ascent_sum, scaled_b};
use super::{IdentityError, Params, Value};

type Pair = Result<(LaurentPoly, LaurentPoly), IdentityError>;

pub(super) fn starred_product(ws: &Workspace, p: &Params) -> Result<(Value, Value), IdentityError> {
    let n = n_of(p);
    let lhs = TPoly::from_coeffs(ws.bfmaj(n)?.to_vec());
    let eul = ws.eulerian_b(n)?;
    let rhs = (0..=n)
        .map(|d| {
            let prod: TPoly = (1..=d as i64)
                .map(|i| TPoly::from_coeffs(vec![LaurentPoly::one(), LaurentPoly::q_pow(1 - 2 * i)]))
                .product();
            prod.scale(&eul[d])
        })
        .sum();
    Ok((lhs.into(), Value::TPoly(rhs)))
}

pub(super) fn bfmaj_euler(ws: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    Ok((at(&ws.bfmaj(n)?, n - k), ascent_sum(ws, n, k)?))
}

pub(super) fn bfmaj_rec_check(ws: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    Ok((at(&ws.bfmaj(n)?, k), bfmaj_rec(n as i64, k as i64)))
}

pub(super) fn so_closed_form(ws: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    Ok((at(&ws.bfmaj(n)?, n - k), scaled_b(n, k)))
}

/// Which insertion map, which letter, and whether the label is 0.
fn case_matches(variant: &str, star: bool, letter: Letter, label: usize) -> bool {
    let first = label == 0;
    match variant {
        "bar-plain" => !star && letter == Letter::Plain,
        "bar-barred-first" => !star && letter == Letter::Barred && first,
        "bar-barred" => !star && letter == Letter::Barred && !first,
        "star-plain" => star && letter == Letter::Plain,
        "star-barred-first" => star && letter == Letter::Barred && first,
        "star-barred" => star && letter == Letter::Barred && !first,
        _ => false,
    }
}

/// Predicted change of `fmaj` for target size `n` with `k` stars.
fn predicted(star: bool, letter: Letter, label: usize, n: usize, k: usize) -> i64 {
    let (i, free) = (label as i64, (n - k) as i64);
    match (star, letter, label) {
        (false, Letter::Plain, _) => 2 * i,
        (false, Letter::Barred, 0) => 2 * free - 1,
        (false, Letter::Barred, _) => 2 * i - 1,
        (true, Letter::Plain, _) => 2 * i - 1,
        (true, Letter::Barred, 0) => 2 * free,
        (true, Letter::Barred, _) => 2 * i - 2,
    }
}

/// Every (source, letter, label) producing a target of size `n` with `k`
/// stars, tagged with whether the star map was used.
fn insertions(
    ws: &Workspace,
    n: usize,
    k: usize,
    mut visit: impl FnMut(&StarredPerm, bool, Letter, usize, StarredPerm),
) -> Result<(), IdentityError> {
    if k < n {
        for src in enumerate_starred_with(&ws.caps, n - 1, k)? {
            for letter in Letter::BOTH {
                for label in 0..n - k {
                    let img = insert_bar(&src, letter, label)?;
                    visit(&src, false, letter, label, img);
                }
            }
        }
    }
    if k >= 1 {
        for src in enumerate_starred_with(&ws.caps, n - 1, k - 1)? {
            for letter in Letter::BOTH {
                for label in usize::from(letter == Letter::Plain)..=n - k {
                    let img = insert_star(&src, letter, label)?;
                    visit(&src, true, letter, label, img);
                }
            }
        }
    }
    Ok(())
}

pub(super) fn fmaj_deltas(ws: &Workspace, p: &Params) -> Result<(Value, Value), IdentityError> {
    let n = n_of(p);
    let variant = p.variant.as_deref().expect("normalized params carry variant");
    let mut hist = Vec::new();
    let mut count = 0u64;
    for k in 0..=n {
        insertions(ws, n, k, |src, star, letter, label, img| {
            if !case_matches(variant, star, letter, label) {
                return;
            }
            let delta = fmaj_starred(&img) as i64 - fmaj_starred(src) as i64;
            bump(&mut hist, delta.abs_diff(predicted(star, letter, label, n, k)) as usize);
            count += 1;
        })?;
    }
    Ok((defect_poly(&hist).into(), constant(count).into()))
}

/// Images counted by multiplicity: a perfect tiling gives `|B^>_{n,k}| q`.
/// Images of the wrong shape contribute `q^{-1}`.
pub(super) fn phi_images(ws: &Workspace, p: &Params, k: usize) -> Pair {
    let n = n_of(p);
    let mut hits: HashMap<StarredPerm, i64> = HashMap::new();
    let mut invalid = 0i64;
    insertions(ws, n, k, |_, _, _, _, img| {
        let valid =
            img.n() == n && img.k() == k && StarredPerm::new(img.perm().clone(), img.stars().iter().copied()).is_ok();
        if valid {
            *hits.entry(img).or_default() += 1;
        } else {
            invalid += 1;
        }
    })?;
    let mut lhs: LaurentPoly = hits.values().map(|&h| LaurentPoly::q_pow(h)).sum();
    lhs += LaurentPoly::monomial(invalid, -1);
    let size = bfmaj_rec(n as i64, k as i64).eval_at_one();
    Ok((lhs, LaurentPoly::monomial(size, 1)))
}
