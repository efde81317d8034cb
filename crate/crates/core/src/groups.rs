//! The symmetric group `S_n`, the hyperoctahedral group `B_n` and the wreath
//! products `Z_r ≀ S_n`: enumeration in a documented lexicographic order,
//! descent statistics, q-Eulerian polynomial builders, and the reversal /
//! complement map `psi` on signed permutations.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::qpoly::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("{group} enumeration for {what} exceeds the cap ({limit})")]
    CapExceeded {
        group: &'static str,
        what: String,
        limit: String,
    },
    #[error("invalid group element: {0}")]
    InvalidElement(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

/// Enumeration limits. Exceeding one yields [`GroupError::CapExceeded`]
/// instead of an unbounded run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` for `S_n`.
    pub sn: usize,
    /// Largest `n` for `B_n`.
    pub bn: usize,
    /// Largest group order `r^n n!` for colored permutation groups.
    pub colored_order: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            sn: 10,
            bn: 8,
            // |B_8| = 2^8 8!, so r = 2 reaches the same n as B_n itself
            colored_order: 10_321_920,
        }
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `r^n n!`, saturating.
pub fn colored_group_order(r: u32, n: usize) -> u64 {
    (0..n)
        .try_fold(factorial(n), |acc, _| acc.checked_mul(u64::from(r)))
        .unwrap_or(u64::MAX)
}

impl Caps {
    pub fn check_sn(&self, n: usize) -> Result<(), GroupError> {
        if n > self.sn {
            return Err(GroupError::CapExceeded {
                group: "S_n",
                what: format!("n={n}"),
                limit: format!("n <= {}", self.sn),
            });
        }
        Ok(())
    }

    pub fn check_bn(&self, n: usize) -> Result<(), GroupError> {
        if n > self.bn {
            return Err(GroupError::CapExceeded {
                group: "B_n",
                what: format!("n={n}"),
                limit: format!("n <= {}", self.bn),
            });
        }
        Ok(())
    }

    pub fn check_colored(&self, r: u32, n: usize) -> Result<(), GroupError> {
        if r == 0 {
            return Err(GroupError::InvalidParams("color count r must be at least 1".into()));
        }
        let order = colored_group_order(r, n);
        if order > self.colored_order {
            return Err(GroupError::CapExceeded {
                group: "Z_r wr S_n",
                what: format!("r={r}, n={n} (order {order})"),
                limit: format!("order <= {}", self.colored_order),
            });
        }
        Ok(())
    }

    pub fn enumerate_sn(&self, n: usize) -> Result<SnIter, GroupError> {
        self.check_sn(n)?;
        Ok(SnIter {
            current: Some((1..=n as u32).collect()),
        })
    }

    pub fn enumerate_bn(&self, n: usize) -> Result<BnIter, GroupError> {
        self.check_bn(n)?;
        Ok(BnIter {
            base: SnIter {
                current: Some((1..=n as u32).collect()),
            },
            abs: None,
            mask: 0,
            n,
        })
    }

    pub fn enumerate_colored(&self, r: u32, n: usize) -> Result<ColoredIter, GroupError> {
        self.check_colored(r, n)?;
        Ok(ColoredIter {
            base: SnIter {
                current: Some((1..=n as u32).collect()),
            },
            abs: None,
            colors: vec![0; n],
            r,
        })
    }

    pub fn eulerian_a(&self, n: usize) -> Result<Vec<LaurentPoly>, GroupError> {
        self.check_sn(n)?;
        let hist = sharded_histogram(n, n.saturating_sub(1), n * n.saturating_sub(1) / 2, |a, h| {
            let (des, maj) = raw_stats_a(a);
            h.bump(des, maj);
        });
        let mut out = hist.into_polys();
        out.truncate(n.max(1));
        Ok(out)
    }

    pub fn eulerian_b(&self, n: usize) -> Result<Vec<LaurentPoly>, GroupError> {
        self.check_bn(n)?;
        let hist = sharded_histogram(n, n, n * n, |a, h| {
            let mut signed = vec![0i32; a.len()];
            for mask in 0..1u32 << a.len() {
                apply_signs(a, mask, &mut signed);
                let (des, fmaj) = raw_stats_b(&signed);
                h.bump(des, fmaj);
            }
        });
        Ok(hist.into_polys())
    }

    pub fn eulerian_r(&self, r: u32, n: usize) -> Result<Vec<LaurentPoly>, GroupError> {
        self.check_colored(r, n)?;
        let r_us = r as usize;
        let max_stat = r_us * n * n.saturating_sub(1) / 2 + (r_us - 1) * n;
        let hist = sharded_histogram(n, n, max_stat, |a, h| {
            let mut colors = vec![0u32; a.len()];
            loop {
                let (des, fmaj) = raw_stats_r(a, &colors, r);
                h.bump(des, fmaj);
                if !next_colors(&mut colors, r) {
                    break;
                }
            }
        });
        Ok(hist.into_polys())
    }
}

/// All permutations of `[n]` in lexicographic order of one-line notation.
pub fn enumerate_sn(n: usize) -> Result<SnIter, GroupError> {
    Caps::default().enumerate_sn(n)
}

/// All signed permutations of `[n]`, ordered by absolute values (lexicographic)
/// and then by sign pattern, the first position varying slowest and `+`
/// before `-`.
pub fn enumerate_bn(n: usize) -> Result<BnIter, GroupError> {
    Caps::default().enumerate_bn(n)
}

/// All `r^n n!` colored permutations, ordered by base permutation and then by
/// color vector (first position slowest).
pub fn enumerate_colored(r: u32, n: usize) -> Result<ColoredIter, GroupError> {
    Caps::default().enumerate_colored(r, n)
}

/// Coefficients `A_{n,k}(q) = sum q^maj` over `S_n` with `des = k`, for
/// `k = 0..n-1` (a single entry when `n = 0`).
pub fn eulerian_a(n: usize) -> Result<Vec<LaurentPoly>, GroupError> {
    Caps::default().eulerian_a(n)
}

/// Coefficients `B_{n,k}(q) = sum q^fmaj` over `B_n` with `des_B = k`, for
/// `k = 0..n`.
pub fn eulerian_b(n: usize) -> Result<Vec<LaurentPoly>, GroupError> {
    Caps::default().eulerian_b(n)
}

/// Coefficients `A^r_{n,k}(q) = sum q^fmaj_r` over `Z_r ≀ S_n` with
/// `des_r = k`, for `k = 0..n`.
pub fn eulerian_r(r: u32, n: usize) -> Result<Vec<LaurentPoly>, GroupError> {
    Caps::default().eulerian_r(r, n)
}

/// Steps `a` to its lexicographic successor; false when `a` was the last.
pub(crate) fn next_permutation(a: &mut [u32]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).expect("successor exists");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

fn next_colors(colors: &mut [u32], r: u32) -> bool {
    for c in colors.iter_mut().rev() {
        *c += 1;
        if *c < r {
            return true;
        }
        *c = 0;
    }
    false
}

pub(crate) fn apply_signs(abs: &[u32], mask: u32, out: &mut [i32]) {
    let n = abs.len();
    for (i, (&a, o)) in abs.iter().zip(out.iter_mut()).enumerate() {
        let negative = mask >> (n - 1 - i) & 1 == 1;
        *o = if negative { -(a as i32) } else { a as i32 };
    }
}

pub(crate) struct Histogram {
    counts: Vec<Vec<u64>>,
}

impl Histogram {
    fn new(max_k: usize, max_stat: usize) -> Self {
        Self {
            counts: vec![vec![0; max_stat + 1]; max_k + 1],
        }
    }

    pub(crate) fn bump(&mut self, k: usize, stat: usize) {
        self.counts[k][stat] += 1;
    }

    fn merge(mut self, other: Histogram) -> Histogram {
        for (row, other_row) in self.counts.iter_mut().zip(other.counts) {
            for (c, o) in row.iter_mut().zip(other_row) {
                *c += o;
            }
        }
        self
    }

    pub(crate) fn into_polys(self) -> Vec<LaurentPoly> {
        self.counts
            .into_iter()
            .map(|row| {
                LaurentPoly::from_terms(
                    row.into_iter()
                        .enumerate()
                        .filter(|(_, c)| *c > 0)
                        .map(|(e, c)| (e as i64, c)),
                )
            })
            .collect()
    }
}

/// Runs `visit` on every permutation of `[n]` (as an absolute-value window),
/// sharded by first letter across threads. Counting is commutative, so the
/// merged histogram does not depend on scheduling.
pub(crate) fn sharded_histogram<F>(n: usize, max_k: usize, max_stat: usize, visit: F) -> Histogram
where
    F: Fn(&[u32], &mut Histogram) + Sync,
{
    if n == 0 {
        let mut h = Histogram::new(max_k, max_stat);
        visit(&[], &mut h);
        return h;
    }
    (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut h = Histogram::new(max_k, max_stat);
            let mut a: Vec<u32> = std::iter::once(first)
                .chain((1..=n as u32).filter(|&x| x != first))
                .collect();
            loop {
                visit(&a, &mut h);
                if !next_permutation(&mut a[1..]) {
                    break;
                }
            }
            h
        })
        .reduce(|| Histogram::new(max_k, max_stat), Histogram::merge)
}

fn raw_stats_a(a: &[u32]) -> (usize, usize) {
    let mut des = 0;
    let mut maj = 0;
    for i in 1..a.len() {
        if a[i - 1] > a[i] {
            des += 1;
            maj += i;
        }
    }
    (des, maj)
}

/// `(des_B, fmaj)` of a signed window with the implicit leading zero.
fn raw_stats_b(w: &[i32]) -> (usize, usize) {
    let mut prev = 0i32;
    let mut des = 0;
    let mut pos_sum = 0;
    let mut neg = 0;
    for (i, &x) in w.iter().enumerate() {
        if prev > x {
            des += 1;
            pos_sum += i;
        }
        if x < 0 {
            neg += 1;
        }
        prev = x;
    }
    (des, 2 * pos_sum + neg)
}

fn raw_stats_r(base: &[u32], colors: &[u32], r: u32) -> (usize, usize) {
    let mut prev = 0i64;
    let mut des = 0;
    let mut pos_sum = 0;
    let mut color_sum = 0;
    for (i, (&v, &z)) in base.iter().zip(colors).enumerate() {
        let key = colored_key(v, z, r);
        if prev > key {
            des += 1;
            pos_sum += i;
        }
        color_sum += z as usize;
        prev = key;
    }
    (des, r as usize * pos_sum + color_sum)
}

/// Position of the colored letter `letter^color` in the total order
/// `n^{r-1} < ... < n^1 < ... < 1^{r-1} < ... < 1^1 < 0 < 1 < ... < n`.
///
/// Uncolored letters map to themselves, colored ones to negative keys, and
/// the implicit letter `0` has key 0. For `r = 2` this is the natural order
/// on signed letters with color 1 read as a minus sign.
pub fn colored_key(letter: u32, color: u32, r: u32) -> i64 {
    if color == 0 {
        i64::from(letter)
    } else {
        -((i64::from(letter) - 1) * (i64::from(r) - 1) + i64::from(color))
    }
}

/// Type A descent number and major index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AStats {
    pub des: usize,
    pub maj: usize,
}

pub fn stats_a(perm: &[u32]) -> AStats {
    let (des, maj) = raw_stats_a(perm);
    AStats { des, maj }
}

/// Type B statistics. `descents` lists `Des_B` in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BStats {
    pub des: usize,
    pub fmaj: usize,
    pub neg: usize,
    pub descents: Vec<usize>,
}

pub fn stats_b(perm: &SignedPerm) -> BStats {
    let descents = perm.descents();
    let neg = perm.neg();
    BStats {
        des: descents.len(),
        fmaj: 2 * descents.iter().sum::<usize>() + neg,
        neg,
        descents,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RStats {
    pub des: usize,
    pub fmaj: usize,
}

pub fn stats_r(perm: &ColoredPerm) -> RStats {
    let (des, fmaj) = raw_stats_r(&perm.base, &perm.colors, perm.r);
    RStats { des, fmaj }
}

/// A signed permutation in window notation `π_1 ... π_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    window: Vec<i32>,
}

impl SignedPerm {
    pub fn new(window: Vec<i32>) -> Result<Self, GroupError> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a > n || std::mem::replace(&mut seen[a], true) {
                return Err(GroupError::InvalidElement(format!(
                    "{window:?} is not a signed permutation of [{n}]"
                )));
            }
        }
        Ok(Self { window })
    }

    pub(crate) fn from_window_unchecked(window: Vec<i32>) -> Self {
        Self { window }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn into_window(self) -> Vec<i32> {
        self.window
    }

    /// `π_i` for `i` in `0..=n`, with `π_0 = 0`.
    pub fn at(&self, i: usize) -> i32 {
        if i == 0 {
            0
        } else {
            self.window[i - 1]
        }
    }

    pub fn neg(&self) -> usize {
        self.window.iter().filter(|&&x| x < 0).count()
    }

    /// `Des_B`: positions `i` in `0..n` with `π_i > π_{i+1}` and `π_0 = 0`.
    pub fn descents(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_window(f, self.window.iter())
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPerm[{self}]")
    }
}

fn write_window<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = T>) -> fmt::Result {
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// An element `π_1^{z_1} ... π_n^{z_n}` of `Z_r ≀ S_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredPerm {
    r: u32,
    base: Vec<u32>,
    colors: Vec<u32>,
}

impl ColoredPerm {
    pub fn new(r: u32, base: Vec<u32>, colors: Vec<u32>) -> Result<Self, GroupError> {
        let n = base.len();
        let mut seen = vec![false; n + 1];
        let base_ok = base
            .iter()
            .all(|&x| x >= 1 && x as usize <= n && !std::mem::replace(&mut seen[x as usize], true));
        if r == 0 || !base_ok || colors.len() != n || colors.iter().any(|&z| z >= r) {
            return Err(GroupError::InvalidElement(format!(
                "base {base:?} with colors {colors:?} is not an element of Z_{r} wr S_{n}"
            )));
        }
        Ok(Self { r, base, colors })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> &[u32] {
        &self.base
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// For `r = 2`, the signed permutation with color 1 read as a minus sign.
    pub fn to_signed(&self) -> Option<SignedPerm> {
        (self.r == 2).then(|| {
            SignedPerm::from_window_unchecked(
                self.base
                    .iter()
                    .zip(&self.colors)
                    .map(|(&v, &z)| if z == 1 { -(v as i32) } else { v as i32 })
                    .collect(),
            )
        })
    }
}

/// Letters render as `v` or `v^z` for a nonzero color.
impl fmt::Display for ColoredPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_window(
            f,
            self.base
                .iter()
                .zip(&self.colors)
                .map(|(v, z)| if *z == 0 { v.to_string() } else { format!("{v}^{z}") }),
        )
    }
}

impl fmt::Debug for ColoredPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredPerm[r={}; {self}]", self.r)
    }
}

pub struct SnIter {
    current: Option<Vec<u32>>,
}

impl Iterator for SnIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let mut succ = out.clone();
        if next_permutation(&mut succ) {
            self.current = Some(succ);
        }
        Some(out)
    }
}

pub struct BnIter {
    base: SnIter,
    abs: Option<Vec<u32>>,
    mask: u32,
    n: usize,
}

impl Iterator for BnIter {
    type Item = SignedPerm;

    fn next(&mut self) -> Option<SignedPerm> {
        if self.abs.is_none() || self.mask == 1 << self.n {
            self.abs = Some(self.base.next()?);
            self.mask = 0;
        }
        let abs = self.abs.as_ref().expect("set above");
        let mut w = vec![0; self.n];
        apply_signs(abs, self.mask, &mut w);
        self.mask += 1;
        Some(SignedPerm::from_window_unchecked(w))
    }
}

pub struct ColoredIter {
    base: SnIter,
    abs: Option<Vec<u32>>,
    colors: Vec<u32>,
    r: u32,
}

impl Iterator for ColoredIter {
    type Item = ColoredPerm;

    fn next(&mut self) -> Option<ColoredPerm> {
        if self.abs.is_none() {
            self.abs = Some(self.base.next()?);
        }
        let out = ColoredPerm {
            r: self.r,
            base: self.abs.clone().expect("set above"),
            colors: self.colors.clone(),
        };
        if !next_colors(&mut self.colors, self.r) {
            self.abs = None;
        }
        Some(out)
    }
}

/// `psi(π)_i = π_{n+1-i} - (n+1)` if that entry is positive, else `+ (n+1)`.
/// It equals reversal followed by the type B complement.
pub fn psi(perm: &SignedPerm) -> SignedPerm {
    let shift = perm.n() as i32 + 1;
    SignedPerm::from_window_unchecked(
        perm.window
            .iter()
            .rev()
            .map(|&x| if x > 0 { x - shift } else { x + shift })
            .collect(),
    )
}

/// Classification of every `i` in `[n-1]` by whether it is a descent and by
/// the signs of `π_i, π_{i+1}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SignTypeProfile {
    /// Descents of sign type `++` (Π₁).
    pub descents_pp: BTreeSet<usize>,
    /// Descents of sign type `--` (Π₂).
    pub descents_mm: BTreeSet<usize>,
    /// Descents of sign type `+-` (Π₃).
    pub descents_pm: BTreeSet<usize>,
    /// Ascents of sign type `++` (Π′₁).
    pub ascents_pp: BTreeSet<usize>,
    /// Ascents of sign type `--` (Π′₂).
    pub ascents_mm: BTreeSet<usize>,
    /// Ascents of sign type `-+` (Π′₃).
    pub ascents_mp: BTreeSet<usize>,
}

pub fn sign_type_profile(perm: &SignedPerm) -> SignTypeProfile {
    let mut p = SignTypeProfile::default();
    for i in 1..perm.n() {
        let (a, b) = (perm.at(i), perm.at(i + 1));
        let set = match (a > 0, b > 0, a > b) {
            (true, true, true) => &mut p.descents_pp,
            (false, false, true) => &mut p.descents_mm,
            (true, false, _) => &mut p.descents_pm,
            (true, true, false) => &mut p.ascents_pp,
            (false, false, false) => &mut p.ascents_mm,
            (false, true, _) => &mut p.ascents_mp,
        };
        set.insert(i);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn sp(w: &[i32]) -> SignedPerm {
        SignedPerm::new(w.to_vec()).unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn sn_enumeration_is_lexicographic() {
        let all: Vec<_> = enumerate_sn(0).unwrap().collect();
        assert_eq!(all, vec![Vec::<u32>::new()]);
        let all: Vec<_> = enumerate_sn(2).unwrap().collect();
        assert_eq!(all, vec![vec![1, 2], vec![2, 1]]);
        let all: Vec<_> = enumerate_sn(3).unwrap().collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![1, 2, 3]);
        assert_eq!(all[5], vec![3, 2, 1]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(enumerate_sn(11), Err(GroupError::CapExceeded { .. })));
    }

    #[test]
    fn bn_enumeration() {
        let b1: Vec<_> = enumerate_bn(1).unwrap().collect();
        assert_eq!(b1, vec![sp(&[1]), sp(&[-1])]);
        assert_eq!(enumerate_bn(2).unwrap().count(), 8);
        let b3: Vec<_> = enumerate_bn(3).unwrap().collect();
        assert_eq!(b3.len(), 48);
        let distinct: BTreeSet<_> = b3.iter().cloned().collect();
        assert_eq!(distinct.len(), 48);
        assert!(b3.iter().all(|p| SignedPerm::new(p.window().to_vec()).is_ok()));
        assert_eq!(enumerate_bn(0).unwrap().count(), 1);
        assert!(matches!(enumerate_bn(9), Err(GroupError::CapExceeded { .. })));
    }

    #[test]
    fn colored_enumeration() {
        let c: Vec<_> = enumerate_colored(1, 3).unwrap().collect();
        assert_eq!(c.len(), 6);
        assert!(c.iter().all(|p| p.colors().iter().all(|&z| z == 0)));
        assert_eq!(enumerate_colored(3, 2).unwrap().count(), 18);
        let as_signed: Vec<_> = enumerate_colored(2, 3)
            .unwrap()
            .map(|p| p.to_signed().unwrap())
            .collect();
        let bn: Vec<_> = enumerate_bn(3).unwrap().collect();
        assert_eq!(as_signed, bn);
        assert!(matches!(enumerate_colored(0, 2), Err(GroupError::InvalidParams(_))));
        assert!(matches!(enumerate_colored(4, 7), Err(GroupError::CapExceeded { .. })));
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a: Vec<_> = enumerate_colored(3, 3).unwrap().collect();
        let b: Vec<_> = enumerate_colored(3, 3).unwrap().collect();
        assert_eq!(a, b);
        let a: Vec<_> = enumerate_bn(4).unwrap().collect();
        let b: Vec<_> = enumerate_bn(4).unwrap().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn element_validation() {
        assert!(SignedPerm::new(vec![1, -1]).is_err());
        assert!(SignedPerm::new(vec![0, 1]).is_err());
        assert!(SignedPerm::new(vec![3, 1]).is_err());
        assert!(ColoredPerm::new(3, vec![1, 2], vec![0, 3]).is_err());
        assert!(ColoredPerm::new(3, vec![1, 1], vec![0, 0]).is_err());
        assert!(ColoredPerm::new(3, vec![2, 1], vec![0, 2]).is_ok());
    }

    #[test]
    fn type_a_stats() {
        assert_eq!(stats_a(&[1, 2, 3, 4]), AStats { des: 0, maj: 0 });
        assert_eq!(stats_a(&[2, 1]), AStats { des: 1, maj: 1 });
        assert_eq!(stats_a(&[3, 1, 4, 2]), AStats { des: 2, maj: 4 });
    }

    #[test]
    fn type_b_stats() {
        let id = stats_b(&SignedPerm::identity(5));
        assert_eq!((id.des, id.fmaj, id.neg), (0, 0, 0));
        assert!(id.descents.is_empty());
        let s = stats_b(&sp(&[-1]));
        assert_eq!((s.des, s.fmaj, s.neg, s.descents), (1, 1, 1, vec![0]));
        let s = stats_b(&sp(&[1, 5, -3, 4, 6, -2]));
        assert_eq!((s.des, s.fmaj, s.neg), (2, 16, 2));
        assert_eq!(s.descents, vec![2, 5]);
    }

    #[test]
    fn colored_stats() {
        let p = ColoredPerm::new(4, vec![1, 2, 3], vec![0, 0, 0]).unwrap();
        assert_eq!(stats_r(&p), RStats { des: 0, fmaj: 0 });
        let p = ColoredPerm::new(3, vec![1], vec![2]).unwrap();
        assert_eq!(stats_r(&p), RStats { des: 1, fmaj: 2 });
        for c in enumerate_colored(2, 2).unwrap() {
            let b = stats_b(&c.to_signed().unwrap());
            assert_eq!(
                stats_r(&c),
                RStats {
                    des: b.des,
                    fmaj: b.fmaj
                }
            );
        }
    }

    #[test]
    fn colored_order_chain() {
        // n^{r-1} < ... < n^1 < ... < 1^{r-1} < ... < 1^1 < 0 < 1 < ... < n
        let (r, n) = (4u32, 3u32);
        let mut chain = Vec::new();
        for v in (1..=n).rev() {
            for z in (1..r).rev() {
                chain.push(colored_key(v, z, r));
            }
        }
        chain.push(0);
        chain.extend((1..=n).map(|v| colored_key(v, 0, r)));
        assert!(chain.windows(2).all(|w| w[0] < w[1]), "{chain:?}");
    }

    #[test]
    fn eulerian_small_cases() {
        assert_eq!(eulerian_a(0).unwrap(), vec![lp("1")]);
        assert_eq!(eulerian_a(1).unwrap(), vec![lp("1")]);
        assert_eq!(eulerian_a(2).unwrap(), vec![lp("1"), lp("q")]);
        let total: LaurentPoly = eulerian_a(3).unwrap().into_iter().sum();
        assert_eq!(total, crate::qpoly::q_factorial(3));
        assert_eq!(eulerian_b(1).unwrap(), vec![lp("1"), lp("q")]);
        assert_eq!(eulerian_r(3, 1).unwrap(), vec![lp("1"), lp("q + q^2")]);
    }

    #[test]
    fn eulerian_builders_match_element_enumeration() {
        for n in 0..=5 {
            let mut by_hand = vec![LaurentPoly::zero(); n + 1];
            for p in enumerate_bn(n).unwrap() {
                let s = stats_b(&p);
                by_hand[s.des] += LaurentPoly::q_pow(s.fmaj as i64);
            }
            assert_eq!(eulerian_b(n).unwrap(), by_hand, "n={n}");
        }
        for (r, n) in [(1, 4), (3, 3), (4, 2)] {
            let mut by_hand = vec![LaurentPoly::zero(); n + 1];
            for p in enumerate_colored(r, n).unwrap() {
                let s = stats_r(&p);
                by_hand[s.des] += LaurentPoly::q_pow(s.fmaj as i64);
            }
            assert_eq!(eulerian_r(r, n).unwrap(), by_hand, "r={r} n={n}");
        }
    }

    #[test]
    fn mahonian_and_group_order_checks() {
        for n in 0..=7 {
            let total: LaurentPoly = eulerian_a(n).unwrap().into_iter().sum();
            assert_eq!(total, crate::qpoly::q_factorial(n as u64));
            let b_total: LaurentPoly = eulerian_b(n).unwrap().into_iter().sum();
            let r2_total: LaurentPoly = eulerian_r(2, n).unwrap().into_iter().sum();
            assert_eq!(b_total, r2_total);
            assert_eq!(b_total.eval_at_one(), BigInt::from(colored_group_order(2, n)));
        }
        for (r, n) in [(1, 5), (3, 4), (4, 3), (5, 3)] {
            let total: BigInt = eulerian_r(r, n).unwrap().iter().map(|p| p.eval_at_one()).sum();
            assert_eq!(total, BigInt::from(colored_group_order(r, n)));
        }
    }

    #[test]
    fn eulerian_r_specialises_to_a_and_b() {
        for n in 0..=6 {
            let mut a = eulerian_a(n).unwrap();
            a.resize(n + 1, LaurentPoly::zero());
            assert_eq!(eulerian_r(1, n).unwrap(), a);
            assert_eq!(eulerian_r(2, n).unwrap(), eulerian_b(n).unwrap());
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&sp(&[1, 5, -3, 4, 6, -2])), sp(&[5, -1, -3, 4, -2, -6]));
        assert_eq!(psi(&sp(&[1])), sp(&[-1]));
        for p in enumerate_bn(3).unwrap() {
            assert_eq!(psi(&psi(&p)), p);
        }
    }

    #[test]
    fn sign_types() {
        let id = sign_type_profile(&SignedPerm::identity(5));
        assert_eq!(id.ascents_pp, set(&[1, 2, 3, 4]));
        assert_eq!(id.descents_pp.len() + id.descents_mm.len() + id.descents_pm.len(), 0);
        let p = sign_type_profile(&sp(&[1, 5, -3, 4, 6, -2]));
        assert_eq!(p.descents_pm, set(&[2, 5]));
        assert_eq!(p.ascents_pp, set(&[1, 4]));
        assert_eq!(p.ascents_mp, set(&[3]));
        assert!(p.descents_pp.is_empty() && p.descents_mm.is_empty() && p.ascents_mm.is_empty());
        let p = sign_type_profile(&sp(&[-4, -3, -2, -1]));
        assert_eq!(p.ascents_mm, set(&[1, 2, 3]));
    }

    #[test]
    fn sign_type_sets_partition_positions() {
        for n in 1..=5 {
            for perm in enumerate_bn(n).unwrap() {
                let p = sign_type_profile(&perm);
                let sets = [
                    &p.descents_pp,
                    &p.descents_mm,
                    &p.descents_pm,
                    &p.ascents_pp,
                    &p.ascents_mm,
                    &p.ascents_mp,
                ];
                let total: usize = sets.iter().map(|s| s.len()).sum();
                let union: BTreeSet<usize> = sets.iter().flat_map(|s| s.iter().copied()).collect();
                assert_eq!(total, n - 1);
                assert_eq!(union, (1..n).collect());
            }
        }
    }

    #[test]
    fn des_complement_and_fmaj_relation() {
        for n in 0..=6 {
            for p in enumerate_bn(n).unwrap() {
                let s = stats_b(&p);
                let t = stats_b(&psi(&p));
                assert_eq!(t.des, n - s.des);
                let lhs = s.fmaj as i64;
                let rhs = (2 * n * s.des) as i64 - (n * n) as i64 + t.fmaj as i64;
                assert_eq!(lhs, rhs, "{p}");
            }
        }
    }

    #[test]
    fn index_sum_lemma() {
        for n in 1..=6 {
            for perm in enumerate_bn(n).unwrap() {
                let p = sign_type_profile(&perm);
                let m = perm.neg();
                let lhs = p.descents_pm.iter().sum::<usize>() + m;
                let tail = if perm.at(n) < 0 { n } else { 0 };
                assert_eq!(lhs, p.ascents_mp.iter().sum::<usize>() + tail, "{perm}");
            }
        }
    }

    #[test]
    fn b_q_symmetry() {
        for n in 0..=6i64 {
            let b = eulerian_b(n as usize).unwrap();
            for k in 0..=n {
                let rhs = b[(n - k) as usize].shift(2 * n * k - n * n);
                assert_eq!(b[k as usize], rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(sp(&[-2, 1]).to_string(), "-2 1");
        let c = ColoredPerm::new(3, vec![2, 1], vec![2, 0]).unwrap();
        assert_eq!(c.to_string(), "2^2 1");
    }
}
