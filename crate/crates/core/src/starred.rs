//! Descent-starred signed permutations `(π, S)` with `S ⊆ Des_B(π)`, their
//! flag-major statistic, the fmaj-labelling of insertable gaps, the insertion
//! maps `φ^|` and `φ^*`, and the correspondence with ordered set partitions
//! with sign.
//!
//! Gap `i` (for `i` in `0..=n`) is the space after `π_i`; gap 0 sits between
//! the implicit `π_0 = 0` and `π_1`. A star on gap `j` marks the descent at
//! position `j`.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::groups::{apply_signs, sharded_histogram, Caps, GroupError, SignedPerm};
use crate::qpoly::{q_int, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StarredError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("label {label} is outside the allowed range {lo}..={hi}")]
    InvalidLabel { label: usize, lo: usize, hi: usize },
    #[error("stars {stars:?} are not all descents of {perm}")]
    InvalidStars { perm: SignedPerm, stars: Vec<usize> },
    #[error("invalid ordered signed partition: {0}")]
    InvalidPartition(String),
}

/// A signed permutation with a chosen set of starred descents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StarredPerm {
    perm: SignedPerm,
    stars: BTreeSet<usize>,
}

impl StarredPerm {
    pub fn new(perm: SignedPerm, stars: impl IntoIterator<Item = usize>) -> Result<Self, StarredError> {
        let stars: BTreeSet<usize> = stars.into_iter().collect();
        let des = perm.descents();
        if !stars.iter().all(|s| des.binary_search(s).is_ok()) {
            return Err(StarredError::InvalidStars {
                perm,
                stars: stars.into_iter().collect(),
            });
        }
        Ok(Self { perm, stars })
    }

    pub fn perm(&self) -> &SignedPerm {
        &self.perm
    }

    pub fn stars(&self) -> &BTreeSet<usize> {
        &self.stars
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn k(&self) -> usize {
        self.stars.len()
    }
}

/// Entries separated by spaces, `*` after the left neighbour of a starred
/// gap, and a leading `0*` only when gap 0 is starred.
impl fmt::Display for StarredPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::with_capacity(self.n() + 1);
        if self.stars.contains(&0) {
            parts.push("0*".to_string());
        }
        for (i, x) in self.perm.window().iter().enumerate() {
            let star = if self.stars.contains(&(i + 1)) { "*" } else { "" };
            parts.push(format!("{x}{star}"));
        }
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for StarredPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StarredPerm[{self}]")
    }
}

/// All `(π, S)` with `π ∈ B_n` and `|S| = k`, following the `B_n`
/// enumeration order and then the lexicographic order of `S`.
pub fn enumerate_starred(n: usize, k: usize) -> Result<impl Iterator<Item = StarredPerm>, StarredError> {
    enumerate_starred_with(&Caps::default(), n, k)
}

pub fn enumerate_starred_with(
    caps: &Caps,
    n: usize,
    k: usize,
) -> Result<impl Iterator<Item = StarredPerm>, StarredError> {
    let perms = caps.enumerate_bn(n)?;
    Ok(perms.flat_map(move |perm| {
        let des = perm.descents();
        des.into_iter()
            .combinations(k)
            .map(|s| StarredPerm {
                perm: perm.clone(),
                stars: s.into_iter().collect(),
            })
            .collect::<Vec<_>>()
    }))
}

/// `fmaj(π) - Σ_{j∈S} (2|Des_B(π) ∩ {j,…,n-1}| - 1)`.
pub fn fmaj_starred(sp: &StarredPerm) -> usize {
    let des = sp.perm.descents();
    let fmaj = 2 * des.iter().sum::<usize>() + sp.perm.neg();
    let sub: usize = sp
        .stars
        .iter()
        .map(|j| 2 * des.iter().filter(|&&d| d >= *j).count() - 1)
        .sum();
    fmaj - sub
}

/// Gap positions indexed by label: `labelling[i]` is the gap carrying label
/// `i`. Starred gaps carry no label; gap `n` is label 0, unstarred descents
/// follow from right to left, and the remaining gaps from left to right.
pub fn fmaj_labelling(sp: &StarredPerm) -> Vec<usize> {
    let n = sp.n();
    let des = sp.perm.descents();
    let mut labels = vec![n];
    labels.extend(des.iter().rev().filter(|d| !sp.stars.contains(d)));
    labels.extend((0..n).filter(|g| !sp.stars.contains(g) && des.binary_search(g).is_err()));
    labels
}

/// The letter inserted by `φ^|` and `φ^*`: the new largest value `n` or
/// its negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Plain,
    Barred,
}

impl Letter {
    pub const BOTH: [Letter; 2] = [Letter::Plain, Letter::Barred];
}

fn insert_and_shift(sp: &StarredPerm, letter: Letter, gap: usize) -> (SignedPerm, BTreeSet<usize>) {
    let n = sp.n() as i32 + 1;
    let mut w = sp.perm.window().to_vec();
    w.insert(gap, if letter == Letter::Plain { n } else { -n });
    let perm = SignedPerm::from_window_unchecked(w);
    let des = perm.descents();
    let mut stars = BTreeSet::new();
    for &j in &sp.stars {
        if j < gap {
            stars.insert(j);
        } else {
            let idx = des.binary_search(&(j + 1)).expect("old descent survives insertion");
            stars.insert(des[idx - 1]);
        }
    }
    (perm, stars)
}

fn check_label(label: usize, lo: usize, hi: usize) -> Result<(), StarredError> {
    if label < lo || label > hi {
        return Err(StarredError::InvalidLabel { label, lo, hi });
    }
    Ok(())
}

/// `φ^|`: inserts `letter` at the gap labelled `label` and moves every star
/// to the right of the insertion to the previous descent. Labels run over
/// `0..n-k`, where the result has size `n` and `k` stars.
pub fn insert_bar(sp: &StarredPerm, letter: Letter, label: usize) -> Result<StarredPerm, StarredError> {
    let labels = fmaj_labelling(sp);
    check_label(label, 0, labels.len() - 1)?;
    let (perm, stars) = insert_and_shift(sp, letter, labels[label]);
    Ok(StarredPerm { perm, stars })
}

/// `φ^*`: as [`insert_bar`], then stars the rightmost descent. Labels run
/// over `1..=n-k` for the plain letter and `0..=n-k` for the barred one.
pub fn insert_star(sp: &StarredPerm, letter: Letter, label: usize) -> Result<StarredPerm, StarredError> {
    let labels = fmaj_labelling(sp);
    let lo = usize::from(letter == Letter::Plain);
    check_label(label, lo, labels.len() - 1)?;
    let (perm, mut stars) = insert_and_shift(sp, letter, labels[label]);
    let last = *perm.descents().last().expect("inserted letter leaves a descent");
    let fresh = stars.insert(last);
    debug_assert!(fresh, "rightmost descent already starred");
    Ok(StarredPerm { perm, stars })
}

/// `B^fmaj_{n,k}(q) = Σ q^{fmaj((π,S))}` over `B^>_{n,k}`.
pub fn bfmaj_enum(n: usize, k: usize) -> Result<LaurentPoly, StarredError> {
    let all = bfmaj_enum_all(n)?;
    Ok(all.get(k).cloned().unwrap_or_default())
}

/// `[B^fmaj_{n,0}, …, B^fmaj_{n,n}]` in one pass over `B_n` and all star
/// subsets.
pub fn bfmaj_enum_all(n: usize) -> Result<Vec<LaurentPoly>, StarredError> {
    bfmaj_enum_all_with(&Caps::default(), n)
}

pub fn bfmaj_enum_all_with(caps: &Caps, n: usize) -> Result<Vec<LaurentPoly>, StarredError> {
    caps.check_bn(n)?;
    let hist = sharded_histogram(n, n, n * n, |abs, h| {
        let mut w = vec![0i32; abs.len()];
        let mut des = Vec::with_capacity(abs.len());
        for mask in 0..1u32 << abs.len() {
            apply_signs(abs, mask, &mut w);
            des.clear();
            let mut prev = 0;
            for (i, &x) in w.iter().enumerate() {
                if prev > x {
                    des.push(i);
                }
                prev = x;
            }
            let neg = mask.count_ones() as usize;
            let fmaj = 2 * des.iter().sum::<usize>() + neg;
            let d = des.len();
            for smask in 0..1u32 << d {
                let sub: usize = (0..d)
                    .filter(|idx| smask >> idx & 1 == 1)
                    .map(|idx| 2 * (d - idx) - 1)
                    .sum();
                h.bump(smask.count_ones() as usize, fmaj - sub);
            }
        }
    });
    Ok(hist.into_polys())
}

/// `B^fmaj_{n,k}(q) = [2n-2k]_q B^fmaj_{n-1,k}(q) + [2n-2k+1]_q B^fmaj_{n-1,k-1}(q)`,
/// with value 1 at `k = n` and 0 outside `0..=n`.
pub fn bfmaj_rec(n: i64, k: i64) -> LaurentPoly {
    if n < 0 || k < 0 || k > n {
        return LaurentPoly::zero();
    }
    let mut row = vec![LaurentPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            if j == m {
                next.push(LaurentPoly::one());
                continue;
            }
            let mut v = q_int((2 * m - 2 * j) as u64) * &row[j as usize];
            if j >= 1 {
                v += q_int((2 * m - 2 * j + 1) as u64) * &row[j as usize - 1];
            }
            next.push(v);
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// `S^o_B[n,k] = [2k]_q S^o_B[n-1,k-1] + [2k+1]_q S^o_B[n-1,k]` with
/// `S^o_B[0,k] = δ_{0k}`.
pub fn ordered_stirling_b(n: i64, k: i64) -> LaurentPoly {
    if n < 0 || k < 0 || k > n {
        return LaurentPoly::zero();
    }
    let mut row = vec![LaurentPoly::one()];
    for m in 1..=n as usize {
        let mut next = vec![LaurentPoly::zero(); m + 1];
        for j in 0..=m {
            if j >= 1 {
                next[j] += q_int(2 * j as u64) * &row[j - 1];
            }
            if j < m {
                next[j] += q_int(2 * j as u64 + 1) * &row[j];
            }
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// An ordered set partition with sign `(S_0, S_1, …, S_k)`: `S_0` holds 0 and
/// only negative letters, and the absolute values of the nonzero entries
/// form `[n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSignPartition {
    parts: Vec<BTreeSet<i32>>,
}

impl OrderedSignPartition {
    pub fn new(parts: Vec<BTreeSet<i32>>) -> Result<Self, StarredError> {
        let bad = |msg: &str| Err(StarredError::InvalidPartition(msg.to_string()));
        let Some(zero) = parts.first() else {
            return bad("missing zero part");
        };
        if !zero.contains(&0) || zero.iter().any(|&x| x > 0) {
            return bad("zero part must contain 0 and only negative letters");
        }
        if parts[1..].iter().any(|p| p.is_empty() || p.contains(&0)) {
            return bad("nonzero parts must be nonempty and avoid 0");
        }
        let abs: Vec<u32> = parts
            .iter()
            .flatten()
            .filter(|&&x| x != 0)
            .map(|x| x.unsigned_abs())
            .sorted()
            .collect();
        if !abs.iter().copied().eq(1..=abs.len() as u32) {
            return bad("absolute values must be exactly [n]");
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[BTreeSet<i32>] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(BTreeSet::len).sum::<usize>() - 1
    }

    /// Number of parts besides `S_0`.
    pub fn k(&self) -> usize {
        self.parts.len() - 1
    }
}

/// Parts in order, entries descending, e.g. `{0,-1} {7,-2} {3}`.
impl fmt::Display for OrderedSignPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self
            .parts
            .iter()
            .map(|p| format!("{{{}}}", p.iter().rev().join(",")))
            .join(" ");
        f.write_str(&s)
    }
}

impl fmt::Debug for OrderedSignPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedSignPartition[{self}]")
    }
}

/// Writes every part in decreasing order, `S_0` first, and stars the gaps
/// inside each part (including the gap after 0 when `S_0 ≠ {0}`).
pub fn partition_to_starred(p: &OrderedSignPartition) -> StarredPerm {
    let mut window = Vec::with_capacity(p.n());
    let mut stars = BTreeSet::new();
    for (i, part) in p.parts.iter().enumerate() {
        let start = window.len();
        window.extend(part.iter().rev().filter(|&&x| x != 0 || i > 0));
        let first_gap = if i == 0 { 0 } else { start + 1 };
        stars.extend(first_gap..window.len());
    }
    StarredPerm {
        perm: SignedPerm::from_window_unchecked(window),
        stars,
    }
}

/// Inverse of [`partition_to_starred`]: cuts the window at unstarred gaps.
pub fn starred_to_partition(sp: &StarredPerm) -> OrderedSignPartition {
    let mut parts = vec![BTreeSet::from([0])];
    for (i, &x) in sp.perm.window().iter().enumerate() {
        if !sp.stars.contains(&i) {
            parts.push(BTreeSet::new());
        }
        parts.last_mut().expect("nonempty").insert(x);
    }
    OrderedSignPartition { parts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{enumerate_bn, eulerian_b, stats_b};
    use crate::qpoly::q_binomial;
    use crate::stirling::{classical, stirling_b};
    use num_bigint::BigInt;
    use std::collections::HashSet;

    fn sp(w: &[i32], stars: &[usize]) -> StarredPerm {
        StarredPerm::new(SignedPerm::new(w.to_vec()).unwrap(), stars.iter().copied()).unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn part(xs: &[i32]) -> BTreeSet<i32> {
        xs.iter().copied().collect()
    }

    #[test]
    fn small_enumerations() {
        let e: Vec<_> = enumerate_starred(1, 0).unwrap().collect();
        assert_eq!(e, vec![sp(&[1], &[]), sp(&[-1], &[])]);
        let e: Vec<_> = enumerate_starred(1, 1).unwrap().collect();
        assert_eq!(e, vec![sp(&[-1], &[0])]);
        assert!(matches!(
            enumerate_starred(9, 0),
            Err(StarredError::Group(GroupError::CapExceeded { .. }))
        ));
    }

    #[test]
    fn full_star_sets_match_top_descent_count() {
        for n in 0..=5 {
            let forced = enumerate_bn(n).unwrap().filter(|p| p.descents().len() == n).count();
            assert_eq!(enumerate_starred(n, n).unwrap().count(), forced);
        }
    }

    #[test]
    fn star_sets_must_be_descents() {
        let p = SignedPerm::new(vec![1, 2]).unwrap();
        assert!(matches!(
            StarredPerm::new(p, [1]),
            Err(StarredError::InvalidStars { .. })
        ));
    }

    #[test]
    fn starred_fmaj_examples() {
        assert_eq!(fmaj_starred(&sp(&[-1], &[0])), 0);
        assert_eq!(
            fmaj_starred(&sp(&[3, -1, 2], &[])),
            stats_b(&SignedPerm::new(vec![3, -1, 2]).unwrap()).fmaj
        );
        assert_eq!(fmaj_starred(&sp(&[4, 3, -1, 7, -2, -6, 8, -5], &[1, 2, 4, 7])), 20);
    }

    #[test]
    fn labelling_examples() {
        let x = sp(&[4, 3, -1, 7, -2, -6, 8, -5], &[1, 2, 4, 7]);
        assert_eq!(fmaj_labelling(&x), vec![8, 5, 0, 3, 6]);
        assert_eq!(fmaj_labelling(&sp(&[1], &[])), vec![1, 0]);
        // every descent starred: gap n first, then ascent gaps left to right
        let y = sp(&[2, -1, 3], &[1]);
        assert_eq!(fmaj_labelling(&y), vec![3, 0, 2]);
    }

    #[test]
    fn labelling_covers_unstarred_gaps() {
        for n in 0..=5 {
            for k in 0..=n {
                for x in enumerate_starred(n, k).unwrap() {
                    let gaps = fmaj_labelling(&x);
                    assert_eq!(gaps.len(), n - k + 1, "{x}");
                    assert_eq!(gaps.iter().collect::<BTreeSet<_>>().len(), gaps.len(), "{x}");
                    assert!(gaps.iter().all(|g| *g <= n && !x.stars().contains(g)), "{x}");
                }
            }
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(sp(&[-2, 1], &[]).to_string(), "-2 1");
        assert_eq!(sp(&[2, 1], &[1]).to_string(), "2* 1");
        assert_eq!(sp(&[-1, 2], &[0]).to_string(), "0* -1 2");
    }

    #[test]
    fn insertion_examples() {
        let one = sp(&[1], &[]);
        let r = insert_bar(&one, Letter::Plain, 1).unwrap();
        assert_eq!(r, sp(&[2, 1], &[]));
        assert_eq!(fmaj_starred(&r), 2);
        let r = insert_bar(&one, Letter::Barred, 1).unwrap();
        assert_eq!(r, sp(&[-2, 1], &[]));
        assert_eq!(fmaj_starred(&r), 1);
        let r = insert_bar(&one, Letter::Barred, 0).unwrap();
        assert_eq!(r, sp(&[1, -2], &[]));
        assert_eq!(fmaj_starred(&r), 3);

        let r = insert_star(&one, Letter::Plain, 1).unwrap();
        assert_eq!(r, sp(&[2, 1], &[1]));
        assert_eq!(fmaj_starred(&r), 1);
        let r = insert_star(&one, Letter::Barred, 1).unwrap();
        assert_eq!(r, sp(&[-2, 1], &[0]));
        assert_eq!(fmaj_starred(&r), 0);
        let r = insert_star(&one, Letter::Barred, 0).unwrap();
        assert_eq!(r, sp(&[1, -2], &[1]));
        assert_eq!(fmaj_starred(&r), 2);
    }

    #[test]
    fn insertion_label_ranges() {
        let one = sp(&[1], &[]);
        assert!(matches!(
            insert_bar(&one, Letter::Plain, 2),
            Err(StarredError::InvalidLabel { label: 2, lo: 0, hi: 1 })
        ));
        assert!(matches!(
            insert_star(&one, Letter::Plain, 0),
            Err(StarredError::InvalidLabel { label: 0, lo: 1, hi: 1 })
        ));
        assert!(insert_star(&one, Letter::Barred, 0).is_ok());
    }

    /// Every source, letter and label for target size `n <= 6`: deltas match
    /// the insertion lemmas and the images tile `B^>_{n,k}` exactly once.
    #[test]
    fn insertion_maps_tile_starred_permutations() {
        for n in 1..=5usize {
            for k in 0..=n {
                let mut seen = HashSet::new();
                let mut total = 0usize;
                if k < n {
                    for src in enumerate_starred(n - 1, k).unwrap() {
                        let base = fmaj_starred(&src) as i64;
                        for letter in Letter::BOTH {
                            for i in 0..n - k {
                                let img = insert_bar(&src, letter, i).unwrap();
                                let delta = fmaj_starred(&img) as i64 - base;
                                let i = i as i64;
                                let expected = match (letter, i) {
                                    (Letter::Plain, _) => 2 * i,
                                    (Letter::Barred, 0) => 2 * (n - k) as i64 - 1,
                                    (Letter::Barred, _) => 2 * i - 1,
                                };
                                assert_eq!(delta, expected, "bar {src} {letter:?} {i}");
                                assert_eq!(img.k(), k);
                                assert!(seen.insert(img));
                                total += 1;
                            }
                        }
                    }
                }
                if k >= 1 {
                    for src in enumerate_starred(n - 1, k - 1).unwrap() {
                        let base = fmaj_starred(&src) as i64;
                        for letter in Letter::BOTH {
                            let lo = usize::from(letter == Letter::Plain);
                            for i in lo..=n - k {
                                let img = insert_star(&src, letter, i).unwrap();
                                let delta = fmaj_starred(&img) as i64 - base;
                                let i = i as i64;
                                let expected = match (letter, i) {
                                    (Letter::Plain, _) => 2 * i - 1,
                                    (Letter::Barred, 0) => 2 * (n - k) as i64,
                                    (Letter::Barred, _) => 2 * i - 2,
                                };
                                assert_eq!(delta, expected, "star {src} {letter:?} {i}");
                                assert_eq!(img.k(), k);
                                assert!(seen.insert(img));
                                total += 1;
                            }
                        }
                    }
                }
                assert_eq!(total, enumerate_starred(n, k).unwrap().count(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn bfmaj_small_values() {
        assert_eq!(bfmaj_enum(1, 0).unwrap(), lp("1 + q"));
        assert_eq!(bfmaj_enum(1, 1).unwrap(), lp("1"));
        assert_eq!(bfmaj_rec(1, 0), lp("1 + q"));
        assert!(bfmaj_rec(3, -1).is_zero());
        for n in 0..6 {
            assert_eq!(bfmaj_rec(n, n), lp("1"));
        }
    }

    #[test]
    fn bfmaj_enum_matches_direct_sum() {
        for n in 0..=4 {
            for k in 0..=n {
                let direct: LaurentPoly = enumerate_starred(n, k)
                    .unwrap()
                    .map(|s| LaurentPoly::q_pow(fmaj_starred(&s) as i64))
                    .sum();
                assert_eq!(bfmaj_enum(n, k).unwrap(), direct, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn bfmaj_counts_star_choices() {
        for n in 0..=5usize {
            for k in 0..=n {
                let count: BigInt = enumerate_bn(n)
                    .unwrap()
                    .map(|p| classical::binomial(p.descents().len() as i64, k as i64))
                    .sum();
                assert_eq!(bfmaj_enum(n, k).unwrap().eval_at_one(), count);
            }
        }
    }

    #[test]
    fn bfmaj_recurrence_and_closed_form() {
        for n in 0..=6i64 {
            let all = bfmaj_enum_all(n as usize).unwrap();
            for k in 0..=n {
                assert_eq!(all[k as usize], bfmaj_rec(n, k), "n={n} k={k}");
                assert_eq!(all[(n - k) as usize], ordered_stirling_b(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn ordered_stirling_examples() {
        assert_eq!(ordered_stirling_b(0, 0), lp("1"));
        assert_eq!(ordered_stirling_b(1, 1), lp("1 + q"));
        let two = q_int(2);
        for n in 0..=8i64 {
            for k in 0..=n {
                let qfact_sq: LaurentPoly = (1..=k as u64).map(|i| q_int(i).subst_q_power(2)).product();
                let rhs = two.pow(k as u32) * qfact_sq * stirling_b(n, k);
                assert_eq!(ordered_stirling_b(n, k), rhs);
            }
        }
    }

    #[test]
    fn euler_type_expansion() {
        for n in 0..=5i64 {
            let b = eulerian_b(n as usize).unwrap();
            let all = bfmaj_enum_all(n as usize).unwrap();
            for k in 0..=n {
                let rhs: LaurentPoly = (0..=k)
                    .map(|l| {
                        b[(n - l) as usize].shift((n - k) * (2 * l - n - k))
                            * q_binomial((n - l) as u64, k - l).subst_q_power(2)
                    })
                    .sum();
                assert_eq!(all[(n - k) as usize], rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn partition_example() {
        let p = OrderedSignPartition::new(vec![
            part(&[0, -3, -1, -4]),
            part(&[-2, 7]),
            part(&[-6]),
            part(&[8, -5]),
        ])
        .unwrap();
        let s = partition_to_starred(&p);
        assert_eq!(s, sp(&[-1, -3, -4, 7, -2, -6, 8, -5], &[0, 1, 2, 4, 7]));
        assert_eq!(s.to_string(), "0* -1* -3* -4 7* -2 -6 8* -5");
        assert_eq!(starred_to_partition(&s), p);
        assert_eq!(p.to_string(), "{0,-1,-3,-4} {7,-2} {-6} {8,-5}");
    }

    #[test]
    fn singleton_partition_is_identity() {
        let p = OrderedSignPartition::new((0..=4).map(|i| part(&[i])).collect()).unwrap();
        assert_eq!(partition_to_starred(&p), sp(&[1, 2, 3, 4], &[]));
    }

    #[test]
    fn partition_validation() {
        assert!(OrderedSignPartition::new(vec![part(&[0, 1])]).is_err());
        assert!(OrderedSignPartition::new(vec![part(&[-1]), part(&[2])]).is_err());
        assert!(OrderedSignPartition::new(vec![part(&[0]), part(&[])]).is_err());
        assert!(OrderedSignPartition::new(vec![part(&[0]), part(&[2])]).is_err());
        assert!(OrderedSignPartition::new(vec![part(&[0]), part(&[1, -1])]).is_err());
    }

    #[test]
    fn partition_round_trip() {
        for k in 0..=4 {
            for s in enumerate_starred(4, k).unwrap() {
                let p = starred_to_partition(&s);
                assert!(OrderedSignPartition::new(p.parts().to_vec()).is_ok(), "{s}");
                assert_eq!(p.k(), 4 - k);
                assert_eq!(partition_to_starred(&p), s);
            }
        }
    }
}
