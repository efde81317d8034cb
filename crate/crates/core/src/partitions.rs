//! Signed set partitions: type B and type D partitions of `⟨n⟩`, ordered
//! signed partitions, standard signed partitions of subsets (PSSPs) with
//! their `pos` and `m` statistics, and transfer-matrix counts that avoid
//! enumeration.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::qpoly::{q_int, LaurentPoly};

/// Largest `n` accepted by the enumerators in this module.
pub const PARTITION_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition enumeration for n={n} exceeds the cap (n <= {limit})")]
    CapExceeded { n: usize, limit: usize },
    #[error("invalid blocks: {0}")]
    InvalidBlocks(String),
}

fn check_cap(n: usize) -> Result<(), PartitionError> {
    if n > PARTITION_CAP {
        return Err(PartitionError::CapExceeded {
            n,
            limit: PARTITION_CAP,
        });
    }
    Ok(())
}

fn fmt_block(b: &BTreeSet<i32>) -> String {
    format!("{{{}}}", b.iter().rev().join(","))
}

/// A standard signed partition of a subset of `[n]`: blocks of signed
/// letters with distinct absolute values, ordered by the minimum absolute
/// value in each block.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pssp {
    blocks: Vec<BTreeSet<i32>>,
}

fn min_abs(b: &BTreeSet<i32>) -> u32 {
    b.iter().map(|x| x.unsigned_abs()).min().unwrap_or(0)
}

impl Pssp {
    pub fn new(blocks: Vec<BTreeSet<i32>>) -> Result<Self, PartitionError> {
        if blocks.iter().any(|b| b.is_empty() || b.contains(&0)) {
            return Err(PartitionError::InvalidBlocks(
                "blocks must be nonempty and avoid 0".into(),
            ));
        }
        let abs: Vec<u32> = blocks.iter().flatten().map(|x| x.unsigned_abs()).collect();
        if abs.iter().collect::<BTreeSet<_>>().len() != abs.len() {
            return Err(PartitionError::InvalidBlocks("absolute values must be distinct".into()));
        }
        if !blocks.windows(2).all(|w| min_abs(&w[0]) < min_abs(&w[1])) {
            return Err(PartitionError::InvalidBlocks(
                "blocks must be ordered by minimum absolute value".into(),
            ));
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[BTreeSet<i32>] {
        &self.blocks
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    /// Absolute values covered by the blocks.
    pub fn support(&self) -> BTreeSet<u32> {
        self.blocks.iter().flatten().map(|x| x.unsigned_abs()).collect()
    }
}

/// Blocks in order, entries descending, e.g. `{2,-1} {3}`.
impl fmt::Display for Pssp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.blocks.iter().map(fmt_block).join(" "))
    }
}

impl fmt::Debug for Pssp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pssp[{self}]")
    }
}

/// `(m, pos)`: `pos` counts positive entries and `m = 2 Σ_i i·|S_i| - pos`.
pub fn m_stat(p: &Pssp) -> (usize, usize) {
    let pos = p.blocks.iter().flatten().filter(|&&x| x > 0).count();
    let weighted: usize = p.blocks.iter().enumerate().map(|(i, b)| (i + 1) * b.len()).sum();
    (2 * weighted - pos, pos)
}

/// Unsigned set partitions of `elems` (ascending) into exactly `k` blocks,
/// blocks ordered by their minima. Restricted growth strings in
/// lexicographic order.
fn set_partitions(elems: &[u32], k: usize) -> Vec<Vec<Vec<u32>>> {
    fn go(elems: &[u32], k: usize, i: usize, cur: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        let remaining = elems.len() - i;
        if cur.len() + remaining < k {
            return;
        }
        if i == elems.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(elems[i]);
            go(elems, k, i + 1, cur, out);
            cur[b].pop();
        }
        if cur.len() < k {
            cur.push(vec![elems[i]]);
            go(elems, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(elems, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Each way of negating a subset of the letters in `blocks`.
fn all_signings(blocks: &[Vec<u32>]) -> impl Iterator<Item = Vec<BTreeSet<i32>>> + '_ {
    let total: usize = blocks.iter().map(Vec::len).sum();
    (0..1u64 << total).map(move |mask| {
        let mut bit = total;
        blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&x| {
                        bit -= 1;
                        if mask >> bit & 1 == 1 {
                            -(x as i32)
                        } else {
                            x as i32
                        }
                    })
                    .collect()
            })
            .collect()
    })
}

/// The standard signed partitions of `set` into `k` blocks: `2^|S| S(|S|,k)`
/// of them.
pub fn enumerate_ssp(set: &[u32], k: usize) -> Result<impl Iterator<Item = Pssp>, PartitionError> {
    if set.contains(&0) || set.iter().collect::<BTreeSet<_>>().len() != set.len() {
        return Err(PartitionError::InvalidBlocks(format!(
            "{set:?} is not a set of positive letters"
        )));
    }
    check_cap(set.len())?;
    let mut elems = set.to_vec();
    elems.sort_unstable();
    let parts = set_partitions(&elems, k);
    Ok(parts
        .into_iter()
        .flat_map(|p| all_signings(&p).map(|blocks| Pssp { blocks }).collect::<Vec<_>>()))
}

/// All PSSPs of subsets of `[n]` with `k` blocks, subsets taken in order of
/// their bitmask.
pub fn enumerate_pssp(n: usize, k: usize) -> Result<impl Iterator<Item = Pssp>, PartitionError> {
    check_cap(n)?;
    Ok((0..1u32 << n).flat_map(move |mask| {
        let set: Vec<u32> = (1..=n as u32).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        enumerate_ssp(&set, k)
            .expect("subset of [n] within cap")
            .collect::<Vec<_>>()
    }))
}

/// PSSPs of `[n]` with `k` blocks whose uncovered set does not have exactly
/// one element.
pub fn enumerate_d_subset(n: usize, k: usize) -> Result<impl Iterator<Item = Pssp>, PartitionError> {
    Ok(enumerate_pssp(n, k)?.filter(move |p| n - p.support().len() != 1))
}

fn weight_of(iter: impl Iterator<Item = Pssp>) -> LaurentPoly {
    let mut counts: Vec<u64> = Vec::new();
    for p in iter {
        let m = m_stat(&p).0;
        if counts.len() <= m {
            counts.resize(m + 1, 0);
        }
        counts[m] += 1;
    }
    LaurentPoly::from_coeffs(&counts)
}

/// `Σ q^m` over all PSSPs of `[n]` with `k` blocks.
pub fn pssp_weight(n: usize, k: usize) -> Result<LaurentPoly, PartitionError> {
    Ok(weight_of(enumerate_pssp(n, k)?))
}

/// `Σ q^m` over the `D_⊆` family.
pub fn d_subset_weight(n: usize, k: usize) -> Result<LaurentPoly, PartitionError> {
    Ok(weight_of(enumerate_d_subset(n, k)?))
}

/// `B̃_{n,k}(q) = Σ q^m` over standard signed partitions of all of `[n]`.
pub fn btilde_enum(n: usize, k: usize) -> Result<LaurentPoly, PartitionError> {
    let all: Vec<u32> = (1..=n as u32).collect();
    Ok(weight_of(enumerate_ssp(&all, k)?))
}

/// `B̃_{n,k} = [2]_q q^{2k-1} B̃_{n-1,k-1} + q [2]_q [k]_{q^2} B̃_{n-1,k}` with
/// `B̃_{0,k} = δ_{0k}`.
pub fn btilde_rec(n: i64, k: i64) -> LaurentPoly {
    if n < 0 || k < 0 || k > n {
        return LaurentPoly::zero();
    }
    let two = q_int(2);
    let mut row = vec![LaurentPoly::one()];
    for m in 1..=n as usize {
        let mut next = vec![LaurentPoly::zero(); m + 1];
        for j in 0..=m {
            if j >= 1 {
                next[j] += two.shift(2 * j as i64 - 1) * &row[j - 1];
            }
            if j < m && j >= 1 {
                next[j] += two.shift(1) * q_int(j as u64).subst_q_power(2) * &row[j];
            }
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// `Σ q^m` over `D_⊆([n],k)` without enumeration.
pub fn d_subset_weight_dp(n: usize, k: usize) -> LaurentPoly {
    let [u0, _, u2] = weight_by_uncovered(n, k);
    u0 + u2
}

/// `Σ q^m` over all PSSPs of `[n]` with `k` blocks, without enumeration.
pub fn pssp_weight_dp(n: usize, k: usize) -> LaurentPoly {
    weight_by_uncovered(n, k).into_iter().sum()
}

/// Transfer recurrence over letters `1..=n` in increasing order, tracking
/// the block count and whether zero, one, or at least two letters are left
/// uncovered. A letter in block `i` adds `2i - 1` to `m` if positive and
/// `2i` if negative.
fn weight_by_uncovered(n: usize, k: usize) -> [LaurentPoly; 3] {
    if k > n {
        return Default::default();
    }
    let two = q_int(2);
    // dp[b][u]
    let mut dp = vec![vec![LaurentPoly::zero(); 3]; k + 1];
    dp[0][0] = LaurentPoly::one();
    for _ in 0..n {
        let mut next = vec![vec![LaurentPoly::zero(); 3]; k + 1];
        for b in 0..=k {
            for u in 0..3 {
                let cur = &dp[b][u];
                if cur.is_zero() {
                    continue;
                }
                next[b][(u + 1).min(2)] += cur;
                // join block i for i in 1..=b, either sign
                let join: LaurentPoly = (1..=b).map(|i| two.shift(2 * i as i64 - 1)).sum();
                if !join.is_zero() {
                    next[b][u] += cur * &join;
                }
                if b < k {
                    next[b + 1][u] += cur * &two.shift(2 * b as i64 + 1);
                }
            }
        }
        dp = next;
    }
    let [u0, u1, u2]: [LaurentPoly; 3] = dp.swap_remove(k).try_into().expect("three states");
    [u0, u1, u2]
}

/// A type B partition of `⟨n⟩`: the symmetric zero block and one
/// representative per pair `{T, -T}` (the one whose smallest absolute value
/// is positive), pairs ordered by that value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeBPartition {
    zero_block: BTreeSet<i32>,
    pairs: Vec<BTreeSet<i32>>,
}

impl TypeBPartition {
    pub fn zero_block(&self) -> &BTreeSet<i32> {
        &self.zero_block
    }

    pub fn pairs(&self) -> &[BTreeSet<i32>] {
        &self.pairs
    }

    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    /// Zero block is `{0}` or holds at least two positive letters.
    pub fn is_type_d(&self) -> bool {
        let positives = self.zero_block.iter().filter(|&&x| x > 0).count();
        positives == 0 || positives >= 2
    }

    /// `#T_0 ≠ 3`.
    pub fn zero_block_size_not_three(&self) -> bool {
        self.zero_block.len() != 3
    }
}

/// `{1,0,-1} {2,-3}/{3,-2}`: zero block, then each pair as block and negation.
impl fmt::Display for TypeBPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![fmt_block(&self.zero_block)];
        for p in &self.pairs {
            let neg: BTreeSet<i32> = p.iter().map(|x| -x).collect();
            parts.push(format!("{}/{}", fmt_block(p), fmt_block(&neg)));
        }
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for TypeBPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TypeBPartition[{self}]")
    }
}

/// Type B partitions of `⟨n⟩` with `2k+1` blocks.
pub fn enumerate_type_b_partitions(n: usize, k: usize) -> Result<impl Iterator<Item = TypeBPartition>, PartitionError> {
    check_cap(n)?;
    Ok((0..1u32 << n).flat_map(move |zmask| {
        let mut zero_block = BTreeSet::from([0]);
        let mut rest = Vec::new();
        for i in 1..=n as u32 {
            if zmask >> (i - 1) & 1 == 1 {
                zero_block.insert(i as i32);
                zero_block.insert(-(i as i32));
            } else {
                rest.push(i);
            }
        }
        let mut out = Vec::new();
        for blocks in set_partitions(&rest, k) {
            // the minimum of each block stays positive
            let tails: Vec<Vec<u32>> = blocks.iter().map(|b| b[1..].to_vec()).collect();
            for signed_tails in all_signings(&tails) {
                let pairs = blocks
                    .iter()
                    .zip(signed_tails)
                    .map(|(b, mut t)| {
                        t.insert(b[0] as i32);
                        t
                    })
                    .collect();
                out.push(TypeBPartition {
                    zero_block: zero_block.clone(),
                    pairs,
                });
            }
        }
        out
    }))
}

/// Type D partitions of `⟨n⟩` with `2k+1` blocks. Both descriptions of the
/// zero block condition are evaluated and must agree.
pub fn enumerate_type_d_partitions(n: usize, k: usize) -> Result<impl Iterator<Item = TypeBPartition>, PartitionError> {
    Ok(enumerate_type_b_partitions(n, k)?.filter(|p| {
        let d = p.is_type_d();
        assert_eq!(d, p.zero_block_size_not_three(), "type D predicates disagree on {p}");
        d
    }))
}

/// Ordered signed partitions `(T_0, T_1, …, T_{2k})` with `T_{2i} = -T_{2i-1}`:
/// every ordering of the pairs of a type B partition and every choice of
/// which block of a pair comes first.
pub fn enumerate_ordered_signed(
    n: usize,
    k: usize,
) -> Result<impl Iterator<Item = Vec<BTreeSet<i32>>>, PartitionError> {
    Ok(enumerate_type_b_partitions(n, k)?.flat_map(move |p| {
        let mut out = Vec::new();
        for order in (0..k).permutations(k) {
            for flips in 0..1u32 << k {
                let mut seq = vec![p.zero_block.clone()];
                for (slot, &i) in order.iter().enumerate() {
                    let t = p.pairs[i].clone();
                    let neg: BTreeSet<i32> = t.iter().map(|x| -x).collect();
                    if flips >> slot & 1 == 1 {
                        seq.push(neg);
                        seq.push(t);
                    } else {
                        seq.push(t);
                        seq.push(neg);
                    }
                }
                out.push(seq);
            }
        }
        out
    }))
}

/// Counts type B (all zero blocks) and type D partitions with `k` pairs by a
/// transfer recurrence over letters, tracking the number of pairs and the
/// positive size of the zero block capped at 2.
fn count_partitions_dp(n: usize, k: usize) -> [num_bigint::BigInt; 3] {
    use num_bigint::BigInt;
    let zero = || [BigInt::from(0), BigInt::from(0), BigInt::from(0)];
    if k > n {
        return zero();
    }
    let mut dp: Vec<[BigInt; 3]> = (0..=k).map(|_| zero()).collect();
    dp[0][0] = BigInt::from(1);
    for _ in 0..n {
        let mut next: Vec<[BigInt; 3]> = (0..=k).map(|_| zero()).collect();
        for j in 0..=k {
            for c in 0..3 {
                let cur = dp[j][c].clone();
                if cur == BigInt::from(0) {
                    continue;
                }
                next[j][(c + 1).min(2)] += &cur;
                next[j][c] += &cur * (2 * j);
                if j < k {
                    next[j + 1][c] += &cur;
                }
            }
        }
        dp = next;
    }
    dp.swap_remove(k)
}

/// `S_B(n,k)` as a count of type B partitions, without enumeration.
pub fn count_type_b_partitions(n: usize, k: usize) -> num_bigint::BigInt {
    count_partitions_dp(n, k).into_iter().sum()
}

/// `S_D(n,k)` as a count of type D partitions, without enumeration.
pub fn count_type_d_partitions(n: usize, k: usize) -> num_bigint::BigInt {
    let [c0, _, c2] = count_partitions_dp(n, k);
    c0 + c2
}
