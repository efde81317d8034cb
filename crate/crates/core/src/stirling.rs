//! q-Stirling numbers of the second kind: type A `S[n,k]`, type B
//! `S_B[n,k]`, the Chow–Gessel variant `S_{n,k}(q)`, the r-colored
//! `S_r[n,k]` and type D `S_D[n,k]`.
//!
//! Every family is computed as a memoized triangular table. Out-of-range
//! indices give the zero polynomial.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::qpoly::{q_int, LaurentPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    /// Chow–Gessel numbers.
    Cg,
    /// r-colored numbers, `r >= 1`.
    R(u32),
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => f.write_str("A"),
            Family::B => f.write_str("B"),
            Family::Cg => f.write_str("CG"),
            Family::R(r) => write!(f, "R({r})"),
            Family::D => f.write_str("D"),
        }
    }
}

/// Rows `0..=max_n` of one family; row `n` holds `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    family: Family,
    rows: Vec<Vec<LaurentPoly>>,
}

impl StirlingTable {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[LaurentPoly] {
        &self.rows[n]
    }

    /// Entry `(n, k)`; zero outside `0 <= k <= n`. Panics if `n > max_n`.
    pub fn get(&self, n: i64, k: i64) -> LaurentPoly {
        if n < 0 || k < 0 || k > n {
            return LaurentPoly::zero();
        }
        self.rows[n as usize][k as usize].clone()
    }

    fn entry(&self, n: i64, k: i64) -> Option<&LaurentPoly> {
        if n < 0 || k < 0 || k > n {
            return None;
        }
        Some(&self.rows[n as usize][k as usize])
    }

    /// Prefix of this table with rows `0..=max_n`.
    pub fn truncated(&self, max_n: usize) -> StirlingTable {
        StirlingTable {
            family: self.family,
            rows: self.rows[..=max_n].to_vec(),
        }
    }
}

/// Builds a table from a recurrence `S[n,k] = lower(k)·S[n-1,k-1] + same(k)·S[n-1,k]`
/// with `S[0,0] = 1` and the given column-0 boundary for `n >= 1`.
fn build_by_recurrence(
    family: Family,
    max_n: usize,
    col0: impl Fn(usize) -> LaurentPoly,
    lower: impl Fn(usize) -> LaurentPoly,
    same: impl Fn(usize) -> LaurentPoly,
) -> StirlingTable {
    let lower: Vec<_> = (0..=max_n).map(lower).collect();
    let same: Vec<_> = (0..=max_n).map(same).collect();
    let mut rows: Vec<Vec<LaurentPoly>> = vec![vec![LaurentPoly::one()]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(col0(n));
        for k in 1..=n {
            let mut v = &lower[k] * &prev[k - 1];
            if k < n {
                v += &same[k] * &prev[k];
            }
            row.push(v);
        }
        rows.push(row);
    }
    StirlingTable { family, rows }
}

fn build(family: Family, max_n: usize) -> StirlingTable {
    match family {
        Family::A => build_by_recurrence(
            family,
            max_n,
            |_| LaurentPoly::zero(),
            |_| LaurentPoly::one(),
            |k| q_int(k as u64),
        ),
        Family::B => build_by_recurrence(
            family,
            max_n,
            |_| LaurentPoly::one(),
            |_| LaurentPoly::one(),
            |k| q_int(2 * k as u64 + 1),
        ),
        Family::Cg => build_by_recurrence(
            family,
            max_n,
            |_| LaurentPoly::one(),
            |k| LaurentPoly::from_coeffs(&[1, 1]).shift(2 * k as i64 - 1),
            |k| q_int(2 * k as u64 + 1),
        ),
        Family::R(r) => {
            assert!(r >= 1, "colored Stirling numbers need r >= 1");
            build_by_recurrence(
                family,
                max_n,
                |_| LaurentPoly::one(),
                |_| LaurentPoly::one(),
                move |k| q_int(u64::from(r) * k as u64 + 1),
            )
        }
        Family::D => {
            let b = table(Family::B, max_n);
            let a = table(Family::A, max_n);
            let two = q_int(2);
            let rows = (0..=max_n)
                .map(|n| {
                    (0..=n)
                        .map(|k| {
                            if k == n {
                                return LaurentPoly::one();
                            }
                            let e = (n - k - 1) as u32;
                            let sub = two.pow(e).shift(i64::from(e)).scale(&(n as u64).into())
                                * a.get(n as i64 - 1, k as i64).subst_q_power(2);
                            b.get(n as i64, k as i64) - sub
                        })
                        .collect()
                })
                .collect();
            StirlingTable { family, rows }
        }
    }
}

type Slot = Arc<OnceLock<Arc<StirlingTable>>>;

fn cache() -> &'static Mutex<HashMap<(Family, usize), Slot>> {
    static CACHE: OnceLock<Mutex<HashMap<(Family, usize), Slot>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Tables are built in blocks of this many rows so nearby requests share one
/// construction.
const BLOCK: usize = 16;

/// The memoized table of `family` covering at least rows `0..=max_n`.
///
/// Concurrent callers asking for the same block wait on a single
/// construction.
pub fn table(family: Family, max_n: usize) -> Arc<StirlingTable> {
    let capacity = (max_n / BLOCK + 1) * BLOCK;
    let slot = {
        let mut map = cache().lock().expect("stirling cache poisoned");
        map.entry((family, capacity)).or_default().clone()
    };
    slot.get_or_init(|| Arc::new(build(family, capacity))).clone()
}

fn lookup(family: Family, n: i64, k: i64) -> LaurentPoly {
    if n < 0 || k < 0 || k > n {
        return LaurentPoly::zero();
    }
    table(family, n as usize).entry(n, k).cloned().unwrap_or_default()
}

/// `S[n,k] = S[n-1,k-1] + [k]_q S[n-1,k]`.
pub fn stirling_a(n: i64, k: i64) -> LaurentPoly {
    lookup(Family::A, n, k)
}

/// `S_B[n,k] = S_B[n-1,k-1] + [2k+1]_q S_B[n-1,k]`.
pub fn stirling_b(n: i64, k: i64) -> LaurentPoly {
    lookup(Family::B, n, k)
}

/// `S_{n,k}(q) = q^{2k-1}(1+q) S_{n-1,k-1}(q) + [2k+1]_q S_{n-1,k}(q)` with
/// `S_{n,0}(q) = 1`.
pub fn chow_gessel(n: i64, k: i64) -> LaurentPoly {
    lookup(Family::Cg, n, k)
}

/// `S_r[n,k] = S_r[n-1,k-1] + [rk+1]_q S_r[n-1,k]`. Panics if `r == 0`.
pub fn stirling_r(r: u32, n: i64, k: i64) -> LaurentPoly {
    lookup(Family::R(r), n, k)
}

/// `S_D[n,k] = S_B[n,k] - n [2]_q^{n-k-1} q^{n-k-1} S[n-1,k]_{q^2}` for
/// `k < n`, and 1 on the diagonal.
pub fn stirling_d(n: i64, k: i64) -> LaurentPoly {
    lookup(Family::D, n, k)
}

/// Integer (q = 1) versions computed by their own recurrences, used as
/// independent oracles for the polynomial tables.
pub mod classical {
    use num_bigint::BigInt;

    fn triangle(max_n: usize, col0: impl Fn(usize) -> i64, same: impl Fn(usize, usize) -> i64) -> Vec<Vec<BigInt>> {
        let mut rows = vec![vec![BigInt::from(1)]];
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = vec![BigInt::from(col0(n))];
            for k in 1..=n {
                let mut v = prev[k - 1].clone();
                if k < n {
                    v += &prev[k] * same(n, k);
                }
                row.push(v);
            }
            rows.push(row);
        }
        rows
    }

    fn at(rows: &[Vec<BigInt>], n: i64, k: i64) -> BigInt {
        if n < 0 || k < 0 || k > n {
            return BigInt::from(0);
        }
        rows[n as usize][k as usize].clone()
    }

    /// `S(n,k) = S(n-1,k-1) + k S(n-1,k)`.
    pub fn s_a(n: i64, k: i64) -> BigInt {
        at(&triangle(n.max(0) as usize, |_| 0, |_, k| k as i64), n, k)
    }

    /// `S_B(n,k) = S_B(n-1,k-1) + (2k+1) S_B(n-1,k)`.
    pub fn s_b(n: i64, k: i64) -> BigInt {
        at(&triangle(n.max(0) as usize, |_| 1, |_, k| 2 * k as i64 + 1), n, k)
    }

    /// `S_r(n,k) = S_r(n-1,k-1) + (rk+1) S_r(n-1,k)`.
    pub fn s_r(r: u32, n: i64, k: i64) -> BigInt {
        at(
            &triangle(n.max(0) as usize, |_| 1, |_, k| i64::from(r) * k as i64 + 1),
            n,
            k,
        )
    }

    /// Eulerian numbers of type A, indexed by descent count:
    /// `A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)` with `A(0,0) = 1`.
    pub fn eulerian_a(n: i64, k: i64) -> BigInt {
        eulerian(n, k, |n, k| (k + 1, n - k))
    }

    /// Eulerian numbers of type B:
    /// `B(n,k) = (2k+1) B(n-1,k) + (2n-2k+1) B(n-1,k-1)` with `B(0,0) = 1`.
    pub fn eulerian_b(n: i64, k: i64) -> BigInt {
        eulerian(n, k, |n, k| (2 * k + 1, 2 * n - 2 * k + 1))
    }

    fn eulerian(n: i64, k: i64, coeffs: impl Fn(i64, i64) -> (i64, i64)) -> BigInt {
        if n < 0 || k < 0 || k > n {
            return BigInt::from(0);
        }
        let mut row = vec![BigInt::from(1)];
        for m in 1..=n {
            let mut next = vec![BigInt::from(0); m as usize + 1];
            for j in 0..=m {
                let (same, lower) = coeffs(m, j);
                if let Some(v) = row.get(j as usize) {
                    next[j as usize] += v * same;
                }
                if j >= 1 {
                    next[j as usize] += &row[j as usize - 1] * lower;
                }
            }
            row = next;
        }
        row[k as usize].clone()
    }

    pub fn binomial(n: i64, k: i64) -> BigInt {
        if n < 0 || k < 0 || k > n {
            return BigInt::from(0);
        }
        (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
    }

    pub fn factorial(n: i64) -> BigInt {
        (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
    }
}
