use crate::groups::{colored_group_order, Caps};
use crate::qpoly::{LaurentPoly, TPoly};

use super::memo::Workspace;
use super::{
    basis, colored, partition_checks, series_checks, starred_checks, type_a, type_b, GridConfig, IdentityError, Params,
    Route, Value,
};

pub(crate) type RowFn = fn(&Workspace, &Params, usize) -> Result<(LaurentPoly, LaurentPoly), IdentityError>;
pub(crate) type WholeFn = fn(&Workspace, &Params) -> Result<(Value, Value), IdentityError>;

#[derive(Clone, Copy)]
pub(crate) enum Eval {
    /// One comparison per `0 <= k <= n`. Without `k` the row is reported as a
    /// polynomial in `t` whose `t^k` coefficient is the case `k`.
    Row(RowFn),
    Whole(WholeFn),
}

/// How an entry's default parameter grid is laid out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    /// `n` only.
    N,
    /// `r` from the color set, then `n`. With a budget the default grid
    /// keeps only `r^n n! <= budget`.
    NR {
        default_r: &'static [u32],
        budget: Option<u64>,
    },
    /// `n`, then each variant up to its own largest `n`.
    NVariant(&'static [(&'static str, usize)]),
    /// `r`, then `n`, then `0 <= ell <= n`.
    REll { default_r: &'static [u32] },
    /// `n`, then `m` over the same range, then `0 <= ell <= n`.
    NMEll,
}

pub struct Entry {
    pub id: &'static str,
    pub summary: &'static str,
    pub lhs: &'static [Route],
    pub rhs: &'static [Route],
    /// Deliberately corrupted; expected to fail.
    pub control: bool,
    pub grid: GridKind,
    pub min_n: usize,
    pub default_max_n: usize,
    pub cap_n: usize,
    /// Compares truncated series; takes an `order`.
    pub series: bool,
    pub(crate) eval: Eval,
}

impl std::fmt::Debug for Entry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Entry").field("id", &self.id).finish_non_exhaustive()
    }
}

impl Entry {
    pub fn k_indexed(&self) -> bool {
        matches!(self.eval, Eval::Row(_))
    }

    fn takes_r(&self) -> bool {
        matches!(self.grid, GridKind::NR { .. } | GridKind::REll { .. })
    }

    fn variants(&self) -> &'static [(&'static str, usize)] {
        match self.grid {
            GridKind::NVariant(v) => v,
            _ => &[],
        }
    }

    /// Validates `params` and fills in defaults (`order`).
    pub(crate) fn normalize(&self, params: &Params, caps: &Caps) -> Result<Params, IdentityError> {
        let bad = |msg: String| Err(IdentityError::InvalidParams(format!("{}: {msg}", self.id)));
        let mut p = params.clone();
        let Some(n) = p.n else {
            return bad("n is required".into());
        };
        if n < self.min_n {
            return bad(format!("n must be at least {}", self.min_n));
        }
        let mut cap = self.cap_n;
        if let Some(v) = &p.variant {
            match self.variants().iter().find(|(name, _)| name == v) {
                Some(&(_, vcap)) => cap = cap.min(vcap),
                None => return bad(format!("unknown variant `{v}`")),
            }
        } else if !self.variants().is_empty() {
            return bad("variant is required".into());
        }
        if n > cap {
            return Err(IdentityError::CapExceeded(format!("{}: n={n} exceeds {cap}", self.id)));
        }
        match (p.k, self.k_indexed()) {
            (Some(k), true) if k > n => return bad(format!("k={k} exceeds n={n}")),
            (Some(_), false) => return bad("k is not a parameter".into()),
            _ => {}
        }
        match (p.r, self.takes_r()) {
            (None, true) => return bad("r is required".into()),
            (Some(0), true) => return bad("r must be at least 1".into()),
            (Some(_), false) => return bad("r is not a parameter".into()),
            _ => {}
        }
        if let Some(r) = p.r {
            if let GridKind::NR { budget: Some(_), .. } = self.grid {
                caps.check_colored(r, n)?;
            }
        }
        match self.grid {
            GridKind::REll { .. } | GridKind::NMEll => match p.ell {
                None => return bad("ell is required".into()),
                Some(ell) if ell > n => return bad(format!("ell={ell} exceeds n={n}")),
                _ => {}
            },
            _ if p.ell.is_some() => return bad("ell is not a parameter".into()),
            _ => {}
        }
        match (self.grid, p.m) {
            (GridKind::NMEll, None) => return bad("m is required".into()),
            (GridKind::NMEll, Some(m)) if m > self.cap_n => {
                return Err(IdentityError::CapExceeded(format!(
                    "{}: m={m} exceeds {}",
                    self.id, self.cap_n
                )))
            }
            (GridKind::NMEll, _) | (_, None) => {}
            _ => return bad("m is not a parameter".into()),
        }
        if self.series {
            let order = *p.order.get_or_insert(GridConfig::default().order);
            if order == 0 {
                return bad("order must be positive".into());
            }
        } else if p.order.is_some() {
            return bad("order is not a parameter".into());
        }
        Ok(p)
    }

    pub(crate) fn evaluate(&self, ws: &Workspace, p: &Params) -> Result<(Value, Value), IdentityError> {
        match self.eval {
            Eval::Whole(f) => f(ws, p),
            Eval::Row(f) => {
                if let Some(k) = p.k {
                    let (l, r) = f(ws, p, k)?;
                    return Ok((l.into(), r.into()));
                }
                let n = p.n.expect("normalized");
                let (mut ls, mut rs) = (Vec::new(), Vec::new());
                for k in 0..=n {
                    let (l, r) = f(ws, p, k)?;
                    ls.push(l);
                    rs.push(r);
                }
                Ok((TPoly::from_coeffs(ls).into(), TPoly::from_coeffs(rs).into()))
            }
        }
    }

    /// The points checked by a grid run, in report order.
    pub fn grid(&self, config: &GridConfig, caps: &Caps) -> Vec<Params> {
        let top = config.max_n.unwrap_or(self.default_max_n).min(self.cap_n);
        let ns = || self.min_n..=top;
        let order = self.series.then_some(config.order);
        let base = |n: usize| Params {
            n: Some(n),
            order,
            ..Params::default()
        };
        let mut out = Vec::new();
        match self.grid {
            GridKind::N => out.extend(ns().map(base)),
            GridKind::NR { default_r, budget } => {
                let rs = config.r_set.as_deref().unwrap_or(default_r);
                for &r in rs {
                    for n in ns() {
                        let order = colored_group_order(r, n);
                        let over_budget = config.max_n.is_none() && budget.is_some_and(|b| order > b);
                        if budget.is_some() && (over_budget || caps.check_colored(r, n).is_err()) {
                            continue;
                        }
                        out.push(base(n).with_r(r));
                    }
                }
            }
            GridKind::NVariant(variants) => {
                for n in ns() {
                    for &(v, vcap) in variants {
                        if n <= vcap {
                            out.push(base(n).with_variant(v));
                        }
                    }
                }
            }
            GridKind::REll { default_r } => {
                let rs = config.r_set.as_deref().unwrap_or(default_r);
                for &r in rs {
                    for n in ns() {
                        for ell in 0..=n {
                            out.push(base(n).with_r(r).with_ell(ell));
                        }
                    }
                }
            }
            GridKind::NMEll => {
                for n in ns() {
                    for m in ns() {
                        for ell in 0..=n {
                            out.push(base(n).with_m(m).with_ell(ell));
                        }
                    }
                }
            }
        }
        out
    }
}

/// All entries in report order.
pub fn entries() -> &'static [Entry] {
    REGISTRY
}

pub fn entry(id: &str) -> Option<&'static Entry> {
    REGISTRY.iter().find(|e| e.id == id)
}

use Route::*;

const R13: &[u32] = &[1, 2, 3];
const R14: &[u32] = &[1, 2, 3, 4];
/// Default colored grids stay below this many group elements per point.
const COLORED_BUDGET: u64 = 600_000;
const SPECIALIZE: &[(&str, usize)] = &[("stirling", 8), ("eulerian", 8), ("stats", 7)];
const DELTA_CASES: &[(&str, usize)] = &[
    ("bar-plain", 8),
    ("bar-barred-first", 8),
    ("bar-barred", 8),
    ("star-plain", 8),
    ("star-barred-first", 8),
    ("star-barred", 8),
];

macro_rules! entry {
    ($id:expr, $summary:expr, [$($l:ident),*], [$($r:ident),*], $grid:expr, $min:expr, $def:expr, $cap:expr, $eval:expr) => {
        entry!(@ $id, $summary, [$($l),*], [$($r),*], $grid, $min, $def, $cap, $eval, false, false)
    };
    (@ $id:expr, $summary:expr, [$($l:ident),*], [$($r:ident),*], $grid:expr, $min:expr, $def:expr, $cap:expr, $eval:expr, $series:expr, $control:expr) => {
        Entry {
            id: $id,
            summary: $summary,
            lhs: &[$($l),*],
            rhs: &[$($r),*],
            control: $control,
            grid: $grid,
            min_n: $min,
            default_max_n: $def,
            cap_n: $cap,
            series: $series,
            eval: $eval,
        }
    };
}

static REGISTRY: &[Entry] = &[
    // type A
    entry!(
        "a-classical",
        "k! S(n,k) against Eulerian numbers and binomials",
        [ClassicalRec],
        [SnEnum, PascalRec],
        GridKind::N,
        0,
        10,
        10,
        Eval::Row(type_a::a_classical)
    ),
    entry!(
        "a-q",
        "q-Stirling numbers of type A against Carlitz q-Eulerian numbers",
        [StirlingA, Expansion],
        [SnEnum, PascalRec],
        GridKind::N,
        0,
        8,
        10,
        Eval::Row(type_a::a_q)
    ),
    entry!(
        "a-q-shifted",
        "the shifted form S[n+1,k+1] of the type A identity",
        [StirlingA, Expansion],
        [SnEnum, PascalRec],
        GridKind::N,
        0,
        8,
        9,
        Eval::Row(type_a::a_q_shifted)
    ),
    entry!(@ "frobenius-A", "q-Frobenius formula of type A",
        [SnEnum, GeometricProduct], [StirlingA, Expansion, SeriesInversion], GridKind::N, 0, 6, 10,
        Eval::Whole(type_a::frobenius_a), true, false),
    // type B
    entry!(
        "b-classical",
        "2^k k! S_B(n,k) against type B Eulerian numbers",
        [PartitionDp, Expansion],
        [ClassicalRec],
        GridKind::N,
        0,
        10,
        30,
        Eval::Row(type_b::b_classical)
    ),
    entry!(
        "thm-main-B",
        "type B q-Stirling numbers against flag-major q-Eulerian numbers",
        [StirlingB, Expansion],
        [BnEnum, PascalRec],
        GridKind::N,
        0,
        7,
        8,
        Eval::Row(type_b::thm_main_b)
    ),
    entry!(
        "thm-main-B-transformed",
        "the same identity with the sum reindexed by ascents",
        [StirlingB, Expansion],
        [BnEnum, PascalRec],
        GridKind::N,
        0,
        7,
        8,
        Eval::Row(type_b::thm_main_b_transformed)
    ),
    entry!(
        "cg-relation",
        "Chow-Gessel numbers as rescaled S_B",
        [ChowGessel],
        [StirlingB, Expansion],
        GridKind::N,
        0,
        10,
        40,
        Eval::Row(type_b::cg_relation)
    ),
    entry!(
        "b-symmetry",
        "B_{n,k} = q^{2nk-n^2} B_{n,n-k}",
        [BnEnum],
        [ElementStats],
        GridKind::N,
        0,
        7,
        8,
        Eval::Row(type_b::b_symmetry)
    ),
    entry!(
        "psi-involution",
        "psi is an involution on B_n",
        [ElementStats],
        [ClosedForm],
        GridKind::N,
        0,
        7,
        8,
        Eval::Whole(type_b::psi_involution)
    ),
    entry!(
        "des-complement",
        "des_B(psi(pi)) = n - des_B(pi)",
        [ElementStats],
        [ClosedForm],
        GridKind::N,
        0,
        7,
        8,
        Eval::Whole(type_b::des_complement)
    ),
    entry!(
        "index-sums",
        "index sums over +- descents and -+ ascents",
        [ElementStats],
        [ClosedForm],
        GridKind::N,
        1,
        7,
        8,
        Eval::Whole(type_b::index_sums)
    ),
    entry!(
        "fmaj-psi",
        "fmaj(pi) = 2n des_B(pi) - n^2 + fmaj(psi(pi))",
        [ElementStats],
        [ClosedForm],
        GridKind::N,
        0,
        6,
        8,
        Eval::Whole(type_b::fmaj_psi)
    ),
    // descent-starred permutations
    entry!(
        "starred-product",
        "star weights as a product over descents",
        [StarredEnum],
        [BnEnum, Expansion],
        GridKind::N,
        0,
        6,
        8,
        Eval::Whole(starred_checks::starred_product)
    ),
    entry!(
        "bfmaj-euler",
        "B^fmaj_{n,n-k} against flag-major q-Eulerian numbers",
        [StarredEnum],
        [BnEnum, PascalRec],
        GridKind::N,
        0,
        6,
        8,
        Eval::Row(starred_checks::bfmaj_euler)
    ),
    entry!(
        "bfmaj-rec",
        "B^fmaj by enumeration against its recurrence",
        [StarredEnum],
        [StarredRec],
        GridKind::N,
        0,
        7,
        8,
        Eval::Row(starred_checks::bfmaj_rec_check)
    ),
    entry!(
        "so-closed-form",
        "B^fmaj_{n,n-k} = [2]^k [k]_{q^2}! S_B[n,k]",
        [StarredEnum],
        [StirlingB, Expansion],
        GridKind::N,
        0,
        7,
        8,
        Eval::Row(starred_checks::so_closed_form)
    ),
    entry!(
        "fmaj-deltas",
        "fmaj changes under the insertion maps",
        [InsertionMaps, StarredEnum],
        [ClosedForm],
        GridKind::NVariant(DELTA_CASES),
        1,
        6,
        7,
        Eval::Whole(starred_checks::fmaj_deltas)
    ),
    entry!(
        "phi-images",
        "insertion maps hit every starred permutation exactly once",
        [InsertionMaps, StarredEnum],
        [StarredRec],
        GridKind::N,
        1,
        6,
        7,
        Eval::Row(starred_checks::phi_images)
    ),
    // q-series
    entry!(
        "q-binom-theorem",
        "finite q-binomial theorem",
        [Expansion],
        [PascalRec],
        GridKind::N,
        0,
        8,
        30,
        Eval::Whole(series_checks::q_binom_theorem)
    ),
    entry!(@ "q-binom-negative", "q-binomial series for the reciprocal product",
        [SeriesInversion], [PascalRec], GridKind::N, 0, 6, 30, Eval::Whole(series_checks::q_binom_negative), true, false),
    entry!(
        "chu-vandermonde",
        "q-Chu-Vandermonde summation",
        [FactorialQuotient],
        [PascalRec],
        GridKind::NMEll,
        0,
        8,
        20,
        Eval::Whole(series_checks::chu_vandermonde)
    ),
    // signed set partitions and type D
    entry!(
        "pssp-weight",
        "m-statistic weight of partial signed partitions",
        [PartitionEnum],
        [StirlingB, Expansion],
        GridKind::N,
        0,
        6,
        8,
        Eval::Row(partition_checks::pssp_weight_check)
    ),
    entry!(
        "d-count",
        "2^k S_D(n,k) counts D-type partial partitions",
        [PartitionEnum],
        [StirlingD],
        GridKind::N,
        0,
        6,
        8,
        Eval::Row(partition_checks::d_count)
    ),
    entry!(
        "d-weight",
        "q-weight of D-type partial partitions",
        [PartitionEnum],
        [StirlingD, Expansion],
        GridKind::N,
        0,
        6,
        8,
        Eval::Row(partition_checks::d_weight)
    ),
    entry!(
        "btilde",
        "closed form of the B-tilde weight",
        [PartitionEnum],
        [StirlingA, Expansion],
        GridKind::N,
        0,
        6,
        8,
        Eval::Row(partition_checks::btilde)
    ),
    entry!(
        "btilde-rec",
        "B-tilde recurrence against enumeration",
        [PartitionRec],
        [PartitionEnum],
        GridKind::N,
        1,
        6,
        8,
        Eval::Row(partition_checks::btilde_rec_check)
    ),
    entry!(
        "b-from-a-q",
        "S_B[n,k] from type A q-Stirling numbers in q^2",
        [StirlingB],
        [StirlingA, Expansion, ClassicalRec],
        GridKind::N,
        0,
        20,
        40,
        Eval::Row(partition_checks::b_from_a_q)
    ),
    entry!(
        "b-from-d-q",
        "S_B[n,k] from the type D weight and a type A correction",
        [StirlingB],
        [PartitionDp, StirlingA, Expansion],
        GridKind::N,
        0,
        20,
        40,
        Eval::Row(partition_checks::b_from_d_q)
    ),
    entry!(
        "b-from-a",
        "S_B(n,k) from S(j,k) at q = 1",
        [PartitionDp],
        [ClassicalRec],
        GridKind::N,
        0,
        10,
        30,
        Eval::Row(partition_checks::b_from_a)
    ),
    entry!(
        "b-from-d",
        "S_B(n,k) from S_D(n,k) at q = 1",
        [StirlingB],
        [PartitionDp, ClassicalRec],
        GridKind::N,
        0,
        10,
        30,
        Eval::Row(partition_checks::b_from_d)
    ),
    // falling-factorial bases
    entry!(
        "basis-A",
        "t^n in the falling factorials at q = 1",
        [Monomial],
        [ClassicalRec, FallingFactorial],
        GridKind::N,
        0,
        12,
        20,
        Eval::Whole(basis::basis_a)
    ),
    entry!(
        "basis-B",
        "t^n in the type B falling factorials at q = 1",
        [Monomial],
        [ClassicalRec, FallingFactorial],
        GridKind::N,
        0,
        12,
        20,
        Eval::Whole(basis::basis_b)
    ),
    entry!(
        "basis-D",
        "t^n in the type D falling factorials at q = 1",
        [Monomial],
        [PartitionDp, FallingFactorial, Expansion],
        GridKind::N,
        0,
        12,
        20,
        Eval::Whole(basis::basis_d)
    ),
    entry!(
        "basis-A-q",
        "t^n in the q-falling factorials",
        [Monomial],
        [StirlingA, FallingFactorial],
        GridKind::N,
        0,
        12,
        20,
        Eval::Whole(basis::basis_a_q)
    ),
    entry!(
        "basis-B-q",
        "t^n in the type B q-falling factorials",
        [Monomial],
        [StirlingB, FallingFactorial],
        GridKind::N,
        0,
        12,
        20,
        Eval::Whole(basis::basis_b_q)
    ),
    entry!(
        "basis-D-q",
        "t^n in the type D q-falling factorials with correction",
        [Monomial],
        [StirlingD, FallingFactorial, Expansion],
        GridKind::N,
        0,
        12,
        20,
        Eval::Whole(basis::basis_d_q)
    ),
    entry!(
        "basis-bd-bridge",
        "type B falling factorial from the type D ones",
        [Expansion],
        [FallingFactorial],
        GridKind::N,
        1,
        12,
        20,
        Eval::Whole(basis::basis_bd_bridge)
    ),
    entry!(
        "basis-r-q",
        "t^n in the r-colored q-falling factorials",
        [Monomial],
        [StirlingR, FallingFactorial],
        GridKind::NR {
            default_r: R13,
            budget: None
        },
        0,
        12,
        20,
        Eval::Whole(basis::basis_r_q)
    ),
    // colored permutations
    entry!(@ "genfun-r", "colored q-Stirling generating function against power sums",
        [StirlingR, Expansion, SeriesInversion], [PowerSum], GridKind::NR { default_r: R13, budget: None }, 0, 6, 12,
        Eval::Whole(colored::genfun_r), true, false),
    entry!(@ "carlitz-r", "Carlitz identity for colored permutations",
        [ColoredEnum, SeriesInversion], [PowerSum], GridKind::NR { default_r: R13, budget: Some(COLORED_BUDGET) }, 0, 6, 8,
        Eval::Whole(colored::carlitz_r), true, false),
    entry!(@ "frobenius-r", "colored q-Frobenius formula",
        [ColoredEnum, GeometricProduct], [StirlingR, Expansion, SeriesInversion],
        GridKind::NR { default_r: R13, budget: Some(COLORED_BUDGET) }, 0, 6, 8,
        Eval::Whole(colored::frobenius_r), true, false),
    entry!(
        "thm-main-r",
        "colored q-Stirling numbers against colored q-Eulerian numbers",
        [StirlingR, Expansion],
        [ColoredEnum, PascalRec],
        GridKind::NR {
            default_r: R14,
            budget: Some(COLORED_BUDGET)
        },
        0,
        6,
        8,
        Eval::Row(colored::thm_main_r)
    ),
    entry!(@ "q-extension", "the reciprocal product expanded at every ell",
        [GeometricProduct], [SeriesInversion, PascalRec], GridKind::REll { default_r: R13 }, 0, 6, 12,
        Eval::Whole(colored::q_extension), true, false),
    entry!(
        "specialize-r1",
        "one color recovers type A",
        [StirlingR, ColoredEnum, ElementStats],
        [StirlingA, SnEnum, ClosedForm],
        GridKind::NVariant(SPECIALIZE),
        0,
        8,
        8,
        Eval::Whole(colored::specialize_r1)
    ),
    entry!(
        "specialize-r2",
        "two colors recover type B",
        [StirlingR, ColoredEnum, ElementStats],
        [StirlingB, BnEnum, ClosedForm],
        GridKind::NVariant(SPECIALIZE),
        0,
        8,
        8,
        Eval::Whole(colored::specialize_r2)
    ),
    // negative controls
    entry!(@ "thm-main-B-corrupted", "thm-main-B with one exponent off by one",
        [StirlingB, Expansion], [BnEnum, PascalRec], GridKind::N, 0, 4, 8, Eval::Row(type_b::thm_main_b_corrupted), false, true),
    entry!(@ "b-symmetry-corrupted", "b-symmetry with the shift off by one",
        [BnEnum], [ElementStats], GridKind::N, 0, 4, 8, Eval::Row(type_b::b_symmetry_corrupted), false, true),
];
