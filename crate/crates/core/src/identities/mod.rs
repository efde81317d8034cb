//! A registry of named identities, each checked by computing both sides
//! through disjoint code paths and comparing them exactly.
//!
//! ```
//! use qstirling::identities::{verify, Params};
//!
//! let report = verify("thm-main-B", &Params::nk(3, 2)).unwrap();
//! assert!(report.equal);
//! ```

mod basis;
mod colored;
mod common;
mod memo;
mod partition_checks;
mod registry;
mod series_checks;
mod starred_checks;
mod type_a;
mod type_b;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::{Caps, GroupError};
use crate::partitions::PartitionError;
use crate::qpoly::{LaurentPoly, QPolyError, TPoly, TSeries};
use crate::starred::StarredError;

pub use registry::{entries, entry, Entry, GridKind};

use memo::Workspace;

/// Code paths an identity side may go through. The two sides of every entry
/// use disjoint sets of routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Integer recurrences at `q = 1`.
    ClassicalRec,
    StirlingA,
    StirlingB,
    ChowGessel,
    StirlingR,
    StirlingD,
    /// Histogram builder over `S_n`.
    SnEnum,
    /// Histogram builder over `B_n`.
    BnEnum,
    /// Histogram builder over colored permutation groups.
    ColoredEnum,
    /// Element-by-element enumeration with the per-element statistics.
    ElementStats,
    StarredEnum,
    StarredRec,
    InsertionMaps,
    PartitionEnum,
    PartitionDp,
    PartitionRec,
    /// Gaussian binomials by the Pascal rule.
    PascalRec,
    /// Gaussian binomials as exact quotients of q-factorials.
    FactorialQuotient,
    /// Direct expansion of explicit products and prefactors.
    Expansion,
    /// The monomial `t^n`.
    Monomial,
    FallingFactorial,
    /// Rational functions expanded by exact series inversion.
    SeriesInversion,
    /// Rational functions expanded as products of geometric series.
    GeometricProduct,
    /// Power sums `Σ_m [rm+1]^n t^m`.
    PowerSum,
    /// Values stated by the identity itself (counts, predicted deltas).
    ClosedForm,
}

/// Instantiated parameters of one check. Unused fields are `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ell: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub variant: Option<String>,
}

impl Params {
    pub fn n(n: usize) -> Self {
        Self {
            n: Some(n),
            ..Self::default()
        }
    }

    pub fn nk(n: usize, k: usize) -> Self {
        Self {
            n: Some(n),
            k: Some(k),
            ..Self::default()
        }
    }

    pub fn with_r(mut self, r: u32) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_ell(mut self, ell: usize) -> Self {
        self.ell = Some(ell);
        self
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = Some(order);
        self
    }

    pub fn with_variant(mut self, variant: &str) -> Self {
        self.variant = Some(variant.to_string());
        self
    }
}

/// `n=3 k=1`, listing only the fields that are set.
impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let nums = [
            ("n", self.n),
            ("k", self.k),
            ("r", self.r.map(|r| r as usize)),
            ("ell", self.ell),
            ("m", self.m),
            ("order", self.order),
        ];
        for (name, v) in nums {
            if let Some(v) = v {
                parts.push(format!("{name}={v}"));
            }
        }
        if let Some(v) = &self.variant {
            parts.push(format!("variant={v}"));
        }
        f.write_str(&parts.join(" "))
    }
}

/// First coefficient where the two sides differ, scanning `t`-degrees and
/// then `q`-exponents in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub t_degree: Option<usize>,
    pub q_exponent: i64,
    pub lhs_coeff: String,
    pub rhs_coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: Params,
    pub equal: bool,
    pub lhs: String,
    pub rhs: String,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("parameters exceed the enumeration caps: {0}")]
    CapExceeded(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("arithmetic failure: {0}")]
    Arithmetic(String),
}

impl From<GroupError> for IdentityError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded { .. } => IdentityError::CapExceeded(e.to_string()),
            other => IdentityError::InvalidParams(other.to_string()),
        }
    }
}

impl From<StarredError> for IdentityError {
    fn from(e: StarredError) -> Self {
        match e {
            StarredError::Group(g) => g.into(),
            other => IdentityError::InvalidParams(other.to_string()),
        }
    }
}

impl From<PartitionError> for IdentityError {
    fn from(e: PartitionError) -> Self {
        match e {
            PartitionError::CapExceeded { .. } => IdentityError::CapExceeded(e.to_string()),
            other => IdentityError::InvalidParams(other.to_string()),
        }
    }
}

impl From<QPolyError> for IdentityError {
    fn from(e: QPolyError) -> Self {
        IdentityError::Arithmetic(e.to_string())
    }
}

/// One side of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Poly(LaurentPoly),
    TPoly(TPoly),
    Series(TSeries),
}

impl From<LaurentPoly> for Value {
    fn from(p: LaurentPoly) -> Self {
        Value::Poly(p)
    }
}

impl From<TPoly> for Value {
    fn from(p: TPoly) -> Self {
        Value::TPoly(p)
    }
}

impl From<TSeries> for Value {
    fn from(s: TSeries) -> Self {
        Value::Series(s)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Poly(p) => write!(f, "{p}"),
            Value::TPoly(p) => write!(f, "{p}"),
            Value::Series(s) => write!(f, "{s}"),
        }
    }
}

impl Value {
    fn t_coeffs(&self) -> (bool, Vec<LaurentPoly>) {
        match self {
            Value::Poly(p) => (false, vec![p.clone()]),
            Value::TPoly(p) => (true, p.coeffs().to_vec()),
            Value::Series(s) => (true, s.coeffs().to_vec()),
        }
    }
}

/// Locates the first differing coefficient; `None` when the sides agree.
pub fn witness(lhs: &Value, rhs: &Value) -> Option<Witness> {
    if lhs == rhs {
        return None;
    }
    let (lt, lc) = lhs.t_coeffs();
    let (rt, rc) = rhs.t_coeffs();
    let has_t = lt || rt;
    let len = lc.len().max(rc.len());
    let zero = LaurentPoly::zero();
    for d in 0..len {
        let a = lc.get(d).unwrap_or(&zero);
        let b = rc.get(d).unwrap_or(&zero);
        if a == b {
            continue;
        }
        let exps: std::collections::BTreeSet<i64> = a.terms().chain(b.terms()).map(|(e, _)| e).collect();
        for e in exps {
            let (x, y) = (a.coeff(e), b.coeff(e));
            if x != y {
                return Some(Witness {
                    t_degree: has_t.then_some(d),
                    q_exponent: e,
                    lhs_coeff: x.to_string(),
                    rhs_coeff: y.to_string(),
                });
            }
        }
    }
    // same coefficients but different kinds of value, e.g. mismatched orders
    let order = |v: &Value| match v {
        Value::Series(s) => s.order() as i64,
        _ => -1,
    };
    Some(Witness {
        t_degree: None,
        q_exponent: 0,
        lhs_coeff: format!("order {}", order(lhs)),
        rhs_coeff: format!("order {}", order(rhs)),
    })
}

/// Grid selection for [`Verifier::run`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridConfig {
    /// Overrides every entry's default largest `n` (clamped to its cap).
    pub max_n: Option<usize>,
    /// Overrides the color counts of colored entries.
    pub r_set: Option<Vec<u32>>,
    /// Truncation order for series identities.
    pub order: usize,
    /// Include the negative controls when running every entry.
    pub include_controls: bool,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            max_n: None,
            r_set: None,
            order: 8,
            include_controls: false,
        }
    }
}

/// Runs registry entries, sharing enumeration results between them.
pub struct Verifier {
    ws: Workspace,
}

impl Default for Verifier {
    fn default() -> Self {
        Self::new(Caps::default())
    }
}

impl Verifier {
    pub fn new(caps: Caps) -> Self {
        Self {
            ws: Workspace::new(caps),
        }
    }

    pub fn caps(&self) -> &Caps {
        &self.ws.caps
    }

    /// Checks one identity at fully specified parameters.
    pub fn verify(&self, id: &str, params: &Params) -> Result<IdentityReport, IdentityError> {
        let e = entry(id).ok_or_else(|| IdentityError::UnknownIdentity(id.to_string()))?;
        let params = e.normalize(params, &self.ws.caps)?;
        let (lhs, rhs) = e.evaluate(&self.ws, &params)?;
        let w = witness(&lhs, &rhs);
        Ok(IdentityReport {
            id: e.id.to_string(),
            params,
            equal: w.is_none(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            witness: w,
        })
    }

    /// Expands the grid of each listed entry and checks every point, in the
    /// order given and then grid order.
    pub fn run(&self, ids: &[&str], config: &GridConfig) -> Result<Vec<IdentityReport>, IdentityError> {
        let selected = ids
            .iter()
            .map(|id| entry(id).ok_or_else(|| IdentityError::UnknownIdentity(id.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let mut out = Vec::new();
        for e in selected {
            for p in e.grid(config, &self.ws.caps) {
                out.push(self.verify(e.id, &p)?);
            }
        }
        Ok(out)
    }

    /// Every entry over its grid; negative controls only when requested.
    pub fn run_all(&self, config: &GridConfig) -> Result<Vec<IdentityReport>, IdentityError> {
        let ids: Vec<&str> = entries()
            .iter()
            .filter(|e| config.include_controls || !e.control)
            .map(|e| e.id)
            .collect();
        self.run(&ids, config)
    }
}

/// Checks one identity with default caps.
pub fn verify(id: &str, params: &Params) -> Result<IdentityReport, IdentityError> {
    Verifier::default().verify(id, params)
}

/// Runs every registered identity (controls excluded unless requested).
pub fn verify_all(config: &GridConfig) -> Result<Vec<IdentityReport>, IdentityError> {
    Verifier::default().run_all(config)
}
