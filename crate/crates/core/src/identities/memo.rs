use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

use crate::groups::{stats_b, Caps};
use crate::qpoly::LaurentPoly;
use crate::starred::bfmaj_enum_all_with;

use super::IdentityError;

struct Memo<K, V> {
    map: Mutex<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    fn new() -> Self {
        Self {
            map: Mutex::new(HashMap::new()),
        }
    }

    // Computes outside the lock; a racing duplicate is harmless since the
    // values are pure functions of the key.
    fn get_or_try(&self, key: K, f: impl FnOnce() -> Result<V, IdentityError>) -> Result<Arc<V>, IdentityError> {
        if let Some(v) = self.map.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = Arc::new(f()?);
        Ok(self.map.lock().unwrap().entry(key).or_insert(v).clone())
    }
}

/// Enumeration results shared between registry entries.
pub(crate) struct Workspace {
    pub(crate) caps: Caps,
    eul_a: Memo<usize, Vec<LaurentPoly>>,
    eul_b: Memo<usize, Vec<LaurentPoly>>,
    eul_b_elementwise: Memo<usize, Vec<LaurentPoly>>,
    eul_r: Memo<(u32, usize), Vec<LaurentPoly>>,
    bfmaj: Memo<usize, Vec<LaurentPoly>>,
}

impl Workspace {
    pub(crate) fn new(caps: Caps) -> Self {
        Self {
            caps,
            eul_a: Memo::new(),
            eul_b: Memo::new(),
            eul_b_elementwise: Memo::new(),
            eul_r: Memo::new(),
            bfmaj: Memo::new(),
        }
    }

    /// `A_{n,0..}` from the `S_n` histogram builder, padded to length `n + 1`.
    pub(crate) fn eulerian_a(&self, n: usize) -> Result<Arc<Vec<LaurentPoly>>, IdentityError> {
        self.eul_a.get_or_try(n, || {
            let mut row = self.caps.eulerian_a(n)?;
            row.resize(n + 1, LaurentPoly::zero());
            Ok(row)
        })
    }

    pub(crate) fn eulerian_b(&self, n: usize) -> Result<Arc<Vec<LaurentPoly>>, IdentityError> {
        self.eul_b.get_or_try(n, || Ok(self.caps.eulerian_b(n)?))
    }

    /// `B_{n,0..=n}` accumulated element by element from the per-element
    /// statistics rather than the histogram builder.
    pub(crate) fn eulerian_b_elementwise(&self, n: usize) -> Result<Arc<Vec<LaurentPoly>>, IdentityError> {
        self.eul_b_elementwise.get_or_try(n, || {
            let mut row = vec![LaurentPoly::zero(); n + 1];
            for p in self.caps.enumerate_bn(n)? {
                let s = stats_b(&p);
                row[s.des] += LaurentPoly::q_pow(s.fmaj as i64);
            }
            Ok(row)
        })
    }

    pub(crate) fn eulerian_r(&self, r: u32, n: usize) -> Result<Arc<Vec<LaurentPoly>>, IdentityError> {
        self.eul_r.get_or_try((r, n), || Ok(self.caps.eulerian_r(r, n)?))
    }

    /// `B^fmaj_{n,0..=n}` by enumeration of starred permutations.
    pub(crate) fn bfmaj(&self, n: usize) -> Result<Arc<Vec<LaurentPoly>>, IdentityError> {
        self.bfmaj.get_or_try(n, || Ok(bfmaj_enum_all_with(&self.caps, n)?))
    }
}
