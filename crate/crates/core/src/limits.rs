//! Enumeration caps shared by every exhaustive search in the crate.

use crate::error::{Error, Result};

/// Environment variable that overrides [`Limits::vectors`].
pub const CAP_ENV: &str = "RINGOID_CAP_VECTORS";

pub const DEFAULT_CAP_VECTORS: u64 = 4096;
pub const DEFAULT_CAP_SEARCH: u64 = 1 << 22;
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Bounds on brute-force work.
///
/// `vectors` caps any scan over the elements of a single vector space
/// (hom-spaces, module components, subspace lattices, idempotent searches).
/// `search` caps the raw candidate count of module enumeration and of
/// exhaustive isomorphism search. `seed` drives the random probes tried
/// before an exhaustive isomorphism search; verdicts never depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub vectors: u64,
    pub search: u64,
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            vectors: DEFAULT_CAP_VECTORS,
            search: DEFAULT_CAP_SEARCH,
            seed: DEFAULT_SEED,
        }
    }
}

impl Limits {
    /// Defaults, with `RINGOID_CAP_VECTORS` applied when it parses.
    pub fn from_env() -> Self {
        let mut l = Limits::default();
        if let Some(v) = std::env::var(CAP_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            l.vectors = v;
        }
        l
    }

    /// Fails unless `p^dim` vectors fit under the vector cap.
    pub fn check_vectors(&self, what: &str, p: u32, dim: usize) -> Result<u64> {
        let needed = (p as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
        if needed > self.vectors as u128 {
            return Err(Error::cap(what, needed, self.vectors as u128, CAP_ENV));
        }
        Ok(needed as u64)
    }

    pub fn check_search(&self, what: &str, needed: u128) -> Result<()> {
        if needed > self.search as u128 {
            return Err(Error::cap(what, needed, self.search as u128, "--search-cap"));
        }
        Ok(())
    }
}
