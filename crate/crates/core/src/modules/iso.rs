//! Isomorphism testing of finite modules.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactla::all_vectors;
use crate::fincat::FinCat;
use crate::limits::Limits;

use super::{hom_space, FinModule, ModuleMap};

/// Isomorphism invariants used to bucket modules before explicit search.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub total_dim: usize,
    pub dims: Vec<usize>,
    /// Rank of the action of each basis morphism, in basis order.
    pub ranks: Vec<usize>,
    pub end_dim: usize,
}

pub fn fingerprint(cat: &FinCat, m: &FinModule) -> Fingerprint {
    let mut ranks = Vec::new();
    for alpha in cat.basis_morphisms() {
        ranks.push(m.act_on(&alpha).rank());
    }
    Fingerprint {
        total_dim: m.total_dim(),
        dims: m.dims().to_vec(),
        ranks,
        end_dim: hom_space(cat, m, m).len(),
    }
}

const RANDOM_TRIES: usize = 64;

/// An invertible natural transformation `M → N`, if one exists.
///
/// Random combinations of a `Hom(M, N)` basis are tried first; absence is
/// certified by exhausting all `p^dim Hom` combinations, which is capped by
/// `limits.search`.
pub fn find_iso(cat: &FinCat, m: &FinModule, n: &FinModule, limits: &Limits) -> Result<Option<ModuleMap>> {
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.total_dim() == 0 {
        return Ok(Some(ModuleMap::identity(m)));
    }
    let basis = hom_space(cat, m, n);
    if basis.is_empty() {
        return Ok(None);
    }
    // Hom(M, N) ≅ End(M) and Hom(N, M) ≅ End(N) whenever M ≅ N.
    if hom_space(cat, m, m).len() != basis.len() || hom_space(cat, n, n).len() != hom_space(cat, n, m).len() {
        return Ok(None);
    }
    let f = m.field();
    let k = basis.len();
    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
    for _ in 0..RANDOM_TRIES {
        let coeffs: Vec<u32> = (0..k).map(|_| rng.gen_range(0..f.p())).collect();
        let phi = ModuleMap::combination(f, &basis, &coeffs).expect("non-empty basis");
        if phi.is_iso() {
            return Ok(Some(phi));
        }
    }
    let needed = (f.p() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    limits.check_search("exhaustive isomorphism search", needed)?;
    for coeffs in all_vectors(f, k) {
        let phi = ModuleMap::combination(f, &basis, &coeffs).expect("non-empty basis");
        if phi.is_iso() {
            return Ok(Some(phi));
        }
    }
    Ok(None)
}

pub fn is_iso(cat: &FinCat, m: &FinModule, n: &FinModule, limits: &Limits) -> Result<bool> {
    Ok(find_iso(cat, m, n, limits)?.is_some())
}
