//! Idempotent endomorphisms: exhaustive search, primitive decompositions of
//! identities, and isomorphism of idempotents.

use crate::error::Result;
use crate::exactla::{all_vectors_capped, solve, Matrix, Subspace};
use crate::fincat::{FinCat, Morphism};
use crate::limits::Limits;

/// The corner `e A(a,a) e` as a subspace of `A(a,a)`.
pub fn corner_space(cat: &FinCat, e: &Morphism) -> Subspace {
    let a = e.src;
    let vecs: Vec<Vec<u32>> = (0..cat.hom_dim(a, a))
        .map(|k| {
            let b = cat.basis_morphism(a, a, k);
            cat.compose(e, &cat.compose(&b, e)).coords
        })
        .collect();
    Subspace::span(cat.field(), cat.hom_dim(a, a), &vecs).expect("lengths")
}

/// Every idempotent of `A(a,a)`, in lexicographic coordinate order.
pub fn idempotents_at(cat: &FinCat, a: usize, limits: &Limits) -> Result<Vec<Morphism>> {
    let d = cat.hom_dim(a, a);
    let it = all_vectors_capped(cat.field(), d, "idempotent search", limits)?;
    Ok(it
        .map(|v| Morphism::new(a, a, v))
        .filter(|e| cat.is_idempotent(e))
        .collect())
}

/// Idempotents of the corner `eA(a,a)e` other than `0` and `e`.
fn proper_sub_idempotents(cat: &FinCat, e: &Morphism, limits: &Limits) -> Result<Vec<Morphism>> {
    let corner = corner_space(cat, e);
    Ok(corner
        .elements(limits)?
        .into_iter()
        .map(|v| Morphism::new(e.src, e.src, v))
        .filter(|f| !f.is_zero() && f != e && cat.is_idempotent(f))
        .collect())
}

/// Splits `e` into pairwise orthogonal primitive idempotents summing to `e`.
pub fn primitive_split(cat: &FinCat, e: &Morphism, limits: &Limits) -> Result<Vec<Morphism>> {
    if e.is_zero() {
        return Ok(Vec::new());
    }
    match proper_sub_idempotents(cat, e, limits)?.into_iter().next() {
        None => Ok(vec![e.clone()]),
        Some(f) => {
            let mut out = primitive_split(cat, &f, limits)?;
            out.extend(primitive_split(cat, &cat.sub(e, &f), limits)?);
            Ok(out)
        }
    }
}

/// A complete set of primitive orthogonal idempotents, object by object.
pub fn primitive_decomposition(cat: &FinCat, limits: &Limits) -> Result<Vec<Morphism>> {
    let mut out = Vec::new();
    for a in 0..cat.num_objects() {
        out.extend(primitive_split(cat, &cat.identity(a), limits)?);
    }
    Ok(out)
}

/// Is `e` primitive (no idempotent of `eAe` other than `0`, `e`)?
pub fn is_primitive(cat: &FinCat, e: &Morphism, limits: &Limits) -> Result<bool> {
    Ok(!e.is_zero() && proper_sub_idempotents(cat, e, limits)?.is_empty())
}

/// `span{ f ∘ β ∘ e : β ∈ A(a,b) }` for idempotents `e` at `a`, `f` at `b`.
pub fn peirce_piece(cat: &FinCat, e: &Morphism, f: &Morphism) -> Subspace {
    let (a, b) = (e.src, f.src);
    let vecs: Vec<Vec<u32>> = (0..cat.hom_dim(a, b))
        .map(|k| {
            let beta = cat.basis_morphism(a, b, k);
            cat.compose(f, &cat.compose(&beta, e)).coords
        })
        .collect();
    Subspace::span(cat.field(), cat.hom_dim(a, b), &vecs).expect("lengths")
}

/// Morphisms `u: a → b` in `fAe` and `v: b → a` in `eAf` with `v∘u = e`,
/// `u∘v = f`, if the idempotents are isomorphic.
pub fn idempotent_iso(cat: &FinCat, e: &Morphism, f: &Morphism, limits: &Limits) -> Result<Option<(Morphism, Morphism)>> {
    let (a, b) = (e.src, f.src);
    let piece = peirce_piece(cat, e, f);
    let fld = cat.field();
    for uc in piece.elements(limits)? {
        let u = Morphism::new(a, b, uc);
        if u.is_zero() && !e.is_zero() {
            continue;
        }
        // v ↦ v∘u ∈ A(a,a) and v ↦ u∘v ∈ A(b,b), stacked.
        let pre = cat.pre_matrix(&u, a);
        let post = cat.post_matrix(b, &u);
        let mut rows = pre.to_rows();
        rows.extend(post.to_rows());
        let sys = Matrix::from_rows(fld, cat.hom_dim(b, a), &rows)?;
        let mut rhs = e.coords.clone();
        rhs.extend(f.coords.iter().copied());
        if let Some(vc) = solve(&sys, &rhs)? {
            let v = Morphism::new(b, a, vc);
            let v = cat.compose(e, &cat.compose(&v, f));
            return Ok(Some((u, v)));
        }
    }
    Ok(None)
}
