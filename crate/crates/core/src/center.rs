//! The center `Z(A)`, its idempotents, and the decompositions of `A` they
//! induce.

use crate::error::Result;
use crate::exactla::{all_vectors_capped, kernel_basis, Matrix, Subspace};
use crate::fincat::{FinCat, Morphism};
use crate::ideals::{enumerate_ideals, Ideal};
use crate::limits::Limits;
use crate::modules::{module_times_ideal, FinModule};

/// A natural endotransformation of the identity: one `ε_a ∈ A(a,a)` per
/// object with `ε_b ∘ u = u ∘ ε_a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CenterElement {
    pub comps: Vec<Morphism>,
}

impl CenterElement {
    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Morphism::is_zero)
    }

    pub fn compose(&self, cat: &FinCat, other: &CenterElement) -> CenterElement {
        CenterElement { comps: self.comps.iter().zip(&other.comps).map(|(x, y)| cat.compose(x, y)).collect() }
    }

    pub fn is_idempotent(&self, cat: &FinCat) -> bool {
        &self.compose(cat, self) == self
    }

    /// Concatenated coordinates of the components.
    pub fn coords(&self) -> Vec<u32> {
        self.comps.iter().flat_map(|m| m.coords.iter().copied()).collect()
    }
}

/// `Z(A)` with a basis and multiplication constants:
/// `mult[i][j]` = coordinates of `z_i ∘ z_j`.
#[derive(Debug, Clone)]
pub struct CenterAlgebra {
    pub basis: Vec<CenterElement>,
    pub mult: Vec<Vec<Vec<u32>>>,
    space: Subspace,
}

impl CenterAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a central element in [`CenterAlgebra::basis`].
    pub fn coordinates(&self, z: &CenterElement) -> Option<Vec<u32>> {
        self.space.coordinates(&z.coords())
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.mult[i][j] == self.mult[j][i]))
    }
}

fn split(cat: &FinCat, v: &[u32]) -> CenterElement {
    let mut off = 0;
    let comps = (0..cat.num_objects())
        .map(|a| {
            let d = cat.hom_dim(a, a);
            let m = Morphism::new(a, a, v[off..off + d].to_vec());
            off += d;
            m
        })
        .collect();
    CenterElement { comps }
}

/// Solves `ε_b ∘ u − u ∘ ε_a = 0` over every basis morphism `u: a → b`.
pub fn compute_center(cat: &FinCat) -> CenterAlgebra {
    let n = cat.num_objects();
    let f = cat.field();
    let mut offset = Vec::with_capacity(n);
    let mut total = 0;
    for a in 0..n {
        offset.push(total);
        total += cat.hom_dim(a, a);
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for u in cat.basis_morphisms() {
        let (a, b) = (u.src, u.tgt);
        let pre = cat.pre_matrix(&u, b); // ε_b ↦ ε_b ∘ u
        let post = cat.post_matrix(a, &u); // ε_a ↦ u ∘ ε_a
        for r in 0..cat.hom_dim(a, b) {
            let mut row = vec![0u32; total];
            for s in 0..cat.hom_dim(b, b) {
                row[offset[b] + s] = f.add(row[offset[b] + s], pre.get(r, s));
            }
            for s in 0..cat.hom_dim(a, a) {
                row[offset[a] + s] = f.sub(row[offset[a] + s], post.get(r, s));
            }
            if row.iter().any(|&x| x != 0) {
                rows.push(row);
            }
        }
    }
    let sys = Matrix::from_rows(f, total, &rows).expect("row lengths");
    let space = kernel_basis(&sys).expect("kernel");
    let basis: Vec<CenterElement> = space.basis_vectors().iter().map(|v| split(cat, v)).collect();
    let mult = basis
        .iter()
        .map(|x| {
            basis
                .iter()
                .map(|y| space.coordinates(&x.compose(cat, y).coords()).expect("center is closed"))
                .collect()
        })
        .collect();
    CenterAlgebra { basis, mult, space }
}

/// The identity transformation.
pub fn center_unit(cat: &FinCat) -> CenterElement {
    CenterElement { comps: (0..cat.num_objects()).map(|a| cat.identity(a)).collect() }
}

/// Every idempotent of `Z(A)`, by exhaustive search.
pub fn center_idempotents(cat: &FinCat, z: &CenterAlgebra, limits: &Limits) -> Result<Vec<CenterElement>> {
    let f = cat.field();
    let mut out = Vec::new();
    for c in all_vectors_capped(f, z.dim(), "center elements", limits)? {
        let mut v = vec![0; z.space.ambient()];
        for (x, b) in c.iter().zip(z.space.basis_vectors()) {
            f.axpy(&mut v, *x, &b);
        }
        let e = split(cat, &v);
        if e.is_idempotent(cat) {
            out.push(e);
        }
    }
    out.sort();
    Ok(out)
}

/// `I_ε(a,b) = {u : ε_b ∘ u = u}` and its complement
/// `I'_ε(a,b) = {v : ε_b ∘ v = 0}`.
pub fn ideal_of_idempotent(cat: &FinCat, e: &CenterElement) -> (Ideal, Ideal) {
    let n = cat.num_objects();
    let mut fixed = Vec::with_capacity(n * n);
    let mut killed = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let m = cat.post_matrix(a, &e.comps[b]);
            fixed.push(Subspace::row_space(&m.transpose()));
            killed.push(kernel_basis(&m).expect("kernel"));
        }
    }
    (
        Ideal::from_subspaces(cat, fixed).expect("I_ε is an ideal"),
        Ideal::from_subspaces(cat, killed).expect("I'_ε is an ideal"),
    )
}

/// Direct-sum decompositions `A = I ⊕ I'` against central idempotents.
#[derive(Debug, Clone)]
pub struct SummandReport {
    pub central_idempotents: usize,
    /// Ideals with a complement, with that complement.
    pub summands: Vec<(Ideal, Ideal)>,
    /// Every summand has exactly one complement.
    pub complements_unique: bool,
    /// Every summand equals `I_ε` for some central idempotent `ε`.
    pub all_from_idempotents: bool,
    /// `ε ↦ I_ε` is injective.
    pub injective: bool,
}

impl SummandReport {
    pub fn passes(&self) -> bool {
        self.complements_unique
            && self.all_from_idempotents
            && self.injective
            && self.summands.len() == self.central_idempotents
    }
}

fn complementary(cat: &FinCat, i: &Ideal, j: &Ideal) -> bool {
    i.intersect(j).is_zero() && i.sum(j) == Ideal::full(cat)
}

pub fn summand_bijection_check(cat: &FinCat, limits: &Limits) -> Result<SummandReport> {
    let z = compute_center(cat);
    let idems = center_idempotents(cat, &z, limits)?;
    let from_idems: Vec<Ideal> = idems.iter().map(|e| ideal_of_idempotent(cat, e).0).collect();
    let ideals = enumerate_ideals(cat, limits)?;
    let mut summands = Vec::new();
    let mut complements_unique = true;
    for i in &ideals {
        let comps: Vec<&Ideal> = ideals.iter().filter(|j| complementary(cat, i, j)).collect();
        if comps.len() > 1 {
            complements_unique = false;
        }
        if let Some(j) = comps.first() {
            summands.push((i.clone(), (*j).clone()));
        }
    }
    let all_from_idempotents = summands.iter().all(|(i, _)| from_idems.contains(i));
    let mut dedup = from_idems.clone();
    dedup.sort();
    dedup.dedup();
    Ok(SummandReport {
        central_idempotents: idems.len(),
        summands,
        complements_unique,
        all_from_idempotents,
        injective: dedup.len() == from_idems.len(),
    })
}

/// How a central idempotent acts on a module.
#[derive(Debug, Clone)]
pub struct IdempotentAction {
    /// `M(ε_a)` per object.
    pub actions: Vec<Matrix>,
    pub all_invertible: bool,
    pub all_zero: bool,
    /// `M·I_ε = M`, computed with [`module_times_ideal`].
    pub generated: bool,
    /// `M·I_ε = 0`.
    pub annihilated: bool,
}

impl IdempotentAction {
    /// Agreement of the pointwise and ideal-theoretic descriptions.
    pub fn consistent(&self) -> bool {
        self.all_invertible == self.generated && self.all_zero == self.annihilated
    }
}

pub fn module_idempotent_action(cat: &FinCat, m: &FinModule, e: &CenterElement) -> IdempotentAction {
    let actions: Vec<Matrix> = e.comps.iter().map(|x| m.act_on(x)).collect();
    let (ie, _) = ideal_of_idempotent(cat, e);
    let mi = module_times_ideal(cat, m, &ie);
    IdempotentAction {
        all_invertible: actions.iter().all(Matrix::is_invertible),
        all_zero: actions.iter().all(Matrix::is_zero),
        generated: mi == m.full(),
        annihilated: mi.is_zero(),
        actions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::catalog;
    use crate::modules::enumerate_modules;

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn center_dimensions() {
        for (name, d, idem) in [("pt(2)", 1, 2), ("a2cat(2)", 1, 2), ("prod(2)", 2, 4), ("dual(2)", 2, 2), ("mat2(2)", 1, 2), ("a2(3)", 1, 2)] {
            let c = catalog(name).unwrap();
            let z = compute_center(&c);
            assert_eq!(z.dim(), d, "{name}");
            assert!(z.is_commutative());
            assert!(z.coordinates(&center_unit(&c)).is_some());
            assert_eq!(center_idempotents(&c, &z, &l()).unwrap().len(), idem, "{name}");
        }
    }

    #[test]
    fn summands_match_idempotents() {
        for (name, k) in [("pt(2)", 2), ("prod(2)", 4), ("a2cat(2)", 2), ("dual(2)", 2)] {
            let c = catalog(name).unwrap();
            let r = summand_bijection_check(&c, &l()).unwrap();
            assert!(r.passes(), "{name}");
            assert_eq!(r.summands.len(), k);
        }
    }

    #[test]
    fn idempotent_ideals_of_prod() {
        let c = catalog("prod(2)").unwrap();
        let z = compute_center(&c);
        let idems = center_idempotents(&c, &z, &l()).unwrap();
        let one = center_unit(&c);
        let (i, j) = ideal_of_idempotent(&c, &one);
        assert!(i.is_full() && j.is_zero());
        for e in &idems {
            let (i, j) = ideal_of_idempotent(&c, e);
            assert!(crate::ideals::is_idempotent(&c, &i));
            assert!(crate::ideals::product(&c, &i, &j).is_zero());
            if !e.is_zero() && e != &one {
                assert_eq!((i.total_dim(), j.total_dim()), (1, 1));
            }
            for m in enumerate_modules(&c, 3, &l()).unwrap().modules {
                let act = module_idempotent_action(&c, &m, e);
                assert!(act.consistent());
                let (ie, je) = ideal_of_idempotent(&c, e);
                let (x, y) = (module_times_ideal(&c, &m, &ie), module_times_ideal(&c, &m, &je));
                assert!(x.intersect(&y).is_zero());
                assert_eq!(x.sum(&y), m.full());
            }
        }
    }
}
