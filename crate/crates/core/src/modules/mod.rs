//! Finite-dimensional right modules over a [`FinCat`].
//!
//! A module `M` assigns a space `M(a) = F_p^{d_a}` to each object and to
//! each basis morphism `α: a → b` a matrix `M(α): M(b) → M(a)` acting on
//! column vectors. Contravariance reads `M(β ∘ α) = M(α) · M(β)`.
//!
//! Every function takes the category explicitly; a module does not keep a
//! reference to it.

mod enumerate;
mod iso;
mod json;

pub use enumerate::{enumerate_modules, enumerate_modules_weighted, ModuleCensus};
pub use iso::{find_iso, fingerprint, is_iso, Fingerprint};
pub use json::{module_from_json, module_to_json, ModuleDoc};

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, Matrix, PrimeField, Subspace};
use crate::fincat::{FinCat, Morphism};
use crate::ideals::Ideal;
use crate::limits::Limits;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinModule {
    field: PrimeField,
    dims: Vec<usize>,
    /// `action[a * n + b][i] = M(α_i)` for the basis of `A(a, b)`.
    action: Vec<Vec<Matrix>>,
}

impl fmt::Debug for FinModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinModule{:?}", self.dims)
    }
}

/// A natural transformation, one matrix `φ_a: M(a) → N(a)` per object.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleMap {
    pub comps: Vec<Matrix>,
}

/// A submodule, one subspace per object.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Submodule {
    pub comps: Vec<Subspace>,
}

impl FinModule {
    /// Builds a module from one matrix per basis morphism, checking shapes.
    /// `act(a, b, i)` must be a `dims[a] × dims[b]` matrix.
    pub fn from_fn(cat: &FinCat, dims: Vec<usize>, mut act: impl FnMut(usize, usize, usize) -> Matrix) -> Result<Self> {
        let n = cat.num_objects();
        if dims.len() != n {
            return Err(Error::InvalidModule(format!("{} dimensions for {n} objects", dims.len())));
        }
        let mut action = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let mut v = Vec::with_capacity(cat.hom_dim(a, b));
                for i in 0..cat.hom_dim(a, b) {
                    let m = act(a, b, i);
                    if m.rows() != dims[a] || m.cols() != dims[b] {
                        return Err(Error::InvalidModule(format!(
                            "action of basis {i} of ({a},{b}) is {}x{}, expected {}x{}",
                            m.rows(),
                            m.cols(),
                            dims[a],
                            dims[b]
                        )));
                    }
                    v.push(m);
                }
                action.push(v);
            }
        }
        Ok(FinModule {
            field: cat.field(),
            dims,
            action,
        })
    }

    /// [`FinModule::from_fn`] followed by [`FinModule::check`].
    pub fn new(cat: &FinCat, dims: Vec<usize>, act: impl FnMut(usize, usize, usize) -> Matrix) -> Result<Self> {
        let m = FinModule::from_fn(cat, dims, act)?;
        m.check(cat)?;
        Ok(m)
    }

    pub fn zero(cat: &FinCat) -> Self {
        let n = cat.num_objects();
        FinModule::from_fn(cat, vec![0; n], |_, _, _| Matrix::zeros(cat.field(), 0, 0)).expect("zero module")
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self, a: usize) -> usize {
        self.dims[a]
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
    fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn basis_action(&self, a: usize, b: usize, i: usize) -> &Matrix {
        &self.action[a * self.n() + b][i]
    }

    /// `M(α)` for `α ∈ A(a, b)` in coordinates.
    pub fn act(&self, a: usize, b: usize, coords: &[u32]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dims[a], self.dims[b]);
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                m = m.add(&self.action[a * self.n() + b][i].scale(c)).expect("shapes agree");
            }
        }
        m
    }

    pub fn act_on(&self, alpha: &Morphism) -> Matrix {
        self.act(alpha.src, alpha.tgt, &alpha.coords)
    }

    /// Identity and contravariant functoriality on all basis pairs.
    pub fn check(&self, cat: &FinCat) -> Result<()> {
        let n = cat.num_objects();
        if self.n() != n || self.field != cat.field() {
            return Err(Error::InvalidModule("module and category disagree on shape".into()));
        }
        for a in 0..n {
            if self.act(a, a, cat.identity_coords(a)) != Matrix::identity(self.field, self.dims[a]) {
                return Err(Error::InvalidModule(format!("M(id_{}) is not the identity", cat.object_name(a))));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for i in 0..cat.hom_dim(a, b) {
                        for j in 0..cat.hom_dim(b, c) {
                            let lhs = self.act(a, c, cat.basis_product(a, b, c, i, j));
                            let rhs = self.basis_action(a, b, i).mul_unchecked(self.basis_action(b, c, j));
                            if lhs != rhs {
                                return Err(Error::InvalidModule(format!(
                                    "M(β∘α) ≠ M(α)M(β) on objects ({},{},{}) basis ({i},{j})",
                                    cat.object_name(a),
                                    cat.object_name(b),
                                    cat.object_name(c)
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &FinModule) -> FinModule {
        let n = self.n();
        let dims = (0..n).map(|a| self.dims[a] + other.dims[a]).collect();
        let action = (0..n * n)
            .map(|ab| {
                self.action[ab]
                    .iter()
                    .zip(&other.action[ab])
                    .map(|(x, y)| x.direct_sum(y))
                    .collect()
            })
            .collect();
        FinModule {
            field: self.field,
            dims,
            action,
        }
    }

    pub fn power(&self, cat: &FinCat, k: usize) -> FinModule {
        (0..k).fold(FinModule::zero(cat), |acc, _| acc.direct_sum(self))
    }

    /// The whole module as a submodule of itself.
    pub fn full(&self) -> Submodule {
        Submodule {
            comps: self.dims.iter().map(|&d| Subspace::full(self.field, d)).collect(),
        }
    }

    pub fn zero_sub(&self) -> Submodule {
        Submodule {
            comps: self.dims.iter().map(|&d| Subspace::zero(self.field, d)).collect(),
        }
    }

    /// Smallest submodule containing the given elements `(object, vector)`.
    pub fn generated(&self, cat: &FinCat, elems: &[(usize, Vec<u32>)]) -> Submodule {
        let n = self.n();
        let mut vecs: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n];
        for (a, m) in elems {
            // ⟨m⟩(b) = { M(β) m : β ∈ A(b, a) }
            for b in 0..n {
                for i in 0..cat.hom_dim(b, *a) {
                    vecs[b].push(self.basis_action(b, *a, i).apply(m));
                }
            }
        }
        Submodule {
            comps: (0..n)
                .map(|b| Subspace::span(self.field, self.dims[b], &vecs[b]).expect("consistent lengths"))
                .collect(),
        }
    }

    /// Is `s` closed under the action?
    pub fn is_submodule(&self, cat: &FinCat, s: &Submodule) -> bool {
        let n = self.n();
        if s.comps.len() != n || (0..n).any(|a| s.comps[a].ambient() != self.dims[a]) {
            return false;
        }
        for a in 0..n {
            for b in 0..n {
                for i in 0..cat.hom_dim(a, b) {
                    let img = s.comps[b].image_under(self.basis_action(a, b, i)).expect("shapes");
                    if !s.comps[a].contains_subspace(&img).expect("ambient") {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The submodule `s` as a module in the coordinates of its canonical
    /// bases, with the inclusion map.
    pub fn submodule_module(&self, cat: &FinCat, s: &Submodule) -> (FinModule, ModuleMap) {
        let dims: Vec<usize> = s.comps.iter().map(|c| c.dim()).collect();
        let sub = FinModule::from_fn(cat, dims, |a, b, i| {
            let m = self.basis_action(a, b, i);
            let cols: Vec<Vec<u32>> = s.comps[b]
                .basis_vectors()
                .iter()
                .map(|v| s.comps[a].coordinates(&m.apply(v)).expect("submodule is closed"))
                .collect();
            Matrix::from_columns(self.field, s.comps[a].dim(), &cols)
        })
        .expect("shapes agree");
        let incl = ModuleMap {
            comps: s.comps.iter().map(|c| c.basis().transpose()).collect(),
        };
        (sub, incl)
    }

    /// `M / S` with the projection map.
    pub fn quotient(&self, cat: &FinCat, s: &Submodule) -> (FinModule, ModuleMap) {
        let qs: Vec<Matrix> = s.comps.iter().map(|c| c.quotient_map()).collect();
        // Sections: the free (non-pivot) coordinate vectors.
        let sections: Vec<Matrix> = s
            .comps
            .iter()
            .map(|c| {
                let piv = c.pivots();
                let free: Vec<usize> = (0..c.ambient()).filter(|x| !piv.contains(x)).collect();
                let cols: Vec<Vec<u32>> = free
                    .iter()
                    .map(|&k| {
                        let mut e = vec![0; c.ambient()];
                        e[k] = 1;
                        e
                    })
                    .collect();
                Matrix::from_columns(self.field, c.ambient(), &cols)
            })
            .collect();
        let dims: Vec<usize> = qs.iter().map(|q| q.rows()).collect();
        let quo = FinModule::from_fn(cat, dims, |a, b, i| {
            qs[a].mul_unchecked(self.basis_action(a, b, i)).mul_unchecked(&sections[b])
        })
        .expect("shapes agree");
        (quo, ModuleMap { comps: qs })
    }

    /// Every element of `M(a)`, capped.
    pub fn elements(&self, a: usize, limits: &Limits) -> Result<Vec<Vec<u32>>> {
        Subspace::full(self.field, self.dims[a]).elements(limits)
    }
}

impl ModuleMap {
    pub fn zero(m: &FinModule, n: &FinModule) -> Self {
        ModuleMap {
            comps: (0..m.dims.len())
                .map(|a| Matrix::zeros(m.field, n.dims[a], m.dims[a]))
                .collect(),
        }
    }

    pub fn identity(m: &FinModule) -> Self {
        ModuleMap {
            comps: m.dims.iter().map(|&d| Matrix::identity(m.field, d)).collect(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap {
            comps: self.comps.iter().zip(&other.comps).map(|(x, y)| x.mul_unchecked(y)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn is_natural(&self, cat: &FinCat, m: &FinModule, n: &FinModule) -> bool {
        let k = cat.num_objects();
        for a in 0..k {
            for b in 0..k {
                for i in 0..cat.hom_dim(a, b) {
                    let lhs = self.comps[a].mul_unchecked(m.basis_action(a, b, i));
                    let rhs = n.basis_action(a, b, i).mul_unchecked(&self.comps[b]);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(|c| c.is_invertible())
    }

    pub fn kernel(&self) -> Submodule {
        Submodule {
            comps: self.comps.iter().map(|c| kernel_basis(c).expect("kernel")).collect(),
        }
    }

    pub fn image(&self) -> Submodule {
        Submodule {
            comps: self
                .comps
                .iter()
                .map(|c| crate::exactla::image_basis(c).expect("image"))
                .collect(),
        }
    }

    /// `Σ c_k φ_k`.
    pub fn combination(field: PrimeField, basis: &[ModuleMap], coeffs: &[u32]) -> Option<ModuleMap> {
        let first = basis.first()?;
        let mut out: Vec<Matrix> = first.comps.iter().map(|c| Matrix::zeros(field, c.rows(), c.cols())).collect();
        for (phi, &c) in basis.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for (o, x) in out.iter_mut().zip(&phi.comps) {
                *o = o.add(&x.scale(c)).expect("shapes");
            }
        }
        Some(ModuleMap { comps: out })
    }
}

impl Submodule {
    pub fn dims(&self) -> Vec<usize> {
        self.comps.iter().map(|c| c.dim()).collect()
    }
    pub fn total_dim(&self) -> usize {
        self.comps.iter().map(|c| c.dim()).sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
    pub fn sum(&self, other: &Submodule) -> Submodule {
        Submodule {
            comps: self.comps.iter().zip(&other.comps).map(|(x, y)| x.sum(y).expect("ambient")).collect(),
        }
    }
    pub fn intersect(&self, other: &Submodule) -> Submodule {
        Submodule {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(x, y)| x.intersect(y).expect("ambient"))
                .collect(),
        }
    }
    pub fn contains(&self, other: &Submodule) -> bool {
        self.comps
            .iter()
            .zip(&other.comps)
            .all(|(x, y)| x.contains_subspace(y).expect("ambient"))
    }
    /// Image under a module map.
    pub fn image_under(&self, phi: &ModuleMap) -> Submodule {
        Submodule {
            comps: self
                .comps
                .iter()
                .zip(&phi.comps)
                .map(|(s, m)| s.image_under(m).expect("shapes"))
                .collect(),
        }
    }
    /// Preimage under a module map.
    pub fn preimage_under(&self, phi: &ModuleMap) -> Submodule {
        Submodule {
            comps: self
                .comps
                .iter()
                .zip(&phi.comps)
                .map(|(s, m)| s.preimage_under(m).expect("shapes"))
                .collect(),
        }
    }
}

/// `H_a = A(−, a)`; `H_a(α) = (− ∘ α)`.
pub fn representable(cat: &FinCat, a: usize) -> FinModule {
    let n = cat.num_objects();
    let dims = (0..n).map(|b| cat.hom_dim(b, a)).collect();
    FinModule::from_fn(cat, dims, |b, c, i| cat.pre_matrix(&cat.basis_morphism(b, c, i), a))
        .expect("representable shapes")
}

/// `⊕_i H_{objs[i]}`.
pub fn free_module(cat: &FinCat, objs: &[usize]) -> FinModule {
    objs.iter()
        .fold(FinModule::zero(cat), |acc, &a| acc.direct_sum(&representable(cat, a)))
}

/// The Yoneda map `H_a → M` sending `id_a` to `m ∈ M(a)`.
pub fn yoneda_map(cat: &FinCat, m_mod: &FinModule, a: usize, m: &[u32]) -> ModuleMap {
    let n = cat.num_objects();
    ModuleMap {
        comps: (0..n)
            .map(|b| {
                let cols: Vec<Vec<u32>> = (0..cat.hom_dim(b, a))
                    .map(|i| m_mod.basis_action(b, a, i).apply(m))
                    .collect();
                Matrix::from_columns(m_mod.field(), m_mod.dim(b), &cols)
            })
            .collect(),
    }
}

/// A basis of `Hom_A(M, N)`, from the naturality equations
/// `φ_a M(α) = N(α) φ_b`.
pub fn hom_space(cat: &FinCat, m: &FinModule, n: &FinModule) -> Vec<ModuleMap> {
    let k = cat.num_objects();
    let f = m.field();
    // Unknown layout: φ_a row-major, objects in order.
    let mut offset = Vec::with_capacity(k);
    let mut total = 0;
    for a in 0..k {
        offset.push(total);
        total += n.dim(a) * m.dim(a);
    }
    if total == 0 {
        return Vec::new();
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for a in 0..k {
        for b in 0..k {
            for i in 0..cat.hom_dim(a, b) {
                let ma = m.basis_action(a, b, i); // m_a × m_b
                let na = n.basis_action(a, b, i); // n_a × n_b
                // entry (r, c) of φ_a M(α) − N(α) φ_b, r < n_a, c < m_b
                for r in 0..n.dim(a) {
                    for c in 0..m.dim(b) {
                        let mut row = vec![0u32; total];
                        for s in 0..m.dim(a) {
                            let x = ma.get(s, c);
                            if x != 0 {
                                let idx = offset[a] + r * m.dim(a) + s;
                                row[idx] = f.add(row[idx], x);
                            }
                        }
                        for s in 0..n.dim(b) {
                            let x = na.get(r, s);
                            if x != 0 {
                                let idx = offset[b] + s * m.dim(b) + c;
                                row[idx] = f.sub(row[idx], x);
                            }
                        }
                        if row.iter().any(|&x| x != 0) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
    }
    let sys = Matrix::from_rows(f, total, &rows).expect("row lengths");
    let ker = kernel_basis(&sys).expect("kernel");
    ker.basis_vectors()
        .into_iter()
        .map(|v| ModuleMap {
            comps: (0..k)
                .map(|a| {
                    Matrix::from_flat(f, n.dim(a), m.dim(a), v[offset[a]..offset[a] + n.dim(a) * m.dim(a)].to_vec())
                        .expect("shape")
                })
                .collect(),
        })
        .collect()
}

pub fn hom_dim(cat: &FinCat, m: &FinModule, n: &FinModule) -> usize {
    hom_space(cat, m, n).len()
}

/// Every submodule of `M`, sorted by canonical form.
///
/// Each submodule is the sum of the cyclic submodules of its elements, so
/// the lattice is the sum-closure of the cyclic submodules.
pub fn all_submodules(cat: &FinCat, m: &FinModule, limits: &Limits) -> Result<Vec<Submodule>> {
    limits.check_vectors("submodule enumeration", m.field().p(), m.total_dim())?;
    let mut cyclic: Vec<Submodule> = Vec::new();
    for a in 0..cat.num_objects() {
        for v in m.elements(a, limits)? {
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            let c = m.generated(cat, &[(a, v)]);
            if !cyclic.contains(&c) {
                cyclic.push(c);
            }
        }
    }
    let mut all: std::collections::BTreeSet<Submodule> = std::collections::BTreeSet::new();
    all.insert(m.zero_sub());
    for c in &cyclic {
        let snapshot: Vec<Submodule> = all.iter().cloned().collect();
        for s in snapshot {
            all.insert(s.sum(c));
        }
    }
    Ok(all.into_iter().collect())
}

/// `tr_S(M)`: the sum of the images of all maps from members of `S`.
pub fn trace(cat: &FinCat, s: &[FinModule], m: &FinModule) -> Submodule {
    let mut t = m.zero_sub();
    for x in s {
        for phi in hom_space(cat, x, m) {
            t = t.sum(&phi.image());
        }
    }
    t
}

/// `MI(a) = Σ_{b, α ∈ I(a,b)} Im M(α)`.
pub fn module_times_ideal(cat: &FinCat, m: &FinModule, ideal: &Ideal) -> Submodule {
    let n = cat.num_objects();
    Submodule {
        comps: (0..n)
            .map(|a| {
                let mut vecs = Vec::new();
                for b in 0..n {
                    for alpha in ideal.at(a, b).basis_vectors() {
                        let act = m.act(a, b, &alpha);
                        vecs.extend((0..act.cols()).map(|c| act.column(c)));
                    }
                }
                Subspace::span(m.field(), m.dim(a), &vecs).expect("lengths")
            })
            .collect(),
    }
}

/// The largest submodule killed by `I`:
/// `{m ∈ M(a) : M(α) m = 0 for all α ∈ I(b, a)}`.
pub fn annihilator(cat: &FinCat, m: &FinModule, ideal: &Ideal) -> Submodule {
    let n = cat.num_objects();
    Submodule {
        comps: (0..n)
            .map(|a| {
                let mut rows: Vec<Vec<u32>> = Vec::new();
                for b in 0..n {
                    for alpha in ideal.at(b, a).basis_vectors() {
                        rows.extend(m.act(b, a, &alpha).to_rows());
                    }
                }
                let sys = Matrix::from_rows(m.field(), m.dim(a), &rows).expect("lengths");
                kernel_basis(&sys).expect("kernel")
            })
            .collect(),
    }
}

/// `(π_I)_*`: an `A/I`-module viewed as an `A`-module.
pub fn restrict_along_quotient(cat: &FinCat, ideal: &Ideal, quot: &FinCat, n_mod: &FinModule) -> Result<FinModule> {
    n_mod.check(quot)?;
    FinModule::from_fn(cat, n_mod.dims().to_vec(), |a, b, i| {
        let e = cat.basis_morphism(a, b, i);
        n_mod.act(a, b, &ideal.project(a, b, &e.coords))
    })
}

/// `(π_I)^*(M) = M / MI` as an `A/I`-module.
pub fn extend_to_quotient(cat: &FinCat, ideal: &Ideal, quot: &FinCat, m: &FinModule) -> Result<FinModule> {
    let mi = module_times_ideal(cat, m, ideal);
    let (q, _) = m.quotient(cat, &mi);
    FinModule::from_fn(quot, q.dims().to_vec(), |a, b, i| q.act(a, b, &ideal.lift(a, b, i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::catalog;

    #[test]
    fn representable_dims() {
        let pt = catalog("pt(2)").unwrap();
        assert_eq!(representable(&pt, 0).dims(), &[1]);
        let a2 = catalog("a2cat(2)").unwrap();
        let h2 = representable(&a2, 1);
        assert_eq!(h2.dims(), &[1, 1]);
        h2.check(&a2).unwrap();
        let dual = catalog("dual(2)").unwrap();
        assert_eq!(representable(&dual, 0).total_dim(), 2);
    }

    #[test]
    fn hom_space_examples() {
        let pt = catalog("pt(2)").unwrap();
        let h = representable(&pt, 0);
        assert_eq!(hom_dim(&pt, &h, &h), 1);
        assert_eq!(hom_dim(&pt, &h, &FinModule::zero(&pt)), 0);
        let a2 = catalog("a2cat(2)").unwrap();
        let h1 = representable(&a2, 0);
        let h2 = representable(&a2, 1);
        for phi in hom_space(&a2, &h1, &h2) {
            assert!(phi.is_natural(&a2, &h1, &h2));
        }
        assert_eq!(hom_dim(&a2, &h1, &h2), 1);
        assert_eq!(hom_dim(&a2, &h2, &h1), 0);
    }

    #[test]
    fn submodule_counts() {
        let l = Limits::default();
        let dual = catalog("dual(2)").unwrap();
        assert_eq!(all_submodules(&dual, &representable(&dual, 0), &l).unwrap().len(), 3);
        let a2 = catalog("a2cat(2)").unwrap();
        let subs = all_submodules(&a2, &representable(&a2, 1), &l).unwrap();
        assert_eq!(subs.len(), 3);
        assert!(subs.iter().any(|s| s.dims() == vec![1, 0]));
        let pt = catalog("pt(3)").unwrap();
        assert_eq!(all_submodules(&pt, &representable(&pt, 0), &l).unwrap().len(), 2);
    }

    #[test]
    fn quotient_of_dual_by_radical_is_simple() {
        let dual = catalog("dual(2)").unwrap();
        let h = representable(&dual, 0);
        let x = h.generated(&dual, &[(0, vec![0, 1])]);
        assert_eq!(x.total_dim(), 1);
        let (q, pi) = h.quotient(&dual, &x);
        q.check(&dual).unwrap();
        assert_eq!(q.total_dim(), 1);
        assert!(q.basis_action(0, 0, 1).is_zero());
        assert!(pi.is_natural(&dual, &h, &q));
        let (m0, _) = h.quotient(&dual, &h.zero_sub());
        assert_eq!(m0, h);
    }

    #[test]
    fn yoneda_kernel_is_zero() {
        let a2 = catalog("a2cat(2)").unwrap();
        let h2 = representable(&a2, 1);
        let phi = yoneda_map(&a2, &h2, 0, &[1]);
        assert!(phi.is_natural(&a2, &representable(&a2, 0), &h2));
        assert!(phi.kernel().is_zero());
    }
}
