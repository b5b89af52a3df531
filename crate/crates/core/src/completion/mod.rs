//! Bounded additive closure `Â`, idempotent completion `A_⊕`, ⊕-generators
//! and pseudo-kernels.
//!
//! Both completions are infinite in general; every constructor takes a
//! bound on tuple length and builds the full subcategory on the objects
//! within it.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::fincat::{FinCat, Morphism};
use crate::limits::{Limits, CAP_ENV};
use crate::modules::{free_module, FinModule, ModuleMap, Submodule};
use crate::peirce::idempotents_at;

/// `Â` restricted to tuples of length at most a bound.
///
/// A morphism `f: (a_1..a_n) → (b_1..b_m)` is a matrix with entries
/// `f_{ji} ∈ A(a_i, b_j)`; its coordinates list the entries for
/// `i = 0..n`, then `j = 0..m`, each in the basis of `A(a_i, b_j)`.
#[derive(Debug, Clone)]
pub struct AdditiveClosure {
    base: FinCat,
    cat: FinCat,
    tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

fn tuple_name(base: &FinCat, t: &[usize]) -> String {
    match t {
        [a] => base.object_name(*a).to_string(),
        _ => format!("({})", t.iter().map(|&a| base.object_name(a)).collect::<Vec<_>>().join(",")),
    }
}

/// All tuples of length `0..=maxlen`, by length then lexicographically.
fn tuples_up_to(n: usize, maxlen: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..maxlen {
        let mut next = Vec::new();
        for t in &layer {
            for a in 0..n {
                let mut u = t.clone();
                u.push(a);
                next.push(u);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn entry_offset(base: &FinCat, x: &[usize], y: &[usize], i: usize, j: usize) -> usize {
    let mut off = 0;
    for (ii, &a) in x.iter().enumerate() {
        for (jj, &b) in y.iter().enumerate() {
            if (ii, jj) == (i, j) {
                return off;
            }
            off += base.hom_dim(a, b);
        }
    }
    off
}

fn block_dim(base: &FinCat, x: &[usize], y: &[usize]) -> usize {
    x.iter().map(|&a| y.iter().map(|&b| base.hom_dim(a, b)).sum::<usize>()).sum()
}

pub fn additive_closure(base: &FinCat, maxlen: usize, limits: &Limits) -> Result<AdditiveClosure> {
    let n = base.num_objects();
    let count: u128 = (0..=maxlen as u32).map(|k| (n as u128).saturating_pow(k)).sum();
    if count > limits.vectors as u128 {
        return Err(Error::cap("additive closure objects", count, limits.vectors as u128, CAP_ENV));
    }
    let tuples = tuples_up_to(n, maxlen);
    let hom: Vec<Vec<usize>> = tuples.iter().map(|x| tuples.iter().map(|y| block_dim(base, x, y)).collect()).collect();
    let id: Vec<Vec<u32>> = tuples
        .iter()
        .map(|x| {
            let mut v = vec![0; block_dim(base, x, x)];
            for (i, &a) in x.iter().enumerate() {
                let off = entry_offset(base, x, x, i, i);
                v[off..off + base.hom_dim(a, a)].copy_from_slice(base.identity_coords(a));
            }
            v
        })
        .collect();
    let names = tuples.iter().map(|t| tuple_name(base, t)).collect();
    let cat = FinCat::from_tables(
        base.field(),
        names,
        hom.clone(),
        |xi, yi, zi| {
            let (x, y, z) = (&tuples[xi], &tuples[yi], &tuples[zi]);
            let mut table = Vec::with_capacity(hom[xi][yi]);
            for (i, &a) in x.iter().enumerate() {
                for (j, &b) in y.iter().enumerate() {
                    for k in 0..base.hom_dim(a, b) {
                        let mut row = Vec::with_capacity(hom[yi][zi]);
                        for (j2, &b2) in y.iter().enumerate() {
                            for (l, &c) in z.iter().enumerate() {
                                for k2 in 0..base.hom_dim(b2, c) {
                                    let mut v = vec![0; hom[xi][zi]];
                                    if j2 == j {
                                        let off = entry_offset(base, x, z, i, l);
                                        v[off..off + base.hom_dim(a, c)].copy_from_slice(base.basis_product(a, b, c, k, k2));
                                    }
                                    row.push(v);
                                }
                            }
                        }
                        table.push(row);
                    }
                }
            }
            table
        },
        id,
    )?;
    let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    Ok(AdditiveClosure { base: base.clone(), cat, tuples, index })
}

impl AdditiveClosure {
    pub fn base(&self) -> &FinCat {
        &self.base
    }

    pub fn category(&self) -> &FinCat {
        &self.cat
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn tuple(&self, x: usize) -> &[usize] {
        &self.tuples[x]
    }

    pub fn index_of(&self, t: &[usize]) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Index of the one-element tuple `(a)`.
    pub fn singleton(&self, a: usize) -> usize {
        1 + a
    }

    /// Entry `f_{ji}: x_i → y_j` of a morphism `f: x → y`.
    pub fn entry(&self, f: &Morphism, i: usize, j: usize) -> Morphism {
        let (x, y) = (&self.tuples[f.src], &self.tuples[f.tgt]);
        let off = entry_offset(&self.base, x, y, i, j);
        let d = self.base.hom_dim(x[i], y[j]);
        Morphism::new(x[i], y[j], f.coords[off..off + d].to_vec())
    }

    /// Assembles `f: x → y` from its entries.
    pub fn from_entries(&self, x: usize, y: usize, mut entry: impl FnMut(usize, usize) -> Vec<u32>) -> Morphism {
        let (tx, ty) = (&self.tuples[x], &self.tuples[y]);
        let mut coords = Vec::with_capacity(self.cat.hom_dim(x, y));
        for i in 0..tx.len() {
            for j in 0..ty.len() {
                coords.extend(entry(i, j));
            }
        }
        Morphism::new(x, y, coords)
    }

    /// The sub-tuples of the identity: inclusion `(x_i) → x` and projection
    /// `x → (x_i)`.
    pub fn injection(&self, x: usize, i: usize) -> Morphism {
        let a = self.tuples[x][i];
        self.from_entries(self.singleton(a), x, |_, j| {
            if j == i {
                self.base.identity_coords(a).to_vec()
            } else {
                vec![0; self.base.hom_dim(a, self.tuples[x][j])]
            }
        })
    }

    pub fn projection(&self, x: usize, i: usize) -> Morphism {
        let a = self.tuples[x][i];
        self.from_entries(x, self.singleton(a), |ii, _| {
            if ii == i {
                self.base.identity_coords(a).to_vec()
            } else {
                vec![0; self.base.hom_dim(self.tuples[x][ii], a)]
            }
        })
    }

    /// The induced module `M̂(a_1..a_n) = ⊕ M(a_i)`.
    pub fn induce(&self, m: &FinModule) -> Result<FinModule> {
        let dims: Vec<usize> = self.tuples.iter().map(|t| t.iter().map(|&a| m.dim(a)).sum()).collect();
        FinModule::from_fn(&self.cat, dims, |xi, yi, k| self.induced_matrix(m, &self.cat.basis_morphism(xi, yi, k)))
    }

    /// `M̂(f): ⊕ M(y_j) → ⊕ M(x_i)` for `f: x → y`, with block `(i, j)`
    /// equal to `M(f_{ji})`.
    pub fn induced_matrix(&self, m: &FinModule, f: &Morphism) -> Matrix {
        let (x, y) = (&self.tuples[f.src], &self.tuples[f.tgt]);
        let rows = x.iter().map(|&a| m.dim(a)).sum();
        let cols = y.iter().map(|&b| m.dim(b)).sum();
        let mut out = Matrix::zeros(m.field(), rows, cols);
        let mut r0 = 0;
        for (i, &a) in x.iter().enumerate() {
            let mut c0 = 0;
            for (j, &b) in y.iter().enumerate() {
                let e = self.entry(f, i, j);
                out.paste(r0, c0, &m.act(a, b, &e.coords));
                c0 += m.dim(b);
            }
            r0 += m.dim(a);
        }
        out
    }

    /// Restriction of an `Â`-module along the singleton embedding.
    pub fn restrict(&self, m: &FinModule) -> Result<FinModule> {
        let n = self.base.num_objects();
        let dims = (0..n).map(|a| m.dim(self.singleton(a))).collect();
        FinModule::from_fn(&self.base, dims, |a, b, i| m.basis_action(self.singleton(a), self.singleton(b), i).clone())
    }

    /// `Hom(H_x, H_y)` realised as maps of free `A`-modules: `f ↦ f ∘ −`.
    pub fn free_map(&self, f: &Morphism) -> ModuleMap {
        let (x, y) = (&self.tuples[f.src], &self.tuples[f.tgt]);
        let n = self.base.num_objects();
        let fld = self.base.field();
        ModuleMap {
            comps: (0..n)
                .map(|c| {
                    let rows: usize = y.iter().map(|&b| self.base.hom_dim(c, b)).sum();
                    let cols: usize = x.iter().map(|&a| self.base.hom_dim(c, a)).sum();
                    let mut out = Matrix::zeros(fld, rows, cols);
                    let mut r0 = 0;
                    for (j, &b) in y.iter().enumerate() {
                        let mut c0 = 0;
                        for (i, &a) in x.iter().enumerate() {
                            out.paste(r0, c0, &self.base.post_matrix(c, &self.entry(f, i, j)));
                            c0 += self.base.hom_dim(c, a);
                        }
                        r0 += self.base.hom_dim(c, b);
                    }
                    out
                })
                .collect(),
        }
    }

    /// `⊕ H_{x_i}` as an `A`-module.
    pub fn free(&self, x: usize) -> FinModule {
        free_module(&self.base, &self.tuples[x])
    }

    /// The projective `εA = Im(ε ∘ −) ≤ ⊕ H_{x_i}` for an idempotent `ε` of `Â`.
    pub fn projective(&self, e: &Morphism) -> FinModule {
        let free = self.free(e.src);
        let (p, _) = free.submodule_module(&self.base, &self.free_map(e).image());
        p
    }
}

/// Every idempotent endomorphism of `a`, or of every object.
pub fn list_idempotents(cat: &FinCat, object: Option<usize>, limits: &Limits) -> Result<Vec<Morphism>> {
    let mut out = Vec::new();
    for a in 0..cat.num_objects() {
        if object.is_none_or(|o| o == a) {
            out.extend(idempotents_at(cat, a, limits)?);
        }
    }
    Ok(out)
}

/// The corner category on a list of idempotents `ε` of `cat`:
/// `C_E(ε, ε') = {α : α = ε' ∘ β ∘ ε}` with identity `ε`.
#[derive(Debug, Clone)]
pub struct Corner {
    cat: FinCat,
    idems: Vec<Morphism>,
    /// `homs[s * k + t]`: `C_E(ε_s, ε_t)` inside `A(x_s, x_t)`; its
    /// reduced echelon basis is the hom basis.
    homs: Vec<Subspace>,
}

pub fn corner_category(cat: &FinCat, idems: &[Morphism], names: Vec<String>) -> Result<Corner> {
    let k = idems.len();
    for e in idems {
        if !cat.is_idempotent(e) {
            return Err(Error::NotIdempotent(format!("{:?} at {}", e.coords, cat.object_name(e.src))));
        }
    }
    let mut homs = Vec::with_capacity(k * k);
    for s in idems {
        for t in idems {
            let (x, y) = (s.src, t.src);
            let vecs: Vec<Vec<u32>> = (0..cat.hom_dim(x, y))
                .map(|i| cat.compose(t, &cat.compose(&cat.basis_morphism(x, y, i), s)).coords)
                .collect();
            homs.push(Subspace::span(cat.field(), cat.hom_dim(x, y), &vecs)?);
        }
    }
    let dims: Vec<Vec<usize>> = (0..k).map(|s| (0..k).map(|t| homs[s * k + t].dim()).collect()).collect();
    let id: Vec<Vec<u32>> = (0..k)
        .map(|s| homs[s * k + s].coordinates(&idems[s].coords).expect("ε lies in εAε"))
        .collect();
    let corner = FinCat::from_tables(
        cat.field(),
        names,
        dims,
        |s, t, u| {
            let (x, y, z) = (idems[s].src, idems[t].src, idems[u].src);
            let btu = homs[t * k + u].basis_vectors();
            homs[s * k + t]
                .basis_vectors()
                .iter()
                .map(|f| {
                    btu.iter()
                        .map(|g| {
                            let w = cat.compose_coords(x, y, z, f, g);
                            homs[s * k + u].coordinates(&w).expect("closed under composition")
                        })
                        .collect()
                })
                .collect()
        },
        id,
    )?;
    Ok(Corner { cat: corner, idems: idems.to_vec(), homs })
}

impl Corner {
    pub fn category(&self) -> &FinCat {
        &self.cat
    }

    pub fn idempotents(&self) -> &[Morphism] {
        &self.idems
    }

    /// The morphism of the ambient category underlying a corner morphism.
    pub fn underlying(&self, f: &Morphism) -> Morphism {
        let k = self.idems.len();
        let space = &self.homs[f.src * k + f.tgt];
        let mut v = vec![0; space.ambient()];
        for (c, row) in f.coords.iter().zip(space.basis_vectors()) {
            self.cat.field().axpy(&mut v, *c, &row);
        }
        Morphism::new(self.idems[f.src].src, self.idems[f.tgt].src, v)
    }
}

/// `A_⊕` over the bounded additive closure: the corner category of `Â` on
/// the zero object and every non-zero idempotent of a non-empty tuple.
#[derive(Debug, Clone)]
pub struct IdempotentCompletion {
    closure: AdditiveClosure,
    corner: Corner,
}

pub fn idempotent_completion(base: &FinCat, bound: usize, limits: &Limits) -> Result<IdempotentCompletion> {
    let closure = additive_closure(base, bound, limits)?;
    let hat = closure.category();
    let mut idems = vec![hat.zero(0, 0)];
    for x in 1..hat.num_objects() {
        idems.extend(idempotents_at(hat, x, limits)?.into_iter().filter(|r| !r.is_zero()));
    }
    let k = idems.len() as u128;
    limits.check_search("idempotent completion composition table", k * k * k)?;
    let names = idems
        .iter()
        .enumerate()
        .map(|(i, r)| if i == 0 { "0".to_string() } else { format!("{}#{i}", hat.object_name(r.src)) })
        .collect();
    let corner = corner_category(hat, &idems, names)?;
    Ok(IdempotentCompletion { closure, corner })
}

impl IdempotentCompletion {
    pub fn category(&self) -> &FinCat {
        self.corner.category()
    }

    pub fn closure(&self) -> &AdditiveClosure {
        &self.closure
    }

    /// `(x, r)` for each object: the carrier tuple is `r.src`.
    pub fn idempotents(&self) -> &[Morphism] {
        self.corner.idempotents()
    }

    /// The morphism of `Â` underlying a morphism of `A_⊕`.
    pub fn underlying(&self, f: &Morphism) -> Morphism {
        self.corner.underlying(f)
    }

    /// Index of the object `(x, r)`.
    pub fn find(&self, idem: &Morphism) -> Option<usize> {
        if idem.is_zero() {
            return Some(0);
        }
        self.idempotents().iter().position(|o| o == idem)
    }
}

/// A tuple `g` whose copies split off every base object, with the number of
/// copies needed for each object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OplusGenerator {
    pub tuple: Vec<usize>,
    pub copies: Vec<usize>,
}

/// Searches tuples of distinct objects, shortest first, for a ⊕-generator.
///
/// `id_a` factors through `g^n` iff it lies in `Σ_i span{h ∘ f}` with
/// `f: a → g_i`, `h: g_i → a`; expanding `f` in a basis shows
/// `n = max_i dim A(a, g_i)` copies always suffice. Objects needing more
/// copies than `bound` count as not generated.
pub fn find_oplus_generator(cat: &FinCat, bound: usize) -> Option<OplusGenerator> {
    let n = cat.num_objects();
    if n == 0 {
        return Some(OplusGenerator { tuple: Vec::new(), copies: Vec::new() });
    }
    for len in 1..=n.min(bound.max(1)) {
        for g in crate::exactla::combinations(n, len) {
            if let Some(copies) = generator_copies(cat, &g, bound) {
                return Some(OplusGenerator { tuple: g, copies });
            }
        }
    }
    None
}

fn generator_copies(cat: &FinCat, g: &[usize], bound: usize) -> Option<Vec<usize>> {
    let mut copies = Vec::new();
    for a in 0..cat.num_objects() {
        let mut vecs = Vec::new();
        for &c in g {
            for i in 0..cat.hom_dim(a, c) {
                for j in 0..cat.hom_dim(c, a) {
                    vecs.push(cat.basis_product(a, c, a, i, j).to_vec());
                }
            }
        }
        let span = Subspace::span(cat.field(), cat.hom_dim(a, a), &vecs).expect("lengths");
        if !span.contains(cat.identity_coords(a)).expect("ambient") {
            return None;
        }
        let need = g.iter().map(|&c| cat.hom_dim(a, c)).max().unwrap_or(0).max(1);
        if need > bound {
            return None;
        }
        copies.push(need);
    }
    Some(copies)
}

/// A pseudo-kernel of `φ: ⊕H_{x_i} → ⊕H_{y_j}` given as `φ ∈ Â(x, y)`.
#[derive(Debug, Clone)]
pub struct PseudoKernel {
    /// Objects `c_l` of the source `⊕ H_{c_l}`.
    pub source: Vec<usize>,
    /// `ψ: ⊕ H_{c_l} → ⊕ H_{x_i}`, column `l` an element of `Ker φ (c_l)`.
    pub columns: Vec<Vec<u32>>,
    pub kernel: Submodule,
}

/// Generators of `Ker φ`, chosen greedily by the size of the cyclic
/// submodule they add, so that `φ = 0` returns `ψ = id`.
pub fn pseudo_kernel(closure: &AdditiveClosure, phi: &Morphism) -> PseudoKernel {
    let base = closure.base();
    let src = closure.free(phi.src);
    let ker = closure.free_map(phi).kernel();
    let mut current = src.zero_sub();
    let mut gens: Vec<(usize, Vec<u32>)> = Vec::new();
    while current != ker {
        let mut best: Option<(usize, (usize, Vec<u32>), Submodule)> = None;
        for c in 0..base.num_objects() {
            for v in ker.comps[c].basis_vectors() {
                if current.comps[c].contains(&v).expect("ambient") {
                    continue;
                }
                let s = current.sum(&src.generated(base, &[(c, v.clone())]));
                let d = s.total_dim();
                if best.as_ref().is_none_or(|(bd, _, _)| d > *bd) {
                    best = Some((d, (c, v), s));
                }
            }
        }
        let (_, g, s) = best.expect("kernel strictly larger than current span");
        gens.push(g);
        current = s;
    }
    PseudoKernel { source: gens.iter().map(|g| g.0).collect(), columns: gens.into_iter().map(|g| g.1).collect(), kernel: ker }
}

impl PseudoKernel {
    /// `ψ` as a morphism of `Â`, when the source tuple lies in the closure.
    pub fn as_morphism(&self, closure: &AdditiveClosure, x: usize) -> Option<Morphism> {
        let s = closure.index_of(&self.source)?;
        let base = closure.base();
        let tx = closure.tuple(x).to_vec();
        Some(closure.from_entries(s, x, |l, i| {
            let c = self.source[l];
            let off: usize = tx[..i].iter().map(|&a| base.hom_dim(c, a)).sum();
            self.columns[l][off..off + base.hom_dim(c, tx[i])].to_vec()
        }))
    }

    /// `ψ` as a map of free modules.
    pub fn map(&self, closure: &AdditiveClosure, x: usize) -> ModuleMap {
        let base = closure.base();
        let free = free_module(base, &self.source);
        let tgt = closure.free(x);
        let mut comps: Vec<Matrix> = (0..base.num_objects())
            .map(|c| Matrix::zeros(base.field(), tgt.dim(c), free.dim(c)))
            .collect();
        for (l, (&c, col)) in self.source.iter().zip(&self.columns).enumerate() {
            let y = crate::modules::yoneda_map(base, &tgt, c, col);
            let off: Vec<usize> = (0..base.num_objects())
                .map(|d| self.source[..l].iter().map(|&s| base.hom_dim(d, s)).sum())
                .collect();
            for (d, m) in y.comps.iter().enumerate() {
                comps[d].paste(0, off[d], m);
            }
        }
        ModuleMap { comps }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::catalog;
    use crate::modules::{hom_dim, representable};

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn additive_closure_of_a_point() {
        let pt = catalog("pt(2)").unwrap();
        let c = additive_closure(&pt, 2, &l()).unwrap();
        assert!(c.category().validate().is_valid());
        let x = c.index_of(&[0, 0]).unwrap();
        assert_eq!(c.category().hom_dim(x, x), 4);
        let one = c.index_of(&[0]).unwrap();
        assert_eq!(c.category().hom_dim(x, one), 2);
        // biproduct identities
        let hat = c.category();
        let mut sum = hat.zero(x, x);
        for i in 0..2 {
            let (inj, proj) = (c.injection(x, i), c.projection(x, i));
            assert_eq!(hat.compose(&proj, &inj), hat.identity(one));
            sum = hat.add(&sum, &hat.compose(&inj, &proj));
        }
        assert_eq!(sum, hat.identity(x));
    }

    #[test]
    fn singleton_embedding_is_the_base() {
        let a = catalog("a2cat(2)").unwrap();
        let c = additive_closure(&a, 2, &l()).unwrap();
        assert!(c.category().validate().is_valid());
        assert_eq!(c.category().full_subcategory(&[1, 2]), a);
    }

    #[test]
    fn idempotents_split() {
        let mat2 = catalog("mat2(2)").unwrap();
        let comp = idempotent_completion(&mat2, 1, &l()).unwrap();
        let cat = comp.category();
        assert!(cat.validate().is_valid());
        // 0, the identity and six rank-one idempotents
        assert_eq!(cat.num_objects(), 8);
        assert!((0..cat.num_objects()).any(|s| cat.hom_dim(s, s) == 1));
        for (s, r) in comp.idempotents().iter().enumerate().skip(1) {
            let hat = comp.closure().category();
            let x = r.src;
            let rest = hat.sub(&hat.identity(x), r);
            let t = comp.find(&rest).unwrap();
            let full = comp.find(&hat.identity(x)).unwrap();
            let d = |u: usize, v: usize| cat.hom_dim(u, v);
            assert_eq!(d(s, s) + d(t, t) + d(s, t) + d(t, s), d(full, full));
        }
    }

    #[test]
    fn oplus_generators() {
        let g = find_oplus_generator(&catalog("pt(2)").unwrap(), 3).unwrap();
        assert_eq!(g.tuple, vec![0]);
        let g = find_oplus_generator(&catalog("a2cat(2)").unwrap(), 3).unwrap();
        assert_eq!(g.tuple, vec![0, 1]);
    }

    #[test]
    fn pseudo_kernels() {
        let a = catalog("a2cat(2)").unwrap();
        let c = additive_closure(&a, 2, &l()).unwrap();
        let hat = c.category();
        let (one, two) = (c.singleton(0), c.singleton(1));
        let pk = pseudo_kernel(&c, &hat.identity(two));
        assert!(pk.source.is_empty());
        let pk = pseudo_kernel(&c, &hat.zero(two, one));
        assert_eq!(pk.source, vec![1]);
        assert_eq!(pk.as_morphism(&c, two).unwrap(), hat.identity(two));
        let alpha = hat.basis_morphism(one, two, 0);
        let pk = pseudo_kernel(&c, &alpha);
        assert!(pk.source.is_empty() && pk.kernel.is_zero());
    }

    #[test]
    fn induction_preserves_homs() {
        let a = catalog("a2cat(2)").unwrap();
        let c = additive_closure(&a, 2, &l()).unwrap();
        let ms: Vec<FinModule> = (0..2).map(|x| representable(&a, x)).collect();
        for m in &ms {
            let mh = c.induce(m).unwrap();
            assert_eq!(&c.restrict(&mh).unwrap(), m);
            for n in &ms {
                let nh = c.induce(n).unwrap();
                assert_eq!(hom_dim(&a, m, n), hom_dim(c.category(), &mh, &nh));
            }
        }
    }
}
