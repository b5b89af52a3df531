//! Two-sided ideals of a [`FinCat`]: generation, products, enumeration and
//! quotient categories.

mod trace;

pub use trace::{
    idempotent_ideal, is_trace_of_projectives, subcategory_from_ideal, trace_from_subcategory, trace_ideal, TraceWitness,
};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{all_vectors_capped, Subspace};
use crate::fincat::{FinCat, Morphism};
use crate::limits::Limits;

/// One subspace `I(a,b) ≤ A(a,b)` per ordered pair of objects, closed under
/// composition on both sides.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    n: usize,
    comps: Vec<Subspace>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.dims())
    }
}

impl Ideal {
    pub fn zero(cat: &FinCat) -> Self {
        Self::from_fn(cat, |a, b| Subspace::zero(cat.field(), cat.hom_dim(a, b)))
    }

    pub fn full(cat: &FinCat) -> Self {
        Self::from_fn(cat, |a, b| Subspace::full(cat.field(), cat.hom_dim(a, b)))
    }

    fn from_fn(cat: &FinCat, mut f: impl FnMut(usize, usize) -> Subspace) -> Self {
        let n = cat.num_objects();
        let mut comps = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                comps.push(f(a, b));
            }
        }
        Ideal { n, comps }
    }

    /// Wraps per-pair subspaces (row-major in `(a,b)`), checking closure.
    pub fn from_subspaces(cat: &FinCat, comps: Vec<Subspace>) -> Result<Self> {
        let n = cat.num_objects();
        if comps.len() != n * n {
            return Err(Error::DimensionMismatch(format!("{} components for {} objects", comps.len(), n)));
        }
        for a in 0..n {
            for b in 0..n {
                if comps[a * n + b].ambient() != cat.hom_dim(a, b) {
                    return Err(Error::DimensionMismatch(format!("component ({a},{b})")));
                }
            }
        }
        let ideal = Ideal { n, comps };
        if !ideal.is_ideal(cat) {
            return Err(Error::NotAnIdeal("not closed under composition".into()));
        }
        Ok(ideal)
    }

    pub fn num_objects(&self) -> usize {
        self.n
    }

    pub fn at(&self, a: usize, b: usize) -> &Subspace {
        &self.comps[a * self.n + b]
    }

    /// `dim I(a,b)` in row-major `(a,b)` order.
    pub fn dims(&self) -> Vec<usize> {
        self.comps.iter().map(Subspace::dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.comps.iter().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Subspace::is_zero)
    }

    pub fn is_full(&self) -> bool {
        self.comps.iter().all(Subspace::is_full)
    }

    pub fn contains_morphism(&self, f: &Morphism) -> bool {
        self.at(f.src, f.tgt).contains(&f.coords).expect("ambient")
    }

    /// Image of `coords ∈ A(a,b)` in `(A/I)(a,b)`.
    pub fn project(&self, a: usize, b: usize, coords: &[u32]) -> Vec<u32> {
        self.at(a, b).quotient_map().apply(coords)
    }

    /// The representative in `A(a,b)` of the `i`-th basis vector of `(A/I)(a,b)`.
    pub fn lift(&self, a: usize, b: usize, i: usize) -> Vec<u32> {
        let s = self.at(a, b);
        let pivots = s.pivots();
        let free: Vec<usize> = (0..s.ambient()).filter(|c| !pivots.contains(c)).collect();
        let mut v = vec![0; s.ambient()];
        v[free[i]] = 1;
        v
    }

    /// Two-sided closure, checked on basis elements.
    pub fn is_ideal(&self, cat: &FinCat) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                for f in self.at(a, b).basis_vectors() {
                    for c in 0..n {
                        for k in 0..cat.hom_dim(c, a) {
                            let r = cat.basis_morphism(c, a, k);
                            if !self.at(c, b).contains(&cat.compose_coords(c, a, b, &r.coords, &f)).expect("ambient") {
                                return false;
                            }
                        }
                        for k in 0..cat.hom_dim(b, c) {
                            let l = cat.basis_morphism(b, c, k);
                            if !self.at(a, c).contains(&cat.compose_coords(a, b, c, &f, &l.coords)).expect("ambient") {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        Ideal {
            n: self.n,
            comps: self.comps.iter().zip(&other.comps).map(|(u, v)| u.sum(v).expect("ambient")).collect(),
        }
    }

    pub fn intersect(&self, other: &Ideal) -> Ideal {
        Ideal {
            n: self.n,
            comps: self.comps.iter().zip(&other.comps).map(|(u, v)| u.intersect(v).expect("ambient")).collect(),
        }
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> bool {
        self.comps.iter().zip(&other.comps).all(|(u, v)| u.contains_subspace(v).expect("ambient"))
    }
}

/// The smallest ideal containing `gens`: `I(a',b') = span{ l ∘ g ∘ r }` over
/// generators `g: a → b`, `r ∈ A(a',a)`, `l ∈ A(b,b')`.
pub fn generated_by(cat: &FinCat, gens: &[Morphism]) -> Ideal {
    let n = cat.num_objects();
    let mut vecs: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n * n];
    for g in gens {
        let (a, b) = (g.src, g.tgt);
        for a2 in 0..n {
            for i in 0..cat.hom_dim(a2, a) {
                let r = cat.basis_morphism(a2, a, i);
                let gr = cat.compose(g, &r);
                if gr.is_zero() {
                    continue;
                }
                for b2 in 0..n {
                    for j in 0..cat.hom_dim(b, b2) {
                        let l = cat.basis_morphism(b, b2, j);
                        vecs[a2 * n + b2].push(cat.compose(&l, &gr).coords);
                    }
                }
            }
        }
    }
    Ideal::from_fn(cat, |a, b| Subspace::span(cat.field(), cat.hom_dim(a, b), &vecs[a * n + b]).expect("lengths"))
}

/// `(I·J)(a,b) = span{ φ ∘ ψ : ψ ∈ J(a,c), φ ∈ I(c,b) }`.
pub fn product(cat: &FinCat, i: &Ideal, j: &Ideal) -> Ideal {
    let n = cat.num_objects();
    Ideal::from_fn(cat, |a, b| {
        let mut vecs = Vec::new();
        for c in 0..n {
            for psi in j.at(a, c).basis_vectors() {
                for phi in i.at(c, b).basis_vectors() {
                    vecs.push(cat.compose_coords(a, c, b, &psi, &phi));
                }
            }
        }
        Subspace::span(cat.field(), cat.hom_dim(a, b), &vecs).expect("lengths")
    })
}

pub fn is_idempotent(cat: &FinCat, i: &Ideal) -> bool {
    &product(cat, i, i) == i
}

/// Every ideal, as the sum-closure of the principal ideals.
///
/// Principal ideals are taken over every element of every hom-space up to
/// scalars; the result is sorted by total dimension, then canonically.
pub fn enumerate_ideals(cat: &FinCat, limits: &Limits) -> Result<Vec<Ideal>> {
    let f = cat.field();
    let n = cat.num_objects();
    let mut principal: BTreeSet<Ideal> = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            let it = all_vectors_capped(f, cat.hom_dim(a, b), "hom-space elements", limits)?;
            for v in it {
                // one representative per line
                if v.iter().find(|&&x| x != 0) != Some(&1) {
                    continue;
                }
                principal.insert(generated_by(cat, &[Morphism::new(a, b, v)]));
            }
        }
    }
    let principal: Vec<Ideal> = principal.into_iter().collect();
    let mut all: BTreeSet<Ideal> = BTreeSet::new();
    all.insert(Ideal::zero(cat));
    let mut frontier: Vec<Ideal> = vec![Ideal::zero(cat)];
    while let Some(x) = frontier.pop() {
        for p in &principal {
            let s = x.sum(p);
            if !all.contains(&s) {
                if all.len() as u64 >= limits.vectors {
                    return Err(Error::cap("ideal enumeration", all.len() as u128 + 1, limits.vectors as u128, crate::limits::CAP_ENV));
                }
                all.insert(s.clone());
                frontier.push(s);
            }
        }
    }
    let mut out: Vec<Ideal> = all.into_iter().collect();
    out.sort_by(|x, y| (x.total_dim(), x.dims(), x).cmp(&(y.total_dim(), y.dims(), y)));
    Ok(out)
}

pub fn enumerate_idempotent_ideals(cat: &FinCat, limits: &Limits) -> Result<Vec<Ideal>> {
    Ok(enumerate_ideals(cat, limits)?.into_iter().filter(|i| is_idempotent(cat, i)).collect())
}

/// `A/I`, with hom bases given by the non-pivot coordinates of each `I(a,b)`
/// (see [`Ideal::project`] and [`Ideal::lift`]).
pub fn quotient_category(cat: &FinCat, ideal: &Ideal) -> Result<FinCat> {
    let n = cat.num_objects();
    let hom: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| cat.hom_dim(a, b) - ideal.at(a, b).dim()).collect())
        .collect();
    let id: Vec<Vec<u32>> = (0..n).map(|a| ideal.project(a, a, cat.identity_coords(a))).collect();
    let q = FinCat::validated(
        cat.field(),
        cat.objects().to_vec(),
        hom.clone(),
        |a, b, c| {
            (0..hom[a][b])
                .map(|i| {
                    let x = ideal.lift(a, b, i);
                    (0..hom[b][c])
                        .map(|j| ideal.project(a, c, &cat.compose_coords(a, b, c, &x, &ideal.lift(b, c, j))))
                        .collect()
                })
                .collect()
        },
        id,
    )?;
    Ok(q)
}
