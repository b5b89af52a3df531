//! The recollement of `Mod A` by `Mod A/I` and `Mod C_E` for a trace ideal
//! `I = Σ_{ε∈E} AεA`, and its finite shadow checks.

use crate::completion::{additive_closure, corner_category, AdditiveClosure, Corner};
use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::fincat::{FinCat, Morphism};
use crate::ideals::{is_trace_of_projectives, quotient_category, Ideal, TraceWitness};
use crate::limits::Limits;
use crate::modules::{
    all_submodules, annihilator, enumerate_modules, extend_to_quotient, hom_dim, restrict_along_quotient, FinModule,
    Submodule,
};
use crate::torsion::{CensusLattice, ClassFingerprint};

use super::TtfTriple;

#[derive(Debug, Clone)]
pub struct RecollementData {
    pub ideal: Ideal,
    pub witness: TraceWitness,
    pub quotient: FinCat,
    pub closure: AdditiveClosure,
    pub corner: Corner,
}

/// The corner category of `Â` on the idempotents of a witness.
pub fn corner_of_witness(closure: &AdditiveClosure, witness: &TraceWitness) -> Result<Corner> {
    let hat = closure.category();
    let mut idems = Vec::new();
    for (t, e) in &witness.idempotents {
        let x = closure
            .index_of(t)
            .ok_or_else(|| Error::UnknownObject(format!("tuple {t:?} outside the closure")))?;
        idems.push(Morphism::new(x, x, e.coords.clone()));
    }
    let names = idems.iter().enumerate().map(|(i, e)| format!("{}#{i}", hat.object_name(e.src))).collect();
    corner_category(hat, &idems, names)
}

pub fn recollement_data(cat: &FinCat, ideal: &Ideal, bound: usize, limits: &Limits) -> Result<RecollementData> {
    let witness = is_trace_of_projectives(cat, ideal, bound, limits)?.ok_or_else(|| Error::NoWitness {
        bound,
        reason: "the ideal is not the trace of finitely generated projectives within this bound, \
                 so no recollement by module categories is produced"
            .into(),
    })?;
    let closure = additive_closure(cat, bound, limits)?;
    let corner = corner_of_witness(&closure, &witness)?;
    let quotient = quotient_category(cat, ideal)?;
    Ok(RecollementData { ideal: ideal.clone(), witness, quotient, closure, corner })
}

fn image(m: &crate::exactla::Matrix) -> Subspace {
    Subspace::row_space(&m.transpose())
}

impl RecollementData {
    /// `i_*`: restriction along `A → A/I`.
    pub fn i_lower_star(&self, cat: &FinCat, n: &FinModule) -> Result<FinModule> {
        restrict_along_quotient(cat, &self.ideal, &self.quotient, n)
    }

    /// `i^*(M) = M/MI`.
    pub fn i_upper_star(&self, cat: &FinCat, m: &FinModule) -> Result<FinModule> {
        extend_to_quotient(cat, &self.ideal, &self.quotient, m)
    }

    /// `i^!(M)`: the largest submodule of `M` killed by `I`.
    pub fn i_upper_shriek(&self, cat: &FinCat, m: &FinModule) -> Result<FinModule> {
        let (s, _) = m.submodule_module(cat, &annihilator(cat, m, &self.ideal));
        FinModule::from_fn(&self.quotient, s.dims().to_vec(), |a, b, i| s.act(a, b, &self.ideal.lift(a, b, i)))
    }

    /// `(j^* M)(ε) = Im M̂(ε)`, with `C_E` acting by restriction.
    pub fn j_upper_star(&self, m: &FinModule) -> Result<FinModule> {
        let idems = self.corner.idempotents();
        let images: Vec<Subspace> = idems.iter().map(|e| image(&self.closure.induced_matrix(m, e))).collect();
        let corner = self.corner.category();
        FinModule::from_fn(corner, images.iter().map(Subspace::dim).collect(), |s, t, i| {
            let b = self.corner.underlying(&corner.basis_morphism(s, t, i));
            let act = self.closure.induced_matrix(m, &b);
            let cols: Vec<Vec<u32>> = images[t]
                .basis_vectors()
                .iter()
                .map(|w| images[s].coordinates(&act.apply(w)).expect("M̂(β) lands in Im M̂(ε_s)"))
                .collect();
            crate::exactla::Matrix::from_columns(m.field(), images[s].dim(), &cols)
        })
    }

    /// `Ŝ(x) ≤ M̂(x)` for a submodule `S ≤ M` and a tuple `x`.
    fn induced_sub(&self, m: &FinModule, s: &Submodule, x: usize) -> Subspace {
        let tuple = self.closure.tuple(x);
        let total: usize = tuple.iter().map(|&a| m.dim(a)).sum();
        let mut vecs = Vec::new();
        let mut off = 0;
        for &a in tuple {
            for v in s.comps[a].basis_vectors() {
                let mut w = vec![0; total];
                w[off..off + v.len()].copy_from_slice(&v);
                vecs.push(w);
            }
            off += m.dim(a);
        }
        Subspace::span(m.field(), total, &vecs).expect("lengths")
    }

    /// Exactness of `j^*` on `0 → S → M → M/S → 0` at every `ε`.
    fn j_exact_on(&self, cat: &FinCat, m: &FinModule, s: &Submodule) -> bool {
        let (q, _) = m.quotient(cat, s);
        self.corner.idempotents().iter().all(|e| {
            let p = self.closure.induced_matrix(m, e);
            let im = image(&p);
            let sx = self.induced_sub(m, s, e.src);
            let ker_pi = im.intersect(&sx).expect("ambient");
            let im_s = sx.image_under(&p).expect("shapes");
            let q_rank = self.closure.induced_matrix(&q, e).rank();
            ker_pi == im_s && q_rank == im.dim() - ker_pi.dim()
        })
    }

    /// Runs every shadow check on the census.
    pub fn check(&self, cat: &FinCat, triple: &TtfTriple, lat: &CensusLattice, limits: &Limits) -> Result<RecollementReport> {
        let mods = &lat.census.modules;
        let quot_census = enumerate_modules(&self.quotient, lat.bound, limits)?;
        let mut rep = RecollementReport::default();

        let mut j_star = Vec::with_capacity(mods.len());
        for m in mods {
            let j = self.j_upper_star(m)?;
            j.check(self.corner.category())?;
            j_star.push(j);
        }
        rep.ker_j_is_t = mods.iter().zip(&j_star).all(|(m, j)| j.is_zero() == triple.in_t(cat, m));

        let projectives: Vec<FinModule> = self.corner.idempotents().iter().map(|e| self.closure.projective(e)).collect();
        rep.yoneda = mods.iter().zip(&j_star).all(|(m, j)| {
            projectives.iter().enumerate().all(|(k, p)| hom_dim(cat, p, m) == j.dim(k))
        });

        let mut ok = true;
        let mut i_lower = Vec::with_capacity(quot_census.len());
        for n in &quot_census.modules {
            let x = self.i_lower_star(cat, n)?;
            x.check(cat)?;
            i_lower.push(x);
        }
        for m in mods {
            let up = self.i_upper_star(cat, m)?;
            let sh = self.i_upper_shriek(cat, m)?;
            up.check(&self.quotient)?;
            sh.check(&self.quotient)?;
            for (n, inn) in quot_census.modules.iter().zip(&i_lower) {
                rep.pairs_checked += 1;
                ok &= hom_dim(&self.quotient, &up, n) == hom_dim(cat, m, inn);
                ok &= hom_dim(cat, inn, m) == hom_dim(&self.quotient, n, &sh);
            }
        }
        rep.adjunctions = ok;

        let mut exact = true;
        for m in mods {
            for s in all_submodules(cat, m, limits)? {
                rep.sequences_checked += 1;
                exact &= self.j_exact_on(cat, m, &s);
            }
        }
        rep.j_exact = exact;

        let ker_i_star = lat.class_of(|m| Ok(self.i_upper_star(cat, m)?.is_zero()))?;
        let ker_i_shriek = lat.class_of(|m| Ok(self.i_upper_shriek(cat, m)?.is_zero()))?;
        let mut im = vec![false; lat.len()];
        for x in &i_lower {
            if let Some(k) = lat.census.locate(cat, x, limits)? {
                im[k] = true;
            }
        }
        rep.triple_matches = ker_i_star == triple.c_class(cat, lat)
            && ClassFingerprint(im) == triple.t_class(cat, lat)
            && ker_i_shriek == triple.f_class(cat, lat);
        Ok(rep)
    }
}

#[derive(Debug, Clone, Default)]
pub struct RecollementReport {
    /// `Ker j^* = T` on the census.
    pub ker_j_is_t: bool,
    /// `dim Hom(εA, M) = dim (j^*M)(ε)`.
    pub yoneda: bool,
    /// `i^* ⊣ i_* ⊣ i^!` as hom-dimension identities.
    pub adjunctions: bool,
    /// `j^*` is exact on every census short exact sequence `0 → S → M → M/S → 0`.
    pub j_exact: bool,
    /// `(Ker i^*, Im i_*, Ker i^!)` reproduces `(C, T, F)` on the census.
    pub triple_matches: bool,
    pub pairs_checked: usize,
    pub sequences_checked: usize,
}

impl RecollementReport {
    pub fn passes(&self) -> bool {
        self.ker_j_is_t && self.yoneda && self.adjunctions && self.j_exact && self.triple_matches
    }
}
