//! TTF triples from idempotent ideals, split TTFs, and recollement data.

mod recollement;

pub use recollement::{corner_of_witness, recollement_data, RecollementData, RecollementReport};

use crate::center::{center_idempotents, compute_center, ideal_of_idempotent, module_idempotent_action, CenterElement};
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, Matrix, Subspace};
use crate::fincat::FinCat;
use crate::ideals::{enumerate_idempotent_ideals, is_idempotent, Ideal};
use crate::limits::Limits;
use crate::modules::{annihilator, hom_dim, module_times_ideal, representable, FinModule, Submodule};
use crate::torsion::{CensusLattice, ClassFingerprint};

/// The TTF triple `(C, T, F)` of an idempotent ideal `I`:
/// `C = {M : MI = M}`, `T = {M : MI = 0}`, `F = {M : ann_M(I) = 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TtfTriple {
    pub ideal: Ideal,
}

pub fn ttf_from_ideal(cat: &FinCat, ideal: &Ideal) -> Result<TtfTriple> {
    if !is_idempotent(cat, ideal) {
        return Err(Error::NotIdempotent(format!("ideal with dims {:?} has I·I ≠ I", ideal.dims())));
    }
    Ok(TtfTriple { ideal: ideal.clone() })
}

impl TtfTriple {
    pub fn in_c(&self, cat: &FinCat, m: &FinModule) -> bool {
        module_times_ideal(cat, m, &self.ideal) == m.full()
    }

    pub fn in_t(&self, cat: &FinCat, m: &FinModule) -> bool {
        module_times_ideal(cat, m, &self.ideal).is_zero()
    }

    pub fn in_f(&self, cat: &FinCat, m: &FinModule) -> bool {
        annihilator(cat, m, &self.ideal).is_zero()
    }

    pub fn c_class(&self, cat: &FinCat, lat: &CensusLattice) -> ClassFingerprint {
        lat.class_of(|m| Ok(self.in_c(cat, m))).expect("infallible")
    }

    pub fn t_class(&self, cat: &FinCat, lat: &CensusLattice) -> ClassFingerprint {
        lat.class_of(|m| Ok(self.in_t(cat, m))).expect("infallible")
    }

    pub fn f_class(&self, cat: &FinCat, lat: &CensusLattice) -> ClassFingerprint {
        lat.class_of(|m| Ok(self.in_f(cat, m))).expect("infallible")
    }
}

/// `max_b dim H_b`: the census bound needed by [`ideal_from_ttf`].
pub fn test_bound(cat: &FinCat) -> usize {
    (0..cat.num_objects()).map(|b| representable(cat, b).total_dim()).max().unwrap_or(0)
}

/// `I_T(a,b) = {r : T(r) = 0 for every T ∈ T}`, with `T` ranging over the
/// members of the class of dimension at most [`test_bound`].
pub fn ideal_from_ttf(cat: &FinCat, lat: &CensusLattice, t_class: &ClassFingerprint) -> Result<Ideal> {
    let bound = test_bound(cat);
    if lat.bound < bound {
        return Err(Error::NoWitness {
            bound: lat.bound,
            reason: format!("the census must reach dimension {bound} to contain every H_b/I(-,b)"),
        });
    }
    let tests: Vec<&FinModule> = t_class
        .members()
        .into_iter()
        .map(|i| lat.module(i))
        .filter(|m| m.total_dim() <= bound)
        .collect();
    let n = cat.num_objects();
    let mut comps = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let d = cat.hom_dim(a, b);
            // Column i stacks the entries of T(r_i) over every test module T.
            let mut cols: Vec<Vec<u32>> = vec![Vec::new(); d];
            for t in &tests {
                for (i, col) in cols.iter_mut().enumerate() {
                    col.extend_from_slice(t.basis_action(a, b, i).data());
                }
            }
            let rows = cols.first().map_or(0, Vec::len);
            let m = Matrix::from_columns(cat.field(), rows, &cols);
            comps.push(if rows == 0 { Subspace::full(cat.field(), d) } else { kernel_basis(&m)? });
        }
    }
    Ideal::from_subspaces(cat, comps)
}

#[derive(Debug, Clone)]
pub struct JansReport {
    pub ideals: Vec<Ideal>,
    /// `ideal_from_ttf(ttf_from_ideal(I)) = I`, per ideal.
    pub roundtrips: Vec<bool>,
    pub t_classes: Vec<ClassFingerprint>,
    pub distinct: bool,
}

impl JansReport {
    pub fn passes(&self) -> bool {
        self.distinct && self.roundtrips.iter().all(|&b| b)
    }
}

pub fn jans_roundtrip(cat: &FinCat, lat: &CensusLattice, limits: &Limits) -> Result<JansReport> {
    let ideals = enumerate_idempotent_ideals(cat, limits)?;
    let mut roundtrips = Vec::new();
    let mut t_classes = Vec::new();
    for i in &ideals {
        let ttf = ttf_from_ideal(cat, i)?;
        let t = ttf.t_class(cat, lat);
        roundtrips.push(&ideal_from_ttf(cat, lat, &t)? == i);
        t_classes.push(t);
    }
    let mut sorted = t_classes.clone();
    sorted.sort();
    sorted.dedup();
    Ok(JansReport { distinct: sorted.len() == t_classes.len(), ideals, roundtrips, t_classes })
}

/// The radicals of `M` for a TTF triple, with the four membership checks.
#[derive(Debug, Clone)]
pub struct Radicals {
    /// `c(M) = MI`.
    pub c: Submodule,
    /// `t(M) = ann_M(I)`.
    pub t: Submodule,
    pub c_in_c: bool,
    pub m_mod_c_in_t: bool,
    pub t_in_t: bool,
    pub m_mod_t_in_f: bool,
}

impl Radicals {
    pub fn passes(&self) -> bool {
        self.c_in_c && self.m_mod_c_in_t && self.t_in_t && self.m_mod_t_in_f
    }
}

pub fn radicals(cat: &FinCat, triple: &TtfTriple, m: &FinModule) -> Radicals {
    let c = module_times_ideal(cat, m, &triple.ideal);
    let t = annihilator(cat, m, &triple.ideal);
    let (cm, _) = m.submodule_module(cat, &c);
    let (mc, _) = m.quotient(cat, &c);
    let (tm, _) = m.submodule_module(cat, &t);
    let (mt, _) = m.quotient(cat, &t);
    Radicals {
        c_in_c: triple.in_c(cat, &cm),
        m_mod_c_in_t: triple.in_t(cat, &mc),
        t_in_t: triple.in_t(cat, &tm),
        m_mod_t_in_f: triple.in_f(cat, &mt),
        c,
        t,
    }
}

/// The census shadow of the TTF axioms: `T` is closed under submodules,
/// quotients, extensions and sums, and `Hom(C, T) = 0 = Hom(T, F)`.
#[derive(Debug, Clone)]
pub struct TtfLaws {
    pub t_closed: bool,
    pub c_perp_t: bool,
    pub t_perp_f: bool,
}

impl TtfLaws {
    pub fn passes(&self) -> bool {
        self.t_closed && self.c_perp_t && self.t_perp_f
    }
}

pub fn ttf_laws(cat: &FinCat, triple: &TtfTriple, lat: &CensusLattice) -> TtfLaws {
    let (c, t, f) = (triple.c_class(cat, lat), triple.t_class(cat, lat), triple.f_class(cat, lat));
    let perp = |x: &ClassFingerprint, y: &ClassFingerprint| {
        x.members()
            .iter()
            .all(|&i| y.members().iter().all(|&j| hom_dim(cat, lat.module(i), lat.module(j)) == 0))
    };
    TtfLaws { t_closed: lat.is_hereditary_torsion(&t), c_perp_t: perp(&c, &t), t_perp_f: perp(&t, &f) }
}

/// The three split criteria, evaluated independently.
#[derive(Debug, Clone)]
pub struct SplitReport {
    /// A central idempotent `ε` with `I = I_ε`.
    pub central: Option<CenterElement>,
    /// `M = c(M) ⊕ t(M)` for every census module.
    pub decomposes: bool,
    /// `C = F` on the census.
    pub c_equals_f: bool,
    /// When `ε` exists: `M ∈ C` iff every `M(ε_a)` is invertible, and
    /// `M ∈ T` iff every `M(ε_a)` vanishes.
    pub class_formulas: bool,
}

impl SplitReport {
    pub fn is_split(&self) -> bool {
        self.central.is_some()
    }

    pub fn agree(&self) -> bool {
        self.central.is_some() == self.decomposes && self.decomposes == self.c_equals_f && self.class_formulas
    }
}

pub fn is_split(cat: &FinCat, triple: &TtfTriple, lat: &CensusLattice, limits: &Limits) -> Result<SplitReport> {
    let z = compute_center(cat);
    let central = center_idempotents(cat, &z, limits)?
        .into_iter()
        .find(|e| ideal_of_idempotent(cat, e).0 == triple.ideal);
    let mut decomposes = true;
    let mut c_equals_f = true;
    let mut class_formulas = true;
    for m in &lat.census.modules {
        let r = radicals(cat, triple, m);
        if !(r.c.intersect(&r.t).is_zero() && r.c.sum(&r.t) == m.full()) {
            decomposes = false;
        }
        if triple.in_c(cat, m) != triple.in_f(cat, m) {
            c_equals_f = false;
        }
        if let Some(e) = &central {
            let act = module_idempotent_action(cat, m, e);
            if act.all_invertible != triple.in_c(cat, m) || act.all_zero != triple.in_t(cat, m) {
                class_formulas = false;
            }
        }
    }
    Ok(SplitReport { central, decomposes, c_equals_f, class_formulas })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::catalog;
    use crate::ideals::generated_by;
    use crate::torsion::census_lattice;

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn a2cat_triples() {
        let c = catalog("a2cat(2)").unwrap();
        let lat = census_lattice(&c, 4, &l()).unwrap();
        let e1 = generated_by(&c, &[c.identity(0)]);
        let ttf = ttf_from_ideal(&c, &e1).unwrap();
        let s1 = representable(&c, 0);
        let h2 = representable(&c, 1);
        let (s2, _) = h2.quotient(&c, &h2.generated(&c, &[(0, vec![1])]));
        assert!(ttf.in_t(&c, &s2));
        assert!(!ttf.in_t(&c, &s1));
        assert_eq!(ideal_from_ttf(&c, &lat, &ttf.t_class(&c, &lat)).unwrap(), e1);
        assert!(ttf_laws(&c, &ttf, &lat).passes());
        for m in &lat.census.modules {
            assert!(radicals(&c, &ttf, m).passes());
        }
        let r = radicals(&c, &ttf, &h2);
        assert_eq!(r.c.dims(), vec![1, 0]);
        assert!(ttf_from_ideal(&c, &generated_by(&c, &[c.basis_morphism(0, 1, 0)])).is_err());
    }

    #[test]
    fn jans_counts() {
        for (name, n) in [("pt(2)", 2), ("dual(2)", 2), ("a2cat(2)", 4), ("prod(2)", 4), ("mat2(2)", 2)] {
            let c = catalog(name).unwrap();
            let lat = census_lattice(&c, 4, &l()).unwrap();
            let r = jans_roundtrip(&c, &lat, &l()).unwrap();
            assert_eq!(r.ideals.len(), n, "{name}");
            assert!(r.passes(), "{name}");
        }
    }

    #[test]
    fn split_counts() {
        for (name, n) in [("pt(2)", 2), ("dual(2)", 2), ("a2cat(2)", 2), ("prod(2)", 4), ("mat2(2)", 2)] {
            let c = catalog(name).unwrap();
            let lat = census_lattice(&c, 4, &l()).unwrap();
            let mut split = 0;
            for i in enumerate_idempotent_ideals(&c, &l()).unwrap() {
                let r = is_split(&c, &ttf_from_ideal(&c, &i).unwrap(), &lat, &l()).unwrap();
                assert!(r.agree(), "{name} {:?}", i);
                split += r.is_split() as usize;
            }
            assert_eq!(split, n, "{name}");
        }
    }
}
