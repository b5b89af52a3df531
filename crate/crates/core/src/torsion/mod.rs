//! Linear Grothendieck topologies, hereditary torsion classes, and the maps
//! between them.
//!
//! A topology is stored as one sorted family `G_a` of submodules of each
//! representable `H_a`.

mod closure;

pub use closure::{census_lattice, CensusLattice, ClassFingerprint};

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::fincat::{FinCat, Morphism};
use crate::ideals::Ideal;
use crate::limits::Limits;
use crate::modules::{all_submodules, annihilator, representable, yoneda_map, FinModule, Submodule};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Topology {
    /// `families[a]` is `G_a`, sorted.
    pub families: Vec<Vec<Submodule>>,
}

impl Topology {
    pub fn new(mut families: Vec<Vec<Submodule>>) -> Self {
        for f in &mut families {
            f.sort();
            f.dedup();
        }
        Topology { families }
    }

    pub fn contains(&self, a: usize, r: &Submodule) -> bool {
        self.families[a].binary_search(r).is_ok()
    }

    /// `G_a = {H_a}` for every `a`.
    pub fn maximal_only(cat: &FinCat) -> Self {
        Topology::new((0..cat.num_objects()).map(|a| vec![representable(cat, a).full()]).collect())
    }

    /// `G_a` = every submodule of `H_a`.
    pub fn full(cat: &FinCat, limits: &Limits) -> Result<Self> {
        let fams = (0..cat.num_objects())
            .map(|a| all_submodules(cat, &representable(cat, a), limits))
            .collect::<Result<Vec<_>>>()?;
        Ok(Topology::new(fams))
    }

    /// Sizes of the families.
    pub fn sizes(&self) -> Vec<usize> {
        self.families.iter().map(Vec::len).collect()
    }
}

/// `r^{-1}R = {s : r ∘ s ∈ R}` for `r: a' → a` and `R ≤ H_a`.
pub fn pullback(cat: &FinCat, r: &Morphism, sub: &Submodule) -> Submodule {
    Submodule {
        comps: (0..cat.num_objects())
            .map(|b| sub.comps[b].preimage_under(&cat.post_matrix(b, r)).expect("shapes"))
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyViolation {
    Identity { object: usize },
    Pullback { object: usize, member: usize, along: Morphism },
    Glue { object: usize, submodule: Submodule, witness: usize },
}

impl fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyViolation::Identity { object } => write!(f, "(Id) H_{object} missing from its family"),
            TopologyViolation::Pullback { object, member, along } => write!(
                f,
                "(Pb) member {member} of G_{object} pulled back along {:?}: {} -> {} leaves G_{}",
                along.coords, along.src, along.tgt, along.src
            ),
            TopologyViolation::Glue { object, submodule, witness } => write!(
                f,
                "(Glue) submodule of dims {:?} of H_{object} is glued from member {witness} but missing",
                submodule.dims()
            ),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct TopologyReport {
    pub violations: Vec<TopologyViolation>,
}

impl TopologyReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn hom_elements(cat: &FinCat, a: usize, b: usize, limits: &Limits) -> Result<Vec<Morphism>> {
    Ok(Subspace::full(cat.field(), cat.hom_dim(a, b))
        .elements(limits)?
        .into_iter()
        .map(|v| Morphism::new(a, b, v))
        .collect())
}

/// Checks (Id), (Pb) along every element of every hom-space, and (Glue)
/// against every submodule of every `H_a`.
pub fn check_topology(cat: &FinCat, g: &Topology, limits: &Limits) -> Result<TopologyReport> {
    let n = cat.num_objects();
    let mut violations = Vec::new();
    let reps: Vec<FinModule> = (0..n).map(|a| representable(cat, a)).collect();
    for a in 0..n {
        if !g.contains(a, &reps[a].full()) {
            violations.push(TopologyViolation::Identity { object: a });
        }
    }
    for a in 0..n {
        for (k, r) in g.families[a].iter().enumerate() {
            for a2 in 0..n {
                for along in hom_elements(cat, a2, a, limits)? {
                    if !g.contains(a2, &pullback(cat, &along, r)) {
                        violations.push(TopologyViolation::Pullback { object: a, member: k, along });
                    }
                }
            }
        }
    }
    for a in 0..n {
        for sub in all_submodules(cat, &reps[a], limits)? {
            if g.contains(a, &sub) {
                continue;
            }
            for (k, s) in g.families[a].iter().enumerate() {
                if glues(cat, g, a, s, &sub, limits)? {
                    violations.push(TopologyViolation::Glue { object: a, submodule: sub.clone(), witness: k });
                    break;
                }
            }
        }
    }
    Ok(TopologyReport { violations })
}

/// Does every `r ∈ S(a')` satisfy `r^{-1}R ∈ G_{a'}`? Here `S, R ≤ H_a`.
fn glues(cat: &FinCat, g: &Topology, a: usize, s: &Submodule, r: &Submodule, limits: &Limits) -> Result<bool> {
    for a2 in 0..cat.num_objects() {
        for v in s.comps[a2].elements(limits)? {
            if !g.contains(a2, &pullback(cat, &Morphism::new(a2, a, v), r)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The kernel of `φ_m: H_a → M`, `r ↦ M(r) m`.
pub fn element_kernel(cat: &FinCat, m: &FinModule, a: usize, elem: &[u32]) -> Submodule {
    yoneda_map(cat, m, a, elem).kernel()
}

/// `t(M)(a) = {m : ker φ_m ∈ G_a}`.
pub fn torsion_radical(cat: &FinCat, g: &Topology, m: &FinModule, limits: &Limits) -> Result<Submodule> {
    let mut comps = Vec::with_capacity(cat.num_objects());
    for a in 0..cat.num_objects() {
        let good: Vec<Vec<u32>> = Subspace::full(m.field(), m.dim(a))
            .elements(limits)?
            .into_iter()
            .filter(|v| g.contains(a, &element_kernel(cat, m, a, v)))
            .collect();
        comps.push(Subspace::span(m.field(), m.dim(a), &good)?);
    }
    Ok(Submodule { comps })
}

/// `M ∈ T^G` iff `ker φ_m ∈ G_a` for every element `m ∈ M(a)`.
pub fn torsion_membership(cat: &FinCat, g: &Topology, m: &FinModule, limits: &Limits) -> Result<bool> {
    for a in 0..cat.num_objects() {
        for v in Subspace::full(m.field(), m.dim(a)).elements(limits)? {
            if !g.contains(a, &element_kernel(cat, m, a, &v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A membership predicate for a hereditary torsion class, with its origin.
pub enum TorsionOracle<'a> {
    FromTopology(&'a Topology),
    /// Census members of a closed class; modules outside the census bound
    /// are refused.
    Closure { lattice: &'a CensusLattice, class: &'a ClassFingerprint },
    /// Modules killed by an ideal.
    FromIdeal(&'a Ideal),
}

impl TorsionOracle<'_> {
    pub fn contains(&self, cat: &FinCat, m: &FinModule, limits: &Limits) -> Result<bool> {
        match self {
            TorsionOracle::FromTopology(g) => torsion_membership(cat, g, m, limits),
            TorsionOracle::Closure { lattice, class } => match lattice.census.locate(cat, m, limits)? {
                Some(i) => Ok(class.contains(i)),
                None => Err(Error::NoWitness {
                    bound: lattice.bound,
                    reason: format!("module of dimension {} lies outside the census", m.total_dim()),
                }),
            },
            TorsionOracle::FromIdeal(i) => Ok(annihilator(cat, m, i) == m.full()),
        }
    }
}

/// `G^T_a = {R ≤ H_a : H_a/R ∈ T}`.
pub fn topology_from_class(cat: &FinCat, oracle: &TorsionOracle<'_>, limits: &Limits) -> Result<Topology> {
    let mut fams = Vec::with_capacity(cat.num_objects());
    for a in 0..cat.num_objects() {
        let h = representable(cat, a);
        let mut fam = Vec::new();
        for r in all_submodules(cat, &h, limits)? {
            let (q, _) = h.quotient(cat, &r);
            if oracle.contains(cat, &q, limits)? {
                fam.push(r);
            }
        }
        fams.push(fam);
    }
    Ok(Topology::new(fams))
}

/// Every topology. A valid `G_a` is up-closed and closed under finite
/// intersections, so it is the principal filter of its smallest member;
/// candidates are products of principal filters, kept when (Pb) and (Glue)
/// hold.
pub fn enumerate_topologies(cat: &FinCat, limits: &Limits) -> Result<Vec<Topology>> {
    let n = cat.num_objects();
    let subs: Vec<Vec<Submodule>> = (0..n)
        .map(|a| all_submodules(cat, &representable(cat, a), limits))
        .collect::<Result<_>>()?;
    let filters: Vec<Vec<Vec<Submodule>>> = subs
        .iter()
        .map(|ss| ss.iter().map(|r| ss.iter().filter(|x| x.contains(r)).cloned().collect()).collect())
        .collect();
    let count: u128 = filters.iter().map(|f| f.len() as u128).product();
    limits.check_search("topology candidates", count)?;
    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let g = Topology::new((0..n).map(|a| filters[a][choice[a]].clone()).collect());
        if check_topology(cat, &g, limits)?.is_valid() {
            out.push(g);
        }
        let mut k = 0;
        loop {
            if k == n {
                out.sort_by(|x, y| (x.sizes(), x).cmp(&(y.sizes(), y)));
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < filters[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// `Ψ(Φ(G)) = G`, bit-exact.
pub fn gabriel_roundtrip(cat: &FinCat, g: &Topology, limits: &Limits) -> Result<bool> {
    Ok(&topology_from_class(cat, &TorsionOracle::FromTopology(g), limits)? == g)
}

/// Every member of `G_a` contains a finitely generated member. In finite
/// dimension every submodule is finitely generated, so this holds for any
/// topology; the check is carried out literally anyway.
pub fn has_fg_basis(cat: &FinCat, g: &Topology) -> bool {
    g.families.iter().enumerate().all(|(a, fam)| {
        let h = representable(cat, a);
        fam.iter().all(|r| {
            let gens: Vec<(usize, Vec<u32>)> = (0..cat.num_objects())
                .flat_map(|b| r.comps[b].basis_vectors().into_iter().map(move |v| (b, v)))
                .collect();
            &h.generated(cat, &gens) == r
        })
    })
}

/// Topologies against hereditary torsion classes on a census.
#[derive(Debug, Clone)]
pub struct GabrielCensus {
    pub topologies: usize,
    pub roundtrips: Vec<bool>,
    /// Membership fingerprint of `T^G` per topology.
    pub torsion: Vec<ClassFingerprint>,
    /// Hereditary closure of the seeds `H_a/R`, `R ∈ G_a`, per topology.
    pub closures: Vec<ClassFingerprint>,
    /// Pairs of topologies whose torsion fingerprints coincide.
    pub collisions: Vec<(usize, usize)>,
}

fn distinct(v: &[ClassFingerprint]) -> usize {
    let mut w = v.to_vec();
    w.sort();
    w.dedup();
    w.len()
}

impl GabrielCensus {
    pub fn torsion_fingerprints(&self) -> usize {
        distinct(&self.torsion)
    }

    pub fn closure_fingerprints(&self) -> usize {
        distinct(&self.closures)
    }

    pub fn passes(&self) -> bool {
        self.roundtrips.iter().all(|&b| b)
            && self.collisions.is_empty()
            && self.closure_fingerprints() == self.topologies
    }
}

pub fn gabriel_census(cat: &FinCat, lat: &CensusLattice, limits: &Limits) -> Result<GabrielCensus> {
    let tops = enumerate_topologies(cat, limits)?;
    let reps: Vec<FinModule> = (0..cat.num_objects()).map(|a| representable(cat, a)).collect();
    let mut rep = GabrielCensus {
        topologies: tops.len(),
        roundtrips: Vec::new(),
        torsion: Vec::new(),
        closures: Vec::new(),
        collisions: Vec::new(),
    };
    for g in &tops {
        rep.roundtrips.push(gabriel_roundtrip(cat, g, limits)?);
        rep.torsion.push(lat.class_of(|m| torsion_membership(cat, g, m, limits))?);
        let seeds: Vec<FinModule> = g
            .families
            .iter()
            .enumerate()
            .flat_map(|(a, fam)| fam.iter().map(move |r| (a, r)))
            .map(|(a, r)| reps[a].quotient(cat, r).0)
            .collect();
        rep.closures.push(lat.hereditary_closure_of(cat, &seeds, limits)?);
    }
    for i in 0..tops.len() {
        for j in i + 1..tops.len() {
            if rep.torsion[i] == rep.torsion[j] {
                rep.collisions.push((i, j));
            }
        }
    }
    Ok(rep)
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
    fn trivial_topologies_are_valid() {
        for name in ["pt(2)", "dual(2)", "a2cat(2)", "a2(3)"] {
            let c = catalog(name).unwrap();
            for g in [Topology::maximal_only(&c), Topology::full(&c, &l()).unwrap()] {
                assert!(check_topology(&c, &g, &l()).unwrap().is_valid(), "{name}");
                assert!(gabriel_roundtrip(&c, &g, &l()).unwrap());
                assert!(has_fg_basis(&c, &g));
            }
        }
    }

    #[test]
    fn dual_without_zero_fails_glue() {
        let c = catalog("dual(2)").unwrap();
        let h = representable(&c, 0);
        let x = h.generated(&c, &[(0, vec![0, 1])]);
        let g = Topology::new(vec![vec![h.full(), x]]);
        let rep = check_topology(&c, &g, &l()).unwrap();
        assert!(rep.violations.iter().any(|v| matches!(v, TopologyViolation::Glue { .. })));
    }

    #[test]
    fn topology_counts() {
        for (name, k) in [("pt(2)", 2), ("pt(3)", 2), ("dual(2)", 2), ("a2cat(2)", 4)] {
            let c = catalog(name).unwrap();
            assert_eq!(enumerate_topologies(&c, &l()).unwrap().len(), k, "{name}");
        }
    }

    #[test]
    fn census_equality() {
        for name in ["pt(2)", "dual(2)", "a2cat(2)"] {
            let c = catalog(name).unwrap();
            let lat = census_lattice(&c, 4, &l()).unwrap();
            let r = gabriel_census(&c, &lat, &l()).unwrap();
            assert!(r.passes(), "{name} {r:?}");
            assert_eq!(r.closures, r.torsion, "{name}");
        }
    }

    #[test]
    fn radicals() {
        let c = catalog("pt(2)").unwrap();
        let h = representable(&c, 0);
        assert!(torsion_radical(&c, &Topology::maximal_only(&c), &h, &l()).unwrap().is_zero());
        let c = catalog("a2cat(2)").unwrap();
        for g in enumerate_topologies(&c, &l()).unwrap() {
            for m in enumerate_modules(&c, 3, &l()).unwrap().modules {
                let t = torsion_radical(&c, &g, &m, &l()).unwrap();
                assert!(m.is_submodule(&c, &t));
                let (tm, _) = m.submodule_module(&c, &t);
                assert!(torsion_membership(&c, &g, &tm, &l()).unwrap());
                assert_eq!(torsion_radical(&c, &g, &tm, &l()).unwrap(), tm.full());
                let (q, _) = m.quotient(&c, &t);
                assert!(torsion_radical(&c, &g, &q, &l()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn closure_of_simple_over_dual_is_everything() {
        let c = catalog("dual(2)").unwrap();
        let lat = census_lattice(&c, 4, &l()).unwrap();
        let h = representable(&c, 0);
        let (s, _) = h.quotient(&c, &h.generated(&c, &[(0, vec![0, 1])]));
        let cls = lat.hereditary_closure_of(&c, &[s], &l()).unwrap();
        let g = topology_from_class(&c, &TorsionOracle::Closure { lattice: &lat, class: &cls }, &l()).unwrap();
        assert_eq!(g, Topology::full(&c, &l()).unwrap());
    }
}
