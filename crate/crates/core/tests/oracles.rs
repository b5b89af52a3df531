//! Brute-force oracles, written without the engine's search code, for the
//! counts the rest of the suite relies on.

use ringoid::center::compute_center;
use ringoid::exactla::{all_vectors, enumerate_subspaces, Subspace};
use ringoid::fincat::{catalog, FinCat, Morphism};
use ringoid::ideals::{enumerate_ideals, is_idempotent};
use ringoid::modules::enumerate_modules;
use ringoid::torsion::{enumerate_topologies, Topology};
use ringoid::Limits;

fn l() -> Limits {
    Limits::default()
}

fn elements(cat: &FinCat, a: usize, b: usize) -> Vec<Morphism> {
    all_vectors(cat.field(), cat.hom_dim(a, b)).map(|v| Morphism::new(a, b, v)).collect()
}

fn span_of(cat: &FinCat, a: usize, b: usize, v: &[Vec<u32>]) -> Subspace {
    Subspace::span(cat.field(), cat.hom_dim(a, b), v).unwrap()
}

/// Every choice of one subspace per hom-space `(a, b)`, in row-major order.
fn all_choices(cat: &FinCat, cells: &[(usize, usize)]) -> Vec<Vec<Subspace>> {
    let mut out: Vec<Vec<Subspace>> = vec![Vec::new()];
    for &(a, b) in cells {
        let subs = enumerate_subspaces(cat.field(), cat.hom_dim(a, b), &l()).unwrap();
        out = out.iter().flat_map(|pre| subs.iter().map(move |s| [pre.clone(), vec![s.clone()]].concat())).collect();
    }
    out
}

/// Ideals as subspace families closed under composition with every
/// element on either side.
fn oracle_ideals(cat: &FinCat) -> Vec<Vec<Subspace>> {
    let n = cat.num_objects();
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    all_choices(cat, &cells)
        .into_iter()
        .filter(|fam| {
            cells.iter().enumerate().all(|(k, &(a, b))| {
                fam[k].basis_vectors().iter().all(|v| {
                    let x = Morphism::new(a, b, v.clone());
                    (0..n).all(|c| {
                        elements(cat, b, c).iter().all(|g| fam[a * n + c].contains(&cat.compose(g, &x).coords).unwrap())
                            && elements(cat, c, a).iter().all(|g| fam[c * n + b].contains(&cat.compose(&x, g).coords).unwrap())
                    })
                })
            })
        })
        .collect()
}

#[test]
fn ideal_counts_match_brute_force() {
    for (name, k, idem) in [("pt(2)", 2, 2), ("dual(2)", 3, 2), ("a2cat(2)", 5, 4), ("prod(2)", 4, 4), ("mat2(2)", 2, 2), ("a2(2)", 5, 4)] {
        let c = catalog(name).unwrap();
        let oracle = oracle_ideals(&c);
        let engine = enumerate_ideals(&c, &l()).unwrap();
        assert_eq!(oracle.len(), k, "{name}");
        assert_eq!(engine.len(), k, "{name}");
        let n = c.num_objects();
        for i in &engine {
            let fam: Vec<Subspace> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| i.at(a, b).clone()).collect();
            assert!(oracle.contains(&fam), "{name}");
        }
        assert_eq!(engine.iter().filter(|i| is_idempotent(&c, i)).count(), idem, "{name}");
    }
}

/// Submodules of `H_a` as families `R(b) ≤ A(b, a)` closed under
/// precomposition.
fn oracle_submodules(cat: &FinCat, a: usize) -> Vec<Vec<Subspace>> {
    let n = cat.num_objects();
    let cells: Vec<(usize, usize)> = (0..n).map(|b| (b, a)).collect();
    all_choices(cat, &cells)
        .into_iter()
        .filter(|fam| {
            (0..n).all(|b| {
                fam[b].basis_vectors().iter().all(|v| {
                    let x = Morphism::new(b, a, v.clone());
                    (0..n).all(|b2| elements(cat, b2, b).iter().all(|u| fam[b2].contains(&cat.compose(&x, u).coords).unwrap()))
                })
            })
        })
        .collect()
}

/// `r^{-1}R` for `r: a' → a`, by testing every element.
fn pullback(cat: &FinCat, r: &Morphism, sub: &[Subspace]) -> Vec<Subspace> {
    (0..cat.num_objects())
        .map(|b| {
            let vs: Vec<Vec<u32>> = elements(cat, b, r.src)
                .into_iter()
                .filter(|u| sub[b].contains(&cat.compose(r, u).coords).unwrap())
                .map(|u| u.coords)
                .collect();
            span_of(cat, b, r.src, &vs)
        })
        .collect()
}

fn is_topology(cat: &FinCat, subs: &[Vec<Vec<Subspace>>], g: &[Vec<usize>]) -> bool {
    let n = cat.num_objects();
    let member = |a: usize, s: &Vec<Subspace>| g[a].iter().any(|&k| &subs[a][k] == s);
    let full = |a: usize| -> Vec<Subspace> { (0..n).map(|b| Subspace::full(cat.field(), cat.hom_dim(b, a))).collect() };
    let id = (0..n).all(|a| member(a, &full(a)));
    let pb = (0..n).all(|a| {
        g[a].iter().all(|&k| (0..n).all(|a2| elements(cat, a2, a).iter().all(|r| member(a2, &pullback(cat, r, &subs[a][k])))))
    });
    let glue = (0..n).all(|a| {
        subs[a].iter().all(|r| {
            member(a, r)
                || !g[a].iter().any(|&k| {
                    (0..n).all(|a2| {
                        let s = &subs[a][k][a2];
                        all_vectors(cat.field(), s.dim()).all(|c| {
                            let mut v = vec![0; cat.hom_dim(a2, a)];
                            for (x, b) in c.iter().zip(s.basis_vectors()) {
                                cat.field().axpy(&mut v, *x, &b);
                            }
                            member(a2, &pullback(cat, &Morphism::new(a2, a, v), r))
                        })
                    })
                })
        })
    });
    id && pb && glue
}

/// Every family of submodules per object, filtered by the axioms.
fn oracle_topologies(cat: &FinCat) -> usize {
    let n = cat.num_objects();
    let subs: Vec<Vec<Vec<Subspace>>> = (0..n).map(|a| oracle_submodules(cat, a)).collect();
    let masks: Vec<usize> = subs.iter().map(|s| 1usize << s.len()).collect();
    let total: usize = masks.iter().product();
    (0..total)
        .filter(|&code| {
            let mut c = code;
            let g: Vec<Vec<usize>> = (0..n)
                .map(|a| {
                    let m = c % masks[a];
                    c /= masks[a];
                    (0..subs[a].len()).filter(|k| m >> k & 1 == 1).collect()
                })
                .collect();
            is_topology(cat, &subs, &g)
        })
        .count()
}

#[test]
fn topology_counts_match_brute_force() {
    for (name, k) in [("pt(2)", 2), ("pt(3)", 2), ("dual(2)", 2), ("a2cat(2)", 4), ("prod(2)", 4)] {
        let c = catalog(name).unwrap();
        assert_eq!(oracle_topologies(&c), k, "{name}");
        assert_eq!(enumerate_topologies(&c, &l()).unwrap().len(), k, "{name}");
    }
    let c = catalog("a2cat(2)").unwrap();
    assert!(enumerate_topologies(&c, &l()).unwrap().contains(&Topology::maximal_only(&c)));
}

/// `dim Z(A)` from the number of natural endotransformations.
fn oracle_center_dim(cat: &FinCat) -> usize {
    let n = cat.num_objects();
    let mut tuples: Vec<Vec<Morphism>> = vec![Vec::new()];
    for a in 0..n {
        tuples = tuples.iter().flat_map(|pre| elements(cat, a, a).into_iter().map(move |e| [pre.clone(), vec![e]].concat())).collect();
    }
    let count = tuples
        .iter()
        .filter(|eps| cat.basis_morphisms().all(|u| cat.compose(&eps[u.tgt], &u) == cat.compose(&u, &eps[u.src])))
        .count();
    let p = cat.p() as usize;
    (0..).find(|&d| p.pow(d) == count).unwrap() as usize
}

#[test]
fn center_dims_match_brute_force() {
    for (name, d) in [("pt(2)", 1), ("dual(2)", 2), ("a2cat(2)", 1), ("prod(2)", 2), ("mat2(2)", 1), ("a2(3)", 1)] {
        let c = catalog(name).unwrap();
        assert_eq!(oracle_center_dim(&c), d, "{name}");
        assert_eq!(compute_center(&c).dim(), d, "{name}");
    }
}

/// Number of multisets of indecomposables with total dimension `≤ d`.
fn krull_schmidt_count(weights: &[usize], d: usize) -> usize {
    match weights.split_first() {
        None => 1,
        Some((&w, rest)) => (0..=d / w).map(|k| krull_schmidt_count(rest, d - k * w)).sum(),
    }
}

#[test]
fn census_sizes_match_indecomposable_counts() {
    // Dimensions of the indecomposables, known by hand for each category.
    for (name, weights) in [
        ("pt(2)", vec![1]),
        ("dual(2)", vec![1, 2]),
        ("a2cat(2)", vec![1, 1, 2]),
        ("prod(2)", vec![1, 1]),
        ("mat2(2)", vec![2]),
        ("a2(3)", vec![1, 1, 2]),
    ] {
        let c = catalog(name).unwrap();
        for d in 0..=4 {
            assert_eq!(enumerate_modules(&c, d, &l()).unwrap().len(), krull_schmidt_count(&weights, d), "{name} D={d}");
        }
    }
}
