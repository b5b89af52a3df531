//! The acceptance suite: eight criteria, one line each.
//!
//! Every criterion runs under a pinned wall-clock limit and prints
//! `criterion N: PASS|FAIL ...`. The test fails if any criterion does.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ringoid::center::{center_idempotents, compute_center};
use ringoid::completion::{additive_closure, idempotent_completion, list_idempotents, AdditiveClosure};
use ringoid::exactla::{image_basis, kernel_basis, Matrix, PrimeField, Subspace};
use ringoid::fincat::{catalog, catalog_names, FinCat, Morphism};
use ringoid::ideals::{
    enumerate_ideals, enumerate_idempotent_ideals, idempotent_ideal, is_idempotent, is_trace_of_projectives,
    quotient_category, trace_ideal,
};
use ringoid::modules::{all_submodules, enumerate_modules, enumerate_modules_weighted, find_iso, hom_dim, representable};
use ringoid::report::{report_census, Params};
use ringoid::torsion::{census_lattice, enumerate_topologies, gabriel_census};
use ringoid::ttf::{is_split, jans_roundtrip, recollement_data, ttf_from_ideal};
use ringoid::Limits;

/// Census bound on total module dimension.
const D: usize = 4;
/// Tuple bound for the additive closure.
const TUPLE_BOUND: usize = 2;
/// Tuple bound for the idempotent completion.
const KAROUBI_BOUND: usize = 1;

/// Wall-clock limits per criterion, in seconds.
const TIME_LIMITS: [u64; 8] = [10, 60, 10, 10, 60, 60, 10, 60];

type Outcome = Result<String, String>;

fn l() -> Limits {
    Limits::default()
}

fn cat(name: &str) -> FinCat {
    catalog(name).expect("catalog entry")
}

/// Every catalog category over F_2.
fn catalog_f2() -> Vec<String> {
    catalog_names().iter().map(|n| format!("{n}(2)")).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn jans() -> Outcome {
    let expected = [("pt(2)", 2), ("dual(2)", 2), ("a2cat(2)", 4), ("prod(2)", 4), ("mat2(2)", 2)];
    let mut seen = Vec::new();
    for name in catalog_f2() {
        let c = cat(&name);
        let lat = census_lattice(&c, D, &l()).map_err(e)?;
        let r = jans_roundtrip(&c, &lat, &l()).map_err(e)?;
        ensure(r.passes(), || format!("{name}: roundtrip {:?}, distinct {}", r.roundtrips, r.distinct))?;
        if let Some((_, k)) = expected.iter().find(|(n, _)| *n == name) {
            ensure(r.ideals.len() == *k, || format!("{name}: {} idempotent ideals, expected {k}", r.ideals.len()))?;
        }
        seen.push(format!("{name}:{}", r.ideals.len()));
    }
    Ok(seen.join(" "))
}

fn gabriel() -> Outcome {
    let expected = [("pt(2)", 2), ("pt(3)", 2), ("dual(2)", 2), ("a2cat(2)", 4)];
    let mut seen = Vec::new();
    for (name, k) in expected {
        let c = cat(name);
        let lat = census_lattice(&c, D, &l()).map_err(e)?;
        let g = gabriel_census(&c, &lat, &l()).map_err(e)?;
        ensure(g.roundtrips.iter().all(|&b| b), || format!("{name}: roundtrip failed"))?;
        ensure(g.collisions.is_empty(), || format!("{name}: fingerprint collisions {:?}", g.collisions))?;
        ensure(g.closure_fingerprints() == g.topologies, || {
            format!("{name}: {} topologies, {} closure fingerprints", g.topologies, g.closure_fingerprints())
        })?;
        ensure(g.topologies == k, || format!("{name}: {} topologies, expected {k}", g.topologies))?;
        seen.push(format!("{name}:{k}"));
    }
    Ok(seen.join(" "))
}

fn lift(closure: &AdditiveClosure, e: &Morphism) -> Morphism {
    let x = closure.singleton(e.src);
    Morphism::new(x, x, e.coords.clone())
}

fn trace_idempotency() -> Outcome {
    let mut subsets = 0usize;
    for name in catalog_f2() {
        let c = cat(&name);
        let closure = additive_closure(&c, 1, &l()).map_err(e)?;
        let idems = list_idempotents(&c, None, &l()).map_err(e)?;
        let ps: Vec<_> = idems.iter().map(|x| closure.projective(&lift(&closure, x))).collect();
        for (x, p) in idems.iter().zip(&ps) {
            let tr = trace_ideal(&c, std::slice::from_ref(p));
            ensure(tr == idempotent_ideal(&closure, &lift(&closure, x)), || {
                format!("{name}: trace of εA differs from AεA for ε = {:?}", x.coords)
            })?;
        }
        ensure(idems.len() < 16, || format!("{name}: {} idempotents", idems.len()))?;
        for mask in 0u32..1 << idems.len() {
            let chosen: Vec<_> = (0..idems.len()).filter(|k| mask >> k & 1 == 1).map(|k| ps[k].clone()).collect();
            let tr = trace_ideal(&c, &chosen);
            ensure(is_idempotent(&c, &tr), || format!("{name}: subset {mask:b} gives a non-idempotent trace"))?;
            subsets += 1;
        }
    }
    Ok(format!("{subsets} subsets"))
}

fn split() -> Outcome {
    let expected = [("prod(2)", 4), ("a2cat(2)", 2), ("dual(2)", 2)];
    let mut seen = Vec::new();
    for name in catalog_f2() {
        let c = cat(&name);
        let lat = census_lattice(&c, D, &l()).map_err(e)?;
        let mut n_split = 0;
        for i in enumerate_idempotent_ideals(&c, &l()).map_err(e)? {
            let s = is_split(&c, &ttf_from_ideal(&c, &i).map_err(e)?, &lat, &l()).map_err(e)?;
            ensure(s.agree(), || format!("{name}: split criteria disagree on {:?}", i.dims()))?;
            n_split += s.is_split() as usize;
        }
        let z = center_idempotents(&c, &compute_center(&c), &l()).map_err(e)?.len();
        ensure(n_split == z, || format!("{name}: {n_split} split TTFs, {z} central idempotents"))?;
        if let Some((_, k)) = expected.iter().find(|(n, _)| *n == name) {
            ensure(n_split == *k, || format!("{name}: {n_split} split, expected {k}"))?;
        }
        seen.push(format!("{name}:{n_split}"));
    }
    Ok(seen.join(" "))
}

fn recollement() -> Outcome {
    let mut checked = 0;
    for name in ["a2cat(2)", "prod(2)"] {
        let c = cat(name);
        let lat = census_lattice(&c, D, &l()).map_err(e)?;
        for i in enumerate_idempotent_ideals(&c, &l()).map_err(e)? {
            if is_trace_of_projectives(&c, &i, TUPLE_BOUND, &l()).map_err(e)?.is_none() {
                continue;
            }
            let data = recollement_data(&c, &i, TUPLE_BOUND, &l()).map_err(e)?;
            let r = data.check(&c, &ttf_from_ideal(&c, &i).map_err(e)?, &lat, &l()).map_err(e)?;
            ensure(r.passes(), || format!("{name} {:?}: {r:?}", i.dims()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} trace ideals"))
}

fn morita() -> Outcome {
    let c = cat("a2cat(2)");
    let closure = additive_closure(&c, TUPLE_BOUND, &l()).map_err(e)?;
    let hat = closure.category();
    let census = enumerate_modules(&c, D, &l()).map_err(e)?;
    let induced: Vec<_> = census.modules.iter().map(|m| closure.induce(m)).collect::<Result<_, _>>().map_err(e)?;
    for m in &induced {
        m.check(hat).map_err(e)?;
    }
    let mut pairs = 0;
    for (m, mh) in census.modules.iter().zip(&induced) {
        for (n, nh) in census.modules.iter().zip(&induced) {
            ensure(hom_dim(&c, m, n) == hom_dim(hat, mh, nh), || "hom dimension changed under induction".into())?;
            pairs += 1;
        }
    }
    let weights: Vec<usize> = closure.tuples().iter().map(|t| usize::from(t.len() == 1)).collect();
    let hat_census = enumerate_modules_weighted(hat, &weights, D, &l()).map_err(e)?;
    ensure(hat_census.len() == census.len(), || format!("{} Â-modules vs {} A-modules", hat_census.len(), census.len()))?;
    for x in &hat_census.modules {
        let back = closure.induce(&closure.restrict(x).map_err(e)?).map_err(e)?;
        ensure(find_iso(hat, x, &back, &l()).map_err(e)?.is_some(), || "an Â-module is not induced".into())?;
    }
    Ok(format!("{pairs} pairs, {} Â-modules hit", hat_census.len()))
}

fn center() -> Outcome {
    let expected = [("pt(2)", 1), ("prod(2)", 2), ("mat2(2)", 1)];
    let mut seen = Vec::new();
    for name in catalog_f2() {
        let c = cat(&name);
        let z = compute_center(&c).dim();
        let zh = compute_center(additive_closure(&c, TUPLE_BOUND, &l()).map_err(e)?.category()).dim();
        let zk = compute_center(idempotent_completion(&c, KAROUBI_BOUND, &l()).map_err(e)?.category()).dim();
        ensure(z == zh && zh == zk, || format!("{name}: center dims {z}, {zh}, {zk}"))?;
        if let Some((_, k)) = expected.iter().find(|(n, _)| *n == name) {
            ensure(z == *k, || format!("{name}: dim Z = {z}, expected {k}"))?;
        }
        seen.push(format!("{name}:{z}"));
    }
    Ok(seen.join(" "))
}

fn random_matrix(rng: &mut ChaCha8Rng, f: PrimeField, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows * cols).map(|_| rng.gen_range(0..f.p())).collect();
    Matrix::from_flat(f, rows, cols, data).expect("shape")
}

fn soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..500 {
        let f = PrimeField::new([2, 3, 5][rng.gen_range(0..3)]).map_err(e)?;
        let (r, c) = (rng.gen_range(0..7), rng.gen_range(0..7));
        let m = random_matrix(&mut rng, f, r, c);
        let (k, i) = (kernel_basis(&m).map_err(e)?, image_basis(&m).map_err(e)?);
        ensure(k.dim() + i.dim() == c, || format!("rank-nullity fails on {m:?}"))?;
        let n = c.max(1);
        let sub = |rng: &mut ChaCha8Rng| {
            let k = rng.gen_range(0..=n);
            Subspace::row_space(&random_matrix(rng, f, k, n))
        };
        let (u, v, w) = (sub(&mut rng), sub(&mut rng), sub(&mut rng));
        let u = u.intersect(&w).map_err(e)?;
        let left = u.sum(&v.intersect(&w).map_err(e)?).map_err(e)?;
        let right = u.sum(&v).map_err(e)?.intersect(&w).map_err(e)?;
        ensure(left == right, || "modular law fails".into())?;
    }
    let mut modules = 0;
    for name in catalog_f2() {
        let c = cat(&name);
        ensure(c.validate().is_valid(), || format!("{name} invalid"))?;
        let census = enumerate_modules(&c, D, &l()).map_err(e)?;
        ensure(census.modules == enumerate_modules(&c, D, &l()).map_err(e)?.modules, || format!("{name}: census not deterministic"))?;
        ensure(enumerate_ideals(&c, &l()).map_err(e)? == enumerate_ideals(&c, &l()).map_err(e)?, || {
            format!("{name}: ideals not deterministic")
        })?;
        ensure(enumerate_topologies(&c, &l()).map_err(e)? == enumerate_topologies(&c, &l()).map_err(e)?, || {
            format!("{name}: topologies not deterministic")
        })?;
        for m in &census.modules {
            m.check(&c).map_err(e)?;
            for a in 0..c.num_objects() {
                ensure(hom_dim(&c, &representable(&c, a), m) == m.dim(a), || format!("{name}: Yoneda fails"))?;
            }
            for s in all_submodules(&c, m, &l()).map_err(e)? {
                m.submodule_module(&c, &s).0.check(&c).map_err(e)?;
                m.quotient(&c, &s).0.check(&c).map_err(e)?;
            }
            modules += 1;
        }
        for i in enumerate_ideals(&c, &l()).map_err(e)? {
            quotient_category(&c, &i).map_err(e)?.ensure_valid().map_err(e)?;
        }
        let closure = additive_closure(&c, TUPLE_BOUND, &l()).map_err(e)?;
        closure.category().ensure_valid().map_err(e)?;
        for m in census.modules.iter().take(6) {
            closure.induce(m).map_err(e)?.check(closure.category()).map_err(e)?;
        }
        idempotent_completion(&c, KAROUBI_BOUND, &l()).map_err(e)?.category().ensure_valid().map_err(e)?;
        let p = Params::new(&c, D, TUPLE_BOUND, &l());
        ensure(report_census(&c, p).to_json() == report_census(&c, p).to_json(), || {
            format!("{name}: census report not byte-identical")
        })?;
    }
    Ok(format!("{modules} census modules"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("idempotent ideals roundtrip through TTF triples", jans),
        ("topologies roundtrip and match the torsion census", gabriel),
        ("trace ideals of projectives are idempotent", trace_idempotency),
        ("split criteria agree and count central idempotents", split),
        ("recollement shadows hold for trace ideals", recollement),
        ("induction to the additive closure is faithful", morita),
        ("center dimension survives completion", center),
        ("engine soundness", soundness),
    ];
    let mut failed = Vec::new();
    for (k, (what, run)) in criteria.iter().enumerate() {
        let limit = Duration::from_secs(TIME_LIMITS[k]);
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let verdict = match (&outcome, took <= limit) {
            (Ok(detail), true) => format!("PASS {what}: {detail}"),
            (Ok(_), false) => format!("FAIL {what}: over the time limit"),
            (Err(why), _) => format!("FAIL {what}: {why}"),
        };
        println!("criterion {}: {verdict} ({:.2}s, limit {}s)", k + 1, took.as_secs_f64(), limit.as_secs());
        if !verdict.starts_with("PASS") {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
