//! Trace ideals of projectives and the correspondence with add-closed
//! families of projectives.

use crate::completion::{additive_closure, AdditiveClosure};
use crate::error::{Error, Result};
use crate::fincat::{FinCat, Morphism};
use crate::limits::Limits;
use crate::modules::{representable, trace, FinModule};
use crate::peirce::idempotents_at;

use super::{generated_by, Ideal};

/// `tr_P(A)(a,b) = tr_P(H_b)(a)`.
pub fn trace_ideal(cat: &FinCat, ps: &[FinModule]) -> Ideal {
    let n = cat.num_objects();
    let traces: Vec<_> = (0..n).map(|b| trace(cat, ps, &representable(cat, b))).collect();
    Ideal::from_fn(cat, |a, b| traces[b].comps[a].clone())
}

/// The ideal of `A` generated by an idempotent `ε` of `Â`, i.e. by its
/// matrix entries. This is `AεA` restricted to singletons.
pub fn idempotent_ideal(closure: &AdditiveClosure, e: &Morphism) -> Ideal {
    let x = closure.tuple(e.src).len();
    let mut gens = Vec::new();
    for i in 0..x {
        for j in 0..x {
            gens.push(closure.entry(e, i, j));
        }
    }
    generated_by(closure.base(), &gens)
}

/// Idempotents of `Â` whose ideals sum to `I`.
#[derive(Debug, Clone)]
pub struct TraceWitness {
    pub bound: usize,
    /// `(tuple, ε)` pairs; `ε ∈ Â(tuple, tuple)`.
    pub idempotents: Vec<(Vec<usize>, Morphism)>,
}

/// Non-decreasing tuples of length `1..=bound`; tuples differing by a
/// permutation give isomorphic objects.
fn sorted_tuples(closure: &AdditiveClosure) -> Vec<usize> {
    (1..closure.tuples().len())
        .filter(|&x| closure.tuple(x).windows(2).all(|w| w[0] <= w[1]))
        .collect()
}

/// Searches idempotents of `Â` on tuples of length `≤ bound`, shortest
/// tuples first, for a set `E` with `Σ_{ε∈E} AεA = I`.
///
/// Returns `None` when the idempotents within the bound generate a strictly
/// smaller ideal. An endomorphism space over the vector cap is skipped; if
/// that leaves the search inconclusive the cap error is returned.
pub fn is_trace_of_projectives(cat: &FinCat, ideal: &Ideal, bound: usize, limits: &Limits) -> Result<Option<TraceWitness>> {
    let closure = additive_closure(cat, bound, limits)?;
    let hat = closure.category();
    let mut acc = Ideal::zero(cat);
    let mut chosen = Vec::new();
    let mut skipped: Option<Error> = None;
    for x in sorted_tuples(&closure) {
        if &acc == ideal {
            break;
        }
        let idems = match idempotents_at(hat, x, limits) {
            Ok(v) => v,
            Err(e @ Error::CapExceeded { .. }) => {
                skipped.get_or_insert(e);
                continue;
            }
            Err(e) => return Err(e),
        };
        for e in idems.into_iter().filter(|e| !e.is_zero()) {
            let j = idempotent_ideal(&closure, &e);
            if ideal.contains(&j) && !acc.contains(&j) {
                acc = acc.sum(&j);
                chosen.push((closure.tuple(x).to_vec(), e));
            }
        }
    }
    if &acc == ideal {
        Ok(Some(TraceWitness { bound, idempotents: chosen }))
    } else if let Some(e) = skipped {
        Err(e)
    } else {
        Ok(None)
    }
}

/// The projectives `εA` (tuple length `≤ bound`) whose trace lies in `I`,
/// one per idempotent, deduplicated by equality of modules.
pub fn subcategory_from_ideal(cat: &FinCat, ideal: &Ideal, bound: usize, limits: &Limits) -> Result<Vec<FinModule>> {
    let closure = additive_closure(cat, bound, limits)?;
    let mut out: Vec<FinModule> = Vec::new();
    for x in sorted_tuples(&closure) {
        for e in idempotents_at(closure.category(), x, limits)? {
            if e.is_zero() || !ideal.contains(&idempotent_ideal(&closure, &e)) {
                continue;
            }
            let p = closure.projective(&e);
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

pub fn trace_from_subcategory(cat: &FinCat, family: &[FinModule]) -> Ideal {
    trace_ideal(cat, family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::catalog;
    use crate::ideals::{enumerate_idempotent_ideals, is_idempotent};

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn trace_of_corner_projective_is_generated_ideal() {
        for name in ["pt(2)", "dual(2)", "a2cat(2)", "prod(2)", "mat2(2)", "a2(3)"] {
            let c = catalog(name).unwrap();
            let closure = additive_closure(&c, 1, &l()).unwrap();
            for a in 0..c.num_objects() {
                for e in idempotents_at(&c, a, &l()).unwrap() {
                    let x = closure.singleton(a);
                    let eh = Morphism::new(x, x, e.coords.clone());
                    let t = trace_ideal(&c, &[closure.projective(&eh)]);
                    assert_eq!(t, generated_by(&c, &[e.clone()]), "{name}");
                    assert!(is_idempotent(&c, &t));
                }
            }
        }
    }

    #[test]
    fn trivial_traces() {
        let c = catalog("a2cat(2)").unwrap();
        assert!(trace_ideal(&c, &[]).is_zero());
        let all: Vec<_> = (0..2).map(|b| representable(&c, b)).collect();
        assert!(trace_ideal(&c, &all).is_full());
    }

    #[test]
    fn witnesses_and_roundtrip() {
        let c = catalog("a2cat(2)").unwrap();
        let e1 = generated_by(&c, &[c.identity(0)]);
        let w = is_trace_of_projectives(&c, &e1, 2, &l()).unwrap().unwrap();
        assert_eq!(w.idempotents.len(), 1);
        assert_eq!(w.idempotents[0].0, vec![0]);
        let d = catalog("dual(2)").unwrap();
        let w = is_trace_of_projectives(&d, &Ideal::zero(&d), 2, &l()).unwrap().unwrap();
        assert!(w.idempotents.is_empty());

        let ideals = enumerate_idempotent_ideals(&c, &l()).unwrap();
        assert_eq!(ideals.len(), 4);
        let mut traces = Vec::new();
        for i in &ideals {
            let fam = subcategory_from_ideal(&c, i, 2, &l()).unwrap();
            let t = trace_from_subcategory(&c, &fam);
            assert_eq!(&t, i);
            traces.push(t);
        }
        traces.dedup();
        assert_eq!(traces.len(), 4);
    }
}
