//! Exhaustive enumeration of modules up to isomorphism.
//!
//! Every module `M` splits along a complete set of primitive orthogonal
//! idempotents `e_i`: `M(a) = ⊕_{i at a} Im M(e_i)`. Choosing bases so that
//! each `M(e_i)` is a coordinate projection, and so that chosen isomorphisms
//! `t_i, s_i` between `e_i` and a representative `e_r` of its isomorphism
//! class act as identity blocks, leaves a module determined by the blocks
//! `ρ(y)` for `y` in a basis of the pieces `e_{r'} A e_r` between
//! representatives. The search runs over those blocks only, prunes with the
//! multiplication constraints among them, lifts each survivor to a module
//! over the full category, checks functoriality there, and keeps one
//! module per isomorphism class.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactla::{all_vectors, Matrix, Subspace};
use crate::fincat::{FinCat, Morphism};
use crate::limits::Limits;
use crate::peirce::{idempotent_iso, peirce_piece, primitive_decomposition};

use super::iso::{find_iso, fingerprint, Fingerprint};
use super::FinModule;

/// Modules found by [`enumerate_modules`], one per isomorphism class, with
/// their fingerprints.
#[derive(Debug, Clone)]
pub struct ModuleCensus {
    pub modules: Vec<FinModule>,
    pub fingerprints: Vec<Fingerprint>,
}

impl ModuleCensus {
    pub fn len(&self) -> usize {
        self.modules.len()
    }
    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// Index of the census member isomorphic to `m`, if any.
    pub fn locate(&self, cat: &FinCat, m: &FinModule, limits: &Limits) -> Result<Option<usize>> {
        let fp = fingerprint(cat, m);
        for (i, (x, xf)) in self.modules.iter().zip(&self.fingerprints).enumerate() {
            if *xf == fp && find_iso(cat, x, m, limits)?.is_some() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

struct Gauge {
    prims: Vec<Morphism>,
    /// Representative index (into `prims`) of each primitive's class.
    rep_of: Vec<usize>,
    reps: Vec<usize>,
    /// `t_i: obj(r) → obj(i)` and `s_i: obj(i) → obj(r)`.
    t: Vec<Morphism>,
    s: Vec<Morphism>,
    /// `pieces[(r, r')]`: basis of `e_{r'} A e_r`, with `e_r` first when `r = r'`.
    pieces: HashMap<(usize, usize), (Subspace, Vec<Vec<u32>>)>,
}

fn build_gauge(cat: &FinCat, limits: &Limits) -> Result<Gauge> {
    let prims = primitive_decomposition(cat, limits)?;
    let mut rep_of = vec![usize::MAX; prims.len()];
    let mut reps = Vec::new();
    let mut t = Vec::with_capacity(prims.len());
    let mut s = Vec::with_capacity(prims.len());
    for i in 0..prims.len() {
        let mut found = None;
        for &r in &reps {
            if let Some((u, v)) = idempotent_iso(cat, &prims[r], &prims[i], limits)? {
                found = Some((r, u, v));
                break;
            }
        }
        match found {
            Some((r, u, v)) => {
                rep_of[i] = r;
                t.push(u);
                s.push(v);
            }
            None => {
                rep_of[i] = i;
                reps.push(i);
                t.push(prims[i].clone());
                s.push(prims[i].clone());
            }
        }
    }
    let mut pieces = HashMap::new();
    for &r in &reps {
        for &r2 in &reps {
            let sp = peirce_piece(cat, &prims[r], &prims[r2]);
            let mut chosen: Vec<Vec<u32>> = Vec::new();
            let mut span = Subspace::zero(cat.field(), sp.ambient());
            let mut candidates = Vec::new();
            if r == r2 {
                candidates.push(prims[r].coords.clone());
            }
            candidates.extend(sp.basis_vectors());
            for v in candidates {
                if !span.contains(&v)? {
                    span = span.sum(&Subspace::span(cat.field(), sp.ambient(), &[v.clone()])?)?;
                    chosen.push(v);
                }
            }
            pieces.insert((r, r2), (sp, chosen));
        }
    }
    Ok(Gauge {
        prims,
        rep_of,
        reps,
        t,
        s,
        pieces,
    })
}

/// Coordinates of `y ∈ e_{r'} A e_r` in the chosen piece basis.
fn piece_coords(cat: &FinCat, basis: &[Vec<u32>], y: &[u32]) -> Vec<u32> {
    let m = Matrix::from_columns(cat.field(), y.len(), basis);
    crate::exactla::solve(&m, y)
        .expect("lengths")
        .expect("element lies in the piece")
}

/// All modules with total dimension at most `max_dim`, one per
/// isomorphism class, ordered by total dimension, then dimension vector,
/// then fingerprint.
pub fn enumerate_modules(cat: &FinCat, max_dim: usize, limits: &Limits) -> Result<ModuleCensus> {
    let w = vec![1; cat.num_objects()];
    enumerate_modules_weighted(cat, &w, max_dim, limits)
}

/// As [`enumerate_modules`], but the bound applies to
/// `Σ_a weights[a] · dim M(a)`. Every isomorphism class of primitive
/// idempotents must meet an object of positive weight.
pub fn enumerate_modules_weighted(cat: &FinCat, weights: &[usize], bound: usize, limits: &Limits) -> Result<ModuleCensus> {
    let g = build_gauge(cat, limits)?;
    let nreps = g.reps.len();
    let rep_pos: HashMap<usize, usize> = g.reps.iter().enumerate().map(|(k, &r)| (r, k)).collect();
    let mut class_weight = vec![0usize; nreps];
    for (i, e) in g.prims.iter().enumerate() {
        class_weight[rep_pos[&g.rep_of[i]]] += weights[e.src];
    }
    if let Some(k) = class_weight.iter().position(|&w| w == 0) {
        return Err(Error::InvalidModule(format!(
            "primitive idempotent class {k} meets no weighted object; dimensions would be unbounded"
        )));
    }

    let mut dim_vectors = Vec::new();
    fn rec(k: usize, left: usize, cw: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cw.len() {
            out.push(cur.clone());
            return;
        }
        let mut d = 0;
        while d * cw[k] <= left {
            cur.push(d);
            rec(k + 1, left - d * cw[k], cw, cur, out);
            cur.pop();
            d += 1;
        }
    }
    rec(0, bound, &class_weight, &mut Vec::new(), &mut dim_vectors);

    let mut found: Vec<(FinModule, Fingerprint)> = Vec::new();
    let mut buckets: HashMap<Fingerprint, Vec<usize>> = HashMap::new();
    for dv in dim_vectors {
        for m in modules_with_dims(cat, &g, &rep_pos, &dv, limits)? {
            let fp = fingerprint(cat, &m);
            let bucket = buckets.entry(fp.clone()).or_default();
            let mut seen = false;
            for &idx in bucket.iter() {
                if find_iso(cat, &found[idx].0, &m, limits)?.is_some() {
                    seen = true;
                    break;
                }
            }
            if !seen {
                bucket.push(found.len());
                found.push((m, fp));
            }
        }
    }
    found.sort_by(|x, y| x.1.cmp(&y.1));
    let (modules, fingerprints) = found.into_iter().unzip();
    Ok(ModuleCensus { modules, fingerprints })
}

/// Shape `d_r × d_{r'}` of an unknown block.
struct Unknown {
    rows: usize,
    cols: usize,
}

/// `ρ(y2 ∘ y1) = ρ(y1) ρ(y2)` with the product expanded in its piece.
struct Constraint {
    left: (usize, usize, usize),
    right: (usize, usize, usize),
    product_key: (usize, usize),
    product: Vec<u32>,
    ready_at: usize,
}

fn modules_with_dims(
    cat: &FinCat,
    g: &Gauge,
    rep_pos: &HashMap<usize, usize>,
    dv: &[usize],
    limits: &Limits,
) -> Result<Vec<FinModule>> {
    let f = cat.field();
    let d_of = |r: usize| dv[rep_pos[&r]];

    // Unknown blocks, skipping zero-size blocks and the fixed identities.
    let mut unknowns: Vec<Unknown> = Vec::new();
    let mut unknown_index: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut space: u128 = 1;
    for &r in &g.reps {
        for &r2 in &g.reps {
            let (_, basis) = &g.pieces[&(r, r2)];
            for idx in 0..basis.len() {
                if r == r2 && idx == 0 {
                    continue;
                }
                let (rows, cols) = (d_of(r), d_of(r2));
                if rows * cols == 0 {
                    continue;
                }
                space = space.saturating_mul((f.p() as u128).saturating_pow((rows * cols) as u32));
                unknown_index.insert((r, r2, idx), unknowns.len());
                unknowns.push(Unknown {
                    rows,
                    cols,
                });
            }
        }
    }
    limits.check_search(&format!("module search at dimension vector {dv:?}"), space)?;

    let pos = |k: (usize, usize, usize)| -> Option<usize> {
        if k.0 == k.1 && k.2 == 0 {
            None
        } else {
            unknown_index.get(&k).copied()
        }
    };
    let mut constraints: Vec<Constraint> = Vec::new();
    for &r in &g.reps {
        for &r2 in &g.reps {
            for &r3 in &g.reps {
                if d_of(r) * d_of(r2) * d_of(r3) == 0 {
                    continue;
                }
                let (_, b12) = &g.pieces[&(r, r2)];
                let (_, b23) = &g.pieces[&(r2, r3)];
                let (_, b13) = &g.pieces[&(r, r3)];
                let (o1, o2, o3) = (g.prims[r].src, g.prims[r2].src, g.prims[r3].src);
                for (i1, y1) in b12.iter().enumerate() {
                    for (i2, y2) in b23.iter().enumerate() {
                        let prod = cat.compose_coords(o1, o2, o3, y1, y2);
                        let coords = piece_coords(cat, b13, &prod);
                        let mut involved = vec![pos((r, r2, i1)), pos((r2, r3, i2))];
                        for (k, &c) in coords.iter().enumerate() {
                            if c != 0 {
                                involved.push(pos((r, r3, k)));
                            }
                        }
                        let ready_at = involved.iter().flatten().copied().max();
                        let Some(ready_at) = ready_at else { continue };
                        constraints.push(Constraint {
                            left: (r, r2, i1),
                            right: (r2, r3, i2),
                            product_key: (r, r3),
                            product: coords,
                            ready_at,
                        });
                    }
                }
            }
        }
    }
    let mut by_ready: Vec<Vec<usize>> = vec![Vec::new(); unknowns.len()];
    for (ci, c) in constraints.iter().enumerate() {
        by_ready[c.ready_at].push(ci);
    }

    let block = |assign: &[Matrix], k: (usize, usize, usize)| -> Matrix {
        if k.0 == k.1 && k.2 == 0 {
            Matrix::identity(f, d_of(k.0))
        } else {
            match unknown_index.get(&k) {
                Some(&u) => assign[u].clone(),
                None => Matrix::zeros(f, d_of(k.0), d_of(k.1)),
            }
        }
    };
    let holds = |assign: &[Matrix], c: &Constraint| -> bool {
        let lhs = block(assign, c.left).mul_unchecked(&block(assign, c.right));
        let (r, r3) = c.product_key;
        let mut rhs = Matrix::zeros(f, d_of(r), d_of(r3));
        for (k, &x) in c.product.iter().enumerate() {
            if x != 0 {
                rhs = rhs.add(&block(assign, (r, r3, k)).scale(x)).expect("shape");
            }
        }
        lhs == rhs
    };

    let mut solutions: Vec<Vec<Matrix>> = Vec::new();
    let mut assign: Vec<Matrix> = Vec::with_capacity(unknowns.len());
    fn search(
        k: usize,
        unknowns: &[Unknown],
        assign: &mut Vec<Matrix>,
        by_ready: &[Vec<usize>],
        constraints: &[Constraint],
        holds: &dyn Fn(&[Matrix], &Constraint) -> bool,
        field: crate::exactla::PrimeField,
        out: &mut Vec<Vec<Matrix>>,
    ) {
        if k == unknowns.len() {
            out.push(assign.clone());
            return;
        }
        let u = &unknowns[k];
        for entries in all_vectors(field, u.rows * u.cols) {
            let m = Matrix::from_flat(field, u.rows, u.cols, entries).expect("shape");
            assign.push(m);
            if by_ready[k].iter().all(|&ci| holds(assign, &constraints[ci])) {
                search(k + 1, unknowns, assign, by_ready, constraints, holds, field, out);
            }
            assign.pop();
        }
    }
    search(0, &unknowns, &mut assign, &by_ready, &constraints, &holds, f, &mut solutions);

    // Lift to the whole category.
    let n = cat.num_objects();
    let mut offsets: Vec<usize> = vec![0; g.prims.len()];
    let mut dims = vec![0usize; n];
    for (i, e) in g.prims.iter().enumerate() {
        offsets[i] = dims[e.src];
        dims[e.src] += d_of(g.rep_of[i]);
    }
    let prims_at: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..g.prims.len()).filter(|&i| g.prims[i].src == a).collect())
        .collect();
    let mut out = Vec::with_capacity(solutions.len());
    for sol in solutions {
        let m = FinModule::from_fn(cat, dims.clone(), |a, b, k| {
            let beta = cat.basis_morphism(a, b, k);
            let mut mat = Matrix::zeros(f, dims[a], dims[b]);
            for &i in &prims_at[a] {
                for &j in &prims_at[b] {
                    let (ri, rj) = (g.rep_of[i], g.rep_of[j]);
                    if d_of(ri) * d_of(rj) == 0 {
                        continue;
                    }
                    // y = s_j ∘ β ∘ t_i ∈ e_{r_j} A e_{r_i}
                    let y = cat.compose(&g.s[j], &cat.compose(&beta, &g.t[i]));
                    let (_, basis) = &g.pieces[&(ri, rj)];
                    let coords = piece_coords(cat, basis, &y.coords);
                    let mut blk = Matrix::zeros(f, d_of(ri), d_of(rj));
                    for (q, &c) in coords.iter().enumerate() {
                        if c != 0 {
                            blk = blk.add(&block(&sol, (ri, rj, q)).scale(c)).expect("shape");
                        }
                    }
                    mat.paste(offsets[i], offsets[j], &blk);
                }
            }
            mat
        })?;
        m.check(cat)?;
        out.push(m);
    }
    Ok(out)
}
