//! Machine-readable verification reports.
//!
//! Every command produces a [`Report`]: a list of findings, each tied to the
//! statement it checks, with a verdict and a witness. JSON output is
//! canonical (sorted keys) and byte-stable for identical inputs; wall-clock
//! timing is left out of it unless asked for.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::center::{center_idempotents, compute_center, summand_bijection_check};
use crate::completion::{additive_closure, idempotent_completion};
use crate::error::{Error, Result};
use crate::fincat::{category_hash, CategoryDoc, FinCat, Morphism};
use crate::ideals::{enumerate_ideals, generated_by, is_idempotent, is_trace_of_projectives, Ideal};
use crate::limits::Limits;
use crate::torsion::{census_lattice, gabriel_census, CensusLattice};
use crate::ttf::{is_split, jans_roundtrip, recollement_data, ttf_from_ideal, ttf_laws};

/// Bound on tuple length used for the idempotent completion in the center
/// comparison. Larger bounds refuse on most of the catalog.
pub const KAROUBI_BOUND: usize = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// A cap or bound stopped the check; the message names the knob.
    Refused(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
            Verdict::Refused(why) => write!(f, "refused({why})"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Finding {
    pub statement_id: String,
    /// The statement being checked, by name.
    pub anchor: &'static str,
    pub verdict: Verdict,
    pub witness: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Params {
    pub p: u32,
    /// Census bound on total module dimension.
    pub dim: usize,
    /// Tuple bound for the additive closure.
    pub bound: usize,
    pub cap_vectors: u64,
    pub cap_search: u64,
    pub seed: u64,
}

impl Params {
    pub fn new(cat: &FinCat, dim: usize, bound: usize, limits: &Limits) -> Self {
        Params {
            p: cat.p(),
            dim,
            bound,
            cap_vectors: limits.vectors,
            cap_search: limits.search,
            seed: limits.seed,
        }
    }

    pub fn limits(&self) -> Limits {
        Limits { vectors: self.cap_vectors, search: self.cap_search, seed: self.seed }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub category: String,
    pub params: Params,
    pub findings: Vec<Finding>,
    /// Command-specific payload, such as a completed category.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

pub mod anchors {
    pub const PREADDITIVE: &str = "preadditive category axioms";
    pub const COMPLETION: &str = "additive closure and idempotent completion";
    pub const IDEALS: &str = "two-sided ideals and their products";
    pub const TRACE: &str = "trace ideals of projectives are idempotent";
    pub const GABRIEL: &str = "Theorem A (Gabriel): topologies and hereditary torsion classes";
    pub const JANS: &str = "Theorem B (Jans): idempotent ideals and TTF triples";
    pub const RECOLLEMENT: &str = "Theorem C: trace ideals and recollements";
    pub const SPLIT: &str = "Corollary D: central idempotents and split TTF triples";
    pub const CENTER: &str = "center of A and of its completions";
    pub const SUMMANDS: &str = "direct summands and central idempotents";
}

impl Report {
    pub fn new(command: &str, cat: &FinCat, params: Params) -> Self {
        Report {
            command: command.to_string(),
            category: category_hash(cat),
            params,
            findings: Vec::new(),
            output: None,
            timing_ms: None,
        }
    }

    pub fn push(&mut self, statement_id: impl Into<String>, anchor: &'static str, verdict: Verdict, witness: Value) {
        self.findings.push(Finding { statement_id: statement_id.into(), anchor, verdict, witness });
    }

    /// Runs a check, turning cap and bound errors into refusals and any
    /// other error into a failure that carries the message.
    pub fn check(
        &mut self,
        statement_id: impl Into<String>,
        anchor: &'static str,
        f: impl FnOnce() -> Result<(bool, Value)>,
    ) -> bool {
        let (verdict, witness) = match f() {
            Ok((true, w)) => (Verdict::Pass, w),
            Ok((false, w)) => (Verdict::Fail, w),
            Err(e @ (Error::CapExceeded { .. } | Error::NoWitness { .. })) => (Verdict::Refused(e.to_string()), Value::Null),
            Err(e) => (Verdict::Fail, json!({ "error": e.to_string() })),
        };
        let pass = verdict == Verdict::Pass;
        self.push(statement_id, anchor, verdict, witness);
        pass
    }

    pub fn all_pass(&self) -> bool {
        self.findings.iter().all(|f| f.verdict == Verdict::Pass)
    }

    pub fn any_fail(&self) -> bool {
        self.findings.iter().any(|f| f.verdict == Verdict::Fail)
    }

    pub fn any_refused(&self) -> bool {
        self.findings.iter().any(|f| matches!(f.verdict, Verdict::Refused(_)))
    }

    /// 0 when every finding passes, 1 on any failure, 2 on a refusal
    /// without failures.
    pub fn exit_code(&self) -> i32 {
        if self.any_fail() {
            1
        } else if self.any_refused() {
            2
        } else {
            0
        }
    }

    /// Canonical JSON: keys sorted, compact.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string(&v).expect("value serializes")
    }

    /// A plain table, one finding per line.
    pub fn to_table(&self) -> String {
        let mut out = format!("{} on {}\n", self.command, &self.category[..12]);
        let w = self.findings.iter().map(|f| f.statement_id.len()).max().unwrap_or(0);
        for f in &self.findings {
            let wit = match &f.witness {
                Value::Null => String::new(),
                v => v.to_string(),
            };
            let label = match f.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Refused(_) => "refused",
            };
            out.push_str(&format!("{label:<7} {:<w$}  {wit}\n", f.statement_id));
            if let Verdict::Refused(why) = &f.verdict {
                out.push_str(&format!("        {:<w$}  {why}\n", ""));
            }
        }
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("{ms} ms\n"));
        }
        out
    }
}

fn ideal_json(cat: &FinCat, i: &Ideal) -> Value {
    let n = cat.num_objects();
    let mut basis = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            let s = i.at(a, b);
            if s.dim() > 0 {
                basis.insert(format!("{}|{}", cat.object_name(a), cat.object_name(b)), s.basis_vectors());
            }
        }
    }
    json!({ "total_dim": i.total_dim(), "basis": basis })
}

fn lattice(cat: &FinCat, params: &Params) -> Result<CensusLattice> {
    census_lattice(cat, params.dim, &params.limits())
}

/// Refuses every finding of a command whose census could not be built.
fn with_lattice(rep: &mut Report, cat: &FinCat, params: &Params, ids: &[(&str, &'static str)]) -> Option<CensusLattice> {
    match lattice(cat, params) {
        Ok(l) => Some(l),
        Err(e) => {
            for (id, anchor) in ids {
                rep.check(*id, anchor, || Err(e.clone()));
            }
            None
        }
    }
}

pub fn validate_report(cat: &FinCat, params: Params) -> Report {
    let mut rep = Report::new("validate", cat, params);
    let v = cat.validate();
    let list: Vec<String> = v.violations.iter().map(|x| x.to_string()).collect();
    rep.push(
        "category.axioms",
        anchors::PREADDITIVE,
        if v.is_valid() { Verdict::Pass } else { Verdict::Fail },
        json!({ "objects": cat.num_objects(), "total_hom_dim": cat.total_hom_dim(), "violations": list }),
    );
    rep
}

pub fn complete_report(cat: &FinCat, params: Params, idempotents: bool) -> Report {
    let mut rep = Report::new("complete", cat, params);
    let limits = params.limits();
    let built = if idempotents {
        idempotent_completion(cat, params.bound, &limits).map(|k| k.category().clone())
    } else {
        additive_closure(cat, params.bound, &limits).map(|c| c.category().clone())
    };
    let id = if idempotents { "completion.idempotent" } else { "completion.additive" };
    let mut doc = None;
    rep.check(id, anchors::COMPLETION, || {
        let c = built?;
        let valid = c.validate().is_valid();
        let (z0, z1) = (compute_center(cat).dim(), compute_center(&c).dim());
        let w = json!({ "objects": c.num_objects(), "valid": valid, "center_dim": [z0, z1] });
        doc = Some(serde_json::to_value(CategoryDoc::from_category(&c))?);
        Ok((valid && z0 == z1, w))
    });
    rep.output = doc;
    rep
}

pub fn ideals_report(cat: &FinCat, params: Params, idempotent_only: bool) -> Report {
    let mut rep = Report::new("ideals", cat, params);
    let limits = params.limits();
    let mut listing = Vec::new();
    rep.check("ideals.lattice", anchors::IDEALS, || {
        let all = enumerate_ideals(cat, &limits)?;
        let closed = all.iter().all(|i| {
            i.is_ideal(cat) && all.iter().all(|j| all.contains(&i.sum(j)) && all.contains(&i.intersect(j)))
        });
        let idem = all.iter().filter(|i| is_idempotent(cat, i)).count();
        for (k, i) in all.iter().enumerate() {
            let e = is_idempotent(cat, i);
            if idempotent_only && !e {
                continue;
            }
            let trace = if e {
                match is_trace_of_projectives(cat, i, params.bound, &limits) {
                    Ok(Some(w)) => json!(w.idempotents.iter().map(|(t, _)| t.clone()).collect::<Vec<_>>()),
                    Ok(None) => json!(false),
                    Err(err) => json!(format!("refused: {err}")),
                }
            } else {
                Value::Null
            };
            let mut v = ideal_json(cat, i);
            v["id"] = json!(k);
            v["idempotent"] = json!(e);
            v["trace_of"] = trace;
            listing.push(v);
        }
        Ok((closed, json!({ "ideals": all.len(), "idempotent": idem })))
    });
    rep.check("ideals.trace_idempotent", anchors::TRACE, || {
        let closure = additive_closure(cat, 1, &limits)?;
        let idems = crate::completion::list_idempotents(cat, None, &limits)?;
        let ok = idems.iter().all(|e| {
            is_idempotent(cat, &crate::ideals::trace_ideal(cat, &[closure.projective(&lift(&closure, e))]))
        });
        Ok((ok, json!({ "idempotents": idems.len() })))
    });
    rep.output = Some(Value::Array(listing));
    rep
}

/// A base idempotent as an endomorphism of its singleton tuple.
fn lift(closure: &crate::completion::AdditiveClosure, e: &Morphism) -> Morphism {
    let x = closure.singleton(e.src);
    Morphism::new(x, x, e.coords.clone())
}

pub fn gabriel_report(cat: &FinCat, params: Params, roundtrip: bool, census: bool) -> Report {
    let mut rep = Report::new("gabriel", cat, params);
    let Some(lat) = with_lattice(&mut rep, cat, &params, &[("gabriel.census", anchors::GABRIEL)]) else {
        return rep;
    };
    match gabriel_census(cat, &lat, &params.limits()) {
        Ok(g) => {
            if roundtrip {
                for (k, ok) in g.roundtrips.iter().enumerate() {
                    let verdict = if *ok { Verdict::Pass } else { Verdict::Fail };
                    rep.push(format!("gabriel.roundtrip[{k}]"), anchors::GABRIEL, verdict, json!({ "topology": k }));
                }
            }
            if census {
                rep.push(
                    "gabriel.census",
                    anchors::GABRIEL,
                    if g.passes() { Verdict::Pass } else { Verdict::Fail },
                    json!({
                        "topologies": g.topologies,
                        "torsion_fingerprints": g.torsion_fingerprints(),
                        "closure_fingerprints": g.closure_fingerprints(),
                        "collisions": g.collisions,
                        "census": lat.len(),
                    }),
                );
            }
            let list: Vec<&str> = g.roundtrips.iter().map(|&b| if b { "pass" } else { "fail" }).collect();
            rep.output = Some(json!({
                "topologies": g.topologies,
                "torsion_fingerprints": g.torsion_fingerprints(),
                "roundtrip": list,
            }));
        }
        Err(e) => {
            rep.check("gabriel.census", anchors::GABRIEL, || Err(e));
        }
    }
    rep
}

pub fn jans_report(cat: &FinCat, params: Params) -> Report {
    let mut rep = Report::new("jans", cat, params);
    let Some(lat) = with_lattice(&mut rep, cat, &params, &[("jans.roundtrip", anchors::JANS)]) else {
        return rep;
    };
    let limits = params.limits();
    match jans_roundtrip(cat, &lat, &limits) {
        Ok(j) => {
            for (k, (i, ok)) in j.ideals.iter().zip(&j.roundtrips).enumerate() {
                rep.check(format!("jans.roundtrip[{k}]"), anchors::JANS, || {
                    let laws = ttf_laws(cat, &ttf_from_ideal(cat, i)?, &lat);
                    Ok((*ok && laws.passes(), json!({ "ideal_dims": i.dims(), "laws": laws.passes() })))
                });
            }
            rep.push(
                "jans.distinct",
                anchors::JANS,
                if j.distinct { Verdict::Pass } else { Verdict::Fail },
                json!({ "ttf_triples": j.ideals.len(), "census": lat.len() }),
            );
        }
        Err(e) => {
            rep.check("jans.roundtrip", anchors::JANS, || Err(e));
        }
    }
    rep
}

pub fn split_report(cat: &FinCat, params: Params) -> Report {
    let mut rep = Report::new("split", cat, params);
    let Some(lat) = with_lattice(&mut rep, cat, &params, &[("split.count", anchors::SPLIT)]) else {
        return rep;
    };
    let limits = params.limits();
    let mut split = 0;
    let mut ideals = Vec::new();
    rep.check("split.agree", anchors::SPLIT, || {
        ideals = crate::ideals::enumerate_idempotent_ideals(cat, &limits)?;
        let mut ok = true;
        let mut rows = Vec::new();
        for i in &ideals {
            let s = is_split(cat, &ttf_from_ideal(cat, i)?, &lat, &limits)?;
            ok &= s.agree();
            split += s.is_split() as usize;
            rows.push(json!([s.is_split(), s.decomposes, s.c_equals_f]));
        }
        Ok((ok, json!({ "criteria": rows })))
    });
    rep.check("split.count", anchors::SPLIT, || {
        let z = center_idempotents(cat, &compute_center(cat), &limits)?.len();
        Ok((z == split, json!({ "split": split, "central_idempotents": z, "ttf_triples": ideals.len() })))
    });
    rep
}

pub fn center_report(cat: &FinCat, params: Params, idempotents: bool, summands: bool) -> Report {
    let mut rep = Report::new("center", cat, params);
    let limits = params.limits();
    let z = compute_center(cat);
    rep.check("center.invariance", anchors::CENTER, || {
        let hat = compute_center(additive_closure(cat, params.bound, &limits)?.category()).dim();
        let kar = compute_center(idempotent_completion(cat, KAROUBI_BOUND, &limits)?.category()).dim();
        Ok((z.dim() == hat && hat == kar && z.is_commutative(), json!({ "dims": [z.dim(), hat, kar] })))
    });
    if idempotents {
        rep.check("center.idempotents", anchors::CENTER, || {
            let e = center_idempotents(cat, &z, &limits)?;
            let ok = e.iter().all(|x| x.is_idempotent(cat));
            Ok((ok, json!({ "count": e.len(), "coords": e.iter().map(|x| x.coords()).collect::<Vec<_>>() })))
        });
    }
    if summands {
        rep.check("center.summands", anchors::SUMMANDS, || {
            let s = summand_bijection_check(cat, &limits)?;
            Ok((s.passes(), json!({ "summands": s.summands.len(), "central_idempotents": s.central_idempotents })))
        });
    }
    rep
}

/// Parses an ideal given either as an index into the ideal enumeration or
/// as generators `a|b|c0,c1;...` (object names, then coordinates).
pub fn parse_ideal(cat: &FinCat, spec: &str, limits: &Limits) -> Result<Ideal> {
    let spec = spec.trim();
    if let Ok(k) = spec.parse::<usize>() {
        let all = enumerate_ideals(cat, limits)?;
        let n = all.len();
        return all.into_iter().nth(k).ok_or_else(|| Error::Format(format!("ideal {k} out of range (0..{n})")));
    }
    let mut gens = Vec::new();
    for g in spec.split(';').map(str::trim).filter(|g| !g.is_empty()) {
        let parts: Vec<&str> = g.split('|').collect();
        let [a, b, coords] = parts[..] else {
            return Err(Error::Format(format!("generator `{g}` is not `src|tgt|coords`")));
        };
        let (a, b) = (cat.object_index(a.trim())?, cat.object_index(b.trim())?);
        let v: Vec<u32> = coords
            .split(',')
            .map(|c| c.trim().parse::<u32>().map(|x| x % cat.p()))
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Format(format!("bad coordinates in `{g}`")))?;
        if v.len() != cat.hom_dim(a, b) {
            return Err(Error::Format(format!("`{g}` needs {} coordinates", cat.hom_dim(a, b))));
        }
        gens.push(Morphism::new(a, b, v));
    }
    Ok(generated_by(cat, &gens))
}

pub fn recollement_report(cat: &FinCat, params: Params, ideal: Option<&Ideal>) -> Report {
    let mut rep = Report::new("recollement", cat, params);
    let Some(lat) = with_lattice(&mut rep, cat, &params, &[("recollement", anchors::RECOLLEMENT)]) else {
        return rep;
    };
    let limits = params.limits();
    let ideals = match ideal {
        Some(i) => vec![i.clone()],
        None => match crate::ideals::enumerate_idempotent_ideals(cat, &limits) {
            Ok(v) => v,
            Err(e) => {
                rep.check("recollement", anchors::RECOLLEMENT, || Err(e));
                return rep;
            }
        },
    };
    for (k, i) in ideals.iter().enumerate() {
        rep.check(format!("recollement[{k}]"), anchors::RECOLLEMENT, || {
            let triple = ttf_from_ideal(cat, i)?;
            let data = recollement_data(cat, i, params.bound, &limits)?;
            let r = data.check(cat, &triple, &lat, &limits)?;
            Ok((
                r.passes(),
                json!({
                    "ideal_dims": i.dims(),
                    "corner_objects": data.corner.category().num_objects(),
                    "ker_j_is_t": r.ker_j_is_t,
                    "yoneda": r.yoneda,
                    "adjunctions": r.adjunctions,
                    "j_exact": r.j_exact,
                    "triple_matches": r.triple_matches,
                    "pairs": r.pairs_checked,
                    "sequences": r.sequences_checked,
                }),
            ))
        });
    }
    rep
}

/// Every count and verdict in one document.
pub fn report_census(cat: &FinCat, params: Params) -> Report {
    let mut rep = Report::new("census", cat, params);
    let limits = params.limits();
    let mut out = BTreeMap::new();
    let sub = |r: Report, rep: &mut Report| {
        rep.findings.extend(r.findings);
    };
    rep.check("census.ideals", anchors::IDEALS, || {
        let all = enumerate_ideals(cat, &limits)?;
        let idem = all.iter().filter(|i| is_idempotent(cat, i)).count();
        out.insert("ideals", json!(all.len()));
        out.insert("idempotent_ideals", json!(idem));
        Ok((true, json!({ "ideals": all.len(), "idempotent": idem })))
    });
    let g = gabriel_report(cat, params, true, true);
    if let Some(o) = &g.output {
        out.insert("topologies", o["topologies"].clone());
        out.insert("torsion_fingerprints", o["torsion_fingerprints"].clone());
    }
    sub(g, &mut rep);
    let j = jans_report(cat, params);
    out.insert(
        "ttf_roundtrips",
        json!(j.findings.iter().filter(|f| f.statement_id.starts_with("jans.roundtrip[") && f.verdict == Verdict::Pass).count()),
    );
    sub(j, &mut rep);
    let s = split_report(cat, params);
    if let Some(f) = s.findings.iter().find(|f| f.statement_id == "split.count") {
        out.insert("split", f.witness["split"].clone());
    }
    sub(s, &mut rep);
    let r = recollement_report(cat, params, None);
    out.insert(
        "recollements",
        json!(r.findings.iter().filter(|f| f.verdict == Verdict::Pass).count()),
    );
    sub(r, &mut rep);
    sub(center_report(cat, params, true, true), &mut rep);
    rep.output = Some(json!(out));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::catalog;

    fn params(cat: &FinCat) -> Params {
        Params::new(cat, 4, 2, &Limits::default())
    }

    #[test]
    fn census_counts() {
        for (name, ideals, idem, tops, ttf, split) in
            [("pt(2)", 2, 2, 2, 2, 2), ("dual(2)", 3, 2, 2, 2, 2), ("a2cat(2)", 5, 4, 4, 4, 2)]
        {
            let c = catalog(name).unwrap();
            let r = report_census(&c, params(&c));
            let o = r.output.clone().unwrap();
            assert_eq!(
                (o["ideals"].clone(), o["idempotent_ideals"].clone(), o["topologies"].clone(), o["ttf_roundtrips"].clone(), o["split"].clone()),
                (json!(ideals), json!(idem), json!(tops), json!(ttf), json!(split)),
                "{name}"
            );
            assert!(r.all_pass(), "{name}: {}", r.to_table());
        }
    }

    #[test]
    fn deterministic_json() {
        let c = catalog("a2cat(2)").unwrap();
        assert_eq!(report_census(&c, params(&c)).to_json(), report_census(&c, params(&c)).to_json());
    }

    #[test]
    fn refusal_exit_code() {
        let c = catalog("mat2(2)").unwrap();
        let p = Params::new(&c, 4, 2, &Limits { vectors: 2, ..Limits::default() });
        let r = center_report(&c, p, true, false);
        assert!(r.any_refused());
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn ideal_specs() {
        let c = catalog("a2cat(2)").unwrap();
        let l = Limits::default();
        let by_gen = parse_ideal(&c, "2|2|1", &l).unwrap();
        assert_eq!(by_gen, generated_by(&c, &[c.identity(1)]));
        let all = enumerate_ideals(&c, &l).unwrap();
        assert_eq!(parse_ideal(&c, "3", &l).unwrap(), all[3]);
        assert!(parse_ideal(&c, "2|2", &l).is_err());
        assert!(parse_ideal(&c, "99", &l).is_err());
    }
}
