//! Quiver presentations and their truncated path categories.
//!
//! The DSL is a sequence of `;`-terminated statements:
//!
//! ```text
//! vertices 1 2;
//! arrow a: 1 -> 2;
//! arrow x: 2 -> 2;
//! relation x*x;
//! relation a*x + 2*a*x*x;
//! field 3;
//! maxlen 3;
//! ```
//!
//! A word `a*b` is read left to right: first `a`, then `b`, so it denotes
//! the composite `b ∘ a`. A leading integer factor is a coefficient.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, PrimeField, Subspace};

use super::FinCat;

/// Upper bound on the number of paths a presentation may generate.
pub const MAX_PATHS: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

/// `Σ c_k · w_k` with each word a non-empty arrow sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(u32, Vec<String>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub p: u32,
    pub maxlen: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Num(u64),
    Semi,
    Colon,
    Arrow,
    Star,
    Plus,
    Minus,
}

struct Lexed {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Lexed>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (line, col) = (ln + 1, i + 1);
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let tok = match c {
                ';' => Tok::Semi,
                ':' => Tok::Colon,
                '*' => Tok::Star,
                '+' => Tok::Plus,
                '-' if chars.get(i + 1) == Some(&'>') => {
                    i += 1;
                    Tok::Arrow
                }
                '-' => Tok::Minus,
                c if c.is_ascii_digit() => {
                    let start = i;
                    while i + 1 < chars.len() && chars[i + 1].is_ascii_alphanumeric() {
                        i += 1;
                    }
                    let s: String = chars[start..=i].iter().collect();
                    match s.parse() {
                        Ok(n) => Tok::Num(n),
                        Err(_) => Tok::Word(s),
                    }
                }
                c if c.is_alphabetic() || c == '_' => {
                    let start = i;
                    while i + 1 < chars.len() && (chars[i + 1].is_alphanumeric() || chars[i + 1] == '_' || chars[i + 1] == '\'') {
                        i += 1;
                    }
                    Tok::Word(chars[start..=i].iter().collect())
                }
                _ => {
                    return Err(Error::Parse {
                        line,
                        col,
                        msg: format!("unexpected character `{c}`"),
                    })
                }
            };
            out.push(Lexed { tok, line, col });
            i += 1;
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Lexed>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map(|t| (t.line, t.col)).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = self.here();
        Err(Error::Parse {
            line,
            col,
            msg: msg.into(),
        })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    /// Vertex ids may be numerals or words.
    fn ident(&mut self, what: &str) -> Result<String> {
        match self.peek().cloned() {
            Some(Tok::Word(w)) => {
                self.pos += 1;
                Ok(w)
            }
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(n.to_string())
            }
            _ => self.err(format!("expected {what}")),
        }
    }

    fn number(&mut self, what: &str) -> Result<u64> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => self.err(format!("expected {what}")),
        }
    }

    fn term(&mut self, negate: bool) -> Result<(i64, Vec<String>)> {
        let mut coeff: i64 = 1;
        let mut word = Vec::new();
        if let Some(Tok::Num(n)) = self.peek() {
            coeff = *n as i64;
            self.pos += 1;
            if self.peek() != Some(&Tok::Star) {
                return self.err("a coefficient must be followed by `*` and a word");
            }
            self.pos += 1;
        }
        loop {
            match self.peek().cloned() {
                Some(Tok::Word(w)) => {
                    self.pos += 1;
                    word.push(w);
                }
                _ => return self.err("expected an arrow name"),
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((if negate { -coeff } else { coeff }, word))
    }
}

/// Parses the quiver DSL. Every statement kind may repeat except `field`
/// and `maxlen`, which are required exactly once.
pub fn parse_quiver_dsl(text: &str) -> Result<QuiverSpec> {
    let toks = lex(text)?;
    let end = (text.lines().count().max(1), text.lines().last().map_or(1, |l| l.len() + 1));
    let mut ps = Parser { toks, pos: 0, end };
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut raw_relations: Vec<(Vec<(i64, Vec<String>)>, (usize, usize))> = Vec::new();
    let mut p = None;
    let mut maxlen = None;
    while ps.peek().is_some() {
        let at = ps.here();
        let kw = match ps.next() {
            Some(Tok::Word(w)) => w,
            _ => {
                ps.pos -= 1;
                return ps.err("expected a statement keyword");
            }
        };
        match kw.as_str() {
            "vertices" => {
                while ps.peek() != Some(&Tok::Semi) {
                    let v = ps.ident("a vertex id")?;
                    if vertices.contains(&v) {
                        return Err(Error::Parse {
                            line: at.0,
                            col: at.1,
                            msg: format!("vertex `{v}` declared twice"),
                        });
                    }
                    vertices.push(v);
                }
            }
            "arrow" => {
                let name = match ps.next() {
                    Some(Tok::Word(w)) => w,
                    _ => {
                        ps.pos -= 1;
                        return ps.err("expected an arrow name");
                    }
                };
                ps.expect(Tok::Colon, "`:`")?;
                let src = ps.ident("a source vertex")?;
                ps.expect(Tok::Arrow, "`->`")?;
                let tgt = ps.ident("a target vertex")?;
                if arrows.iter().any(|a| a.name == name) {
                    return Err(Error::Parse {
                        line: at.0,
                        col: at.1,
                        msg: format!("arrow `{name}` declared twice"),
                    });
                }
                arrows.push(Arrow { name, src, tgt });
            }
            "relation" => {
                let mut terms = Vec::new();
                let neg = if ps.peek() == Some(&Tok::Minus) {
                    ps.pos += 1;
                    true
                } else {
                    false
                };
                terms.push(ps.term(neg)?);
                loop {
                    match ps.peek() {
                        Some(Tok::Plus) => {
                            ps.pos += 1;
                            terms.push(ps.term(false)?);
                        }
                        Some(Tok::Minus) => {
                            ps.pos += 1;
                            terms.push(ps.term(true)?);
                        }
                        _ => break,
                    }
                }
                raw_relations.push((terms, at));
            }
            "field" => {
                let n = ps.number("a prime")?;
                if p.replace(n).is_some() {
                    return Err(Error::Parse { line: at.0, col: at.1, msg: "field given twice".into() });
                }
            }
            "maxlen" => {
                let n = ps.number("a path length bound")?;
                if maxlen.replace(n).is_some() {
                    return Err(Error::Parse { line: at.0, col: at.1, msg: "maxlen given twice".into() });
                }
            }
            other => {
                return Err(Error::Parse {
                    line: at.0,
                    col: at.1,
                    msg: format!("unknown statement `{other}`"),
                })
            }
        }
        ps.expect(Tok::Semi, "`;`")?;
    }
    let p = p.ok_or_else(|| Error::Parse { line: end.0, col: end.1, msg: "missing `field` statement".into() })?;
    let maxlen = maxlen.ok_or_else(|| Error::Parse { line: end.0, col: end.1, msg: "missing `maxlen` statement".into() })?;
    let p = u32::try_from(p).map_err(|_| Error::NotPrime(u32::MAX))?;
    let field = PrimeField::new(p)?;
    let relations = raw_relations
        .into_iter()
        .map(|(terms, _)| Relation {
            terms: terms.into_iter().map(|(c, w)| (field.reduce(c), w)).collect(),
        })
        .collect();
    let spec = QuiverSpec {
        vertices,
        arrows,
        relations,
        p,
        maxlen: maxlen as usize,
    };
    spec.check()?;
    Ok(spec)
}

/// Canonical DSL text for a spec; `parse_quiver_dsl` inverts it.
pub fn print_quiver_dsl(q: &QuiverSpec) -> String {
    let mut s = String::new();
    if !q.vertices.is_empty() {
        let _ = writeln!(s, "vertices {};", q.vertices.join(" "));
    }
    for a in &q.arrows {
        let _ = writeln!(s, "arrow {}: {} -> {};", a.name, a.src, a.tgt);
    }
    for r in &q.relations {
        let terms: Vec<String> = r.terms.iter().map(|(c, w)| format!("{c}*{}", w.join("*"))).collect();
        let _ = writeln!(s, "relation {};", terms.join(" + "));
    }
    let _ = writeln!(s, "field {};", q.p);
    let _ = writeln!(s, "maxlen {};", q.maxlen);
    s
}

impl QuiverSpec {
    fn arrow(&self, name: &str) -> Result<&Arrow> {
        self.arrows
            .iter()
            .find(|a| a.name == name)
            .ok_or_else(|| Error::UndeclaredArrow(name.to_string()))
    }

    /// Endpoints of a non-empty word.
    fn word_ends(&self, w: &[String]) -> Result<(String, String)> {
        let mut cur: Option<&Arrow> = None;
        let mut start = None;
        for name in w {
            let a = self.arrow(name)?;
            if let Some(prev) = cur {
                if prev.tgt != a.src {
                    return Err(Error::NotComposable(w.join("*")));
                }
            } else {
                start = Some(a.src.clone());
            }
            cur = Some(a);
        }
        match (start, cur) {
            (Some(s), Some(e)) => Ok((s, e.tgt.clone())),
            _ => Err(Error::NotComposable(String::new())),
        }
    }

    /// Declared endpoints, composable relation words, homogeneous relations.
    pub fn check(&self) -> Result<()> {
        PrimeField::new(self.p)?;
        for a in &self.arrows {
            for v in [&a.src, &a.tgt] {
                if !self.vertices.contains(v) {
                    return Err(Error::UndeclaredVertex(v.clone()));
                }
            }
        }
        for r in &self.relations {
            let mut ends = None;
            for (_, w) in &r.terms {
                let e = self.word_ends(w)?;
                if *ends.get_or_insert_with(|| e.clone()) != e {
                    let text: Vec<String> = r.terms.iter().map(|(_, w)| w.join("*")).collect();
                    return Err(Error::InhomogeneousRelation(text.join(" + ")));
                }
            }
        }
        Ok(())
    }
}

type Word = Vec<usize>;

/// Paths between one ordered pair of vertices, and the relation subspace.
struct PairSpace {
    paths: Vec<Word>,
    index: HashMap<Word, usize>,
    /// Relation span in reversed path order, so leading terms are the
    /// longest paths and the surviving basis is the shortest ones.
    rel: Subspace,
    basis: Vec<usize>,
}

impl PairSpace {
    fn reduce(&self, coords: &[u32]) -> Vec<u32> {
        let rev: Vec<u32> = coords.iter().rev().copied().collect();
        let red = self.rel.reduce(&rev);
        let n = self.paths.len();
        self.basis.iter().map(|&k| red[n - 1 - k]).collect()
    }
}

/// The path category of `q` modulo its relations and all paths longer than
/// `q.maxlen`.
///
/// Hom bases are the standard monomials: paths of length at most `maxlen`
/// ordered by length then arrow order, keeping those that are not leading
/// terms of the relation ideal.
pub fn path_category(q: &QuiverSpec) -> Result<FinCat> {
    q.check()?;
    let field = PrimeField::new(q.p)?;
    let nv = q.vertices.len();
    let vidx = |v: &str| q.vertices.iter().position(|x| x == v).unwrap();
    let asrc: Vec<usize> = q.arrows.iter().map(|a| vidx(&a.src)).collect();
    let atgt: Vec<usize> = q.arrows.iter().map(|a| vidx(&a.tgt)).collect();

    // Paths by (source, target); length-0 paths are encoded as empty words.
    let mut by_pair: Vec<Vec<Word>> = vec![Vec::new(); nv * nv];
    let mut frontier: Vec<(usize, Word, usize)> = Vec::new();
    for v in 0..nv {
        by_pair[v * nv + v].push(Vec::new());
        frontier.push((v, Vec::new(), v));
    }
    let mut total = nv;
    for _ in 0..q.maxlen {
        let mut next = Vec::new();
        for (s, w, t) in &frontier {
            for (k, &src) in asrc.iter().enumerate() {
                if src == *t {
                    let mut w2 = w.clone();
                    w2.push(k);
                    by_pair[s * nv + atgt[k]].push(w2.clone());
                    next.push((*s, w2, atgt[k]));
                    total += 1;
                    if total > MAX_PATHS {
                        return Err(Error::cap("paths in the presentation", total as u128, MAX_PATHS as u128, "maxlen"));
                    }
                }
            }
        }
        frontier = next;
    }
    for paths in &mut by_pair {
        paths.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    }

    let rel_words: Vec<Vec<(u32, Word)>> = q
        .relations
        .iter()
        .map(|r| {
            r.terms
                .iter()
                .map(|(c, w)| (*c, w.iter().map(|n| q.arrows.iter().position(|a| &a.name == n).unwrap()).collect()))
                .collect()
        })
        .collect();
    let word_src = |w: &Word| asrc[w[0]];
    let word_tgt = |w: &Word| atgt[*w.last().unwrap()];

    let mut spaces = Vec::with_capacity(nv * nv);
    for x in 0..nv {
        for y in 0..nv {
            let paths = by_pair[x * nv + y].clone();
            let index: HashMap<Word, usize> = paths.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
            let n = paths.len();
            let mut rows = Vec::new();
            for rel in rel_words.iter().filter(|r| !r.is_empty()) {
                let (rs, rt) = (word_src(&rel[0].1), word_tgt(&rel[0].1));
                // u·r·v with u: x → rs and v: rt → y
                for u in &by_pair[x * nv + rs] {
                    for v in &by_pair[rt * nv + y] {
                        let mut row = vec![0u32; n];
                        for (c, w) in rel {
                            let full: Word = u.iter().chain(w).chain(v).copied().collect();
                            if full.len() <= q.maxlen {
                                let k = index[&full];
                                row[n - 1 - k] = field.add(row[n - 1 - k], *c);
                            }
                        }
                        rows.push(row);
                    }
                }
            }
            let rel = Subspace::row_space(&Matrix::from_rows(field, n, &rows)?);
            let lead: Vec<usize> = rel.pivots().iter().map(|&c| n - 1 - c).collect();
            let basis = (0..n).filter(|k| !lead.contains(k)).collect();
            spaces.push(PairSpace { paths, index, rel, basis });
        }
    }

    let hom: Vec<Vec<usize>> = (0..nv).map(|x| (0..nv).map(|y| spaces[x * nv + y].basis.len()).collect()).collect();
    let path_coords = |x: usize, y: usize, w: &Word| -> Vec<u32> {
        let sp = &spaces[x * nv + y];
        let mut v = vec![0; sp.paths.len()];
        if w.len() <= q.maxlen {
            v[sp.index[w]] = 1;
        }
        sp.reduce(&v)
    };
    let id: Vec<Vec<u32>> = (0..nv).map(|x| path_coords(x, x, &Vec::new())).collect();
    FinCat::from_tables(
        field,
        q.vertices.clone(),
        hom,
        |a, b, c| {
            let sab = &spaces[a * nv + b];
            let sbc = &spaces[b * nv + c];
            sab.basis
                .iter()
                .map(|&i| {
                    sbc.basis
                        .iter()
                        .map(|&j| {
                            let w: Word = sab.paths[i].iter().chain(&sbc.paths[j]).copied().collect();
                            if w.len() > q.maxlen {
                                vec![0; spaces[a * nv + c].basis.len()]
                            } else {
                                path_coords(a, c, &w)
                            }
                        })
                        .collect()
                })
                .collect()
        },
        id,
    )
}
