//! Finite `F_p`-linear preadditive categories given by structure constants.
//!
//! Objects are indexed `0..n` in declaration order and carry string names.
//! Each hom-space `A(a, b)` has a fixed ordered basis; a morphism is its
//! coordinate vector in that basis. Composition is stored as structure
//! constants: `comp(a, b, c)[i][j]` is the coordinate vector of
//! `β_j ∘ α_i` for `α_i` in the basis of `A(a, b)` and `β_j` in the basis of
//! `A(b, c)`.

mod catalog;
mod json;
mod quiver;

pub use catalog::{catalog, catalog_names, parse_catalog_ref};
pub use json::{category_hash, from_json, to_json, CategoryDoc};
pub use quiver::{parse_quiver_dsl, path_category, print_quiver_dsl, Arrow, QuiverSpec, Relation};

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, PrimeField};

/// A morphism `src → tgt` in coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    pub src: usize,
    pub tgt: usize,
    pub coords: Vec<u32>,
}

impl Morphism {
    pub fn new(src: usize, tgt: usize, coords: Vec<u32>) -> Self {
        Morphism { src, tgt, coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FinCat {
    field: PrimeField,
    objects: Vec<String>,
    /// `hom[a * n + b]`
    hom: Vec<usize>,
    /// `comp[(a * n + b) * n + c]`, flat `[i][j][k]`.
    comp: Vec<Vec<u32>>,
    id: Vec<Vec<u32>>,
}

impl fmt::Debug for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinCat")
            .field("p", &self.field.p())
            .field("objects", &self.objects)
            .field("total_hom_dim", &self.total_hom_dim())
            .finish()
    }
}

/// One failed law found by [`FinCat::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `(γ_k ∘ β_j) ∘ α_i ≠ γ_k ∘ (β_j ∘ α_i)` for basis elements of
    /// `A(a,b)`, `A(b,c)`, `A(c,d)`.
    Associativity {
        objects: [usize; 4],
        basis: [usize; 3],
    },
    /// `id_b ∘ α_i ≠ α_i` for a basis element of `A(a,b)`.
    LeftIdentity { src: usize, tgt: usize, basis: usize },
    /// `α_i ∘ id_a ≠ α_i`.
    RightIdentity { src: usize, tgt: usize, basis: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Associativity { objects: o, basis: b } => write!(
                f,
                "associativity fails on objects ({},{},{},{}) basis ({},{},{})",
                o[0], o[1], o[2], o[3], b[0], b[1], b[2]
            ),
            Violation::LeftIdentity { src, tgt, basis } => {
                write!(f, "left identity fails on basis {basis} of ({src},{tgt})")
            }
            Violation::RightIdentity { src, tgt, basis } => {
                write!(f, "right identity fails on basis {basis} of ({src},{tgt})")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl FinCat {
    /// Assembles a category, checking only the shapes of the tables.
    /// Associativity and identities are checked by [`FinCat::validate`].
    ///
    /// `hom[a][b]` is `dim A(a,b)`, `comp[a][b][c]` is the `[i][j] ->
    /// coords` table and `id[a]` the coordinates of `id_a`.
    pub fn from_tables(
        field: PrimeField,
        objects: Vec<String>,
        hom: Vec<Vec<usize>>,
        mut comp: impl FnMut(usize, usize, usize) -> Vec<Vec<Vec<u32>>>,
        id: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let n = objects.len();
        if hom.len() != n || hom.iter().any(|r| r.len() != n) || id.len() != n {
            return Err(Error::DimensionMismatch("hom table or identity list has wrong shape".into()));
        }
        for (i, a) in objects.iter().enumerate() {
            if a.contains('|') || a.is_empty() {
                return Err(Error::InvalidCategory(format!("bad object name `{a}`")));
            }
            if objects[..i].contains(a) {
                return Err(Error::InvalidCategory(format!("duplicate object `{a}`")));
            }
        }
        let hom_flat: Vec<usize> = hom.iter().flatten().copied().collect();
        let mut comp_flat = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (dab, dbc, dac) = (hom[a][b], hom[b][c], hom[a][c]);
                    let mut flat = Vec::with_capacity(dab * dbc * dac);
                    if dab > 0 && dbc > 0 {
                        let t = comp(a, b, c);
                        if t.len() != dab || t.iter().any(|r| r.len() != dbc || r.iter().any(|v| v.len() != dac)) {
                            return Err(Error::DimensionMismatch(format!(
                                "composition table ({},{},{}) is not {dab}x{dbc}x{dac}",
                                objects[a], objects[b], objects[c]
                            )));
                        }
                        for row in t {
                            for v in row {
                                flat.extend(v.into_iter().map(|x| x % field.p()));
                            }
                        }
                    }
                    comp_flat.push(flat);
                }
            }
        }
        for (a, v) in id.iter().enumerate() {
            if v.len() != hom[a][a] {
                return Err(Error::DimensionMismatch(format!("identity of `{}` has wrong length", objects[a])));
            }
        }
        let id = id.into_iter().map(|v| v.into_iter().map(|x| x % field.p()).collect()).collect();
        Ok(FinCat {
            field,
            objects,
            hom: hom_flat,
            comp: comp_flat,
            id,
        })
    }

    /// [`FinCat::from_tables`] followed by [`FinCat::validate`].
    pub fn validated(
        field: PrimeField,
        objects: Vec<String>,
        hom: Vec<Vec<usize>>,
        comp: impl FnMut(usize, usize, usize) -> Vec<Vec<Vec<u32>>>,
        id: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let cat = FinCat::from_tables(field, objects, hom, comp, id)?;
        cat.ensure_valid()?;
        Ok(cat)
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidCategory(format!(
                "{v} ({} violation(s) in total)",
                report.violations.len()
            ))),
        }
    }

    /// The one-object category of a finite-dimensional ring, with
    /// `β ∘ α := β · α`. `mult[i][j]` is the coordinate vector of
    /// `b_i · b_j`.
    pub fn from_ring_table(p: u32, dim: usize, mult: &[Vec<Vec<u32>>], unit: &[u32]) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if mult.len() != dim || mult.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) || unit.len() != dim {
            return Err(Error::DimensionMismatch(format!("ring table is not {dim}x{dim}x{dim}")));
        }
        FinCat::from_tables(
            field,
            vec!["*".into()],
            vec![vec![dim]],
            |_, _, _| {
                // comp[i][j] = β_j ∘ α_i = b_j · b_i
                (0..dim).map(|i| (0..dim).map(|j| mult[j][i].clone()).collect()).collect()
            },
            vec![unit.to_vec()],
        )
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn p(&self) -> u32 {
        self.field.p()
    }
    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }
    pub fn objects(&self) -> &[String] {
        &self.objects
    }
    pub fn object_name(&self, a: usize) -> &str {
        &self.objects[a]
    }
    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    #[inline]
    pub fn hom_dim(&self, a: usize, b: usize) -> usize {
        self.hom[a * self.objects.len() + b]
    }

    pub fn total_hom_dim(&self) -> usize {
        self.hom.iter().sum()
    }

    pub fn identity(&self, a: usize) -> Morphism {
        Morphism::new(a, a, self.id[a].clone())
    }

    pub fn identity_coords(&self, a: usize) -> &[u32] {
        &self.id[a]
    }

    pub fn zero(&self, a: usize, b: usize) -> Morphism {
        Morphism::new(a, b, vec![0; self.hom_dim(a, b)])
    }

    pub fn basis_morphism(&self, a: usize, b: usize, i: usize) -> Morphism {
        let mut c = vec![0; self.hom_dim(a, b)];
        c[i] = 1;
        Morphism::new(a, b, c)
    }

    /// Coordinates of `β_j ∘ α_i`.
    #[inline]
    pub fn basis_product(&self, a: usize, b: usize, c: usize, i: usize, j: usize) -> &[u32] {
        let n = self.objects.len();
        let dbc = self.hom_dim(b, c);
        let dac = self.hom_dim(a, c);
        let t = &self.comp[(a * n + b) * n + c];
        let start = (i * dbc + j) * dac;
        &t[start..start + dac]
    }

    /// `β ∘ α` for `α ∈ A(a,b)`, `β ∈ A(b,c)` in coordinates.
    pub fn compose_coords(&self, a: usize, b: usize, c: usize, alpha: &[u32], beta: &[u32]) -> Vec<u32> {
        let f = self.field;
        let dac = self.hom_dim(a, c);
        let mut out = vec![0u32; dac];
        for (i, &x) in alpha.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in beta.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                f.axpy(&mut out, f.mul(x, y), self.basis_product(a, b, c, i, j));
            }
        }
        out
    }

    /// `β ∘ α`; panics if the morphisms are not composable.
    pub fn compose(&self, beta: &Morphism, alpha: &Morphism) -> Morphism {
        assert_eq!(alpha.tgt, beta.src, "morphisms are not composable");
        Morphism::new(
            alpha.src,
            beta.tgt,
            self.compose_coords(alpha.src, alpha.tgt, beta.tgt, &alpha.coords, &beta.coords),
        )
    }

    pub fn add(&self, x: &Morphism, y: &Morphism) -> Morphism {
        debug_assert_eq!((x.src, x.tgt), (y.src, y.tgt));
        Morphism::new(x.src, x.tgt, self.field.add_vec(&x.coords, &y.coords))
    }

    pub fn sub(&self, x: &Morphism, y: &Morphism) -> Morphism {
        Morphism::new(x.src, x.tgt, self.field.sub_vec(&x.coords, &y.coords))
    }

    /// Matrix of `A(a,b) → A(a,c)`, `α ↦ β ∘ α` for fixed `β ∈ A(b,c)`.
    pub fn post_matrix(&self, a: usize, beta: &Morphism) -> Matrix {
        let (b, c) = (beta.src, beta.tgt);
        let dab = self.hom_dim(a, b);
        let cols: Vec<Vec<u32>> = (0..dab)
            .map(|i| {
                let mut e = vec![0; dab];
                e[i] = 1;
                self.compose_coords(a, b, c, &e, &beta.coords)
            })
            .collect();
        Matrix::from_columns(self.field, self.hom_dim(a, c), &cols)
    }

    /// Matrix of `A(b,c) → A(a,c)`, `β ↦ β ∘ α` for fixed `α ∈ A(a,b)`.
    pub fn pre_matrix(&self, alpha: &Morphism, c: usize) -> Matrix {
        let (a, b) = (alpha.src, alpha.tgt);
        let dbc = self.hom_dim(b, c);
        let cols: Vec<Vec<u32>> = (0..dbc)
            .map(|j| {
                let mut e = vec![0; dbc];
                e[j] = 1;
                self.compose_coords(a, b, c, &alpha.coords, &e)
            })
            .collect();
        Matrix::from_columns(self.field, self.hom_dim(a, c), &cols)
    }

    /// Checks associativity on all basis triples and both identity laws.
    pub fn validate(&self) -> ValidationReport {
        let n = self.num_objects();
        let mut violations = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for i in 0..self.hom_dim(a, b) {
                    let alpha = self.basis_morphism(a, b, i);
                    if self.compose(&self.identity(b), &alpha) != alpha {
                        violations.push(Violation::LeftIdentity { src: a, tgt: b, basis: i });
                    }
                    if self.compose(&alpha, &self.identity(a)) != alpha {
                        violations.push(Violation::RightIdentity { src: a, tgt: b, basis: i });
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let dab = self.hom_dim(a, b);
                if dab == 0 {
                    continue;
                }
                for c in 0..n {
                    let dbc = self.hom_dim(b, c);
                    if dbc == 0 {
                        continue;
                    }
                    for d in 0..n {
                        let dcd = self.hom_dim(c, d);
                        for i in 0..dab {
                            for j in 0..dbc {
                                let ba = self.basis_product(a, b, c, i, j);
                                for k in 0..dcd {
                                    let mut gamma = vec![0; dcd];
                                    gamma[k] = 1;
                                    let left = self.compose_coords(a, c, d, ba, &gamma);
                                    let gb = self.basis_product(b, c, d, j, k);
                                    let mut alpha = vec![0; dab];
                                    alpha[i] = 1;
                                    let right = self.compose_coords(a, b, d, &alpha, gb);
                                    if left != right {
                                        violations.push(Violation::Associativity {
                                            objects: [a, b, c, d],
                                            basis: [i, j, k],
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// The opposite category: `A^op(a,b) = A(b,a)` with `β ∘_op α = α ∘ β`.
    pub fn opposite(&self) -> FinCat {
        let n = self.num_objects();
        let hom = (0..n).map(|a| (0..n).map(|b| self.hom_dim(b, a)).collect()).collect();
        FinCat::from_tables(
            self.field,
            self.objects.clone(),
            hom,
            |a, b, c| {
                // α ∈ A(b,a), β ∈ A(c,b); β ∘_op α = α ∘ β ∈ A(c,a).
                (0..self.hom_dim(b, a))
                    .map(|i| {
                        (0..self.hom_dim(c, b))
                            .map(|j| self.basis_product(c, b, a, j, i).to_vec())
                            .collect()
                    })
                    .collect()
            },
            self.id.clone(),
        )
        .expect("opposite preserves table shapes")
    }

    /// Full subcategory on the listed objects, in that order.
    pub fn full_subcategory(&self, objs: &[usize]) -> FinCat {
        let hom = objs.iter().map(|&a| objs.iter().map(|&b| self.hom_dim(a, b)).collect()).collect();
        FinCat::from_tables(
            self.field,
            objs.iter().map(|&a| self.objects[a].clone()).collect(),
            hom,
            |a, b, c| {
                let (a, b, c) = (objs[a], objs[b], objs[c]);
                (0..self.hom_dim(a, b))
                    .map(|i| (0..self.hom_dim(b, c)).map(|j| self.basis_product(a, b, c, i, j).to_vec()).collect())
                    .collect()
            },
            objs.iter().map(|&a| self.id[a].clone()).collect(),
        )
        .expect("full subcategory preserves table shapes")
    }

    /// All `(a, b, i)` basis morphisms.
    pub fn basis_morphisms(&self) -> impl Iterator<Item = Morphism> + '_ {
        let n = self.num_objects();
        (0..n).flat_map(move |a| {
            (0..n).flat_map(move |b| (0..self.hom_dim(a, b)).map(move |i| self.basis_morphism(a, b, i)))
        })
    }

    /// Is `e ∈ A(a,a)` idempotent?
    pub fn is_idempotent(&self, e: &Morphism) -> bool {
        e.src == e.tgt && self.compose(e, e) == *e
    }

    /// Renames objects; used by constructions that prefix names.
    pub fn with_object_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.objects.len() {
            return Err(Error::DimensionMismatch("object name list".into()));
        }
        self.objects = names;
        Ok(self)
    }
}
