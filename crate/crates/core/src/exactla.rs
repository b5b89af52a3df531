//! Dense linear algebra over prime fields `F_p`.
//!
//! Every hom-space, module component and action matrix in the crate lives
//! here. Vectors are plain `Vec<u32>` of residues in `0..p`; matrices are
//! row-major. A [`Subspace`] always stores its reduced row-echelon basis, so
//! two subspaces of the same ambient space are equal exactly when their
//! stored bases are identical.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// A prime field `F_p`. The modulus is checked on construction and kept
/// below `2^16` so that products of residues fit in a `u32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || p >= 1 << 16 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    /// Inverse of a nonzero residue, by Fermat.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a % self.p != 0, "inverse of zero in F_{}", self.p);
        let mut result = 1u32;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// `acc += c * v` coordinatewise.
    pub fn axpy(self, acc: &mut [u32], c: u32, v: &[u32]) {
        if c == 0 {
            return;
        }
        for (a, &x) in acc.iter_mut().zip(v) {
            *a = (*a + c * x) % self.p;
        }
    }

    pub fn scale(self, c: u32, v: &[u32]) -> Vec<u32> {
        v.iter().map(|&x| self.mul(c, x)).collect()
    }

    pub fn add_vec(self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn sub_vec(self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Iterator over every vector of `F_p^n` in lexicographic order with the
/// last coordinate varying fastest.
pub struct AllVectors {
    p: u32,
    cur: Option<Vec<u32>>,
}

impl Iterator for AllVectors {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.cur.clone()?;
        let cur = self.cur.as_mut().unwrap();
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < self.p {
                break;
            }
            cur[i] = 0;
        }
        Some(out)
    }
}

pub fn all_vectors(field: PrimeField, n: usize) -> AllVectors {
    AllVectors {
        p: field.p(),
        cur: Some(vec![0; n]),
    }
}

/// `F_p^n` element count, checked against the vector cap.
pub fn all_vectors_capped(field: PrimeField, n: usize, what: &str, limits: &Limits) -> Result<AllVectors> {
    limits.check_vectors(what, field.p(), n)?;
    Ok(all_vectors(field, n))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[F_{}; {}x{}]", self.field.p(), self.rows, self.cols)?;
        let mut l = f.debug_list();
        for r in 0..self.rows {
            l.entry(&self.row(r));
        }
        l.finish()
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from rows; entries are reduced mod `p`. `cols` is
    /// needed when there are no rows.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has length {} but the matrix has {cols} columns",
                    r.len()
                )));
            }
            data.extend(r.iter().map(|&x| x % field.p()));
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_flat(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let data = data.into_iter().map(|x| x % field.p()).collect();
        Ok(Matrix { field, rows, cols, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for i in 0..rows {
                m.data[i * m.cols + j] = c[i] % field.p();
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.p();
    }
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul_unchecked(other))
    }

    /// Product without the shape check; panics on mismatch in debug builds.
    pub fn mul_unchecked(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.cols, other.rows);
        let p = self.field.p() as u64;
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (x, &b) in acc.iter_mut().zip(orow) {
                    *x += a * b as u64;
                }
            }
            for j in 0..other.cols {
                out.data[i * other.cols + j] = (acc[j] % p) as u32;
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.field.add_vec(&self.data, &other.data),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix difference".into()));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.field.sub_vec(&self.data, &other.data),
        })
    }

    pub fn scale(&self, c: u32) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.field.scale(c, &self.data),
        }
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        debug_assert_eq!(v.len(), self.cols);
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|i| {
                let s: u64 = self.row(i).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum();
                (s % p) as u32
            })
            .collect()
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        m.paste(0, 0, self);
        m.paste(self.rows, self.cols, other);
        m
    }

    /// Overwrites the block starting at `(r0, c0)` with `block`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = block.get(i, j);
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = self.get(r0 + i, c0 + j);
            }
        }
        m
    }

    /// Reduced row-echelon form with zero rows dropped, plus pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(pr) = (r..a.rows).find(|&i| a.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..a.cols {
                    a.data.swap(pr * a.cols + j, r * a.cols + j);
                }
            }
            let inv = f.inv(a.get(r, c));
            for j in 0..a.cols {
                let v = f.mul(a.get(r, j), inv);
                a.data[r * a.cols + j] = v;
            }
            let pivot_row = a.row(r).to_vec();
            for i in 0..a.rows {
                if i != r {
                    let factor = a.get(i, c);
                    if factor != 0 {
                        let neg = f.neg(factor);
                        let start = i * a.cols;
                        f.axpy(&mut a.data[start..start + a.cols], neg, &pivot_row);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        a.data.truncate(r * a.cols);
        a.rows = r;
        (a, pivots)
    }

    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        aug.paste(0, 0, self);
        aug.paste(0, n, &Matrix::identity(self.field, n));
        let (r, piv) = aug.rref_with_pivots();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }
}

/// A subspace of `F_p^n`, stored as its reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}: {:?})", self.dim(), self.ambient, self.basis.to_rows())
    }
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
        }
    }

    /// The span of the rows of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        Subspace {
            ambient: m.cols(),
            basis: m.rref(),
        }
    }

    pub fn span(field: PrimeField, ambient: usize, vectors: &[Vec<u32>]) -> Result<Self> {
        Ok(Subspace::row_space(&Matrix::from_rows(field, ambient, vectors)?))
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.to_rows()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// Pivot columns of the canonical basis.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| self.basis.row(i).iter().position(|&x| x != 0).unwrap())
            .collect()
    }

    /// Reduces `v` modulo the subspace; the result is the canonical coset
    /// representative (zero in every pivot column).
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut w = v.to_vec();
        for (i, c) in self.pivots().into_iter().enumerate() {
            let x = w[c];
            if x != 0 {
                f.axpy(&mut w, f.neg(x), self.basis.row(i));
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: v.len(),
            });
        }
        Ok(self.reduce(v).iter().all(|&x| x == 0))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok((0..other.dim()).all(|i| self.reduce(other.basis.row(i)).iter().all(|&x| x == 0)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(self.field(), self.ambient, &rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        // Zassenhaus: rref of [[U, U], [V, 0]]; rows with zero left half give U ∩ V.
        let n = self.ambient;
        let f = self.field();
        let mut rows = Vec::new();
        for r in self.basis_vectors() {
            let mut x = r.clone();
            x.extend(r);
            rows.push(x);
        }
        for r in other.basis_vectors() {
            let mut x = r;
            x.extend(std::iter::repeat(0).take(n));
            rows.push(x);
        }
        let m = Matrix::from_rows(f, 2 * n, &rows)?.rref();
        let inter: Vec<Vec<u32>> = (0..m.rows())
            .filter(|&i| m.row(i)[..n].iter().all(|&x| x == 0))
            .map(|i| m.row(i)[n..].to_vec())
            .collect();
        Subspace::span(f, n, &inter)
    }

    /// Coordinates of `v` (which must lie in the subspace) with respect to
    /// the canonical basis.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let coords: Vec<u32> = self.pivots().iter().map(|&c| v[c]).collect();
        let f = self.field();
        let mut w = vec![0; self.ambient];
        for (i, &c) in coords.iter().enumerate() {
            f.axpy(&mut w, c, self.basis.row(i));
        }
        (w == v).then_some(coords)
    }

    /// Image of the subspace under `m` acting on column vectors.
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch("subspace image".into()));
        }
        let imgs: Vec<Vec<u32>> = self.basis_vectors().iter().map(|v| m.apply(v)).collect();
        Subspace::span(self.field(), m.rows(), &imgs)
    }

    /// `{v : m v ∈ self}`.
    pub fn preimage_under(&self, m: &Matrix) -> Result<Subspace> {
        if m.rows() != self.ambient {
            return Err(Error::DimensionMismatch("subspace preimage".into()));
        }
        // v ↦ m v mod self; kernel of the quotient map.
        let q = self.quotient_map();
        kernel_basis(&q.mul_unchecked(m))
    }

    /// Matrix of the projection `F_p^n → F_p^n / self` in the coordinates of
    /// the non-pivot columns.
    pub fn quotient_map(&self) -> Matrix {
        let f = self.field();
        let pivots = self.pivots();
        let free: Vec<usize> = (0..self.ambient).filter(|c| !pivots.contains(c)).collect();
        let mut q = Matrix::zeros(f, free.len(), self.ambient);
        for j in 0..self.ambient {
            let mut e = vec![0; self.ambient];
            e[j] = 1;
            let r = self.reduce(&e);
            for (i, &c) in free.iter().enumerate() {
                q.set(i, j, r[c]);
            }
        }
        q
    }

    /// Every vector in the subspace, capped.
    pub fn elements(&self, limits: &Limits) -> Result<Vec<Vec<u32>>> {
        let f = self.field();
        let coeffs = all_vectors_capped(f, self.dim(), "subspace elements", limits)?;
        Ok(coeffs
            .map(|c| {
                let mut w = vec![0; self.ambient];
                for (i, &x) in c.iter().enumerate() {
                    f.axpy(&mut w, x, self.basis.row(i));
                }
                w
            })
            .collect())
    }
}

/// Reduced row-echelon form of `m`.
pub fn rref(m: &Matrix) -> Matrix {
    m.rref()
}

/// Null space `{v : m v = 0}` as a subspace of `F_p^{cols}`.
pub fn kernel_basis(m: &Matrix) -> Result<Subspace> {
    let f = m.field();
    let (r, pivots) = m.rref_with_pivots();
    let n = m.cols();
    let mut vecs = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0; n];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(r.get(i, free));
        }
        vecs.push(v);
    }
    Subspace::span(f, n, &vecs)
}

/// Column space of `m` as a subspace of `F_p^{rows}`.
pub fn image_basis(m: &Matrix) -> Result<Subspace> {
    Ok(Subspace::row_space(&m.transpose()))
}

/// Some solution `x` of `m x = v`, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, v: &[u32]) -> Result<Option<Vec<u32>>> {
    if v.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has length {} for a matrix with {} rows",
            v.len(),
            m.rows()
        )));
    }
    let f = m.field();
    let n = m.cols();
    let mut aug = Matrix::zeros(f, m.rows(), n + 1);
    aug.paste(0, 0, m);
    for (i, &x) in v.iter().enumerate() {
        aug.set(i, n, x);
    }
    let (r, pivots) = aug.rref_with_pivots();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![0; n];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = r.get(i, n);
    }
    Ok(Some(x))
}

pub fn subspace_sum(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    u.sum(v)
}

pub fn subspace_intersect(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    u.intersect(v)
}

pub fn contains(u: &Subspace, v: &[u32]) -> Result<bool> {
    u.contains(v)
}

/// Every subspace of `F_p^n`, each exactly once, ordered by dimension and
/// then by canonical basis.
///
/// Refused when `p^n` exceeds the vector cap.
pub fn enumerate_subspaces(field: PrimeField, n: usize, limits: &Limits) -> Result<Vec<Subspace>> {
    limits.check_vectors("subspace enumeration", field.p(), n)?;
    let mut out = Vec::new();
    for k in 0..=n {
        // Each RREF k×n matrix is a pivot set plus free entries to the right
        // of each pivot in non-pivot columns.
        for pivots in combinations(n, k) {
            let mut slots = Vec::new();
            for (i, &pc) in pivots.iter().enumerate() {
                for c in pc + 1..n {
                    if !pivots.contains(&c) {
                        slots.push((i, c));
                    }
                }
            }
            for fill in all_vectors(field, slots.len()) {
                let mut m = Matrix::zeros(field, k, n);
                for (i, &pc) in pivots.iter().enumerate() {
                    m.set(i, pc, 1);
                }
                for (&(i, c), &x) in slots.iter().zip(&fill) {
                    m.set(i, c, x);
                }
                out.push(Subspace { ambient: n, basis: m });
            }
        }
    }
    out.sort();
    Ok(out)
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn rref_small_cases() {
        let z = Matrix::zeros(f(2), 3, 3);
        assert_eq!(rref(&z).rows(), 0);
        let i = Matrix::identity(f(3), 3);
        assert_eq!(rref(&i), i);
        let m = Matrix::from_rows(f(2), 2, &[vec![1, 1], vec![1, 0]]).unwrap();
        assert_eq!(rref(&m), Matrix::identity(f(2), 2));
    }

    #[test]
    fn kernel_and_image_examples() {
        let zero = Matrix::zeros(f(2), 1, 3);
        assert_eq!(kernel_basis(&zero).unwrap().dim(), 3);
        let id = Matrix::identity(f(2), 4);
        assert!(image_basis(&id).unwrap().is_full());
        let m = Matrix::from_rows(f(3), 2, &[vec![1, 2]]).unwrap();
        let k = kernel_basis(&m).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis_vectors(), vec![vec![1, 1]]);
    }

    #[test]
    fn solve_and_mismatch() {
        let m = Matrix::from_rows(f(5), 2, &[vec![1, 2], vec![0, 1]]).unwrap();
        let x = solve(&m, &[3, 4]).unwrap().unwrap();
        assert_eq!(m.apply(&x), vec![3, 4]);
        let sing = Matrix::from_rows(f(5), 2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(solve(&sing, &[1, 2]).unwrap(), None);
        assert!(matches!(solve(&m, &[1]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn sum_and_intersection() {
        let x = Subspace::span(f(2), 2, &[vec![1, 0]]).unwrap();
        let y = Subspace::span(f(2), 2, &[vec![0, 1]]).unwrap();
        assert!(x.sum(&y).unwrap().is_full());
        assert!(x.intersect(&y).unwrap().is_zero());
        assert_eq!(x.sum(&Subspace::zero(f(2), 2)).unwrap(), x);
        assert_eq!(x.intersect(&x).unwrap(), x);
        let other = Subspace::zero(f(2), 3);
        assert!(matches!(x.sum(&other), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn subspace_enumeration_counts() {
        let l = Limits::default();
        assert_eq!(enumerate_subspaces(f(2), 0, &l).unwrap().len(), 1);
        assert_eq!(enumerate_subspaces(f(2), 2, &l).unwrap().len(), 5);
        assert_eq!(enumerate_subspaces(f(3), 2, &l).unwrap().len(), 6);
        let tight = Limits { vectors: 8, ..Limits::default() };
        assert!(matches!(
            enumerate_subspaces(f(2), 4, &tight),
            Err(Error::CapExceeded { cap: 8, .. })
        ));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(f(3), 2, &[vec![1, 2], vec![1, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f(3), 2));
        let s = Matrix::from_rows(f(3), 2, &[vec![1, 2], vec![2, 1]]).unwrap();
        assert!(s.inverse().is_none());
    }

    #[test]
    fn preimage_and_quotient() {
        let fld = f(2);
        let u = Subspace::span(fld, 3, &[vec![1, 1, 0]]).unwrap();
        let q = u.quotient_map();
        assert_eq!(q.rows(), 2);
        assert!(q.apply(&[1, 1, 0]).iter().all(|&x| x == 0));
        let m = Matrix::identity(fld, 3);
        assert_eq!(u.preimage_under(&m).unwrap(), u);
    }
}
