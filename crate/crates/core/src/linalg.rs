//! Exact sparse linear algebra over the rationals.
//!
//! Vectors are sorted `(index, value)` lists with no stored zeros. Matrices
//! are stored by column, so column `j` is the image of the `j`-th basis
//! vector; this is the natural layout for action matrices of module elements.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::rational::Q;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SparseVec {
    entries: Vec<(usize, Q)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self {
            entries: vec![(i, Q::one())],
        }
    }

    /// Builds a vector from unsorted pairs, summing duplicates and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Q)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (i, x) in pairs {
            *acc.entry(i).or_insert_with(Q::zero) += x;
        }
        Self {
            entries: acc.into_iter().filter(|(_, x)| !x.is_zero()).collect(),
        }
    }

    pub fn from_dense(v: &[Q]) -> Self {
        Self {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); dim];
        for (i, x) in &self.entries {
            out[*i] = x.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Q)> {
        self.entries.iter()
    }

    pub fn leading(&self) -> Option<&(usize, Q)> {
        self.entries.first()
    }

    pub fn get(&self, i: usize) -> Q {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self {
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Q, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => out.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, y) = b.next().unwrap();
                    out.push((*j, c * y));
                }
                (Some(_), Some(_)) => {
                    let (i, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = x + c * y;
                    if !s.is_zero() {
                        out.push((i, s));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, y) = b.next().unwrap();
                    out.push((*j, c * y));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.axpy(&Q::one(), other);
        out
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.axpy(&-Q::one(), other);
        out
    }

    pub fn dot(&self, other: &SparseVec) -> Q {
        let mut acc = Q::zero();
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            let (a, x) = &self.entries[i];
            let (b, y) = &other.entries[j];
            match a.cmp(b) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += x * y;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Re-indexes entries through `f`; entries mapped to `None` are dropped.
    pub fn remap<F: Fn(usize) -> Option<usize>>(&self, f: F) -> SparseVec {
        SparseVec::from_pairs(
            self.entries
                .iter()
                .filter_map(|(i, x)| f(*i).map(|j| (j, x.clone()))),
        )
    }
}

impl FromIterator<(usize, Q)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Q)>>(iter: T) -> Self {
        SparseVec::from_pairs(iter)
    }
}

/// Column-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            cols: vec![SparseVec::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            nrows: n,
            cols: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols
            .iter()
            .all(|c| c.iter().all(|(i, _)| *i < nrows)));
        Self { nrows, cols }
    }

    pub fn from_dense_rows(rows: &[Vec<Q>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let cols = (0..ncols)
            .map(|j| SparseVec::from_pairs((0..nrows).map(|i| (i, rows[i][j].clone()))))
            .collect();
        Self { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.cols[j].get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::nnz).sum()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, x) in v.iter() {
            out.axpy(x, &self.cols[*j]);
        }
        out
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), other.nrows, "matrix product shape");
        SparseMatrix {
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> SparseMatrix {
        SparseMatrix {
            nrows: self.nrows,
            cols: self.cols.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Q, other: &SparseMatrix) {
        assert_eq!(self.ncols(), other.ncols());
        for (a, b) in self.cols.iter_mut().zip(&other.cols) {
            a.axpy(c, b);
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = self.clone();
        out.axpy(&Q::one(), other);
        out
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = self.clone();
        out.axpy(&-Q::one(), other);
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, Q)>> = vec![Vec::new(); self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.iter() {
                cols[*i].push((j, x.clone()));
            }
        }
        SparseMatrix {
            nrows: self.ncols(),
            cols: cols.into_iter().map(SparseVec::from_pairs).collect(),
        }
    }

    /// Rows of the matrix as sparse vectors.
    pub fn rows(&self) -> Vec<SparseVec> {
        self.transpose().cols
    }

    /// Restriction to the given columns (in order) and rows (renumbered in order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> SparseMatrix {
        let mut row_pos = vec![None; self.nrows];
        for (k, r) in rows.iter().enumerate() {
            row_pos[*r] = Some(k);
        }
        SparseMatrix {
            nrows: rows.len(),
            cols: cols
                .iter()
                .map(|&j| self.cols[j].remap(|i| row_pos[i]))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.nrows);
        for c in &self.cols {
            ech.insert(c.clone());
        }
        ech.rank()
    }

    /// Basis of `{v : self * v = 0}`.
    pub fn kernel(&self) -> Vec<SparseVec> {
        kernel_of_rows(&self.rows(), self.ncols())
    }

    /// Basis of the column space.
    pub fn image(&self) -> Echelon {
        let mut ech = Echelon::new(self.nrows);
        for c in &self.cols {
            ech.insert(c.clone());
        }
        ech
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &SparseMatrix) -> SparseMatrix {
        let shift = self.nrows;
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().map(|c| c.remap(|i| Some(i + shift))));
        SparseMatrix {
            nrows: self.nrows + other.nrows,
            cols,
        }
    }

    /// Kronecker product with index `i * other.dim + j`.
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let (r2, c2) = (other.nrows, other.ncols());
        let mut cols = Vec::with_capacity(self.ncols() * c2);
        for a in &self.cols {
            for b in &other.cols {
                cols.push(SparseVec::from_pairs(a.iter().flat_map(|(i, x)| {
                    b.iter().map(move |(k, y)| (i * r2 + k, x * y))
                })));
            }
        }
        SparseMatrix {
            nrows: self.nrows * r2,
            cols,
        }
    }
}

/// Incrementally built echelon basis of a subspace of `Q^dim`.
///
/// Every stored row has a leading entry equal to one at its pivot, and no two
/// rows share a pivot. `reduce` eliminates every pivot coordinate, so the
/// reduced vector lives on the non-pivot coordinates: this is the projection
/// onto the standard complement used for quotients.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<SparseVec>,
    pivots: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn from_vectors<I: IntoIterator<Item = SparseVec>>(dim: usize, vs: I) -> Self {
        let mut e = Self::new(dim);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.pivots.contains_key(&i)
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut pos = 0;
        while pos < v.entries.len() {
            let (idx, coeff) = v.entries[pos].clone();
            match self.pivots.get(&idx) {
                Some(&r) => v.axpy(&-coeff, &self.rows[r]),
                None => pos += 1,
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns whether the span grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(&v);
        let Some((p, lead)) = r.leading().cloned() else {
            return false;
        };
        let row = r.scale(&(Q::one() / lead));
        self.pivots.insert(p, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Reduced row echelon rows, sorted by pivot.
    pub fn rref_rows(&self) -> Vec<SparseVec> {
        self.pivots
            .iter()
            .map(|(&p, &r)| {
                let mut tail = self.rows[r].clone();
                tail.axpy(&-Q::one(), &SparseVec::unit(p));
                let mut row = self.reduce(&tail);
                row.axpy(&Q::one(), &SparseVec::unit(p));
                row
            })
            .collect()
    }

    /// Basis of the orthogonal complement `{v : row . v = 0 for every row}`.
    pub fn annihilator(&self) -> Vec<SparseVec> {
        let rref = self.rref_rows();
        let pivots: Vec<usize> = self.pivots.keys().copied().collect();
        (0..self.dim)
            .filter(|f| !self.pivots.contains_key(f))
            .map(|f| {
                let mut pairs = vec![(f, Q::one())];
                for (row, &p) in rref.iter().zip(&pivots) {
                    let c = row.get(f);
                    if !c.is_zero() {
                        pairs.push((p, -c));
                    }
                }
                SparseVec::from_pairs(pairs)
            })
            .collect()
    }

    pub fn intersects_trivially(&self, other: &Echelon) -> bool {
        let mut e = self.clone();
        other.rows.iter().all(|r| e.insert(r.clone()))
    }
}

/// Kernel of the matrix whose rows are given.
pub fn kernel_of_rows(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    Echelon::from_vectors(ncols, rows.iter().cloned()).annihilator()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rank_and_kernel() {
        let a = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ker = a.kernel();
        assert_eq!(ker.len(), 1);
        assert!(a.apply(&ker[0]).is_zero());
    }

    #[test]
    fn reduce_projects_to_complement() {
        let mut e = Echelon::new(3);
        e.insert(SparseVec::from_dense(&[q(0), q(2), q(2)]));
        let r = e.reduce(&SparseVec::from_dense(&[q(1), q(1), q(0)]));
        assert_eq!(r, SparseVec::from_dense(&[q(1), q(0), q(-1)]));
        assert!(!r.iter().any(|(i, _)| e.is_pivot(*i)));
    }

    #[test]
    fn rref_rows_are_reduced() {
        let e = Echelon::from_vectors(
            3,
            [
                SparseVec::from_dense(&[q(1), q(1), q(1)]),
                SparseVec::from_dense(&[q(0), q(1), q(2)]),
            ],
        );
        let rr = e.rref_rows();
        assert_eq!(rr[0], SparseVec::from_dense(&[q(1), q(0), q(-1)]));
        assert_eq!(rr[1], SparseVec::from_dense(&[q(0), q(1), q(2)]));
    }

    #[test]
    fn kron_and_mul() {
        let a = dense(&[&[0, 1], &[0, 0]]);
        let b = dense(&[&[2, 0], &[0, 3]]);
        let k = a.kron(&b);
        assert_eq!(k.get(0, 2), q(2));
        assert_eq!(k.get(1, 3), q(3));
        assert_eq!(a.mul(&a), SparseMatrix::zero(2, 2));
        let h = dense(&[&[1, 0], &[0, -1]]).scale(&q_frac(1, 2));
        assert_eq!(h.get(1, 1), q_frac(-1, 2));
    }
}
