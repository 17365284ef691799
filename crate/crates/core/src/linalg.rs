//! Exact rational linear algebra on sparse vectors and matrices.
//!
//! Subspaces are kept in reduced row-echelon form. The pivot of a vector is
//! its lowest nonzero index, so bases are reproducible regardless of the
//! order in which spanning vectors arrive (up to the RREF normalization).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::Q;

pub type SparseVec = BTreeMap<usize, Q>;

pub fn unit_vec(i: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(i, Q::one());
    v
}

/// `dst += c * src`, dropping entries that cancel.
pub fn axpy(dst: &mut SparseVec, c: &Q, src: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (&i, x) in src {
        let entry = dst.entry(i).or_insert_with(Q::zero);
        *entry += c * x;
        if entry.is_zero() {
            dst.remove(&i);
        }
    }
}

pub fn scale(v: &mut SparseVec, c: &Q) {
    if c.is_zero() {
        v.clear();
    } else {
        for x in v.values_mut() {
            *x *= c;
        }
    }
}

/// A subspace held as RREF rows keyed by pivot column.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Subspace {
    rows: BTreeMap<usize, SparseVec>,
}

impl Subspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn spanned_by<'a>(vectors: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut s = Self::new();
        for v in vectors {
            s.insert(v.clone());
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Subtracts the projection onto the row space; the result is zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        for (p, row) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                axpy(&mut v, &-c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v` to the spanning set. Returns `true` if the dimension grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce(v);
        let Some((&pivot, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        scale(&mut v, &inv);
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &-c, &v);
            }
        }
        self.rows.insert(pivot, v);
        true
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// The RREF basis, in pivot order.
    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Q>> {
        if !self.contains(v) {
            return None;
        }
        Some(
            self.rows
                .keys()
                .map(|p| v.get(p).cloned().unwrap_or_else(Q::zero))
                .collect(),
        )
    }
}

/// Null space of the linear system whose rows are given, over `ncols` unknowns.
/// Basis vectors are indexed by free column in ascending order.
pub fn nullspace<'a>(rows: impl IntoIterator<Item = &'a SparseVec>, ncols: usize) -> Vec<SparseVec> {
    let echelon = Subspace::spanned_by(rows);
    let pivots: Vec<usize> = echelon.pivots().collect();
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| echelon.rows.get(c).is_none()) {
        let mut x = unit_vec(free);
        for p in &pivots {
            if let Some(c) = echelon.rows[p].get(&free) {
                x.insert(*p, -c.clone());
            }
        }
        out.push(x);
    }
    out
}

pub fn rank<'a>(rows: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    Subspace::spanned_by(rows).dim()
}

/// A square-or-rectangular sparse matrix stored by columns.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            cols: vec![SparseVec::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            nrows: n,
            cols: (0..n).map(unit_vec).collect(),
        }
    }

    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.keys().all(|&r| r < nrows)));
        Self { nrows, cols }
    }

    pub fn from_triplets(nrows: usize, ncols: usize, triplets: impl IntoIterator<Item = (usize, usize, Q)>) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        for (r, c, x) in triplets {
            m.add_entry(r, c, &x);
        }
        m
    }

    pub fn diagonal(entries: impl IntoIterator<Item = Q>) -> Self {
        let cols: Vec<SparseVec> = entries
            .into_iter()
            .enumerate()
            .map(|(i, x)| {
                let mut v = SparseVec::new();
                if !x.is_zero() {
                    v.insert(i, x);
                }
                v
            })
            .collect();
        Self { nrows: cols.len(), cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.cols[c].get(&r).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_entry(&mut self, r: usize, c: usize, x: &Q) {
        let mut unit = SparseVec::new();
        unit.insert(r, Q::one());
        axpy(&mut self.cols[c], x, &unit);
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// Nonzero entries as `(row, col, value)`, ordered by row then column.
    pub fn triplets(&self) -> Vec<(usize, usize, Q)> {
        let mut t: Vec<(usize, usize, Q)> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(&r, x)| (r, c, x.clone())))
            .collect();
        t.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        t
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&c, x) in v {
            axpy(&mut out, x, &self.cols[c]);
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), other.nrows, "dimension mismatch in product");
        SparseMatrix {
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add_scaled(&mut self, c: &Q, other: &SparseMatrix) {
        assert_eq!(self.ncols(), other.ncols());
        for (dst, src) in self.cols.iter_mut().zip(&other.cols) {
            axpy(dst, c, src);
        }
    }

    pub fn scaled(&self, c: &Q) -> SparseMatrix {
        let mut m = self.clone();
        for col in &mut m.cols {
            scale(col, c);
        }
        m
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut m = self.mul(other);
        m.add_scaled(&-Q::one(), &other.mul(self));
        m
    }

    pub fn trace(&self) -> Q {
        let mut t = Q::zero();
        for (c, col) in self.cols.iter().enumerate() {
            if let Some(x) = col.get(&c) {
                t += x;
            }
        }
        t
    }

    /// `trace(self·other)` without forming the product.
    pub fn trace_product(&self, other: &SparseMatrix) -> Q {
        let mut t = Q::zero();
        for (c, col) in other.cols.iter().enumerate() {
            for (&k, y) in col {
                if let Some(x) = self.cols[k].get(&c) {
                    t += x * y;
                }
            }
        }
        t
    }

    /// Column-major flattening, used to treat matrices as vectors.
    pub fn flatten(&self) -> SparseVec {
        let mut v = SparseVec::new();
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, x) in col {
                v.insert(c * self.nrows + r, x.clone());
            }
        }
        v
    }

    pub fn unflatten(nrows: usize, ncols: usize, v: &SparseVec) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(nrows, ncols);
        for (&i, x) in v {
            m.cols[i / nrows].insert(i % nrows, x.clone());
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(i, x)| (i, q(x))).collect()
    }

    #[test]
    fn rref_insert_and_membership() {
        let mut s = Subspace::new();
        assert!(s.insert(v(&[(0, 2), (1, 4)])));
        assert!(s.insert(v(&[(1, 1), (2, 1)])));
        assert!(!s.insert(v(&[(0, 1), (1, 3), (2, 1)])));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(&[(0, 1), (2, -2)])));
        assert!(!s.contains(&v(&[(2, 1)])));
        assert_eq!(s.pivots().collect::<Vec<_>>(), vec![0, 1]);
        let coords = s.coordinates(&v(&[(0, 3), (1, 7), (2, 1)])).unwrap();
        assert_eq!(coords, vec![q(3), q(7)]);
    }

    #[test]
    fn nullspace_of_small_system() {
        // x0 + x1 = 0, x2 = 0 over 4 unknowns
        let rows = [v(&[(0, 1), (1, 1)]), v(&[(2, 1)])];
        let ns = nullspace(&rows, 4);
        assert_eq!(ns, vec![v(&[(0, -1), (1, 1)]), v(&[(3, 1)])]);
    }

    #[test]
    fn matrix_products_and_traces() {
        let a = SparseMatrix::from_triplets(2, 2, [(0, 1, q(1))]);
        let b = SparseMatrix::from_triplets(2, 2, [(1, 0, q(1))]);
        let h = a.commutator(&b);
        assert_eq!(h, SparseMatrix::diagonal([q(1), q(-1)]));
        assert_eq!(a.trace_product(&b), q(1));
        assert_eq!(a.mul(&b).trace(), q(1));
        let f = h.flatten();
        assert_eq!(SparseMatrix::unflatten(2, 2, &f), h);
    }
}
