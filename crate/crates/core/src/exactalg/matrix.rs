//! Dense exact matrices, row reduction, kernels and canonical subspaces.

use std::fmt;

use super::scalar::{FieldTag, Scalar};
use crate::error::{Error, Result};

/// A dense row-major matrix over one exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    tag: FieldTag,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(tag: FieldTag, rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, tag, data: vec![Scalar::zero(tag); rows * cols] }
    }

    pub fn identity(tag: FieldTag, n: usize) -> Self {
        let mut m = ExactMatrix::zeros(tag, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(tag));
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(tag: FieldTag, cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            for x in r {
                debug_assert_eq!(x.tag(), tag);
                data.push(x.clone());
            }
        }
        ExactMatrix { rows: rows.len(), cols, tag, data }
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_cols(tag: FieldTag, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = ExactMatrix::zeros(tag, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_ints(tag: FieldTag, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.iter().map(|&k| Scalar::from_int(tag, k)).collect()).collect();
        ExactMatrix::from_rows(tag, cols, &rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zeros(self.tag, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = ExactMatrix::zeros(self.tag, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero(self.tag);
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        ExactMatrix { rows: self.rows, cols: self.cols, tag: self.tag, data }
    }

    pub fn neg(&self) -> ExactMatrix {
        let data = self.data.iter().map(|a| -a).collect();
        ExactMatrix { rows: self.rows, cols: self.cols, tag: self.tag, data }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse of a square nonsingular matrix.
    pub fn inverse(&self) -> Option<ExactMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = ExactMatrix::zeros(self.tag, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one(self.tag));
        }
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = ExactMatrix::zeros(self.tag, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A linear subspace stored by its canonical basis: the nonzero rows of the
/// reduced row echelon form of any spanning set. Two subspaces are equal as
/// point sets iff their canonical bases are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    tag: FieldTag,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(tag: FieldTag, ambient: usize) -> Self {
        Subspace { ambient, tag, basis: Vec::new() }
    }

    pub fn full(tag: FieldTag, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| (0..ambient).map(|j| Scalar::from_int(tag, (i == j) as i64)).collect())
            .collect();
        Subspace { ambient, tag, basis }
    }

    /// The span of arbitrary vectors, canonicalised.
    pub fn span(tag: FieldTag, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(tag, ambient);
        }
        let m = ExactMatrix::from_rows(tag, ambient, vectors);
        let (r, piv) = m.rref();
        let basis = (0..piv.len()).map(|i| r.row(i)).collect();
        Subspace { ambient, tag, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Whether `v` lies in the subspace.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // reduce v against the rref rows using their pivots
        let mut w = v.to_vec();
        for row in &self.basis {
            let p = row.iter().position(|x| !x.is_zero()).expect("zero basis row");
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (wj, rj) in w.iter_mut().zip(row) {
                *wj = &*wj - &(&f * rj);
            }
        }
        w.iter().all(Scalar::is_zero)
    }

    /// Vectors `y` with `b·y = 0` for every basis vector `b` (coordinate dot product).
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.tag, self.ambient);
        }
        mat_kernel(&ExactMatrix::from_rows(self.tag, self.ambient, &self.basis))
    }

    /// Retags every coordinate into a (wider) field.
    pub fn promote(&self, tag: FieldTag) -> Subspace {
        let basis = self.basis.iter().map(|v| v.iter().map(|x| x.promote(tag)).collect()).collect();
        Subspace { ambient: self.ambient, tag, basis }
    }
}

/// The null space of `m`, in canonical form. Its dimension is `cols − rank`.
pub fn mat_kernel(m: &ExactMatrix) -> Subspace {
    let (r, piv) = m.rref();
    let n = m.cols();
    let tag = m.tag();
    let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
    let mut vecs = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Scalar::zero(tag); n];
        v[f] = Scalar::one(tag);
        for (i, &p) in piv.iter().enumerate() {
            v[p] = -r.get(i, f);
        }
        vecs.push(v);
    }
    Subspace::span(tag, n, &vecs)
}

/// Canonical basis of `a ∩ b`.
pub fn subspace_intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch { left: a.ambient, right: b.ambient });
    }
    let tag = a.tag.join(b.tag);
    let (a, b) = (a.promote(tag), b.promote(tag));
    let mut rows: Vec<Vec<Scalar>> = a.annihilator().basis;
    rows.extend(b.annihilator().basis);
    if rows.is_empty() {
        return Ok(Subspace::full(tag, a.ambient));
    }
    Ok(mat_kernel(&ExactMatrix::from_rows(tag, a.ambient, &rows)))
}

/// Partition-lattice order: `a ≤ b` iff `b ⊆ a` as point sets.
pub fn subspace_leq(a: &Subspace, b: &Subspace) -> bool {
    assert_eq!(a.ambient, b.ambient, "ambient dimension mismatch");
    let tag = a.tag.join(b.tag);
    let a = a.promote(tag);
    b.basis.iter().all(|v| {
        let v: Vec<Scalar> = v.iter().map(|x| x.promote(tag)).collect();
        a.contains(&v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    const Q: FieldTag = FieldTag::Rational;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(Q, x)).collect()
    }

    #[test]
    fn kernel_of_zero_and_trivial_maps() {
        assert_eq!(mat_kernel(&ExactMatrix::zeros(Q, 2, 2)), Subspace::full(Q, 2));
        let i3 = ExactMatrix::identity(Q, 3);
        assert_eq!(mat_kernel(&i3.sub(&i3)).dim(), 3);
        assert_eq!(mat_kernel(&i3).dim(), 0);
    }

    #[test]
    fn kernel_of_a2_reflection_minus_identity() {
        // s_1 in the simple-root basis of A2: a1 -> -a1, a2 -> a1 + a2
        let s1 = ExactMatrix::from_ints(Q, &[&[-1, 1], &[0, 1]]);
        let k = mat_kernel(&s1.sub(&ExactMatrix::identity(Q, 2)));
        assert_eq!(k.dim(), 1);
        // oracle: elimination by hand, -2x + y = 0
        assert_eq!(k, Subspace::span(Q, 2, &[v(&[1, 2])]));
    }

    #[test]
    fn intersections() {
        let x = Subspace::span(Q, 2, &[v(&[1, 0])]);
        let y = Subspace::span(Q, 2, &[v(&[0, 1])]);
        assert_eq!(subspace_intersect(&x, &y).unwrap().dim(), 0);
        assert_eq!(subspace_intersect(&x, &x).unwrap(), x);
        let h1 = mat_kernel(&ExactMatrix::from_ints(Q, &[&[1, -1, 0]]));
        let h2 = mat_kernel(&ExactMatrix::from_ints(Q, &[&[0, 1, -1]]));
        let line = subspace_intersect(&h1, &h2).unwrap();
        assert_eq!(line, Subspace::span(Q, 3, &[v(&[1, 1, 1])]));
        let bad = Subspace::full(Q, 3);
        assert!(subspace_intersect(&x, &bad).is_err());
    }

    #[test]
    fn containment_order() {
        let full = Subspace::full(Q, 3);
        let line = Subspace::span(Q, 3, &[v(&[1, 1, 0])]);
        let plane = Subspace::span(Q, 3, &[v(&[1, 0, 0]), v(&[0, 0, 1])]);
        assert!(subspace_leq(&full, &line));
        assert!(!subspace_leq(&plane, &line));
        assert!(!subspace_leq(&line, &full));
    }

    #[test]
    fn canonical_bases_coincide() {
        let a = Subspace::span(Q, 3, &[v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let b = Subspace::span(Q, 3, &[v(&[1, 3, 4]), v(&[2, 5, 7])]);
        assert_eq!(a, b);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = ExactMatrix::from_ints(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), ExactMatrix::identity(Q, 2));
        assert!(ExactMatrix::from_ints(Q, &[&[1, 1], &[1, 1]]).inverse().is_none());
    }
}
