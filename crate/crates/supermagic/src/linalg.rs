//! Dense exact linear algebra over GF(p): reduced row echelon form,
//! kernels, solving, and canonical subspaces.
//!
//! Subspaces are always stored through their reduced-echelon basis, so
//! subspace equality is plain data equality and coordinates relative to a
//! computed basis are pivot reads.

use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
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
            m.set(i, i, 1);
        }
        m
    }

    /// Build from row-major residues already reduced mod p.
    pub fn from_rows(field: PrimeField, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &v in row {
                assert!(v < field.modulus());
                data.push(v);
            }
        }
        Matrix {
            field,
            rows: r,
            cols: c,
            data,
        }
    }

    /// Build from signed integers, reducing mod p.
    pub fn from_i64(field: PrimeField, rows: Vec<Vec<i64>>) -> Self {
        Matrix::from_rows(
            field,
            rows.into_iter()
                .map(|r| r.into_iter().map(|v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
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
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }
    #[inline]
    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, b);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&other.data) {
            *a = f.sub(*a, b);
        }
        out
    }

    pub fn scale(&self, c: Scalar) -> Matrix {
        let f = self.field;
        let mut out = self.clone();
        f.row_scale(&mut out.data, c);
        out
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field);
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a != 0 {
                    f.row_axpy(orow, other.row(k), a);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        let mut out = vec![0; self.rows];
        for i in 0..self.rows {
            let mut acc = 0u32;
            for j in 0..self.cols {
                acc = f.add(acc, f.mul(self.get(i, j), v[j]));
            }
            out[i] = acc;
        }
        out
    }

    /// Reduced row echelon form together with the rank. Idempotent.
    pub fn rref(&self) -> (Matrix, usize) {
        let (m, rank, _) = self.rref_with_pivots();
        (m, rank)
    }

    pub fn rref_with_pivots(&self) -> (Matrix, usize, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c));
            {
                let row = &mut m.data[r * m.cols..(r + 1) * m.cols];
                f.row_scale(row, inv);
            }
            for i in 0..m.rows {
                if i != r {
                    let factor = m.get(i, c);
                    if factor != 0 {
                        let (above, below) = m.data.split_at_mut(r.max(i) * m.cols);
                        let (src, dst) = if i > r {
                            (
                                &above[r * m.cols..(r + 1) * m.cols],
                                &mut below[..m.cols],
                            )
                        } else {
                            (
                                &below[..m.cols],
                                &mut above[i * m.cols..(i + 1) * m.cols],
                            )
                        };
                        f.row_axpy(dst, src, f.neg(factor));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
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
        self.rref().1
    }

    /// Basis of `{v : self * v = 0}` as a canonical subspace of the
    /// column space.
    pub fn kernel_basis(&self) -> Subspace {
        let f = self.field;
        let (r, rank, pivots) = self.rref_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0; self.cols];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate().take(rank) {
                v[pc] = f.neg(r.get(i, fc));
            }
            rows.push(v);
        }
        // Free-column construction already yields a reduced basis up to row
        // order; run rref to get the canonical representative.
        Subspace::from_spanning(&Matrix::from_rows(f, rows), self.cols)
    }

    /// Some solution of `self * x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let f = self.field;
        let mut aug = Matrix::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let (r, rank, pivots) = aug.rref_with_pivots();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (i, &pc) in pivots.iter().enumerate().take(rank) {
            x[pc] = r.get(i, self.cols);
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let f = self.field;
        let n = self.rows;
        let mut aug = Matrix::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, rank, _) = aug.rref_with_pivots();
        if rank < n {
            return None;
        }
        Some(Matrix::from_fn(f, n, n, |i, j| r.get(i, n + j)))
    }
}

/// A subspace of `GF(p)^ambient`, canonically represented by the reduced
/// row echelon basis of its row space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonicalize the row space of `m` as a subspace of `GF(p)^ambient`.
    pub fn from_spanning(m: &Matrix, ambient: usize) -> Self {
        assert!(m.cols() == ambient || m.rows() == 0);
        let (r, rank, pivots) = m.rref_with_pivots();
        let field = m.field();
        let rows: Vec<Vec<Scalar>> = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient,
            basis: if rows.is_empty() {
                Matrix::zeros(field, 0, ambient)
            } else {
                Matrix::from_rows(field, rows)
            },
            pivots,
        }
    }

    pub fn from_vectors(field: PrimeField, ambient: usize, vecs: &[Vec<Scalar>]) -> Self {
        if vecs.is_empty() {
            return Subspace::zero(field, ambient);
        }
        Subspace::from_spanning(&Matrix::from_rows(field, vecs.to_vec()), ambient)
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.dim()).map(move |i| self.basis.row(i))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut rows: Vec<Vec<Scalar>> = self.basis_vectors().map(|r| r.to_vec()).collect();
        rows.extend(other.basis_vectors().map(|r| r.to_vec()));
        Ok(Subspace::from_vectors(self.field(), self.ambient, &rows))
    }

    /// Intersection, via the kernel of the stacked coefficient system.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let f = self.field();
        let (k, m) = (self.dim(), other.dim());
        if k == 0 || m == 0 {
            return Ok(Subspace::zero(f, self.ambient));
        }
        // Columns are (a_1..a_k, b_1..b_m); rows say sum a_i u_i - sum b_j v_j = 0.
        let sys = Matrix::from_fn(f, self.ambient, k + m, |r, c| {
            if c < k {
                self.basis.get(c, r)
            } else {
                f.neg(other.basis.get(c - k, r))
            }
        });
        let ker = sys.kernel_basis();
        let mut vecs = Vec::new();
        for coeffs in ker.basis_vectors() {
            let mut v = vec![0; self.ambient];
            for (i, &a) in coeffs.iter().take(k).enumerate() {
                if a != 0 {
                    f.row_axpy(&mut v, self.basis.row(i), a);
                }
            }
            vecs.push(v);
        }
        Ok(Subspace::from_vectors(f, self.ambient, &vecs))
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    /// With a reduced basis these are just the pivot entries of `v`.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field();
        let coords: Vec<Scalar> = self.pivots.iter().map(|&c| v[c]).collect();
        let mut residual = v.to_vec();
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                f.row_axpy(&mut residual, self.basis.row(i), f.neg(c));
            }
        }
        if residual.iter().all(|&x| x == 0) {
            Some(coords)
        } else {
            None
        }
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspace ambient dimensions {} vs {}",
                self.ambient, other.ambient
            )));
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }
}

/// Incremental row-space reducer for large streamed systems. Keeps at most
/// `ncols` pivot rows in memory regardless of how many equations are pushed.
pub struct RrefAccumulator {
    field: PrimeField,
    ncols: usize,
    // rows sorted by pivot column, each normalized to pivot 1
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RrefAccumulator {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        RrefAccumulator {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce a row against the current pivots and absorb it if independent.
    pub fn push_row(&mut self, mut row: Vec<Scalar>) {
        assert_eq!(row.len(), self.ncols);
        let f = self.field;
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = row[p];
            if c != 0 {
                f.row_axpy(&mut row, &self.rows[i], f.neg(c));
            }
        }
        if let Some(p) = row.iter().position(|&v| v != 0) {
            let inv = f.inv(row[p]);
            f.row_scale(&mut row, inv);
            let at = self.pivots.partition_point(|&q| q < p);
            self.pivots.insert(at, p);
            self.rows.insert(at, row);
        }
    }

    /// Finish into the canonical rref matrix of the accumulated row space.
    pub fn into_rref(mut self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        // Back-substitute: clear pivot columns above every pivot.
        for i in (0..self.rows.len()).rev() {
            let p = self.pivots[i];
            for j in 0..i {
                let c = self.rows[j][p];
                if c != 0 {
                    let (head, tail) = self.rows.split_at_mut(i);
                    f.row_axpy(&mut head[j], &tail[0], f.neg(c));
                }
            }
        }
        let m = if self.rows.is_empty() {
            Matrix::zeros(f, 0, self.ncols)
        } else {
            Matrix::from_rows(f, self.rows)
        };
        (m, self.pivots)
    }

    /// Kernel of the streamed system (same kernel as the accumulated rref).
    pub fn into_kernel(self) -> Subspace {
        let ncols = self.ncols;
        let (m, _) = self.into_rref();
        if m.rows() == 0 {
            return Subspace::full(m.field(), ncols);
        }
        m.kernel_basis()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> PrimeField {
        PrimeField::gf3()
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(gf3(), 2);
        let (r, rank) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 2);
        let z = Matrix::zeros(gf3(), 2, 2);
        let (r, rank) = z.rref();
        assert_eq!(r, z);
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        // det = 1 - 4 = -3 = 0 mod 3
        let m = Matrix::from_i64(gf3(), vec![vec![1, 2], vec![2, 1]]);
        let (_, rank) = m.rref();
        assert_eq!(rank, 1);
    }

    #[test]
    fn rref_idempotent() {
        let m = Matrix::from_i64(gf3(), vec![vec![1, 2, 0], vec![2, 1, 1], vec![0, 0, 2]]);
        let (r1, _) = m.rref();
        let (r2, _) = r1.rref();
        assert_eq!(r1, r2);
    }

    #[test]
    fn kernel_examples() {
        let m = Matrix::from_i64(gf3(), vec![vec![1, 2], vec![2, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[1, 1]));

        let id = Matrix::identity(gf3(), 2);
        assert_eq!(id.kernel_basis().dim(), 0);

        let z = Matrix::zeros(gf3(), 2, 2);
        assert_eq!(z.kernel_basis(), Subspace::full(gf3(), 2));
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(gf3(), 2);
        assert_eq!(id.solve(&[2, 1]), Some(vec![2, 1]));

        let m = Matrix::from_i64(gf3(), vec![vec![1, 2], vec![2, 1]]);
        let x = m.solve(&[0, 0]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![0, 0]);
        // (1,0) is not in the column space: columns span multiples of (1,2).
        assert_eq!(m.solve(&[1, 0]), None);
    }

    #[test]
    fn subspace_ops_examples() {
        let f = gf3();
        let e1 = Subspace::from_vectors(f, 2, &[vec![1, 0]]);
        let e2 = Subspace::from_vectors(f, 2, &[vec![0, 1]]);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(f, 2));
        assert_eq!(e1.intersect(&e1).unwrap(), e1);
        assert_eq!(e1.intersect(&e2).unwrap().dim(), 0);
        assert!(e1.sum(&e2).unwrap().contains(&[1, 2]));
    }

    #[test]
    fn ambient_mismatch_rejected() {
        let f = gf3();
        let a = Subspace::from_vectors(f, 2, &[vec![1, 0]]);
        let b = Subspace::from_vectors(f, 3, &[vec![0, 1, 0]]);
        assert!(a.sum(&b).is_err());
    }

    #[test]
    fn accumulator_matches_direct_kernel() {
        let f = gf3();
        let m = Matrix::from_i64(
            f,
            vec![
                vec![1, 2, 0, 1],
                vec![2, 1, 1, 0],
                vec![0, 0, 2, 2],
                vec![1, 2, 2, 0],
                vec![2, 1, 0, 1],
            ],
        );
        let mut acc = RrefAccumulator::new(f, 4);
        for i in 0..m.rows() {
            acc.push_row(m.row(i).to_vec());
        }
        assert_eq!(acc.into_kernel(), m.kernel_basis());
    }

    #[test]
    fn inverse_round_trip() {
        let f = PrimeField::new(5).unwrap();
        let m = Matrix::from_i64(f, vec![vec![1, 2, 0], vec![0, 1, 4], vec![3, 0, 2]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), Matrix::identity(f, 3));
    }
}
