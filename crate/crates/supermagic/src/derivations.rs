//! Derivation solvers and spans of operators on a superalgebra.
//!
//! An [`OperatorSpan`] is a canonical (reduced-echelon) basis of a subspace
//! of `End(A)` whose elements are parity-homogeneous. Spans that are closed
//! under the graded commutator can be converted into abstract Lie
//! superalgebras with structure constants, which is how `der J`, `str J`,
//! and the triality algebras become first-class algebra values.

use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use crate::linalg::{Matrix, RrefAccumulator, Subspace};
use crate::superalgebra::{AlgebraKind, StructureBuilder, SuperAlgebra};
use crate::superspace::{homogeneous_parity, Parity, SuperSpace};

/// A parity-graded subspace of `End(V)` for a super space `V`, stored as the
/// reduced-echelon basis of vectorized matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorSpan {
    space: SuperSpace,
    sub: Subspace,
    parities: Vec<Parity>,
}

pub fn vectorize(m: &Matrix) -> Vec<Scalar> {
    m.data().to_vec()
}

pub fn unvectorize(field: PrimeField, n: usize, v: &[Scalar]) -> Matrix {
    assert_eq!(v.len(), n * n);
    Matrix::from_fn(field, n, n, |i, j| v[i * n + j])
}

impl OperatorSpan {
    /// Canonicalize a set of spanning operator matrices. Every echelon row
    /// must come out parity-homogeneous, which holds whenever the span is a
    /// graded subspace.
    pub fn from_matrices(space: &SuperSpace, field: PrimeField, mats: &[Matrix]) -> Result<Self> {
        let n = space.dim();
        let vecs: Vec<Vec<Scalar>> = mats.iter().map(vectorize).collect();
        let sub = Subspace::from_vectors(field, n * n, &vecs);
        Self::from_subspace(space, sub)
    }

    pub fn from_subspace(space: &SuperSpace, sub: Subspace) -> Result<Self> {
        let n = space.dim();
        assert_eq!(sub.ambient(), n * n);
        let field = sub.field();
        let mut parities = Vec::with_capacity(sub.dim());
        for row in sub.basis_vectors() {
            let m = unvectorize(field, n, row);
            let p = homogeneous_parity(&m, space, space).ok_or(Error::NotGraded)?;
            parities.push(p);
        }
        Ok(OperatorSpan {
            space: space.clone(),
            sub,
            parities,
        })
    }

    pub fn dim(&self) -> usize {
        self.sub.dim()
    }

    pub fn graded_dim(&self) -> (usize, usize) {
        let even = self.parities.iter().filter(|&&p| p == 0).count();
        (even, self.parities.len() - even)
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn base_space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn subspace(&self) -> &Subspace {
        &self.sub
    }

    pub fn field(&self) -> PrimeField {
        self.sub.field()
    }

    pub fn matrix(&self, i: usize) -> Matrix {
        unvectorize(self.field(), self.space.dim(), self.sub.basis().row(i))
    }

    pub fn matrices(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.matrix(i)).collect()
    }

    /// Coordinates of an operator in this basis, if it lies in the span.
    pub fn coords(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        self.sub.coords(&vectorize(m))
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.coords(m).is_some()
    }

    /// Combine an operator from coordinates.
    pub fn combine(&self, coords: &[Scalar]) -> Matrix {
        let f = self.field();
        let n = self.space.dim();
        let mut v = vec![0; n * n];
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                f.row_axpy(&mut v, self.sub.basis().row(i), c);
            }
        }
        unvectorize(f, n, &v)
    }

    /// Graded commutator `[a, b] = ab - (-1)^{|a||b|} ba` of homogeneous
    /// operators.
    pub fn bracket_matrices(f: PrimeField, a: &Matrix, pa: Parity, b: &Matrix, pb: Parity) -> Matrix {
        a.matmul(b).sub(&b.matmul(a).scale(f.sign(pa & pb)))
    }

    /// Abstract Lie superalgebra on this span via the graded commutator.
    /// Fails if the span is not closed under the bracket.
    pub fn to_lie_algebra(&self, name: &str) -> Result<SuperAlgebra> {
        let f = self.field();
        let k = self.dim();
        let labels = (0..k).map(|i| format!("{name}[{i}]")).collect();
        let space = SuperSpace::new(labels, self.parities.clone());
        let mut b = StructureBuilder::new(name, f, space, AlgebraKind::Lie);
        let mats = self.matrices();
        for i in 0..k {
            for j in 0..k {
                let br = Self::bracket_matrices(f, &mats[i], self.parities[i], &mats[j], self.parities[j]);
                let coords = self.coords(&br).ok_or_else(|| {
                    Error::NotInSpan(format!("bracket of basis {i},{j} of {name}"))
                })?;
                b.add_vec(i, j, &coords);
            }
        }
        b.build()
    }

    /// Close a generating set of homogeneous operators under the graded
    /// commutator.
    pub fn closure(
        space: &SuperSpace,
        field: PrimeField,
        gens: &[(Matrix, Parity)],
    ) -> Result<OperatorSpan> {
        let mut current = OperatorSpan::from_matrices(
            space,
            field,
            &gens.iter().map(|(m, _)| m.clone()).collect::<Vec<_>>(),
        )?;
        loop {
            let mats = current.matrices();
            let mut vecs: Vec<Vec<Scalar>> =
                current.sub.basis_vectors().map(|r| r.to_vec()).collect();
            for i in 0..mats.len() {
                for j in (i + 1)..mats.len() {
                    let br = Self::bracket_matrices(
                        field,
                        &mats[i],
                        current.parities[i],
                        &mats[j],
                        current.parities[j],
                    );
                    vecs.push(vectorize(&br));
                }
            }
            let next = Subspace::from_vectors(field, space.dim() * space.dim(), &vecs);
            if next.dim() == current.dim() {
                return Ok(current);
            }
            current = OperatorSpan::from_subspace(space, next)?;
        }
    }
}

/// All homogeneous derivations of `a`: solves, separately per parity, the
/// linear system `d(xy) = d(x)y + (-1)^{|d||x|} x d(y)` over basis pairs.
pub fn derivations(a: &SuperAlgebra) -> OperatorSpan {
    let n = a.dim();
    let f = a.field();
    let space = a.space();
    let symmetric_pairs = matches!(a.kind(), AlgebraKind::Lie | AlgebraKind::Jordan);

    let mut all_rows: Vec<Vec<Scalar>> = Vec::new();
    for par in [0u8, 1u8] {
        // unknowns: entries (r, c) with parity(r) ^ parity(c) == par
        let mut col_of = vec![usize::MAX; n * n];
        let mut positions = Vec::new();
        for r in 0..n {
            for c in 0..n {
                if space.parity(r) ^ space.parity(c) == par {
                    col_of[r * n + c] = positions.len();
                    positions.push((r, c));
                }
            }
        }
        let ncols = positions.len();
        let mut acc = RrefAccumulator::new(f, ncols);
        let mut row = vec![0; ncols];
        for i in 0..n {
            let jstart = if symmetric_pairs { i } else { 0 };
            for j in jstart..n {
                let sgn = f.sign(par & space.parity(i));
                // rows indexed by target coordinate t
                for t in 0..n {
                    row.iter_mut().for_each(|v| *v = 0);
                    let mut nonzero = false;
                    // + sum_k c_ij^k d[t,k]
                    for &(k, c) in a.mult_basis(i, j) {
                        let col = col_of[t * n + k as usize];
                        if col != usize::MAX {
                            row[col] = f.add(row[col], c);
                            nonzero = true;
                        }
                    }
                    // - [d(e_i) e_j]_t: unknowns d[r,i] weighted by c_rj^t
                    for r in 0..n {
                        let col = col_of[r * n + i];
                        if col == usize::MAX {
                            continue;
                        }
                        for &(k, c) in a.mult_basis(r, j) {
                            if k as usize == t {
                                row[col] = f.sub(row[col], c);
                                nonzero = true;
                            }
                        }
                    }
                    // - sign * [e_i d(e_j)]_t: unknowns d[r,j] weighted by c_ir^t
                    for r in 0..n {
                        let col = col_of[r * n + j];
                        if col == usize::MAX {
                            continue;
                        }
                        for &(k, c) in a.mult_basis(i, r) {
                            if k as usize == t {
                                row[col] = f.sub(row[col], f.mul(sgn, c));
                                nonzero = true;
                            }
                        }
                    }
                    if nonzero {
                        acc.push_row(row.clone());
                    }
                }
            }
        }
        let kernel = acc.into_kernel();
        for coeffs in kernel.basis_vectors() {
            let mut v = vec![0; n * n];
            for (idx, &(r, c)) in positions.iter().enumerate() {
                v[r * n + c] = coeffs[idx];
            }
            all_rows.push(v);
        }
    }
    let sub = Subspace::from_vectors(f, n * n, &all_rows);
    OperatorSpan::from_subspace(space, sub).expect("derivation span is graded by construction")
}

/// Span of the inner derivations `[L_x, L_y]` over all basis pairs of a
/// Jordan superalgebra.
pub fn inner_derivations(a: &SuperAlgebra) -> OperatorSpan {
    assert!(matches!(a.kind(), AlgebraKind::Jordan));
    let n = a.dim();
    let f = a.field();
    let l = a.left_mult_table();
    let p = a.space().parities();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            mats.push(OperatorSpan::bracket_matrices(f, &l[i], p[i], &l[j], p[j]));
        }
    }
    OperatorSpan::from_matrices(a.space(), f, &mats).expect("inner derivation span is graded")
}

/// Verify that a single homogeneous operator is a derivation.
pub fn is_derivation(a: &SuperAlgebra, d: &Matrix, pd: Parity) -> bool {
    let n = a.dim();
    let f = a.field();
    for i in 0..n {
        for j in 0..n {
            let e_i = a.basis_vector(i);
            let e_j = a.basis_vector(j);
            let lhs = d.mul_vec(&a.mult_vec(&e_i, &e_j));
            let di = d.mul_vec(&e_i);
            let dj = d.mul_vec(&e_j);
            let mut rhs = a.mult_vec(&di, &e_j);
            let sgn = f.sign(pd & a.space().parity(i));
            let t2 = a.mult_vec(&e_i, &dj);
            for (r, t) in rhs.iter_mut().zip(t2) {
                *r = f.add(*r, f.mul(sgn, t));
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// The operator `phi ⊗ psi` on `V ⊗ W`:
/// `(phi ⊗ psi)(x ⊗ y) = (-1)^{|psi||x|} phi(x) ⊗ psi(y)`.
pub fn operator_tensor(
    f: PrimeField,
    va: &SuperSpace,
    vb: &SuperSpace,
    phi: &Matrix,
    _pphi: Parity,
    psi: &Matrix,
    ppsi: Parity,
) -> Matrix {
    let (na, nb) = (va.dim(), vb.dim());
    assert_eq!(phi.rows(), na);
    assert_eq!(psi.rows(), nb);
    let mut m = Matrix::zeros(f, na * nb, na * nb);
    for i in 0..na {
        let sgn = f.sign(ppsi & va.parity(i));
        for r in 0..na {
            let a = phi.get(r, i);
            if a == 0 {
                continue;
            }
            for j in 0..nb {
                for s in 0..nb {
                    let b = psi.get(s, j);
                    if b != 0 {
                        m.set(r * nb + s, i * nb + j, f.mul(sgn, f.mul(a, b)));
                    }
                }
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalgebra::StructureBuilder;

    fn gf3() -> PrimeField {
        PrimeField::gf3()
    }

    fn k3() -> SuperAlgebra {
        let f = gf3();
        let space = SuperSpace::new(vec!["e".into(), "x".into(), "y".into()], vec![0, 1, 1]);
        let mut b = StructureBuilder::new("K3", f, space, AlgebraKind::Jordan);
        let half = f.half();
        b.add(0, 0, 0, 1);
        for odd in [1usize, 2] {
            b.add(0, odd, odd, half);
            b.add(odd, 0, odd, half);
        }
        b.add(1, 2, 0, 1);
        b.add(2, 1, 0, f.neg(1));
        b.build().unwrap()
    }

    #[test]
    fn der_k3_is_3_2() {
        let der = derivations(&k3());
        assert_eq!(der.graded_dim(), (3, 2));
        for (m, &p) in der.matrices().iter().zip(der.parities()) {
            assert!(is_derivation(&k3(), m, p));
        }
    }

    #[test]
    fn der_of_unital_line_is_zero() {
        let f = gf3();
        let space = SuperSpace::even(vec!["1".into()]);
        let mut b = StructureBuilder::new("k", f, space, AlgebraKind::Jordan);
        b.add(0, 0, 0, 1);
        let k = b.build().unwrap();
        assert_eq!(derivations(&k).dim(), 0);
    }

    #[test]
    fn der_dim_invariant_under_permutation() {
        let a = k3();
        let b = a.permuted(&[1, 2, 0]).unwrap();
        assert_eq!(derivations(&a).graded_dim(), derivations(&b).graded_dim());
    }

    #[test]
    fn inner_derivations_are_derivations() {
        let a = k3();
        let inder = inner_derivations(&a);
        for (m, &p) in inder.matrices().iter().zip(inder.parities()) {
            assert!(is_derivation(&a, m, p));
        }
        // der K3 is all inner here: both spans have graded dim (3|2)
        assert_eq!(inder.graded_dim(), (3, 2));
    }

    #[test]
    fn der_k3_closes_to_lie_algebra() {
        let der = derivations(&k3());
        let lie = der.to_lie_algebra("derK3").unwrap();
        assert!(lie
            .check_super_jacobi(crate::superalgebra::CheckMode::Exhaustive)
            .passed());
        assert_eq!(lie.graded_dim(), (3, 2));
    }

    #[test]
    fn operator_tensor_sign() {
        let f = gf3();
        let s = SuperSpace::new(vec!["e".into(), "x".into()], vec![0, 1]);
        let phi = Matrix::identity(f, 2);
        // psi odd: swaps e and x
        let psi = Matrix::from_i64(f, vec![vec![0, 1], vec![1, 0]]);
        let m = operator_tensor(f, &s, &s, &phi, 0, &psi, 1);
        // (I⊗psi)(x⊗e) = (-1)^{1*1} x⊗psi(e) = -(x⊗x)
        // x⊗e has index 1*2+0=2, x⊗x has index 3
        assert_eq!(m.get(3, 2), f.neg(1));
        // (I⊗psi)(e⊗e) = e⊗x, no sign
        assert_eq!(m.get(1, 0), 1);
    }
}
