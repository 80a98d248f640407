//! Jordan superalgebras: hermitian 3x3 matrices over a Hurwitz
//! superalgebra, the tiny Kaplansky superalgebra K3, the Kac superalgebra
//! K9 = K3 ⊗ K3, and the attached operator algebras (derivations, inner
//! derivations, structure and projective structure superalgebras).
//!
//! H3(C) basis order: the diagonal idempotents e0, e1, e2, then the three
//! off-diagonal blocks iota_0(S), iota_1(S), iota_2(S) in the basis order
//! of S.

use crate::composition::{make_hurwitz, para_hurwitz, HurwitzKind, HurwitzSuperalgebra, SymmetricComposition};
use crate::derivations::{derivations, operator_tensor, OperatorSpan};
use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use crate::linalg::{Matrix, Subspace};
use crate::superalgebra::{AlgebraKind, StructureBuilder, SuperAlgebra};
use crate::superspace::{Parity, SuperSpace};
use crate::triality::TrialityElement;

/// The Jordan superalgebra of hermitian 3x3 matrices over a Hurwitz
/// superalgebra, with its block decomposition.
#[derive(Debug, Clone)]
pub struct H3Algebra {
    c: HurwitzSuperalgebra,
    s: SymmetricComposition,
    j: SuperAlgebra,
}

impl H3Algebra {
    pub fn hurwitz(&self) -> &HurwitzSuperalgebra {
        &self.c
    }

    /// The para-Hurwitz algebra on the same space as C; the off-diagonal
    /// products of H3(C) go through its multiplication.
    pub fn para(&self) -> &SymmetricComposition {
        &self.s
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.j
    }

    pub fn dim(&self) -> usize {
        self.j.dim()
    }

    pub fn coord_dim(&self) -> usize {
        self.c.dim()
    }

    /// Index of iota_block(a-th basis vector of S).
    pub fn iota_index(&self, block: usize, a: usize) -> usize {
        3 + block * self.c.dim() + a
    }

    pub fn idempotent(&self, i: usize) -> Vec<Scalar> {
        self.j.basis_vector(i)
    }

    pub fn unit(&self) -> Vec<Scalar> {
        let mut v = vec![0; self.dim()];
        v[0] = 1;
        v[1] = 1;
        v[2] = 1;
        v
    }

    /// Embed a coordinate vector of S into the iota block.
    pub fn iota(&self, block: usize, a: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![0; self.dim()];
        for (idx, &c) in a.iter().enumerate() {
            v[self.iota_index(block, idx)] = c;
        }
        v
    }
}

/// Build H3(C) from the product rules on the blocks:
/// diagonal entries multiply componentwise, `e_j` acts on `iota_i(S)` by
/// half the identity for `j != i` and by zero for `j = i`,
/// `iota_i(a) iota_{i+1}(b) = iota_{i+2}(a*b)` through the para product,
/// and `iota_i(a) iota_i(b) = 2 b(a,b) (e_{i+1} + e_{i+2})`.
pub fn make_h3(c: &HurwitzSuperalgebra) -> Result<H3Algebra> {
    let s = para_hurwitz(c)?;
    let f = c.algebra().field();
    let nc = c.dim();
    let csp = c.algebra().space();
    let mut labels: Vec<String> = vec!["e0".into(), "e1".into(), "e2".into()];
    let mut parities: Vec<Parity> = vec![0, 0, 0];
    for b in 0..3 {
        for a in 0..nc {
            labels.push(format!("i{b}:{}", csp.label(a)));
            parities.push(csp.parity(a));
        }
    }
    let space = SuperSpace::new(labels, parities);
    let name = format!("H3({})", c.algebra().name());
    let mut bld = StructureBuilder::new(&name, f, space, AlgebraKind::Jordan);
    let iota = |b: usize, a: usize| 3 + b * nc + a;
    let half = f.half();

    for i in 0..3 {
        bld.add(i, i, i, 1);
    }
    for b in 0..3usize {
        for a in 0..nc {
            // e_{b+1} and e_{b+2} act by half the identity
            for j in [(b + 1) % 3, (b + 2) % 3] {
                bld.add(j, iota(b, a), iota(b, a), half);
                bld.add(iota(b, a), j, iota(b, a), half);
            }
        }
    }
    let sa = s.algebra();
    for b in 0..3usize {
        for a1 in 0..nc {
            for a2 in 0..nc {
                // iota_b(a) iota_{b+1}(b') = iota_{b+2}(a * b')
                for &(k, v) in sa.mult_basis(a1, a2) {
                    bld.add(
                        iota(b, a1),
                        iota((b + 1) % 3, a2),
                        iota((b + 2) % 3, k as usize),
                        v,
                    );
                }
                // iota_b(a) iota_b(b') = 2 b(a,b') (e_{b+1} + e_{b+2})
                let coeff = f.mul(2 % f.modulus(), s.form().eval_basis(a1, a2));
                if coeff != 0 {
                    bld.add(iota(b, a1), iota(b, a2), (b + 1) % 3, coeff);
                    bld.add(iota(b, a1), iota(b, a2), (b + 2) % 3, coeff);
                }
            }
        }
    }
    bld.complete_graded_opposites();
    let j = bld.build()?;
    Ok(H3Algebra { c: c.clone(), s, j })
}

pub fn make_h3_kind(kind: HurwitzKind, field: PrimeField) -> Result<H3Algebra> {
    make_h3(&make_hurwitz(kind, field)?)
}

/// The tiny Kaplansky superalgebra: even idempotent `e` acting by half the
/// identity on the odd plane, `x y = e = -y x`, squares of odd elements 0.
pub fn make_k3(field: PrimeField) -> Result<SuperAlgebra> {
    let space = SuperSpace::new(vec!["e".into(), "x".into(), "y".into()], vec![0, 1, 1]);
    let mut b = StructureBuilder::new("K3", field, space, AlgebraKind::Jordan);
    let half = field.half();
    b.add(0, 0, 0, 1);
    for odd in [1usize, 2] {
        b.add(0, odd, odd, half);
        b.add(odd, 0, odd, half);
    }
    b.add(1, 2, 0, 1);
    b.add(2, 1, 0, field.neg(1));
    b.build()
}

/// The nine dimensional Kac superalgebra K9 = K3 ⊗ K3 (characteristic 3).
pub fn make_k9(field: PrimeField) -> Result<SuperAlgebra> {
    if field.modulus() != 3 {
        return Err(Error::CharacteristicRequired {
            name: "K9",
            required: 3,
            actual: field.modulus(),
        });
    }
    let k3 = make_k3(field)?;
    k3.graded_tensor(&k3, "K9")
}

/// The derivation of H3(C) induced by a triality element:
/// kills the idempotents and acts on `iota_i(S)` through the i-th component.
pub fn d_from_tri(j: &H3Algebra, t: &TrialityElement) -> Matrix {
    let f = j.j.field();
    let n = j.dim();
    let nc = j.coord_dim();
    let mut m = Matrix::zeros(f, n, n);
    for b in 0..3 {
        for a in 0..nc {
            for r in 0..nc {
                let c = t.maps[b].get(r, a);
                if c != 0 {
                    m.set(j.iota_index(b, r), j.iota_index(b, a), c);
                }
            }
        }
    }
    m
}

/// The inner derivation `2 [L_{iota_i(a)}, L_{e_{i+1}}]`.
pub fn d_i(j: &H3Algebra, block: usize, a: &[Scalar], pa: Parity) -> Matrix {
    let f = j.j.field();
    let la = j.j.left_mult_matrix(&j.iota(block, a));
    let le = j.j.left_mult_matrix(&j.idempotent((block + 1) % 3));
    OperatorSpan::bracket_matrices(f, &la, pa, &le, 0).scale(2 % f.modulus())
}

/// Closed-form action of `d_i`:
/// `e_i -> 0`, `e_{i+1} -> iota_i(a)/2`, `e_{i+2} -> -iota_i(a)/2`,
/// `iota_{i+1}(b) -> -iota_{i+2}(a*b)`,
/// `iota_{i+2}(b) -> (-1)^{|a||b|} iota_{i+1}(b*a)`,
/// `iota_i(b) -> 2 b(a,b) (-e_{i+1} + e_{i+2})`.
pub fn d_i_closed_form(j: &H3Algebra, block: usize, a: &[Scalar], pa: Parity) -> Matrix {
    let f = j.j.field();
    let n = j.dim();
    let nc = j.coord_dim();
    let sa = j.s.algebra();
    let half = f.half();
    let mut m = Matrix::zeros(f, n, n);
    // idempotent columns
    for (r, &c) in a.iter().enumerate() {
        if c != 0 {
            m.set(j.iota_index(block, r), (block + 1) % 3, f.mul(half, c));
            m.set(j.iota_index(block, r), (block + 2) % 3, f.neg(f.mul(half, c)));
        }
    }
    for bidx in 0..nc {
        let b_vec = sa.basis_vector(bidx);
        let pb = sa.space().parity(bidx);
        // iota_{i+1}(b) -> -iota_{i+2}(a*b)
        let ab = sa.mult_vec(a, &b_vec);
        for (r, &c) in ab.iter().enumerate() {
            if c != 0 {
                m.set(
                    j.iota_index((block + 2) % 3, r),
                    j.iota_index((block + 1) % 3, bidx),
                    f.neg(c),
                );
            }
        }
        // iota_{i+2}(b) -> (-1)^{|a||b|} iota_{i+1}(b*a)
        let ba = sa.mult_vec(&b_vec, a);
        let sgn = f.sign(pa & pb);
        for (r, &c) in ba.iter().enumerate() {
            if c != 0 {
                m.set(
                    j.iota_index((block + 1) % 3, r),
                    j.iota_index((block + 2) % 3, bidx),
                    f.mul(sgn, c),
                );
            }
        }
        // iota_i(b) -> 2 b(a,b) (-e_{i+1} + e_{i+2})
        let coeff = f.mul(2 % f.modulus(), j.s.form().eval(a, &b_vec));
        if coeff != 0 {
            m.set((block + 1) % 3, j.iota_index(block, bidx), f.neg(coeff));
            m.set((block + 2) % 3, j.iota_index(block, bidx), coeff);
        }
    }
    m
}

/// The four-component decomposition of `der H3(C)`.
#[derive(Debug, Clone)]
pub struct DerGrading {
    pub der: OperatorSpan,
    pub d_tri: Subspace,
    pub d_blocks: [Subspace; 3],
    pub decomposition_holds: bool,
}

/// Compute `der J` by the generic solver and verify it splits as
/// `D_{tri(S)} ⊕ D_0(S) ⊕ D_1(S) ⊕ D_2(S)`.
pub fn der_grading(j: &H3Algebra, tri: &crate::triality::TrialityAlgebra) -> Result<DerGrading> {
    let f = j.j.field();
    let n = j.dim();
    let der = derivations(&j.j);
    let d_tri_vecs: Vec<Vec<Scalar>> = tri
        .elements()
        .iter()
        .map(|t| crate::derivations::vectorize(&d_from_tri(j, t)))
        .collect();
    let d_tri = Subspace::from_vectors(f, n * n, &d_tri_vecs);
    let sa = j.s.algebra();
    let mut blocks = Vec::new();
    for b in 0..3 {
        let vecs: Vec<Vec<Scalar>> = (0..j.coord_dim())
            .map(|a| {
                crate::derivations::vectorize(&d_i(
                    j,
                    b,
                    &sa.basis_vector(a),
                    sa.space().parity(a),
                ))
            })
            .collect();
        blocks.push(Subspace::from_vectors(f, n * n, &vecs));
    }
    let mut sum = d_tri.clone();
    let mut direct = true;
    for bl in &blocks {
        if sum.intersect(bl)?.dim() != 0 {
            direct = false;
        }
        sum = sum.sum(bl)?;
    }
    let holds = direct && &sum == der.subspace();
    Ok(DerGrading {
        der,
        d_tri,
        d_blocks: [blocks[0].clone(), blocks[1].clone(), blocks[2].clone()],
        decomposition_holds: holds,
    })
}

/// `str J = der J ⊕ L_J` together with the quotient by the central line
/// spanned by the identity operator.
#[derive(Debug, Clone)]
pub struct StructurePair {
    /// str J as a span of operators on J.
    pub span: OperatorSpan,
    /// Abstract Lie superalgebra on the str basis.
    pub algebra: SuperAlgebra,
    /// Coordinates of the identity operator in the str basis.
    pub identity_coords: Vec<Scalar>,
    /// The quotient pstr = str / span{identity}.
    pub pstr: SuperAlgebra,
    /// Projection matrix from str coordinates to pstr coordinates.
    pub projection: Matrix,
}

/// The span `der J + L_J` as operators, verified to be bracket-closed with
/// `dim = dim der + dim J`.
pub fn make_str(j: &SuperAlgebra) -> Result<(OperatorSpan, SuperAlgebra)> {
    let f = j.field();
    let der = derivations(j);
    let mut gens: Vec<(Matrix, Parity)> = der
        .matrices()
        .into_iter()
        .zip(der.parities().iter().copied())
        .collect();
    for b in 0..j.dim() {
        gens.push((
            j.left_mult_matrix(&j.basis_vector(b)),
            j.space().parity(b),
        ));
    }
    let span = OperatorSpan::closure(j.space(), f, &gens)?;
    if span.dim() != der.dim() + j.dim() {
        return Err(Error::NotInSpan(format!(
            "str closure has dim {} but der + L has dim {}",
            span.dim(),
            der.dim() + j.dim()
        )));
    }
    let name = format!("str({})", j.name());
    let algebra = span.to_lie_algebra(&name)?;
    Ok((span, algebra))
}

/// str and pstr of a unital Jordan superalgebra.
pub fn make_str_pstr(j: &H3Algebra) -> Result<StructurePair> {
    let f = j.j.field();
    let (span, algebra) = make_str(&j.j)?;
    let identity = Matrix::identity(f, j.dim());
    let identity_coords = span
        .coords(&identity)
        .ok_or_else(|| Error::NotInSpan("identity operator in str".into()))?;
    // the central line
    let line = Subspace::from_vectors(f, span.dim(), &[identity_coords.clone()]);
    let center = algebra.center();
    if !center.contains_subspace(&line) {
        return Err(Error::NotInSpan("identity line not central in str".into()));
    }
    let (pstr, projection) = algebra.quotient(&line)?;
    let mut pstr = pstr;
    pstr.set_name(&format!("pstr({})", j.j.name()));
    Ok(StructurePair {
        span,
        algebra,
        identity_coords,
        pstr,
        projection,
    })
}

/// Verify `der K9 = (der K3 ⊗ I) ⊕ (I ⊗ der K3)` as a subspace equality,
/// returning the two lifted spans.
pub fn der_k9_split(field: PrimeField) -> Result<(OperatorSpan, Subspace, Subspace)> {
    let k3 = make_k3(field)?;
    let k9 = make_k9(field)?;
    let der3 = derivations(&k3);
    let der9 = derivations(&k9);
    let f = field;
    let sp3 = k3.space();
    let id = Matrix::identity(f, 3);
    let mut left_vecs = Vec::new();
    let mut right_vecs = Vec::new();
    for (m, &p) in der3.matrices().iter().zip(der3.parities()) {
        left_vecs.push(crate::derivations::vectorize(&operator_tensor(
            f, sp3, sp3, m, p, &id, 0,
        )));
        right_vecs.push(crate::derivations::vectorize(&operator_tensor(
            f, sp3, sp3, &id, 0, m, p,
        )));
    }
    let left = Subspace::from_vectors(f, 81, &left_vecs);
    let right = Subspace::from_vectors(f, 81, &right_vecs);
    let sum = left.sum(&right)?;
    if left.intersect(&right)?.dim() != 0 || &sum != der9.subspace() {
        return Err(Error::NotInSpan(
            "der K9 does not split as the two tensor factors".into(),
        ));
    }
    Ok((der9, left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::make_symmetric;
    use crate::derivations::{inner_derivations, is_derivation};
    use crate::triality::tri_basis;

    fn gf3() -> PrimeField {
        PrimeField::gf3()
    }

    #[test]
    fn h3_dimensions_and_jordan_checks() {
        let cases = [
            (HurwitzKind::S1, (6, 0)),
            (HurwitzKind::S2, (9, 0)),
            (HurwitzKind::S4, (15, 0)),
            (HurwitzKind::B12, (6, 6)),
            (HurwitzKind::B42, (15, 6)),
        ];
        for (kind, dims) in cases {
            let h3 = make_h3_kind(kind, gf3()).unwrap();
            assert_eq!(h3.algebra().graded_dim(), dims, "{kind:?}");
            assert!(h3.algebra().check_jordan_super().passed(), "{kind:?}");
        }
    }

    #[test]
    fn h3_block_products() {
        let h3 = make_h3_kind(HurwitzKind::B12, gf3()).unwrap();
        let j = h3.algebra();
        // e0 ∘ iota_0(a) = 0
        let a = h3.iota(0, &[1, 0, 0]);
        assert_eq!(
            j.mult_vec(&h3.idempotent(0), &a),
            vec![0; j.dim()]
        );
        // e1 ∘ iota_0(a) = iota_0(a)/2
        let half: Vec<Scalar> = a.iter().map(|&c| gf3().mul(c, gf3().half())).collect();
        assert_eq!(j.mult_vec(&h3.idempotent(1), &a), half);
        // unit acts as identity
        let u = h3.unit();
        for i in 0..j.dim() {
            assert_eq!(j.mult_vec(&u, &j.basis_vector(i)), j.basis_vector(i));
        }
    }

    #[test]
    fn left_mult_of_idempotent_is_half_identity_off_block() {
        let h3 = make_h3_kind(HurwitzKind::S2, gf3()).unwrap();
        let le0 = h3.algebra().left_mult_matrix(&h3.idempotent(0));
        let f = gf3();
        for b in [1usize, 2] {
            for a in 0..h3.coord_dim() {
                let idx = h3.iota_index(b, a);
                assert_eq!(le0.get(idx, idx), f.half());
            }
        }
        for a in 0..h3.coord_dim() {
            let idx = h3.iota_index(0, a);
            assert_eq!(le0.get(idx, idx), 0);
        }
    }

    #[test]
    fn k3_table() {
        let k3 = make_k3(gf3()).unwrap();
        assert_eq!(k3.graded_dim(), (1, 2));
        assert!(k3.check_jordan_super().passed());
        // x y = e, y x = -e, e e = e, x x = 0
        assert_eq!(k3.mult_vec(&k3.basis_vector(1), &k3.basis_vector(2)), k3.basis_vector(0));
        let neg_e: Vec<Scalar> = vec![2, 0, 0];
        assert_eq!(k3.mult_vec(&k3.basis_vector(2), &k3.basis_vector(1)), neg_e);
        assert_eq!(k3.mult_vec(&k3.basis_vector(0), &k3.basis_vector(0)), k3.basis_vector(0));
        assert_eq!(k3.mult_vec(&k3.basis_vector(1), &k3.basis_vector(1)), vec![0, 0, 0]);
    }

    #[test]
    fn k9_properties() {
        let k9 = make_k9(gf3()).unwrap();
        assert_eq!(k9.graded_dim(), (5, 4));
        assert!(k9.check_jordan_super().passed());
        // e ⊗ e is the distinguished idempotent (K9 itself has no unit:
        // (e⊗e)(e⊗x) = (ee)⊗(ex) = (e⊗x)/2)
        let ee = k9.basis_vector(0);
        assert_eq!(k9.mult_vec(&ee, &ee), ee);
        let l = k9.left_mult_matrix(&ee);
        assert_ne!(l, Matrix::identity(gf3(), 9));
        // characteristic restriction
        assert!(make_k9(PrimeField::new(5).unwrap()).is_err());
    }

    #[test]
    fn k3_equals_para_b12() {
        // identical structure constants under e<->1, x<->u, y<->v
        let k3 = make_k3(gf3()).unwrap();
        let s12 = make_symmetric(HurwitzKind::B12, gf3()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(k3.mult_basis(i, j), s12.algebra().mult_basis(i, j));
            }
        }
    }

    #[test]
    fn d_from_tri_is_derivation_killing_idempotents() {
        let h3 = make_h3_kind(HurwitzKind::B12, gf3()).unwrap();
        let tri = tri_basis(h3.para()).unwrap();
        for t in tri.elements() {
            let d = d_from_tri(&h3, &t);
            assert!(is_derivation(h3.algebra(), &d, t.parity));
            for i in 0..3 {
                assert_eq!(d.mul_vec(&h3.idempotent(i)), vec![0; h3.dim()]);
            }
        }
        // injectivity: zero triple is the only one mapping to zero
        let z = TrialityElement::zero(gf3(), 3);
        assert!(d_from_tri(&h3, &z).is_zero());
        let vecs: Vec<Vec<Scalar>> = tri
            .elements()
            .iter()
            .map(|t| crate::derivations::vectorize(&d_from_tri(&h3, t)))
            .collect();
        let span = Subspace::from_vectors(gf3(), h3.dim() * h3.dim(), &vecs);
        assert_eq!(span.dim(), tri.dim());
    }

    #[test]
    fn d_i_matches_closed_form_and_operator_identities() {
        for kind in [HurwitzKind::B12, HurwitzKind::S2] {
            let h3 = make_h3_kind(kind, gf3()).unwrap();
            let sa = h3.para().algebra().clone();
            let f = gf3();
            for block in 0..3 {
                for a in 0..h3.coord_dim() {
                    let av = sa.basis_vector(a);
                    let pa = sa.space().parity(a);
                    let d = d_i(&h3, block, &av, pa);
                    assert_eq!(d, d_i_closed_form(&h3, block, &av, pa), "{kind:?} {block} {a}");
                    // [L_{iota_i(a)}, L_{e_i}] = 0
                    let li = h3.algebra().left_mult_matrix(&h3.iota(block, &av));
                    let le = h3.algebra().left_mult_matrix(&h3.idempotent(block));
                    assert!(OperatorSpan::bracket_matrices(f, &li, pa, &le, 0).is_zero());
                    // 2[L, L_{e_{i+1}}] = -2[L, L_{e_{i+2}}]
                    let le2 = h3.algebra().left_mult_matrix(&h3.idempotent((block + 2) % 3));
                    let alt = OperatorSpan::bracket_matrices(f, &li, pa, &le2, 0)
                        .scale(f.neg(2 % f.modulus()));
                    assert_eq!(d, alt);
                }
            }
        }
    }

    #[test]
    fn der_grading_b12() {
        let h3 = make_h3_kind(HurwitzKind::B12, gf3()).unwrap();
        let tri = tri_basis(h3.para()).unwrap();
        let g = der_grading(&h3, &tri).unwrap();
        assert_eq!(g.der.graded_dim(), (6, 8));
        assert!(g.decomposition_holds);
        assert_eq!(g.d_tri.dim(), 5); // (3|2)
        for b in &g.d_blocks {
            assert_eq!(b.dim(), 3); // (1|2)
        }
    }

    #[test]
    fn der_grading_kxk() {
        let h3 = make_h3_kind(HurwitzKind::S2, gf3()).unwrap();
        let tri = tri_basis(h3.para()).unwrap();
        let g = der_grading(&h3, &tri).unwrap();
        assert_eq!(g.der.graded_dim(), (8, 0));
        assert!(g.decomposition_holds);
        assert_eq!(g.d_tri.dim(), 2);
        for b in &g.d_blocks {
            assert_eq!(b.dim(), 2);
        }
    }

    #[test]
    fn str_pstr_b12() {
        let h3 = make_h3_kind(HurwitzKind::B12, gf3()).unwrap();
        let pair = make_str_pstr(&h3).unwrap();
        assert_eq!(pair.algebra.graded_dim(), (12, 14));
        assert_eq!(pair.pstr.graded_dim(), (11, 14));
        // center contains exactly the identity line here
        let center = pair.algebra.center();
        assert!(center.contains(&pair.identity_coords));
    }

    #[test]
    fn str_k3_regression() {
        // not a unital Jordan algebra; only the str dimensions are pinned
        let k3 = make_k3(gf3()).unwrap();
        let (span, algebra) = make_str(&k3).unwrap();
        assert_eq!(span.graded_dim(), (4, 4));
        assert!(algebra
            .check_super_jacobi(crate::superalgebra::CheckMode::Exhaustive)
            .passed());
    }

    #[test]
    fn inder_vs_der() {
        // inder = der for B12; codimension 1 for k x k
        let h3 = make_h3_kind(HurwitzKind::B12, gf3()).unwrap();
        assert_eq!(
            inner_derivations(h3.algebra()).subspace(),
            derivations(h3.algebra()).subspace()
        );
        let h3 = make_h3_kind(HurwitzKind::S2, gf3()).unwrap();
        let inder = inner_derivations(h3.algebra());
        let der = derivations(h3.algebra());
        assert_eq!(inder.dim() + 1, der.dim());
        assert!(der.subspace().contains_subspace(inder.subspace()));
    }

    #[test]
    fn der_k9_splits() {
        let (der9, left, right) = der_k9_split(gf3()).unwrap();
        assert_eq!(der9.graded_dim(), (6, 4));
        assert_eq!(left.dim(), 5);
        assert_eq!(right.dim(), 5);
    }
}
