//! Orthosymplectic superalgebras, triality Lie superalgebras of symmetric
//! compositions, the order-3 shift automorphism, and the distinguished
//! elements sigma_{x,y} and t_{x,y}.

use crate::composition::{HurwitzSuperalgebra, SymmetricComposition};
use crate::derivations::{unvectorize, vectorize, OperatorSpan};
use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use crate::linalg::{Matrix, RrefAccumulator, Subspace};
use crate::superalgebra::{AlgebraKind, BilinearForm, StructureBuilder, SuperAlgebra};
use crate::superspace::{Parity, SuperSpace};

/// A triple of endomorphisms of a symmetric composition superalgebra,
/// intertwined through the product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialityElement {
    pub maps: [Matrix; 3],
    pub parity: Parity,
}

impl TrialityElement {
    pub fn zero(field: PrimeField, n: usize) -> Self {
        TrialityElement {
            maps: [
                Matrix::zeros(field, n, n),
                Matrix::zeros(field, n, n),
                Matrix::zeros(field, n, n),
            ],
            parity: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn to_vec(&self) -> Vec<Scalar> {
        let mut v = vectorize(&self.maps[0]);
        v.extend(vectorize(&self.maps[1]));
        v.extend(vectorize(&self.maps[2]));
        v
    }
}

/// Cyclic shift `(d0, d1, d2) -> (d2, d0, d1)`; an order-3 automorphism of
/// the triality algebra.
pub fn theta(t: &TrialityElement) -> TrialityElement {
    TrialityElement {
        maps: [t.maps[2].clone(), t.maps[0].clone(), t.maps[1].clone()],
        parity: t.parity,
    }
}

pub fn theta_pow(t: &TrialityElement, i: usize) -> TrialityElement {
    let mut out = t.clone();
    for _ in 0..(i % 3) {
        out = theta(&out);
    }
    out
}

/// Basis of the orthosymplectic algebra of `(space, b)`: all homogeneous `d`
/// with `b(d(x), y) + (-1)^{|d||x|} b(x, d(y)) = 0`.
pub fn osp_basis(space: &SuperSpace, form: &BilinearForm) -> Result<OperatorSpan> {
    if !form.is_regular() {
        return Err(Error::DegenerateForm);
    }
    let f = form.gram().field();
    let n = space.dim();
    let mut all_rows: Vec<Vec<Scalar>> = Vec::new();
    for par in [0u8, 1u8] {
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
        let mut acc = RrefAccumulator::new(f, positions.len());
        let mut row = vec![0; positions.len()];
        for i in 0..n {
            for j in 0..n {
                row.iter_mut().for_each(|v| *v = 0);
                let sgn = f.sign(par & space.parity(i));
                let mut nonzero = false;
                for r in 0..n {
                    // b(d(e_i), e_j): d[r,i] b(r,j)
                    if let Some(&col) = col_of.get(r * n + i) {
                        if col != usize::MAX {
                            let c = form.eval_basis(r, j);
                            if c != 0 {
                                row[col] = f.add(row[col], c);
                                nonzero = true;
                            }
                        }
                    }
                    // sign * b(e_i, d(e_j)): d[r,j] b(i,r)
                    if let Some(&col) = col_of.get(r * n + j) {
                        if col != usize::MAX {
                            let c = form.eval_basis(i, r);
                            if c != 0 {
                                row[col] = f.add(row[col], f.mul(sgn, c));
                                nonzero = true;
                            }
                        }
                    }
                }
                if nonzero {
                    acc.push_row(row.clone());
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
    OperatorSpan::from_subspace(space, sub)
}

/// The triality Lie superalgebra of a symmetric composition superalgebra,
/// with its canonical echelon basis and componentwise bracket.
#[derive(Debug, Clone)]
pub struct TrialityAlgebra {
    s: SymmetricComposition,
    span: Subspace,
    parities: Vec<Parity>,
    lie: SuperAlgebra,
}

impl TrialityAlgebra {
    pub fn composition(&self) -> &SymmetricComposition {
        &self.s
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn graded_dim(&self) -> (usize, usize) {
        let even = self.parities.iter().filter(|&&p| p == 0).count();
        (even, self.parities.len() - even)
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    /// The abstract Lie superalgebra on the triality basis.
    pub fn as_lie(&self) -> &SuperAlgebra {
        &self.lie
    }

    pub fn element(&self, i: usize) -> TrialityElement {
        let n = self.s.dim();
        let f = self.span.field();
        let row = self.span.basis().row(i);
        TrialityElement {
            maps: [
                unvectorize(f, n, &row[0..n * n]),
                unvectorize(f, n, &row[n * n..2 * n * n]),
                unvectorize(f, n, &row[2 * n * n..]),
            ],
            parity: self.parities[i],
        }
    }

    pub fn elements(&self) -> Vec<TrialityElement> {
        (0..self.dim()).map(|i| self.element(i)).collect()
    }

    /// Coordinates of a triple in the triality basis, if it belongs to it.
    pub fn coords(&self, t: &TrialityElement) -> Option<Vec<Scalar>> {
        self.span.coords(&t.to_vec())
    }

    pub fn contains(&self, t: &TrialityElement) -> bool {
        self.coords(t).is_some()
    }

    /// Matrix of the shift automorphism in the triality basis.
    pub fn theta_matrix(&self) -> Result<Matrix> {
        let k = self.dim();
        let f = self.span.field();
        let mut m = Matrix::zeros(f, k, k);
        for j in 0..k {
            let img = theta(&self.element(j));
            let coords = self
                .coords(&img)
                .ok_or_else(|| Error::NotInSpan("theta image".into()))?;
            for i in 0..k {
                m.set(i, j, coords[i]);
            }
        }
        Ok(m)
    }
}

/// Does the triple satisfy the defining relation
/// `d0(x y) = d1(x) y + (-1)^{|d||x|} x d2(y)` together with membership of
/// every component in the orthosymplectic algebra?
pub fn satisfies_triality(s: &SymmetricComposition, t: &TrialityElement) -> bool {
    let a = s.algebra();
    let f = a.field();
    let n = a.dim();
    let form = s.form();
    // osp condition per component
    for d in &t.maps {
        for i in 0..n {
            for j in 0..n {
                let di = d.mul_vec(&a.basis_vector(i));
                let dj = d.mul_vec(&a.basis_vector(j));
                let lhs = form.eval(&di, &a.basis_vector(j));
                let sgn = f.sign(t.parity & a.space().parity(i));
                let rhs = f.mul(sgn, form.eval(&a.basis_vector(i), &dj));
                if f.add(lhs, rhs) != 0 {
                    return false;
                }
            }
        }
    }
    // intertwining relation
    for i in 0..n {
        for j in 0..n {
            let xy = a.mult_vec(&a.basis_vector(i), &a.basis_vector(j));
            let lhs = t.maps[0].mul_vec(&xy);
            let d1x = t.maps[1].mul_vec(&a.basis_vector(i));
            let d2y = t.maps[2].mul_vec(&a.basis_vector(j));
            let mut rhs = a.mult_vec(&d1x, &a.basis_vector(j));
            let sgn = f.sign(t.parity & a.space().parity(i));
            let term2 = a.mult_vec(&a.basis_vector(i), &d2y);
            for (r, v) in rhs.iter_mut().zip(term2) {
                *r = f.add(*r, f.mul(sgn, v));
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Compute the triality Lie superalgebra by solving the joint linear system
/// on triples of orthosymplectic maps.
pub fn tri_basis(s: &SymmetricComposition) -> Result<TrialityAlgebra> {
    let a = s.algebra();
    let f = a.field();
    let n = a.dim();
    let osp = osp_basis(a.space(), s.form())?;
    let osp_mats = osp.matrices();

    let mut rows_all: Vec<Vec<Scalar>> = Vec::new();
    let mut parities_all: Vec<Parity> = Vec::new();
    for par in [0u8, 1u8] {
        let idx: Vec<usize> = (0..osp.dim()).filter(|&i| osp.parities()[i] == par).collect();
        let m = idx.len();
        if m == 0 {
            continue;
        }
        // unknowns: alpha (d0), beta (d1), gamma (d2) coefficients
        let mut acc = RrefAccumulator::new(f, 3 * m);
        let mut row = vec![0; 3 * m];
        for i in 0..n {
            for j in 0..n {
                let xy = a.mult_vec(&a.basis_vector(i), &a.basis_vector(j));
                let sgn = f.sign(par & a.space().parity(i));
                for t in 0..n {
                    row.iter_mut().for_each(|v| *v = 0);
                    let mut nonzero = false;
                    for (pos, &b) in idx.iter().enumerate() {
                        let ob = &osp_mats[b];
                        // d0(xy)_t
                        let mut c0 = 0;
                        for (r, &x) in xy.iter().enumerate() {
                            if x != 0 {
                                c0 = f.add(c0, f.mul(x, ob.get(t, r)));
                            }
                        }
                        if c0 != 0 {
                            row[pos] = c0;
                            nonzero = true;
                        }
                        // -(d1(x) y)_t
                        let d1x = ob.mul_vec(&a.basis_vector(i));
                        let t1 = a.mult_vec(&d1x, &a.basis_vector(j));
                        if t1[t] != 0 {
                            row[m + pos] = f.neg(t1[t]);
                            nonzero = true;
                        }
                        // -sign (x d2(y))_t
                        let d2y = ob.mul_vec(&a.basis_vector(j));
                        let t2 = a.mult_vec(&a.basis_vector(i), &d2y);
                        if t2[t] != 0 {
                            row[2 * m + pos] = f.neg(f.mul(sgn, t2[t]));
                            nonzero = true;
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
            let mut v = vec![0; 3 * n * n];
            for (pos, &b) in idx.iter().enumerate() {
                for (slot, coeff) in [(0, coeffs[pos]), (1, coeffs[m + pos]), (2, coeffs[2 * m + pos])]
                {
                    if coeff != 0 {
                        let base = slot * n * n;
                        let om = vectorize(&osp_mats[b]);
                        f.row_axpy(&mut v[base..base + n * n], &om, coeff);
                    }
                }
            }
            rows_all.push(v);
            parities_all.push(par);
        }
    }
    let span = Subspace::from_vectors(f, 3 * n * n, &rows_all);
    // echelonization preserves the graded split; recover parities per row
    let mut parities = Vec::with_capacity(span.dim());
    for rowv in span.basis_vectors() {
        let t = TrialityElement {
            maps: [
                unvectorize(f, n, &rowv[0..n * n]),
                unvectorize(f, n, &rowv[n * n..2 * n * n]),
                unvectorize(f, n, &rowv[2 * n * n..]),
            ],
            parity: 0,
        };
        let mut p = None;
        for d in &t.maps {
            if d.is_zero() {
                continue;
            }
            match crate::superspace::homogeneous_parity(d, a.space(), a.space()) {
                Some(q) if p.is_none() || p == Some(q) => p = Some(q),
                _ => return Err(Error::NotGraded),
            }
        }
        parities.push(p.unwrap_or(0));
    }

    // componentwise bracket structure constants
    let k = span.dim();
    let labels = (0..k).map(|i| format!("t{i}")).collect();
    let lie_space = SuperSpace::new(labels, parities.clone());
    let name = format!("tri({})", a.name());
    let mut b = StructureBuilder::new(&name, f, lie_space, AlgebraKind::Lie);
    let elements: Vec<TrialityElement> = (0..k)
        .map(|i| {
            let rowv = span.basis().row(i);
            TrialityElement {
                maps: [
                    unvectorize(f, n, &rowv[0..n * n]),
                    unvectorize(f, n, &rowv[n * n..2 * n * n]),
                    unvectorize(f, n, &rowv[2 * n * n..]),
                ],
                parity: parities[i],
            }
        })
        .collect();
    for i in 0..k {
        for j in 0..k {
            let br = TrialityElement {
                maps: std::array::from_fn(|c| {
                    OperatorSpan::bracket_matrices(
                        f,
                        &elements[i].maps[c],
                        elements[i].parity,
                        &elements[j].maps[c],
                        elements[j].parity,
                    )
                }),
                parity: (elements[i].parity + elements[j].parity) & 1,
            };
            let coords = span
                .coords(&br.to_vec())
                .ok_or_else(|| Error::NotInSpan(format!("tri bracket ({i},{j})")))?;
            b.add_vec(i, j, &coords);
        }
    }
    let lie = b.build()?;
    Ok(TrialityAlgebra {
        s: s.clone(),
        span,
        parities,
        lie,
    })
}

/// `sigma_{x,y}(z) = (-1)^{|y||z|} b(x,z) y - (-1)^{|x|(|y|+|z|)} b(y,z) x`
/// for homogeneous `x, y`.
pub fn sigma_xy(
    s: &SymmetricComposition,
    x: &[Scalar],
    px: Parity,
    y: &[Scalar],
    py: Parity,
) -> Matrix {
    let a = s.algebra();
    let f = a.field();
    let n = a.dim();
    let form = s.form();
    let mut m = Matrix::zeros(f, n, n);
    for j in 0..n {
        let pz = a.space().parity(j);
        let bxz = form.eval(x, &a.basis_vector(j));
        let byz = form.eval(y, &a.basis_vector(j));
        let s1 = f.mul(f.sign(py & pz), bxz);
        let s2 = f.mul(f.sign(px & (py ^ pz)), byz);
        for r in 0..n {
            let v = f.sub(f.mul(s1, y[r]), f.mul(s2, x[r]));
            if v != 0 {
                m.set(r, j, v);
            }
        }
    }
    m
}

/// `t_{x,y} = (sigma_{x,y}, b(x,y)/2 - r_x l_y, b(x,y)/2 - l_x r_y)` with
/// `l_x(y) = x y` and `r_x(y) = (-1)^{|x||y|} y x`.
pub fn t_xy(
    s: &SymmetricComposition,
    x: &[Scalar],
    px: Parity,
    y: &[Scalar],
    py: Parity,
) -> TrialityElement {
    let a = s.algebra();
    let f = a.field();
    let n = a.dim();
    let half_b = f.mul(f.half(), s.form().eval(x, y));
    let scaled_id = Matrix::identity(f, n).scale(half_b);
    let lx = a.left_mult_matrix(x);
    let ly = a.left_mult_matrix(y);
    let rx = a.signed_right_mult_matrix(x, px);
    let ry = a.signed_right_mult_matrix(y, py);
    TrialityElement {
        maps: [
            sigma_xy(s, x, px, y, py),
            scaled_id.sub(&rx.matmul(&ly)),
            scaled_id.sub(&lx.matmul(&ry)),
        ],
        parity: (px + py) & 1,
    }
}

/// Span of all `theta^i(t_{x,y})` over basis pairs, inside the triality
/// algebra. Returned in the ambient of triples.
pub fn t_span(s: &SymmetricComposition, tri: &TrialityAlgebra) -> Subspace {
    let a = s.algebra();
    let n = a.dim();
    let f = a.field();
    let mut vecs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let t = t_xy(
                s,
                &a.basis_vector(i),
                a.space().parity(i),
                &a.basis_vector(j),
                a.space().parity(j),
            );
            for pow in 0..3 {
                vecs.push(theta_pow(&t, pow).to_vec());
            }
        }
    }
    let _ = tri;
    Subspace::from_vectors(f, 3 * n * n, &vecs)
}

/// The three 3-dimensional ideals of the triality algebra of a
/// para-quaternion algebra, in closed form:
/// `ker pi_0 = {(0, -R_a, L_a)}`, `ker pi_1 = {(L_a, 0, -R_a)}`,
/// `ker pi_2 = {(-R_a, L_a, 0)}` for traceless `a`, where `L`/`R` are the
/// multiplications of the underlying quaternion algebra.
pub fn quaternion_tri_decomposition(
    q: &HurwitzSuperalgebra,
    s: &SymmetricComposition,
    tri: &TrialityAlgebra,
) -> Result<[Subspace; 3]> {
    let qa = q.algebra();
    let f = qa.field();
    let n = qa.dim();
    if n != 4 || qa.space().odd_dim() != 0 {
        return Err(Error::DimensionMismatch(
            "quaternion algebra of dimension 4 expected".into(),
        ));
    }
    // traceless part: orthogonal complement of the unit
    let bu: Vec<Scalar> = (0..n)
        .map(|j| q.form().eval(q.unit(), &qa.basis_vector(j)))
        .collect();
    let q0 = Matrix::from_rows(f, vec![bu]).kernel_basis();
    assert_eq!(q0.dim(), 3);

    let mut kers: Vec<Subspace> = Vec::new();
    for which in 0..3 {
        let mut vecs = Vec::new();
        for a_vec in q0.basis_vectors() {
            let la = qa.left_mult_matrix(a_vec);
            let ra = qa.signed_right_mult_matrix(a_vec, 0);
            let zero = Matrix::zeros(f, n, n);
            let neg_ra = ra.scale(f.neg(1));
            let maps = match which {
                0 => [zero.clone(), neg_ra, la],
                1 => [la, zero.clone(), neg_ra],
                _ => [neg_ra, la, zero.clone()],
            };
            let t = TrialityElement { maps, parity: 0 };
            if !satisfies_triality(s, &t) {
                return Err(Error::NotInSpan(
                    "closed-form triple violates the triality relation".into(),
                ));
            }
            if !tri.contains(&t) {
                return Err(Error::NotInSpan("closed-form triple outside tri".into()));
            }
            vecs.push(t.to_vec());
        }
        kers.push(Subspace::from_vectors(f, 3 * n * n, &vecs));
    }
    // directness and completeness
    for i in 0..3 {
        for j in (i + 1)..3 {
            if kers[i].intersect(&kers[j])?.dim() != 0 {
                return Err(Error::NotInSpan("kernels are not independent".into()));
            }
        }
    }
    let total = kers[0].sum(&kers[1])?.sum(&kers[2])?;
    if &total != tri.span() {
        return Err(Error::NotInSpan("kernels do not sum to tri".into()));
    }
    Ok([kers[0].clone(), kers[1].clone(), kers[2].clone()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{make_hurwitz, make_symmetric, HurwitzKind};
    use crate::superalgebra::CheckMode;

    fn gf3() -> PrimeField {
        PrimeField::gf3()
    }

    #[test]
    fn osp_dimensions() {
        let f = gf3();
        let s12 = make_symmetric(HurwitzKind::B12, f).unwrap();
        let osp = osp_basis(s12.algebra().space(), s12.form()).unwrap();
        assert_eq!(osp.graded_dim(), (3, 2));

        let s2 = make_symmetric(HurwitzKind::S2, f).unwrap();
        let osp = osp_basis(s2.algebra().space(), s2.form()).unwrap();
        assert_eq!(osp.dim(), 1);
    }

    #[test]
    fn tri_dimensions_catalog() {
        let f = gf3();
        let expected = [
            (HurwitzKind::S1, (0, 0)),
            (HurwitzKind::S2, (2, 0)),
            (HurwitzKind::S4, (9, 0)),
            (HurwitzKind::S8, (28, 0)),
            (HurwitzKind::B12, (3, 2)),
            (HurwitzKind::B42, (9, 8)),
        ];
        for (kind, dims) in expected {
            let s = make_symmetric(kind, f).unwrap();
            let tri = tri_basis(&s).unwrap();
            assert_eq!(tri.graded_dim(), dims, "{kind:?}");
            assert!(tri
                .as_lie()
                .check_super_jacobi(CheckMode::Exhaustive)
                .passed());
        }
    }

    #[test]
    fn tri_s2_description_and_t1u() {
        let f = gf3();
        let s2 = make_symmetric(HurwitzKind::S2, f).unwrap();
        let tri = tri_basis(&s2).unwrap();
        assert_eq!(tri.dim(), 2);
        // sigma = (1/2) sigma_{1,u} swaps 1 and u
        let one = vec![1, 0];
        let u = vec![0, 1];
        let sigma = sigma_xy(&s2, &one, 0, &u, 0).scale(f.half());
        assert_eq!(sigma.mul_vec(&one), u);
        assert_eq!(sigma.mul_vec(&u), one);
        // every basis triple is (a0 sigma, a1 sigma, a2 sigma) with sum 0
        for t in tri.elements() {
            let mut alphas = Vec::new();
            for d in &t.maps {
                // d = alpha sigma: read alpha off the (0,1) entry (sigma(u)=1)
                let alpha = d.get(0, 1);
                assert_eq!(d, &sigma.scale(alpha));
                alphas.push(alpha);
            }
            assert_eq!(f.add(f.add(alphas[0], alphas[1]), alphas[2]), 0);
        }
        // t_{1,u} = (2 sigma, -sigma, -sigma)
        let t1u = t_xy(&s2, &one, 0, &u, 0);
        assert_eq!(t1u.maps[0], sigma.scale(2));
        assert_eq!(t1u.maps[1], sigma.scale(f.neg(1)));
        assert_eq!(t1u.maps[2], sigma.scale(f.neg(1)));
        assert!(tri.contains(&t1u));
        // theta(t_{1,u}) = (-sigma, 2 sigma, -sigma)
        let sh = theta(&t1u);
        assert_eq!(sh.maps[0], sigma.scale(f.neg(1)));
        assert_eq!(sh.maps[1], sigma.scale(2));
    }

    #[test]
    fn tri_s12_is_diagonal() {
        let f = gf3();
        let s12 = make_symmetric(HurwitzKind::B12, f).unwrap();
        let tri = tri_basis(&s12).unwrap();
        assert_eq!(tri.graded_dim(), (3, 2));
        for t in tri.elements() {
            assert_eq!(t.maps[0], t.maps[1]);
            assert_eq!(t.maps[1], t.maps[2]);
        }
    }

    #[test]
    fn theta_is_order_three_automorphism() {
        let f = gf3();
        for kind in [HurwitzKind::S2, HurwitzKind::B12, HurwitzKind::S4] {
            let s = make_symmetric(kind, f).unwrap();
            let tri = tri_basis(&s).unwrap();
            if tri.dim() == 0 {
                continue;
            }
            for t in tri.elements() {
                assert_eq!(theta_pow(&t, 3), t);
                assert!(satisfies_triality(&s, &theta(&t)));
            }
            let th = tri.theta_matrix().unwrap();
            let rep =
                crate::superalgebra::hom_check(&th, tri.as_lie(), tri.as_lie(), None).unwrap();
            assert!(rep.bijective_hom());
        }
        // theta(0) = 0
        let z = TrialityElement::zero(f, 2);
        assert!(theta(&z).is_zero());
    }

    #[test]
    fn sigma_examples() {
        let f = gf3();
        let s8 = make_symmetric(HurwitzKind::S8, f).unwrap();
        // isotropic even x: sigma_{x,x} = 0
        let a = s8.algebra();
        let x = a.basis_vector(1); // q(e12) = 0
        assert!(sigma_xy(&s8, &x, 0, &x, 0).is_zero());

        // odd pair in S12 kills even arguments
        let s12 = make_symmetric(HurwitzKind::B12, f).unwrap();
        let u = vec![0, 1, 0];
        let v = vec![0, 0, 1];
        let s = sigma_xy(&s12, &u, 1, &v, 1);
        assert_eq!(s.mul_vec(&[1, 0, 0]), vec![0, 0, 0]);
    }

    #[test]
    fn t_xy_memberships() {
        let f = gf3();
        for kind in [HurwitzKind::S8, HurwitzKind::B12, HurwitzKind::B42] {
            let s = make_symmetric(kind, f).unwrap();
            let a = s.algebra();
            let n = a.dim();
            for i in 0..n {
                for j in 0..n {
                    let t = t_xy(
                        &s,
                        &a.basis_vector(i),
                        a.space().parity(i),
                        &a.basis_vector(j),
                        a.space().parity(j),
                    );
                    assert!(satisfies_triality(&s, &t), "{kind:?} t_({i},{j})");
                }
            }
            // t_{0,y} = 0
            let zero = vec![0; n];
            let t = t_xy(&s, &zero, 0, &a.basis_vector(0), a.space().parity(0));
            assert!(t.is_zero());
        }
    }

    #[test]
    fn t_span_dimensions() {
        let f = gf3();
        // S2: the span of theta^i(t_{x,y}) is a single line
        let s2 = make_symmetric(HurwitzKind::S2, f).unwrap();
        let tri2 = tri_basis(&s2).unwrap();
        assert_eq!(t_span(&s2, &tri2).dim(), 1);
        // S8 and the super cases: the span is all of tri
        for kind in [HurwitzKind::S8, HurwitzKind::B12, HurwitzKind::B42] {
            let s = make_symmetric(kind, f).unwrap();
            let tri = tri_basis(&s).unwrap();
            assert_eq!(&t_span(&s, &tri), tri.span(), "{kind:?}");
        }
    }

    #[test]
    fn quaternion_decomposition() {
        let f = gf3();
        let q = make_hurwitz(HurwitzKind::S4, f).unwrap();
        let qbar = crate::composition::para_conjugate(&q).unwrap();
        assert!(crate::composition::check_symmetric(&qbar).unwrap().passed());
        let tri = tri_basis(&qbar).unwrap();
        assert_eq!(tri.dim(), 9);
        let kers = quaternion_tri_decomposition(&q, &qbar, &tri).unwrap();
        for k in &kers {
            assert_eq!(k.dim(), 3);
        }
        assert_eq!(kers[0].intersect(&kers[1]).unwrap().dim(), 0);
    }
}
