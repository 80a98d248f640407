//! The split quaternion algebra in the orthogonal basis `{1, e0, e1, e2}`
//! and the Lie superalgebra `T(Q, H) = (Q0 ⊗ H) ⊕ der H` built on it;
//! with `Q` split this is the Tits-Kantor-Koecher superalgebra of the
//! Jordan superalgebra `H`.
//!
//! Basis order of `T(Q, H)`: the blocks `e0 ⊗ H`, `e1 ⊗ H`, `e2 ⊗ H` in the
//! basis order of `H`, followed by the derivation basis.

use crate::composition::HurwitzSuperalgebra;
use crate::derivations::{derivations, OperatorSpan};
use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use crate::linalg::Matrix;
use crate::superalgebra::{AlgebraKind, BilinearForm, StructureBuilder, SuperAlgebra};
use crate::superspace::SuperSpace;

/// Split quaternion algebra with unit `1` and `e_i e_{i+1} = -e_{i+2} =
/// -e_{i+1} e_i`, `e_i^2 = -1`; the norm has `q(1) = q(e_i) = 1` with an
/// orthogonal basis. In characteristic 3 the norm is isotropic.
pub fn make_split_quaternion(field: PrimeField) -> Result<HurwitzSuperalgebra> {
    let f = field;
    let space = SuperSpace::even(
        ["1", "e0", "e1", "e2"].iter().map(|s| s.to_string()).collect(),
    );
    let mut b = StructureBuilder::new("Q", f, space, AlgebraKind::Composition);
    b.add(0, 0, 0, 1);
    for i in 0..3usize {
        b.add(0, 1 + i, 1 + i, 1);
        b.add(1 + i, 0, 1 + i, 1);
        b.add_signed(1 + i, 1 + i, 0, -1);
        // e_i e_{i+1} = -e_{i+2}, e_{i+1} e_i = e_{i+2}
        b.add_signed(1 + i, 1 + (i + 1) % 3, 1 + (i + 2) % 3, -1);
        b.add_signed(1 + (i + 1) % 3, 1 + i, 1 + (i + 2) % 3, 1);
    }
    let gram = Matrix::from_i64(
        f,
        vec![
            vec![2, 0, 0, 0],
            vec![0, 2, 0, 0],
            vec![0, 0, 2, 0],
            vec![0, 0, 0, 2],
        ],
    );
    let bf = BilinearForm::new(gram, b.space())?;
    let algebra = b.with_form(bf).build()?;
    crate::composition::HurwitzSuperalgebra::from_parts(algebra, vec![1, 0, 0, 0])
}

/// `T(Q, H) = (Q0 ⊗ H) ⊕ der H` with the bracket clauses
/// `[d, a⊗x] = a⊗d(x)` and
/// `[a⊗x, b⊗y] = ([a,b] ⊗ x y) - 2 b_q(a,b) [L_x, L_y]`.
#[derive(Debug, Clone)]
pub struct TitsAlgebra {
    pub q: HurwitzSuperalgebra,
    pub h: SuperAlgebra,
    pub der_h: OperatorSpan,
    pub t: SuperAlgebra,
}

impl TitsAlgebra {
    pub fn algebra(&self) -> &SuperAlgebra {
        &self.t
    }

    /// Index of `e_block ⊗ (basis a of H)`.
    pub fn tensor_index(&self, block: usize, a: usize) -> usize {
        block * self.h.dim() + a
    }

    pub fn der_index(&self, m: usize) -> usize {
        3 * self.h.dim() + m
    }

    /// Embed `e_block ⊗ x` for a coordinate vector `x` of H.
    pub fn tensor(&self, block: usize, x: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![0; self.t.dim()];
        for (a, &c) in x.iter().enumerate() {
            v[self.tensor_index(block, a)] = c;
        }
        v
    }
}

pub fn make_tits(q: &HurwitzSuperalgebra, h: &SuperAlgebra) -> Result<TitsAlgebra> {
    let f = h.field();
    if q.algebra().field() != f {
        return Err(Error::FieldMismatch);
    }
    if q.dim() != 4 || q.algebra().space().odd_dim() != 0 {
        return Err(Error::DimensionMismatch("quaternion algebra expected".into()));
    }
    let der = derivations(h);
    let nh = h.dim();
    let k = der.dim();
    let hsp = h.space();

    let mut labels = Vec::new();
    let mut parities = Vec::new();
    for b in 0..3 {
        for a in 0..nh {
            labels.push(format!("q{b}:{}", hsp.label(a)));
            parities.push(hsp.parity(a));
        }
    }
    for m in 0..k {
        labels.push(format!("d{m}"));
        parities.push(der.parities()[m]);
    }
    let space = SuperSpace::new(labels, parities);
    let name = format!("T(Q,{})", h.name());
    let mut bld = StructureBuilder::new(&name, f, space, AlgebraKind::Lie);
    let tensor = |b: usize, a: usize| b * nh + a;
    let dix = |m: usize| 3 * nh + m;

    // der block bracket
    let der_mats = der.matrices();
    for i in 0..k {
        for j in 0..k {
            let br = OperatorSpan::bracket_matrices(
                f,
                &der_mats[i],
                der.parities()[i],
                &der_mats[j],
                der.parities()[j],
            );
            let coords = der
                .coords(&br)
                .ok_or_else(|| Error::NotInSpan("der bracket".into()))?;
            for (t, &c) in coords.iter().enumerate() {
                if c != 0 {
                    bld.add(dix(i), dix(j), dix(t), c);
                }
            }
        }
    }
    // [d, a ⊗ x] = a ⊗ d(x)
    for m in 0..k {
        for b in 0..3 {
            for a in 0..nh {
                for r in 0..nh {
                    let c = der_mats[m].get(r, a);
                    if c != 0 {
                        bld.add(dix(m), tensor(b, a), tensor(b, r), c);
                    }
                }
            }
        }
    }
    // inner derivations, in der coordinates
    let l = h.left_mult_table();
    let mut dxy = vec![Vec::new(); nh * nh];
    for x in 0..nh {
        for y in 0..nh {
            let br = OperatorSpan::bracket_matrices(
                f,
                &l[x],
                hsp.parity(x),
                &l[y],
                hsp.parity(y),
            );
            let coords = der
                .coords(&br)
                .ok_or_else(|| Error::NotInSpan(format!("[L_{x}, L_{y}] in der")))?;
            dxy[x * nh + y] = coords
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c != 0)
                .map(|(i, &c)| (i, c))
                .collect::<Vec<_>>();
        }
    }
    // [e_i ⊗ x, e_j ⊗ y] = ([e_i, e_j] ⊗ x y) - 2 b_q(e_i, e_j) [L_x, L_y]
    let qa = q.algebra();
    let qform = q.form();
    for bi in 0..3usize {
        for bj in 0..3usize {
            // commutator [e_bi, e_bj] in Q, supported on the traceless part
            let ei = qa.basis_vector(1 + bi);
            let ej = qa.basis_vector(1 + bj);
            let mut comm = qa.mult_vec(&ei, &ej);
            let ji = qa.mult_vec(&ej, &ei);
            for (c, &v) in comm.iter_mut().zip(&ji) {
                *c = f.sub(*c, v);
            }
            assert_eq!(comm[0], 0, "commutator of traceless elements is traceless");
            let minus2b = f.neg(f.mul(2 % f.modulus(), qform.eval_basis(1 + bi, 1 + bj)));
            for x in 0..nh {
                for y in 0..nh {
                    for bk in 0..3usize {
                        let qc = comm[1 + bk];
                        if qc != 0 {
                            for &(t, c) in h.mult_basis(x, y) {
                                bld.add(
                                    tensor(bi, x),
                                    tensor(bj, y),
                                    tensor(bk, t as usize),
                                    f.mul(qc, c),
                                );
                            }
                        }
                    }
                    if minus2b != 0 {
                        for &(m, c) in &dxy[x * nh + y] {
                            bld.add(tensor(bi, x), tensor(bj, y), dix(m), f.mul(minus2b, c));
                        }
                    }
                }
            }
        }
    }
    bld.complete_graded_opposites();
    let t = bld.build()?;
    Ok(TitsAlgebra {
        q: q.clone(),
        h: h.clone(),
        der_h: der,
        t,
    })
}

/// The Tits-Kantor-Koecher superalgebra: `T(Q, H)` over the split
/// quaternion algebra of this module.
pub fn tkk(h: &SuperAlgebra) -> Result<TitsAlgebra> {
    let q = make_split_quaternion(h.field())?;
    make_tits(&q, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{check_composition, HurwitzKind};
    use crate::jordan::{make_h3_kind, make_k3, make_k9};
    use crate::linalg::Subspace;
    use crate::superalgebra::CheckMode;

    fn gf3() -> PrimeField {
        PrimeField::gf3()
    }

    #[test]
    fn quaternion_table_and_norm() {
        let q = make_split_quaternion(gf3()).unwrap();
        let a = q.algebra();
        // e0 e1 = -e2
        assert_eq!(
            a.mult_vec(&a.basis_vector(1), &a.basis_vector(2)),
            vec![0, 0, 0, 2]
        );
        // composition algebra (it is a Hurwitz algebra)
        assert!(check_composition(&q).unwrap().passed());
        // norm represents zero in characteristic 3: q(e0+e1+e2) = 3 = 0
        let f = gf3();
        let v = vec![0, 1, 1, 1];
        let qv = f.mul(f.half(), q.form().eval(&v, &v));
        assert_eq!(qv, 0);
        assert_eq!(q.form().eval_basis(1, 1), 2);
    }

    #[test]
    fn traceless_part_is_simple_three_dimensional() {
        let q = make_split_quaternion(gf3()).unwrap();
        let a = q.algebra();
        let f = gf3();
        // [Q0, Q0] spans Q0
        let mut vecs = Vec::new();
        for i in 1..4 {
            for j in 1..4 {
                let mut c = a.mult_vec(&a.basis_vector(i), &a.basis_vector(j));
                let ji = a.mult_vec(&a.basis_vector(j), &a.basis_vector(i));
                for (x, &y) in c.iter_mut().zip(&ji) {
                    *x = f.sub(*x, y);
                }
                vecs.push(c);
            }
        }
        let span = Subspace::from_vectors(f, 4, &vecs);
        assert_eq!(span.dim(), 3);
        assert!(span.contains(&[0, 1, 0, 0]));
    }

    #[test]
    fn tits_dimensions_and_jacobi() {
        let f = gf3();
        let k3 = make_k3(f).unwrap();
        let t = tkk(&k3).unwrap();
        assert_eq!(t.algebra().graded_dim(), (6, 8));
        assert!(t.algebra().check_super_jacobi(CheckMode::Exhaustive).passed());

        let k9 = make_k9(f).unwrap();
        let t = tkk(&k9).unwrap();
        assert_eq!(t.algebra().graded_dim(), (21, 16));
        assert!(t.algebra().check_super_jacobi(CheckMode::Exhaustive).passed());

        let h3 = make_h3_kind(HurwitzKind::B12, f).unwrap();
        let t = tkk(h3.algebra()).unwrap();
        assert_eq!(t.algebra().graded_dim(), (24, 26));
        assert!(t.algebra().check_super_jacobi(CheckMode::Exhaustive).passed());
    }

    #[test]
    fn block_closures() {
        let f = gf3();
        let k3 = make_k3(f).unwrap();
        let t = tkk(&k3).unwrap();
        let nh = 3;
        let dstart = 3 * nh;
        let dim = t.algebra().dim();
        // der block closes on itself
        for i in dstart..dim {
            for j in dstart..dim {
                for &(k, _) in t.algebra().mult_basis(i, j) {
                    assert!((k as usize) >= dstart);
                }
            }
        }
        // [der, tensor block] stays in the tensor blocks
        for i in dstart..dim {
            for j in 0..dstart {
                for &(k, _) in t.algebra().mult_basis(i, j) {
                    assert!((k as usize) < dstart);
                }
            }
        }
    }
}
