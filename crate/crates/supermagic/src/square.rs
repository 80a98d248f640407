//! The Supermagic Square: the Lie superalgebra g(S,S') built from two
//! symmetric composition superalgebras on the space
//! `tri(S) ⊕ tri(S') ⊕ iota_0(S⊗S') ⊕ iota_1(S⊗S') ⊕ iota_2(S⊗S')`.
//!
//! Basis order is the block order above, with each iota block in
//! lexicographic (basis of S) x (basis of S') order. All five bracket
//! clauses carry their exact Koszul signs; the builder's super-
//! anticommutativity validation doubles as the internal sign-consistency
//! assertion.

use std::ops::Range;

use crate::composition::{make_symmetric, HurwitzKind, SymmetricComposition};
use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use crate::linalg::Matrix;
use crate::superalgebra::{hom_check, AlgebraKind, CheckMode, StructureBuilder, SuperAlgebra};
use crate::superspace::SuperSpace;
use crate::triality::{t_xy, theta_pow, tri_basis, TrialityAlgebra};

/// One cell of the square, with its block decomposition.
#[derive(Debug, Clone)]
pub struct MagicCell {
    pub s: SymmetricComposition,
    pub s_prime: SymmetricComposition,
    pub tri_s: TrialityAlgebra,
    pub tri_s_prime: TrialityAlgebra,
    pub g: SuperAlgebra,
    pub tri_s_range: Range<usize>,
    pub tri_s_prime_range: Range<usize>,
    pub iota_ranges: [Range<usize>; 3],
}

impl MagicCell {
    pub fn iota_index(&self, block: usize, r: usize, s: usize) -> usize {
        let n2 = self.s_prime.dim();
        self.iota_ranges[block].start + r * n2 + s
    }
}

/// Assemble g(S, S').
pub fn build_g(s: &SymmetricComposition, s_prime: &SymmetricComposition) -> Result<MagicCell> {
    let f = s.algebra().field();
    if f != s_prime.algebra().field() {
        return Err(Error::FieldMismatch);
    }
    let tri_s = tri_basis(s)?;
    let tri_sp = tri_basis(s_prime)?;
    let (a, ap) = (tri_s.dim(), tri_sp.dim());
    let (n1, n2) = (s.dim(), s_prime.dim());
    let asp = s.algebra().space();
    let apsp = s_prime.algebra().space();
    let dim = a + ap + 3 * n1 * n2;

    let mut labels = Vec::with_capacity(dim);
    let mut parities = Vec::with_capacity(dim);
    for i in 0..a {
        labels.push(format!("t{i}"));
        parities.push(tri_s.parities()[i]);
    }
    for i in 0..ap {
        labels.push(format!("t'{i}"));
        parities.push(tri_sp.parities()[i]);
    }
    for b in 0..3 {
        for r in 0..n1 {
            for q in 0..n2 {
                labels.push(format!("i{b}:{}|{}", asp.label(r), apsp.label(q)));
                parities.push((asp.parity(r) + apsp.parity(q)) & 1);
            }
        }
    }
    let space = SuperSpace::new(labels, parities);
    let name = format!("g({},{})", s.algebra().name(), s_prime.algebra().name());
    let mut bld = StructureBuilder::new(&name, f, space, AlgebraKind::Lie);

    let iota = |b: usize, r: usize, q: usize| a + ap + b * n1 * n2 + r * n2 + q;

    // tri(S) and tri(S') blocks carry their own brackets; they commute.
    for i in 0..a {
        for j in 0..a {
            for &(k, c) in tri_s.as_lie().mult_basis(i, j) {
                bld.add(i, j, k as usize, c);
            }
        }
    }
    for i in 0..ap {
        for j in 0..ap {
            for &(k, c) in tri_sp.as_lie().mult_basis(i, j) {
                bld.add(a + i, a + j, a + k as usize, c);
            }
        }
    }

    // [(d0,d1,d2), iota_b(x ⊗ x')] = iota_b(d_b(x) ⊗ x')
    let tri_elems = tri_s.elements();
    for (m, t) in tri_elems.iter().enumerate() {
        for b in 0..3 {
            let d = &t.maps[b];
            for r in 0..n1 {
                for q in 0..n2 {
                    for target in 0..n1 {
                        let c = d.get(target, r);
                        if c != 0 {
                            bld.add(m, iota(b, r, q), iota(b, target, q), c);
                        }
                    }
                }
            }
        }
    }
    // [(d0',d1',d2'), iota_b(x ⊗ x')] = (-1)^{|d'||x|} iota_b(x ⊗ d'_b(x'))
    let trip_elems = tri_sp.elements();
    for (m, t) in trip_elems.iter().enumerate() {
        for b in 0..3 {
            let d = &t.maps[b];
            for r in 0..n1 {
                let sgn = f.sign(t.parity & asp.parity(r));
                for q in 0..n2 {
                    for target in 0..n2 {
                        let c = d.get(target, q);
                        if c != 0 {
                            bld.add(a + m, iota(b, r, q), iota(b, r, target), f.mul(sgn, c));
                        }
                    }
                }
            }
        }
    }

    // [iota_b(x⊗x'), iota_{b+1}(y⊗y')] = (-1)^{|x'||y|} iota_{b+2}((x y) ⊗ (x' y'))
    let sa = s.algebra();
    let spa = s_prime.algebra();
    for b in 0..3usize {
        for r in 0..n1 {
            for q in 0..n2 {
                for r2 in 0..n1 {
                    let sgn = f.sign(apsp.parity(q) & asp.parity(r2));
                    for q2 in 0..n2 {
                        for &(k1, v1) in sa.mult_basis(r, r2) {
                            for &(k2, v2) in spa.mult_basis(q, q2) {
                                bld.add(
                                    iota(b, r, q),
                                    iota((b + 1) % 3, r2, q2),
                                    iota((b + 2) % 3, k1 as usize, k2 as usize),
                                    f.mul(sgn, f.mul(v1, v2)),
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    // [iota_b(x⊗x'), iota_b(y⊗y')] =
    //   (-1)^{|x||x'| + |x||y'| + |y||y'|} b'(x',y') theta^b(t_{x,y})
    //   + (-1)^{|y||x'|} b(x,y) theta'^b(t'_{x',y'})
    // Precompute the coordinates of theta^b(t) for all basis pairs.
    let t_coords = |tri: &TrialityAlgebra,
                    s: &SymmetricComposition|
     -> Result<Vec<Vec<Vec<(usize, Scalar)>>>> {
        let al = s.algebra();
        let n = al.dim();
        let mut out = vec![vec![Vec::new(); n * n]; 3];
        for x in 0..n {
            for y in 0..n {
                let t = t_xy(
                    s,
                    &al.basis_vector(x),
                    al.space().parity(x),
                    &al.basis_vector(y),
                    al.space().parity(y),
                );
                for b in 0..3 {
                    let coords = tri.coords(&theta_pow(&t, b)).ok_or_else(|| {
                        Error::NotInSpan(format!("theta^{b}(t_({x},{y}))"))
                    })?;
                    out[b][x * n + y] = coords
                        .iter()
                        .enumerate()
                        .filter(|&(_, &c)| c != 0)
                        .map(|(i, &c)| (i, c))
                        .collect();
                }
            }
        }
        Ok(out)
    };
    let tc_s = t_coords(&tri_s, s)?;
    let tc_sp = t_coords(&tri_sp, s_prime)?;
    let bs = s.form();
    let bsp = s_prime.form();
    for b in 0..3usize {
        for r in 0..n1 {
            for q in 0..n2 {
                for r2 in 0..n1 {
                    for q2 in 0..n2 {
                        let (px, pxp, py, pyp) = (
                            asp.parity(r),
                            apsp.parity(q),
                            asp.parity(r2),
                            apsp.parity(q2),
                        );
                        let bxy = bsp.eval_basis(q, q2);
                        if bxy != 0 {
                            let sgn = f.sign((px & pxp) ^ (px & pyp) ^ (py & pyp));
                            let coeff = f.mul(sgn, bxy);
                            for &(k, c) in &tc_s[b][r * n1 + r2] {
                                bld.add(iota(b, r, q), iota(b, r2, q2), k, f.mul(coeff, c));
                            }
                        }
                        let bxx = bs.eval_basis(r, r2);
                        if bxx != 0 {
                            let sgn = f.sign(py & pxp);
                            let coeff = f.mul(sgn, bxx);
                            for &(k, c) in &tc_sp[b][q * n2 + q2] {
                                bld.add(iota(b, r, q), iota(b, r2, q2), a + k, f.mul(coeff, c));
                            }
                        }
                    }
                }
            }
        }
    }

    // remaining ordered pairs by super-anticommutativity; the build()
    // validation then asserts global sign consistency
    bld.complete_graded_opposites();
    let g = bld.build()?;

    Ok(MagicCell {
        s: s.clone(),
        s_prime: s_prime.clone(),
        tri_s,
        tri_s_prime: tri_sp,
        g,
        tri_s_range: 0..a,
        tri_s_prime_range: a..a + ap,
        iota_ranges: [
            (a + ap)..(a + ap + n1 * n2),
            (a + ap + n1 * n2)..(a + ap + 2 * n1 * n2),
            (a + ap + 2 * n1 * n2)..(a + ap + 3 * n1 * n2),
        ],
    })
}

/// Build a cell from catalog names.
pub fn build_cell(k1: HurwitzKind, k2: HurwitzKind, field: PrimeField) -> Result<MagicCell> {
    let s = make_symmetric(k1, field)?;
    let sp = make_symmetric(k2, field)?;
    build_g(&s, &sp)
}

/// The block-swap isomorphism g(S,S') -> g(S',S):
/// tri blocks exchanged, `iota_b(x⊗x') -> (-1)^{|x||x'|} iota_b(x'⊗x)`.
pub fn swap_map(from: &MagicCell, to: &MagicCell) -> Matrix {
    let f = from.g.field();
    let dim = from.g.dim();
    let mut m = Matrix::zeros(f, dim, dim);
    let a = from.tri_s_range.len();
    let ap = from.tri_s_prime_range.len();
    for i in 0..a {
        m.set(to.tri_s_prime_range.start + i, i, 1);
    }
    for i in 0..ap {
        m.set(to.tri_s_range.start + i, a + i, 1);
    }
    let (n1, n2) = (from.s.dim(), from.s_prime.dim());
    let asp = from.s.algebra().space();
    let apsp = from.s_prime.algebra().space();
    for b in 0..3 {
        for r in 0..n1 {
            for q in 0..n2 {
                let sgn = f.sign(asp.parity(r) & apsp.parity(q));
                m.set(to.iota_index(b, q, r), from.iota_index(b, r, q), sgn);
            }
        }
    }
    m
}

pub const CATALOG: [HurwitzKind; 6] = [
    HurwitzKind::S1,
    HurwitzKind::S2,
    HurwitzKind::S4,
    HurwitzKind::S8,
    HurwitzKind::B12,
    HurwitzKind::B42,
];

/// The 21 upper-triangle cell name pairs, in row-major order.
pub fn upper_triangle() -> Vec<(HurwitzKind, HurwitzKind)> {
    let mut out = Vec::new();
    for (i, &k1) in CATALOG.iter().enumerate() {
        for &k2 in &CATALOG[i..] {
            out.push((k1, k2));
        }
    }
    out
}

/// A computed row of the dimension table.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CellDims {
    pub s: String,
    pub s_prime: String,
    pub even: usize,
    pub odd: usize,
}

/// Graded dimension of each selected cell, re-derived from the construction.
pub fn square_table(
    cells: &[(HurwitzKind, HurwitzKind)],
    field: PrimeField,
) -> Result<Vec<CellDims>> {
    let mut out = Vec::new();
    for &(k1, k2) in cells {
        let cell = build_cell(k1, k2, field)?;
        let (even, odd) = cell.g.graded_dim();
        out.push(CellDims {
            s: k1.cli_name().to_string(),
            s_prime: k2.cli_name().to_string(),
            even,
            odd,
        });
    }
    Ok(out)
}

/// The even part of a cell closes on itself and the odd part is a module
/// over it (both are consequences of parity homogeneity; this re-checks
/// them directly on the structure constants).
pub fn check_block_structure(cell: &MagicCell) -> bool {
    let g = &cell.g;
    let n = g.dim();
    let p = g.space().parities();
    for i in 0..n {
        for j in 0..n {
            for &(k, _) in g.mult_basis(i, j) {
                if p[k as usize] != (p[i] + p[j]) & 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Jacobi check policy for a cell of the given dimension.
pub fn jacobi_mode(dim: usize, exhaustive_limit: usize, sample: usize, seed: u64) -> CheckMode {
    if dim <= exhaustive_limit {
        CheckMode::Exhaustive
    } else {
        CheckMode::Sampled {
            count: sample,
            seed,
        }
    }
}

/// Verify the block-swap symmetry for a pair of catalog names.
pub fn check_symmetry(k1: HurwitzKind, k2: HurwitzKind, field: PrimeField) -> Result<bool> {
    let c12 = build_cell(k1, k2, field)?;
    let c21 = build_cell(k2, k1, field)?;
    let m = swap_map(&c12, &c21);
    let rep = hom_check(&m, &c12.g, &c21.g, None)?;
    Ok(rep.bijective_hom())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> PrimeField {
        PrimeField::gf3()
    }

    #[test]
    fn sl2_cell() {
        let cell = build_cell(HurwitzKind::S1, HurwitzKind::S1, gf3()).unwrap();
        assert_eq!(cell.g.graded_dim(), (3, 0));
        assert!(cell.g.check_super_jacobi(CheckMode::Exhaustive).passed());
        // [iota_0(1⊗1), iota_1(1⊗1)] = iota_2(1⊗1)
        let i0 = cell.iota_index(0, 0, 0);
        let i1 = cell.iota_index(1, 0, 0);
        let i2 = cell.iota_index(2, 0, 0);
        assert_eq!(cell.g.mult_basis(i0, i1), &[(i2 as u32, 1)]);
    }

    #[test]
    fn super_cells_small() {
        let cell = build_cell(HurwitzKind::S1, HurwitzKind::B12, gf3()).unwrap();
        assert_eq!(cell.g.graded_dim(), (6, 8));
        assert!(cell.g.check_super_jacobi(CheckMode::Exhaustive).passed());

        let cell = build_cell(HurwitzKind::B12, HurwitzKind::B12, gf3()).unwrap();
        assert_eq!(cell.g.graded_dim(), (21, 16));
        assert!(cell.g.check_super_jacobi(CheckMode::Exhaustive).passed());
    }

    #[test]
    fn symmetry_small_cells() {
        for (k1, k2) in [
            (HurwitzKind::S1, HurwitzKind::S2),
            (HurwitzKind::S1, HurwitzKind::B12),
            (HurwitzKind::S2, HurwitzKind::B12),
            (HurwitzKind::B12, HurwitzKind::B42),
        ] {
            assert!(check_symmetry(k1, k2, gf3()).unwrap(), "{k1:?},{k2:?}");
        }
    }

    #[test]
    fn empty_selection_empty_table() {
        assert!(square_table(&[], gf3()).unwrap().is_empty());
    }

    #[test]
    fn block_structure() {
        let cell = build_cell(HurwitzKind::S2, HurwitzKind::B12, gf3()).unwrap();
        assert!(check_block_structure(&cell));
        assert_eq!(cell.g.graded_dim(), (11, 14));
    }
}
