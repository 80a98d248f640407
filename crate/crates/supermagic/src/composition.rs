//! The split Hurwitz (super)algebras and their para-Hurwitz counterparts:
//! k, k x k, Mat2(k), the split Cayley algebra, and — in characteristic 3
//! only — the superalgebras B(1,2) and B(4,2).
//!
//! Basis orders are fixed and documented per algebra so that structure
//! constant files and isomorphism matrices are reproducible:
//!   S1  = [1]
//!   S2  = [1, u]                 (k x k with 1 = (1,1), u = (1,-1))
//!   S4  = [e11, e12, e21, e22]   (matrix units)
//!   S8  = [e11, e12, e21, e22, f11, f12, f21, f22]  (doubled Mat2)
//!   B12 = [1, u, v]              (u, v odd, <u|v> = 1)
//!   B42 = [e11, e12, e21, e22, u, v]  (End(V) in the basis {u, v}, then V)

use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use crate::linalg::Matrix;
use crate::superalgebra::{AlgebraKind, BilinearForm, StructureBuilder, SuperAlgebra};
use crate::superspace::SuperSpace;

/// Catalog of split unital composition (super)algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HurwitzKind {
    /// The ground field k, dimension (1|0).
    S1,
    /// k x k, dimension (2|0).
    S2,
    /// Mat2(k), dimension (4|0).
    S4,
    /// Split Cayley algebra, dimension (8|0).
    S8,
    /// B(1,2), dimension (1|2); characteristic 3 only.
    B12,
    /// B(4,2), dimension (4|2); characteristic 3 only.
    B42,
}

impl HurwitzKind {
    pub fn cli_name(&self) -> &'static str {
        match self {
            HurwitzKind::S1 => "S1",
            HurwitzKind::S2 => "S2",
            HurwitzKind::S4 => "S4",
            HurwitzKind::S8 => "S8",
            HurwitzKind::B12 => "S12",
            HurwitzKind::B42 => "S42",
        }
    }

    pub fn from_cli_name(name: &str) -> Option<Self> {
        Some(match name {
            "S1" => HurwitzKind::S1,
            "S2" => HurwitzKind::S2,
            "S4" => HurwitzKind::S4,
            "S8" => HurwitzKind::S8,
            "S12" | "B12" => HurwitzKind::B12,
            "S42" | "B42" => HurwitzKind::B42,
            _ => return None,
        })
    }

    pub fn all() -> [HurwitzKind; 6] {
        [
            HurwitzKind::S1,
            HurwitzKind::S2,
            HurwitzKind::S4,
            HurwitzKind::S8,
            HurwitzKind::B12,
            HurwitzKind::B42,
        ]
    }

    pub fn is_super(&self) -> bool {
        matches!(self, HurwitzKind::B12 | HurwitzKind::B42)
    }
}

/// A unital composition (super)algebra with its norm.
#[derive(Debug, Clone)]
pub struct HurwitzSuperalgebra {
    algebra: SuperAlgebra,
    unit: Vec<Scalar>,
}

impl HurwitzSuperalgebra {
    /// Assemble from a composition-kind algebra carrying its norm and a
    /// distinguished unit. Unitality and regularity are validated.
    pub fn from_parts(algebra: SuperAlgebra, unit: Vec<Scalar>) -> Result<Self> {
        let form = algebra.form().ok_or(Error::DegenerateForm)?;
        if !form.is_regular() {
            return Err(Error::DegenerateForm);
        }
        for i in 0..algebra.dim() {
            let e = algebra.basis_vector(i);
            if algebra.mult_vec(&unit, &e) != e || algebra.mult_vec(&e, &unit) != e {
                return Err(Error::LawViolation {
                    law: "unitality",
                    i,
                    j: i,
                    detail: "distinguished element is not a unit".into(),
                });
            }
        }
        Ok(HurwitzSuperalgebra { algebra, unit })
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.algebra
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn form(&self) -> &BilinearForm {
        self.algebra.form().expect("Hurwitz algebras carry their norm")
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// The standard involution `x -> b(x,1) 1 - x`, as a matrix.
    pub fn involution_matrix(&self) -> Matrix {
        let f = self.algebra.field();
        let n = self.dim();
        let form = self.form();
        let mut m = Matrix::zeros(f, n, n);
        for j in 0..n {
            let coeff = form.eval(&self.algebra.basis_vector(j), &self.unit);
            for i in 0..n {
                let mut v = f.sub(0, if i == j { 1 } else { 0 });
                v = f.add(v, f.mul(coeff, self.unit[i]));
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn involution(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.involution_matrix().mul_vec(x)
    }
}

/// A symmetric composition (super)algebra: same space and norm, with an
/// associative bilinear form.
#[derive(Debug, Clone)]
pub struct SymmetricComposition {
    algebra: SuperAlgebra,
}

impl SymmetricComposition {
    pub fn algebra(&self) -> &SuperAlgebra {
        &self.algebra
    }

    pub fn form(&self) -> &BilinearForm {
        self.algebra.form().expect("symmetric compositions carry their norm")
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn graded_dim(&self) -> (usize, usize) {
        self.algebra.graded_dim()
    }
}

fn mat2_table(b: &mut StructureBuilder, offset: usize) {
    // e_ij e_kl = delta_jk e_il with basis order e11 e12 e21 e22
    let idx = |i: usize, j: usize| offset + 2 * i + j;
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    if j == k {
                        b.add(idx(i, j), idx(k, l), idx(i, l), 1);
                    }
                }
            }
        }
    }
}

fn mat2_gram(f: PrimeField) -> Matrix {
    // polar form of det: b(x,y) = tr(x)tr(y) - tr(xy)
    Matrix::from_i64(
        f,
        vec![
            vec![0, 0, 0, 1],
            vec![0, 0, -1, 0],
            vec![0, -1, 0, 0],
            vec![1, 0, 0, 0],
        ],
    )
}

/// Adjugate on Mat2 coordinates: the standard involution of the quaternion
/// algebra Mat2(k).
fn mat2_adjugate(f: PrimeField) -> Matrix {
    Matrix::from_i64(
        f,
        vec![
            vec![0, 0, 0, 1],
            vec![0, -1, 0, 0],
            vec![0, 0, -1, 0],
            vec![1, 0, 0, 0],
        ],
    )
}

/// Build a split Hurwitz (super)algebra with its norm.
pub fn make_hurwitz(kind: HurwitzKind, field: PrimeField) -> Result<HurwitzSuperalgebra> {
    if kind.is_super() && field.modulus() != 3 {
        return Err(Error::CharacteristicRequired {
            name: match kind {
                HurwitzKind::B12 => "B(1,2)",
                _ => "B(4,2)",
            },
            required: 3,
            actual: field.modulus(),
        });
    }
    let f = field;
    let (algebra, unit) = match kind {
        HurwitzKind::S1 => {
            let space = SuperSpace::even(vec!["1".into()]);
            let mut b = StructureBuilder::new("k", f, space, AlgebraKind::Composition);
            b.add(0, 0, 0, 1);
            let gram = Matrix::from_i64(f, vec![vec![2]]);
            let bf = BilinearForm::new(gram, b.space())?;
            (b.with_form(bf).build()?, vec![1])
        }
        HurwitzKind::S2 => {
            // k x k in the basis 1 = (1,1), u = (1,-1): u^2 = 1.
            let space = SuperSpace::even(vec!["1".into(), "u".into()]);
            let mut b = StructureBuilder::new("kxk", f, space, AlgebraKind::Composition);
            b.add(0, 0, 0, 1);
            b.add(0, 1, 1, 1);
            b.add(1, 0, 1, 1);
            b.add(1, 1, 0, 1);
            let gram = Matrix::from_i64(f, vec![vec![2, 0], vec![0, -2]]);
            let bf = BilinearForm::new(gram, b.space())?;
            (b.with_form(bf).build()?, vec![1, 0])
        }
        HurwitzKind::S4 => {
            let space = SuperSpace::even(
                ["e11", "e12", "e21", "e22"].iter().map(|s| s.to_string()).collect(),
            );
            let mut b = StructureBuilder::new("Mat2", f, space, AlgebraKind::Composition);
            mat2_table(&mut b, 0);
            let bf = BilinearForm::new(mat2_gram(f), b.space())?;
            (b.with_form(bf).build()?, vec![1, 0, 0, 1])
        }
        HurwitzKind::S8 => make_split_cayley(f)?,
        HurwitzKind::B12 => {
            let space = SuperSpace::new(
                vec!["1".into(), "u".into(), "v".into()],
                vec![0, 1, 1],
            );
            let mut b = StructureBuilder::new("B(1,2)", f, space, AlgebraKind::Composition);
            b.add(0, 0, 0, 1);
            for odd in [1usize, 2] {
                b.add(0, odd, odd, 1);
                b.add(odd, 0, odd, 1);
            }
            // u v = <u|v> 1 = 1, v u = -1
            b.add(1, 2, 0, 1);
            b.add(2, 1, 0, f.neg(1));
            let gram = Matrix::from_i64(
                f,
                vec![vec![2, 0, 0], vec![0, 0, 1], vec![0, -1, 0]],
            );
            let bf = BilinearForm::new(gram, b.space())?;
            (b.with_form(bf).build()?, vec![1, 0, 0])
        }
        HurwitzKind::B42 => {
            let space = SuperSpace::new(
                ["e11", "e12", "e21", "e22", "u", "v"].iter().map(|s| s.to_string()).collect(),
                vec![0, 0, 0, 0, 1, 1],
            );
            let mut b = StructureBuilder::new("B(4,2)", f, space, AlgebraKind::Composition);
            mat2_table(&mut b, 0);
            // End(V) in the basis {u, v}: e_ij maps basis j to basis i.
            // odd * even: x . f = f(x); even * odd: f . x = adj(f)(x)
            let apply = |fidx: usize| -> (usize, usize) { (fidx / 2, fidx % 2) };
            for fidx in 0..4usize {
                let (i, j) = apply(fidx);
                // x . f = f(x): column x = basis j maps to basis i
                b.add(4 + j, fidx, 4 + i, 1);
                // f . x = adj(f)(x); adj(e11)=e22, adj(e22)=e11, adj(e12)=-e12, adj(e21)=-e21
                let (ai, aj, sgn): (usize, usize, i64) = match (i, j) {
                    (0, 0) => (1, 1, 1),
                    (1, 1) => (0, 0, 1),
                    (0, 1) => (0, 1, -1),
                    (1, 0) => (1, 0, -1),
                    _ => unreachable!(),
                };
                b.add_signed(fidx, 4 + aj, 4 + ai, sgn);
            }
            // u . v = <.|u> v and friends: u u = -e12, u v = -e22, v u = e11, v v = e21
            b.add_signed(4, 4, 1, -1);
            b.add_signed(4, 5, 3, -1);
            b.add_signed(5, 4, 0, 1);
            b.add_signed(5, 5, 2, 1);
            let gram = {
                let m2 = mat2_gram(f);
                Matrix::from_fn(f, 6, 6, |i, j| match (i, j) {
                    (0..=3, 0..=3) => m2.get(i, j),
                    (4, 5) => 1,
                    (5, 4) => f.neg(1),
                    _ => 0,
                })
            };
            let bf = BilinearForm::new(gram, b.space())?;
            (b.with_form(bf).build()?, vec![1, 0, 0, 1, 0, 0])
        }
    };
    let h = HurwitzSuperalgebra { algebra, unit };
    if !h.form().is_regular() {
        return Err(Error::DegenerateForm);
    }
    Ok(h)
}

/// Split Cayley algebra by doubling Mat2(k):
/// `(a, b)(c, d) = (ac + adj(d) b, da + b adj(c))`, `q(a, b) = det a - det b`.
fn make_split_cayley(f: PrimeField) -> Result<(SuperAlgebra, Vec<Scalar>)> {
    let labels = ["e11", "e12", "e21", "e22", "f11", "f12", "f21", "f22"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let space = SuperSpace::even(labels);
    let mut b = StructureBuilder::new("Cayley", f, space, AlgebraKind::Composition);
    let m2gram = mat2_gram(f);
    let adj = mat2_adjugate(f);
    // helper: product of Mat2 basis elements
    let mat2_mul = |i: usize, j: usize| -> Option<usize> {
        let (r1, c1) = (i / 2, i % 2);
        let (r2, c2) = (j / 2, j % 2);
        (c1 == r2).then_some(2 * r1 + c2)
    };
    for i in 0..4 {
        for j in 0..4 {
            // a-part times a-part
            if let Some(k) = mat2_mul(i, j) {
                b.add(i, j, k, 1);
            }
            // (a,0)(0,d) = (0, d a)
            if let Some(k) = mat2_mul(j, i) {
                b.add(i, 4 + j, 4 + k, 1);
            }
            // (0,b)(c,0) = (0, b adj(c))
            for cc in 0..4 {
                let coeff = adj.get(cc, j);
                if coeff != 0 {
                    if let Some(k) = mat2_mul(i, cc) {
                        b.add(4 + i, j, 4 + k, coeff);
                    }
                }
            }
            // (0,b)(0,d) = (adj(d) b, 0)
            for dd in 0..4 {
                let coeff = adj.get(dd, j);
                if coeff != 0 {
                    if let Some(k) = mat2_mul(dd, i) {
                        b.add(4 + i, 4 + j, k, coeff);
                    }
                }
            }
        }
    }
    let gram = Matrix::from_fn(f, 8, 8, |i, j| match (i < 4, j < 4) {
        (true, true) => m2gram.get(i, j),
        (false, false) => f.neg(m2gram.get(i - 4, j - 4)),
        _ => 0,
    });
    let bf = BilinearForm::new(gram, b.space())?;
    let alg = b.with_form(bf).build()?;
    Ok((alg, vec![1, 0, 0, 1, 0, 0, 0, 0]))
}

/// The para-Hurwitz algebra of `c`: same space and norm, product
/// `x * y = conj(x) conj(y)`.
pub fn para_hurwitz(c: &HurwitzSuperalgebra) -> Result<SymmetricComposition> {
    let a = c.algebra();
    let f = a.field();
    let n = a.dim();
    let inv = c.involution_matrix();
    let name = format!("para({})", a.name());
    let mut b = StructureBuilder::new(&name, f, a.space().clone(), AlgebraKind::Composition);
    for i in 0..n {
        for j in 0..n {
            let xi = inv.mul_vec(&a.basis_vector(i));
            let yj = inv.mul_vec(&a.basis_vector(j));
            let prod = a.mult_vec(&xi, &yj);
            b.add_vec(i, j, &prod);
        }
    }
    let bf = BilinearForm::new(c.form().gram().clone(), b.space())?;
    Ok(SymmetricComposition {
        algebra: b.with_form(bf).build()?,
    })
}

/// Build the para-Hurwitz symmetric composition for a catalog name.
pub fn make_symmetric(kind: HurwitzKind, field: PrimeField) -> Result<SymmetricComposition> {
    let mut s = para_hurwitz(&make_hurwitz(kind, field)?)?;
    s.algebra.set_name(kind.cli_name());
    Ok(s)
}

/// The symmetric composition with product `x * y = conj(x y)`, i.e. the
/// para-Hurwitz algebra of the opposite of `c`. For quaternion algebras this
/// is the presentation whose triality algebra splits into the three
/// closed-form kernels `{(0, -R_a, L_a)}` and its shifts.
pub fn para_conjugate(c: &HurwitzSuperalgebra) -> Result<SymmetricComposition> {
    let a = c.algebra();
    let f = a.field();
    let n = a.dim();
    let inv = c.involution_matrix();
    let name = format!("para-op({})", a.name());
    let mut b = StructureBuilder::new(&name, f, a.space().clone(), AlgebraKind::Composition);
    for i in 0..n {
        for j in 0..n {
            let prod = inv.mul_vec(&a.mult_vec(&a.basis_vector(i), &a.basis_vector(j)));
            b.add_vec(i, j, &prod);
        }
    }
    let bf = BilinearForm::new(c.form().gram().clone(), b.space())?;
    Ok(SymmetricComposition {
        algebra: b.with_form(bf).build()?,
    })
}

/// Report from the composition-superalgebra axiom checks.
#[derive(Debug, Clone)]
pub struct CompositionReport {
    pub checked: u64,
    pub violations: Vec<String>,
}

impl CompositionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn note(&mut self, msg: String) {
        if self.violations.len() < 8 {
            self.violations.push(msg);
        }
    }
}

/// Polarization-complete set of even test vectors: the even basis vectors
/// and all their pairwise sums. A quadratic identity that vanishes on this
/// set vanishes identically.
fn even_test_vectors(a: &SuperAlgebra) -> Vec<Vec<Scalar>> {
    let f = a.field();
    let n = a.dim();
    let evens: Vec<usize> = (0..n).filter(|&i| a.space().parity(i) == 0).collect();
    let mut out = Vec::new();
    for (pos, &i) in evens.iter().enumerate() {
        out.push(a.basis_vector(i));
        for &j in &evens[pos + 1..] {
            let mut v = a.basis_vector(i);
            v[j] = f.add(v[j], 1);
            out.push(v);
        }
    }
    out
}

/// Check the multiplicativity laws of the norm on an algebra with a regular
/// form: the four-variable law on all basis quadruples, and the quadratic
/// laws on a polarization-complete set of even vectors.
pub fn check_composition_laws(a: &SuperAlgebra) -> Result<CompositionReport> {
    let form = a.form().ok_or(Error::DegenerateForm)?;
    if !form.is_regular() {
        return Err(Error::DegenerateForm);
    }
    let f = a.field();
    let n = a.dim();
    let p = a.space().parities();
    let mut rep = CompositionReport {
        checked: 0,
        violations: Vec::new(),
    };

    // b(xy, zt) + (-1)^{xy+xz+yz} b(zy, xt) = (-1)^{yz} b(x,z) b(y,t)
    let bval = |x: &[(u32, Scalar)], y: &[(u32, Scalar)]| -> Scalar {
        let mut acc = 0;
        for &(i, ci) in x {
            for &(j, cj) in y {
                acc = f.add(
                    acc,
                    f.mul(f.mul(ci, cj), form.eval_basis(i as usize, j as usize)),
                );
            }
        }
        acc
    };
    for x in 0..n {
        for y in 0..n {
            let xy = a.mult_basis(x, y);
            for z in 0..n {
                let zy = a.mult_basis(z, y);
                for t in 0..n {
                    let xt = a.mult_basis(x, t);
                    let zt = a.mult_basis(z, t);
                    let s1 = f.sign((p[x] & p[y]) ^ (p[x] & p[z]) ^ (p[y] & p[z]));
                    let s2 = f.sign(p[y] & p[z]);
                    let lhs = f.add(bval(xy, zt), f.mul(s1, bval(zy, xt)));
                    let rhs = f.mul(
                        s2,
                        f.mul(form.eval_basis(x, z), form.eval_basis(y, t)),
                    );
                    rep.checked += 1;
                    if lhs != rhs {
                        rep.note(format!(
                            "four-variable law fails at basis quadruple ({x},{y},{z},{t})"
                        ));
                    }
                }
            }
        }
    }

    // even laws: q(xy) = q(x)q(y) and b(xy, xz) = q(x) b(y,z) = b(yx, zx)
    let half = f.half();
    let q = |v: &[Scalar]| f.mul(half, form.eval(v, v));
    let evens = even_test_vectors(a);
    for x in &evens {
        for y in &evens {
            let xy = a.mult_vec(x, y);
            rep.checked += 1;
            if q(&xy) != f.mul(q(x), q(y)) {
                rep.note("norm multiplicativity fails on even vectors".into());
            }
        }
        let qx = q(x);
        for yi in 0..n {
            let y = a.basis_vector(yi);
            let xy = a.mult_vec(x, &y);
            let yx = a.mult_vec(&y, x);
            for zi in 0..n {
                let z = a.basis_vector(zi);
                let xz = a.mult_vec(x, &z);
                let zx = a.mult_vec(&z, x);
                let byz = f.mul(qx, form.eval_basis(yi, zi));
                rep.checked += 2;
                if form.eval(&xy, &xz) != byz {
                    rep.note(format!("left two-variable law fails at ({yi},{zi})"));
                }
                if form.eval(&yx, &zx) != byz {
                    rep.note(format!("right two-variable law fails at ({yi},{zi})"));
                }
            }
        }
    }
    Ok(rep)
}

/// Composition laws checker for a unital algebra; also verifies unitality.
pub fn check_composition(c: &HurwitzSuperalgebra) -> Result<CompositionReport> {
    let mut rep = check_composition_laws(c.algebra())?;
    let a = c.algebra();
    for i in 0..a.dim() {
        let e = a.basis_vector(i);
        rep.checked += 2;
        if a.mult_vec(&c.unit, &e) != e || a.mult_vec(&e, &c.unit) != e {
            rep.note(format!("unit fails on basis vector {i}"));
        }
    }
    Ok(rep)
}

/// Composition laws plus associativity of the form on all basis triples.
pub fn check_symmetric(s: &SymmetricComposition) -> Result<CompositionReport> {
    let a = s.algebra();
    let mut rep = check_composition_laws(a)?;
    let form = s.form();
    let f = a.field();
    let n = a.dim();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let xy = a.mult_vec(&a.basis_vector(x), &a.basis_vector(y));
                let yz = a.mult_vec(&a.basis_vector(y), &a.basis_vector(z));
                let lhs = form.eval(&xy, &a.basis_vector(z));
                let rhs = form.eval(&a.basis_vector(x), &yz);
                rep.checked += 1;
                if lhs != rhs {
                    rep.note(format!("form associativity fails at ({x},{y},{z})"));
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> PrimeField {
        PrimeField::gf3()
    }

    #[test]
    fn all_six_pass_composition_checks() {
        for kind in HurwitzKind::all() {
            let c = make_hurwitz(kind, gf3()).unwrap();
            let rep = check_composition(&c).unwrap();
            assert!(rep.passed(), "{kind:?}: {:?}", rep.violations);
            let s = para_hurwitz(&c).unwrap();
            let rep = check_symmetric(&s).unwrap();
            assert!(rep.passed(), "para {kind:?}: {:?}", rep.violations);
        }
    }

    #[test]
    fn super_kinds_require_char_3() {
        let f5 = PrimeField::new(5).unwrap();
        assert!(matches!(
            make_hurwitz(HurwitzKind::B12, f5),
            Err(Error::CharacteristicRequired { .. })
        ));
        assert!(make_hurwitz(HurwitzKind::B42, f5).is_err());
        assert!(make_hurwitz(HurwitzKind::S8, f5).is_ok());
    }

    #[test]
    fn graded_dimensions() {
        let dims = [
            (HurwitzKind::S1, (1, 0)),
            (HurwitzKind::S2, (2, 0)),
            (HurwitzKind::S4, (4, 0)),
            (HurwitzKind::S8, (8, 0)),
            (HurwitzKind::B12, (1, 2)),
            (HurwitzKind::B42, (4, 2)),
        ];
        for (kind, d) in dims {
            assert_eq!(make_hurwitz(kind, gf3()).unwrap().algebra().graded_dim(), d);
        }
    }

    #[test]
    fn b12_table_and_norm() {
        let c = make_hurwitz(HurwitzKind::B12, gf3()).unwrap();
        let a = c.algebra();
        // u v = 1
        assert_eq!(
            a.mult_vec(&a.basis_vector(1), &a.basis_vector(2)),
            vec![1, 0, 0]
        );
        assert_eq!(c.form().eval_basis(1, 2), 1);
        // q0(1) = b(1,1)/2 = 1
        let f = gf3();
        assert_eq!(f.mul(f.half(), c.form().eval_basis(0, 0)), 1);
    }

    #[test]
    fn b42_rank_one_products() {
        let c = make_hurwitz(HurwitzKind::B42, gf3()).unwrap();
        let a = c.algebra();
        // u . v = <.|u> v = -e22; v . u = e11
        let u = a.basis_vector(4);
        let v = a.basis_vector(5);
        assert_eq!(a.mult_vec(&u, &v), vec![0, 0, 0, 2, 0, 0]);
        assert_eq!(a.mult_vec(&v, &u), vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn standard_involution_examples() {
        let f = gf3();
        // unit is fixed
        for kind in HurwitzKind::all() {
            let c = make_hurwitz(kind, f).unwrap();
            assert_eq!(c.involution(c.unit()), c.unit().to_vec());
            // involutive
            let m = c.involution_matrix();
            assert_eq!(m.matmul(&m), Matrix::identity(f, c.dim()));
        }
        // in B12, conj(u) = -u
        let b12 = make_hurwitz(HurwitzKind::B12, f).unwrap();
        assert_eq!(b12.involution(&[0, 1, 0]), vec![0, 2, 0]);
        // in k x k (basis 1, u), conj is (a+bu) -> (a-bu), i.e. the swap of
        // the two idempotent coordinates
        let s2 = make_hurwitz(HurwitzKind::S2, f).unwrap();
        assert_eq!(s2.involution(&[1, 1]), vec![1, 2]);
    }

    #[test]
    fn para_products() {
        let f = gf3();
        // S2: 1*u = -u, u*u = 1
        let s2 = make_symmetric(HurwitzKind::S2, f).unwrap();
        let a = s2.algebra();
        assert_eq!(a.mult_vec(&a.basis_vector(0), &a.basis_vector(1)), vec![0, 2]);
        assert_eq!(a.mult_vec(&a.basis_vector(1), &a.basis_vector(1)), vec![1, 0]);
        // S12: u*v = 1, 1*x = -x for odd x
        let s12 = make_symmetric(HurwitzKind::B12, f).unwrap();
        let a = s12.algebra();
        assert_eq!(
            a.mult_vec(&a.basis_vector(1), &a.basis_vector(2)),
            vec![1, 0, 0]
        );
        assert_eq!(
            a.mult_vec(&a.basis_vector(0), &a.basis_vector(1)),
            vec![0, 2, 0]
        );
        // para of S1: 1*1 = 1
        let s1 = make_symmetric(HurwitzKind::S1, f).unwrap();
        assert_eq!(s1.algebra().mult_vec(&[1], &[1]), vec![1]);
    }

    #[test]
    fn mat2_norm_is_polarized_determinant() {
        let f = gf3();
        let s4 = make_hurwitz(HurwitzKind::S4, f).unwrap();
        let a = s4.algebra();
        // b(x,y) = tr(x)tr(y) - tr(xy) on basis pairs
        let tr = |v: &[Scalar]| f.add(v[0], v[3]);
        for i in 0..4 {
            for j in 0..4 {
                let x = a.basis_vector(i);
                let y = a.basis_vector(j);
                let xy = a.mult_vec(&x, &y);
                let expect = f.sub(f.mul(tr(&x), tr(&y)), tr(&xy));
                assert_eq!(s4.form().eval_basis(i, j), expect);
            }
        }
    }

    #[test]
    fn cayley_norm_represents_zero() {
        let f = gf3();
        let s8 = make_hurwitz(HurwitzKind::S8, f).unwrap();
        // q(e12) = det(e12) = 0 on a nonzero vector
        let q = f.mul(f.half(), s8.form().eval_basis(1, 1));
        assert_eq!(q, 0);
    }

    #[test]
    fn degenerate_form_rejected_by_checks() {
        // B12 with <u|v> redefined to 0 has a degenerate gram matrix
        let f = gf3();
        let space = SuperSpace::new(vec!["1".into(), "u".into(), "v".into()], vec![0, 1, 1]);
        let gram = Matrix::from_i64(f, vec![vec![2, 0, 0], vec![0, 0, 0], vec![0, 0, 0]]);
        let bf = BilinearForm::new(gram, &space).unwrap();
        let mut b = StructureBuilder::new("degenerate", f, space, AlgebraKind::Composition);
        b.add(0, 0, 0, 1);
        let alg = b.with_form(bf).build().unwrap();
        assert!(matches!(
            check_composition_laws(&alg),
            Err(Error::DegenerateForm)
        ));
    }
}
