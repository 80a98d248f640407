//! Structure-constant superalgebras and the generic algebraic toolbox:
//! identity checkers, derived subalgebra, center, ideals, quotients, direct
//! sums, graded tensor products, and homomorphism verification.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use crate::linalg::{Matrix, RrefAccumulator, Subspace};
use crate::superspace::{Parity, SuperSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Lie,
    Jordan,
    Composition,
    Plain,
}

/// An even supersymmetric bilinear form: symmetric on the even part,
/// alternating on the odd part, vanishing between parities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix, space: &SuperSpace) -> Result<Self> {
        let f = gram.field();
        let n = space.dim();
        if gram.rows() != n || gram.cols() != n {
            return Err(Error::DimensionMismatch("gram matrix vs space".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if space.parity(i) != space.parity(j) && gram.get(i, j) != 0 {
                    return Err(Error::LawViolation {
                        law: "even form",
                        i,
                        j,
                        detail: "nonzero between parities".into(),
                    });
                }
                let sgn = f.sign(space.parity(i) & space.parity(j));
                if gram.get(i, j) != f.mul(sgn, gram.get(j, i)) {
                    return Err(Error::LawViolation {
                        law: "supersymmetry",
                        i,
                        j,
                        detail: "b(i,j) != (-1)^{|i||j|} b(j,i)".into(),
                    });
                }
            }
        }
        Ok(BilinearForm { gram })
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn is_regular(&self) -> bool {
        self.gram.rank() == self.gram.rows()
    }

    #[inline]
    pub fn eval_basis(&self, i: usize, j: usize) -> Scalar {
        self.gram.get(i, j)
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let f = self.gram.field();
        let mut acc = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj != 0 {
                    acc = f.add(acc, f.mul(f.mul(xi, yj), self.gram.get(i, j)));
                }
            }
        }
        acc
    }
}

/// A finite-dimensional superalgebra given by structure constants over GF(p).
///
/// The constant `c` in an entry `(k, c)` of `mult[i * n + j]` means
/// `basis_i * basis_j = sum_k c * basis_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperAlgebra {
    name: String,
    field: PrimeField,
    space: SuperSpace,
    kind: AlgebraKind,
    mult: Vec<Vec<(u32, Scalar)>>,
    form: Option<BilinearForm>,
}

/// Accumulating builder for structure constants.
pub struct StructureBuilder {
    name: String,
    field: PrimeField,
    space: SuperSpace,
    kind: AlgebraKind,
    mult: Vec<Vec<(u32, Scalar)>>,
    form: Option<BilinearForm>,
}

impl StructureBuilder {
    pub fn new(name: &str, field: PrimeField, space: SuperSpace, kind: AlgebraKind) -> Self {
        let n = space.dim();
        StructureBuilder {
            name: name.to_string(),
            field,
            space,
            kind,
            mult: vec![Vec::new(); n * n],
            form: None,
        }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    /// Accumulate `c` into the coefficient of `basis_k` in `basis_i * basis_j`.
    pub fn add(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        if c == 0 {
            return;
        }
        let n = self.space.dim();
        debug_assert!(i < n && j < n && k < n);
        self.mult[i * n + j].push((k as u32, c % self.field.modulus()));
    }

    pub fn add_signed(&mut self, i: usize, j: usize, k: usize, c: i64) {
        let c = self.field.from_i64(c);
        self.add(i, j, k, c);
    }

    /// Accumulate a whole vector as the product `basis_i * basis_j`.
    pub fn add_vec(&mut self, i: usize, j: usize, v: &[Scalar]) {
        for (k, &c) in v.iter().enumerate() {
            self.add(i, j, k, c);
        }
    }

    pub fn with_form(mut self, form: BilinearForm) -> Self {
        self.form = Some(form);
        self
    }

    /// Fill every unset `(j, i)` entry from `(i, j)` using the graded
    /// (anti)commutation law of the algebra kind.
    pub fn complete_graded_opposites(&mut self) {
        let n = self.space.dim();
        let f = self.field;
        let skew = matches!(self.kind, AlgebraKind::Lie);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if self.mult[j * n + i].is_empty() && !self.mult[i * n + j].is_empty() {
                    let mut sgn = f.sign(self.space.parity(i) & self.space.parity(j));
                    if skew {
                        sgn = f.neg(sgn);
                    }
                    let src = self.mult[i * n + j].clone();
                    for (k, c) in src {
                        self.mult[j * n + i].push((k, f.mul(sgn, c)));
                    }
                }
            }
        }
    }

    pub fn build(self) -> Result<SuperAlgebra> {
        let f = self.field;
        let mut mult = self.mult;
        // Normalize: combine duplicate targets, drop zeros, sort.
        for entry in mult.iter_mut() {
            if entry.is_empty() {
                continue;
            }
            entry.sort_by_key(|&(k, _)| k);
            let mut out: Vec<(u32, Scalar)> = Vec::with_capacity(entry.len());
            for &(k, c) in entry.iter() {
                match out.last_mut() {
                    Some(last) if last.0 == k => last.1 = f.add(last.1, c),
                    _ => out.push((k, c)),
                }
            }
            out.retain(|&(_, c)| c != 0);
            *entry = out;
        }
        let alg = SuperAlgebra {
            name: self.name,
            field: f,
            space: self.space,
            kind: self.kind,
            mult,
            form: self.form,
        };
        alg.validate()?;
        Ok(alg)
    }
}

impl SuperAlgebra {
    fn validate(&self) -> Result<()> {
        let n = self.dim();
        let f = self.field;
        for i in 0..n {
            for j in 0..n {
                let pk = (self.space.parity(i) + self.space.parity(j)) & 1;
                for &(k, c) in self.mult_basis(i, j) {
                    debug_assert!(c != 0);
                    if c >= f.modulus() {
                        return Err(Error::LawViolation {
                            law: "residue range",
                            i,
                            j,
                            detail: format!("coefficient {c}"),
                        });
                    }
                    if self.space.parity(k as usize) != pk {
                        return Err(Error::LawViolation {
                            law: "parity homogeneity",
                            i,
                            j,
                            detail: format!("target {k} has wrong parity"),
                        });
                    }
                }
            }
        }
        match self.kind {
            AlgebraKind::Lie => self.validate_commutation(true)?,
            AlgebraKind::Jordan => self.validate_commutation(false)?,
            _ => {}
        }
        Ok(())
    }

    fn validate_commutation(&self, skew: bool) -> Result<()> {
        let n = self.dim();
        let f = self.field;
        for i in 0..n {
            for j in i..n {
                let mut sgn = f.sign(self.space.parity(i) & self.space.parity(j));
                if skew {
                    sgn = f.neg(sgn);
                }
                let lhs = self.mult_basis(j, i);
                let rhs = self.mult_basis(i, j);
                let expect: Vec<(u32, Scalar)> =
                    rhs.iter().map(|&(k, c)| (k, f.mul(sgn, c))).collect();
                let ok = if i == j && !skew {
                    true // x*x = x*x, nothing to check
                } else {
                    lhs == expect.as_slice()
                };
                if !ok {
                    return Err(Error::LawViolation {
                        law: if skew {
                            "super-anticommutativity"
                        } else {
                            "supercommutativity"
                        },
                        i,
                        j,
                        detail: format!("{lhs:?} vs {expect:?}"),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }
    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn space(&self) -> &SuperSpace {
        &self.space
    }
    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }
    pub fn form(&self) -> Option<&BilinearForm> {
        self.form.as_ref()
    }
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn graded_dim(&self) -> (usize, usize) {
        self.space.graded_dim()
    }

    #[inline]
    pub fn mult_basis(&self, i: usize, j: usize) -> &[(u32, Scalar)] {
        &self.mult[i * self.dim() + j]
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} and {} in algebra of dimension {n}",
                x.len(),
                y.len()
            )));
        }
        Ok(self.mult_vec(x, y))
    }

    pub fn mult_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = vec![0; self.dim()];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let cij = f.mul(xi, yj);
                for &(k, c) in self.mult_basis(i, j) {
                    out[k as usize] = f.add(out[k as usize], f.mul(cij, c));
                }
            }
        }
        out
    }

    pub fn mult_sparse(
        &self,
        x: &[(u32, Scalar)],
        y: &[(u32, Scalar)],
    ) -> Vec<(u32, Scalar)> {
        let f = self.field;
        let mut acc: Vec<Scalar> = vec![0; self.dim()];
        for &(i, xi) in x {
            for &(j, yj) in y {
                let cij = f.mul(xi, yj);
                for &(k, c) in self.mult_basis(i as usize, j as usize) {
                    acc[k as usize] = f.add(acc[k as usize], f.mul(cij, c));
                }
            }
        }
        acc.iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(k, &c)| (k as u32, c))
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    /// Matrix of `y -> x * y`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let f = self.field;
        let mut m = Matrix::zeros(f, n, n);
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for j in 0..n {
                for &(k, c) in self.mult_basis(i, j) {
                    let cur = m.get(k as usize, j);
                    m.set(k as usize, j, f.add(cur, f.mul(xi, c)));
                }
            }
        }
        m
    }

    /// Matrix of the Koszul-signed right multiplication
    /// `y -> (-1)^{|x||y|} y * x` for homogeneous `x` of parity `px`.
    pub fn signed_right_mult_matrix(&self, x: &[Scalar], px: Parity) -> Matrix {
        let n = self.dim();
        let f = self.field;
        let mut m = Matrix::zeros(f, n, n);
        for j in 0..n {
            let sgn = f.sign(px & self.space.parity(j));
            for (i, &xi) in x.iter().enumerate() {
                if xi == 0 {
                    continue;
                }
                for &(k, c) in self.mult_basis(j, i) {
                    let cur = m.get(k as usize, j);
                    m.set(k as usize, j, f.add(cur, f.mul(sgn, f.mul(xi, c))));
                }
            }
        }
        m
    }

    /// Left multiplication matrices of all basis vectors.
    pub fn left_mult_table(&self) -> Vec<Matrix> {
        (0..self.dim())
            .map(|i| self.left_mult_matrix(&self.basis_vector(i)))
            .collect()
    }

    /// Relabel/permute the basis; for invariance tests.
    pub fn permuted(&self, perm: &[usize]) -> Result<SuperAlgebra> {
        let n = self.dim();
        assert_eq!(perm.len(), n);
        let inv: Vec<usize> = {
            let mut inv = vec![0; n];
            for (new, &old) in perm.iter().enumerate() {
                inv[old] = new;
            }
            inv
        };
        let space = SuperSpace::new(
            perm.iter().map(|&o| self.space.label(o).to_string()).collect(),
            perm.iter().map(|&o| self.space.parity(o)).collect(),
        );
        let mut b = StructureBuilder::new(&self.name, self.field, space, self.kind);
        for i in 0..n {
            for j in 0..n {
                for &(k, c) in self.mult_basis(perm[i], perm[j]) {
                    b.add(i, j, inv[k as usize], c);
                }
            }
        }
        if let Some(form) = &self.form {
            let gram = Matrix::from_fn(self.field, n, n, |i, j| {
                form.eval_basis(perm[i], perm[j])
            });
            let bf = BilinearForm::new(gram, b.space())?;
            b = b.with_form(bf);
        }
        b.build()
    }
}

/// How to sweep basis triples in an identity check.
#[derive(Debug, Clone, Copy)]
pub enum CheckMode {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

/// Outcome of an identity check; violations are data, not errors.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub law: &'static str,
    pub checked: u64,
    pub violations: Vec<[usize; 3]>,
    pub exhaustive: bool,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

const MAX_WITNESSES: usize = 8;

struct Scratch {
    vals: Vec<Scalar>,
    dirty: Vec<u32>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            vals: vec![0; n],
            dirty: Vec::with_capacity(64),
        }
    }

    #[inline]
    fn add(&mut self, f: PrimeField, k: u32, v: Scalar) {
        let slot = &mut self.vals[k as usize];
        if *slot == 0 && v != 0 {
            self.dirty.push(k);
        }
        *slot = f.add(*slot, v);
    }

    #[inline]
    fn take_is_zero(&mut self) -> bool {
        let mut ok = true;
        for &k in &self.dirty {
            if self.vals[k as usize] != 0 {
                ok = false;
            }
            self.vals[k as usize] = 0;
        }
        self.dirty.clear();
        ok
    }
}

impl SuperAlgebra {
    #[inline]
    fn jacobi_triple_holds(&self, i: usize, j: usize, k: usize, scratch: &mut Scratch) -> bool {
        let f = self.field;
        let p = self.space.parities();
        // (-1)^{|x||z|} [x,[y,z]]
        let s1 = f.sign(p[i] & p[k]);
        for &(l, c) in self.mult_basis(j, k) {
            let cc = f.mul(s1, c);
            for &(t, d) in self.mult_basis(i, l as usize) {
                scratch.add(f, t, f.mul(cc, d));
            }
        }
        // (-1)^{|y||x|} [y,[z,x]]
        let s2 = f.sign(p[j] & p[i]);
        for &(l, c) in self.mult_basis(k, i) {
            let cc = f.mul(s2, c);
            for &(t, d) in self.mult_basis(j, l as usize) {
                scratch.add(f, t, f.mul(cc, d));
            }
        }
        // (-1)^{|z||y|} [z,[x,y]]
        let s3 = f.sign(p[k] & p[j]);
        for &(l, c) in self.mult_basis(i, j) {
            let cc = f.mul(s3, c);
            for &(t, d) in self.mult_basis(k, l as usize) {
                scratch.add(f, t, f.mul(cc, d));
            }
        }
        scratch.take_is_zero()
    }

    /// Graded Jacobi identity over basis triples.
    pub fn check_super_jacobi(&self, mode: CheckMode) -> IdentityReport {
        assert!(matches!(self.kind, AlgebraKind::Lie));
        let n = self.dim();
        match mode {
            CheckMode::Exhaustive => {
                let violations: Vec<[usize; 3]> = (0..n)
                    .into_par_iter()
                    .map(|i| {
                        let mut scratch = Scratch::new(n);
                        let mut local = Vec::new();
                        for j in 0..n {
                            for k in 0..n {
                                if !self.jacobi_triple_holds(i, j, k, &mut scratch) {
                                    if local.len() < MAX_WITNESSES {
                                        local.push([i, j, k]);
                                    }
                                }
                            }
                        }
                        local
                    })
                    .reduce(Vec::new, |mut a, b| {
                        a.extend(b);
                        a.truncate(MAX_WITNESSES);
                        a
                    });
                IdentityReport {
                    law: "super Jacobi",
                    checked: (n as u64).pow(3),
                    violations,
                    exhaustive: true,
                }
            }
            CheckMode::Sampled { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let triples: Vec<[u32; 3]> = (0..count)
                    .map(|_| {
                        [
                            rng.gen_range(0..n as u32),
                            rng.gen_range(0..n as u32),
                            rng.gen_range(0..n as u32),
                        ]
                    })
                    .collect();
                let violations: Vec<[usize; 3]> = triples
                    .par_chunks(8192)
                    .map(|chunk| {
                        let mut scratch = Scratch::new(n);
                        let mut local = Vec::new();
                        for &[i, j, k] in chunk {
                            let (i, j, k) = (i as usize, j as usize, k as usize);
                            if !self.jacobi_triple_holds(i, j, k, &mut scratch)
                                && local.len() < MAX_WITNESSES
                            {
                                local.push([i, j, k]);
                            }
                        }
                        local
                    })
                    .reduce(Vec::new, |mut a, b| {
                        a.extend(b);
                        a.truncate(MAX_WITNESSES);
                        a
                    });
                IdentityReport {
                    law: "super Jacobi",
                    checked: count as u64,
                    violations,
                    exhaustive: false,
                }
            }
        }
    }

    /// Supercommutativity plus the linearized operator identity
    /// `(-1)^{|x||z|}[L_{xy},L_z] + (-1)^{|y||x|}[L_{yz},L_x] + (-1)^{|z||y|}[L_{zx},L_y] = 0`
    /// over all basis triples, with graded commutators of operators.
    pub fn check_jordan_super(&self) -> IdentityReport {
        assert!(matches!(self.kind, AlgebraKind::Jordan));
        let n = self.dim();
        let f = self.field;
        let p = self.space.parities().to_vec();
        let l: Vec<Matrix> = self.left_mult_table();
        // l2[i*n+j] = L_{e_i * e_j}
        let l2: Vec<Matrix> = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                let mut m = Matrix::zeros(f, n, n);
                for &(k, c) in self.mult_basis(i, j) {
                    m = m.add(&l[k as usize].scale(c));
                }
                m
            })
            .collect();

        let bracket = |a: &Matrix, b: &Matrix, pa: Parity, pb: Parity| -> Matrix {
            a.matmul(b).sub(&b.matmul(a).scale(f.sign(pa & pb)))
        };

        let violations: Vec<[usize; 3]> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut local = Vec::new();
                for j in 0..n {
                    for k in 0..n {
                        let t1 = bracket(&l2[i * n + j], &l[k], (p[i] + p[j]) & 1, p[k])
                            .scale(f.sign(p[i] & p[k]));
                        let t2 = bracket(&l2[j * n + k], &l[i], (p[j] + p[k]) & 1, p[i])
                            .scale(f.sign(p[j] & p[i]));
                        let t3 = bracket(&l2[k * n + i], &l[j], (p[k] + p[i]) & 1, p[j])
                            .scale(f.sign(p[k] & p[j]));
                        if !t1.add(&t2).add(&t3).is_zero() && local.len() < MAX_WITNESSES {
                            local.push([i, j, k]);
                        }
                    }
                }
                local
            })
            .reduce(Vec::new, |mut a, b| {
                a.extend(b);
                a.truncate(MAX_WITNESSES);
                a
            });

        IdentityReport {
            law: "Jordan operator identity",
            checked: (n as u64).pow(3),
            violations,
            exhaustive: true,
        }
    }

    /// Span of all products of basis pairs.
    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim();
        let mut acc = RrefAccumulator::new(self.field, n);
        for i in 0..n {
            for j in 0..n {
                let entries = self.mult_basis(i, j);
                if !entries.is_empty() {
                    let mut v = vec![0; n];
                    for &(k, c) in entries {
                        v[k as usize] = c;
                    }
                    acc.push_row(v);
                }
            }
        }
        let (m, _) = acc.into_rref();
        Subspace::from_spanning(&m, n)
    }

    /// Annihilating center: `x` with `x * e_j = 0` for all `j` (two-sided for
    /// non-(anti)commutative kinds).
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let f = self.field;
        let both_sides = matches!(self.kind, AlgebraKind::Composition | AlgebraKind::Plain);
        let mut acc = RrefAccumulator::new(f, n);
        // row per (j, target coordinate t): sum_i x_i c[i][j][t] = 0
        let mut rows: Vec<Vec<Scalar>> = vec![vec![0; n]; n];
        for j in 0..n {
            for r in rows.iter_mut() {
                r.iter_mut().for_each(|v| *v = 0);
            }
            for i in 0..n {
                for &(k, c) in self.mult_basis(i, j) {
                    rows[k as usize][i] = c;
                }
            }
            for r in &rows {
                if r.iter().any(|&v| v != 0) {
                    acc.push_row(r.clone());
                }
            }
            if both_sides {
                for r in rows.iter_mut() {
                    r.iter_mut().for_each(|v| *v = 0);
                }
                for i in 0..n {
                    for &(k, c) in self.mult_basis(j, i) {
                        rows[k as usize][i] = c;
                    }
                }
                for r in &rows {
                    if r.iter().any(|&v| v != 0) {
                        acc.push_row(r.clone());
                    }
                }
            }
        }
        acc.into_kernel()
    }

    /// Smallest ideal containing `seed`: iterate products with all basis
    /// vectors until stable.
    pub fn ideal_closure(&self, seed: &Subspace) -> Subspace {
        let n = self.dim();
        assert_eq!(seed.ambient(), n);
        let mut current = seed.clone();
        loop {
            let mut vecs: Vec<Vec<Scalar>> =
                current.basis_vectors().map(|v| v.to_vec()).collect();
            for u in current.basis_vectors() {
                for i in 0..n {
                    let e = self.basis_vector(i);
                    vecs.push(self.mult_vec(&e, u));
                    vecs.push(self.mult_vec(u, &e));
                }
            }
            let next = Subspace::from_vectors(self.field, n, &vecs);
            if next.dim() == current.dim() {
                return next;
            }
            current = next;
        }
    }

    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        self.ideal_closure(sub).dim() == sub.dim()
    }

    /// Quotient by a graded ideal. Returns the quotient algebra together
    /// with the canonical projection matrix (quotient coordinates are the
    /// non-pivot coordinates of the ideal's echelon basis).
    pub fn quotient(&self, ideal: &Subspace) -> Result<(SuperAlgebra, Matrix)> {
        let n = self.dim();
        if ideal.ambient() != n {
            return Err(Error::DimensionMismatch("ideal ambient".into()));
        }
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal(format!(
                "closure grows from dim {}",
                ideal.dim()
            )));
        }
        // Graded ideal: every echelon row must be parity-homogeneous.
        for (row, &piv) in ideal.basis_vectors().zip(ideal.pivots()) {
            let p = self.space.parity(piv);
            if row
                .iter()
                .enumerate()
                .any(|(j, &c)| c != 0 && self.space.parity(j) != p)
            {
                return Err(Error::NotGraded);
            }
        }
        let f = self.field;
        let pivots = ideal.pivots().to_vec();
        let comp: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let q = comp.len();
        // projection: x mod ideal, read off complement coordinates
        let mut proj = Matrix::zeros(f, q, n);
        for (a, &ca) in comp.iter().enumerate() {
            proj.set(a, ca, 1);
            for (r, &pv) in pivots.iter().enumerate() {
                proj.set(a, pv, f.neg(ideal.basis().get(r, ca)));
            }
        }
        let space = SuperSpace::new(
            comp.iter().map(|&c| self.space.label(c).to_string()).collect(),
            comp.iter().map(|&c| self.space.parity(c)).collect(),
        );
        let mut b = StructureBuilder::new(&format!("{}/ideal", self.name), f, space, self.kind);
        for (a, &ca) in comp.iter().enumerate() {
            for (bb, &cb) in comp.iter().enumerate() {
                let prod = self.mult_vec(&self.basis_vector(ca), &self.basis_vector(cb));
                let coords = proj.mul_vec(&prod);
                b.add_vec(a, bb, &coords);
            }
        }
        Ok((b.build()?, proj))
    }

    pub fn direct_sum(&self, other: &SuperAlgebra, name: &str) -> Result<SuperAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.kind != other.kind {
            return Err(Error::DimensionMismatch("direct sum of different kinds".into()));
        }
        let n1 = self.dim();
        let mut labels: Vec<String> = self.space.labels().to_vec();
        for l in other.space.labels() {
            let mut l2 = l.clone();
            while labels.contains(&l2) {
                l2.push('\'');
            }
            labels.push(l2);
        }
        let mut parity = self.space.parities().to_vec();
        parity.extend_from_slice(other.space.parities());
        let space = SuperSpace::new(labels, parity);
        let mut b = StructureBuilder::new(name, self.field, space, self.kind);
        for i in 0..n1 {
            for j in 0..n1 {
                for &(k, c) in self.mult_basis(i, j) {
                    b.add(i, j, k as usize, c);
                }
            }
        }
        for i in 0..other.dim() {
            for j in 0..other.dim() {
                for &(k, c) in other.mult_basis(i, j) {
                    b.add(n1 + i, n1 + j, n1 + k as usize, c);
                }
            }
        }
        b.build()
    }

    /// Graded tensor product: `(a ⊗ b)(c ⊗ d) = (-1)^{|b||c|} (ac) ⊗ (bd)`.
    pub fn graded_tensor(&self, other: &SuperAlgebra, name: &str) -> Result<SuperAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let kind = if self.kind == other.kind {
            self.kind
        } else {
            AlgebraKind::Plain
        };
        let f = self.field;
        let (na, nb) = (self.dim(), other.dim());
        let space = self.space.tensor(&other.space);
        let mut bld = StructureBuilder::new(name, f, space, kind);
        for a in 0..na {
            for b in 0..nb {
                for c in 0..na {
                    for d in 0..nb {
                        let sgn = f.sign(other.space.parity(b) & self.space.parity(c));
                        for &(k1, v1) in self.mult_basis(a, c) {
                            for &(k2, v2) in other.mult_basis(b, d) {
                                bld.add(
                                    a * nb + b,
                                    c * nb + d,
                                    k1 as usize * nb + k2 as usize,
                                    f.mul(sgn, f.mul(v1, v2)),
                                );
                            }
                        }
                    }
                }
            }
        }
        bld.build()
    }
}

/// Result of a homomorphism check.
#[derive(Debug, Clone)]
pub struct HomReport {
    pub homomorphism: bool,
    pub witness: Option<(usize, usize)>,
    pub injective: bool,
    pub surjective: bool,
}

impl HomReport {
    pub fn bijective_hom(&self) -> bool {
        self.homomorphism && self.injective && self.surjective
    }
}

/// Check that the even map `f : A -> B` (columns indexed by A's basis)
/// satisfies `f(x y) - f(x) f(y) ∈ mod_subspace` (default `{0}`) on all
/// basis pairs, and report injectivity/surjectivity modulo the subspace.
pub fn hom_check(
    f: &Matrix,
    a: &SuperAlgebra,
    b: &SuperAlgebra,
    mod_subspace: Option<&Subspace>,
) -> Result<HomReport> {
    let (na, nb) = (a.dim(), b.dim());
    if f.rows() != nb || f.cols() != na {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            nb,
            na
        )));
    }
    let field = a.field();
    if let Some(w) = mod_subspace {
        assert_eq!(w.ambient(), nb);
    }
    // parity 0 requirement
    for i in 0..nb {
        for j in 0..na {
            if f.get(i, j) != 0 && b.space().parity(i) != a.space().parity(j) {
                return Err(Error::NotGraded);
            }
        }
    }
    let cols: Vec<Vec<(u32, Scalar)>> = (0..na)
        .map(|j| {
            (0..nb)
                .filter(|&i| f.get(i, j) != 0)
                .map(|i| (i as u32, f.get(i, j)))
                .collect()
        })
        .collect();

    let pairs: Vec<(usize, usize)> = (0..na)
        .flat_map(|i| (0..na).map(move |j| (i, j)))
        .collect();
    let witness = pairs
        .par_iter()
        .find_map_first(|&(i, j)| {
            let mut lhs = vec![0; nb];
            for &(k, c) in a.mult_basis(i, j) {
                for &(t, d) in &cols[k as usize] {
                    lhs[t as usize] = field.add(lhs[t as usize], field.mul(c, d));
                }
            }
            let rhs_sparse = b.mult_sparse(&cols[i], &cols[j]);
            for &(t, d) in &rhs_sparse {
                lhs[t as usize] = field.sub(lhs[t as usize], d);
            }
            let ok = match mod_subspace {
                None => lhs.iter().all(|&v| v == 0),
                Some(w) => w.contains(&lhs),
            };
            if ok {
                None
            } else {
                Some((i, j))
            }
        });

    // injectivity (modulo the subspace): no nonzero x with f(x) in W
    let injective = match mod_subspace {
        None => f.kernel_basis().dim() == 0,
        Some(w) => {
            let k = w.dim();
            let sys = Matrix::from_fn(field, nb, na + k, |r, c| {
                if c < na {
                    f.get(r, c)
                } else {
                    field.neg(w.basis().get(c - na, r))
                }
            });
            sys.kernel_basis()
                .basis_vectors()
                .all(|v| v[..na].iter().all(|&x| x == 0))
        }
    };
    // surjectivity modulo W: columns of f plus W span B
    let surjective = {
        let mut acc = RrefAccumulator::new(field, nb);
        for j in 0..na {
            acc.push_row((0..nb).map(|i| f.get(i, j)).collect());
        }
        if let Some(w) = mod_subspace {
            for v in w.basis_vectors() {
                acc.push_row(v.to_vec());
            }
        }
        acc.rank() == nb
    };

    Ok(HomReport {
        homomorphism: witness.is_none(),
        witness,
        injective,
        surjective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> PrimeField {
        PrimeField::gf3()
    }

    /// The tiny Kaplansky superalgebra, built by hand as a test fixture.
    pub(crate) fn k3_fixture() -> SuperAlgebra {
        let f = gf3();
        let space = SuperSpace::new(
            vec!["e".into(), "x".into(), "y".into()],
            vec![0, 1, 1],
        );
        let mut b = StructureBuilder::new("K3", f, space, AlgebraKind::Jordan);
        let half = f.half();
        b.add(0, 0, 0, 1); // e e = e
        b.add(0, 1, 1, half); // e x = x/2
        b.add(1, 0, 1, half);
        b.add(0, 2, 2, half);
        b.add(2, 0, 2, half);
        b.add(1, 2, 0, 1); // x y = e
        b.add(2, 1, 0, f.neg(1)); // y x = -e
        b.build().unwrap()
    }

    fn sl2_cross() -> SuperAlgebra {
        // [x_i, x_{i+1}] = x_{i+2}, indices mod 3; purely even.
        let f = gf3();
        let space = SuperSpace::even(vec!["x0".into(), "x1".into(), "x2".into()]);
        let mut b = StructureBuilder::new("sl2", f, space, AlgebraKind::Lie);
        for i in 0..3usize {
            b.add(i, (i + 1) % 3, (i + 2) % 3, 1);
            b.add((i + 1) % 3, i, (i + 2) % 3, f.neg(1));
        }
        b.build().unwrap()
    }

    #[test]
    fn multiply_k3() {
        let k3 = k3_fixture();
        // e*x = x/2 = 2x over GF(3)
        let e = k3.basis_vector(0);
        let x = k3.basis_vector(1);
        assert_eq!(k3.multiply(&e, &x).unwrap(), vec![0, 2, 0]);
        let zero = vec![0, 0, 0];
        assert_eq!(k3.multiply(&zero, &x).unwrap(), zero);
        assert!(k3.multiply(&[1, 0], &x).is_err());
    }

    #[test]
    fn jacobi_pass_and_perturbation() {
        let sl2 = sl2_cross();
        assert!(sl2.check_super_jacobi(CheckMode::Exhaustive).passed());

        // abelian algebra trivially passes
        let ab = StructureBuilder::new(
            "abelian",
            gf3(),
            SuperSpace::even(vec!["a".into(), "b".into()]),
            AlgebraKind::Lie,
        )
        .build()
        .unwrap();
        assert!(ab.check_super_jacobi(CheckMode::Exhaustive).passed());

        // perturb one entry: [x0,x1] = x2 + x1 breaks Jacobi but keeps skewness
        let f = gf3();
        let space = SuperSpace::even(vec!["x0".into(), "x1".into(), "x2".into()]);
        let mut b = StructureBuilder::new("bad", f, space, AlgebraKind::Lie);
        for i in 0..3usize {
            b.add(i, (i + 1) % 3, (i + 2) % 3, 1);
            b.add((i + 1) % 3, i, (i + 2) % 3, f.neg(1));
        }
        b.add(0, 1, 1, 1);
        b.add(1, 0, 1, f.neg(1));
        let bad = b.build().unwrap();
        let rep = bad.check_super_jacobi(CheckMode::Exhaustive);
        assert!(!rep.passed());
        assert!(!rep.violations.is_empty());
    }

    #[test]
    fn sampled_jacobi_deterministic() {
        let sl2 = sl2_cross();
        let r1 = sl2.check_super_jacobi(CheckMode::Sampled { count: 1000, seed: 7 });
        assert!(r1.passed());
        assert_eq!(r1.checked, 1000);
    }

    #[test]
    fn jordan_check_k3_and_perturbation() {
        let k3 = k3_fixture();
        assert!(k3.check_jordan_super().passed());

        // Dropping x*y from the table altogether leaves a split null
        // extension, which is still Jordan and must keep passing.
        let f = gf3();
        let mk = |ey: Scalar, with_xy: bool| {
            let space = SuperSpace::new(
                vec!["e".into(), "x".into(), "y".into()],
                vec![0, 1, 1],
            );
            let mut b = StructureBuilder::new("K3-var", f, space, AlgebraKind::Jordan);
            let half = f.half();
            b.add(0, 0, 0, 1);
            b.add(0, 1, 1, half);
            b.add(1, 0, 1, half);
            b.add(0, 2, 2, ey);
            b.add(2, 0, 2, ey);
            if with_xy {
                b.add(1, 2, 0, 1);
                b.add(2, 1, 0, f.neg(1));
            }
            b.build().unwrap()
        };
        assert!(mk(f.half(), false).check_jordan_super().passed());

        // An asymmetric idempotent action (e*y = y instead of y/2) keeps
        // supercommutativity but violates the operator identity.
        let bad = mk(1, true);
        let rep = bad.check_jordan_super();
        assert!(!rep.passed());
        assert!(!rep.violations.is_empty());
    }

    #[test]
    fn law_validation_rejects_bad_tables() {
        let f = gf3();
        let space = SuperSpace::even(vec!["a".into(), "b".into()]);
        let mut b = StructureBuilder::new("notskew", f, space, AlgebraKind::Lie);
        b.add(0, 1, 0, 1);
        b.add(1, 0, 0, 1); // should be -1
        assert!(b.build().is_err());

        let space = SuperSpace::new(vec!["a".into(), "b".into()], vec![0, 1]);
        let mut b = StructureBuilder::new("notgraded", f, space, AlgebraKind::Plain);
        b.add(0, 1, 0, 1); // even*odd landing in even
        assert!(b.build().is_err());
    }

    #[test]
    fn left_mult_examples() {
        let k3 = k3_fixture();
        let zero_map = k3.left_mult_matrix(&[0, 0, 0]);
        assert!(zero_map.is_zero());
        // L_e = diag(1, 2, 2)
        let le = k3.left_mult_matrix(&k3.basis_vector(0));
        assert_eq!(le, Matrix::from_i64(gf3(), vec![
            vec![1, 0, 0],
            vec![0, 2, 0],
            vec![0, 0, 2],
        ]));
    }

    #[test]
    fn derived_center_ideal_quotient() {
        let sl2 = sl2_cross();
        assert_eq!(sl2.derived_subalgebra().dim(), 3);
        assert_eq!(sl2.center().dim(), 0);

        let ab = StructureBuilder::new(
            "abelian",
            gf3(),
            SuperSpace::even(vec!["a".into(), "b".into()]),
            AlgebraKind::Lie,
        )
        .build()
        .unwrap();
        assert_eq!(ab.derived_subalgebra().dim(), 0);
        assert_eq!(ab.center().dim(), 2);

        // full space is an ideal and its closure is itself
        let full = Subspace::full(gf3(), 3);
        assert_eq!(sl2.ideal_closure(&full), full);

        // a line is not an ideal in sl2: quotient must reject it
        let line = Subspace::from_vectors(gf3(), 3, &[vec![1, 0, 0]]);
        assert!(sl2.quotient(&line).is_err());

        // direct sum: sl2 + abelian line; the line is an ideal, quotient is sl2
        let line_alg = StructureBuilder::new(
            "k",
            gf3(),
            SuperSpace::even(vec!["z".into()]),
            AlgebraKind::Lie,
        )
        .build()
        .unwrap();
        let sum = sl2.direct_sum(&line_alg, "sl2+k").unwrap();
        assert_eq!(sum.dim(), 4);
        let ideal = Subspace::from_vectors(gf3(), 4, &[vec![0, 0, 0, 1]]);
        let (q, proj) = sum.quotient(&ideal).unwrap();
        assert_eq!(q.dim(), 3);
        let rep = hom_check(&proj, &sum, &q, None).unwrap();
        assert!(rep.homomorphism);
        assert!(rep.surjective);
        assert!(!rep.injective);
    }

    #[test]
    fn graded_tensor_k3_k3() {
        let k3 = k3_fixture();
        let k9 = k3.graded_tensor(&k3, "K9").unwrap();
        assert_eq!(k9.graded_dim(), (5, 4));
        // (e⊗e)(e⊗e) = e⊗e
        let unit = k9.basis_vector(0);
        assert_eq!(k9.mult_vec(&unit, &unit), unit);
        // (x⊗e)(y⊗e) = (xy)⊗e = e⊗e, Koszul sign trivial since |e|=0
        let xe = k9.basis_vector(3);
        let ye = k9.basis_vector(6);
        assert_eq!(k9.mult_vec(&xe, &ye), unit);
        // supercommutative, so the jordan kind is accepted
        assert_eq!(k9.kind(), AlgebraKind::Jordan);
    }

    #[test]
    fn hom_check_identity_and_perturbed() {
        let sl2 = sl2_cross();
        let id = Matrix::identity(gf3(), 3);
        let rep = hom_check(&id, &sl2, &sl2, None).unwrap();
        assert!(rep.bijective_hom());

        let mut bad = id.clone();
        bad.set(0, 1, 1); // perturb one entry
        let rep = hom_check(&bad, &sl2, &sl2, None).unwrap();
        assert!(!rep.homomorphism);
        assert!(rep.witness.is_some());
    }
}
