//! Z2-graded vector spaces with labeled bases, and homogeneous linear maps.

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// 0 = even, 1 = odd.
pub type Parity = u8;

/// A finite labeled basis with one parity bit per basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperSpace {
    labels: Vec<String>,
    parity: Vec<Parity>,
}

impl SuperSpace {
    pub fn new(labels: Vec<String>, parity: Vec<Parity>) -> Self {
        assert_eq!(labels.len(), parity.len());
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            assert!(seen.insert(l.clone()), "duplicate basis label {l:?}");
        }
        assert!(parity.iter().all(|&p| p <= 1));
        SuperSpace { labels, parity }
    }

    /// Purely even space with the given labels.
    pub fn even(labels: Vec<String>) -> Self {
        let parity = vec![0; labels.len()];
        SuperSpace::new(labels, parity)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn even_dim(&self) -> usize {
        self.parity.iter().filter(|&&p| p == 0).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.parity.iter().filter(|&&p| p == 1).count()
    }

    /// (even, odd) dimension pair.
    pub fn graded_dim(&self) -> (usize, usize) {
        (self.even_dim(), self.odd_dim())
    }

    #[inline]
    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Tensor product space: pairs in lexicographic order, parity additive.
    pub fn tensor(&self, other: &SuperSpace) -> SuperSpace {
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        let mut parity = Vec::with_capacity(self.dim() * other.dim());
        for i in 0..self.dim() {
            for j in 0..other.dim() {
                labels.push(format!("{}*{}", self.labels[i], other.labels[j]));
                parity.push((self.parity[i] + other.parity[j]) & 1);
            }
        }
        SuperSpace::new(labels, parity)
    }
}

/// A parity-homogeneous linear map stored as a matrix acting on column
/// coordinate vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    pub parity: Parity,
    pub mat: Matrix,
}

impl GradedMap {
    pub fn new(parity: Parity, mat: Matrix) -> Self {
        GradedMap { parity, mat }
    }

    /// Wrap a matrix after verifying it is homogeneous of the claimed parity
    /// with respect to the given domain and codomain gradings.
    pub fn homogeneous(
        parity: Parity,
        mat: Matrix,
        domain: &SuperSpace,
        codomain: &SuperSpace,
    ) -> Result<Self> {
        if mat.rows() != codomain.dim() || mat.cols() != domain.dim() {
            return Err(Error::DimensionMismatch(format!(
                "map is {}x{}, spaces are {} -> {}",
                mat.rows(),
                mat.cols(),
                domain.dim(),
                codomain.dim()
            )));
        }
        for i in 0..mat.rows() {
            for j in 0..mat.cols() {
                if mat.get(i, j) != 0 && (codomain.parity(i) ^ domain.parity(j)) != parity {
                    return Err(Error::NotGraded);
                }
            }
        }
        Ok(GradedMap { parity, mat })
    }
}

/// Parity of a nonzero matrix with respect to the given gradings, if it is
/// homogeneous.
pub fn homogeneous_parity(
    mat: &Matrix,
    domain: &SuperSpace,
    codomain: &SuperSpace,
) -> Option<Parity> {
    let mut seen: Option<Parity> = None;
    for i in 0..mat.rows() {
        for j in 0..mat.cols() {
            if mat.get(i, j) != 0 {
                let p = codomain.parity(i) ^ domain.parity(j);
                match seen {
                    None => seen = Some(p),
                    Some(q) if q != p => return None,
                    _ => {}
                }
            }
        }
    }
    seen.or(Some(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn graded_dims() {
        let s = SuperSpace::new(
            vec!["1".into(), "u".into(), "v".into()],
            vec![0, 1, 1],
        );
        assert_eq!(s.graded_dim(), (1, 2));
        let t = s.tensor(&s);
        assert_eq!(t.graded_dim(), (5, 4));
        assert_eq!(t.label(1), "1*u");
        assert_eq!(t.parity(1), 1);
        assert_eq!(t.parity(4), 0); // u*u
    }

    #[test]
    fn homogeneity_detection() {
        let s = SuperSpace::new(vec!["e".into(), "x".into()], vec![0, 1]);
        let f = PrimeField::gf3();
        let even = Matrix::from_i64(f, vec![vec![1, 0], vec![0, 2]]);
        let odd = Matrix::from_i64(f, vec![vec![0, 1], vec![1, 0]]);
        let mixed = Matrix::from_i64(f, vec![vec![1, 1], vec![0, 0]]);
        assert_eq!(homogeneous_parity(&even, &s, &s), Some(0));
        assert_eq!(homogeneous_parity(&odd, &s, &s), Some(1));
        assert_eq!(homogeneous_parity(&mixed, &s, &s), None);
        assert!(GradedMap::homogeneous(0, even, &s, &s).is_ok());
        assert!(GradedMap::homogeneous(0, odd, &s, &s).is_err());
    }
}
