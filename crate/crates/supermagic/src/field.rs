//! Exact arithmetic in the prime field GF(p) for odd p.
//!
//! Scalars are bare residues in `0..p`; the modulus lives in a [`PrimeField`]
//! context created once per session and threaded through every constructor.
//! Residues never carry their modulus, so mixed-modulus values cannot be
//! built by accident: structures that hold scalars also hold the field and
//! assert field equality before combining.

use crate::error::Error;

/// A residue in `0..p`. Plain `u32`; all reduction goes through [`PrimeField`].
pub type Scalar = u32;

/// The field GF(p), p an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Field of the given odd prime order. `p = 2` is rejected: the
    /// constructions here divide by 2 throughout.
    pub fn new(p: u32) -> Result<Self, Error> {
        if p == 2 || p > (1 << 15) || !is_prime(p) {
            return Err(Error::BadModulus(p));
        }
        Ok(PrimeField { p })
    }

    /// The default session field, GF(3).
    pub fn gf3() -> Self {
        PrimeField { p: 3 }
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn zero(&self) -> Scalar {
        0
    }

    #[inline]
    pub fn one(&self) -> Scalar {
        1
    }

    /// Reduce a signed integer into `0..p`.
    #[inline]
    pub fn from_i64(&self, n: i64) -> Scalar {
        let p = self.p as i64;
        (((n % p) + p) % p) as Scalar
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        // p < 2^15 so the product fits in u32.
        (a * b) % self.p
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: Scalar) -> Scalar {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        // Fermat: a^(p-2)
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut base: Scalar, mut e: u32) -> Scalar {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The scalar 1/2, which exists since p is odd.
    #[inline]
    pub fn half(&self) -> Scalar {
        (self.p + 1) / 2
    }

    /// `(-1)^e` as a scalar, for Koszul signs.
    #[inline]
    pub fn sign(&self, e: u8) -> Scalar {
        if e & 1 == 1 {
            self.p - 1
        } else {
            1
        }
    }

    /// `row[i] += f * other[i]` for whole rows. Hot path of every
    /// elimination; specialized on the modulus so the compiler can
    /// strength-reduce the division.
    #[inline]
    pub fn row_axpy(&self, row: &mut [Scalar], other: &[Scalar], f: Scalar) {
        debug_assert_eq!(row.len(), other.len());
        if f == 0 {
            return;
        }
        match self.p {
            3 => axpy_const::<3>(row, other, f),
            5 => axpy_const::<5>(row, other, f),
            7 => axpy_const::<7>(row, other, f),
            p => {
                for (r, &o) in row.iter_mut().zip(other) {
                    *r = (*r + f * o) % p;
                }
            }
        }
    }

    /// Scale a row in place.
    pub fn row_scale(&self, row: &mut [Scalar], f: Scalar) {
        match self.p {
            3 => scale_const::<3>(row, f),
            p => {
                for r in row.iter_mut() {
                    *r = (*r * f) % p;
                }
            }
        }
    }
}

#[inline]
fn axpy_const<const P: u32>(row: &mut [Scalar], other: &[Scalar], f: Scalar) {
    for (r, &o) in row.iter_mut().zip(other) {
        *r = (*r + f * o) % P;
    }
}

#[inline]
fn scale_const<const P: u32>(row: &mut [Scalar], f: Scalar) {
    for r in row.iter_mut() {
        *r = (*r * f) % P;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_two_and_composites() {
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(5).is_ok());
    }

    #[test]
    fn arithmetic_gf3() {
        let f = PrimeField::gf3();
        assert_eq!(f.add(2, 2), 1);
        assert_eq!(f.sub(0, 1), 2);
        assert_eq!(f.mul(2, 2), 1);
        assert_eq!(f.inv(2), 2);
        assert_eq!(f.half(), 2);
        assert_eq!(f.from_i64(-4), 2);
        assert_eq!(f.sign(1), 2);
        assert_eq!(f.sign(2), 1);
    }

    #[test]
    fn inverses_gf7() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.half(), 4);
        assert_eq!(f.mul(4, 2), 1);
    }

    #[test]
    fn row_axpy_matches_scalar_loop() {
        let f = PrimeField::new(5).unwrap();
        let mut row = vec![0, 1, 2, 3, 4, 0, 1];
        let other = vec![4, 3, 2, 1, 0, 4, 3];
        let mut expect = row.clone();
        for (r, &o) in expect.iter_mut().zip(&other) {
            *r = f.add(*r, f.mul(3, o));
        }
        f.row_axpy(&mut row, &other, 3);
        assert_eq!(row, expect);
    }
}
