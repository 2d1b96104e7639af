use core::fmt;
use core::ops::{Mul, Neg};

use super::{ExactError, Poly, Rational};

/// 2×2 matrix over `ℚ[t]`, row-major.
///
/// Representation images all have determinant 1; equality in PSL(2) is
/// [`Mat2::projective_eq`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub e11: Poly,
    pub e12: Poly,
    pub e21: Poly,
    pub e22: Poly,
}

impl Mat2 {
    pub fn new(e11: Poly, e12: Poly, e21: Poly, e22: Poly) -> Self {
        Mat2 { e11, e12, e21, e22 }
    }

    pub fn from_rationals(e11: Rational, e12: Rational, e21: Rational, e22: Rational) -> Self {
        Mat2::new(e11.into(), e12.into(), e21.into(), e22.into())
    }

    pub fn from_i64s(e11: i64, e12: i64, e21: i64, e22: i64) -> Self {
        Mat2::from_rationals(e11.into(), e12.into(), e21.into(), e22.into())
    }

    pub fn identity() -> Self {
        Mat2::from_i64s(1, 0, 0, 1)
    }

    pub fn entries(&self) -> [&Poly; 4] {
        [&self.e11, &self.e12, &self.e21, &self.e22]
    }

    pub fn det(&self) -> Poly {
        &(&self.e11 * &self.e22) - &(&self.e12 * &self.e21)
    }

    pub fn trace(&self) -> Poly {
        &self.e11 + &self.e22
    }

    /// Adjugate inverse; only matrices with determinant `±1` are accepted.
    pub fn inverse(&self) -> Result<Mat2, ExactError> {
        let det = self.det().as_constant();
        let adj = Mat2::new(self.e22.clone(), -&self.e12, -&self.e21, self.e11.clone());
        match det {
            Some(d) if d.is_one() => Ok(adj),
            Some(d) if (-&d).is_one() => Ok(-adj),
            _ => Err(ExactError::NotUnimodular),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity()
    }

    /// Equal up to a global sign, i.e. equal as elements of PSL(2).
    pub fn projective_eq(&self, rhs: &Mat2) -> bool {
        self == rhs || *self == -rhs
    }

    pub fn is_projective_identity(&self) -> bool {
        self.projective_eq(&Mat2::identity())
    }

    /// Non-negative power by repeated squaring.
    pub fn pow(&self, exp: u32) -> Mat2 {
        let mut acc = Mat2::identity();
        let mut sq = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    pub fn is_constant(&self) -> bool {
        self.entries().iter().all(|e| e.is_constant())
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.e21.is_zero()
    }

    /// Entry degrees `(d11, d12, d21, d22)`, `None` for zero entries.
    pub fn degrees(&self) -> [Option<usize>; 4] {
        self.entries().map(Poly::degree)
    }
}

pub fn mat_mul(lhs: &Mat2, rhs: &Mat2) -> Mat2 {
    lhs * rhs
}

pub fn mat_inverse(m: &Mat2) -> Result<Mat2, ExactError> {
    m.inverse()
}

pub fn projective_eq(lhs: &Mat2, rhs: &Mat2) -> bool {
    lhs.projective_eq(rhs)
}

pub fn trace(m: &Mat2) -> Poly {
    m.trace()
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            e11: &(&self.e11 * &rhs.e11) + &(&self.e12 * &rhs.e21),
            e12: &(&self.e11 * &rhs.e12) + &(&self.e12 * &rhs.e22),
            e21: &(&self.e21 * &rhs.e11) + &(&self.e22 * &rhs.e21),
            e22: &(&self.e21 * &rhs.e12) + &(&self.e22 * &rhs.e22),
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2::new(-&self.e11, -&self.e12, -&self.e21, -&self.e22)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        -&self
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.e11, self.e12, self.e21, self.e22)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat2{self}")
    }
}
