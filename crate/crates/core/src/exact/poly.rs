use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::Rational;

/// Dense univariate polynomial in the formal indeterminate `t`.
///
/// Coefficients are stored in ascending degree order. The vector is empty for
/// the zero polynomial and otherwise has a nonzero last entry.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(lhs: &Poly, rhs: &Poly, op: PolyOp) -> Poly {
    match op {
        PolyOp::Add => lhs + rhs,
        PolyOp::Sub => lhs - rhs,
        PolyOp::Mul => lhs * rhs,
    }
}

impl Poly {
    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly { coeffs: vec![c] }.normalize()
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Poly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Poly { coeffs }.normalize()
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    /// The value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.constant_term())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * at) + c)
    }

    fn zip_with(&self, rhs: &Poly, f: impl Fn(&Rational, &Rational) -> Rational) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        let coeffs = (0..n)
            .map(|i| {
                f(
                    self.coeffs.get(i).unwrap_or(&zero),
                    rhs.coeffs.get(i).unwrap_or(&zero),
                )
            })
            .collect();
        Poly { coeffs }.normalize()
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        // Leading product of two nonzero leading coefficients is nonzero.
        Poly { coeffs }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Human form, lowest degree first: `9/2 + t`, `1 - 3/2 t^2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag} ")?;
                    }
                    f.write_str("t")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    /// Schoolbook convolution on plain integers, independent of `Poly`.
    fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for i in 0..a.len() {
            for j in 0..b.len() {
                out[i + j] += a[i] * b[j];
            }
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    #[test]
    fn arith_examples() {
        let t = Poly::t();
        assert_eq!(poly_arith(&t, &t, PolyOp::Mul), Poly::from_i64s(&[0, 0, 1]));
        assert_eq!(
            poly_arith(&Poly::one(), &t, PolyOp::Add),
            Poly::from_i64s(&[1, 1])
        );
        let expected = convolve(&[1, 1], &[1, -1]);
        assert_eq!(expected, [1, 0, -1]);
        assert_eq!(
            poly_arith(&Poly::from_i64s(&[1, 1]), &Poly::from_i64s(&[1, -1]), PolyOp::Mul),
            Poly::from_i64s(&expected)
        );
    }

    #[test]
    fn normalization() {
        assert!(Poly::from_i64s(&[0, 0, 0]).is_zero());
        assert_eq!(Poly::from_i64s(&[1, 2, 0]).degree(), Some(1));
        let p = Poly::from_i64s(&[1, 1]);
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).degree(), None);
    }

    #[test]
    fn display() {
        let p = Poly::from_coeffs(vec!["9/2".parse().unwrap(), Rational::one()]);
        assert_eq!(p.to_string(), "9/2 + t");
        assert_eq!(Poly::from_i64s(&[0, -1, 3]).to_string(), "-t + 3 t^2");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn eval_horner() {
        let p = Poly::from_i64s(&[1, -2, 3]);
        assert_eq!(p.eval(&Rational::from(2)), Rational::from(9));
    }
}
