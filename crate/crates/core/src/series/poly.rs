use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Polynomial in `y` with exact rational coefficients, stored low degree
/// first with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct YPoly {
    coeffs: Vec<BigRational>,
}

impl YPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        YPoly { coeffs }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        YPoly::new(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        YPoly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        YPoly::new(vec![c])
    }

    /// `c·y^d`.
    pub fn monomial(c: BigRational, d: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); d];
        coeffs.push(c);
        YPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigRational {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The constant, if this is a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn scale(&self, c: &BigRational) -> YPoly {
        YPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `y^k`.
    pub fn shift_up(&self, k: usize) -> YPoly {
        if self.is_zero() {
            return YPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        YPoly { coeffs }
    }

    /// Exact division by `y^k`; `None` if a low coefficient is nonzero.
    pub fn shift_down(&self, k: usize) -> Option<YPoly> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(YPoly::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// Substitutes `y ↦ y^k`.
    pub fn inflate(&self, k: usize) -> YPoly {
        if self.is_zero() {
            return YPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d * k] = c.clone();
        }
        YPoly::new(coeffs)
    }

    /// Coefficients as integers, or the first degree holding a fraction.
    pub fn to_integers(&self) -> Result<Vec<BigInt>, usize> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| if c.is_integer() { Ok(c.to_integer()) } else { Err(d) })
            .collect()
    }
}

impl Add for &YPoly {
    type Output = YPoly;

    fn add(self, rhs: &YPoly) -> YPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        YPoly::new((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &YPoly {
    type Output = YPoly;

    fn sub(self, rhs: &YPoly) -> YPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        YPoly::new((0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul for &YPoly {
    type Output = YPoly;

    fn mul(self, rhs: &YPoly) -> YPoly {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        YPoly::new(coeffs)
    }
}

impl Neg for &YPoly {
    type Output = YPoly;

    fn neg(self) -> YPoly {
        YPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*y")?,
                _ => write!(f, "{c}*y^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = YPoly::from_ints([1, 1]);
        let b = YPoly::from_ints([1, -1]);
        assert_eq!(&a * &b, YPoly::from_ints([1, 0, -1]));
        assert_eq!(&a + &b, YPoly::from_ints([2]));
        assert_eq!(&a - &a, YPoly::zero());
        assert_eq!(a.shift_up(2), YPoly::from_ints([0, 0, 1, 1]));
        assert_eq!(a.shift_up(2).shift_down(2), Some(a.clone()));
        assert_eq!(a.shift_down(1), None);
        assert_eq!(a.inflate(2), YPoly::from_ints([1, 0, 1]));
        assert_eq!(YPoly::from_ints([0, 0, 0]).degree(), None);
    }
}
