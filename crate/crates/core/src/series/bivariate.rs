use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::YPoly;
use super::SeriesError;

/// Power series in `x` truncated after `x^order`, with coefficients in
/// `Q[y]`. All arithmetic is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    order: usize,
    coeffs: Vec<YPoly>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries {
            order,
            coeffs: vec![YPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_terms(order, &[(1, 0, 0)])
    }

    /// Rows beyond `order` are dropped; missing rows are zero.
    pub fn from_rows(order: usize, rows: Vec<YPoly>) -> Self {
        let mut s = Self::zero(order);
        for (n, row) in rows.into_iter().enumerate().take(order + 1) {
            s.coeffs[n] = row;
        }
        s
    }

    /// Sum of `c·x^i·y^j` over `(c, i, j)`.
    pub fn from_terms(order: usize, terms: &[(i64, usize, usize)]) -> Self {
        let mut s = Self::zero(order);
        for &(c, i, j) in terms {
            if i <= order {
                let term = YPoly::monomial(BigRational::from_integer(BigInt::from(c)), j);
                s.coeffs[i] = &s.coeffs[i] + &term;
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `x^n`, a polynomial in `y`.
    pub fn coeff(&self, n: usize) -> &YPoly {
        &self.coeffs[n]
    }

    pub fn coeff_at(&self, n: usize, d: usize) -> BigRational {
        self.coeffs[n].coeff(d)
    }

    pub fn rows(&self) -> &[YPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        BivariateSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.map_rows(|p| p.scale(c))
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    fn map_rows(&self, f: impl Fn(&YPoly) -> YPoly) -> Self {
        BivariateSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift_x(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order);
        for n in k..=self.order {
            s.coeffs[n] = self.coeffs[n - k].clone();
        }
        s
    }

    /// Multiplies by `y^k`.
    pub fn shift_y(&self, k: usize) -> Self {
        self.map_rows(|p| p.shift_up(k))
    }

    /// Exact division by `x^k`; the result is known to order `order - k`.
    pub fn div_x(&self, k: usize) -> Result<Self, SeriesError> {
        if k > self.order {
            return Err(SeriesError::OrderExhausted { order: self.order, needed: k });
        }
        if let Some(n) = (0..k).find(|&n| !self.coeffs[n].is_zero()) {
            return Err(SeriesError::NotDivisible(format!("x^{k} (nonzero x^{n} term)")));
        }
        Ok(BivariateSeries {
            order: self.order - k,
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Exact division by `y^k`.
    pub fn div_y(&self, k: usize) -> Result<Self, SeriesError> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, p)| {
                p.shift_down(k)
                    .ok_or_else(|| SeriesError::NotDivisible(format!("y^{k} (row x^{n})")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BivariateSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Substitutes `y ↦ y^k`.
    pub fn inflate_y(&self, k: usize) -> Self {
        self.map_rows(|p| p.inflate(k))
    }

    fn unit_constant(&self) -> Result<BigRational, SeriesError> {
        match self.coeffs[0].as_constant() {
            Some(c) if !c.is_zero() => Ok(c),
            _ => Err(SeriesError::NonUnitConstant(self.coeffs[0].to_string())),
        }
    }

    /// The unique `q` with `divisor·q = self` to the common order. The
    /// divisor's `x^0` coefficient must be a nonzero constant.
    pub fn div(&self, divisor: &BivariateSeries) -> Result<Self, SeriesError> {
        let order = self.order.min(divisor.order);
        let inv_lead = BigRational::from_integer(1.into()) / divisor.unit_constant()?;
        let mut q: Vec<YPoly> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for i in 1..=n {
                acc = &acc - &(&divisor.coeffs[i] * &q[n - i]);
            }
            q.push(acc.scale(&inv_lead));
        }
        Ok(BivariateSeries { order, coeffs: q })
    }

    /// The square root whose `x^0` coefficient is the positive rational root
    /// of `self`'s constant term.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let c0 = match self.coeffs[0].as_constant() {
            Some(c) if c.is_positive() => c,
            _ => return Err(SeriesError::NonSquareConstant(self.coeffs[0].to_string())),
        };
        let root = rational_sqrt(&c0).ok_or_else(|| SeriesError::NonSquareConstant(c0.to_string()))?;
        let inv_twice = BigRational::from_integer(1.into()) / (&root + &root);
        let mut s: Vec<YPoly> = vec![YPoly::constant(root)];
        for n in 1..=self.order {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc = &acc - &(&s[i] * &s[n - i]);
            }
            s.push(acc.scale(&inv_twice));
        }
        Ok(BivariateSeries {
            order: self.order,
            coeffs: s,
        })
    }

    /// Integer coefficient rows; fails on the first fractional coefficient.
    pub fn to_integer_rows(&self) -> Result<Vec<Vec<BigInt>>, SeriesError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, p)| p.to_integers().map_err(|d| SeriesError::NonInteger { n, d }))
            .collect()
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&YPoly, &YPoly) -> YPoly) -> Self {
        let order = self.order.min(rhs.order);
        BivariateSeries {
            order,
            coeffs: (0..=order).map(|n| f(&self.coeffs[n], &rhs.coeffs[n])).collect(),
        }
    }
}

fn rational_sqrt(c: &BigRational) -> Option<BigRational> {
    let num = c.numer();
    let den = c.denom();
    let rn = num.sqrt();
    let rd = den.sqrt();
    (&rn * &rn == *num && &rd * &rd == *den).then(|| BigRational::new(rn, rd))
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;

    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &BivariateSeries {
    type Output = BivariateSeries;

    fn sub(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// Cauchy product truncated at the smaller order.
impl Mul for &BivariateSeries {
    type Output = BivariateSeries;

    fn mul(self, rhs: &BivariateSeries) -> BivariateSeries {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(YPoly::zero(), |acc, i| {
                    let (a, b) = (&self.coeffs[i], &rhs.coeffs[n - i]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        &acc + &(a * b)
                    }
                })
            })
            .collect();
        BivariateSeries { order, coeffs }
    }
}

impl Neg for &BivariateSeries {
    type Output = BivariateSeries;

    fn neg(self) -> BivariateSeries {
        self.map_rows(|p| -p)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr<BivariateSeries> for BivariateSeries {
            type Output = BivariateSeries;
            fn $method(self, rhs: BivariateSeries) -> BivariateSeries {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&BivariateSeries> for BivariateSeries {
            type Output = BivariateSeries;
            fn $method(self, rhs: &BivariateSeries) -> BivariateSeries {
                (&self).$method(rhs)
            }
        }
        impl $tr<BivariateSeries> for &BivariateSeries {
            type Output = BivariateSeries;
            fn $method(self, rhs: BivariateSeries) -> BivariateSeries {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for BivariateSeries {
    type Output = BivariateSeries;

    fn neg(self) -> BivariateSeries {
        -&self
    }
}
