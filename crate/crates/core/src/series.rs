//! Dense univariate polynomials over `Z` and truncated power series over `Q`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("coefficient of x^{degree} is {value}, not an integer")]
    NonIntegralCoefficient { degree: usize, value: BigRational },
    #[error("square root needs constant term 1, found {0}")]
    ConstantTermNotOne(BigRational),
}

/// A polynomial with rational coefficients, or a power series known up to
/// `x^order` when `order` is set. Coefficients above the order are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
    order: Option<usize>,
}

impl RatPoly {
    pub fn polynomial(coeffs: Vec<BigRational>) -> Self {
        let mut p = Self {
            coeffs,
            order: None,
        };
        p.normalize();
        p
    }

    pub fn series(coeffs: Vec<BigRational>, order: usize) -> Self {
        let mut p = Self {
            coeffs,
            order: Some(order),
        };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Self::polynomial(Vec::new())
    }

    /// Builds a polynomial from `(numerator, denominator)` pairs in ascending degree.
    pub fn from_fractions(pairs: &[(i64, i64)]) -> Self {
        Self::polynomial(
            pairs
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn order(&self) -> Option<usize> {
        self.order
    }

    pub fn coeff(&self, degree: usize) -> BigRational {
        self.coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Same coefficients, reinterpreted as a series truncated at `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let order = self.order.map_or(order, |o| o.min(order));
        Self::series(self.coeffs.clone(), order)
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c * factor).collect();
        Self {
            coeffs,
            order: self.order,
        }
        .normalized()
    }

    /// Product with every term above `x^order` discarded.
    pub fn series_mul(&self, other: &Self, order: usize) -> Self {
        let order = [Some(order), self.order, other.order]
            .into_iter()
            .flatten()
            .min()
            .unwrap_or(order);
        let len = (self.coeffs.len() + other.coeffs.len()).saturating_sub(1);
        let mut out = vec![BigRational::zero(); len.min(order + 1)];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::series(out, order)
    }

    /// The series square root with constant term 1, to order `order`.
    ///
    /// `s_0 = 1`, `s_k = (p_k - sum_{i=1}^{k-1} s_i s_{k-i}) / 2`.
    pub fn series_sqrt(&self, order: usize) -> Result<Self, SeriesError> {
        let constant = self.coeff(0);
        if !constant.is_one() {
            return Err(SeriesError::ConstantTermNotOne(constant));
        }
        let order = self.order.map_or(order, |o| o.min(order));
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut s: Vec<BigRational> = Vec::with_capacity(order + 1);
        s.push(BigRational::one());
        for k in 1..=order {
            let mut acc = self.coeff(k);
            for i in 1..k {
                acc -= &s[i] * &s[k - i];
            }
            s.push(acc * &half);
        }
        Ok(Self::series(s, order))
    }

    /// Integrality gate: succeeds iff every coefficient is an integer.
    pub fn to_integer_poly(&self) -> Result<IntPoly, SeriesError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(degree, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(SeriesError::NonIntegralCoefficient {
                        degree,
                        value: c.clone(),
                    })
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(IntPoly::new)
    }

    fn normalized(mut self) -> Self {
        self.normalize();
        self
    }

    fn normalize(&mut self) {
        if let Some(order) = self.order {
            self.coeffs.truncate(order + 1);
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let order = match (self.order, rhs.order) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        RatPoly { coeffs, order }.normalized()
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        Self::polynomial(
            p.coeffs
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect(),
        )
    }
}

/// A polynomial with integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `x^n` times the polynomial.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `x^n * P(1/x)`; `n` must be at least the degree.
    pub fn reciprocal(&self, n: usize) -> Self {
        Self::new((0..=n).map(|i| self.coeff(n - i)).collect())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}
