//! Exact univariate polynomials over the rationals and Lagrange
//! interpolation. These hold Ehrhart polynomials, so evaluation must be
//! exact everywhere; there is no floating point anywhere in this module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A univariate polynomial with exact rational coefficients, stored in
/// ascending degree order. The leading coefficient is nonzero unless the
/// polynomial is identically zero (empty coefficient vector).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros so the leading-coefficient invariant holds.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
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

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_int(&self, t: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(t)))
    }

    /// Evaluates at an integer and demands an integer result.
    pub fn eval_int_exact(&self, t: i64) -> Result<BigInt> {
        let v = self.eval_int(t);
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(Error::Inconsistency(format!(
                "expected integer value at t={t}, got {v}"
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The polynomial `p(t + s)` as a polynomial in `t`.
    pub fn shift_arg(&self, s: i64) -> Self {
        let shift = Self::from_coeffs(vec![
            BigRational::from_integer(BigInt::from(s)),
            BigRational::one(),
        ]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&shift).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// True when every coefficient of the polynomial is strictly positive.
    /// The zero polynomial is not positive.
    pub fn all_coeffs_positive(&self) -> bool {
        !self.coeffs.is_empty() && self.coeffs.iter().all(|c| c.is_positive())
    }

    /// Index and value of the first nonpositive coefficient, if any.
    pub fn first_nonpositive_coeff(&self) -> Option<(usize, BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_positive())
            .map(|(i, c)| (i, c.clone()))
    }

    /// True when no coefficient is negative (zero coefficients allowed).
    pub fn no_negative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Index and value of the first strictly negative coefficient, if any.
    pub fn first_negative_coeff(&self) -> Option<(usize, BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| c.is_negative())
            .map(|(i, c)| (i, c.clone()))
    }

    /// Coefficientwise `self <= other`, i.e. every coefficient of
    /// `other - self` is nonnegative.
    pub fn coefficientwise_le(&self, other: &Self) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| !(other.coeff(i) - self.coeff(i)).is_negative())
    }
}

/// Exact Lagrange interpolation through points with pairwise distinct
/// integer abscissae. The result is the unique polynomial of degree less
/// than the number of points.
pub fn interpolate(points: &[(i64, BigInt)]) -> Result<RationalPolynomial> {
    if points.is_empty() {
        return Err(Error::InvalidInput("interpolation needs a point".into()));
    }
    for (i, (t, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(s, _)| s == t) {
            return Err(Error::DuplicateNode(*t));
        }
    }
    let mut result = RationalPolynomial::zero();
    for (i, (ti, vi)) in points.iter().enumerate() {
        let mut basis = RationalPolynomial::one();
        let mut denom = BigRational::one();
        for (j, (tj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&RationalPolynomial::from_int_coeffs(&[-tj, 1]));
            denom *= BigRational::from_integer(BigInt::from(ti - tj));
        }
        let weight = BigRational::from_integer(vi.clone()) / denom;
        result = result.add(&basis.scale(&weight));
    }
    Ok(result)
}
