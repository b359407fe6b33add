//! Exact arithmetic in `Q(v)` with `v^2 = q`, plus numeric specialization.

pub mod complex;
pub mod field;
pub mod laurent;
pub mod quantum;

pub use complex::{format_sig12, ComplexValue, DEFAULT_EPS};
pub use field::FieldElement;
pub use laurent::LaurentPoly;
pub use quantum::quantum_integer;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ScalarError;

/// The scalar interface shared by exact and numeric evaluation.
///
/// Exact scalars ignore the tolerance arguments; the numeric scalar uses
/// them for zero tests and comparisons.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug + std::fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Result<Self, ScalarError>;
    fn neg(&self) -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero_tol(&self, eps: f64) -> bool;
    fn approx_eq(&self, other: &Self, eps: f64) -> bool;
    /// Magnitude used for numeric pivot selection; exact scalars report
    /// 1.0 for any nonzero value.
    fn pivot_size(&self) -> f64;
    /// True when arithmetic is exact (no tolerances involved).
    fn is_exact() -> bool;
    /// Residual magnitude of `self` when compared against zero; used in
    /// relation reports. Exact scalars report 0.0 or infinity.
    fn residual(&self) -> f64 {
        if self.is_zero_tol(0.0) {
            0.0
        } else {
            f64::INFINITY
        }
    }
}

impl Scalar for FieldElement {
    fn zero() -> Self {
        FieldElement::zero()
    }
    fn one() -> Self {
        FieldElement::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self / other)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        FieldElement::from_i64(n)
    }
    fn is_zero_tol(&self, _eps: f64) -> bool {
        self.is_zero()
    }
    fn approx_eq(&self, other: &Self, _eps: f64) -> bool {
        self == other
    }
    fn pivot_size(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            1.0
        }
    }
    fn is_exact() -> bool {
        true
    }
}

impl Scalar for ComplexValue {
    fn zero() -> Self {
        ComplexValue::zero()
    }
    fn one() -> Self {
        ComplexValue::one()
    }
    fn add(&self, other: &Self) -> Self {
        *self + *other
    }
    fn sub(&self, other: &Self) -> Self {
        *self - *other
    }
    fn mul(&self, other: &Self) -> Self {
        *self * *other
    }
    fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        if other.abs() == 0.0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(*self / *other)
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn from_i64(n: i64) -> Self {
        ComplexValue::from_f64(n as f64)
    }
    fn is_zero_tol(&self, eps: f64) -> bool {
        self.is_zero_eps(eps)
    }
    fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        ComplexValue::approx_eq(self, other, eps)
    }
    fn pivot_size(&self) -> f64 {
        self.abs()
    }
    fn is_exact() -> bool {
        false
    }
    fn residual(&self) -> f64 {
        self.abs()
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self / other)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
    fn is_zero_tol(&self, _eps: f64) -> bool {
        self.is_zero()
    }
    fn approx_eq(&self, other: &Self, _eps: f64) -> bool {
        self == other
    }
    fn pivot_size(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            1.0
        }
    }
    fn is_exact() -> bool {
        true
    }
}

/// Three ways to fix the parameter `q` for an operation.
#[derive(Clone, Debug, PartialEq)]
pub enum QMode {
    /// Symbolic `q`; scalars live in `Q(v)`.
    Generic,
    /// Exact rational `q`; only elements of `Q(q)` can be specialized.
    Rational(BigRational),
    /// Numeric complex `q` with a chosen square root `v0` (`v0^2 = q`).
    Numeric(ComplexValue),
}

impl QMode {
    pub fn numeric_from_q(q: ComplexValue) -> Self {
        QMode::Numeric(q)
    }

    /// The chosen `v = q^{1/2}` for numeric mode (principal branch).
    pub fn v_numeric(&self) -> Option<ComplexValue> {
        match self {
            QMode::Numeric(q) => Some(q.sqrt()),
            QMode::Rational(q) => Some(ComplexValue::from_rational(q).sqrt()),
            QMode::Generic => None,
        }
    }
}

/// Convenience: rational from a signed 64-bit pair.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn rat_abs(r: &BigRational) -> BigRational {
    r.abs()
}
