//! Laurent polynomials in the formal variable `v` with rational coefficients.
//!
//! `v` is a square root of the deformation parameter `q`, so `q = v^2`.
//! Keeping everything in `v` makes the braiding coefficients `q^{1/2}` and `q^{-1/2}`
//! polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::complex::ComplexValue;

/// A Laurent polynomial `sum c_e * v^e` with `c_e` rational and `e` any integer.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    /// The monomial `c * v^e`; dropped entirely if `c = 0`.
    pub fn monomial(exp: i64, coeff: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    /// The variable `v` itself.
    pub fn v() -> Self {
        Self::monomial(1, BigRational::one())
    }

    /// `v^e` for any integer `e`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(exp, BigRational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::monomial(0, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::monomial(0, r)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    /// Iterate `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Leading coefficient = coefficient of the highest power of `v`.
    pub fn leading_coeff(&self) -> BigRational {
        self.max_exp()
            .map(|e| self.coeff(e))
            .unwrap_or_else(BigRational::zero)
    }

    fn insert_add(coeffs: &mut BTreeMap<i64, BigRational>, exp: i64, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        match coeffs.get_mut(&exp) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    coeffs.remove(&exp);
                }
            }
            None => {
                coeffs.insert(exp, c.clone());
            }
        }
    }

    pub fn shift(&self, delta: i64) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + delta, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `v -> v^-1`, i.e. reverse all exponents.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluate at a complex point `v0`.
    pub fn eval_complex(&self, v0: ComplexValue) -> ComplexValue {
        let mut acc = ComplexValue::zero();
        for (e, c) in &self.coeffs {
            let cf = ComplexValue::from_rational(c);
            acc = acc + cf * v0.powi(*e);
        }
        acc
    }

    /// Evaluate at a nonzero rational point `v0`, exactly.
    pub fn eval_rational(&self, v0: &BigRational) -> Option<BigRational> {
        if v0.is_zero() && self.min_exp().map(|e| e < 0).unwrap_or(false) {
            return None;
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.coeffs {
            let mut p = BigRational::one();
            let base = if *e >= 0 { v0.clone() } else { v0.recip() };
            for _ in 0..e.unsigned_abs() {
                p *= &base;
            }
            acc += c * p;
        }
        Some(acc)
    }

    /// True if all exponents are even, i.e. the element lies in `Q(q)`.
    pub fn is_even(&self) -> bool {
        self.coeffs.keys().all(|e| e % 2 == 0)
    }

    /// As an ordinary polynomial: shift so the lowest exponent is 0, and
    /// return coefficient vector `c[0..=deg]` plus the shift applied.
    pub fn to_poly_vec(&self) -> (Vec<BigRational>, i64) {
        if self.is_zero() {
            return (vec![], 0);
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        let mut out = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.coeffs {
            out[(e - lo) as usize] = c.clone();
        }
        (out, lo)
    }

    pub fn from_poly_vec(v: &[BigRational], shift: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            Self::insert_add(&mut coeffs, i as i64 + shift, c);
        }
        LaurentPoly { coeffs }
    }

    /// Greatest common divisor as Laurent polynomials: monic in the highest
    /// power, lowest exponent normalized to 0. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized_unit();
        }
        if other.is_zero() {
            return self.normalized_unit();
        }
        let (mut a, _) = self.to_poly_vec();
        let (mut b, _) = other.to_poly_vec();
        // Euclid on ordinary polynomial coefficient vectors.
        while !b.iter().all(|c| c.is_zero()) {
            let r = poly_rem(&a, &b);
            a = b;
            b = r;
        }
        let g = LaurentPoly::from_poly_vec(&a, 0);
        g.normalized_unit()
    }

    /// Divide by the unit `lc * v^min`: makes min exponent 0 and leading
    /// coefficient 1.
    fn normalized_unit(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lo = self.min_exp().unwrap();
        let lead = self.leading_coeff();
        self.shift(-lo).scale(&lead.recip())
    }

    /// Exact division; `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (a, sa) = self.to_poly_vec();
        let (b, sb) = other.to_poly_vec();
        let (q, r) = poly_div_rem(&a, &b);
        if !r.iter().all(|c| c.is_zero()) {
            return None;
        }
        Some(LaurentPoly::from_poly_vec(&q, sa - sb))
    }
}

/// Remainder of ordinary polynomial division (coefficient vectors, index =
/// degree).
fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    poly_div_rem(a, b).1
}

fn poly_deg(a: &[BigRational]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

fn poly_div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = poly_deg(b).expect("division by zero polynomial");
    let mut rem: Vec<BigRational> = a.to_vec();
    let mut quot = vec![BigRational::zero(); a.len().max(1)];
    let lead = b[db].clone();
    loop {
        let da = match poly_deg(&rem) {
            Some(d) => d,
            None => break,
        };
        if da < db {
            break;
        }
        let factor = &rem[da] / &lead;
        quot[da - db] = factor.clone();
        for i in 0..=db {
            let delta = &b[i] * &factor;
            rem[da - db + i] -= delta;
        }
    }
    (quot, rem)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            LaurentPoly::insert_add(&mut coeffs, *e, c);
        }
        LaurentPoly { coeffs }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            LaurentPoly::insert_add(&mut coeffs, *e, &(-c.clone()));
        }
        LaurentPoly { coeffs }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                LaurentPoly::insert_add(&mut coeffs, e1 + e2, &(c1 * c2));
            }
        }
        LaurentPoly { coeffs }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            LaurentPoly::insert_add(&mut self.coeffs, *e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            LaurentPoly::insert_add(&mut self.coeffs, *e, &(-c.clone()));
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{}", a)?,
                1 => write!(f, "{}*v", a)?,
                _ => write!(f, "{}*v^{}", a, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
