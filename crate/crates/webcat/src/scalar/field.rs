//! Elements of the rational function field `Q(v)`, `v^2 = q`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::complex::ComplexValue;
use super::laurent::LaurentPoly;
use crate::error::ScalarError;

/// A quotient of Laurent polynomials in canonical form.
///
/// Canonical form: `gcd(num, den) = 1`, and the denominator has lowest
/// `v`-exponent 0 and leading (highest-power) coefficient 1. Equality is
/// structural on canonical forms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl FieldElement {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonicalize(num, den))
    }

    fn canonicalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return FieldElement {
                num: LaurentPoly::zero(),
                den: LaurentPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut n = num.div_exact(&g).expect("gcd divides");
        let mut d = den.div_exact(&g).expect("gcd divides");
        // Normalize the denominator to lowest exponent 0, leading coeff 1.
        let lo = d.min_exp().unwrap();
        n = n.shift(-lo);
        d = d.shift(-lo);
        let lead = d.leading_coeff();
        if !lead.is_one() {
            let inv = lead.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        FieldElement { num: n, den: d }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        FieldElement {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn v() -> Self {
        Self::from_poly(LaurentPoly::v())
    }

    /// `v^e`, so `q^k = v_pow(2k)`.
    pub fn v_pow(e: i64) -> Self {
        Self::from_poly(LaurentPoly::v_pow(e))
    }

    pub fn q() -> Self {
        Self::v_pow(2)
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_i64(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_poly(LaurentPoly::from_rational(r))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonicalize(self.den.clone(), self.num.clone()))
    }

    /// Substitute `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self::canonicalize(self.num.bar(), self.den.bar())
    }

    /// Numeric specialization at `v = v0`; fails if the denominator
    /// vanishes there (within `eps`).
    pub fn specialize(&self, v0: ComplexValue, eps: f64) -> Result<ComplexValue, ScalarError> {
        let d = self.den.eval_complex(v0);
        if d.is_zero_eps(eps) {
            return Err(ScalarError::Pole);
        }
        Ok(self.num.eval_complex(v0) / d)
    }

    /// Exact specialization at a rational `v0 != 0`.
    pub fn specialize_rational(&self, v0: &BigRational) -> Result<BigRational, ScalarError> {
        if v0.is_zero() {
            return Err(ScalarError::Pole);
        }
        let d = self.den.eval_rational(v0).ok_or(ScalarError::Pole)?;
        if d.is_zero() {
            return Err(ScalarError::Pole);
        }
        let n = self.num.eval_rational(v0).ok_or(ScalarError::Pole)?;
        Ok(n / d)
    }

    /// Exact specialization at rational `q0`, allowed only when every
    /// exponent of `v` is even (the element lies in `Q(q)`).
    pub fn specialize_rational_q(&self, q0: &BigRational) -> Result<BigRational, ScalarError> {
        if !self.num.is_even() || !self.den.is_even() {
            return Err(ScalarError::OddPowersOfV);
        }
        if q0.is_zero() {
            return Err(ScalarError::Pole);
        }
        let eval = |p: &LaurentPoly| -> BigRational {
            let mut acc = BigRational::zero();
            for (e, c) in p.terms() {
                let k = e / 2;
                let mut pw = BigRational::one();
                let base = if k >= 0 { q0.clone() } else { q0.recip() };
                for _ in 0..k.unsigned_abs() {
                    pw *= &base;
                }
                acc += c * pw;
            }
            acc
        };
        let d = eval(&self.den);
        if d.is_zero() {
            return Err(ScalarError::Pole);
        }
        Ok(eval(&self.num) / d)
    }

    /// Parse a sparse term list like `"1*v^2 + 1*v^-2"`, `"-q"` is not
    /// accepted: terms are in `v` with explicit rational coefficients, but
    /// bare forms like `"v^2"`, `"-v"`, `"3"`, `"1/2*v^-1"` are allowed.
    pub fn parse(s: &str) -> Result<Self, ScalarError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ScalarError::Parse(s.to_string()));
        }
        if let Some((n, d)) = compact.split_once('/') {
            // Allow "num/den" only when both sides are plain integers
            // (a rational constant); anything else must use term syntax.
            if let (Ok(a), Ok(b)) = (n.parse::<BigInt>(), d.parse::<BigInt>()) {
                if b.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                return Ok(Self::from_rational(BigRational::new(a, b)));
            }
        }
        let mut acc = LaurentPoly::zero();
        let mut term = String::new();
        let mut chars = compact.chars().peekable();
        let mut terms: Vec<String> = Vec::new();
        while let Some(c) = chars.next() {
            match c {
                '+' | '-' if !term.is_empty() && !term.ends_with('^') && !term.ends_with('e') => {
                    terms.push(term.clone());
                    term.clear();
                    if c == '-' {
                        term.push('-');
                    }
                }
                _ => term.push(c),
            }
        }
        if !term.is_empty() {
            terms.push(term);
        }
        for t in terms {
            acc += &parse_term(&t).ok_or_else(|| ScalarError::Parse(s.to_string()))?;
        }
        Ok(Self::from_poly(acc))
    }
}

fn parse_term(t: &str) -> Option<LaurentPoly> {
    // Forms: "c", "c*v^e", "c*v", "v^e", "v", "-v^e", with c = int or p/q.
    let (coeff_str, v_str) = match t.split_once('*') {
        Some((c, v)) => (c.to_string(), Some(v.to_string())),
        None => {
            if let Some(rest) = t.strip_prefix("-v") {
                ("-1".to_string(), Some(format!("v{}", rest)))
            } else if t.starts_with('v') {
                ("1".to_string(), Some(t.to_string()))
            } else {
                (t.to_string(), None)
            }
        }
    };
    let coeff: BigRational = if let Some((n, d)) = coeff_str.split_once('/') {
        BigRational::new(n.parse().ok()?, d.parse().ok()?)
    } else {
        BigRational::from_integer(coeff_str.parse().ok()?)
    };
    let exp = match v_str {
        None => 0,
        Some(vs) => {
            if vs == "v" {
                1
            } else {
                vs.strip_prefix("v^")?.parse().ok()?
            }
        }
    };
    Some(LaurentPoly::monomial(exp, coeff))
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::canonicalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::canonicalize(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::canonicalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        if rhs.is_zero() {
            panic!("FieldElement division by zero");
        }
        FieldElement::canonicalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $f(self, rhs: FieldElement) -> FieldElement {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $f(self, rhs: &FieldElement) -> FieldElement {
                (&self).$f(rhs)
            }
        }
        impl $tr<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $f(self, rhs: FieldElement) -> FieldElement {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

fn poly_pairs(p: &LaurentPoly) -> Vec<(i64, String)> {
    p.terms().map(|(e, c)| (*e, c.to_string())).collect()
}

fn poly_from_pairs(pairs: &[(i64, String)]) -> Result<LaurentPoly, ScalarError> {
    let mut acc = LaurentPoly::zero();
    for (e, c) in pairs {
        let r: BigRational = if let Some((n, d)) = c.split_once('/') {
            BigRational::new(
                n.parse().map_err(|_| ScalarError::Parse(c.clone()))?,
                d.parse().map_err(|_| ScalarError::Parse(c.clone()))?,
            )
        } else {
            BigRational::from_integer(c.parse().map_err(|_| ScalarError::Parse(c.clone()))?)
        };
        acc += &LaurentPoly::monomial(*e, r);
    }
    Ok(acc)
}

/// JSON form: `{"num": [[exp, "p/q"], ...], "den": [...]}`.
impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            num: Vec<(i64, String)>,
            den: Vec<(i64, String)>,
        }
        Wire {
            num: poly_pairs(&self.num),
            den: poly_pairs(&self.den),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FieldElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Text(String),
            Parts {
                num: Vec<(i64, String)>,
                den: Vec<(i64, String)>,
            },
        }
        match Wire::deserialize(deserializer)? {
            Wire::Text(s) => FieldElement::parse(&s).map_err(D::Error::custom),
            Wire::Parts { num, den } => {
                let n = poly_from_pairs(&num).map_err(D::Error::custom)?;
                let d = poly_from_pairs(&den).map_err(D::Error::custom)?;
                FieldElement::new(n, d).map_err(D::Error::custom)
            }
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
