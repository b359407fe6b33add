//! Complex floating-point values used by the numeric evaluation mode.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::ToPrimitive;

/// Default comparison tolerance for numeric mode.
pub const DEFAULT_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl ComplexValue {
    pub fn new(re: f64, im: f64) -> Self {
        ComplexValue { re, im }
    }

    pub fn zero() -> Self {
        ComplexValue { re: 0.0, im: 0.0 }
    }

    pub fn one() -> Self {
        ComplexValue { re: 1.0, im: 0.0 }
    }

    pub fn from_f64(x: f64) -> Self {
        ComplexValue { re: x, im: 0.0 }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let num = r.numer().to_f64().unwrap_or(f64::NAN);
        let den = r.denom().to_f64().unwrap_or(f64::NAN);
        ComplexValue::from_f64(num / den)
    }

    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn conj(&self) -> Self {
        ComplexValue::new(self.re, -self.im)
    }

    pub fn arg(&self) -> f64 {
        self.im.atan2(self.re)
    }

    pub fn recip(&self) -> Self {
        let d = self.re * self.re + self.im * self.im;
        ComplexValue::new(self.re / d, -self.im / d)
    }

    pub fn powi(&self, n: i64) -> Self {
        if n == 0 {
            return Self::one();
        }
        let base = if n > 0 { *self } else { self.recip() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc * base;
        }
        acc
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let r = self.abs();
        let theta = self.arg();
        let rs = r.sqrt();
        ComplexValue::new(rs * (theta / 2.0).cos(), rs * (theta / 2.0).sin())
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        (*self - *other).abs() <= eps
    }

    pub fn is_zero_eps(&self, eps: f64) -> bool {
        self.abs() <= eps
    }

    /// Parse strings like "1", "-2.5", "i", "1+2i", "3-0.5i", "2e-3i".
    pub fn parse(s: &str) -> Option<Self> {
        let t = s.trim().replace(' ', "");
        if t.is_empty() {
            return None;
        }
        if !t.contains('i') {
            return t.parse::<f64>().ok().map(Self::from_f64);
        }
        // Split into real and imaginary parts; the imaginary part ends in i.
        let body = &t[..t.len() - 1]; // strip trailing 'i'
        if !t.ends_with('i') {
            return None;
        }
        // Find the split '+'/'-' that is not an exponent sign and not leading.
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && bytes[k - 1] as char != 'e' && bytes[k - 1] as char != 'E'
            {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => {
                let re: f64 = body[..k].parse().ok()?;
                let ims = &body[k..];
                let im: f64 = match ims {
                    "+" => 1.0,
                    "-" => -1.0,
                    _ => ims.parse().ok()?,
                };
                Some(ComplexValue::new(re, im))
            }
            None => {
                let im: f64 = match body {
                    "" => 1.0,
                    "-" => -1.0,
                    _ => body.parse().ok()?,
                };
                Some(ComplexValue::new(0.0, im))
            }
        }
    }
}

impl Add for ComplexValue {
    type Output = ComplexValue;
    fn add(self, rhs: Self) -> Self {
        ComplexValue::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ComplexValue {
    type Output = ComplexValue;
    fn sub(self, rhs: Self) -> Self {
        ComplexValue::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for ComplexValue {
    type Output = ComplexValue;
    fn mul(self, rhs: Self) -> Self {
        ComplexValue::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Div for ComplexValue {
    type Output = ComplexValue;
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

impl Neg for ComplexValue {
    type Output = ComplexValue;
    fn neg(self) -> Self {
        ComplexValue::new(-self.re, -self.im)
    }
}

/// Format with 12 significant digits, trimming trailing zeros.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let s = format!("{:.11e}", x);
    // Normalize "d.dddddddddddep" into plain decimal when reasonable.
    let val: f64 = s.parse().unwrap_or(x);
    let mag = val.abs();
    let out = if (1e-4..1e12).contains(&mag) {
        let digits = 11 - mag.log10().floor() as i32;
        let digits = digits.clamp(0, 17) as usize;
        let t = format!("{:.*}", digits, val);
        trim_zeros(&t)
    } else {
        s
    };
    out
}

fn trim_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let t = s.trim_end_matches('0');
    t.trim_end_matches('.').to_string()
}

impl fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0.0 {
            write!(f, "{}", format_sig12(self.re))
        } else if self.re == 0.0 {
            write!(f, "{}i", format_sig12(self.im))
        } else if self.im < 0.0 {
            write!(f, "{}-{}i", format_sig12(self.re), format_sig12(-self.im))
        } else {
            write!(f, "{}+{}i", format_sig12(self.re), format_sig12(self.im))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["1", "-2.5", "i", "-i", "1+2i", "3-0.5i", "0.25+1i"] {
            let c = ComplexValue::parse(s).unwrap();
            let back = ComplexValue::parse(&format!("{}", c)).unwrap();
            assert!(c.approx_eq(&back, 1e-9), "{} -> {} -> {}", s, c, back);
        }
    }

    #[test]
    fn principal_sqrt() {
        let c = ComplexValue::new(-1.0, 0.0).sqrt();
        assert!(c.approx_eq(&ComplexValue::new(0.0, 1.0), 1e-12));
        let d = ComplexValue::new(0.0, 2.0).sqrt();
        assert!((d * d).approx_eq(&ComplexValue::new(0.0, 2.0), 1e-12));
    }

    #[test]
    fn twelve_digit_format() {
        assert_eq!(format_sig12(2.0), "2");
        assert_eq!(format_sig12(0.5), "0.5");
        assert_eq!(format_sig12(1.0 / 3.0), "0.333333333333");
    }
}
