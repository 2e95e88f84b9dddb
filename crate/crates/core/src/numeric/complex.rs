use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Constant;
use rug::Float;

use crate::algebra::Point;

/// A complex number with MPFR real and imaginary parts at a fixed precision.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    re: Float,
    im: Float,
}

impl BigComplex {
    pub fn zero(prec: u32) -> Self {
        BigComplex {
            re: Float::new(prec),
            im: Float::new(prec),
        }
    }

    pub fn one(prec: u32) -> Self {
        BigComplex::from_f64(prec, 1.0, 0.0)
    }

    pub fn i(prec: u32) -> Self {
        BigComplex::from_f64(prec, 0.0, 1.0)
    }

    pub fn from_parts(re: Float, im: Float) -> Self {
        BigComplex { re, im }
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        BigComplex {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    pub fn from_real(re: Float) -> Self {
        let im = Float::new(re.prec());
        BigComplex { re, im }
    }

    pub fn from_point(prec: u32, p: &Point) -> Self {
        BigComplex {
            re: Float::with_val(prec, p.re()),
            im: Float::with_val(prec, p.im()),
        }
    }

    pub fn pi(prec: u32) -> Float {
        Float::with_val(prec, Constant::Pi)
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn re(&self) -> &Float {
        &self.re
    }

    pub fn im(&self) -> &Float {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Self {
        BigComplex {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> Float {
        let mut n = self.re.clone().square();
        n += self.im.clone().square();
        n
    }

    pub fn abs(&self) -> Float {
        self.re.clone().hypot(&self.im)
    }

    pub fn abs_f64(&self) -> f64 {
        self.abs().to_f64()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// `|self - other|` as an `f64`.
    pub fn dist(&self, other: &BigComplex) -> f64 {
        (self - other).abs_f64()
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        BigComplex {
            re: self.re.clone() / &n,
            im: -(self.im.clone() / &n),
        }
    }

    /// Principal logarithm, `arg ∈ (-π, π]`.
    pub fn ln(&self) -> Self {
        let arg = self.im.clone().atan2(&self.re);
        BigComplex {
            re: self.abs().ln(),
            im: arg,
        }
    }

    pub fn exp(&self) -> Self {
        let r = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(self.prec()));
        BigComplex {
            re: c * &r,
            im: s * &r,
        }
    }

    pub fn powu(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = BigComplex::one(self.prec());
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    pub fn scale(&self, f: &Float) -> Self {
        BigComplex {
            re: self.re.clone() * f,
            im: self.im.clone() * f,
        }
    }

    pub fn div_u64(&self, d: u64) -> Self {
        BigComplex {
            re: self.re.clone() / d,
            im: self.im.clone() / d,
        }
    }

    /// Scientific notation with `digits` significant digits, e.g.
    /// `1.644934066848e0` or `6.9e-1+1.2e0i`.
    pub fn to_sci(&self, digits: usize) -> String {
        let re = sci(&self.re, digits);
        if self.im.is_zero() {
            return re;
        }
        let im = sci(&self.im, digits);
        if self.im.is_sign_negative() {
            format!("{re}{im}i")
        } else {
            format!("{re}+{im}i")
        }
    }
}

fn sci(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    // `0.d₁d₂… × 10^exp`
    let (neg, ds, exp) = x.to_sign_string_exp(10, Some(digits.max(1)));
    let exp = exp.unwrap_or(0) - 1;
    let sign = if neg { "-" } else { "" };
    let (head, tail) = ds.split_at(1);
    if tail.is_empty() {
        format!("{sign}{head}e{exp}")
    } else {
        format!("{sign}{head}.{tail}e{exp}")
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sci(f.precision().unwrap_or(20)))
    }
}

impl Add for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        let mut out = self.clone();
        out *= rhs;
        out
    }
}

impl Div for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigComplex) -> BigComplex {
        self * &rhs.recip()
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl AddAssign<&BigComplex> for BigComplex {
    fn add_assign(&mut self, rhs: &BigComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&BigComplex> for BigComplex {
    fn sub_assign(&mut self, rhs: &BigComplex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&BigComplex> for BigComplex {
    fn mul_assign(&mut self, rhs: &BigComplex) {
        if rhs.im.is_zero() {
            self.re *= &rhs.re;
            self.im *= &rhs.re;
            return;
        }
        let prec = self.prec();
        let mut re = Float::with_val(prec, &self.re * &rhs.re);
        re -= Float::with_val(prec, &self.im * &rhs.im);
        let mut im = Float::with_val(prec, &self.re * &rhs.im);
        im += Float::with_val(prec, &self.im * &rhs.re);
        self.re = re;
        self.im = im;
    }
}

impl MulAssign<&Float> for BigComplex {
    fn mul_assign(&mut self, rhs: &Float) {
        self.re *= rhs;
        self.im *= rhs;
    }
}
