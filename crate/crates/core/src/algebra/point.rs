use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::Rational;

/// An exact Gaussian rational `re + im*i`.
///
/// Points are ordered lexicographically by `(re, im)`; this is the default
/// order on interior letters and the order used for rendering.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Point {
    re: Rational,
    im: Rational,
}

impl Point {
    pub fn new(re: Rational, im: Rational) -> Self {
        Point { re, im }
    }

    pub fn real(re: impl Into<Rational>) -> Self {
        Point {
            re: re.into(),
            im: Rational::new(),
        }
    }

    pub fn from_int(re: i64) -> Self {
        Point::real(re)
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        Point::new(Rational::from(re), Rational::from(im))
    }

    pub fn i() -> Self {
        Point::gaussian(0, 1)
    }

    pub fn zero() -> Self {
        Point::default()
    }

    pub fn one() -> Self {
        Point::from_int(1)
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.cmp0() == Ordering::Equal && self.im.cmp0() == Ordering::Equal
    }

    pub fn is_real(&self) -> bool {
        self.im.cmp0() == Ordering::Equal
    }

    /// `re^2 + im^2`, exact.
    pub fn norm_sqr(&self) -> Rational {
        Rational::from(self.re.square_ref()) + Rational::from(self.im.square_ref())
    }

    pub fn conj(&self) -> Point {
        Point::new(self.re.clone(), -self.im.clone())
    }

    /// Exact quotient; `None` when dividing by zero.
    pub fn checked_div(&self, rhs: &Point) -> Option<Point> {
        if rhs.is_zero() {
            return None;
        }
        let n = rhs.norm_sqr();
        let num = self * &rhs.conj();
        Some(Point::new(num.re / &n, num.im / &n))
    }

    /// Squared distance `|self - other|^2`.
    pub fn dist_sqr(&self, other: &Point) -> Rational {
        (self - other).norm_sqr()
    }

    /// Integer power (negative exponents invert); `None` for `0^-n`.
    pub fn checked_pow(&self, exp: i32) -> Option<Point> {
        let mut base = if exp < 0 {
            Point::one().checked_div(self)?
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Point::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Some(acc)
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(
            Rational::from(&self.re + &rhs.re),
            Rational::from(&self.im + &rhs.im),
        )
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(
            Rational::from(&self.re - &rhs.re),
            Rational::from(&self.im - &rhs.im),
        )
    }
}

impl Mul for &Point {
    type Output = Point;
    fn mul(self, rhs: &Point) -> Point {
        let re = Rational::from(&self.re * &rhs.re) - Rational::from(&self.im * &rhs.im);
        let im = Rational::from(&self.re * &rhs.im) + Rational::from(&self.im * &rhs.re);
        Point::new(re, im)
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.re.clone(), -self.im.clone())
    }
}

impl From<i64> for Point {
    fn from(v: i64) -> Self {
        Point::from_int(v)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    if *r.denom() == 1 {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Canonical literal: `RAT`, `RATi`, or `RAT+RATi` / `RAT-RATi`.
impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re_zero = self.re.cmp0() == Ordering::Equal;
        let im_zero = self.im.cmp0() == Ordering::Equal;
        if im_zero {
            return write_rational(f, &self.re);
        }
        if !re_zero {
            write_rational(f, &self.re)?;
            if self.im.cmp0() == Ordering::Greater {
                f.write_str("+")?;
            }
        }
        write_rational(f, &self.im)?;
        f.write_str("i")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Point({self})")
    }
}
