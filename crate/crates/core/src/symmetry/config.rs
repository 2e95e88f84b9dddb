use rug::Rational;

use crate::algebra::{Point, Word};
use crate::error::{Error, Result};
use crate::lyndon::LetterOrder;

/// A finite singular set Σ with two distinguished points `a ≠ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaConfig {
    points: Vec<Point>,
    a: Point,
    b: Point,
}

impl SigmaConfig {
    pub fn new(points: Vec<Point>, a: Point, b: Point) -> Result<Self> {
        let mut sorted = points;
        sorted.sort();
        if sorted.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidConfig("duplicate point in Σ".into()));
        }
        if a == b {
            return Err(Error::InvalidConfig("a and b must differ".into()));
        }
        if !sorted.contains(&a) || !sorted.contains(&b) {
            return Err(Error::InvalidConfig("a and b must belong to Σ".into()));
        }
        Ok(SigmaConfig { points: sorted, a, b })
    }

    /// Σ = {0, 1}, a = 1, b = 0.
    pub fn mzv() -> Self {
        SigmaConfig::new(vec![Point::zero(), Point::one()], Point::one(), Point::zero())
            .expect("valid")
    }

    /// Σ = {0} ∪ μ_m for m ∈ {1, 2, 4}, a = 1, b = 0.
    pub fn roots_of_unity(m: u32) -> Result<Self> {
        let mut pts = vec![Point::zero(), Point::one()];
        match m {
            1 => {}
            2 => pts.push(Point::from_int(-1)),
            4 => pts.extend([Point::from_int(-1), Point::i(), Point::gaussian(0, -1)]),
            other => return Err(Error::UnsupportedModulus(other)),
        }
        SigmaConfig::new(pts, Point::one(), Point::zero())
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn a(&self) -> &Point {
        &self.a
    }

    pub fn b(&self) -> &Point {
        &self.b
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// The same Σ with the roles of `a` and `b` exchanged.
    pub fn swapped(&self) -> SigmaConfig {
        SigmaConfig {
            points: self.points.clone(),
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// `min_{c ∈ Σ, c ≠ p} |c - p|^2`, or `None` if Σ = {p}.
    pub fn min_dist_sqr(&self, p: &Point) -> Option<Rational> {
        self.points
            .iter()
            .filter(|c| *c != p)
            .map(|c| c.dist_sqr(p))
            .min()
    }

    /// `a` is one of the nearest points to `b`.
    pub fn nearest_flag_ab(&self) -> bool {
        let d = self.a.dist_sqr(&self.b);
        self.min_dist_sqr(&self.b).is_some_and(|m| d <= m)
    }

    /// `b` is one of the nearest points to `a`.
    pub fn nearest_flag_ba(&self) -> bool {
        self.swapped().nearest_flag_ab()
    }

    pub fn require_nearest(&self) -> Result<()> {
        if self.nearest_flag_ab() {
            Ok(())
        } else {
            Err(Error::NotNearest)
        }
    }

    pub fn require_mutually_nearest(&self) -> Result<()> {
        if self.nearest_flag_ab() && self.nearest_flag_ba() {
            Ok(())
        } else {
            Err(Error::NotMutuallyNearest)
        }
    }

    pub fn check_letters(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|l| !self.contains(l.point())) {
            Some(l) => Err(Error::UnknownLetter(l.point().to_string())),
            None => Ok(()),
        }
    }

    pub fn letter_order(&self) -> LetterOrder {
        LetterOrder::with_extremes(&self.points, &self.a, &self.b).expect("a, b ∈ Σ")
    }
}
