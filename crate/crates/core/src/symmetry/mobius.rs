use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::Point;
use crate::error::{Error, Result};

use super::config::SigmaConfig;

/// A point of Σ ∪ {∞}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedPoint {
    Finite(Point),
    Infinity,
}

impl ExtendedPoint {
    pub fn finite(&self) -> Option<&Point> {
        match self {
            ExtendedPoint::Finite(p) => Some(p),
            ExtendedPoint::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ExtendedPoint::Infinity)
    }
}

impl From<Point> for ExtendedPoint {
    fn from(p: Point) -> Self {
        ExtendedPoint::Finite(p)
    }
}

impl fmt::Display for ExtendedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedPoint::Finite(p) => write!(f, "{p}"),
            ExtendedPoint::Infinity => f.write_str("inf"),
        }
    }
}

/// `z ↦ (p z + q) / (r z + s)` with Gaussian-rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusMap {
    p: Point,
    q: Point,
    r: Point,
    s: Point,
}

impl MobiusMap {
    pub fn new(p: Point, q: Point, r: Point, s: Point) -> Result<Self> {
        let det = &(&p * &s) - &(&q * &r);
        if det.is_zero() {
            return Err(Error::DegenerateMap);
        }
        Ok(MobiusMap { p, q, r, s })
    }

    pub fn identity() -> Self {
        MobiusMap::new(Point::one(), Point::zero(), Point::zero(), Point::one()).expect("det 1")
    }

    /// `z ↦ 1 - z`
    pub fn reflection_one() -> Self {
        MobiusMap::new(Point::from_int(-1), Point::one(), Point::zero(), Point::one()).expect("det -1")
    }

    /// `z ↦ (1 - z) / (1 + z)`
    pub fn cayley() -> Self {
        MobiusMap::new(Point::from_int(-1), Point::one(), Point::one(), Point::one()).expect("det -2")
    }

    pub fn entries(&self) -> [&Point; 4] {
        [&self.p, &self.q, &self.r, &self.s]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        let mul = |x: &Point, y: &Point, u: &Point, v: &Point| &(x * y) + &(u * v);
        MobiusMap {
            p: mul(&self.p, &other.p, &self.q, &other.r),
            q: mul(&self.p, &other.q, &self.q, &other.s),
            r: mul(&self.r, &other.p, &self.s, &other.r),
            s: mul(&self.r, &other.q, &self.s, &other.s),
        }
    }

    /// `m ∘ m` is a scalar matrix, i.e. the identity of PSL(2).
    pub fn is_involution(&self) -> bool {
        let sq = self.compose(self);
        sq.q.is_zero() && sq.r.is_zero() && sq.p == sq.s
    }

    pub fn apply(&self, z: &ExtendedPoint) -> ExtendedPoint {
        match z {
            ExtendedPoint::Infinity => match self.p.checked_div(&self.r) {
                Some(v) => ExtendedPoint::Finite(v),
                None => ExtendedPoint::Infinity,
            },
            ExtendedPoint::Finite(z) => {
                let num = &(&self.p * z) + &self.q;
                let den = &(&self.r * z) + &self.s;
                match num.checked_div(&den) {
                    Some(v) => ExtendedPoint::Finite(v),
                    None => ExtendedPoint::Infinity,
                }
            }
        }
    }

    pub fn apply_point(&self, z: &Point) -> ExtendedPoint {
        self.apply(&ExtendedPoint::Finite(z.clone()))
    }

    pub fn image_of_infinity(&self) -> ExtendedPoint {
        self.apply(&ExtendedPoint::Infinity)
    }
}

impl fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.p, self.q, self.r, self.s)
    }
}

pub fn apply_mobius(m: &MobiusMap, z: &ExtendedPoint) -> ExtendedPoint {
    m.apply(z)
}

/// The permutation of Σ ∪ {∞} induced by `m`.
pub fn induced_permutation(
    m: &MobiusMap,
    cfg: &SigmaConfig,
) -> Result<BTreeMap<ExtendedPoint, ExtendedPoint>> {
    let mut perm = BTreeMap::new();
    let domain = cfg
        .points()
        .iter()
        .cloned()
        .map(ExtendedPoint::Finite)
        .chain(std::iter::once(ExtendedPoint::Infinity));
    for z in domain {
        let image = m.apply(&z);
        let inside = match &image {
            ExtendedPoint::Infinity => true,
            ExtendedPoint::Finite(p) => cfg.contains(p),
        };
        if !inside {
            return Err(Error::NotASymmetry(z.to_string()));
        }
        perm.insert(z, image);
    }
    Ok(perm)
}
