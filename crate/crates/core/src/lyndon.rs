//! Total orders on the alphabet and Lyndon words.

use std::cmp::Ordering;

use crate::algebra::{Point, Word};
use crate::error::{Error, Result};

/// A total order on the points of Σ, least first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterOrder {
    points: Vec<Point>,
}

impl LetterOrder {
    /// Uses the given sequence as the order, least first.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let mut sorted = points.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != points.len() {
            return Err(Error::InvalidConfig("letter order repeats a point".into()));
        }
        Ok(LetterOrder { points })
    }

    /// `b` least, `a` greatest, interior points ordered by `(re, im)`.
    pub fn with_extremes(points: &[Point], a: &Point, b: &Point) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidConfig("a and b must differ".into()));
        }
        if !points.contains(a) || !points.contains(b) {
            return Err(Error::InvalidConfig("a and b must belong to the alphabet".into()));
        }
        let mut interior: Vec<Point> = points
            .iter()
            .filter(|p| *p != a && *p != b)
            .cloned()
            .collect();
        interior.sort();
        let mut ordered = Vec::with_capacity(points.len());
        ordered.push(b.clone());
        ordered.extend(interior);
        ordered.push(a.clone());
        LetterOrder::new(ordered)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn rank(&self, p: &Point) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    fn ranks(&self, w: &Word) -> Result<Vec<usize>> {
        w.letters()
            .iter()
            .map(|l| {
                self.rank(l.point())
                    .ok_or_else(|| Error::UnknownLetter(l.point().to_string()))
            })
            .collect()
    }

    /// Lexicographic comparison; a proper prefix is smaller.
    pub fn compare(&self, u: &Word, v: &Word) -> Result<Ordering> {
        Ok(self.ranks(u)?.cmp(&self.ranks(v)?))
    }
}

/// True iff `w` is strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &Word, ord: &LetterOrder) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let r = ord.ranks(w)?;
    Ok((1..r.len()).all(|k| r[..] < r[k..]))
}

/// Chen–Fox–Lyndon factorization by Duval's algorithm: the unique
/// non-increasing sequence of Lyndon words whose product is `w`.
pub fn lyndon_factorization(w: &Word, ord: &LetterOrder) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let s = ord.ranks(w)?;
    let n = s.len();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            factors.push(w.slice(i, i + j - k));
            i += j - k;
        }
    }
    Ok(factors)
}
