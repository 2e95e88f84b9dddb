use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use super::point::Point;

/// The letter `x_c` attached to a point `c`.
///
/// Letters are shared handles so that words can be cloned cheaply.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(Arc<Point>);

impl Letter {
    pub fn new(point: Point) -> Self {
        Letter(Arc::new(point))
    }

    pub fn point(&self) -> &Point {
        &self.0
    }
}

impl Deref for Letter {
    type Target = Point;
    fn deref(&self) -> &Point {
        &self.0
    }
}

impl From<Point> for Letter {
    fn from(p: Point) -> Self {
        Letter::new(p)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x({})", self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite sequence of letters; the empty word is the unit `1`.
///
/// Words are ordered graded-lexicographically: by weight first, then
/// letter by letter using the point order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn from_points<I: IntoIterator<Item = Point>>(points: I) -> Self {
        Word(points.into_iter().map(Letter::new).collect())
    }

    pub fn letter(point: Point) -> Self {
        Word(vec![Letter::new(point)])
    }

    /// `l^n` as a concatenation power.
    pub fn power(letter: &Letter, n: usize) -> Self {
        Word(vec![letter.clone(); n])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn weight(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<&Letter> {
        self.0.first()
    }

    pub fn last(&self) -> Option<&Letter> {
        self.0.last()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().cloned().collect())
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// All `|w|+1` splits `w = w1 w2`, ordered by the length of `w1`.
    pub fn deconcatenations(&self) -> Vec<(Word, Word)> {
        (0..=self.0.len())
            .map(|k| (self.slice(0, k), self.slice(k, self.0.len())))
            .collect()
    }

    /// Number of leading letters equal to `p`.
    pub fn leading_count(&self, p: &Point) -> usize {
        self.0.iter().take_while(|l| l.point() == p).count()
    }

    /// Number of trailing letters equal to `p`.
    pub fn trailing_count(&self, p: &Point) -> usize {
        self.0.iter().rev().take_while(|l| l.point() == p).count()
    }

    pub fn starts_with_point(&self, p: &Point) -> bool {
        self.first().is_some_and(|l| l.point() == p)
    }

    pub fn ends_with_point(&self, p: &Point) -> bool {
        self.last().is_some_and(|l| l.point() == p)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All words of weight exactly `n` over `alphabet`, in graded-lex order
/// (the alphabet is sorted first).
pub fn words_of_weight(alphabet: &[Point], n: usize) -> Vec<Word> {
    let mut letters: Vec<Letter> = alphabet.iter().cloned().map(Letter::new).collect();
    letters.sort();
    letters.dedup();
    let mut out = vec![Word::empty()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * letters.len());
        for w in &out {
            for l in &letters {
                let mut v = w.0.clone();
                v.push(l.clone());
                next.push(Word(v));
            }
        }
        out = next;
    }
    out
}

/// All words of weight `0..=max_weight`, graded-lex order.
pub fn words_up_to(alphabet: &[Point], max_weight: usize) -> Vec<Word> {
    (0..=max_weight)
        .flat_map(|n| words_of_weight(alphabet, n))
        .collect()
}
