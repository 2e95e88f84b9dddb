use std::cmp::Ordering;
use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use rug::Rational;

use super::word::{Letter, Word};

/// A finite rational combination of words, kept in canonical form: no
/// stored coefficient is zero, so structural equality is equality in the
/// algebra.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct WordPoly {
    terms: BTreeMap<Word, Rational>,
}

impl WordPoly {
    pub fn zero() -> Self {
        WordPoly::default()
    }

    pub fn one() -> Self {
        WordPoly::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        WordPoly::monomial(w, Rational::from(1))
    }

    pub fn monomial(w: Word, coef: Rational) -> Self {
        let mut p = WordPoly::zero();
        p.add_term(w, coef);
        p
    }

    pub fn from_letter(l: Letter) -> Self {
        WordPoly::from_word(Word::new(vec![l]))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of non-zero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Word, Rational> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms
            .values()
            .fold(Rational::new(), |acc, c| acc + c)
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.terms.keys().map(Word::weight).max()
    }

    /// If this polynomial is `c * w` for a single word, returns it.
    pub fn as_monomial(&self) -> Option<(&Word, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, w: Word, coef: Rational) {
        if coef.cmp0() == Ordering::Equal {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().cmp0() == Ordering::Equal {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &WordPoly, scale: &Rational) {
        for (w, c) in other.terms() {
            self.add_term(w.clone(), Rational::from(c * scale));
        }
    }

    pub fn scale(&self, s: &Rational) -> WordPoly {
        let mut out = WordPoly::zero();
        out.add_scaled(self, s);
        out
    }

    /// Linear extension of a word map.
    pub fn map_words<F>(&self, mut f: F) -> WordPoly
    where
        F: FnMut(&Word) -> WordPoly,
    {
        let mut out = WordPoly::zero();
        for (w, c) in self.terms() {
            out.add_scaled(&f(w), c);
        }
        out
    }

    /// Fallible linear extension of a word map.
    pub fn try_map_words<F, E>(&self, mut f: F) -> Result<WordPoly, E>
    where
        F: FnMut(&Word) -> Result<WordPoly, E>,
    {
        let mut out = WordPoly::zero();
        for (w, c) in self.terms() {
            out.add_scaled(&f(w)?, c);
        }
        Ok(out)
    }

    /// Ordinary (concatenation) product.
    pub fn concat(&self, other: &WordPoly) -> WordPoly {
        let mut out = WordPoly::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                out.add_term(u.concat(v), Rational::from(a * b));
            }
        }
        out
    }

    /// `l * self`, concatenating a letter on the left.
    pub fn prepend_letter(&self, l: &Letter) -> WordPoly {
        let head = Word::new(vec![l.clone()]);
        let mut out = WordPoly::zero();
        for (w, c) in self.terms() {
            out.add_term(head.concat(w), c.clone());
        }
        out
    }

    /// Keeps only the terms of weight at most `n`.
    pub fn truncate(&self, n: usize) -> WordPoly {
        WordPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.weight() <= n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }
}

impl From<Word> for WordPoly {
    fn from(w: Word) -> Self {
        WordPoly::from_word(w)
    }
}

impl Add for &WordPoly {
    type Output = WordPoly;
    fn add(self, rhs: &WordPoly) -> WordPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &WordPoly {
    type Output = WordPoly;
    fn sub(self, rhs: &WordPoly) -> WordPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &WordPoly {
    type Output = WordPoly;
    fn neg(self) -> WordPoly {
        self.scale(&Rational::from(-1))
    }
}

impl FromIterator<(Word, Rational)> for WordPoly {
    fn from_iter<T: IntoIterator<Item = (Word, Rational)>>(iter: T) -> Self {
        let mut p = WordPoly::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }
}

fn fmt_abs_rational(r: &Rational) -> String {
    let a = Rational::from(r.abs_ref());
    if *a.denom() == 1 {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Renders as e.g. `2 x(0)x(0) - x(0)x(1) + 1/2`.
///
/// The output re-parses to an equal polynomial with
/// [`crate::literal::parse_poly`].
impl fmt::Display for WordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.cmp0() == Ordering::Less;
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs_one = *c.numer().as_abs() == 1 && *c.denom() == 1;
            if w.is_empty() {
                f.write_str(&fmt_abs_rational(c))?;
            } else if abs_one {
                write!(f, "{w}")?;
            } else {
                write!(f, "{} {w}", fmt_abs_rational(c))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
