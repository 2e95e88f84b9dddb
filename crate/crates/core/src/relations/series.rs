use std::collections::BTreeMap;

use crate::algebra::{words_up_to, Letter, Point, Word};
use crate::numeric::BigComplex;
use crate::symmetry::LinearForm;

/// A non-commutative power series in the letters `X_c`, truncated above
/// `max_weight`.
#[derive(Clone, Debug, PartialEq)]
pub struct NcSeries {
    alphabet: Vec<Point>,
    max_weight: usize,
    prec: u32,
    coeffs: BTreeMap<Word, BigComplex>,
}

impl NcSeries {
    pub fn zero(alphabet: &[Point], max_weight: usize, prec: u32) -> Self {
        let mut alphabet = alphabet.to_vec();
        alphabet.sort();
        alphabet.dedup();
        NcSeries {
            alphabet,
            max_weight,
            prec,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: &[Point], max_weight: usize, prec: u32) -> Self {
        let mut s = NcSeries::zero(alphabet, max_weight, prec);
        s.set(Word::empty(), BigComplex::one(prec));
        s
    }

    /// `exp(t X_c) = Σ_n t^n/n! X_c^n`.
    pub fn letter_exp(alphabet: &[Point], max_weight: usize, c: &Point, t: &BigComplex) -> Self {
        let prec = t.prec();
        let mut s = NcSeries::zero(alphabet, max_weight, prec);
        let letter = Letter::new(c.clone());
        let mut term = BigComplex::one(prec);
        for n in 0..=max_weight {
            if n > 0 {
                term = (&term * t).div_u64(n as u64);
            }
            s.set(Word::power(&letter, n), term.clone());
        }
        s
    }

    pub fn alphabet(&self) -> &[Point] {
        &self.alphabet
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn set(&mut self, w: Word, c: BigComplex) {
        if w.weight() <= self.max_weight {
            self.coeffs.insert(w, c);
        }
    }

    fn add_to(&mut self, w: Word, c: &BigComplex) {
        if w.weight() > self.max_weight || c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&w) {
            Some(slot) => *slot += c,
            None => {
                self.coeffs.insert(w, c.clone());
            }
        }
    }

    pub fn coefficient(&self, w: &Word) -> BigComplex {
        self.coeffs
            .get(w)
            .cloned()
            .unwrap_or_else(|| BigComplex::zero(self.prec))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigComplex)> {
        self.coeffs.iter()
    }

    /// Truncated concatenation product.
    pub fn mul(&self, other: &NcSeries) -> NcSeries {
        let n = self.max_weight.min(other.max_weight);
        let mut out = NcSeries::zero(&self.alphabet, n, self.prec);
        for (u, a) in &self.coeffs {
            for (v, b) in &other.coeffs {
                if u.weight() + v.weight() <= n {
                    out.add_to(u.concat(v), &(a * b));
                }
            }
        }
        out
    }

    /// Grade-by-grade inverse: `inv[w] = -c_0^{-1} Σ_{uv = w, v ≠ 1} inv[u] s[v]`.
    /// `None` if the constant term vanishes.
    pub fn inverse(&self) -> Option<NcSeries> {
        let c0 = self.coefficient(&Word::empty());
        if c0.is_zero() {
            return None;
        }
        let c0_inv = c0.recip();
        let mut inv = NcSeries::zero(&self.alphabet, self.max_weight, self.prec);
        inv.set(Word::empty(), c0_inv.clone());
        for w in words_up_to(&self.alphabet, self.max_weight).into_iter().skip(1) {
            let mut acc = BigComplex::zero(self.prec);
            for j in 0..w.weight() {
                let u = inv.coefficient(&w.slice(0, j));
                let v = self.coefficient(&w.slice(j, w.weight()));
                if !u.is_zero() && !v.is_zero() {
                    acc += &(&u * &v);
                }
            }
            let c = -&(&acc * &c0_inv);
            if !c.is_zero() {
                inv.set(w, c);
            }
        }
        Some(inv)
    }

    /// Replaces every `X_c` by the linear form `images[c]`.
    pub fn substitute(&self, images: &BTreeMap<Point, LinearForm>) -> NcSeries {
        let mut out = NcSeries::zero(&self.alphabet, self.max_weight, self.prec);
        for (w, c) in &self.coeffs {
            let mut expansion: Vec<(Vec<Letter>, i64)> = vec![(Vec::new(), 1)];
            for l in w.letters() {
                let form = images
                    .get(l.point())
                    .cloned()
                    .unwrap_or_else(|| LinearForm::single(l.point().clone()));
                let mut next = Vec::with_capacity(expansion.len() * form.0.len());
                for (prefix, k) in &expansion {
                    for (p, n) in &form.0 {
                        let mut word = prefix.clone();
                        word.push(Letter::new(p.clone()));
                        next.push((word, k * n));
                    }
                }
                expansion = next;
            }
            for (letters, k) in expansion {
                let scale = BigComplex::from_f64(self.prec, k as f64, 0.0);
                out.add_to(Word::new(letters), &(c * &scale));
            }
        }
        out
    }
}
