//! Shuffle product, concatenation, deconcatenation and the antipode.

use rug::Rational;

use super::poly::WordPoly;
use super::word::{Letter, Word};

/// Shuffle product of two words.
///
/// Uses the recursion `l1 w1 ⧢ l2 w2 = l1 (w1 ⧢ l2 w2) + l2 (l1 w1 ⧢ w2)`
/// with `w ⧢ 1 = 1 ⧢ w = w`. Every recursive call works on a pair of
/// suffixes, so the table below is indexed by suffix offsets and each
/// pair is expanded once.
pub fn shuffle(u: &Word, v: &Word) -> WordPoly {
    let (a, b) = (u.letters(), v.letters());
    let (n, m) = (a.len(), b.len());
    if n == 0 {
        return WordPoly::from_word(v.clone());
    }
    if m == 0 {
        return WordPoly::from_word(u.clone());
    }
    // table[i][j] = a[i..] ⧢ b[j..]
    let mut table: Vec<Vec<WordPoly>> = vec![vec![WordPoly::zero(); m + 1]; n + 1];
    for (i, row) in table.iter_mut().enumerate() {
        row[m] = WordPoly::from_word(Word::new(a[i..].to_vec()));
    }
    for j in 0..=m {
        table[n][j] = WordPoly::from_word(Word::new(b[j..].to_vec()));
    }
    for i in (0..n).rev() {
        for j in (0..m).rev() {
            let left = table[i + 1][j].prepend_letter(&a[i]);
            let right = table[i][j + 1].prepend_letter(&b[j]);
            table[i][j] = &left + &right;
        }
    }
    std::mem::take(&mut table[0][0])
}

/// Bilinear extension of [`shuffle`].
pub fn shuffle_poly(p: &WordPoly, q: &WordPoly) -> WordPoly {
    let mut out = WordPoly::zero();
    for (u, a) in p.terms() {
        for (v, b) in q.terms() {
            out.add_scaled(&shuffle(u, v), &Rational::from(a * b));
        }
    }
    out
}

/// `x_l ⧢ ... ⧢ x_l` (`n` factors), which equals `n! x_l^n`.
pub fn shuffle_power(l: &Letter, n: usize) -> WordPoly {
    let mut acc = WordPoly::one();
    let x = WordPoly::from_letter(l.clone());
    for _ in 0..n {
        acc = shuffle_poly(&acc, &x);
    }
    acc
}

pub fn concat(u: &Word, v: &Word) -> Word {
    u.concat(v)
}

pub fn deconcatenations(w: &Word) -> Vec<(Word, Word)> {
    w.deconcatenations()
}

/// Antipode on a single word: `l1...ln ↦ (-1)^n ln...l1`.
pub fn antipode_word(w: &Word) -> WordPoly {
    let sign = if w.weight() % 2 == 0 { 1 } else { -1 };
    WordPoly::monomial(w.reversed(), Rational::from(sign))
}

/// The anti-involution `S: x_c ↦ -x_c`, extended linearly.
pub fn antipode(p: &WordPoly) -> WordPoly {
    p.map_words(antipode_word)
}
