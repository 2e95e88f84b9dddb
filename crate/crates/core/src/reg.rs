//! The subalgebras `A^b`, `A^{ab}` and the regularization maps onto them.
//!
//! Every word factors uniquely as `w_b x_b^n` with `w_b ∈ A^b`, and as
//! `x_a^m w_ab x_b^n` with `w_ab ∈ A^{ab}` (maximal `m`, `n`).
//! `reg^b` and `reg^{ab}` take the constant term of the polynomial
//! decompositions `A = A^b[x_b] = A^{ab}[x_a, x_b]` under the shuffle
//! product; both are computed here from their closed alternating sums.

use rug::Rational;

use crate::algebra::{shuffle, shuffle_poly, Letter, Point, Word, WordPoly};

/// `w = 1` or `w` does not end with `x_b`.
pub fn in_ab(w: &Word, b: &Point) -> bool {
    !w.ends_with_point(b)
}

/// `w = 1`, or `w` neither starts with `x_a` nor ends with `x_b`.
pub fn in_aab(w: &Word, a: &Point, b: &Point) -> bool {
    w.is_empty() || (!w.starts_with_point(a) && !w.ends_with_point(b))
}

pub fn poly_in_ab(p: &WordPoly, b: &Point) -> bool {
    p.words().all(|w| in_ab(w, b))
}

pub fn poly_in_aab(p: &WordPoly, a: &Point, b: &Point) -> bool {
    p.words().all(|w| in_aab(w, a, b))
}

fn sign(k: usize) -> Rational {
    Rational::from(if k % 2 == 0 { 1 } else { -1 })
}

/// `reg^b(w_b x_b^n) = Σ_j (-1)^j (w_b x_b^{n-j}) ⧢ x_b^j`.
pub fn reg_b_word(w: &Word, b: &Point) -> WordPoly {
    let n = w.trailing_count(b);
    if n == 0 {
        return WordPoly::from_word(w.clone());
    }
    let xb = Letter::new(b.clone());
    let core_len = w.weight() - n;
    let mut out = WordPoly::zero();
    for j in 0..=n {
        let head = w.slice(0, core_len + n - j);
        out.add_scaled(&shuffle(&head, &Word::power(&xb, j)), &sign(j));
    }
    out
}

pub fn reg_b(p: &WordPoly, b: &Point) -> WordPoly {
    p.map_words(|w| reg_b_word(w, b))
}

/// Maximal split `w = x_a^m core x_b^n`.
///
/// Leading `x_a`s are stripped first, so a word made only of `x_a`s has
/// `n = 0`.
pub fn split_ab(w: &Word, a: &Point, b: &Point) -> (usize, Word, usize) {
    let m = w.leading_count(a);
    let rest = w.slice(m, w.weight());
    let n = rest.trailing_count(b);
    (m, rest.slice(0, rest.weight() - n), n)
}

/// `reg^{ab}(x_a^m w x_b^n) = Σ_i Σ_j (-1)^{i+j} x_a^i ⧢ (x_a^{m-i} w x_b^{n-j}) ⧢ x_b^j`.
pub fn reg_ab_word(w: &Word, a: &Point, b: &Point) -> WordPoly {
    let (m, core, n) = split_ab(w, a, b);
    if m == 0 && n == 0 {
        return WordPoly::from_word(w.clone());
    }
    let xa = Letter::new(a.clone());
    let xb = Letter::new(b.clone());
    let mut out = WordPoly::zero();
    for i in 0..=m {
        for j in 0..=n {
            let middle = Word::power(&xa, m - i)
                .concat(&core)
                .concat(&Word::power(&xb, n - j));
            let left = shuffle(&Word::power(&xa, i), &middle);
            let term = shuffle_poly(&left, &WordPoly::from_word(Word::power(&xb, j)));
            out.add_scaled(&term, &sign(i + j));
        }
    }
    out
}

pub fn reg_ab(p: &WordPoly, a: &Point, b: &Point) -> WordPoly {
    p.map_words(|w| reg_ab_word(w, a, b))
}

/// Left regularization at `a`: `x_a^m v ↦ Σ_i (-1)^i x_a^i ⧢ x_a^{m-i} v`.
pub fn reg_left_word(w: &Word, a: &Point) -> WordPoly {
    let m = w.leading_count(a);
    if m == 0 {
        return WordPoly::from_word(w.clone());
    }
    let xa = Letter::new(a.clone());
    let mut out = WordPoly::zero();
    for i in 0..=m {
        out.add_scaled(&shuffle(&Word::power(&xa, i), &w.slice(i, w.weight())), &sign(i));
    }
    out
}

/// `reg^{ab}` computed as `reg^b` followed by the left regularization at
/// `a`. Must agree with [`reg_ab`].
pub fn reg_ab_two_stage(p: &WordPoly, a: &Point, b: &Point) -> WordPoly {
    reg_b(p, b).map_words(|w| reg_left_word(w, a))
}

/// Which decomposition [`reconstruct`] expands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// `w = Σ_j reg^b(w_b x_b^{n-j}) ⧢ x_b^j`
    B,
    /// `w = Σ_i Σ_j x_a^i ⧢ reg^{ab}(x_a^{m-i} w_ab x_b^{n-j}) ⧢ x_b^j`
    AB,
}

/// Rebuilds `w` from its regularized pieces; the result equals `w`.
pub fn reconstruct(w: &Word, a: &Point, b: &Point, variant: Decomposition) -> WordPoly {
    let xa = Letter::new(a.clone());
    let xb = Letter::new(b.clone());
    let mut out = WordPoly::zero();
    match variant {
        Decomposition::B => {
            let n = w.trailing_count(b);
            let core_len = w.weight() - n;
            for j in 0..=n {
                let head = w.slice(0, core_len + n - j);
                let tail = WordPoly::from_word(Word::power(&xb, j));
                out = &out + &shuffle_poly(&reg_b_word(&head, b), &tail);
            }
        }
        Decomposition::AB => {
            let (m, core, n) = split_ab(w, a, b);
            for i in 0..=m {
                for j in 0..=n {
                    let inner = Word::power(&xa, m - i)
                        .concat(&core)
                        .concat(&Word::power(&xb, n - j));
                    let left = shuffle_poly(
                        &WordPoly::from_word(Word::power(&xa, i)),
                        &reg_ab_word(&inner, a, b),
                    );
                    out = &out + &shuffle_poly(&left, &WordPoly::from_word(Word::power(&xb, j)));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: i64) -> Point {
        Point::from_int(v)
    }

    fn w(pts: &[i64]) -> Word {
        Word::from_points(pts.iter().map(|&v| p(v)))
    }

    fn wp(pts: &[i64]) -> WordPoly {
        WordPoly::from_word(w(pts))
    }

    // a = 1, b = 0, c = -1 throughout.

    #[test]
    fn membership() {
        assert!(in_ab(&Word::empty(), &p(0)));
        assert!(!in_ab(&w(&[-1, 0]), &p(0)));
        assert!(in_ab(&w(&[0, -1]), &p(0)));
        assert!(in_aab(&w(&[0, 1]), &p(1), &p(0)));
        assert!(!in_aab(&w(&[1]), &p(1), &p(0)));
        assert!(in_aab(&w(&[-1]), &p(1), &p(0)));
        assert!(in_aab(&Word::empty(), &p(1), &p(0)));
    }

    #[test]
    fn reg_b_cases() {
        assert_eq!(reg_b(&wp(&[-1]), &p(0)), wp(&[-1]));
        assert!(reg_b(&wp(&[0]), &p(0)).is_zero());
        assert_eq!(reg_b(&wp(&[-1, 0]), &p(0)), -&wp(&[0, -1]));
    }

    #[test]
    fn reg_ab_cases() {
        assert!(reg_ab(&wp(&[1]), &p(1), &p(0)).is_zero());
        assert!(reg_ab(&wp(&[0]), &p(1), &p(0)).is_zero());
        assert_eq!(reg_ab(&wp(&[0, -1, 1]), &p(1), &p(0)), wp(&[0, -1, 1]));
        assert_eq!(reg_ab(&wp(&[1, 0]), &p(1), &p(0)), -&wp(&[0, 1]));
    }

    #[test]
    fn split_is_maximal() {
        let (m, core, n) = split_ab(&w(&[1, 1, -1, 1, 0, 0]), &p(1), &p(0));
        assert_eq!((m, core, n), (2, w(&[-1, 1]), 2));
        let (m, core, n) = split_ab(&w(&[1, 1]), &p(1), &p(0));
        assert_eq!((m, core, n), (2, Word::empty(), 0));
    }

    #[test]
    fn reconstruct_cases() {
        for variant in [Decomposition::B, Decomposition::AB] {
            assert_eq!(reconstruct(&w(&[0]), &p(1), &p(0), variant), wp(&[0]));
            assert_eq!(reconstruct(&w(&[-1, 0]), &p(1), &p(0), variant), wp(&[-1, 0]));
            assert_eq!(
                reconstruct(&w(&[1, 0, -1, 0, 0]), &p(1), &p(0), variant),
                wp(&[1, 0, -1, 0, 0])
            );
        }
    }

    #[test]
    fn two_stage_agrees() {
        for word in [w(&[1, 0]), w(&[1, 1, -1, 0, 0]), w(&[1, 0, 1, 0]), w(&[0, 0, 1, 1])] {
            let poly = WordPoly::from_word(word);
            assert_eq!(reg_ab(&poly, &p(1), &p(0)), reg_ab_two_stage(&poly, &p(1), &p(0)));
        }
    }
}
