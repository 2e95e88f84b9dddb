#![allow(dead_code)]

use polylog_core::algebra::{antipode, shuffle, shuffle_poly, words_up_to};
use polylog_core::reg::{in_ab, in_aab, reconstruct, reg_ab, reg_b, Decomposition};
use polylog_core::{Point, Word, WordPoly};
use rug::float::Constant;
use rug::Float;

pub const P: u32 = 128;

pub fn pt(v: i64) -> Point {
    Point::from_int(v)
}

pub fn word(pts: &[i64]) -> Word {
    Word::from_points(pts.iter().map(|&v| pt(v)))
}

pub fn pi() -> Float {
    Float::with_val(P, Constant::Pi)
}

pub fn ln2() -> Float {
    Float::with_val(P, Constant::Log2)
}

/// Counts of the identities checked by [`exhaustive_algebra`].
#[derive(Debug, Default)]
pub struct Tally {
    pub words: usize,
    pub pairs: usize,
    pub triples: usize,
}

/// Every exact identity of the shuffle algebra and of the regularizations
/// on all words of weight at most `n` over `{0, 1, -1}`, with `a = 1`,
/// `b = 0`.
pub fn exhaustive_algebra(n: usize) -> Result<Tally, String> {
    let alphabet = [pt(0), pt(1), pt(-1)];
    let (a, b) = (pt(1), pt(0));
    let words = words_up_to(&alphabet, n);
    let mut tally = Tally::default();

    for w in &words {
        tally.words += 1;
        let p = WordPoly::from_word(w.clone());
        let rb = reg_b(&p, &b);
        let rab = reg_ab(&p, &a, &b);
        if reg_b(&rb, &b) != rb {
            return Err(format!("reg_b not idempotent on {w}"));
        }
        if reg_ab(&rab, &a, &b) != rab {
            return Err(format!("reg_ab not idempotent on {w}"));
        }
        if !rb.words().all(|v| in_ab(v, &b)) {
            return Err(format!("reg_b({w}) leaves A^b"));
        }
        if !rab.words().all(|v| in_aab(v, &a, &b)) {
            return Err(format!("reg_ab({w}) leaves A^ab"));
        }
        for variant in [Decomposition::B, Decomposition::AB] {
            if reconstruct(w, &a, &b, variant) != p {
                return Err(format!("{variant:?} decomposition does not rebuild {w}"));
            }
        }
        if !w.is_empty() {
            let mut conv = WordPoly::zero();
            for (u, v) in w.deconcatenations() {
                conv = &conv + &shuffle_poly(&antipode(&WordPoly::from_word(u)), &WordPoly::from_word(v));
            }
            if !conv.is_zero() {
                return Err(format!("antipode convolution fails on {w}"));
            }
        }
    }

    for u in &words {
        for v in &words {
            if u.weight() + v.weight() > n {
                continue;
            }
            tally.pairs += 1;
            let uv = shuffle(u, v);
            if uv != shuffle(v, u) {
                return Err(format!("{u} ⧢ {v} is not commutative"));
            }
            let (pu, pv) = (WordPoly::from_word(u.clone()), WordPoly::from_word(v.clone()));
            if reg_b(&uv, &b) != shuffle_poly(&reg_b(&pu, &b), &reg_b(&pv, &b)) {
                return Err(format!("reg_b is not multiplicative on {u}, {v}"));
            }
            if reg_ab(&uv, &a, &b) != shuffle_poly(&reg_ab(&pu, &a, &b), &reg_ab(&pv, &a, &b)) {
                return Err(format!("reg_ab is not multiplicative on {u}, {v}"));
            }
            for x in &words {
                if u.weight() + v.weight() + x.weight() > n {
                    continue;
                }
                tally.triples += 1;
                let px = WordPoly::from_word(x.clone());
                if shuffle_poly(&uv, &px) != shuffle_poly(&pu, &shuffle(v, x)) {
                    return Err(format!("⧢ is not associative on {u}, {v}, {x}"));
                }
            }
        }
    }
    Ok(tally)
}

/// `-Σ_{m_1 > m_2} (-1)^{m_2} / (m_1^2 m_2)` summed directly over
/// `m_1 ≤ n`.
pub fn alternating_double_sum(n: u64) -> f64 {
    let mut inner = 0.0;
    let mut total = 0.0;
    for m1 in 1..=n {
        let m = m1 as f64;
        total += inner / (m * m);
        let sign = if m1 % 2 == 0 { 1.0 } else { -1.0 };
        inner += sign / m;
    }
    -total
}

/// `Σ_{m_1 > m_2} 2^{-(m_1 - m_2)} / (m_1 m_2^2)` summed directly over
/// `m_1 ≤ n`.
pub fn half_power_double_sum(n: u64) -> f64 {
    let mut total = 0.0;
    for m2 in 1..n {
        let mut inner = 0.0;
        let mut pow = 1.0;
        for m1 in m2 + 1..=n.min(m2 + 80) {
            pow *= 0.5;
            inner += pow / m1 as f64;
        }
        total += inner / (m2 as f64 * m2 as f64);
    }
    total
}

/// Removes an `n^-order` truncation error: `(2^order T(n) - T(n/2)) / (2^order - 1)`.
pub fn richardson(f: fn(u64) -> f64, n: u64, order: i32) -> f64 {
    let k = 2f64.powi(order);
    (k * f(n) - f(n / 2)) / (k - 1.0)
}
