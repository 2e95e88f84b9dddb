//! Truncated evaluation of
//! `Σ_{m_1 > … > m_k > 0} Π_i ρ_i^{m_i - m_{i+1}} / m_i^{s_i}` (`m_{k+1} = 0`).
//!
//! This is `λ(s; b)` with `ρ_i = 1/b_i`. All levels are advanced together in
//! one pass over `m`:
//!
//! ```text
//! Y_i(m)   = D_i(m) / m^{s_i}
//! D_i(m+1) = ρ_i (D_i(m) + Y_{i+1}(m)),   D_k(m) = ρ_k^m
//! total    = Σ_{m ≤ M} Y_1(m)
//! ```
//!
//! The truncation point `M` is chosen a priori from a tail bound that depends
//! on how the outermost ratio sits relative to the unit circle.

use rug::{Assign, Float};

use crate::algebra::Point;
use crate::error::{Error, Result};

use super::complex::BigComplex;
use super::context::{Acceleration, Estimate, PrecisionContext};

const SAFETY: f64 = 2.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum Modulus {
    One,
    /// `|ρ| = 1`, `ρ ≠ 1`.
    Unit,
    /// `|ρ| ≤ q < 1`.
    Inside(f64),
}

#[derive(Clone, Debug)]
pub(crate) struct Ratio {
    pub value: BigComplex,
    pub modulus: Modulus,
}

impl Ratio {
    /// Classifies an exactly known ratio.
    pub fn exact(p: &Point, prec: u32) -> Result<Ratio> {
        let n = p.norm_sqr();
        let modulus = if *p == Point::one() {
            Modulus::One
        } else if n == 1 {
            Modulus::Unit
        } else if n < 1 {
            Modulus::Inside(n.to_f64().sqrt() * (1.0 + 1e-12))
        } else {
            return Err(Error::NotConvergent(format!("|ratio {p}| > 1")));
        };
        Ok(Ratio {
            value: BigComplex::from_point(prec, p),
            modulus,
        })
    }

    /// Classifies a floating ratio; moduli within `2^(-prec/2)` of 1 count as
    /// unimodular.
    pub fn approx(value: BigComplex) -> Result<Ratio> {
        if !value.is_finite() {
            return Err(Error::NotConvergent("non-finite ratio".into()));
        }
        let prec = value.prec();
        let slack = (-f64::from(prec) / 2.0).exp2();
        let n = value.norm_sqr().to_f64();
        let modulus = if *value.re() == 1 && value.im().is_zero() {
            Modulus::One
        } else if (n - 1.0).abs() <= slack {
            Modulus::Unit
        } else if n < 1.0 {
            Modulus::Inside((n.sqrt() * (1.0 + 1e-12)).min(1.0 - slack))
        } else {
            return Err(Error::NotConvergent(format!("|ratio| = {} > 1", n.sqrt())));
        };
        Ok(Ratio { value, modulus })
    }

    fn q(&self) -> f64 {
        match self.modulus {
            Modulus::Inside(q) => q,
            _ => 1.0,
        }
    }
}

/// Upper bound for `Σ_{n ≤ m} n^{-s}`.
fn harm_bound(s: u32, m: f64) -> f64 {
    if s == 1 {
        m.max(1.0).ln() + 1.0
    } else {
        1.0 + 1.0 / f64::from(s - 1)
    }
}

fn check(s: &[u32], rho: &[Ratio]) -> Result<()> {
    if s.is_empty() || s.len() != rho.len() {
        return Err(Error::NotConvergent("exponents and ratios must be non-empty and of equal length".into()));
    }
    if s.contains(&0) {
        return Err(Error::NotConvergent("exponents must be positive".into()));
    }
    if s[0] == 1 && rho[0].modulus == Modulus::One {
        return Err(Error::NotConvergent("s_1 = 1 with outermost ratio 1 diverges".into()));
    }
    Ok(())
}

/// A-priori bound for the tail `Σ_{m_1 > M}`, including a safety factor.
pub(crate) fn tail_estimate(s: &[u32], rho: &[Ratio], m: u64) -> f64 {
    let mf = m as f64;
    let fb: f64 = s[1..].iter().map(|&si| harm_bound(si, 2.0 * mf)).product();
    let s1 = f64::from(s[0]);
    let all_inside = rho.iter().all(|r| matches!(r.modulus, Modulus::Inside(_)));
    match rho[0].modulus {
        Modulus::One => SAFETY * fb * mf.powf(1.0 - s1) / (s1 - 1.0),
        Modulus::Unit => {
            let gap = (&BigComplex::one(rho[0].value.prec()) - &rho[0].value).abs_f64();
            SAFETY * (2.0 / gap) * 3.0 * fb / (mf + 1.0).powf(s1)
        }
        Modulus::Inside(q1) if all_inside => {
            let q = rho.iter().map(Ratio::q).fold(q1, f64::max);
            SAFETY * fb * q.powf(mf + 1.0) / ((mf + 1.0).powf(s1) * (1.0 - q))
        }
        Modulus::Inside(q1) => {
            let s12 = s1 + f64::from(s[1]);
            let head = mf.powf(1.0 - s12) / (s12 - 1.0);
            let edge = mf.powf(-s12) / (1.0 - q1);
            SAFETY * fb * q1 / (1.0 - q1) * (head + edge)
        }
    }
}

/// Smallest `M ≤ limit` whose tail estimate is at most `tol`.
pub(crate) fn required_terms(s: &[u32], rho: &[Ratio], tol: f64, limit: u64) -> Result<u64> {
    let floor = s.len() as u64;
    let ok = |m: u64| tail_estimate(s, rho, m) <= tol;
    let mut hi = floor.max(8);
    while !ok(hi) {
        if hi >= limit {
            return Err(Error::TailTooLarge {
                estimate: tail_estimate(s, rho, limit),
                tol,
                truncation: limit,
            });
        }
        hi = (hi * 2).min(limit);
    }
    let mut lo = floor.max(1);
    if ok(lo) {
        return Ok(lo);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// `Σ_{m_1 ≤ m_max}` of the nested sum, computed at `prec` bits.
pub(crate) fn partial_sum(s: &[u32], rho: &[Ratio], m_max: u64, prec: u32) -> BigComplex {
    let k = s.len();
    let max_s = *s.iter().max().expect("non-empty") as usize;
    let mut d = vec![BigComplex::zero(prec); k];
    d[k - 1] = rho[k - 1].value.clone();
    let mut y = vec![BigComplex::zero(prec); k];
    let mut pw = vec![Float::with_val(prec, 1); max_s + 1];
    let mut total = BigComplex::zero(prec);
    for m in 1..=m_max {
        pw[1].assign(1);
        pw[1] /= m;
        for j in 2..=max_s {
            let (lo, hi) = pw.split_at_mut(j);
            hi[0].assign(&lo[j - 1] * &lo[1]);
        }
        for i in 0..k {
            y[i].clone_from(&d[i]);
            y[i] *= &pw[s[i] as usize];
        }
        total += &y[0];
        for i in 0..k {
            if i + 1 < k {
                d[i] += &y[i + 1];
            }
            if rho[i].modulus != Modulus::One {
                d[i] *= &rho[i].value;
            }
        }
    }
    total
}

/// Truncated nested sum with an a-priori tail bound.
///
/// When `acceleration` is enabled and all ratios are equal, unimodular and
/// satisfy `|1 - ρ| > 1`, the Euler transform is used instead.
pub(crate) fn nested_sum(s: &[u32], rho: &[Ratio], ctx: &PrecisionContext, tol: f64) -> Result<Estimate> {
    check(s, rho)?;
    if ctx.acceleration() == Acceleration::EulerTransform && euler_applies(rho) {
        if let Some(est) = euler_sum(s, &rho[0].value, ctx, tol) {
            return Ok(est);
        }
    }
    let m = required_terms(s, rho, 0.9 * tol, ctx.truncation_m())?;
    let value = partial_sum(s, rho, m, ctx.precision_bits());
    let fb: f64 = s.iter().map(|&si| harm_bound(si, m as f64)).product();
    let max_s = f64::from(*s.iter().max().expect("non-empty"));
    let roundoff = 4.0 * m as f64 * s.len() as f64 * (max_s + 4.0) * ctx.eps() * fb.max(1.0);
    Ok(Estimate {
        value,
        error: tail_estimate(s, rho, m) + roundoff,
        terms: m,
    })
}

pub(crate) fn euler_applies(rho: &[Ratio]) -> bool {
    let first = &rho[0];
    if first.modulus != Modulus::Unit || rho.iter().any(|r| r.value != first.value) {
        return false;
    }
    let gap = (&BigComplex::one(first.value.prec()) - &first.value).abs_f64();
    gap > 1.0
}

const EULER_MAX_TERMS: usize = 1000;

/// `Σ_m ρ^m a_m = Σ_k r^{k+1} Δ^k a_{·+1}` with `r = ρ/(1-ρ)`, where `a_m` is
/// the ratio-free nested sum with `m_1 = m`.
///
/// Differences are taken at raised precision so the binomial cancellation
/// does not eat into the working precision. The error is estimated from the
/// last two transformed terms. Returns `None` if the transformed series has
/// not settled within the term cap.
fn euler_sum(s: &[u32], rho: &BigComplex, ctx: &PrecisionContext, tol: f64) -> Option<Estimate> {
    let prec = ctx.precision_bits();
    let work = prec + 64 + EULER_MAX_TERMS as u32;
    let one = BigComplex::one(work);
    let rho_w = BigComplex::from_parts(Float::with_val(work, rho.re()), Float::with_val(work, rho.im()));
    let r = &rho_w / &(&one - &rho_w);
    let q = r.abs_f64();
    if q >= 1.0 {
        return None;
    }
    // a_1 … a_n with all ratios equal to 1, extended lazily.
    let ones: Vec<Ratio> = s
        .iter()
        .map(|_| Ratio {
            value: BigComplex::one(work),
            modulus: Modulus::One,
        })
        .collect();
    let a = coefficient_sequence(s, &ones, EULER_MAX_TERMS + 1, work);

    let mut diffs = a;
    let mut rk = r.clone();
    let mut sum = BigComplex::zero(work);
    let mut prev = f64::INFINITY;
    let stop = tol * (1.0 - q) / (4.0 * SAFETY);
    for k in 0..EULER_MAX_TERMS {
        let term = rk.scale(&diffs[0]);
        sum += &term;
        let cur = term.abs_f64();
        if k >= 4 && cur <= stop && prev <= stop {
            let error = SAFETY * cur.max(prev) * q / (1.0 - q);
            let value = BigComplex::from_parts(
                Float::with_val(prec, sum.re()),
                Float::with_val(prec, sum.im()),
            );
            return Some(Estimate {
                value,
                error: error + 4.0 * ctx.eps(),
                terms: k as u64 + 1,
            });
        }
        prev = cur;
        for j in 0..diffs.len() - 1 {
            let next = diffs[j + 1].clone();
            diffs[j] = next - &diffs[j];
        }
        diffs.pop();
        rk = &rk * &r;
    }
    None
}

/// `[a_1, …, a_n]` where `a_m` is the summand of the outermost level at
/// `m_1 = m`.
fn coefficient_sequence(s: &[u32], rho: &[Ratio], n: usize, prec: u32) -> Vec<Float> {
    let k = s.len();
    let max_s = *s.iter().max().expect("non-empty") as usize;
    let mut d = vec![BigComplex::zero(prec); k];
    d[k - 1] = rho[k - 1].value.clone();
    let mut out = Vec::with_capacity(n);
    for m in 1..=n as u64 {
        let inv = Float::with_val(prec, 1) / m;
        let mut pw = vec![Float::with_val(prec, 1)];
        for j in 1..=max_s {
            pw.push(Float::with_val(prec, &pw[j - 1] * &inv));
        }
        let y: Vec<BigComplex> = (0..k).map(|i| d[i].scale(&pw[s[i] as usize])).collect();
        out.push(y[0].re().clone());
        for i in 0..k {
            if i + 1 < k {
                d[i] += &y[i + 1];
            }
            if rho[i].modulus != Modulus::One {
                d[i] *= &rho[i].value;
            }
        }
    }
    out
}
