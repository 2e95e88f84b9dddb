//! `λ`, `Li^b`, `Li^{ab}`, `ℒ^{ab}` and the MZV / multiple L-value wrappers.
//!
//! A word not ending in `x_b` is read as `x_b^{k_1-1} x_{c_1} … x_b^{k_r-1} x_{c_r}`
//! and
//!
//! ```text
//! Li^b(w; z) = (-1)^r λ(k; (c_1-b)/(z-b), …, (c_r-b)/(z-b))
//! ℒ^{ab}(w)  = (-1)^r λ(k; (c_1-b)/(a-b), …, (c_r-b)/(a-b))
//! ```
//!
//! so the nested-sum ratios are `(z-b)/(c_i-b)` and `(a-b)/(c_i-b)`.

use std::collections::BTreeMap;

use rug::{Float, Rational};

use crate::algebra::{Letter, Point, Word, WordPoly};
use crate::error::{Error, Result};
use crate::reg::{in_aab, in_ab, reg_b};
use crate::symmetry::{MobiusMap, SigmaConfig};

use super::complex::BigComplex;
use super::context::{Estimate, PrecisionContext};
use super::nested::{euler_applies, nested_sum, required_terms, Ratio};

/// Arguments of `λ(s_1…s_k; b_1…b_k)`.
#[derive(Clone, Debug)]
pub struct LambdaArgs {
    pub s: Vec<u32>,
    pub bvals: Vec<BigComplex>,
}

/// `λ(s; b) = Σ_{m_1>…>m_k>0} b_1^{-(m_1-m_2)} … b_k^{-m_k} / (m_1^{s_1} … m_k^{s_k})`.
///
/// Requires every `|b_i| ≥ 1`, and `b_1 ≠ 1` when `s_1 = 1`.
pub fn lambda_eval(args: &LambdaArgs, ctx: &PrecisionContext) -> Result<Estimate> {
    if args.s.is_empty() || args.s.len() != args.bvals.len() {
        return Err(Error::NotConvergent(
            "λ needs equally many exponents and arguments, at least one".into(),
        ));
    }
    let prec = ctx.precision_bits();
    let rho = args
        .bvals
        .iter()
        .map(|b| {
            if b.is_zero() {
                return Err(Error::NotConvergent("argument 0".into()));
            }
            let b = BigComplex::from_parts(Float::with_val(prec, b.re()), Float::with_val(prec, b.im()));
            Ratio::approx(b.recip())
        })
        .collect::<Result<Vec<_>>>()?;
    nested_sum(&args.s, &rho, ctx, ctx.target_tol())
}

/// `(k_i, c_i)` of a word that does not end in `x_base`.
fn depth_data(w: &Word, base: &Point) -> (Vec<u32>, Vec<Point>) {
    let mut ks = Vec::new();
    let mut cs = Vec::new();
    let mut run = 1u32;
    for l in w.letters() {
        if l.point() == base {
            run += 1;
        } else {
            ks.push(run);
            cs.push(l.point().clone());
            run = 1;
        }
    }
    (ks, cs)
}

fn signed(est: Estimate, depth: usize) -> Estimate {
    if depth % 2 == 1 {
        est.neg()
    } else {
        est
    }
}

fn to_prec(z: &BigComplex, prec: u32) -> BigComplex {
    BigComplex::from_parts(Float::with_val(prec, z.re()), Float::with_val(prec, z.im()))
}

/// `Li(w; z)` expanded around `base`, for `w` not ending in `x_base`.
fn li_series(w: &Word, base: &Point, z: &BigComplex, ctx: &PrecisionContext, tol: f64) -> Result<Estimate> {
    let prec = ctx.precision_bits();
    if w.is_empty() {
        return Ok(Estimate::exact(ctx.one()));
    }
    let (ks, cs) = depth_data(w, base);
    let zb = &to_prec(z, prec) - &BigComplex::from_point(prec, base);
    if zb.is_zero() {
        return Ok(Estimate::exact(ctx.zero()));
    }
    let rho = cs
        .iter()
        .map(|c| Ratio::approx(&zb / &BigComplex::from_point(prec, &(c - base))))
        .collect::<Result<Vec<_>>>()?;
    Ok(signed(nested_sum(&ks, &rho, ctx, tol)?, cs.len()))
}

/// The same with an exactly known evaluation point.
fn li_series_exact(w: &Word, base: &Point, z: &Point, ctx: &PrecisionContext, tol: f64) -> Result<Estimate> {
    if w.is_empty() {
        return Ok(Estimate::exact(ctx.one()));
    }
    let (ks, cs) = depth_data(w, base);
    let zb = z - base;
    let rho = cs
        .iter()
        .map(|c| {
            let r = zb.checked_div(&(c - base)).expect("c ≠ base");
            Ratio::exact(&r, ctx.precision_bits())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(signed(nested_sum(&ks, &rho, ctx, tol)?, cs.len()))
}

/// Strict membership in the open disk of radius `min_{c ≠ center} |c - center|`.
fn check_disk(z: &BigComplex, center: &Point, cfg: &SigmaConfig) -> Result<()> {
    let prec = z.prec();
    let Some(r2) = cfg.min_dist_sqr(center) else {
        return Ok(());
    };
    let d2 = (z - &BigComplex::from_point(prec, center)).norm_sqr();
    if d2 < Float::with_val(prec, &r2) {
        Ok(())
    } else {
        Err(Error::OutOfDisk(format!(
            "|z - {center}| = {:.6} is not below the radius {:.6}",
            d2.to_f64().sqrt(),
            r2.to_f64().sqrt()
        )))
    }
}

/// `Li^b_Σ(w; z)` for `w ∈ A^b` and `|z - b| < min_{c ≠ b} |c - b|`.
pub fn li_b(w: &Word, z: &BigComplex, cfg: &SigmaConfig, ctx: &PrecisionContext) -> Result<Estimate> {
    cfg.check_letters(w)?;
    if !in_ab(w, cfg.b()) {
        return Err(Error::NotInAb(w.to_string()));
    }
    check_disk(z, cfg.b(), cfg)?;
    li_series(w, cfg.b(), z, ctx, ctx.target_tol())
}

/// `Li^{ab}_Σ(P; z)`: each word is split as `w_b x_b^n` and
/// `Li^{ab}(w) = Σ_j Li^b(reg^b(w_b x_b^{n-j}); z) · L^j / j!` with
/// `L = log((z-b)/(a-b))`.
pub fn li_ab(p: &WordPoly, z: &BigComplex, cfg: &SigmaConfig, ctx: &PrecisionContext) -> Result<Estimate> {
    let prec = ctx.precision_bits();
    for w in p.words() {
        cfg.check_letters(w)?;
    }
    check_disk(z, cfg.b(), cfg)?;
    let b = cfg.b();
    let xb = Letter::new(b.clone());
    let zb = &to_prec(z, prec) - &BigComplex::from_point(prec, b);
    let ab = BigComplex::from_point(prec, &(cfg.a() - b));
    let log = if zb.is_zero() { None } else { Some((&zb / &ab).ln()) };

    // Collect Σ coefficient · Li^b(word) over words in A^b.
    let mut combo: BTreeMap<Word, BigComplex> = BTreeMap::new();
    for (w, coef) in p.terms() {
        let n = w.trailing_count(b);
        let head_len = w.weight() - n;
        let coef = BigComplex::from_real(Float::with_val(prec, coef));
        let mut power = ctx.one();
        for j in 0..=n {
            if j > 0 {
                let Some(l) = &log else {
                    return Err(Error::OutOfDisk("log((z-b)/(a-b)) is singular at z = b".into()));
                };
                power = &(&power * l) / &BigComplex::from_f64(prec, j as f64, 0.0);
            }
            let piece = w.slice(0, head_len).concat(&Word::power(&xb, n - j));
            for (v, c) in reg_b(&WordPoly::from_word(piece), b).terms() {
                let c = BigComplex::from_real(Float::with_val(prec, c));
                let add = &(&coef * &power) * &c;
                let slot = combo.entry(v.clone()).or_insert_with(|| ctx.zero());
                *slot += &add;
            }
        }
    }
    let count = combo.len().max(1) as f64;
    let mut total = Estimate::exact(ctx.zero());
    for (v, c) in &combo {
        let weight = c.abs_f64();
        if weight == 0.0 {
            continue;
        }
        let tol = ctx.target_tol() / (2.0 * count * weight);
        let li = li_series(v, b, z, ctx, tol)?;
        total = total.add(&li.scale(c));
    }
    Ok(total)
}

/// How `ℒ^{ab}` is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Route {
    /// The nested sum at `z = a` (with Euler acceleration when it applies).
    Series,
    /// `Σ_{w_1 w_2 = w} Li^{ba}(S(w_1); p) Li^{ab}(w_2; p)` at an interior
    /// point `p` of the segment `[b, a]`.
    Split,
    /// `Series` when it meets the tolerance within `truncation_M` terms,
    /// otherwise `Split`.
    #[default]
    Auto,
}

/// `ℒ^{ab}_Σ(w)` for `w ∈ A^{ab}`, `a` a nearest point to `b`.
pub fn l_ab(w: &Word, cfg: &SigmaConfig, ctx: &PrecisionContext) -> Result<Estimate> {
    l_ab_with(w, cfg, ctx, Route::Auto)
}

pub fn l_ab_with(w: &Word, cfg: &SigmaConfig, ctx: &PrecisionContext, route: Route) -> Result<Estimate> {
    cfg.check_letters(w)?;
    if !in_aab(w, cfg.a(), cfg.b()) {
        return Err(Error::NotInAab(w.to_string()));
    }
    cfg.require_nearest()?;
    if w.is_empty() {
        return Ok(Estimate::exact(ctx.one()));
    }
    let tol = ctx.target_tol();
    match route {
        Route::Series => l_ab_series(w, cfg, ctx, tol),
        Route::Split => l_ab_split(w, cfg, ctx, tol),
        Route::Auto => {
            let (ks, rho) = limit_ratios(w, cfg, ctx)?;
            let accelerated = ctx.acceleration() == super::Acceleration::EulerTransform && euler_applies(&rho);
            if accelerated || required_terms(&ks, &rho, 0.9 * tol, ctx.truncation_m()).is_ok() {
                match l_ab_series(w, cfg, ctx, tol) {
                    Err(Error::TailTooLarge { .. }) => l_ab_split(w, cfg, ctx, tol),
                    other => other,
                }
            } else {
                l_ab_split(w, cfg, ctx, tol)
            }
        }
    }
}

fn limit_ratios(w: &Word, cfg: &SigmaConfig, ctx: &PrecisionContext) -> Result<(Vec<u32>, Vec<Ratio>)> {
    let (ks, cs) = depth_data(w, cfg.b());
    let ab = cfg.a() - cfg.b();
    let rho = cs
        .iter()
        .map(|c| Ratio::exact(&ab.checked_div(&(c - cfg.b())).expect("c ≠ b"), ctx.precision_bits()))
        .collect::<Result<Vec<_>>>()?;
    if ks[0] == 1 && cs[0] == *cfg.a() {
        return Err(Error::NotInAab(w.to_string()));
    }
    Ok((ks, rho))
}

fn l_ab_series(w: &Word, cfg: &SigmaConfig, ctx: &PrecisionContext, tol: f64) -> Result<Estimate> {
    let (ks, rho) = limit_ratios(w, cfg, ctx)?;
    Ok(signed(nested_sum(&ks, &rho, ctx, tol)?, rho.len()))
}

/// The interior point `p = b + t(a - b)` used by [`Route::Split`].
///
/// `t` is close to the value that balances the two geometric rates but is
/// pulled towards `b`, so `p` is not a fixed point of the `a ↔ b` symmetry
/// on symmetric configurations.
pub fn split_point(cfg: &SigmaConfig) -> Point {
    let (a, b) = (cfg.a(), cfg.b());
    let dist = a.dist_sqr(b).to_f64().sqrt();
    let da = cfg.min_dist_sqr(a).map_or(f64::INFINITY, |r| r.to_f64().sqrt());
    let db = cfg.min_dist_sqr(b).map_or(f64::INFINITY, |r| r.to_f64().sqrt());
    let balanced = if da.is_infinite() { 0.5 } else { db / (da + db) };
    let rate_a = |t: f64| (1.0 - t) * dist / da;
    let mut t = 0.9 * balanced;
    if rate_a(t) >= 0.9 {
        t = balanced;
    }
    let t = Rational::from_f64((t * 1024.0).round() / 1024.0).expect("finite");
    b + &(&(a - b) * &Point::real(t))
}

fn l_ab_split(w: &Word, cfg: &SigmaConfig, ctx: &PrecisionContext, tol: f64) -> Result<Estimate> {
    let (a, b) = (cfg.a(), cfg.b());
    let p = split_point(cfg);
    let n = w.weight();
    let tol_f = tol * 1e-3 / (n as f64 + 1.0);
    let mut total = Estimate::exact(ctx.zero());
    for j in 0..=n {
        // S(w_1) = (-1)^{|w_1|} reversed(w_1)
        let left = li_series_exact(&w.slice(0, j).reversed(), a, &p, ctx, tol_f)?;
        let right = li_series_exact(&w.slice(j, n), b, &p, ctx, tol_f)?;
        let prod = left.mul(&right);
        total = if j % 2 == 0 { total.add(&prod) } else { total.sub(&prod) };
    }
    Ok(total)
}

/// The word `x_0^{k_1-1} x_{c_1} … x_0^{k_r-1} x_{c_r}`.
fn index_word(k: &[u32], c: &[Point]) -> Word {
    let zero = Letter::new(Point::zero());
    let mut letters = Vec::new();
    for (ki, ci) in k.iter().zip(c) {
        letters.extend(std::iter::repeat(zero.clone()).take(*ki as usize - 1));
        letters.push(Letter::new(ci.clone()));
    }
    Word::new(letters)
}

/// `ζ(k_1, …, k_r) = Σ_{m_1 > … > m_r > 0} 1/(m_1^{k_1} … m_r^{k_r})`.
pub fn mzv(k: &[u32], ctx: &PrecisionContext) -> Result<Estimate> {
    if k.is_empty() || k.contains(&0) {
        return Err(Error::InvalidConfig("MZV indices must be positive and non-empty".into()));
    }
    if k[0] == 1 {
        return Err(Error::Divergent(format!("ζ({}) has k_1 = 1", join(k))));
    }
    let w = index_word(k, &vec![Point::one(); k.len()]);
    Ok(signed(l_ab(&w, &SigmaConfig::mzv(), ctx)?, k.len()))
}

fn join(k: &[u32]) -> String {
    k.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// `ζ_m` for the moduli whose roots of unity are Gaussian rationals.
pub fn root_of_unity(m: u32) -> Result<Point> {
    match m {
        1 => Ok(Point::one()),
        2 => Ok(Point::from_int(-1)),
        4 => Ok(Point::i()),
        other => Err(Error::UnsupportedModulus(other)),
    }
}

/// `L(k; a) = λ(k_1, …, k_r; ζ_m^{-a_1}, …, ζ_m^{-a_r})`, evaluated as
/// `(-1)^r ℒ^{10}` on `Σ = {0} ∪ μ_m`.
pub fn multiple_l_value(k: &[u32], residues: &[i64], m: u32, ctx: &PrecisionContext) -> Result<Estimate> {
    let zeta = root_of_unity(m)?;
    let cfg = SigmaConfig::roots_of_unity(m)?;
    if k.is_empty() || k.len() != residues.len() || k.contains(&0) {
        return Err(Error::InvalidConfig(
            "indices must be positive and match the residues in length".into(),
        ));
    }
    let modulus = i64::from(m);
    if k[0] == 1 && residues[0].rem_euclid(modulus) == 0 {
        return Err(Error::Divergent("k_1 = 1 with a_1 ≡ 0".into()));
    }
    let cs = residues
        .iter()
        .map(|a| {
            let e = (-a).rem_euclid(modulus) as i32;
            zeta.checked_pow(e).expect("root of unity is invertible")
        })
        .collect::<Vec<_>>();
    let w = index_word(k, &cs);
    Ok(signed(l_ab(&w, &cfg, ctx)?, k.len()))
}

/// `σ(z)` in floating point; `None` when `z` is sent to ∞.
pub fn mobius_eval(m: &MobiusMap, z: &BigComplex) -> Option<BigComplex> {
    let prec = z.prec();
    let [p, q, r, s] = m.entries().map(|e| BigComplex::from_point(prec, e));
    let num = &(&p * z) + &q;
    let den = &(&r * z) + &s;
    if den.is_zero() {
        None
    } else {
        Some(&num / &den)
    }
}
