use rayon::prelude::*;

use crate::algebra::{antipode, shuffle, words_up_to, Point, Word, WordPoly};
use crate::error::{Error, Result};
use crate::numeric::{l_ab, li_ab, mobius_eval, BigComplex, Estimate, PrecisionContext};
use crate::symmetry::{ExtendedPoint, MobiusMap, SigmaConfig, Symmetry};

use super::phi::{l_ab_poly, phi_coefficients};
use super::relation::Relation;
use super::series::NcSeries;

/// Outcome of comparing two numerically evaluated sides.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub lhs_value: BigComplex,
    pub rhs_value: BigComplex,
    pub abs_residual: f64,
    pub tol_used: f64,
    pub passed: bool,
    pub terms_summed: u64,
    /// Sum of the error estimates of both sides.
    pub estimated_error: f64,
}

impl VerificationReport {
    fn compare(lhs: Estimate, rhs: Estimate, tol_used: f64) -> Self {
        let abs_residual = lhs.value.dist(&rhs.value);
        VerificationReport {
            abs_residual,
            tol_used,
            passed: abs_residual <= tol_used,
            terms_summed: lhs.terms + rhs.terms,
            estimated_error: lhs.error + rhs.error,
            lhs_value: lhs.value,
            rhs_value: rhs.value,
        }
    }
}

fn tol_used(ctx: &PrecisionContext) -> f64 {
    10.0 * ctx.target_tol()
}

/// Evaluates both sides of `rel`; the right side of an antipode duality is
/// read with `a` and `b` exchanged.
pub fn verify(rel: &Relation, cfg: &SigmaConfig, ctx: &PrecisionContext) -> Result<VerificationReport> {
    let lhs = l_ab_poly(&rel.lhs, cfg, ctx)?;
    let rhs = if rel.rhs_swapped() {
        l_ab_poly(&rel.rhs, &cfg.swapped(), ctx)?
    } else {
        l_ab_poly(&rel.rhs, cfg, ctx)?
    };
    Ok(VerificationReport::compare(lhs, rhs, tol_used(ctx)))
}

/// [`verify`] over many relations concurrently; results keep the input order.
pub fn verify_all(rels: &[Relation], cfg: &SigmaConfig, ctx: &PrecisionContext) -> Vec<Result<VerificationReport>> {
    rels.par_iter().map(|r| verify(r, cfg, ctx)).collect()
}

/// `Σ_{w_1 w_2 = w} Li^{ba}(S(w_1); z) Li^{ab}(w_2; z)` against `ℒ^{ab}(w)`.
pub fn euler_inversion_check(
    w: &Word,
    z: &BigComplex,
    cfg: &SigmaConfig,
    ctx: &PrecisionContext,
) -> Result<VerificationReport> {
    let n = w.weight();
    let inner = ctx.tightened(10.0 * (n as f64 + 1.0));
    let swapped = cfg.swapped();
    let rhs = l_ab(w, cfg, &inner)?;
    let mut lhs = Estimate::exact(BigComplex::zero(ctx.precision_bits()));
    for j in 0..=n {
        let left = li_ab(&antipode(&WordPoly::from_word(w.slice(0, j))), z, &swapped, &inner)?;
        let right = li_ab(&WordPoly::from_word(w.slice(j, n)), z, cfg, &inner)?;
        lhs = lhs.add(&left.mul(&right));
    }
    Ok(VerificationReport::compare(lhs, rhs, tol_used(ctx)))
}

/// `Σ_{w_1 w_2 = w} Li^{ab}(τ(w_1); σ(z)) Li^{ab}(w_2; z)` against `ℒ^{ab}(w)`.
pub fn sigma_euler_inversion_check(
    m: &MobiusMap,
    w: &Word,
    z: &BigComplex,
    cfg: &SigmaConfig,
    ctx: &PrecisionContext,
) -> Result<VerificationReport> {
    let sym = Symmetry::new(m, cfg)?;
    if !sym.swaps_a_b() {
        return Err(Error::NotASwap);
    }
    let sz = mobius_eval(m, z).ok_or_else(|| Error::OutOfDisk("σ(z) = ∞".into()))?;
    let n = w.weight();
    let inner = ctx.tightened(10.0 * (n as f64 + 1.0));
    let rhs = l_ab(w, cfg, &inner)?;
    let mut lhs = Estimate::exact(BigComplex::zero(ctx.precision_bits()));
    for j in 0..=n {
        let left = li_ab(&sym.tau(&WordPoly::from_word(w.slice(0, j)))?, &sz, cfg, &inner)?;
        let right = li_ab(&WordPoly::from_word(w.slice(j, n)), z, cfg, &inner)?;
        lhs = lhs.add(&left.mul(&right));
    }
    Ok(VerificationReport::compare(lhs, rhs, tol_used(ctx)))
}

/// `ℒ^{ab}(u) ℒ^{ab}(v)` against `ℒ^{ab}(reg^{ab}(u ⧢ v))`.
pub fn shuffle_relation_check(
    u: &Word,
    v: &Word,
    cfg: &SigmaConfig,
    ctx: &PrecisionContext,
) -> Result<VerificationReport> {
    let inner = ctx.tightened(10.0);
    let lhs = l_ab(u, cfg, &inner)?.mul(&l_ab(v, cfg, &inner)?);
    let rhs = l_ab_poly(&shuffle(u, v), cfg, &inner)?;
    Ok(VerificationReport::compare(lhs, rhs, tol_used(ctx)))
}

/// `(a - σ(∞)) / (b - σ(∞))`, or 1 when `σ(∞) = ∞`.
pub fn conjugation_constant(m: &MobiusMap, cfg: &SigmaConfig) -> Point {
    match m.image_of_infinity() {
        ExtendedPoint::Infinity => Point::one(),
        ExtendedPoint::Finite(s) => (cfg.a() - &s)
            .checked_div(&(cfg.b() - &s))
            .expect("σ(∞) ≠ b for a map preserving Σ ∪ {∞}"),
    }
}

/// Compares `Φ(X)^{-1}` with `C^{X_b} Φ(σ(X)) C^{X_a}` coefficient by
/// coefficient, `C` as in [`conjugation_constant`], for every word of weight
/// at most `max_weight` in graded-lex order.
pub fn associator_inverse_check(
    m: &MobiusMap,
    cfg: &SigmaConfig,
    max_weight: usize,
    ctx: &PrecisionContext,
) -> Result<Vec<(Word, VerificationReport)>> {
    let sym = Symmetry::new(m, cfg)?;
    if !sym.swaps_a_b() {
        return Err(Error::NotASwap);
    }
    let inner = ctx.tightened(100.0);
    let phi = phi_coefficients(cfg, max_weight, &inner)?;
    let series = phi.to_series();
    let inverse = series.inverse().expect("Φ has constant term 1");

    let prec = inner.precision_bits();
    let log_c = BigComplex::from_point(prec, &conjugation_constant(m, cfg)).ln();
    let alphabet = cfg.points();
    let left = NcSeries::letter_exp(alphabet, max_weight, cfg.b(), &log_c);
    let right = NcSeries::letter_exp(alphabet, max_weight, cfg.a(), &log_c);
    let rhs = left
        .mul(&series.substitute(&sym.dual_alphabet()))
        .mul(&right);

    let max_err = phi.coefficients.values().map(|e| e.error).fold(0.0, f64::max);
    Ok(words_up_to(alphabet, max_weight)
        .into_iter()
        .map(|w| {
            let lhs = Estimate {
                value: inverse.coefficient(&w),
                error: max_err,
                terms: 0,
            };
            let rhs = Estimate {
                value: rhs.coefficient(&w),
                error: max_err,
                terms: 0,
            };
            let report = VerificationReport::compare(lhs, rhs, tol_used(ctx));
            (w, report)
        })
        .collect())
}
