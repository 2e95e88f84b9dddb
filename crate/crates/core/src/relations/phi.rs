use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use rug::Float;

use crate::algebra::{words_up_to, Word, WordPoly};
use crate::error::Result;
use crate::numeric::{l_ab, BigComplex, Estimate, PrecisionContext};
use crate::reg::reg_ab;
use crate::symmetry::SigmaConfig;

use super::series::NcSeries;

/// `Φ^{ab} = Σ_w ℒ^{ab}(reg^{ab}(w)) w` up to `max_weight`.
#[derive(Clone, Debug)]
pub struct PhiTruncation {
    pub max_weight: usize,
    pub coefficients: BTreeMap<Word, Estimate>,
    alphabet: Vec<crate::algebra::Point>,
    prec: u32,
}

impl PhiTruncation {
    pub fn coefficient(&self, w: &Word) -> Option<&Estimate> {
        self.coefficients.get(w)
    }

    pub fn to_series(&self) -> NcSeries {
        let mut s = NcSeries::zero(&self.alphabet, self.max_weight, self.prec);
        for (w, e) in &self.coefficients {
            s.set(w.clone(), e.value.clone());
        }
        s
    }
}

/// `ℒ^{ab}` applied linearly to `reg^{ab}(p)`.
pub fn l_ab_poly(p: &WordPoly, cfg: &SigmaConfig, ctx: &PrecisionContext) -> Result<Estimate> {
    let regd = reg_ab(p, cfg.a(), cfg.b());
    let l1: f64 = regd.terms().map(|(_, c)| c.to_f64().abs()).sum();
    let ctx = ctx.tightened(l1);
    let prec = ctx.precision_bits();
    let mut total = Estimate::exact(BigComplex::zero(prec));
    for (w, c) in regd.terms() {
        let c = BigComplex::from_real(Float::with_val(prec, c));
        total = total.add(&l_ab(w, cfg, &ctx)?.scale(&c));
    }
    Ok(total)
}

/// Every coefficient of `Φ^{ab}` up to `max_weight`. Distinct words of the
/// regularized expansions are evaluated once, in parallel.
pub fn phi_coefficients(cfg: &SigmaConfig, max_weight: usize, ctx: &PrecisionContext) -> Result<PhiTruncation> {
    cfg.require_nearest()?;
    let words = words_up_to(cfg.points(), max_weight);
    let expansions: Vec<WordPoly> = words
        .iter()
        .map(|w| reg_ab(&WordPoly::from_word(w.clone()), cfg.a(), cfg.b()))
        .collect();
    let l1 = expansions
        .iter()
        .map(|p| p.terms().map(|(_, c)| c.to_f64().abs()).sum::<f64>())
        .fold(1.0, f64::max);
    let ctx = ctx.tightened(l1);
    let distinct: BTreeSet<&Word> = expansions.iter().flat_map(|p| p.words()).collect();
    let values: BTreeMap<&Word, Estimate> = distinct
        .into_par_iter()
        .map(|w| l_ab(w, cfg, &ctx).map(|e| (w, e)))
        .collect::<Result<_>>()?;

    let prec = ctx.precision_bits();
    let coefficients = words
        .iter()
        .zip(&expansions)
        .map(|(w, p)| {
            let mut total = Estimate::exact(BigComplex::zero(prec));
            for (v, c) in p.terms() {
                let c = BigComplex::from_real(Float::with_val(prec, c));
                total = total.add(&values[v].scale(&c));
            }
            (w.clone(), total)
        })
        .collect();
    Ok(PhiTruncation {
        max_weight,
        coefficients,
        alphabet: cfg.points().to_vec(),
        prec,
    })
}
