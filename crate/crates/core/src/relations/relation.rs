use std::fmt;
use std::str::FromStr;

use crate::algebra::{antipode, words_up_to, Word, WordPoly};
use crate::error::{Error, Result};
use crate::reg::{in_aab, reg_ab};
use crate::symmetry::{MobiusMap, SigmaConfig, Symmetry};

/// Which identity a [`Relation`] instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// `ℒ^{ab}(w) = ℒ^{ba}(S(w))`; the right side is read with `a` and `b`
    /// exchanged.
    AntipodeDuality,
    /// `ℒ^{ab}(w) = ℒ^{ab}(reg^{ab}(τ(w)))`.
    SigmaDuality,
    ShuffleRelation,
    EulerInversion,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::AntipodeDuality => "antipode_duality",
            Provenance::SigmaDuality => "sigma_duality",
            Provenance::ShuffleRelation => "shuffle_relation",
            Provenance::EulerInversion => "euler_inversion",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "antipode_duality" => Ok(Provenance::AntipodeDuality),
            "sigma_duality" => Ok(Provenance::SigmaDuality),
            "shuffle_relation" => Ok(Provenance::ShuffleRelation),
            "euler_inversion" => Ok(Provenance::EulerInversion),
            other => Err(Error::InvalidConfig(format!("unknown provenance '{other}'"))),
        }
    }
}

/// `ℒ(lhs) = ℒ(rhs)`, both sides read through `ℒ^{ab} ∘ reg^{ab}` (the right
/// side through `ℒ^{ba} ∘ reg^{ba}` for antipode duality).
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub lhs: WordPoly,
    pub rhs: WordPoly,
    pub provenance: Provenance,
    pub sigma: Option<MobiusMap>,
    /// Set when `rhs` differs from the raw image it was derived from, i.e.
    /// `reg^{ab}(τ(w)) ≠ τ(w)`.
    pub regularized: bool,
}

impl Relation {
    /// Reads the right-hand side with `a` and `b` exchanged.
    pub fn rhs_swapped(&self) -> bool {
        self.provenance == Provenance::AntipodeDuality
    }
}

fn aab_words(cfg: &SigmaConfig, max_weight: usize) -> impl Iterator<Item = Word> + '_ {
    words_up_to(cfg.points(), max_weight)
        .into_iter()
        .filter(|w| in_aab(w, cfg.a(), cfg.b()))
}

/// `ℒ^{ab}(w) = ℒ^{ba}(S(w))` for every `w ∈ A^{ab}` of weight at most
/// `max_weight`, in graded-lex order.
pub fn duality_pairs(cfg: &SigmaConfig, max_weight: usize) -> Result<Vec<Relation>> {
    cfg.require_mutually_nearest()?;
    Ok(aab_words(cfg, max_weight)
        .map(|w| {
            let lhs = WordPoly::from_word(w);
            Relation {
                rhs: antipode(&lhs),
                lhs,
                provenance: Provenance::AntipodeDuality,
                sigma: None,
                regularized: false,
            }
        })
        .collect())
}

/// `ℒ(w) = ℒ(reg^{ab}(τ(w)))` for an involution `σ` exchanging `a` and `b`.
pub fn sigma_duality_pairs(m: &MobiusMap, cfg: &SigmaConfig, max_weight: usize) -> Result<Vec<Relation>> {
    let sym = Symmetry::new(m, cfg)?;
    if !sym.swaps_a_b() {
        return Err(Error::NotASwap);
    }
    if !m.is_involution() {
        return Err(Error::NotInvolutive);
    }
    cfg.require_mutually_nearest()?;
    aab_words(cfg, max_weight)
        .map(|w| {
            let lhs = WordPoly::from_word(w);
            let raw = sym.tau(&lhs)?;
            let rhs = reg_ab(&raw, cfg.a(), cfg.b());
            Ok(Relation {
                regularized: rhs != raw,
                lhs,
                rhs,
                provenance: Provenance::SigmaDuality,
                sigma: Some(m.clone()),
            })
        })
        .collect()
}
