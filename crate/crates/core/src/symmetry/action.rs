use std::collections::BTreeMap;

use rug::Rational;

use crate::algebra::{antipode, Letter, Point, Word, WordPoly};
use crate::error::{Error, Result};

use super::config::SigmaConfig;
use super::mobius::{induced_permutation, ExtendedPoint, MobiusMap};

/// A Möbius map validated against a configuration, with its letter images
/// precomputed.
#[derive(Clone, Debug)]
pub struct Symmetry {
    map: MobiusMap,
    cfg: SigmaConfig,
    perm: BTreeMap<ExtendedPoint, ExtendedPoint>,
    letter_images: BTreeMap<Point, WordPoly>,
}

impl Symmetry {
    pub fn new(map: &MobiusMap, cfg: &SigmaConfig) -> Result<Self> {
        let perm = induced_permutation(map, cfg)?;
        let at_infinity = perm[&ExtendedPoint::Infinity].clone();
        let mut letter_images = BTreeMap::new();
        for c in cfg.points() {
            let mut img = WordPoly::zero();
            if let ExtendedPoint::Finite(p) = &perm[&ExtendedPoint::Finite(c.clone())] {
                img.add_term(Word::letter(p.clone()), Rational::from(1));
            }
            if let ExtendedPoint::Finite(p) = &at_infinity {
                img.add_term(Word::letter(p.clone()), Rational::from(-1));
            }
            letter_images.insert(c.clone(), img);
        }
        Ok(Symmetry {
            map: map.clone(),
            cfg: cfg.clone(),
            perm,
            letter_images,
        })
    }

    pub fn map(&self) -> &MobiusMap {
        &self.map
    }

    pub fn config(&self) -> &SigmaConfig {
        &self.cfg
    }

    pub fn permutation(&self) -> &BTreeMap<ExtendedPoint, ExtendedPoint> {
        &self.perm
    }

    pub fn image(&self, z: &ExtendedPoint) -> &ExtendedPoint {
        &self.perm[z]
    }

    pub fn swaps_a_b(&self) -> bool {
        let a = ExtendedPoint::Finite(self.cfg.a().clone());
        let b = ExtendedPoint::Finite(self.cfg.b().clone());
        self.perm[&a] == b && self.perm[&b] == a
    }

    /// `σ(x_c) = x_{σ(c)} - x_{σ(∞)}`, with `x_∞ = 0`.
    pub fn letter(&self, c: &Point) -> Result<&WordPoly> {
        self.letter_images
            .get(c)
            .ok_or_else(|| Error::UnknownLetter(c.to_string()))
    }

    pub fn word(&self, w: &Word) -> Result<WordPoly> {
        let mut acc = WordPoly::one();
        for l in w.letters() {
            acc = acc.concat(self.letter(l.point())?);
        }
        Ok(acc)
    }

    /// Concatenation-homomorphic extension to polynomials.
    pub fn poly(&self, p: &WordPoly) -> Result<WordPoly> {
        p.try_map_words(|w| self.word(w))
    }

    /// `τ = σ ∘ S`; requires σ to exchange `a` and `b`.
    pub fn tau(&self, p: &WordPoly) -> Result<WordPoly> {
        if !self.swaps_a_b() {
            return Err(Error::NotASwap);
        }
        self.poly(&antipode(p))
    }

    /// `σ(X_c) = X_{σ(c)}` with `X_∞ = -Σ_d X_d`, for each `c ∈ Σ`.
    pub fn dual_alphabet(&self) -> BTreeMap<Point, LinearForm> {
        self.cfg
            .points()
            .iter()
            .map(|c| {
                let form = match &self.perm[&ExtendedPoint::Finite(c.clone())] {
                    ExtendedPoint::Finite(p) => LinearForm::single(p.clone()),
                    ExtendedPoint::Infinity => LinearForm::infinity(&self.cfg),
                };
                (c.clone(), form)
            })
            .collect()
    }
}

/// A formal integer combination `Σ n_c X_c` of the dual letters.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinearForm(pub BTreeMap<Point, i64>);

impl LinearForm {
    pub fn single(p: Point) -> Self {
        LinearForm(BTreeMap::from([(p, 1)]))
    }

    /// `X_∞ = -Σ_{c ∈ Σ} X_c`
    pub fn infinity(cfg: &SigmaConfig) -> Self {
        LinearForm(cfg.points().iter().map(|c| (c.clone(), -1)).collect())
    }

    pub fn coefficient(&self, p: &Point) -> i64 {
        self.0.get(p).copied().unwrap_or(0)
    }
}

pub fn act_on_letter(m: &MobiusMap, c: &Point, cfg: &SigmaConfig) -> Result<WordPoly> {
    Ok(Symmetry::new(m, cfg)?.letter(c)?.clone())
}

pub fn act_on_poly(m: &MobiusMap, p: &WordPoly, cfg: &SigmaConfig) -> Result<WordPoly> {
    Symmetry::new(m, cfg)?.poly(p)
}

pub fn tau(m: &MobiusMap, p: &WordPoly, cfg: &SigmaConfig) -> Result<WordPoly> {
    Symmetry::new(m, cfg)?.tau(p)
}

pub fn act_on_dual_alphabet(m: &MobiusMap, cfg: &SigmaConfig) -> Result<BTreeMap<Point, LinearForm>> {
    Ok(Symmetry::new(m, cfg)?.dual_alphabet())
}

/// Closed form of an involution exchanging `a` and `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionForm {
    /// `σ(z) = a + b - z`, when `σ(∞) = ∞`.
    Reflection,
    /// `σ(z) = α - (α - a)(α - b)/(α - z)` with `α = σ(∞)`.
    Inversion { alpha: Point },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionClass {
    pub image_of_infinity: ExtendedPoint,
    pub form: InvolutionForm,
}

impl InvolutionClass {
    /// Evaluates the closed form exactly.
    pub fn eval(&self, a: &Point, b: &Point, z: &ExtendedPoint) -> ExtendedPoint {
        match (&self.form, z) {
            (InvolutionForm::Reflection, ExtendedPoint::Infinity) => ExtendedPoint::Infinity,
            (InvolutionForm::Reflection, ExtendedPoint::Finite(z)) => {
                ExtendedPoint::Finite(&(a + b) - z)
            }
            (InvolutionForm::Inversion { alpha }, ExtendedPoint::Infinity) => {
                ExtendedPoint::Finite(alpha.clone())
            }
            (InvolutionForm::Inversion { alpha }, ExtendedPoint::Finite(z)) => {
                let num = &(alpha - a) * &(alpha - b);
                match num.checked_div(&(alpha - z)) {
                    Some(q) => ExtendedPoint::Finite(alpha - &q),
                    None => ExtendedPoint::Infinity,
                }
            }
        }
    }
}

/// Reports `σ(∞)` and verifies the closed form on every point of Σ ∪ {∞}.
pub fn classify_involution(m: &MobiusMap, cfg: &SigmaConfig) -> Result<InvolutionClass> {
    let sym = Symmetry::new(m, cfg)?;
    if !sym.swaps_a_b() {
        return Err(Error::NotASwap);
    }
    if !m.is_involution() {
        return Err(Error::NotInvolutive);
    }
    let image_of_infinity = m.image_of_infinity();
    let form = match &image_of_infinity {
        ExtendedPoint::Infinity => InvolutionForm::Reflection,
        ExtendedPoint::Finite(alpha) => InvolutionForm::Inversion { alpha: alpha.clone() },
    };
    let class = InvolutionClass {
        image_of_infinity,
        form,
    };
    for (z, image) in sym.permutation() {
        if class.eval(cfg.a(), cfg.b(), z) != *image {
            return Err(Error::NotInvolutive);
        }
    }
    Ok(class)
}

impl From<&Letter> for ExtendedPoint {
    fn from(l: &Letter) -> Self {
        ExtendedPoint::Finite(l.point().clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{shuffle, shuffle_poly, words_up_to};

    fn p(v: i64) -> Point {
        Point::from_int(v)
    }

    fn wp(pts: &[Point]) -> WordPoly {
        WordPoly::from_word(Word::from_points(pts.iter().cloned()))
    }

    fn level4() -> (SigmaConfig, Symmetry) {
        let cfg = SigmaConfig::roots_of_unity(4).unwrap();
        let sym = Symmetry::new(&MobiusMap::cayley(), &cfg).unwrap();
        (cfg, sym)
    }

    #[test]
    fn letter_images_of_the_worked_examples() {
        let cfg = SigmaConfig::mzv();
        let img = act_on_letter(&MobiusMap::reflection_one(), &p(0), &cfg).unwrap();
        assert_eq!(img, wp(&[p(1)]));

        let (cfg, _) = level4();
        let c = MobiusMap::cayley();
        assert_eq!(act_on_letter(&c, &p(0), &cfg).unwrap(), &wp(&[p(1)]) - &wp(&[p(-1)]));
        assert_eq!(act_on_letter(&c, &p(1), &cfg).unwrap(), &wp(&[p(0)]) - &wp(&[p(-1)]));
        assert_eq!(act_on_letter(&c, &p(-1), &cfg).unwrap(), -&wp(&[p(-1)]));
        assert_eq!(
            act_on_letter(&c, &Point::i(), &cfg).unwrap(),
            &wp(&[Point::gaussian(0, -1)]) - &wp(&[p(-1)])
        );
    }

    #[test]
    fn poly_action_cases() {
        let cfg = SigmaConfig::mzv();
        let r = MobiusMap::reflection_one();
        assert_eq!(act_on_poly(&r, &wp(&[p(0), p(1)]), &cfg).unwrap(), wp(&[p(1), p(0)]));
        assert_eq!(act_on_poly(&r, &WordPoly::one(), &cfg).unwrap(), WordPoly::one());
        let (_, sym) = level4();
        let once = sym.poly(&wp(&[p(0)])).unwrap();
        assert_eq!(sym.poly(&once).unwrap(), wp(&[p(0)]));
    }

    #[test]
    fn tau_cases() {
        let cfg = SigmaConfig::mzv();
        let r = MobiusMap::reflection_one();
        assert_eq!(tau(&r, &wp(&[p(0), p(1)]), &cfg).unwrap(), wp(&[p(0), p(1)]));
        assert_eq!(tau(&r, &wp(&[p(0), p(1), p(1)]), &cfg).unwrap(), -&wp(&[p(0), p(0), p(1)]));
        assert_eq!(
            tau(&MobiusMap::identity(), &wp(&[p(0)]), &cfg),
            Err(Error::NotASwap)
        );
        let (_, sym) = level4();
        // τ(x_i) = -x_{-i} + x_{-1}
        assert_eq!(
            sym.tau(&wp(&[Point::i()])).unwrap(),
            &wp(&[p(-1)]) - &wp(&[Point::gaussian(0, -1)])
        );
    }

    #[test]
    fn classification() {
        let cfg = SigmaConfig::mzv();
        let class = classify_involution(&MobiusMap::reflection_one(), &cfg).unwrap();
        assert_eq!(class.image_of_infinity, ExtendedPoint::Infinity);
        assert_eq!(class.form, InvolutionForm::Reflection);

        let (cfg, _) = level4();
        let class = classify_involution(&MobiusMap::cayley(), &cfg).unwrap();
        assert_eq!(class.image_of_infinity, ExtendedPoint::Finite(p(-1)));
        assert_eq!(class.form, InvolutionForm::Inversion { alpha: p(-1) });
        for z in cfg.points() {
            let z = ExtendedPoint::Finite(z.clone());
            assert_eq!(class.eval(cfg.a(), cfg.b(), &z), MobiusMap::cayley().apply(&z));
        }

        assert_eq!(
            classify_involution(&MobiusMap::identity(), &SigmaConfig::mzv()),
            Err(Error::NotASwap)
        );
    }

    #[test]
    fn dual_alphabet() {
        let cfg = SigmaConfig::mzv();
        let d = act_on_dual_alphabet(&MobiusMap::reflection_one(), &cfg).unwrap();
        assert_eq!(d[&p(0)], LinearForm::single(p(1)));
        let d = act_on_dual_alphabet(&MobiusMap::identity(), &cfg).unwrap();
        assert_eq!(d[&p(1)], LinearForm::single(p(1)));

        let (cfg, sym) = level4();
        let d = sym.dual_alphabet();
        assert_eq!(d[&p(-1)], LinearForm::infinity(&cfg));
        for c in cfg.points() {
            assert_eq!(d[&p(-1)].coefficient(c), -1);
        }
        assert_eq!(d[&Point::i()], LinearForm::single(Point::gaussian(0, -1)));
    }

    #[test]
    fn action_is_shuffle_homomorphism_on_level4() {
        let (cfg, sym) = level4();
        let words = words_up_to(cfg.points(), 3);
        for u in &words {
            for v in &words {
                if u.weight() + v.weight() > 3 {
                    continue;
                }
                let lhs = sym.poly(&shuffle(u, v)).unwrap();
                let rhs = shuffle_poly(
                    &sym.poly(&WordPoly::from_word(u.clone())).unwrap(),
                    &sym.poly(&WordPoly::from_word(v.clone())).unwrap(),
                );
                assert_eq!(lhs, rhs, "{u} ⧢ {v}");
            }
        }
    }

    #[test]
    fn involutive_action_and_tau() {
        let (cfg, sym) = level4();
        for w in words_up_to(cfg.points(), 4) {
            let poly = WordPoly::from_word(w.clone());
            assert_eq!(sym.poly(&sym.poly(&poly).unwrap()).unwrap(), poly);
            assert_eq!(sym.tau(&sym.tau(&poly).unwrap()).unwrap(), poly);
        }
        let words = words_up_to(cfg.points(), 2);
        for u in &words {
            for v in &words {
                let uv = WordPoly::from_word(u.concat(v));
                let tu = sym.tau(&WordPoly::from_word(u.clone())).unwrap();
                let tv = sym.tau(&WordPoly::from_word(v.clone())).unwrap();
                assert_eq!(sym.tau(&uv).unwrap(), tv.concat(&tu));
            }
        }
    }
}
