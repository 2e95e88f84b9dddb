mod common;

use common::{pt, word, P};
use polylog_core::algebra::{shuffle, words_up_to};
use polylog_core::numeric::{l_ab, li_ab, li_b, mzv, BigComplex, PrecisionContext};
use polylog_core::reg::in_aab;
use polylog_core::relations::{
    duality_pairs, shuffle_relation_check, sigma_duality_pairs, verify, verify_all,
};
use polylog_core::{MobiusMap, SigmaConfig, Word, WordPoly};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn ctx(tol: f64) -> PrecisionContext {
    PrecisionContext::default().with_target_tol(tol).unwrap()
}

fn three_points() -> SigmaConfig {
    SigmaConfig::new(vec![pt(0), pt(1), pt(-1)], pt(1), pt(0)).unwrap()
}

fn aab_words(cfg: &SigmaConfig, n: usize) -> Vec<Word> {
    words_up_to(cfg.points(), n)
        .into_iter()
        .filter(|w| in_aab(w, cfg.a(), cfg.b()))
        .collect()
}

#[test]
fn li_is_a_shuffle_homomorphism_off_the_axis() {
    let cfg = SigmaConfig::mzv();
    let ctx = ctx(1e-12);
    let words = words_up_to(cfg.points(), 3);
    let mut pairs: Vec<(&Word, &Word)> = words
        .iter()
        .flat_map(|u| words.iter().map(move |v| (u, v)))
        .filter(|(u, v)| u.weight() + v.weight() <= 4)
        .collect();
    pairs.shuffle(&mut StdRng::seed_from_u64(11));
    for z in [BigComplex::from_f64(P, 0.5, 0.1), BigComplex::from_f64(P, 0.5, -0.1)] {
        for (u, v) in pairs.iter().take(40) {
            let eval = |p: &WordPoly| li_ab(p, &z, &cfg, &ctx).unwrap().value;
            let product = &eval(&WordPoly::from_word((*u).clone())) * &eval(&WordPoly::from_word((*v).clone()));
            let of_shuffle = eval(&shuffle(u, v));
            assert!(product.dist(&of_shuffle) < 10.0 * ctx.target_tol(), "{u} ⧢ {v} at {z:.4}");
        }
    }
}

#[test]
fn li_tends_to_the_limit_value() {
    let ctx = ctx(1e-12);
    let cases = [
        (SigmaConfig::mzv(), word(&[0, 1])),
        (SigmaConfig::mzv(), word(&[0, 1, 1])),
        (SigmaConfig::mzv(), word(&[0, 0, 1])),
        (three_points(), word(&[-1])),
        (three_points(), word(&[0, -1])),
    ];
    for (cfg, w) in cases {
        let limit = l_ab(&w, &cfg, &ctx).unwrap().value;
        let mut last = f64::INFINITY;
        for t in [0.9, 0.99, 0.999] {
            let z = BigComplex::from_f64(P, t, 0.0);
            let gap = li_ab(&WordPoly::from_word(w.clone()), &z, &cfg, &ctx).unwrap().value.dist(&limit);
            assert!(gap < last, "{w}: gap {gap:e} at t = {t} did not shrink");
            last = gap;
        }
        assert!(last < 0.05, "{w}: gap {last:e} at t = 0.999");
    }
}

#[test]
fn limit_values_are_shuffle_homomorphic() {
    for cfg in [SigmaConfig::mzv(), three_points()] {
        let ctx = ctx(1e-11);
        let words = aab_words(&cfg, 3);
        for u in &words {
            for v in &words {
                if u.weight() + v.weight() > 3 {
                    continue;
                }
                let rep = shuffle_relation_check(u, v, &cfg, &ctx).unwrap();
                assert!(rep.passed, "{u} ⧢ {v}: {rep:?}");
            }
        }
    }
}

#[test]
fn tightening_moves_values_less_than_the_old_tolerance() {
    let tol = 1e-9;
    let loose = ctx(tol);
    let tight = loose.with_target_tol(tol / 2.0).unwrap().with_truncation(2 * loose.truncation_m()).unwrap();
    let z = BigComplex::from_f64(P, 0.7, 0.2);
    let evals: Vec<Box<dyn Fn(&PrecisionContext) -> BigComplex>> = vec![
        Box::new(|c| mzv(&[3], c).unwrap().value),
        Box::new(|c| mzv(&[2, 1, 1], c).unwrap().value),
        Box::new(|c| l_ab(&word(&[-1]), &three_points(), c).unwrap().value),
        Box::new(|c| l_ab(&word(&[0, 1, -1]), &three_points(), c).unwrap().value),
        Box::new(move |c| li_b(&word(&[0, 1, -1]), &z, &three_points(), c).unwrap().value),
    ];
    for (i, f) in evals.iter().enumerate() {
        let d = f(&loose).dist(&f(&tight));
        assert!(d < tol, "case {i}: moved by {d:e}");
    }
}

#[test]
fn reported_errors_are_within_the_target() {
    let ctx = ctx(1e-10);
    for k in [&[2u32][..], &[3], &[2, 1], &[3, 1], &[2, 2]] {
        let e = mzv(k, &ctx).unwrap();
        assert!(e.error <= ctx.target_tol(), "ζ{k:?}: error {:e}", e.error);
    }
}

#[test]
fn antipode_and_reflection_dualities_agree() {
    let cfg = SigmaConfig::mzv();
    let ctx = ctx(1e-11);
    let anti = duality_pairs(&cfg, 4).unwrap();
    let refl = sigma_duality_pairs(&MobiusMap::reflection_one(), &cfg, 4).unwrap();
    assert_eq!(anti.len(), refl.len());
    for (r, s) in anti.iter().zip(&refl) {
        assert_eq!(r.lhs, s.lhs);
        let a = verify(r, &cfg, &ctx).unwrap().rhs_value;
        let b = verify(s, &cfg, &ctx).unwrap().rhs_value;
        assert!(a.dist(&b) < 10.0 * ctx.target_tol(), "{}", r.lhs);
    }
}

#[test]
fn generated_relations_verify_on_three_points() {
    let cfg = three_points();
    let ctx = ctx(1e-10);
    let rels = duality_pairs(&cfg, 3).unwrap();
    for (rel, rep) in rels.iter().zip(verify_all(&rels, &cfg, &ctx)) {
        let rep = rep.unwrap();
        assert!(rep.passed, "{} = {}: {rep:?}", rel.lhs, rel.rhs);
    }
}

#[test]
fn generated_relations_verify_on_level_four() {
    let cfg = SigmaConfig::roots_of_unity(4).unwrap();
    let ctx = ctx(1e-10);
    let mut rels = duality_pairs(&cfg, 3).unwrap();
    rels.extend(sigma_duality_pairs(&MobiusMap::cayley(), &cfg, 3).unwrap());
    for (rel, rep) in rels.iter().zip(verify_all(&rels, &cfg, &ctx)) {
        let rep = rep.unwrap();
        assert!(rep.passed, "{} = {}: {rep:?}", rel.lhs, rel.rhs);
    }
}
