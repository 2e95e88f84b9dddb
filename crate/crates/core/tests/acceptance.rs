//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use polylog_core::algebra::words_up_to;
use polylog_core::numeric::{li_ab, mzv, BigComplex, PrecisionContext};
use polylog_core::reg::in_aab;
use polylog_core::relations::{
    associator_inverse_check, duality_pairs, euler_inversion_check, shuffle_relation_check,
    sigma_duality_pairs, verify, VerificationReport,
};
use polylog_core::{MobiusMap, Point, SigmaConfig, Word, WordPoly};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rug::{Float, Rational};

type Outcome = Result<String, String>;

fn ctx(tol: f64) -> PrecisionContext {
    PrecisionContext::default().with_target_tol(tol).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn three_points() -> SigmaConfig {
    SigmaConfig::new(vec![pt(0), pt(1), pt(-1)], pt(1), pt(0)).unwrap()
}

fn float_dist(x: &BigComplex, re: &Float, im: &Float) -> f64 {
    let dr = Float::with_val(P, x.re() - re);
    let di = Float::with_val(P, x.im() - im);
    dr.hypot(&di).to_f64()
}

fn zero() -> Float {
    Float::new(P)
}

fn duality_report(cfg: &SigmaConfig, w: &Word, ctx: &PrecisionContext) -> Result<VerificationReport, String> {
    let rels = duality_pairs(cfg, w.weight()).map_err(|e| e.to_string())?;
    let lhs = WordPoly::from_word(w.clone());
    let rel = rels.iter().find(|r| r.lhs == lhs).ok_or("relation missing")?;
    verify(rel, cfg, ctx).map_err(|e| e.to_string())
}

fn c1_symbolic() -> Outcome {
    let t = exhaustive_algebra(5)?;
    Ok(format!("{} words, {} pairs, {} triples", t.words, t.pairs, t.triples))
}

fn c2_zeta2() -> Outcome {
    let z = mzv(&[2], &ctx(1e-12)).map_err(|e| e.to_string())?;
    let pi = pi();
    let exact = Float::with_val(P, &pi * &pi) / 6u32;
    let d = float_dist(&z.value, &exact, &zero());
    ensure(d < 1e-10, || format!("|Δ| = {d:e}"))?;
    Ok(format!("|Δ| = {d:.1e}"))
}

/// Set by criterion 3 when its only failure is the stated pair
/// `ζ(3,1) = ζ(2,1,1)`, which the duality formula does not give.
static KNOWN_CONFLICT: std::sync::atomic::AtomicBool = std::sync::atomic::AtomicBool::new(false);

fn c3_mzv_duality() -> Outcome {
    let ctx = ctx(1e-10);
    let ev = |k: &[u32]| mzv(k, &ctx).map_err(|e| e.to_string());
    let d1 = ev(&[2, 1])?.value.dist(&ev(&[3])?.value);
    ensure(d1 < 1e-8, || format!("|ζ(2,1) - ζ(3)| = {d1:e}"))?;
    let d2 = ev(&[3, 1])?.value.dist(&ev(&[2, 1, 1])?.value);
    if d2 < 1e-8 {
        return Ok(format!("ζ(2,1)-ζ(3): {d1:.1e}, ζ(3,1)-ζ(2,1,1): {d2:.1e}"));
    }
    // ζ(a+1, 1^{b-1}) = ζ(b+1, 1^{a-1}): ζ(3,1) is self-dual and
    // ζ(2,1,1) pairs with ζ(4).
    let z4 = ev(&[4])?.value;
    let d3 = ev(&[2, 1, 1])?.value.dist(&z4);
    let pi = pi();
    let pi4 = Float::with_val(P, &pi * &pi).square();
    let d4 = float_dist(&ev(&[3, 1])?.value, &(pi4 / 360u32), &zero());
    if d3 < 1e-8 && d4 < 1e-8 {
        KNOWN_CONFLICT.store(true, std::sync::atomic::Ordering::SeqCst);
    }
    Err(format!(
        "ζ(2,1)-ζ(3): {d1:.1e}; stated pair ζ(3,1)-ζ(2,1,1) = {d2:.4e} is not a duality pair \
         (known conflict: ζ(2,1,1)-ζ(4) = {d3:.1e}, ζ(3,1)-π^4/360 = {d4:.1e})"
    ))
}

fn c4_dilog_inversion() -> Outcome {
    let cfg = SigmaConfig::mzv();
    let ctx = ctx(1e-12);
    let mut worst: f64 = 0.0;
    for (p, q) in [(1, 3), (1, 2), (2, 3)] {
        let z = BigComplex::from_point(P, &Point::real(Rational::from((p, q))));
        let rep = euler_inversion_check(&word(&[0, 1]), &z, &cfg, &ctx).map_err(|e| e.to_string())?;
        ensure(rep.abs_residual < 1e-10, || format!("z = {p}/{q}: residual {:e}", rep.abs_residual))?;
        worst = worst.max(rep.abs_residual);
    }
    Ok(format!("max residual {worst:.1e}"))
}

fn c5_ex1() -> Outcome {
    let rep = duality_report(&three_points(), &word(&[-1]), &ctx(1e-12))?;
    let l = ln2();
    let dl = float_dist(&rep.lhs_value, &l, &zero());
    let dr = float_dist(&rep.rhs_value, &l, &zero());
    ensure(dl < 1e-10 && dr < 1e-10, || format!("|lhs - log 2| = {dl:e}, |rhs - log 2| = {dr:e}"))?;
    Ok(format!("|lhs - log 2| = {dl:.1e}, |rhs - log 2| = {dr:.1e}"))
}

fn c6_ex2() -> Outcome {
    let rep = duality_report(&three_points(), &word(&[0, 1, -1]), &ctx(1e-10))?;
    // The two printed sums are -ℒ^{10}(w) and -ℒ^{01}(S(w)).
    let lhs = -rep.lhs_value.re().to_f64();
    let rhs = -rep.rhs_value.re().to_f64();
    let d = (lhs - rhs).abs();
    ensure(d < 1e-8, || format!("|lhs - rhs| = {d:e}"))?;
    let lhs_oracle = richardson(alternating_double_sum, 100_000, 1);
    let rhs_oracle = half_power_double_sum(100_000);
    let dl = (lhs - lhs_oracle).abs();
    let dr = (rhs - rhs_oracle).abs();
    ensure(dl < 1e-8 && dr < 1e-8, || format!("oracle gaps {dl:e}, {dr:e}"))?;
    Ok(format!("lhs = {lhs:.12}, |lhs - rhs| = {d:.1e}, oracle gaps {dl:.1e}, {dr:.1e}"))
}

fn c7_level_four() -> Outcome {
    let cfg = SigmaConfig::roots_of_unity(4).map_err(|e| e.to_string())?;
    let rels = sigma_duality_pairs(&MobiusMap::cayley(), &cfg, 2).map_err(|e| e.to_string())?;
    let ctx = ctx(1e-12);
    let mut worst: f64 = 0.0;
    for rel in &rels {
        let rep = verify(rel, &cfg, &ctx).map_err(|e| e.to_string())?;
        ensure(rep.abs_residual < 1e-6, || format!("{} = {}: residual {:e}", rel.lhs, rel.rhs, rep.abs_residual))?;
        worst = worst.max(rep.abs_residual);
    }
    let xi = WordPoly::from_word(Word::letter(Point::i()));
    let rel = rels.iter().find(|r| r.lhs == xi).ok_or("x_i relation missing")?;
    let rep = verify(rel, &cfg, &ctx).map_err(|e| e.to_string())?;
    // log(1+i) = log(2)/2 + iπ/4
    let re = ln2() / 2u32;
    let im = pi() / 4u32;
    let dl = float_dist(&rep.lhs_value, &re, &im);
    let dr = float_dist(&rep.rhs_value, &re, &im);
    ensure(dl < 1e-10 && dr < 1e-10, || format!("log(1+i) gaps {dl:e}, {dr:e}"))?;
    Ok(format!("{} relations, max residual {worst:.1e}, log(1+i) gaps {dl:.1e}, {dr:.1e}", rels.len()))
}

fn c8_associator() -> Outcome {
    let reports = associator_inverse_check(&MobiusMap::reflection_one(), &SigmaConfig::mzv(), 4, &ctx(1e-12))
        .map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for (w, rep) in &reports {
        ensure(rep.abs_residual < 1e-8, || format!("{w}: residual {:e}", rep.abs_residual))?;
        worst = worst.max(rep.abs_residual);
    }
    Ok(format!("{} words, max residual {worst:.1e}", reports.len()))
}

fn c9_group_like() -> Outcome {
    let cfg = SigmaConfig::mzv();
    let ctx = ctx(1e-10);
    let words: Vec<Word> = words_up_to(cfg.points(), 4)
        .into_iter()
        .filter(|w| in_aab(w, cfg.a(), cfg.b()))
        .collect();
    let mut count = 0;
    let mut worst: f64 = 0.0;
    for u in &words {
        for v in &words {
            if u.weight() + v.weight() > 4 {
                continue;
            }
            let rep = shuffle_relation_check(u, v, &cfg, &ctx).map_err(|e| e.to_string())?;
            ensure(rep.abs_residual < 1e-7, || format!("{u} ⧢ {v}: residual {:e}", rep.abs_residual))?;
            worst = worst.max(rep.abs_residual);
            count += 1;
        }
    }
    Ok(format!("{count} pairs, max residual {worst:.1e}"))
}

fn c10_derivative() -> Outcome {
    let cfg = three_points();
    let ctx = ctx(1e-26);
    let mut rng = StdRng::seed_from_u64(7);
    let letters = cfg.points().to_vec();
    let eval = |p: &WordPoly, z: &BigComplex| li_ab(p, z, &cfg, &ctx).map(|e| e.value).map_err(|e| e.to_string());
    let mut worst_rel: f64 = 0.0;
    let mut orders = Vec::new();
    for _ in 0..10 {
        let n = rng.gen_range(1..=3);
        let w = Word::from_points((0..n).map(|_| letters[rng.gen_range(0..letters.len())].clone()));
        let c = w.first().unwrap().point().clone();
        let tail = WordPoly::from_word(w.slice(1, n));
        let full = WordPoly::from_word(w.clone());
        let (r, theta) = (rng.gen_range(0.15..0.5), rng.gen_range(0.0..std::f64::consts::TAU));
        let z = BigComplex::from_f64(P, r * theta.cos(), r * theta.sin());
        let exact = &eval(&tail, &z)? / &(&z - &BigComplex::from_point(P, &c));
        let diff = |h: f64| -> Result<f64, String> {
            let hc = BigComplex::from_f64(P, h, 0.0);
            let fd = &(&eval(&full, &(&z + &hc))? - &eval(&full, &(&z - &hc))?) / &BigComplex::from_f64(P, 2.0 * h, 0.0);
            Ok(fd.dist(&exact) / exact.abs_f64())
        };
        let (e1, e2) = (diff(1e-4)?, diff(5e-5)?);
        ensure(e1 < 1e-5, || format!("{w} at {z:.6}: relative error {e1:e}"))?;
        worst_rel = worst_rel.max(e1);
        if e1 > 1e-14 {
            let ratio = e1 / e2;
            ensure((3.5..4.5).contains(&ratio), || format!("{w} at {z:.6}: refinement ratio {ratio}"))?;
            orders.push(ratio);
        }
    }
    let mean = orders.iter().sum::<f64>() / orders.len().max(1) as f64;
    Ok(format!(
        "10 samples, max relative error {worst_rel:.1e}, mean h-refinement ratio {mean:.3} over {}",
        orders.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Option<u64>, fn() -> Outcome); 10] = [
        ("symbolic exhaustive suite, weight <= 5", Some(60), c1_symbolic),
        ("zeta(2) = pi^2/6", Some(5), c2_zeta2),
        ("MZV duality", Some(30), c3_mzv_duality),
        ("dilogarithm inversion", Some(10), c4_dilog_inversion),
        ("alternating duality, weight 1", None, c5_ex1),
        ("alternating duality, weight 3", None, c6_ex2),
        ("level-4 sigma duality", None, c7_level_four),
        ("associator inverse", Some(120), c8_associator),
        ("group-likeness of Phi", None, c9_group_like),
        ("derivative relation", None, c10_derivative),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(secs)) if elapsed > Duration::from_secs(secs) => {
                Err(format!("took {:.1}s, limit {secs}s", elapsed.as_secs_f64()))
            }
            (o, _) => o,
        };
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                if !(i == 2 && KNOWN_CONFLICT.load(std::sync::atomic::Ordering::SeqCst)) {
                    failed += 1;
                }
                ("FAIL", d)
            }
        };
        println!("{tag} [{:>2}] {name}: {detail} ({:.2}s)", i + 1, elapsed.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed unexpectedly");
        ExitCode::FAILURE
    }
}
