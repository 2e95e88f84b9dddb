//! The `polylog` command line: shuffle, reg, dualize, eval, verify and
//! relations over a configurable singular set.

pub mod config;
pub mod relfile;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use polylog_core::algebra::{antipode, shuffle_poly};
use polylog_core::literal::{parse_index_list, parse_point, parse_points, parse_poly, parse_word, parse_words};
use polylog_core::numeric::{lambda_eval, li_ab, mzv, LambdaArgs};
use polylog_core::reg::{reg_ab, reg_b};
use polylog_core::relations::{
    duality_pairs, euler_inversion_check, l_ab_poly, sigma_duality_pairs, sigma_euler_inversion_check,
    verify_all, Relation, VerificationReport,
};
use polylog_core::symmetry::Symmetry;
use polylog_core::{BigComplex, Estimate, PrecisionContext, SigmaConfig, WordPoly};

use config::{AccelerationName, RunConfig, PRECISION_ENV};
use relfile::{parse_relation_file, RelationDocument, RelationRecord};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] polylog_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "polylog", version, about = "Shuffle algebra, regularization and multiple polylogarithm relations")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// JSON run configuration; flags override its values.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Singular set as comma-separated points, e.g. "0, 1, -1".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub sigma: Option<String>,
    /// The point a (the limit point).
    #[arg(long = "point-a", global = true, allow_hyphen_values = true)]
    pub point_a: Option<String>,
    /// The point b (the base point).
    #[arg(long = "point-b", global = true, allow_hyphen_values = true)]
    pub point_b: Option<String>,
    #[arg(long, global = true)]
    pub precision_bits: Option<u32>,
    #[arg(long = "truncation-m", global = true)]
    pub truncation_m: Option<u64>,
    #[arg(long, global = true)]
    pub target_tol: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub acceleration: Option<AccelerationName>,
    /// Mobius map "p,q,r,s" for z -> (pz + q)/(rz + s).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub sigma_map: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Dual,
    SigmaDual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Shuffle product of word literals, e.g. `shuffle "[0] [1]"`.
    Shuffle {
        #[arg(required = true, allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// reg^b or reg^ab of a word or polynomial.
    #[command(group(ArgGroup::new("which").required(true).args(["b", "ab"])))]
    Reg {
        #[arg(long)]
        b: bool,
        #[arg(long)]
        ab: bool,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// The dual side: S(w) (read with a and b exchanged) or reg^ab(τ(w)).
    Dualize {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value = "dual")]
        mode: Mode,
    },
    /// Numerical value with its error bound.
    #[command(group(ArgGroup::new("what").required(true).args(["word", "mzv", "lambda"])))]
    Eval {
        /// ℒ^{ab}(reg^{ab}(w)), or Li^{ab}(w; z) with --z.
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        /// Multiple zeta value, e.g. 2,1.
        #[arg(long)]
        mzv: Option<String>,
        /// λ(s; b) as "s1,s2;b1,b2".
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
    },
    /// Verifies relations numerically; exit code 1 if any fails.
    Verify {
        #[arg(long, conflicts_with_all = ["word", "relations"])]
        max_weight: Option<usize>,
        /// Euler inversion for this word at --z.
        #[arg(long, requires = "z", allow_hyphen_values = true)]
        word: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        #[arg(long, value_name = "FILE", conflicts_with = "word")]
        relations: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "dual")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "text")]
        out: OutFormat,
    },
    /// Lists the generated relations (JSON output includes their values).
    Relations {
        #[arg(long)]
        max_weight: Option<usize>,
        #[arg(long, value_enum, default_value = "dual")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "text")]
        out: OutFormat,
    },
}

impl GlobalOpts {
    fn resolve(&self) -> Result<RunConfig, CliError> {
        let env = std::env::var(PRECISION_ENV).ok();
        let mut cfg = RunConfig::load(self.config.as_deref(), env.as_deref())?;
        if let Some(s) = &self.sigma {
            cfg.sigma = parse_points(s)?.iter().map(ToString::to_string).collect();
        }
        if let Some(a) = &self.point_a {
            cfg.a = a.clone();
        }
        if let Some(b) = &self.point_b {
            cfg.b = b.clone();
        }
        if let Some(v) = self.precision_bits {
            cfg.precision_bits = v;
        }
        if let Some(v) = self.truncation_m {
            cfg.truncation_m = v;
        }
        if let Some(v) = self.target_tol {
            cfg.target_tol = v;
        }
        if let Some(v) = self.acceleration {
            cfg.acceleration = v;
        }
        if let Some(m) = &self.sigma_map {
            let map = polylog_core::literal::parse_mobius(m)?;
            cfg.sigma_map = Some(map.entries().map(ToString::to_string));
        }
        Ok(cfg)
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Errors go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn word_or_poly(s: &str) -> Result<WordPoly, CliError> {
    if s.trim_start().starts_with('[') {
        Ok(WordPoly::from_word(parse_word(s)?))
    } else {
        Ok(parse_poly(s)?)
    }
}

fn point_z(s: &str, ctx: &PrecisionContext) -> Result<BigComplex, CliError> {
    Ok(BigComplex::from_point(ctx.precision_bits(), &parse_point(s)?))
}

/// Significant digits for `value` so that the last two digits are below
/// `tol`.
fn digits_for(value: &BigComplex, tol: f64) -> usize {
    let mag = value.abs_f64();
    let lead = if mag > 0.0 { mag.log10().floor() as i64 + 1 } else { 1 };
    let frac = (-tol.log10()).ceil() as i64;
    (lead + frac + 2).clamp(3, 200) as usize
}

pub fn format_value(value: &BigComplex, tol: f64) -> String {
    value.to_sci(digits_for(value, tol))
}

fn format_estimate(e: &Estimate, tol: f64) -> String {
    format!("{} ± {tol:e}", format_value(&e.value, tol))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    let run = cli.global.resolve()?;
    match &cli.command {
        Command::Shuffle { words } => {
            let mut all = Vec::new();
            for w in words {
                all.extend(parse_words(w)?);
            }
            let product = all
                .into_iter()
                .fold(WordPoly::one(), |acc, w| shuffle_poly(&acc, &WordPoly::from_word(w)));
            writeln!(out, "{product}")?;
            Ok(EXIT_OK)
        }
        Command::Reg { b, ab, word } => {
            let cfg = run.sigma_config()?;
            let p = word_or_poly(word)?;
            let r = match (b, ab) {
                (true, _) => reg_b(&p, cfg.b()),
                _ => reg_ab(&p, cfg.a(), cfg.b()),
            };
            writeln!(out, "{r}")?;
            Ok(EXIT_OK)
        }
        Command::Dualize { word, mode } => {
            let cfg = run.sigma_config()?;
            let p = word_or_poly(word)?;
            let dual = match mode {
                Mode::Dual => antipode(&p),
                Mode::SigmaDual => {
                    let m = run
                        .mobius()?
                        .ok_or_else(|| CliError::Input("sigma-dual needs --sigma-map".into()))?;
                    reg_ab(&Symmetry::new(&m, &cfg)?.tau(&p)?, cfg.a(), cfg.b())
                }
            };
            writeln!(out, "{dual}")?;
            Ok(EXIT_OK)
        }
        Command::Eval { word, mzv: indices, lambda, z } => {
            let ctx = run.context()?;
            let tol = ctx.target_tol();
            let est = if let Some(k) = indices {
                mzv(&parse_index_list(k)?, &ctx)?
            } else if let Some(spec) = lambda {
                let (s, b) = spec
                    .split_once(';')
                    .ok_or_else(|| CliError::Input("--lambda expects \"s1,s2;b1,b2\"".into()))?;
                let bvals = parse_points(b)?
                    .iter()
                    .map(|p| BigComplex::from_point(ctx.precision_bits(), p))
                    .collect();
                lambda_eval(&LambdaArgs { s: parse_index_list(s)?, bvals }, &ctx)?
            } else {
                let cfg = run.sigma_config()?;
                let p = word_or_poly(word.as_deref().expect("group is required"))?;
                match z {
                    Some(z) => li_ab(&p, &point_z(z, &ctx)?, &cfg, &ctx)?,
                    None => l_ab_poly(&p, &cfg, &ctx)?,
                }
            };
            writeln!(out, "{}", format_estimate(&est, tol))?;
            Ok(EXIT_OK)
        }
        Command::Verify { max_weight, word, z, relations, mode, out: format } => {
            let ctx = run.context()?;
            if let Some(w) = word {
                let cfg = run.sigma_config()?;
                let w = parse_word(w)?;
                let z_lit = z.as_deref().expect("required by clap");
                let z = point_z(z_lit, &ctx)?;
                let report = match (mode, run.mobius()?) {
                    (Mode::SigmaDual, Some(m)) => sigma_euler_inversion_check(&m, &w, &z, &cfg, &ctx)?,
                    (Mode::SigmaDual, None) => return Err(CliError::Input("sigma-dual needs --sigma-map".into())),
                    (Mode::Dual, _) => euler_inversion_check(&w, &z, &cfg, &ctx)?,
                };
                let label = format!("inversion sum for {w} at z = {}", z_lit.trim());
                let rel = Relation {
                    lhs: WordPoly::from_word(w.clone()),
                    rhs: WordPoly::from_word(w),
                    provenance: polylog_core::relations::Provenance::EulerInversion,
                    sigma: None,
                    regularized: false,
                };
                return emit(out, *format, &cfg, &[rel], Some(vec![label]), vec![Ok(report)], &ctx);
            }
            let (cfg, rels) = match relations {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
                    let file = parse_relation_file(&text)?;
                    let mut run = run.clone();
                    if let Some((sigma, a, b)) = file.sigma {
                        run.sigma = sigma;
                        run.a = a;
                        run.b = b;
                    }
                    (run.sigma_config()?, file.relations)
                }
                None => {
                    let cfg = run.sigma_config()?;
                    let n = max_weight.unwrap_or(run.max_weight);
                    let rels = generate(&run, &cfg, n, *mode)?;
                    (cfg, rels)
                }
            };
            let reports = verify_all(&rels, &cfg, &ctx);
            emit(out, *format, &cfg, &rels, None, reports, &ctx)
        }
        Command::Relations { max_weight, mode, out: format } => {
            let cfg = run.sigma_config()?;
            let n = max_weight.unwrap_or(run.max_weight);
            let rels = generate(&run, &cfg, n, *mode)?;
            match format {
                OutFormat::Text => {
                    for r in &rels {
                        let note = if r.regularized { "  # regularized" } else { "" };
                        writeln!(out, "{} = {} ; {}{note}", r.lhs, r.rhs, r.provenance)?;
                    }
                    Ok(EXIT_OK)
                }
                OutFormat::Json => {
                    let ctx = run.context()?;
                    let reports = verify_all(&rels, &cfg, &ctx);
                    emit(out, OutFormat::Json, &cfg, &rels, None, reports, &ctx)
                }
            }
        }
    }
}

fn generate(run: &RunConfig, cfg: &SigmaConfig, n: usize, mode: Mode) -> Result<Vec<Relation>, CliError> {
    Ok(match mode {
        Mode::Dual => duality_pairs(cfg, n)?,
        Mode::SigmaDual => {
            let m = run
                .mobius()?
                .ok_or_else(|| CliError::Input("sigma-dual needs --sigma-map".into()))?;
            sigma_duality_pairs(&m, cfg, n)?
        }
    })
}

fn emit(
    out: &mut dyn Write,
    format: OutFormat,
    cfg: &SigmaConfig,
    rels: &[Relation],
    labels: Option<Vec<String>>,
    reports: Vec<polylog_core::Result<VerificationReport>>,
    ctx: &PrecisionContext,
) -> Result<u8, CliError> {
    let tol = ctx.target_tol();
    let failed = reports.iter().filter(|r| !matches!(r, Ok(rep) if rep.passed)).count();
    match format {
        OutFormat::Text => {
            let labels = labels.unwrap_or_else(|| rels.iter().map(|r| format!("{} = {}", r.lhs, r.rhs)).collect());
            for ((rel, rep), label) in rels.iter().zip(&reports).zip(&labels) {
                match rep {
                    Ok(rep) => writeln!(
                        out,
                        "{}  residual {:.2e}  tol {:.1e}  {label}  [{}]",
                        if rep.passed { "PASS" } else { "FAIL" },
                        rep.abs_residual,
                        rep.tol_used,
                        rel.provenance,
                    )?,
                    Err(e) => writeln!(out, "FAIL  {label}  [{}]  error: {e}", rel.provenance)?,
                }
            }
            writeln!(out, "{} relations, {failed} failed", rels.len())?;
        }
        OutFormat::Json => {
            let doc = RelationDocument {
                sigma: cfg.points().iter().map(ToString::to_string).collect(),
                a: cfg.a().to_string(),
                b: cfg.b().to_string(),
                relations: rels
                    .iter()
                    .zip(&reports)
                    .map(|(rel, rep)| {
                        let rep = rep.as_ref().ok();
                        RelationRecord {
                            lhs: rel.lhs.to_string(),
                            rhs: rel.rhs.to_string(),
                            provenance: rel.provenance.to_string(),
                            lhs_value: rep.map(|r| format_value(&r.lhs_value, tol)),
                            rhs_value: rep.map(|r| format_value(&r.rhs_value, tol)),
                            residual: rep.map(|r| r.abs_residual),
                            passed: Some(rep.is_some_and(|r| r.passed)),
                        }
                    })
                    .collect(),
            };
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
}
