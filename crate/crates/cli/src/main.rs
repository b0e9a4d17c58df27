//! Command-line driver: constructs the amalgam for a prime pair, runs the
//! verification suites, evaluates words, and computes the exact rational
//! invariants. JSON is the canonical machine format; text output is a
//! rendering of the same data.
//!
//! Exit codes are a stable contract: 0 pass, 1 counterexample found,
//! 2 usage error, 3 resource cap exceeded, 4 word fingerprint mismatch.

use amalgam_core::counting::{self, CountingInstance};
use amalgam_core::error::Error as CoreError;
use amalgam_core::euler;
use amalgam_core::verify::{self, VerificationReport, VerifyConfig};
use amalgam_core::{AmalgamContext, AmalgamParams};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "amalgam",
    version,
    about = "Construct and verify two-prime local-group amalgams with exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct ContextOpts {
    /// First odd prime (side A extends an extraspecial q-group by order p)
    #[arg(long)]
    p: u64,
    /// Second odd prime
    #[arg(long)]
    q: u64,
    /// Seed pinning the acting-matrix search and all sampling
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Refuse factors larger than this
    #[arg(long = "size-cap", default_value_t = 1_000_000)]
    size_cap: u64,
    /// Directory for cached acting matrices (default: user cache dir)
    #[arg(long = "cache-dir")]
    cache_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write the primary output to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClaimArg {
    SelfNormalizing,
    Intersection,
    Isolated,
    Torsion,
    Generation,
    GenerationConjugate,
    Perfect,
    CentralizerProbe,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build both factors and the glued context; print the derived data
    Construct {
        #[command(flatten)]
        ctx: ContextOpts,
    },
    /// Run a verification suite and exit 0 (pass) or 1 (counterexample)
    Verify {
        #[command(flatten)]
        ctx: ContextOpts,
        #[arg(long, value_enum)]
        claim: ClaimArg,
        /// Trials for the sampled suites (default 10000; the conjugate
        /// generation variant defaults to 100, the centralizer probe to 1000)
        #[arg(long)]
        samples: Option<u64>,
        /// Maximum letters of sampled words
        #[arg(long = "max-letters", default_value_t = 6)]
        max_letters: u32,
    },
    /// Canonical word arithmetic on serialized words
    Word {
        #[command(flatten)]
        ctx: ContextOpts,
        #[command(subcommand)]
        op: WordCmd,
    },
    /// Exact Euler characteristic of the amalgam
    Chi {
        #[command(flatten)]
        params: ParamOpts,
    },
    /// Rank of a free subgroup of the given index
    Rank {
        #[command(flatten)]
        params: ParamOpts,
        /// Subgroup index; must be a multiple of |P||Q|
        #[arg(long)]
        index: String,
    },
    /// Exact counting bound for the finite-case contradiction
    Counting {
        /// Sweep all ordered pairs of distinct odd primes up to this bound
        #[arg(long)]
        grid: Option<u64>,
        #[arg(long, required_unless_present = "grid")]
        p: Option<u64>,
        #[arg(long, required_unless_present = "grid")]
        q: Option<u64>,
        /// Sylow p-order (default p³)
        #[arg(long = "size-p")]
        size_p: Option<String>,
        /// Sylow q-order (default q³)
        #[arg(long = "size-q")]
        size_q: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ParamOpts {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    q: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum WordCmd {
    /// Parse a word (tolerating non-canonical letters) and print its
    /// canonical form
    Reduce { word: String },
    /// Print the order of a word: an integer or "infinite"
    Order { word: String },
    /// Multiply two words
    Mul { left: String, right: String },
}

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_FINGERPRINT: u8 = 4;

fn error_exit(e: &CoreError) -> u8 {
    match e {
        CoreError::SizeCap { .. }
        | CoreError::SearchExhausted { .. }
        | CoreError::ClosureCapExceeded { .. } => EXIT_RESOURCE,
        CoreError::FingerprintMismatch { .. } => EXIT_FINGERPRINT,
        _ => EXIT_USAGE,
    }
}

fn default_cache_dir() -> PathBuf {
    if let Ok(x) = std::env::var("XDG_CACHE_HOME") {
        return PathBuf::from(x).join("amalgam");
    }
    if let Ok(home) = std::env::var("HOME") {
        return PathBuf::from(home).join(".cache").join("amalgam");
    }
    PathBuf::from(".amalgam-cache")
}

fn emit(output: Option<&Path>, payload: &str) -> std::io::Result<()> {
    match output {
        Some(path) => std::fs::write(path, payload),
        None => {
            println!("{payload}");
            Ok(())
        }
    }
}

fn build_context(opts: &ContextOpts) -> Result<AmalgamContext, CoreError> {
    let params = AmalgamParams::new(opts.p, opts.q)?;
    let cache = opts.cache_dir.clone().unwrap_or_else(default_cache_dir);
    AmalgamContext::build(&params, opts.seed, Some(&cache), opts.size_cap)
}

#[derive(Serialize)]
struct ConstructSummary {
    p: u64,
    q: u64,
    m: usize,
    n: usize,
    order_q: String,
    order_p: String,
    order_a: String,
    order_b: String,
    order_c: u64,
    matrix_fingerprint_a: String,
    matrix_fingerprint_b: String,
    transversal_a: u32,
    transversal_b: u32,
    context_fingerprint: String,
}

fn run_construct(opts: &ContextOpts) -> Result<u8, CoreError> {
    let ctx = build_context(opts)?;
    let p = &ctx.params;
    let summary = ConstructSummary {
        p: p.p,
        q: p.q,
        m: p.m,
        n: p.n,
        order_q: p.order_q().to_string(),
        order_p: p.order_p().to_string(),
        order_a: p.order_a().to_string(),
        order_b: p.order_b().to_string(),
        order_c: p.order_c(),
        matrix_fingerprint_a: format!("{:016x}", ctx.factor_a.matrix.fingerprint()),
        matrix_fingerprint_b: format!("{:016x}", ctx.factor_b.matrix.fingerprint()),
        transversal_a: ctx.transversal_len(amalgam_core::Side::A),
        transversal_b: ctx.transversal_len(amalgam_core::Side::B),
        context_fingerprint: ctx.fingerprint_hex(),
    };
    let payload = match opts.format {
        OutputFormat::Json => serde_json::to_string_pretty(&summary)?,
        _ => format!(
            "p={} q={} m={} n={}\n|Q|={} |P|={} |A|={} |B|={} |C|={}\n\
             acting matrix A: {}\nacting matrix B: {}\n\
             transversals: {} cosets in A, {} in B\nfingerprint: {}",
            summary.p,
            summary.q,
            summary.m,
            summary.n,
            summary.order_q,
            summary.order_p,
            summary.order_a,
            summary.order_b,
            summary.order_c,
            summary.matrix_fingerprint_a,
            summary.matrix_fingerprint_b,
            summary.transversal_a,
            summary.transversal_b,
            summary.context_fingerprint,
        ),
    };
    emit(opts.output.as_deref(), &payload)?;
    Ok(0)
}

fn render_reports(reports: &[VerificationReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(reports).expect("reports serialize"),
        _ => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&format!(
                    "{} {} mode={} trials={} failures={} ({} ms)\n",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.claim,
                    r.mode,
                    r.trials,
                    r.fail_count,
                    r.duration_ms
                ));
                for n in &r.notes {
                    out.push_str(&format!("    note: {n}\n"));
                }
                for f in &r.fail {
                    out.push_str(&format!("    counterexample: {f}\n"));
                }
            }
            out.trim_end().to_string()
        }
    }
}

fn run_verify(
    opts: &ContextOpts,
    claim: ClaimArg,
    samples: Option<u64>,
    max_letters: u32,
) -> Result<u8, CoreError> {
    let ctx = build_context(opts)?;
    let mut cfg = VerifyConfig {
        seed: opts.seed,
        max_letters,
        ..VerifyConfig::default()
    };
    if let Some(s) = samples {
        cfg.samples = s;
        cfg.conjugate_samples = s;
        cfg.probe_samples = s;
    }
    let reports = match claim {
        ClaimArg::SelfNormalizing => vec![verify::verify_self_normalizing_c(&ctx, &cfg)],
        ClaimArg::Intersection => vec![verify::verify_prime_intersection(&ctx, &cfg)],
        ClaimArg::Isolated => vec![verify::verify_isolated(&ctx, &cfg)],
        ClaimArg::Torsion => vec![verify::verify_torsion_classification(&ctx, &cfg)],
        ClaimArg::Generation => vec![verify::verify_generation(&ctx)],
        ClaimArg::GenerationConjugate => {
            vec![verify::verify_generation_conjugate(&ctx, &cfg)]
        }
        ClaimArg::Perfect => vec![verify::verify_perfectness(&ctx)],
        ClaimArg::CentralizerProbe => {
            let w = verify::default_probe_word(&ctx);
            vec![verify::probe_centralizer(&ctx, &w, &cfg)?]
        }
        ClaimArg::All => verify::run_all(&ctx, &cfg),
    };
    emit(
        opts.output.as_deref(),
        &render_reports(&reports, opts.format),
    )?;
    Ok(if reports.iter().all(|r| r.passed()) {
        0
    } else {
        EXIT_COUNTEREXAMPLE
    })
}

fn run_word(opts: &ContextOpts, op: &WordCmd) -> Result<u8, CoreError> {
    let ctx = build_context(opts)?;
    let load = |raw: &str| -> Result<amalgam_core::AmalgamWord, CoreError> {
        let content = match raw.strip_prefix('@') {
            Some(path) => std::fs::read_to_string(path)?,
            None => raw.to_string(),
        };
        ctx.word_from_json(content.trim())
    };
    let payload = match op {
        WordCmd::Reduce { word } => ctx.word_to_json(&load(word)?),
        WordCmd::Order { word } => ctx.element_order(&load(word)?).to_string(),
        WordCmd::Mul { left, right } => {
            ctx.word_to_json(&ctx.multiply(&load(left)?, &load(right)?))
        }
    };
    emit(opts.output.as_deref(), &payload)?;
    Ok(0)
}

fn run_chi(params: &ParamOpts) -> Result<u8, CoreError> {
    let p = AmalgamParams::new(params.p, params.q)?;
    let chi = euler::euler_characteristic(&p);
    let payload = match params.format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct ChiOut<'a> {
                params: &'a AmalgamParams,
                chi: &'a amalgam_core::ExactRational,
            }
            serde_json::to_string_pretty(&ChiOut {
                params: &p,
                chi: &chi,
            })?
        }
        _ => chi.to_string(),
    };
    emit(params.output.as_deref(), &payload)?;
    Ok(0)
}

fn run_rank(params: &ParamOpts, index: &str) -> Result<u8, CoreError> {
    let p = AmalgamParams::new(params.p, params.q)?;
    let index: BigUint = index
        .parse()
        .map_err(|_| CoreError::InvalidParameter(format!("index {index:?} is not an integer")))?;
    let res = euler::free_rank_of_index(&p, &index)?;
    let payload = match params.format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct RankOut<'a> {
                params: &'a AmalgamParams,
                index: String,
                rank: String,
                chi: &'a amalgam_core::ExactRational,
                variant_formula: &'a amalgam_core::ExactRational,
                variant_matches: bool,
            }
            serde_json::to_string_pretty(&RankOut {
                params: &p,
                index: index.to_string(),
                rank: res.rank.to_string(),
                chi: &res.chi,
                variant_formula: &res.variant_formula,
                variant_matches: res.variant_matches,
            })?
        }
        _ => format!(
            "rank = {}\nchi = {}\nvariant formula = {}{}",
            res.rank,
            res.chi,
            res.variant_formula,
            if res.variant_matches {
                ""
            } else {
                "  [DISAGREES with the chi-derived rank]"
            }
        ),
    };
    emit(params.output.as_deref(), &payload)?;
    Ok(0)
}

fn run_counting(
    grid: Option<u64>,
    p: Option<u64>,
    q: Option<u64>,
    size_p: Option<&str>,
    size_q: Option<&str>,
    format: OutputFormat,
    output: Option<&Path>,
) -> Result<u8, CoreError> {
    let parse_size = |s: Option<&str>, what: &str| -> Result<Option<BigUint>, CoreError> {
        s.map(|v| {
            v.parse()
                .map_err(|_| CoreError::InvalidParameter(format!("{what} {v:?} is not an integer")))
        })
        .transpose()
    };
    if let Some(bound) = grid {
        let rows = counting::grid_sweep(bound);
        let all_true = rows.iter().all(|r| r.verdict);
        let payload = match format {
            OutputFormat::Json => serde_json::to_string_pretty(&rows)?,
            OutputFormat::Csv => counting::grid_csv(&rows).trim_end().to_string(),
            OutputFormat::Text => {
                let mut out = format!(
                    "{} pairs swept up to {bound}: {}\n",
                    rows.len(),
                    if all_true {
                        "all verdicts TRUE"
                    } else {
                        "COUNTEREXAMPLE FOUND"
                    }
                );
                for r in rows.iter().filter(|r| !r.verdict) {
                    out.push_str(&format!("  FALSE at p={} q={}\n", r.p, r.q));
                }
                out.trim_end().to_string()
            }
        };
        emit(output, &payload)?;
        return Ok(if all_true { 0 } else { EXIT_COUNTEREXAMPLE });
    }

    let (p, q) = (p.expect("required by clap"), q.expect("required by clap"));
    let inst = match (parse_size(size_p, "size-p")?, parse_size(size_q, "size-q")?) {
        (Some(sp), Some(sq)) => CountingInstance::new(p, q, sp, sq)?,
        (None, None) => CountingInstance::minimal(p, q)?,
        (sp, sq) => CountingInstance::new(
            p,
            q,
            sp.unwrap_or_else(|| BigUint::from(p).pow(3)),
            sq.unwrap_or_else(|| BigUint::from(q).pow(3)),
        )?,
    };
    let fraction = counting::accounted_fraction(&inst);
    let (verdict, excess) = counting::check_contradiction(&inst);
    let payload = match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct CountOut<'a> {
                p: u64,
                q: u64,
                size_p: String,
                size_q: String,
                accounted: &'a counting::AccountedFraction,
                excess: &'a amalgam_core::ExactRational,
                verdict: bool,
            }
            serde_json::to_string_pretty(&CountOut {
                p,
                q,
                size_p: inst.size_p.to_string(),
                size_q: inst.size_q.to_string(),
                accounted: &fraction,
                excess: &excess,
                verdict,
            })?
        }
        OutputFormat::Csv => format!(
            "p,q,sizeP,sizeQ,excess_num,excess_den,verdict\n{},{},{},{},{},{},{}",
            p,
            q,
            inst.size_p,
            inst.size_q,
            excess.numer(),
            excess.denom(),
            if verdict { "TRUE" } else { "FALSE" }
        ),
        OutputFormat::Text => format!(
            "accounted fraction = {}\nexcess over 1 = {}\nverdict: {}",
            fraction.total,
            excess,
            if verdict {
                "TRUE (contradiction)"
            } else {
                "FALSE"
            }
        ),
    };
    emit(output, &payload)?;
    Ok(if verdict { 0 } else { EXIT_COUNTEREXAMPLE })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Construct { ctx } => run_construct(ctx),
        Cmd::Verify {
            ctx,
            claim,
            samples,
            max_letters,
        } => run_verify(ctx, *claim, *samples, *max_letters),
        Cmd::Word { ctx, op } => run_word(ctx, op),
        Cmd::Chi { params } => run_chi(params),
        Cmd::Rank { params, index } => run_rank(params, index),
        Cmd::Counting {
            grid,
            p,
            q,
            size_p,
            size_q,
            format,
            output,
        } => run_counting(
            *grid,
            *p,
            *q,
            size_p.as_deref(),
            size_q.as_deref(),
            *format,
            output.as_deref(),
        ),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit(&e))
        }
    }
}
