//! `parahopf`: normal forms, Hopf-axiom suites and Fock-space oracle runs.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use parahopf::bosonization::{
    antipode_forms_agree, bosonise_from_general, check_inner_grading, check_quasitriangularity_g, BosonisedG,
    KExtension,
};
use parahopf::braided_hopf::{check_hopf_axioms, SuperParaboson};
use parahopf::report::Report;
use parahopf::representations::{
    run_oracle, OracleConfig, RepresentationError, DEFAULT_DIMENSION_CAP, DIMENSION_CAP_ENV,
};
use parahopf::rewriting::{AlgebraContext, AlgebraKind, RewriteError};
use parahopf::{parse_element, representations::k_relations_symbolic};

use output::{emit, Format};

const EXIT_FAILURE: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_FOREIGN: u8 = 3;
const EXIT_OVERFLOW: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "parahopf", version, about = "Exact paraboson algebra: normal forms, Hopf axioms, Fock oracle")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    output: Format,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Ctx {
    Free,
    Boson,
    Pb,
    Pbg,
    Pbk,
}

impl Ctx {
    fn kind(self) -> AlgebraKind {
        match self {
            Ctx::Free => AlgebraKind::Free,
            Ctx::Boson => AlgebraKind::Boson,
            Ctx::Pb => AlgebraKind::Paraboson,
            Ctx::Pbg => AlgebraKind::ParabosonG,
            Ctx::Pbk => AlgebraKind::ParabosonK,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form of an expression.
    Nf {
        #[arg(long, value_enum)]
        ctx: Ctx,
        expr: String,
    },
    /// Run the Hopf axiom suite for a context.
    Verify {
        #[arg(long, value_enum)]
        ctx: Ctx,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 2)]
        max_index: u32,
        /// Also check the R-matrix of the bosonised algebra (pbg only).
        #[arg(long)]
        quasitriangular: bool,
    },
    /// Build a Green-ansatz Fock representation and run every numerical check.
    Oracle {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        cutoff: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        casimir_mmax: u32,
        /// Random words per context.
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Longest sampled word (capped at cutoff - 1).
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        #[arg(long, env = DIMENSION_CAP_ENV, default_value_t = DEFAULT_DIMENSION_CAP)]
        dim_cap: usize,
    },
}

#[derive(Serialize)]
struct VerifyConfig {
    command: &'static str,
    context: Ctx,
    max_len: usize,
    max_index: u32,
    quasitriangular: bool,
}

#[derive(Serialize)]
struct OracleEcho<'a> {
    command: &'static str,
    #[serde(flatten)]
    config: &'a OracleConfig,
    effective_max_len: usize,
}

#[derive(Serialize)]
struct NfConfig<'a> {
    command: &'static str,
    context: Ctx,
    expr: &'a str,
}

#[derive(Serialize)]
struct NfResult {
    normal_form: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_CONFIG)
        }
    }
}

fn run(cli: &Cli) -> std::io::Result<u8> {
    match &cli.command {
        Command::Nf { ctx, expr } => {
            let parsed = match parse_element(expr) {
                Ok(e) => e,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(EXIT_CONFIG);
                }
            };
            match AlgebraContext::new(ctx.kind()).normal_form(&parsed) {
                Ok(nf) => {
                    let config = NfConfig { command: "nf", context: *ctx, expr };
                    output::emit_value(cli, &config, &NfResult { normal_form: nf.to_string() }, &nf.to_string())?;
                    Ok(0)
                }
                Err(e @ RewriteError::ForeignLetter { .. }) => {
                    eprintln!("error: {e}");
                    Ok(EXIT_FOREIGN)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(EXIT_FAILURE)
                }
            }
        }
        Command::Verify { ctx, max_len, max_index, quasitriangular } => {
            if *max_len < 1 || *max_index < 1 {
                eprintln!("error: --max-len and --max-index must be at least 1");
                return Ok(EXIT_CONFIG);
            }
            if *quasitriangular && *ctx != Ctx::Pbg {
                eprintln!("error: --quasitriangular applies to --ctx pbg only");
                return Ok(EXIT_CONFIG);
            }
            let report = match ctx {
                Ctx::Pb => check_hopf_axioms(&SuperParaboson, *max_len, *max_index),
                Ctx::Pbg => {
                    let mut r = check_hopf_axioms(&BosonisedG, *max_len, *max_index);
                    r.extend(bosonise_from_general(*max_len, *max_index));
                    r.extend(antipode_forms_agree(*max_index));
                    r.extend(check_inner_grading(AlgebraKind::ParabosonG, *max_len, *max_index));
                    if *quasitriangular {
                        r.extend(check_quasitriangularity_g(*max_len, *max_index));
                    }
                    r.with_context("pbg")
                }
                Ctx::Pbk => {
                    let mut r = check_hopf_axioms(&KExtension, *max_len, *max_index);
                    r.extend(check_inner_grading(AlgebraKind::ParabosonK, *max_len, *max_index));
                    r.extend(k_relations_symbolic(*max_index));
                    r.with_context("pbk")
                }
                Ctx::Free | Ctx::Boson => {
                    eprintln!("error: no Hopf structure is defined for --ctx {}", ctx.kind());
                    return Ok(EXIT_CONFIG);
                }
            };
            let config = VerifyConfig {
                command: "verify",
                context: *ctx,
                max_len: *max_len,
                max_index: *max_index,
                quasitriangular: *quasitriangular,
            };
            finish(cli, &config, &report)
        }
        Command::Oracle { n, p, cutoff, seed, casimir_mmax, samples, max_len, dim_cap } => {
            let config = OracleConfig {
                n: *n,
                p: *p,
                cutoff: *cutoff,
                seed: *seed,
                samples: *samples,
                max_len: *max_len,
                casimir_mmax: *casimir_mmax,
                dimension_cap: *dim_cap,
            };
            match run_oracle(&config) {
                Ok(report) => {
                    let echo = OracleEcho {
                        command: "oracle",
                        config: &config,
                        effective_max_len: config.effective_max_len(),
                    };
                    finish(cli, &echo, &report)
                }
                Err(e @ RepresentationError::DimensionOverflow { .. }) => {
                    eprintln!("error: {e}");
                    Ok(EXIT_OVERFLOW)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(EXIT_CONFIG)
                }
            }
        }
    }
}

fn finish<T: Serialize>(cli: &Cli, config: &T, report: &Report) -> std::io::Result<u8> {
    emit(cli.output, cli.out.as_deref(), config, report)?;
    Ok(if report.all_passed() { 0 } else { EXIT_FAILURE })
}
