//! Command-line front end.
//!
//! Exit codes: 0 on pass, 1 on verification failure (the JSON report
//! carries a reproducing witness), 2 on usage or configuration errors.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cbi_core::dunkl::{d0, d_alpha, h_y, hidden_symmetry};
use cbi_core::algebra::{involution, k3 as k3_op, multiplication_op};
use cbi_core::family::{bi_polynomials, cbi_polynomials, PolyTable};
use cbi_core::limits::{e_alpha, DualHahnParams};
use cbi_core::ortho::{
    classify_truncation, cbi_weight, positive_even_params, positive_odd_params, spectral_grid,
};
use cbi_core::report::SuiteReport;
use cbi_core::suites;
use cbi_core::{ParamSet, Rat};

#[derive(Parser)]
#[command(
    name = "cbi",
    about = "Exact construction and verification of the complementary Bannai-Ito polynomial family",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a polynomial table (or a weight/grid table) for a family.
    Gen(GenArgs),
    /// Run a verification suite and write its JSON report.
    Verify(VerifyArgs),
    /// Dump an operator's normal form as JSON.
    DumpOp(DumpOpArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Bi,
    Cbi,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    rho1: Option<Rat>,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    rho2: Option<Rat>,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    r1: Option<Rat>,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    r2: Option<Rat>,
}

impl ParamArgs {
    fn params(&self) -> Result<ParamSet, String> {
        match (&self.rho1, &self.rho2, &self.r1, &self.r2) {
            (Some(a), Some(b), Some(c), Some(d)) => {
                Ok(ParamSet::new(a.clone(), b.clone(), c.clone(), d.clone()))
            }
            _ => Err("all four of --rho1 --rho2 --r1 --r2 are required".into()),
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[command(flatten)]
    params: ParamArgs,
    /// Largest degree to generate.
    #[arg(long, default_value_t = 10)]
    n: u32,
    /// Emit the weight/grid table (k, x_k, w_k) of the truncated family of
    /// size n+1 instead of the polynomial table.
    #[arg(long, default_value_t = false)]
    weights: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: eigen | closed-form | kernel | five-term | ortho |
    /// algebra | representations | dual-hahn | hahn | para-krawtchouk |
    /// aw-limit
    suite: String,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Degree bound for sweeps (suite-specific default when omitted).
    #[arg(long)]
    n: Option<u32>,
    /// Number of random parameter draws.
    #[arg(long)]
    sets: Option<u32>,
    /// Number of random deformation values per draw.
    #[arg(long)]
    alphas: Option<u32>,
    #[arg(long, default_value_t = -8)]
    k_lo: i64,
    #[arg(long, default_value_t = 8)]
    k_hi: i64,
    /// Even-case positivity inputs "a,b,c,N" for the ortho suite.
    #[arg(long)]
    even: Option<String>,
    /// Odd-case positivity inputs "zeta,xi,chi,N" for the ortho suite.
    #[arg(long)]
    odd: Option<String>,
    #[command(flatten)]
    params: ParamArgs,
    /// Truncation size for --rho1.. style ortho runs.
    #[arg(long, alias = "N")]
    big_n: Option<u32>,
    /// Para-Krawtchouk shape parameter.
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    gamma: Option<Rat>,
    /// Epsilon ladder for the aw-limit suite, comma separated.
    #[arg(long, default_value = "1e-3,1e-4,1e-5")]
    eps: String,
    /// Write the JSON report here as well as stdout.
    #[arg(long)]
    report: Option<String>,
}

#[derive(Args)]
struct DumpOpArgs {
    /// Operator: d0 | d-alpha | u | h-y | p | k2 | k3 | e0 | e-alpha
    #[arg(long)]
    op: String,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    alpha: Option<Rat>,
    #[arg(long)]
    out: Option<String>,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.parse::<Rat>().map_err(|e| e.to_string())
}

fn emit(text: &str, out: &Option<String>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("writing {path}: {e}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_gen(args: &GenArgs) -> Result<String, String> {
    let p = args.params.params()?;
    if args.weights {
        let tr = classify_truncation(&p, args.n).map_err(|e| e.to_string())?;
        let grid = spectral_grid(&tr, &p);
        let mut rows = vec![];
        for k in 0..=args.n {
            let w = cbi_weight(&tr, &p, k).map_err(|e| e.to_string())?;
            rows.push((k, grid[k as usize].clone(), w));
        }
        return Ok(match args.format {
            Format::Csv => {
                let mut s = String::from("k,x_k,w_k\n");
                for (k, x, w) in rows {
                    s.push_str(&format!("{k},{x},{w}\n"));
                }
                s
            }
            Format::Json => {
                let rows: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|(k, x, w)| {
                        serde_json::json!({"k": k, "x": x.to_string(), "w": w.to_string()})
                    })
                    .collect();
                let mut s = serde_json::to_string_pretty(&rows).unwrap();
                s.push('\n');
                s
            }
        });
    }
    let polys = match args.family {
        Family::Bi => bi_polynomials(&p, args.n),
        Family::Cbi => cbi_polynomials(&p, args.n),
    }
    .map_err(|e| e.to_string())?;
    let table = PolyTable::new(p, &polys);
    Ok(match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&table).unwrap();
            s.push('\n');
            s
        }
        Format::Csv => table.to_csv(),
    })
}

fn parse_positivity_inputs(s: &str) -> Result<(Rat, Rat, Rat, u32), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected four comma-separated values, got {s:?}"));
    }
    let strip = |t: &str| -> String {
        match t.split_once('=') {
            Some((_, v)) => v.trim().to_string(),
            None => t.trim().to_string(),
        }
    };
    let a = parse_rat(&strip(parts[0]))?;
    let b = parse_rat(&strip(parts[1]))?;
    let c = parse_rat(&strip(parts[2]))?;
    let n: u32 = strip(parts[3])
        .parse()
        .map_err(|_| format!("bad N in {s:?}"))?;
    Ok((a, b, c, n))
}

fn parse_eps_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| format!("bad eps {t:?}")))
        .collect()
}

fn run_verify(args: &VerifyArgs) -> Result<SuiteReport, VerifyError> {
    let config_err = |m: String| VerifyError::Config(m);
    let suite_err = |e: cbi_core::Error| VerifyError::Config(e.to_string());
    match args.suite.as_str() {
        "eigen" => suites::run_eigen_suite(
            args.seed,
            args.n.unwrap_or(30),
            args.sets.unwrap_or(5),
            args.alphas.unwrap_or(3),
        )
        .map_err(suite_err),
        "closed-form" => {
            suites::run_closed_form_suite(args.seed, args.n.unwrap_or(10), args.sets.unwrap_or(5))
                .map_err(suite_err)
        }
        "kernel" => {
            suites::run_kernel_suite(args.seed, args.n.unwrap_or(12), args.sets.unwrap_or(5))
                .map_err(suite_err)
        }
        "five-term" => suites::run_five_term_suite(
            args.seed,
            args.n.unwrap_or(12),
            args.k_lo,
            args.k_hi,
        )
        .map_err(suite_err),
        "ortho" => {
            if let Some(even) = &args.even {
                let (a, b, c, n) = parse_positivity_inputs(even).map_err(config_err)?;
                let p = positive_even_params(&a, &b, &c, n).map_err(suite_err)?;
                suites::run_ortho_single(&p, n).map_err(VerifyError::Failure)
            } else if let Some(odd) = &args.odd {
                let (z, x, c, n) = parse_positivity_inputs(odd).map_err(config_err)?;
                let p = positive_odd_params(&z, &x, &c, n).map_err(suite_err)?;
                suites::run_ortho_single(&p, n).map_err(VerifyError::Failure)
            } else if args.params.rho1.is_some() {
                let p = args.params.params().map_err(config_err)?;
                let n = args
                    .big_n
                    .ok_or_else(|| config_err("--big-n is required with explicit parameters".into()))?;
                suites::run_ortho_single(&p, n).map_err(VerifyError::Failure)
            } else {
                suites::run_ortho_suite().map_err(suite_err)
            }
        }
        "algebra" => {
            suites::run_algebra_suite(args.seed, args.sets.unwrap_or(5)).map_err(suite_err)
        }
        "representations" => suites::run_representation_suite().map_err(suite_err),
        "dual-hahn" => {
            suites::run_dual_hahn_suite(args.seed, args.n.unwrap_or(20)).map_err(suite_err)
        }
        "hahn" => {
            let cases = vec![
                (Rat::new(3, 2), Rat::new(1, 4), 2u32),
                (Rat::new(5, 2), Rat::new(2, 3), 4),
                (Rat::new(7, 2), Rat::new(-1, 5), 6),
            ];
            suites::run_hahn_suite(&cases).map_err(suite_err)
        }
        "para-krawtchouk" => {
            let cases = match (&args.big_n, &args.gamma) {
                (Some(n), Some(g)) => vec![(*n, g.clone())],
                _ => vec![(3u32, Rat::new(1, 2)), (5, Rat::new(1, 3))],
            };
            suites::run_para_krawtchouk_suite(&cases).map_err(suite_err)
        }
        "aw-limit" => {
            let p = if args.params.rho1.is_some() {
                args.params.params().map_err(config_err)?
            } else {
                ParamSet::new(Rat::one(), Rat::new(1, 2), Rat::new(1, 4), Rat::new(1, 4))
            };
            let eps = parse_eps_list(&args.eps).map_err(config_err)?;
            suites::run_aw_limit_suite(&p, args.n.unwrap_or(6), &eps).map_err(suite_err)
        }
        other => Err(config_err(format!("unknown suite {other:?}"))),
    }
}

enum VerifyError {
    /// Bad flags or inadmissible configuration: exit 2.
    Config(String),
    /// A suite that ran and failed with a report: exit 1.
    Failure(cbi_core::Error),
}

fn run_dump_op(args: &DumpOpArgs) -> Result<String, String> {
    let need_params = |args: &DumpOpArgs| args.params.params();
    let alpha = args.alpha.clone().unwrap_or_else(Rat::zero);
    let op = match args.op.as_str() {
        "d0" => d0(&need_params(args)?),
        "d-alpha" => d_alpha(&need_params(args)?, &alpha),
        "u" => hidden_symmetry(&need_params(args)?),
        "h-y" => h_y(&need_params(args)?),
        "p" => involution(&need_params(args)?),
        "k2" => multiplication_op(),
        "k3" => k3_op(&need_params(args)?, &alpha),
        "e0" => {
            let p = need_params(args)?;
            e_alpha(
                &DualHahnParams::new(p.rho2.clone(), p.r1.clone(), p.r2.clone()),
                &Rat::zero(),
            )
        }
        "e-alpha" => {
            let p = need_params(args)?;
            e_alpha(
                &DualHahnParams::new(p.rho2.clone(), p.r1.clone(), p.r2.clone()),
                &alpha,
            )
        }
        other => return Err(format!("unknown operator {other:?}")),
    };
    let mut s = serde_json::to_string_pretty(&op.dump()).unwrap();
    s.push('\n');
    Ok(s)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen(args) => match run_gen(&args) {
            Ok(text) => match emit(&text, &args.out) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            },
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Verify(args) => match run_verify(&args) {
            Ok(report) => {
                let text = report.to_json();
                if let Some(path) = &args.report {
                    if let Err(e) = fs::write(path, &text) {
                        eprintln!("error: writing {path}: {e}");
                        return ExitCode::from(2);
                    }
                }
                print!("{text}");
                if report.pass {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(VerifyError::Failure(e)) => {
                // ran but the configuration failed verification (for
                // example a non-truncated parameter set): report + exit 1
                let report = serde_json::json!({
                    "suite": args.suite,
                    "pass": false,
                    "failures": [{"check": "configuration_verification", "detail": e.to_string()}],
                });
                let mut text = serde_json::to_string_pretty(&report).unwrap();
                text.push('\n');
                if let Some(path) = &args.report {
                    let _ = fs::write(path, &text);
                }
                print!("{text}");
                ExitCode::from(1)
            }
            Err(VerifyError::Config(m)) => {
                eprintln!("error: {m}");
                ExitCode::from(2)
            }
        },
        Command::DumpOp(args) => match run_dump_op(&args) {
            Ok(text) => match emit(&text, &args.out) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            },
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
    }
}
