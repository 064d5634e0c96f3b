use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use ehrhart_core::engine::{counter_by_name, mcmullen_report, EhrhartResult, Engine};
use ehrhart_core::geom::Polytope;
use ehrhart_core::io::{
    parse_polytope, qp_from_json, qp_to_json, render_pretty, result_from_json, result_to_json,
};
use ehrhart_core::oracle::{CountMode, Oracle, CAP_ENV_VAR};
use ehrhart_core::quasipoly::{parse_quasi_polynomial, summation_by_name, QuasiPolynomial};
use ehrhart_core::verify::{default_t_max, verify};

/// Exit status for a check that ran and failed, as opposed to bad input (2).
const CHECK_FAILED: u8 = 1;
const BAD_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "ehrhart",
    version,
    about = "Exact Ehrhart quasi-polynomials of rational polytopes"
)]
#[command(after_help = format!("The brute-force counter refuses boxes larger than ${CAP_ENV_VAR} points (default 10000000)."))]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Pretty,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Compute L_P, its reciprocal, the i-indices and the volume
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
        /// Summation strategy: g-basis or interpolation
        #[arg(long, default_value = "g-basis")]
        summation: String,
    },
    /// Check L_P against brute-force counts, reciprocity, L(0) = 1 and coefficient periods
    Verify {
        file: PathBuf,
        /// Largest dilation checked; defaults to 2 · denominator · period within the oracle cap
        #[arg(long)]
        tmax: Option<u64>,
        /// Verify a previously saved machine-format result instead of recomputing
        #[arg(long)]
        cached: Option<PathBuf>,
        #[arg(long, default_value = "g-basis")]
        summation: String,
    },
    /// Print the interior quasi-polynomial (-1)^dim L_P(-t)
    Interior {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Minimal period of each coefficient next to the i-index bounding it
    Periods { file: PathBuf },
    /// Sum a quasi-polynomial: t ↦ f(0) + ... + f(⌊at/b⌋)
    Qsum {
        /// Text or JSON quasi-polynomial; `-` reads stdin
        qp_file: PathBuf,
        a: i64,
        b: i64,
        #[arg(long, default_value = "g-basis")]
        method: String,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Count lattice points of tP for t = 0..=tmax
    Count {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        tmax: u64,
        /// Relative interior instead of the closed polytope
        #[arg(long)]
        interior: bool,
        /// ehrhart or brute-force
        #[arg(long, default_value = "ehrhart")]
        counter: String,
    },
}

fn read(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        return std::io::read_to_string(std::io::stdin()).context("reading stdin");
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_polytope(path: &Path) -> anyhow::Result<Polytope> {
    parse_polytope(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_qp(path: &Path) -> anyhow::Result<QuasiPolynomial> {
    let src = read(path)?;
    let qp = if src.trim_start().starts_with('{') {
        qp_from_json(&src)
    } else {
        parse_quasi_polynomial(&src)
    };
    qp.with_context(|| format!("parsing {}", path.display()))
}

fn compute(p: &Polytope, summation: &str) -> anyhow::Result<EhrhartResult> {
    Ok(Engine::with_summation(summation_by_name(summation)?).compute(p)?)
}

fn print_qp(qp: &QuasiPolynomial, format: Format) {
    match format {
        Format::Pretty => println!("{qp}"),
        Format::Machine => println!("{}", qp_to_json(qp)),
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Compute {
            file,
            format,
            summation,
        } => {
            let r = compute(&load_polytope(&file)?, &summation)?;
            match format {
                Format::Pretty => print!("{}", render_pretty(&r)),
                Format::Machine => println!("{}", result_to_json(&r)),
            }
        }
        Command::Verify {
            file,
            tmax,
            cached,
            summation,
        } => {
            let p = load_polytope(&file)?;
            let r = match cached {
                Some(path) => result_from_json(&read(&path)?)
                    .with_context(|| format!("parsing {}", path.display()))?,
                None => compute(&p, &summation)?,
            };
            if r.ambient_dim != p.ambient_dim() || r.dim != p.dim() {
                bail!(
                    "result is for a {}-dimensional polytope in R^{}",
                    r.dim,
                    r.ambient_dim
                );
            }
            let oracle = Oracle::from_env()?;
            let t = match tmax {
                Some(t) => t,
                None => default_t_max(&p, &r, &oracle)?,
            };
            let report = verify(&p, &r, t, &oracle)?;
            println!("{report}");
            if !report.passed() {
                return Ok(CHECK_FAILED);
            }
        }
        Command::Interior { file, format } => {
            let r = compute(&load_polytope(&file)?, "g-basis")?;
            print_qp(&r.interior_qp, format);
        }
        Command::Periods { file } => {
            let r = compute(&load_polytope(&file)?, "g-basis")?;
            let report = mcmullen_report(&r);
            println!("i  minimal period  i-index");
            for (i, (m, s)) in report
                .minimal_periods
                .iter()
                .zip(&report.i_indices)
                .enumerate()
            {
                println!("{i:<2} {m:<15} {s}");
            }
            for v in &report.violations {
                println!("violation: {v}");
            }
            if !report.is_ok() {
                return Ok(CHECK_FAILED);
            }
        }
        Command::Qsum {
            qp_file,
            a,
            b,
            method,
            format,
        } => {
            let f = load_qp(&qp_file)?;
            print_qp(&summation_by_name(&method)?.sum(&f, a, b)?, format);
        }
        Command::Count {
            file,
            tmax,
            interior,
            counter,
        } => {
            let p = load_polytope(&file)?;
            let mode = if interior {
                CountMode::RelativeInterior
            } else {
                CountMode::Closed
            };
            let counts = counter_by_name(&counter, Oracle::from_env()?)?.counts(&p, tmax, mode)?;
            for (t, c) in counts.iter().enumerate() {
                println!("{t} {c}");
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(BAD_INPUT)
        }
    }
}
