use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde_json::{Map, Value};
use thiserror::Error;

use queer_howe::cache::OpCache;
use queer_howe::coord_alg::coord_report;
use queer_howe::duality::{census_report, classical_crosscheck, fixture_report, howe_verify, sergeev_check};
use queer_howe::hecke_clifford::{hc_check, hc_tensor_action, zero_weight_hc};
use queer_howe::report::VerifyReport;
use queer_howe::scalars::EqualityMode;
use queer_howe::uq_queer::{check_defining_relations, tensor_rep, vector_rep, Param, QueerRep};

const MAX_N: usize = 4;
const MAX_M: usize = 5;
const MAX_DEGREE: usize = 4;
/// Largest `V^{⊗m}` on which the Sergeev suite solves for commutants.
const FULL_SERGEEV_DIM: usize = 36;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Relations,
    Hc,
    Sergeev,
    Howe,
    Coord,
    Fixture,
    Classical,
    Census,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParamArg {
    Q,
    Qinv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Prob,
}

/// Exact verification suites for the quantum queer superalgebra and its
/// dualities.
#[derive(Debug, Parser)]
#[command(name = "queer-howe", version)]
struct Cli {
    /// Suite to run.
    #[arg(value_enum, required_unless_present = "all", conflicts_with = "all")]
    suite: Option<Suite>,
    /// Rank of the queer algebra.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Tensor power, or the second rank for howe/coord.
    #[arg(long, default_value_t = 2)]
    m: usize,
    /// Degree bound for howe/coord.
    #[arg(long, default_value_t = 2)]
    degree: usize,
    #[arg(long, value_enum, default_value = "q")]
    param: ParamArg,
    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,
    /// Sample points in probabilistic mode.
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Operator cache directory.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Run the desk-scale battery.
    #[arg(long)]
    all: bool,
    /// Write the machine-derived values of the run to this file.
    #[arg(long)]
    write_expectations: Option<PathBuf>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("unsupported scale: {0}")]
    UnsupportedScale(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("{0}")]
    Suite(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone)]
struct RunConfig {
    n: usize,
    m: usize,
    degree: usize,
    param: Param,
    mode: EqualityMode,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        if cli.n == 0 || cli.m == 0 {
            return Err(CliError::InvalidConfig("n and m must be positive".into()));
        }
        let mode = match cli.mode {
            ModeArg::Exact => EqualityMode::Exact,
            ModeArg::Prob => {
                let trials = cli.trials.unwrap_or(5);
                if trials == 0 {
                    return Err(CliError::InvalidConfig("probabilistic mode needs --trials >= 1".into()));
                }
                EqualityMode::Probabilistic { trials, seed: cli.seed.unwrap_or(0) }
            }
        };
        if cli.n > MAX_N || cli.m > MAX_M || cli.degree > MAX_DEGREE {
            return Err(CliError::UnsupportedScale(format!(
                "n={} m={} degree={} (limits n<={MAX_N}, m<={MAX_M}, degree<={MAX_DEGREE})",
                cli.n, cli.m, cli.degree
            )));
        }
        let param = match cli.param {
            ParamArg::Q => Param::Q,
            ParamArg::Qinv => Param::QInv,
        };
        Ok(RunConfig { n: cli.n, m: cli.m, degree: cli.degree, param, mode })
    }
}

struct Runner {
    cache: Option<OpCache>,
}

impl Runner {
    fn rep(&self, n: usize, m: usize, param: Param) -> QueerRep {
        match &self.cache {
            Some(c) => c.tensor_rep(n, m, param),
            None => tensor_rep(&vector_rep(n, param), m),
        }
    }

    fn run(&self, suite: Suite, cfg: &RunConfig) -> Result<VerifyReport, CliError> {
        let err = |e: &dyn std::fmt::Display| CliError::Suite(e.to_string());
        let RunConfig { n, m, degree, param, mode } = cfg.clone();
        let report = match suite {
            Suite::Relations => {
                let mut r = check_defining_relations(&self.rep(n, m, param), mode);
                r.param("m", m);
                r
            }
            Suite::Hc => {
                let start = Instant::now();
                let hc = match &self.cache {
                    Some(c) => c.hc_action(n, m, param),
                    None => hc_tensor_action(n, m, param),
                };
                let mut r = hc_check(&hc);
                r.param("n", n);
                if m == n {
                    let zw = zero_weight_hc(&self.rep(n, n, param)).map_err(|e| err(&e))?;
                    r.absorb("zero weight: ", hc_check(&zw));
                }
                r.finish(start);
                r
            }
            Suite::Sergeev => {
                let hc = match &self.cache {
                    Some(c) => c.hc_action(n, m, param),
                    None => hc_tensor_action(n, m, param),
                };
                let full = (2 * n).pow(m as u32) <= FULL_SERGEEV_DIM;
                sergeev_check(&self.rep(n, m, param), &hc, mode, full).map_err(|e| err(&e))?
            }
            Suite::Howe => howe_verify(n, m, degree, param).map_err(|e| err(&e))?,
            Suite::Coord => coord_report(n, m, degree, param).map_err(|e| err(&e))?,
            Suite::Fixture => fixture_report().map_err(|e| err(&e))?,
            Suite::Classical => classical_crosscheck(n, m).map_err(|e| err(&e))?,
            Suite::Census => census_report(n, m, param).map_err(|e| err(&e))?,
        };
        Ok(report)
    }
}

/// The desk-scale battery: every suite at the sizes the acceptance list names.
fn battery() -> Vec<(Suite, RunConfig)> {
    let c = |n, m, degree| RunConfig { n, m, degree, param: Param::Q, mode: EqualityMode::Exact };
    let mut out = Vec::new();
    for (n, m) in [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)] {
        out.push((Suite::Relations, c(n, m, 0)));
    }
    for (n, m) in [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4)] {
        out.push((Suite::Hc, c(n, m, 0)));
    }
    for (n, m) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
        out.push((Suite::Sergeev, c(n, m, 0)));
    }
    for (n, m) in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)] {
        out.push((Suite::Census, c(n, m, 0)));
    }
    out.push((Suite::Fixture, c(2, 2, 0)));
    out.push((Suite::Coord, c(2, 2, 2)));
    out.push((Suite::Howe, c(1, 1, 2)));
    out.push((Suite::Howe, c(2, 2, 2)));
    for (n, m) in [(1, 2), (2, 2), (2, 3)] {
        out.push((Suite::Classical, c(n, m, 0)));
    }
    out
}

fn tag(suite: Suite, cfg: &RunConfig) -> String {
    let name = suite.to_possible_value().expect("named").get_name().to_string();
    match suite {
        Suite::Fixture => name,
        Suite::Howe | Suite::Coord => format!("{name}[n={},m={},l<={}]", cfg.n, cfg.m, cfg.degree),
        _ => format!("{name}[n={},m={}]", cfg.n, cfg.m),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match real_main(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn real_main(cli: &Cli) -> Result<bool, CliError> {
    let cfg = RunConfig::from_cli(cli)?;
    let runner = Runner {
        cache: cli.cache.as_ref().map(OpCache::new).transpose()?,
    };
    let report = if cli.all {
        let start = Instant::now();
        let mut all = VerifyReport::new("all");
        for (suite, c) in battery() {
            let r = runner.run(suite, &c)?;
            eprintln!("{:<28} {}", tag(suite, &c), if r.passed() { "pass" } else { "FAIL" });
            all.absorb(&format!("{}: ", tag(suite, &c)), r);
        }
        all.finish(start);
        all
    } else {
        let suite = cli.suite.expect("clap enforces a suite");
        runner.run(suite, &cfg)?
    };
    for c in report.failures() {
        eprintln!("FAIL {}{}", c.name, c.witness.as_ref().map(|w| format!(" ({w})")).unwrap_or_default());
    }
    let json = serde_json::to_string_pretty(&report).map_err(|e| CliError::Suite(e.to_string()))?;
    match &cli.report {
        Some(path) => fs::write(path, json + "\n")?,
        None => println!("{json}"),
    }
    if let Some(path) = &cli.write_expectations {
        let mut doc = Map::new();
        doc.insert(
            "_note".into(),
            Value::from("machine-derived by queer-howe; regenerate with `queer-howe --all --write-expectations <path>`"),
        );
        doc.insert("values".into(), Value::Object(report.derived_values.clone()));
        let text = serde_json::to_string_pretty(&Value::Object(doc)).map_err(|e| CliError::Suite(e.to_string()))?;
        fs::write(path, text + "\n")?;
    }
    Ok(report.passed())
}
