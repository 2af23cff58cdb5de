//! The `symgen` command line.
//!
//! Exit codes: `0` success, `1` a verification check failed, `2` bad usage
//! (including guard violations).

pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::chars::CharacterTable;
use crate::counting::{
    count_bounded_cycles, count_nu_roots, dixon_series, frak_c_size, frak_m_size, k_of_n, SeriesKind,
};
use crate::error::{Error, Result};
use crate::experiments::{
    estimate_p, second_moment_run, word_experiment, ExperimentConfig, GroupMode, Report,
};
use verify::{run_suite, Suite};

pub const SEED_ENV: &str = "SYMGEN_SEED";

#[derive(Debug, Parser)]
#[command(name = "symgen", version, about = "Random generation of the symmetric group: experiments and exact checks")]
pub struct Cli {
    /// Cap on worker threads for sampled experiments (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    S,
    A,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    #[value(name = "frakC")]
    FrakC,
    #[value(name = "frakM")]
    FrakM,
    #[value(name = "nuroots")]
    NuRoots,
    #[value(name = "bounded")]
    Bounded,
    #[value(name = "kN")]
    KN,
    #[value(name = "series")]
    Series,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate the probability that random elements generate at least A_n.
    Estimate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, env = SEED_ENV, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        generators: u8,
        #[arg(long, value_enum, default_value = "S", ignore_case = true)]
        group: GroupArg,
        /// Also write the report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run exact verification suites, one JSON line per check.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Character table of S_n as CSV.
    Chars {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact counts, printed as decimal strings.
    Count {
        #[arg(long, value_enum)]
        quantity: Quantity,
        #[arg(long)]
        n: usize,
        /// Exponent for `nuroots`.
        #[arg(long, default_value_t = 1)]
        nu: u64,
        /// Cycle-length cap for `bounded`.
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Upper summation limit for `kN`.
        #[arg(long = "N", default_value_t = 1)]
        big_n: u64,
        /// Truncation order for `series`.
        #[arg(long, default_value_t = 6)]
        order: usize,
        #[arg(long, default_value_t = 2)]
        generators: usize,
    },
    /// Second-moment statistic X over the walk π·σ^i.
    SecondMoment {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, env = SEED_ENV, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Histogram of X as two-column TSV.
        #[arg(long)]
        tsv: Option<PathBuf>,
    },
    /// Word experiment over reduced words of length at most N.
    Words {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, env = SEED_ENV, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        tsv: Option<PathBuf>,
    },
}

/// Provenance stamped on every emitted artifact.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub subcommand: &'static str,
    pub config: Value,
    pub seed: String,
    pub tool_version: &'static str,
    /// Seconds since the Unix epoch; not part of the payload hash.
    pub timestamp: u64,
    pub outputs: Vec<String>,
    pub payload_sha256: String,
}

impl RunManifest {
    pub fn new<R: Serialize>(subcommand: &'static str, report: &Report<R>, outputs: &[&PathBuf]) -> Self {
        RunManifest {
            subcommand,
            config: serde_json::to_value(&report.config).expect("config serializes"),
            seed: report.seed.clone(),
            tool_version: env!("CARGO_PKG_VERSION"),
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_secs()),
            outputs: outputs.iter().map(|p| p.display().to_string()).collect(),
            payload_sha256: sha256_hex(report.payload().as_bytes()),
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Parses `args` and runs; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents)
        .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))
}

fn io(e: std::io::Error) -> Error {
    Error::Precondition(format!("output failed: {e}"))
}

fn emit<R: Serialize>(
    subcommand: &'static str,
    report: &Report<R>,
    json_path: Option<&PathBuf>,
    tsv: Option<(&PathBuf, &[(u64, u64)])>,
    out: &mut dyn Write,
) -> Result<()> {
    let outputs: Vec<&PathBuf> = json_path.into_iter().chain(tsv.map(|t| t.0)).collect();
    let manifest = RunManifest::new(subcommand, report, &outputs);
    let doc = json!({ "manifest": manifest, "report": report.to_json() });
    let text = serde_json::to_string_pretty(&doc).expect("json");
    if let Some(path) = json_path {
        write_file(path, &(text.clone() + "\n"))?;
    }
    if let Some((path, histogram)) = tsv {
        let mut body = format!("# {}\n# payload_sha256 {}\nx\tcount\n", subcommand, manifest.payload_sha256);
        for (x, c) in histogram {
            body.push_str(&format!("{x}\t{c}\n"));
        }
        write_file(path, &body)?;
    }
    writeln!(out, "{text}").map_err(io)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let workers = cli.workers;
    match cli.command {
        Command::Estimate { n, trials, seed, generators, group, json } => {
            let config = ExperimentConfig::new(n, trials, seed)
                .with_generators(generators as usize)
                .with_group(match group {
                    GroupArg::S => GroupMode::S,
                    GroupArg::A => GroupMode::A,
                })
                .with_workers(workers);
            let report = estimate_p(&config)?;
            emit("estimate", &report, json.as_ref(), None, out)?;
        }
        Command::Verify { suite, nmax } => {
            let checks = run_suite(suite, nmax)?;
            let mut failed = false;
            for c in &checks {
                failed |= c.failed();
                writeln!(out, "{}", serde_json::to_string(c).expect("json")).map_err(io)?;
            }
            return Ok(if failed { 1 } else { 0 });
        }
        Command::Chars { n, out: path } => {
            crate::chars::check_table_guard(n)?;
            let csv = CharacterTable::new(n).to_csv();
            match path {
                Some(p) => write_file(&p, &csv)?,
                None => out.write_all(csv.as_bytes()).map_err(io)?,
            }
        }
        Command::Count { quantity, n, nu, r, big_n, order, generators } => {
            let value = match quantity {
                Quantity::FrakC => exact(frak_c_size(n)),
                Quantity::FrakM => exact(frak_m_size(n)?),
                Quantity::NuRoots => {
                    if nu == 0 {
                        return Err(Error::Precondition("--nu must be positive".into()));
                    }
                    exact(count_nu_roots(n, nu))
                }
                Quantity::Bounded => {
                    if r == 0 {
                        return Err(Error::Precondition("--r must be positive".into()));
                    }
                    exact(count_bounded_cycles(n, r))
                }
                Quantity::KN => {
                    if n == 0 || big_n == 0 {
                        return Err(Error::Precondition("kN needs n >= 1 and N >= 1".into()));
                    }
                    exact(k_of_n(n, big_n))
                }
                Quantity::Series => {
                    let v = dixon_series(n, order, SeriesKind::from_generators(generators)?)?;
                    json!({ "kind": "float64", "value": v })
                }
            };
            let q = quantity.to_possible_value().expect("named").get_name().to_string();
            let line = json!({ "quantity": q, "n": n, "value": value });
            writeln!(out, "{line}").map_err(io)?;
        }
        Command::SecondMoment { n, big_n, trials, seed, json, tsv } => {
            let config = ExperimentConfig::new(n, trials, seed)
                .with_window(big_n)
                .with_workers(workers);
            let report = second_moment_run(&config)?;
            let hist = report.results.histogram.clone();
            emit("second-moment", &report, json.as_ref(), tsv.as_ref().map(|p| (p, hist.as_slice())), out)?;
        }
        Command::Words { n, big_n, trials, seed, json, tsv } => {
            let config = ExperimentConfig::new(n, trials, seed)
                .with_window(big_n)
                .with_workers(workers);
            let report = word_experiment(&config)?;
            let hist = report.results.histogram.clone();
            emit("words", &report, json.as_ref(), tsv.as_ref().map(|p| (p, hist.as_slice())), out)?;
        }
    }
    Ok(0)
}

fn exact(v: num_bigint::BigUint) -> Value {
    json!({ "kind": "exact-decimal", "value": v.to_string() })
}
