mod cache;
mod config;
mod suites;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use ucphase::macmahon::{correlator_full, macmahon_series, plane_partition_series, QSeries};
use ucphase::partitions::Partition;
use ucphase::phase::{bethe_expansion, project, uc_to_json, PhaseModel};
use ucphase::polyring::Cutoffs;
use ucphase::scalars::{parse_rational, Rational};
use ucphase::symfunc::uc_synthesize;

use config::Settings;
use suites::Suite;

#[derive(Parser)]
#[command(
    name = "ucphase",
    version,
    about = "Universal characters, the two-chain phase model and MacMahon correlators"
)]
struct Cli {
    /// key=value file supplying defaults for any long flag
    #[arg(long, global = true, env = "UCPHASE_CONFIG")]
    config: Option<PathBuf>,

    /// Worker threads for suite sweeps
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Product,
    Correlator,
    Enumerate,
}

#[derive(clap::Args, Clone, Default)]
pub struct SizeFlags {
    #[arg(long)]
    pub max_weight: Option<usize>,
    #[arg(long)]
    pub m1: Option<usize>,
    #[arg(long)]
    pub m2: Option<usize>,
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long)]
    pub order: Option<usize>,
    /// Seed for sampled rational points
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the universal character S[lambda, mu]
    ComputeUc {
        /// Comma-separated parts, e.g. 2,1 (empty for the empty partition)
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Run a verification suite; exit 0 on pass, 1 on any residual
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        sizes: SizeFlags,
    },
    /// Expand the Bethe vector prod B2(u) B1(u) |0> in universal characters
    Bethe {
        /// Comma-separated rationals, e.g. 2,1/3
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        u: Vec<String>,
        #[arg(long)]
        m1: Option<usize>,
        #[arg(long)]
        m2: Option<usize>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Coefficients of the MacMahon function
    Macmahon {
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Run all three methods and compare
        #[arg(long)]
        compare: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Manage the universal-character cache
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// Delete every cached entry
    Clear,
    /// Print the number of entries and their total size
    Stats,
}

/// Usage or input errors exit with 2; verification failures with 1.
enum Failure {
    Usage(String),
    Check,
}

impl From<ucphase::Error> for Failure {
    fn from(e: ucphase::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let settings = Settings::load(cli.config.as_deref()).map_err(Failure::Usage)?;
    let jobs = cli.jobs.or(settings.get("jobs").map_err(Failure::Usage)?);
    if let Some(n) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::ComputeUc { lambda, mu, format } => {
            let format = pick_format(format, &settings)?;
            let lambda = lambda.or_else(|| settings.raw("lambda").map(str::to_string)).unwrap_or_default();
            let mu = mu.or_else(|| settings.raw("mu").map(str::to_string)).unwrap_or_default();
            compute_uc(&lambda, &mu, format)
        }
        Command::Verify { suite, sizes } => {
            let sizes = settings.fill(sizes).map_err(Failure::Usage)?;
            let report = suites::run(suite, &sizes)?;
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            if report["pass"].as_bool() == Some(true) {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Bethe { u, m1, m2, format } => {
            let format = pick_format(format, &settings)?;
            let m1 = m1.or(settings.get("m1").map_err(Failure::Usage)?).unwrap_or(1);
            let m2 = m2.or(settings.get("m2").map_err(Failure::Usage)?).unwrap_or(1);
            bethe(&u, m1, m2, format)
        }
        Command::Macmahon { order, method, compare, format } => {
            let format = pick_format(format, &settings)?;
            let order = order.or(settings.get("order").map_err(Failure::Usage)?).unwrap_or(6);
            let method = match method {
                Some(m) => m,
                None => match settings.raw("method") {
                    Some(s) => Method::from_str(s, true).map_err(Failure::Usage)?,
                    None => Method::Product,
                },
            };
            let compare = compare || settings.get("compare").map_err(Failure::Usage)?.unwrap_or(false);
            macmahon(order, method, compare, format)
        }
        Command::Cache { action } => {
            let dir = cache::cache_dir();
            match action {
                CacheAction::Clear => {
                    let n = cache::clear(&dir).map_err(|e| Failure::Usage(e.to_string()))?;
                    println!("removed {n} entries from {}", dir.display());
                }
                CacheAction::Stats => {
                    let (n, bytes) = cache::stats(&dir).map_err(|e| Failure::Usage(e.to_string()))?;
                    println!("{n} entries, {bytes} bytes in {}", dir.display());
                }
            }
            Ok(())
        }
    }
}

fn pick_format(flag: Option<Format>, settings: &Settings) -> Result<Format, Failure> {
    match flag {
        Some(f) => Ok(f),
        None => match settings.raw("format") {
            Some(s) => Format::from_str(s, true).map_err(Failure::Usage),
            None => Ok(Format::Text),
        },
    }
}

fn compute_uc(lambda: &str, mu: &str, format: Format) -> Result<(), Failure> {
    let lam: Partition = lambda.parse()?;
    let mu: Partition = mu.parse()?;
    let poly = cache::universal_character(&cache::cache_dir(), &lam, &mu)?;
    match format {
        Format::Text => println!("{poly}"),
        Format::Json => {
            let out = json!({"lambda": lam, "mu": mu, "poly": poly.to_json(), "text": poly.to_string()});
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
    }
    Ok(())
}

fn bethe(u: &[String], m1: usize, m2: usize, format: Format) -> Result<(), Failure> {
    let us: Vec<Rational> = u.iter().map(|s| parse_rational(s)).collect::<Result<_, _>>()?;
    let model = PhaseModel::two_chain(m1, m2);
    let state = ucphase::phase::bethe_state(&model, &us)?;
    let expansion = project(&state);
    let expected = bethe_expansion(&model, &us);
    let n = (us.len() * m1.max(m2)).max(1);
    let poly = uc_synthesize(&expansion, Cutoffs::new(n, n))?;
    match format {
        Format::Text => {
            for ((lam, mu), c) in &expansion {
                println!("{} S[{lam};{mu}]", ucphase::scalars::rational_to_string(c));
            }
            println!("= {poly}");
        }
        Format::Json => {
            let out = json!({
                "u": u, "m1": m1, "m2": m2,
                "fock": state.to_json(),
                "expansion": uc_to_json(&expansion),
                "poly": poly.to_string(),
                "matches_schur_sum": expansion == expected,
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
    }
    if expansion == expected {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn series_by(method: Method, order: usize) -> Result<QSeries, Failure> {
    Ok(match method {
        Method::Product => macmahon_series(order)?,
        Method::Correlator => correlator_full(order)?,
        Method::Enumerate => plane_partition_series(order)?,
    })
}

fn macmahon(order: usize, method: Method, compare: bool, format: Format) -> Result<(), Failure> {
    if !compare {
        let s = series_by(method, order)?;
        match format {
            Format::Text => println!("{}", s.render()),
            Format::Json => println!("{}", s.to_json()),
        }
        return Ok(());
    }
    let all = [Method::Product, Method::Correlator, Method::Enumerate]
        .into_iter()
        .map(|m| Ok((m, series_by(m, order)?.q_coeffs(order))))
        .collect::<Result<Vec<_>, Failure>>()?;
    let agree = all.windows(2).all(|w| w[0].1 == w[1].1);
    if agree {
        println!("all methods agree");
        match format {
            Format::Text => println!("{}", series_by(Method::Product, order)?.render()),
            Format::Json => println!("{}", series_by(Method::Product, order)?.to_json()),
        }
        Ok(())
    } else {
        for (m, c) in &all {
            let text: Vec<String> = c.iter().map(ucphase::scalars::rational_to_string).collect();
            println!("{m:?}: {}", text.join(","));
        }
        Err(Failure::Check)
    }
}
