//! `physlimits`: command-line front end.
//!
//! Exit codes: 0 success, 1 verification or comparison failure, 2 usage or
//! configuration error. Data goes to stdout, diagnostics to stderr.

mod config;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Parser, Subcommand};
use physlimits::blackhole::{black_hole_report, DEFAULT_PAGE_C};
use physlimits::limits::{compute_limits, ComputerSpec};
use physlimits::parallelism_errors::compression_sweep;
use physlimits::qdyn::{verify, EnsembleConfig};
use physlimits::scenarios::{self, compare_to_paper, Context, Params};
use physlimits::units::LITER;

use config::{CliConfig, FlagOverrides, Format};

#[derive(Parser, Debug)]
#[command(name = "physlimits", version, about = "Physical limits of computation")]
struct Cli {
    /// TOML file with [constants] overrides, [[species]], format, seed, precision.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Species table (TOML `[[species]]` or JSON `{"species": [...]}`).
    #[arg(long, global = true)]
    species: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Significant digits in text output.
    #[arg(long, global = true)]
    precision: Option<usize>,
    /// Seed for `qverify`.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Speed, memory, parallelism and error budget of a radiation computer.
    Limits {
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        mass_kg: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        volume_l: f64,
    },
    /// The same mass at its Schwarzschild radius.
    Blackhole {
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        mass_kg: f64,
        /// Page evaporation constant, in [1e-4, 1].
        #[arg(long, default_value_t = DEFAULT_PAGE_C, allow_negative_numbers = true)]
        page_c: f64,
    },
    /// Log-spaced compression sweep from r_start down to r_end (CSV by default).
    Sweep {
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        mass_kg: f64,
        #[arg(long, default_value_t = 5e-2, allow_negative_numbers = true)]
        r_start: f64,
        #[arg(long, default_value_t = 1.485e-27, allow_negative_numbers = true)]
        r_end: f64,
        #[arg(long, default_value_t = 50)]
        points: usize,
    },
    /// Check the orthogonalization-time bounds on random Hamiltonians.
    Qverify {
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        max_dim: usize,
    },
    /// Run a named worked example and compare it with the quoted numbers.
    Scenario {
        /// One of: ultimate_laptop, black_hole_laptop, ordinary_matter,
        /// io_bottleneck, heavy_ion, electrostatic_gate.
        name: String,
        /// Parameter override, repeatable.
        #[arg(long = "set", value_name = "KEY=VALUE")]
        set: Vec<String>,
    },
    /// Print the active constants.
    Constants,
}

enum Outcome {
    Ok,
    Failed,
}

fn parse_overrides(items: &[String]) -> Result<Params> {
    let mut out = Params::new();
    for item in items {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| anyhow!("--set expects KEY=VALUE, got `{item}`"))?;
        let value: f64 = v
            .trim()
            .parse()
            .map_err(|_| anyhow!("--set {k}: `{v}` is not a number"))?;
        out.insert(k.trim().to_string(), value);
    }
    Ok(out)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<Outcome> {
    let flags = FlagOverrides {
        config: cli.config.as_deref(),
        species: cli.species.as_deref(),
        format: cli.format,
        seed: cli.seed,
        precision: cli.precision,
    };
    let cfg = CliConfig::resolve(&flags)?;
    let k = &cfg.constants;
    let p = cfg.precision;
    match cli.command {
        Command::Limits { mass_kg, volume_l } => {
            let spec = ComputerSpec::new(mass_kg, volume_l * LITER, cfg.species.clone())?;
            let r = compute_limits(&spec, k)?;
            render::limits(out, &render::LimitsInput { mass_kg, volume_l }, &r, cfg.format(), p)?;
        }
        Command::Blackhole { mass_kg, page_c } => {
            let r = black_hole_report(mass_kg, page_c, k)?;
            render::blackhole(out, &r, cfg.format(), p)?;
        }
        Command::Sweep {
            mass_kg,
            r_start,
            r_end,
            points,
        } => {
            let rows = compression_sweep(mass_kg, r_start, r_end, points, &cfg.species, k)?;
            render::sweep(out, &rows, cfg.format.unwrap_or(Format::Csv), p)?;
        }
        Command::Qverify { trials, max_dim } => {
            let ens = EnsembleConfig {
                trials,
                max_dim,
                seed: cfg.seed,
                ..EnsembleConfig::default()
            };
            let s = verify(&ens)?;
            render::qverify(out, &s, cfg.format(), p)?;
            if !s.passed() {
                return Ok(Outcome::Failed);
            }
        }
        Command::Scenario { name, set } => {
            let overrides = parse_overrides(&set)?;
            let ctx = Context {
                constants: *k,
                species: cfg.species.clone(),
            };
            let r = scenarios::run_with(&name, &overrides, &ctx)?;
            render::scenario(out, &r, cfg.format(), p)?;
            if !compare_to_paper(&r).pass {
                return Ok(Outcome::Failed);
            }
        }
        Command::Constants => render::constants(out, k, cfg.format(), p)?,
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    // Buffer so that a failing command leaves stdout empty.
    let mut buf = Vec::new();
    let outcome = run(cli, &mut buf);
    match outcome {
        Ok(o) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(&buf).and_then(|_| stdout.flush()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            match o {
                Outcome::Ok => ExitCode::SUCCESS,
                Outcome::Failed => {
                    eprintln!("verification failed");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
