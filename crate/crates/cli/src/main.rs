mod commands;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use apbounds::sieve::{SieveConfig, DEFAULT_SEGMENT_SIZE};
use apbounds::specialfn::QuadratureSpec;
use clap::{Parser, Subcommand, ValueEnum};

use output::{write_records, Format, CSV_HEADER};

/// Exact prime counts in arithmetic progressions, explicit GRH-conditional
/// error bounds, and numerical verification of the inequalities behind them.
///
/// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
#[derive(Debug, Parser)]
#[command(name = "apbounds", version)]
struct Cli {
    /// Worker threads (default: number of logical CPUs).
    #[arg(long, global = true, env = "APBOUNDS_THREADS")]
    threads: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Integers per sieve segment.
    #[arg(long, global = true, default_value_t = DEFAULT_SEGMENT_SIZE)]
    segment_size: u64,

    /// Absolute tolerance for adaptive quadrature.
    #[arg(long, global = true, default_value_t = QuadratureSpec::default().abs_tol)]
    quadrature_tol: f64,

    /// Write records to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// π, θ, ψ and ψ₀ restricted to n ≡ a (mod q), with the observed errors
    /// and the bounds they are compared against.
    Count {
        #[arg(long)]
        x: f64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        a: u64,
        /// Skip the bound comparison; allows gcd(a, q) > 1 and q < 3.
        #[arg(long)]
        no_bound: bool,
    },
    /// Evaluates one bound and prints its labelled terms.
    Bound {
        #[arg(long, value_enum)]
        which: BoundKind,
        #[arg(long)]
        x: Option<f64>,
        /// Modulus; may be real (e.g. 1e29) when --phi is given or only q enters.
        #[arg(long)]
        q: Option<f64>,
        /// φ(q), required when q is not an exact integer.
        #[arg(long)]
        phi: Option<f64>,
        /// Height T for the truncation bound.
        #[arg(long)]
        t: Option<f64>,
    },
    /// Runs a verification suite; exits 1 if any report fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Only lemmas whose id starts with this prefix.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        qmax: Option<u64>,
        #[arg(long)]
        xmax: Option<f64>,
        /// Log-spaced x values per modulus (empirical suite).
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Prints the constants catalogue with its anchors.
    ConstantsDump,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    PiFull,
    PiSimple,
    Psi,
    LargeRho,
    SmallRho,
    R1,
    Jest,
    Li,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lemmas,
    Empirical,
    Constants,
    Characters,
    SmallX,
}

/// Settings shared by all subcommands.
#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub sieve: SieveConfig,
    pub quadrature: QuadratureSpec,
}

fn open_out(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    if let Some(n) = cli.threads {
        anyhow::ensure!(n >= 1, "--threads must be at least 1");
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    anyhow::ensure!(cli.segment_size >= 1, "--segment-size must be at least 1");
    anyhow::ensure!(
        cli.quadrature_tol > 0.0 && cli.quadrature_tol.is_finite(),
        "--quadrature-tol must be positive"
    );
    let config = CliConfig {
        sieve: SieveConfig {
            segment_size: cli.segment_size,
        },
        quadrature: QuadratureSpec {
            abs_tol: cli.quadrature_tol,
            ..QuadratureSpec::default()
        },
    };
    let outcome = match cli.command {
        Command::Count { x, q, a, no_bound } => commands::count(x, q, a, !no_bound, &config)?,
        Command::Bound { which, x, q, phi, t } => commands::bound(which, x, q, phi, t, &config)?,
        Command::Verify {
            suite,
            only,
            qmax,
            xmax,
            samples,
        } => commands::verify(suite, only.as_deref(), qmax, xmax, samples, &config)?,
        Command::ConstantsDump => commands::constants_dump()?,
    };
    let mut out = open_out(&cli.out)?;
    if cli.format == Format::Csv {
        writeln!(out, "{CSV_HEADER}")?;
    }
    write_records(&mut out, cli.format, &outcome.records, 0)?;
    out.flush()?;
    if let Some(summary) = outcome.summary {
        eprint!("{summary}");
    }
    Ok(outcome.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
