//! `modesum` — mode-resolved Casimir interaction between planar metallic
//! mirrors: decomposition tables, parameter sweeps and built-in checks.

mod check;
mod config;
mod decompose;
mod sweep;

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use config::{parse_frequency, DistanceSpec, RunConfig};
use modesum::MaterialModel;

/// Exit codes: 0 success/PASS, 1 usage error, 2 numerical failure,
/// 3 check FAIL.
pub enum CliError {
    Usage(String),
    Numerical(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Numerical(_) => 2,
        }
    }
    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Numerical(m) => m,
        }
    }
}

impl From<modesum::Error> for CliError {
    fn from(e: modesum::Error) -> Self {
        match e {
            modesum::Error::Domain(m) => CliError::Usage(m),
            other => CliError::Numerical(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "modesum",
    version,
    about = "Casimir interaction between planar metallic mirrors, decomposed into \
             surface-plasmon and eddy-current mode contributions with a Lifshitz baseline"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the mode decomposition at one parameter point
    Decompose(RunArgs),
    /// Sweep one parameter over a grid and emit CSV
    Sweep(SweepArgs),
    /// Run a named built-in consistency check (canonical parameters)
    Check {
        /// One of: sum-rule, lambda-independence, te-cancellation,
        /// short-distance, perfect-mirror
        #[arg(value_enum)]
        name: CheckName,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Drude,
    Plasma,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    #[value(name = "sum-rule")]
    SumRule,
    #[value(name = "lambda-independence")]
    LambdaIndependence,
    #[value(name = "te-cancellation")]
    TeCancellation,
    #[value(name = "short-distance")]
    ShortDistance,
    #[value(name = "perfect-mirror")]
    PerfectMirror,
}

#[derive(Args)]
struct RunArgs {
    /// Plasma angular frequency: rad/s, or photon energy like `9.0eV`
    #[arg(long = "omega-p")]
    omega_p: Option<String>,
    /// Damping rate: rad/s, or `...eV`
    #[arg(long)]
    gamma: Option<String>,
    /// Dielectric model; plasma forces gamma = 0
    #[arg(long, value_enum)]
    model: Option<ModelArg>,
    /// Mirror separation in meters
    #[arg(long, conflicts_with = "distance_ratio")]
    distance: Option<f64>,
    /// Mirror separation as L / lambda_p (dimensionless)
    #[arg(long = "distance-ratio")]
    distance_ratio: Option<f64>,
    /// Temperature in kelvin (enables the high-temperature quantities)
    #[arg(long)]
    temperature: Option<f64>,
    /// Bath cutoff in units of gamma (default 10)
    #[arg(long = "cutoff-lambda")]
    cutoff_lambda: Option<f64>,
    /// Quadrature relative tolerance override
    #[arg(long = "rel-tol")]
    rel_tol: Option<f64>,
    /// Write output to this path instead of stdout only
    #[arg(long)]
    out: Option<PathBuf>,
    /// Read defaults from a config file (flags override it)
    #[arg(long)]
    config: Option<PathBuf>,
    /// Worker budget for sweeps
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Parameter to sweep
    #[arg(long, value_enum)]
    param: sweep::SweepParam,
    /// Grid: `log:start:stop:points` or `lin:start:stop:points`
    #[arg(long)]
    grid: String,
}

impl RunArgs {
    /// Config file (if any) overridden by explicit flags.
    fn resolve(&self) -> Result<RunConfig, CliError> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    CliError::Usage(format!("cannot read config {}: {e}", path.display()))
                })?;
                RunConfig::from_file_format(&text).map_err(CliError::Usage)?
            }
            None => RunConfig::default(),
        };
        if let Some(wp) = &self.omega_p {
            cfg.omega_p_rad_s = parse_frequency(wp).map_err(CliError::Usage)?;
        }
        if let Some(g) = &self.gamma {
            cfg.gamma_rad_s = parse_frequency(g).map_err(CliError::Usage)?;
            if cfg.gamma_rad_s > 0.0 {
                cfg.model = MaterialModel::Drude;
            }
        }
        if let Some(m) = self.model {
            cfg.model = match m {
                ModelArg::Drude => MaterialModel::Drude,
                ModelArg::Plasma => MaterialModel::Plasma,
            };
            if cfg.model == MaterialModel::Plasma {
                cfg.gamma_rad_s = 0.0;
            }
        }
        if let Some(l) = self.distance {
            cfg.distance = Some(DistanceSpec::Meters(l));
        }
        if let Some(r) = self.distance_ratio {
            cfg.distance = Some(DistanceSpec::Ratio(r));
        }
        if let Some(t) = self.temperature {
            cfg.temperature_k = Some(t);
        }
        if let Some(c) = self.cutoff_lambda {
            cfg.lambda_over_gamma = c;
        }
        if let Some(rt) = self.rel_tol {
            cfg.rel_tol = Some(rt);
        }
        if let Some(o) = &self.out {
            cfg.out = Some(o.clone());
        }
        if let Some(j) = self.jobs {
            cfg.jobs = j;
        }
        Ok(cfg)
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), CliError> {
    print!("{text}");
    if let Some(path) = out {
        std::fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };

    let outcome: Result<i32, CliError> = match cli.command {
        Command::Decompose(args) => args.resolve().and_then(|cfg| {
            let text = decompose::run(&cfg)?;
            emit(&text, &cfg.out)?;
            Ok(0)
        }),
        Command::Sweep(args) => args.run.resolve().and_then(|cfg| {
            let spec = sweep::parse_grid(&args.grid).map_err(CliError::Usage)?;
            let csv = sweep::run(&cfg, args.param, &spec)?;
            emit(&csv, &cfg.out)?;
            Ok(0)
        }),
        Command::Check { name } => check::run(name),
    };

    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

fn main() {
    std::process::exit(run());
}
