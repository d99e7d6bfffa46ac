use clap::{Args, Parser, Subcommand, ValueEnum};

use spinroots::cli::{
    cmd_companion, cmd_measure, cmd_multipole, cmd_verify, ArithmeticMode, ExperimentConfig,
    OutputFormat, PolySource, EXIT_USAGE,
};

/// Find the real zeros of a real polynomial by simulated spin measurements.
#[derive(Parser)]
#[command(name = "spinroots", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the hermitean tridiagonal companion matrix (division chain,
    /// diagonal/off-diagonal data, characteristic-identity residual).
    Companion(CommonArgs),
    /// Simulate Stern-Gerlach measurements and reconstruct the zeros.
    Measure(CommonArgs),
    /// Expand the companion matrix over the spin multipole basis.
    Multipole(CommonArgs),
    /// Run the full invariant battery against the classical oracle.
    Verify(CommonArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Rational,
    Float,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Args)]
struct CommonArgs {
    /// Polynomial as an expression, e.g. "(x-1)*(x-2)*(x-3)".
    #[arg(long, conflicts_with = "coeffs")]
    poly: Option<String>,
    /// Coefficients in descending order, e.g. "1,-6,11,-6".
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// Chain arithmetic; rational certifies the real-rootedness verdict
    /// exactly.
    #[arg(long, value_enum, default_value_t = ModeArg::Rational)]
    mode: ModeArg,
    /// RNG seed; 0 derives one from entropy and reports it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sequential shot budget (default: N (ln N + 10) rounded up).
    #[arg(long)]
    shots: Option<usize>,
    /// Apparatus count for the parallel experiment (0 = sequential).
    #[arg(long, default_value_t = 0)]
    parallel: usize,
    /// Coefficient-zero factor for float-mode chains.
    #[arg(long = "tol-zero", default_value_t = 1e-12)]
    tol_zero: f64,
    /// Eigenvalue bracket factor.
    #[arg(long = "tol-eig", default_value_t = 1e-12)]
    tol_eig: f64,
    /// Outcome clustering factor.
    #[arg(long = "tol-cluster", default_value_t = 1e-6)]
    tol_cluster: f64,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

impl CommonArgs {
    fn into_config(self) -> Result<ExperimentConfig, String> {
        let source = match (self.poly, self.coeffs) {
            (Some(expr), None) => PolySource::Expression(expr),
            (None, Some(coeffs)) => PolySource::Coefficients(coeffs),
            _ => return Err("provide exactly one of --poly or --coeffs".into()),
        };
        Ok(ExperimentConfig {
            source,
            mode: match self.mode {
                ModeArg::Rational => ArithmeticMode::Rational,
                ModeArg::Float => ArithmeticMode::Float,
            },
            seed: self.seed,
            shots: self.shots,
            parallel_m: self.parallel,
            zero_tol: self.tol_zero,
            eig_tol: self.tol_eig,
            cluster_tol: self.tol_cluster,
            format: match self.format {
                FormatArg::Text => OutputFormat::Text,
                FormatArg::Json => OutputFormat::Json,
            },
        })
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let (args, runner): (CommonArgs, fn(&ExperimentConfig) -> _) = match cli.command {
        Command::Companion(a) => (a, cmd_companion),
        Command::Measure(a) => (a, cmd_measure),
        Command::Multipole(a) => (a, cmd_multipole),
        Command::Verify(a) => (a, cmd_verify),
    };
    let config = match args.into_config() {
        Ok(c) => c,
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(EXIT_USAGE);
        }
    };
    let out = runner(&config);
    if out.exit_code == EXIT_USAGE {
        eprintln!("{}", out.body);
    } else {
        println!("{}", out.body);
    }
    std::process::exit(out.exit_code);
}
