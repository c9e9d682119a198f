use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use specdist_cli::select::{gram_command, sd_command, CommandOutput};
use specdist_cli::sweep::{sweep, write_rows};
use specdist_cli::verify::{quadratic_typo_report, run_verify, Tolerances};
use specdist_cli::{CliError, ConductorRange, Format, PolySelector};

#[derive(Parser)]
#[command(
    name = "specdist",
    version,
    about = "Spectral distortion of cyclotomic and related polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Gram matrix M†M of the canonical embedding.
    Gram(SelectorArgs),
    /// Print the spectral distortion, its ingredients and upper bounds.
    Sd(SelectorArgs),
    /// Run the verification suite over a conductor range.
    Verify(VerifyArgs),
    /// Tabulate cyclotomic spectral data over a conductor range.
    Sweep(SweepArgs),
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("selector").required(true).args(["cyclotomic", "quadratic", "poly"])))]
struct SelectorArgs {
    /// Cyclotomic polynomial Φ_N.
    #[arg(long, value_name = "N")]
    cyclotomic: Option<u64>,
    /// h(x^k) with h = x² + Bx + C.
    #[arg(long, num_args = 2, value_names = ["B", "C"], allow_negative_numbers = true)]
    quadratic: Option<Vec<i64>>,
    /// Power k for --quadratic.
    #[arg(long, default_value_t = 1, requires = "quadratic")]
    k: usize,
    /// Monic integer polynomial, coefficients from the constant term up.
    #[arg(
        long,
        value_name = "C0,C1,...",
        value_delimiter = ',',
        allow_hyphen_values = true
    )]
    poly: Option<Vec<i64>>,
    /// Cross-check against an independent computation; fail above 1e-8.
    #[arg(long)]
    check: bool,
}

impl SelectorArgs {
    fn selector(&self) -> PolySelector {
        if let Some(n) = self.cyclotomic {
            PolySelector::Cyclotomic(n)
        } else if let Some(bc) = &self.quadratic {
            PolySelector::Quadratic {
                b: bc[0],
                c: bc[1],
                k: self.k,
            }
        } else {
            PolySelector::Poly(self.poly.clone().unwrap_or_default())
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Inclusive conductor range a:b within [1, 500].
    #[arg(long, default_value = "1:100")]
    range: ConductorRange,
    /// Closed-form Gram vs oracle, and spectra (absolute).
    #[arg(long, default_value_t = Tolerances::default().gram)]
    tol_gram: f64,
    /// Agreement between SD values (relative).
    #[arg(long, default_value_t = Tolerances::default().sd)]
    tol_sd: f64,
    /// Eigenvalue product vs |Disc| (relative).
    #[arg(long, default_value_t = Tolerances::default().disc)]
    tol_disc: f64,
    /// Power-substitution closed form vs oracle (absolute).
    #[arg(long, default_value_t = Tolerances::default().power)]
    tol_power: f64,
    /// Quadratic eigenvalue formula vs Jacobi (absolute).
    #[arg(long, default_value_t = Tolerances::default().quadratic)]
    tol_quadratic: f64,
    /// Also print the comparison of the two quadratic radicands.
    #[arg(long)]
    quadratic_typo: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct SweepArgs {
    /// Inclusive conductor range a:b; a > b is empty.
    #[arg(long)]
    range: ConductorRange,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Output file; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
}

fn emit(output: CommandOutput) -> Result<(), CliError> {
    match output.into_result() {
        Ok(text) => {
            print!("{text}");
            Ok(())
        }
        Err((text, e)) => {
            print!("{text}");
            Err(e)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gram(args) => emit(gram_command(&args.selector(), args.check)?),
        Command::Sd(args) => emit(sd_command(&args.selector(), args.check)?),
        Command::Verify(args) => {
            let tol = Tolerances {
                gram: args.tol_gram,
                sd: args.tol_sd,
                disc: args.tol_disc,
                power: args.tol_power,
                quadratic: args.tol_quadratic,
            };
            let report = run_verify(args.range, &tol)?;
            println!("{report}");
            if args.quadratic_typo {
                print!("{}", quadratic_typo_report()?);
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err(CliError::CheckFailed(format!(
                    "{} checks failed",
                    report.failures()
                )))
            }
        }
        Command::Sweep(args) => {
            let jobs = args
                .jobs
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            if jobs == 0 {
                return Err(CliError::Usage("--jobs must be at least 1".into()));
            }
            let format = match args.format {
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
            };
            let rows = sweep(args.range, jobs)?;
            match args.output {
                Some(path) => {
                    let file = File::create(&path).map_err(|e| {
                        CliError::Usage(format!("cannot write {}: {e}", path.display()))
                    })?;
                    let mut w = BufWriter::new(file);
                    write_rows(&rows, format, &mut w)?;
                    w.flush()?;
                }
                None => {
                    let stdout = io::stdout();
                    let mut w = stdout.lock();
                    write_rows(&rows, format, &mut w)?;
                    w.flush()?;
                }
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
