//! Command-line front end.
//!
//! Exit-status contract: 0 when every check passes, 1 when a check
//! fails, 2 for usage or input errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::io::{
    emit, fmt_sig12, phase_distribution_csv, MubDocument, PhaseDistributionDocument, StateFile,
};
use crate::mub;
use crate::pauli::PrimeDim;
use crate::phase::{self, CovariantPovm, PhaseAngles};
use crate::report::{Check, Report};
use crate::verify;
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qudit-phase",
    version,
    about = "Pauli classes, mutually unbiased bases, and covariant phase measurements for prime-dimension qudits"
)]
pub struct Cli {
    /// Accept state files with any nonzero norm and rescale them.
    #[arg(long, global = true)]
    pub renormalize: bool,

    /// Angle convention for qubit expectation values: `general` treats
    /// the --phi values as inversion angles phi_1; `paper` treats the
    /// single angle as the two-level reference phase phi = 2*phi_1.
    #[arg(long, global = true, value_enum, default_value_t = QubitConvention::General)]
    pub qubit_convention: QubitConvention,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QubitConvention {
    General,
    Paper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full invariant suite for one dimension.
    Verify {
        /// Prime dimension, 2..=31.
        d: usize,
    },
    /// Emit the d+1 mutually unbiased bases.
    Mubs {
        /// Prime dimension, 2..=31.
        d: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Output path (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Sample the phase distribution of a state on a uniform grid.
    PhaseDist {
        /// State file (JSON).
        state: PathBuf,
        /// Grid points per axis (N >= 8).
        #[arg(long, default_value_t = 64)]
        grid: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Output path (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print one phase moment <E^k(phi)> of a state.
    Expectation {
        /// State file (JSON).
        state: PathBuf,
        /// Moment power, 1..=d-1.
        #[arg(long)]
        k: usize,
        /// Comma-separated reference phases (d-1 of them).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        phi: Vec<f64>,
    },
    /// Check the covariant POVM built from given coefficients.
    PovmCheck {
        /// Prime dimension, 2..=31.
        d: usize,
        /// Comma-separated coefficients, `re` or `re:im` (default: all 1).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        gamma: Option<Vec<String>>,
    },
}

/// Parse and run, writing to the given streams. Returns the exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let _ = write!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        // a reader hanging up mid-stream is normal termination
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Verify { d } => {
            let dim = PrimeDim::new(*d)?;
            let report = verify::run(dim)?;
            report.write_to(out)?;
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Mubs { d, format, output } => {
            let dim = PrimeDim::new(*d)?;
            let collection = mub::build_mubs(dim)?;
            let doc = MubDocument::from_collection(&collection);
            let text = match format {
                OutputFormat::Json => doc.to_json(),
                OutputFormat::Csv => doc.to_csv(),
            };
            emit(&text, output.as_deref(), out)?;
            Ok(if doc.status == "PASS" {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::PhaseDist {
            state,
            grid,
            format,
            output,
        } => {
            let file = StateFile::load(state)?;
            let psi = file.to_state(cli.renormalize)?;
            PrimeDim::new(psi.dim())?;
            let dist = phase::phase_distribution(&psi, *grid)?;
            let text = match format {
                OutputFormat::Csv => phase_distribution_csv(&dist),
                OutputFormat::Json => PhaseDistributionDocument::from_distribution(&dist).to_json(),
            };
            emit(&text, output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Expectation { state, k, phi } => {
            let file = StateFile::load(state)?;
            let psi = file.to_state(cli.renormalize)?;
            let d = PrimeDim::new(psi.dim())?;
            let angles = resolve_angles(cli.qubit_convention, d, phi)?;
            let phis = PhaseAngles::new(d, angles)?;
            // both computation paths are cross-checked inside
            let moment = phase::phase_moment(&psi, &phis, *k)?;
            writeln!(
                out,
                "expectation k={} re={} im={}",
                k,
                fmt_sig12(moment.re),
                fmt_sig12(moment.im)
            )?;
            Ok(EXIT_OK)
        }
        Command::PovmCheck { d, gamma } => {
            let dim = PrimeDim::new(*d)?;
            let povm = match gamma {
                None => CovariantPovm::uniform(dim),
                Some(tokens) => {
                    let coeffs = tokens
                        .iter()
                        .map(|t| parse_coefficient(t))
                        .collect::<Result<Vec<_>>>()?;
                    CovariantPovm::new(dim, coeffs)?
                }
            };
            let report = povm_report(dim, &povm)?;
            report.write_to(out)?;
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
    }
}

/// Map CLI angles to the internal inversion angles. Under the `paper`
/// convention a qubit takes one reference phase phi, carried by the
/// internal machinery as phi_1 = phi/2.
fn resolve_angles(convention: QubitConvention, d: PrimeDim, phi: &[f64]) -> Result<Vec<f64>> {
    match convention {
        QubitConvention::General => Ok(phi.to_vec()),
        QubitConvention::Paper => {
            if d.get() != 2 {
                return Err(Error::InvalidStateFile(
                    "--qubit-convention paper applies only to dimension 2".into(),
                ));
            }
            if phi.len() != 1 {
                return Err(Error::AngleCount {
                    expected: 1,
                    got: phi.len(),
                });
            }
            Ok(vec![phi[0] / 2.0])
        }
    }
}

/// Accept `re` or `re:im`.
fn parse_coefficient(token: &str) -> Result<Complex64> {
    let bad = || Error::InvalidStateFile(format!("invalid coefficient '{token}'"));
    match token.split_once(':') {
        None => Ok(Complex64::new(
            token.trim().parse().map_err(|_| bad())?,
            0.0,
        )),
        Some((re, im)) => Ok(Complex64::new(
            re.trim().parse().map_err(|_| bad())?,
            im.trim().parse().map_err(|_| bad())?,
        )),
    }
}

fn povm_report(d: PrimeDim, povm: &CovariantPovm) -> Result<Report> {
    let started = std::time::Instant::now();
    let n = d.get();
    let mut report = Report::new("povm-check", n);
    let mut rng = crate::rng::SplitMix64::new(0x90b1 ^ n as u64);

    let mut hermiticity = 0.0f64;
    let mut covariance = 0.0f64;
    for _ in 0..4 {
        let values: Vec<f64> = (0..n - 1).map(|_| rng.angle()).collect();
        let phis = PhaseAngles::new(d, values)?;
        hermiticity = hermiticity.max(povm.element(&phis).hermiticity_residual());
        for j in 0..n - 1 {
            covariance = covariance.max(povm.covariance_residual(&phis, j, rng.angle())?);
        }
    }
    report.push(Check::new(
        "povm-hermiticity",
        hermiticity,
        crate::tol::CONJUGATION,
    ));
    report.push(Check::new(
        "povm-covariance",
        covariance,
        crate::tol::CONJUGATION,
    ));
    if n <= 5 {
        report.push(Check::new(
            "povm-identity-integral",
            povm.identity_integral_residual(if n <= 3 { 16 } else { 8 })?,
            crate::tol::QUADRATURE,
        ));
        // positivity depends on the coefficients; reported, never gated
        let min_eig = povm.min_eigenvalue_scan(32.min(if n <= 3 { 32 } else { 8 }))?;
        report.push(Check::info(
            "povm-min-eigenvalue",
            min_eig,
            "smallest eigenvalue over the phase grid; negative means not positive semidefinite",
        ));
    }
    report.elapsed = Some(started.elapsed());
    Ok(report)
}
