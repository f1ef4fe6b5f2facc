//! Argument definitions and command bodies for the `lande` binary.
//!
//! Every command prints one JSON document on stdout. Exit codes: 0 success,
//! 1 a verification check failed, 2 bad usage or invalid input.

pub mod json;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lande_core::amplitudes::{chi, probability};
use lande_core::operators::{
    ladder_operators, observable_matrix, sigma_c, sigma_c_eigenvectors, sigma_squared, sigma_xy,
};
use lande_core::representation::{
    eigen_consistency_report, expectation_direct, expectation_matrix, operator_matrix,
    state_vector, EigenConsistency,
};
use lande_core::simulator::{run_chain, run_chain_with_workers};
use lande_core::{tolerance, verify};
use lande_core::{
    CaseSelector, ChainResult, ChainSpec, CheckReport, Direction, Eigenvalues, LandeError,
    MeasurementSetup, ObservableSpec, SpinContext,
};
use serde::Serialize;

use json::{JsonComplex, JsonMat, JsonVec};

pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "lande", version, about = "Spin-1/2 probability amplitudes, operators and measurement chains")]
pub struct Cli {
    /// Read every angle in degrees instead of radians.
    #[arg(long, global = true)]
    pub degrees: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Amplitude and probability between two spin contexts.
    Amplitude(AmplitudeArgs),
    /// Matrix of an observable or spin operator in a chosen basis.
    Operator(OperatorArgs),
    /// Expectation value of an observable for a measurement setup.
    Expectation(ExpectationArgs),
    /// Monte-Carlo run of a sequential measurement chain.
    Simulate(SimulateArgs),
    /// Run the identity checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutcomeArg {
    Up,
    Down,
}

impl From<OutcomeArg> for lande_core::Outcome {
    fn from(o: OutcomeArg) -> Self {
        match o {
            OutcomeArg::Up => lande_core::Outcome::Up,
            OutcomeArg::Down => lande_core::Outcome::Down,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OperatorKind {
    R,
    SigmaC,
    SigmaX,
    SigmaY,
    SigmaPlus,
    SigmaMinus,
    SigmaSquared,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    General,
    BasisEqualsInitial,
    BasisEqualsFinal,
    FinalEqualsInitial,
    AllEqual,
}

impl From<CaseArg> for CaseSelector {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::General => CaseSelector::General,
            CaseArg::BasisEqualsInitial => CaseSelector::BasisEqualsInitial,
            CaseArg::BasisEqualsFinal => CaseSelector::BasisEqualsFinal,
            CaseArg::FinalEqualsInitial => CaseSelector::FinalEqualsInitial,
            CaseArg::AllEqual => CaseSelector::AllEqual,
        }
    }
}

#[derive(Debug, Args)]
pub struct AmplitudeArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub from_theta: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub from_phi: f64,
    #[arg(long, value_enum, default_value = "up")]
    pub from_outcome: OutcomeArg,
    #[arg(long, allow_negative_numbers = true)]
    pub to_theta: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub to_phi: f64,
    #[arg(long, value_enum, default_value = "up")]
    pub to_outcome: OutcomeArg,
}

#[derive(Debug, Args)]
pub struct OperatorArgs {
    #[arg(long, value_enum)]
    pub kind: OperatorKind,
    /// Basis axis b̂.
    #[arg(long, allow_negative_numbers = true)]
    pub basis_theta: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub basis_phi: f64,
    /// Measured axis ĉ.
    #[arg(long, allow_negative_numbers = true)]
    pub measure_theta: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub measure_phi: f64,
    /// Eigenvalue for the up outcome (kind r only).
    #[arg(long, allow_negative_numbers = true)]
    pub r1: Option<f64>,
    /// Eigenvalue for the down outcome (kind r only).
    #[arg(long, allow_negative_numbers = true)]
    pub r2: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ExpectationArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub initial_theta: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub initial_phi: f64,
    #[arg(long, value_enum, default_value = "up")]
    pub outcome: OutcomeArg,
    #[arg(long, allow_negative_numbers = true)]
    pub basis_theta: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub basis_phi: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub final_theta: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub final_phi: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub r1: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub r2: f64,
    /// Force a case; tied axes are overwritten. Inferred from the axes if omitted.
    #[arg(long, value_enum)]
    pub case: Option<CaseArg>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub initial_theta: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub initial_phi: f64,
    #[arg(long, value_enum, default_value = "up")]
    pub outcome: OutcomeArg,
    /// Measurement axis as `theta,phi`; repeat for each step of the chain.
    #[arg(long = "axis", required = true, value_parser = parse_axis, allow_hyphen_values = true)]
    pub axes: Vec<(f64, f64)>,
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; defaults to available parallelism. Does not affect results.
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub samples: u64,
    /// Run only the named check; repeatable.
    #[arg(long = "check")]
    pub checks: Vec<String>,
}

/// Parses `theta,phi`.
pub fn parse_axis(raw: &str) -> Result<(f64, f64), String> {
    let (t, p) = raw
        .split_once(',')
        .ok_or_else(|| format!("expected `theta,phi`, got {raw:?}"))?;
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|e| format!("bad angle {s:?}: {e}"))
            .and_then(|x| if x.is_finite() { Ok(x) } else { Err(format!("angle {s:?} is not finite")) })
    };
    Ok((num(t)?, num(p)?))
}

#[derive(Debug, Serialize)]
pub struct AmplitudeOutput {
    pub amplitude: JsonComplex,
    pub probability: f64,
}

#[derive(Debug, Serialize)]
pub struct OperatorOutput {
    pub kind: String,
    pub matrix: JsonMat,
    /// `[up, down]`, present only for `sigma-c`.
    pub eigenvectors: Option<[JsonVec; 2]>,
}

#[derive(Debug, Serialize)]
pub struct ExpectationOutput {
    pub setup: MeasurementSetup,
    pub state_vector: JsonVec,
    pub operator: JsonMat,
    pub expectation_direct: f64,
    pub expectation_matrix: f64,
    /// Present only when the final axis equals the initial axis.
    pub eigen_consistency: Option<EigenConsistency>,
}

#[derive(Debug, Serialize)]
pub struct SimulateOutput {
    pub spec: ChainSpec,
    pub result: ChainResult,
}

#[derive(Debug, Serialize)]
pub struct VerifyOutput {
    pub pass: bool,
    pub seed: u64,
    pub samples: u64,
    pub tolerance: f64,
    pub reports: Vec<CheckReport>,
}

/// A failed command: message for stderr plus exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<LandeError> for Failure {
    fn from(e: LandeError) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

struct Angles {
    degrees: bool,
}

impl Angles {
    fn dir(&self, theta: f64, phi: f64) -> Result<Direction, LandeError> {
        if self.degrees {
            Direction::from_degrees(theta, phi)
        } else {
            Direction::new(theta, phi)
        }
    }
}

pub fn amplitude(args: &AmplitudeArgs, degrees: bool) -> Result<AmplitudeOutput, Failure> {
    let a = Angles { degrees };
    let from = SpinContext::new(args.from_outcome.into(), a.dir(args.from_theta, args.from_phi)?);
    let to = SpinContext::new(args.to_outcome.into(), a.dir(args.to_theta, args.to_phi)?);
    Ok(AmplitudeOutput {
        amplitude: chi(&from, &to).into(),
        probability: probability(&from, &to),
    })
}

pub fn operator(args: &OperatorArgs, degrees: bool) -> Result<OperatorOutput, Failure> {
    let a = Angles { degrees };
    let b = a.dir(args.basis_theta, args.basis_phi)?;
    let c = a.dir(args.measure_theta, args.measure_phi)?;
    let mut eigenvectors = None;
    let matrix = match args.kind {
        OperatorKind::R => {
            let (Some(r1), Some(r2)) = (args.r1, args.r2) else {
                return Err(usage("--kind r requires --r1 and --r2"));
            };
            observable_matrix(&ObservableSpec::new(r1, r2, b, c)?)
        }
        OperatorKind::SigmaC => {
            let (up, down) = sigma_c_eigenvectors(&b, &c);
            eigenvectors = Some([json::vec(up), json::vec(down)]);
            sigma_c(&b, &c)
        }
        OperatorKind::SigmaX => sigma_xy(&b, &c).0,
        OperatorKind::SigmaY => sigma_xy(&b, &c).1,
        OperatorKind::SigmaPlus => ladder_operators(&b, &c).0,
        OperatorKind::SigmaMinus => ladder_operators(&b, &c).1,
        OperatorKind::SigmaSquared => sigma_squared(),
    };
    let kind = args.kind.to_possible_value().expect("no skipped variants").get_name().to_string();
    Ok(OperatorOutput { kind, matrix: json::mat(&matrix), eigenvectors })
}

pub fn expectation(args: &ExpectationArgs, degrees: bool) -> Result<ExpectationOutput, Failure> {
    let a = Angles { degrees };
    let initial = SpinContext::new(args.outcome.into(), a.dir(args.initial_theta, args.initial_phi)?);
    let basis = a.dir(args.basis_theta, args.basis_phi)?;
    let final_axis = a.dir(args.final_theta, args.final_phi)?;
    let ev = Eigenvalues { r1: args.r1, r2: args.r2 };
    let setup = match args.case {
        Some(case) => MeasurementSetup::for_case(case.into(), initial, basis, final_axis, ev)?,
        None => MeasurementSetup::inferred(initial, basis, final_axis, ev)?,
    };
    Ok(ExpectationOutput {
        state_vector: json::vec(state_vector(&setup)),
        operator: json::mat(&operator_matrix(&setup)),
        expectation_direct: expectation_direct(&setup),
        expectation_matrix: expectation_matrix(&setup),
        eigen_consistency: eigen_consistency_report(&setup).ok(),
        setup,
    })
}

pub fn simulate(args: &SimulateArgs, degrees: bool) -> Result<SimulateOutput, Failure> {
    let a = Angles { degrees };
    let spec = ChainSpec {
        initial: SpinContext::new(args.outcome.into(), a.dir(args.initial_theta, args.initial_phi)?),
        axes: args
            .axes
            .iter()
            .map(|&(t, p)| a.dir(t, p))
            .collect::<Result<_, _>>()?,
        trials: args.trials,
        seed: args.seed,
    };
    let result = match args.workers {
        Some(w) => run_chain_with_workers(&spec, w)?,
        None => run_chain(&spec)?,
    };
    Ok(SimulateOutput { spec, result })
}

pub fn verify(args: &VerifyArgs) -> Result<VerifyOutput, Failure> {
    let reports = if args.checks.is_empty() {
        verify::run_all(args.seed, args.samples)
    } else {
        args.checks
            .iter()
            .map(|name| {
                verify::run_named(name, args.seed, args.samples).ok_or_else(|| {
                    usage(format!(
                        "unknown check {name:?}; known: {}",
                        verify::check_names().join(", ")
                    ))
                })
            })
            .collect::<Result<_, _>>()?
    };
    Ok(VerifyOutput {
        pass: verify::all_pass(&reports),
        seed: args.seed,
        samples: args.samples.max(1),
        tolerance: tolerance::default_tolerance(),
        reports,
    })
}

fn emit<T: Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure { code: EXIT_USAGE, message: format!("serialization failed: {e}") })?;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|()| out.flush()) {
        // reader went away (e.g. piped into `head`); nothing left to report
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(Failure { code: EXIT_USAGE, message: format!("writing output failed: {e}") }),
        Ok(()) => Ok(()),
    }
}

fn dispatch(cli: &Cli) -> Result<u8, Failure> {
    let deg = cli.degrees;
    match &cli.command {
        Command::Amplitude(a) => emit(&amplitude(a, deg)?)?,
        Command::Operator(a) => emit(&operator(a, deg)?)?,
        Command::Expectation(a) => emit(&expectation(a, deg)?)?,
        Command::Simulate(a) => emit(&simulate(a, deg)?)?,
        Command::Verify(a) => {
            let out = verify(a)?;
            emit(&out)?;
            if !out.pass {
                for r in out.reports.iter().filter(|r| !r.pass) {
                    eprintln!("check {} failed: max error {:e} > {:e}", r.name, r.max_abs_error, r.tolerance);
                }
                return Ok(EXIT_CHECK_FAILED);
            }
        }
    }
    Ok(0)
}

/// Entry point used by the binary. Parses `std::env::args`, applies the
/// tolerance override and runs the command.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version go to stdout with exit 0; real errors exit 2
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if let Err(e) = tolerance::init_from_env() {
        eprintln!("lande: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("lande: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
