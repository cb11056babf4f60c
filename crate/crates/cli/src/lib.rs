//! Command-line front end: JSON problem files in, solutions and residual
//! reports out.

mod build;
pub mod output;
pub mod problem;

use polysol::ring::Mode;
use polysol::{Coefficient, Complex, Interval, Rational, RenderStyle, SolveError};
use thiserror::Error;

pub use output::{OutputFormat, SolutionDocument, TermMap, VerificationDocument};
pub use problem::{parse_problem, MethodTag, PdeTag, ProblemFile, TermSpec};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

impl CliError {
    /// 2 for malformed input, 3 for solver preconditions.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Io(_) => 2,
            CliError::Solve(_) => 3,
        }
    }
}

/// Exit code for a residual check that did not pass.
pub const EXIT_VERIFICATION_FAILED: i32 = 4;

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    /// Overrides the mode of the problem file.
    pub mode: Option<Mode>,
    pub verify: bool,
    pub format: OutputFormat,
    pub style: RenderStyle,
}

/// Rendered output plus the verdict of the residual check, if one ran.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub verified: Option<bool>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self.verified {
            Some(false) => EXIT_VERIFICATION_FAILED,
            _ => 0,
        }
    }
}

/// Ring the problem is solved in. Maxwell is moved to the complex ring over
/// the requested base.
pub fn effective_mode(problem: &ProblemFile, requested: Option<Mode>) -> Result<Mode, CliError> {
    let mode = requested.unwrap_or(problem.mode());
    if problem.pde != PdeTag::Maxwell {
        return Ok(mode);
    }
    mode.complexified()
        .ok_or(CliError::Solve(SolveError::ComplexRequired("maxwell")))
}

pub(crate) trait RingTask {
    type Output;
    fn run<T: Coefficient>(self, mode: Mode) -> Self::Output;
}

pub(crate) fn with_ring<K: RingTask>(mode: Mode, task: K) -> K::Output {
    match mode {
        Mode::Double => task.run::<f64>(mode),
        Mode::Rational | Mode::RationalBig => task.run::<Rational>(mode),
        Mode::Interval => task.run::<Interval>(mode),
        Mode::Complex => task.run::<Complex<f64>>(mode),
        Mode::ComplexRational => task.run::<Complex<Rational>>(mode),
    }
}

struct SolveTask<'a> {
    problem: &'a ProblemFile,
    options: &'a Options,
}

impl RingTask for SolveTask<'_> {
    type Output = Result<Outcome, CliError>;

    fn run<T: Coefficient>(self, mode: Mode) -> Self::Output {
        let (spec, rhs) = build::problem::<T>(self.problem)?;
        let solution = polysol::solve(&spec, &rhs)?;
        let report = if self.options.verify {
            Some(polysol::verify::residual(&spec, &solution, &rhs)?)
        } else {
            None
        };
        Ok(output::render(self.problem, mode, &solution, report.as_ref(), self.options))
    }
}

struct VerifyTask<'a> {
    problem: &'a ProblemFile,
    document: &'a SolutionDocument,
    options: &'a Options,
}

impl RingTask for VerifyTask<'_> {
    type Output = Result<Outcome, CliError>;

    fn run<T: Coefficient>(self, mode: Mode) -> Self::Output {
        let (spec, rhs) = build::problem::<T>(self.problem)?;
        let solution = build::solution::<T>(self.problem, self.document)?;
        let report = polysol::verify::residual(&spec, &solution, &rhs)?;
        let options = Options { verify: true, ..*self.options };
        Ok(output::render(self.problem, mode, &solution, Some(&report), &options))
    }
}

/// Solve a parsed problem.
pub fn solve_problem(problem: &ProblemFile, options: &Options) -> Result<Outcome, CliError> {
    let mode = effective_mode(problem, options.mode)?;
    with_ring(mode, SolveTask { problem, options })
}

/// Check a previously written solution document against a problem.
///
/// The ring is taken from `options.mode`, then from the document, then from
/// the problem file.
pub fn verify_solution(
    problem: &ProblemFile,
    document: &SolutionDocument,
    options: &Options,
) -> Result<Outcome, CliError> {
    if document.pde != problem.pde || document.dim != problem.dim {
        return Err(CliError::Parse {
            path: "solution".into(),
            message: format!(
                "document is for {} in dimension {}, problem is {} in dimension {}",
                document.pde, document.dim, problem.pde, problem.dim
            ),
        });
    }
    let requested = match options.mode {
        Some(m) => Some(m),
        None => Some(document.mode.parse::<Mode>().map_err(|e| CliError::Parse {
            path: "mode".into(),
            message: e.to_string(),
        })?),
    };
    let mode = effective_mode(problem, requested)?;
    with_ring(mode, VerifyTask { problem, document, options })
}

/// Parse a solution document written by `solve --output json`.
pub fn parse_solution(text: &[u8]) -> Result<SolutionDocument, CliError> {
    let de = &mut serde_json::Deserializer::from_slice(text);
    serde_path_to_error::deserialize(de).map_err(|e| CliError::Parse {
        path: e.path().to_string(),
        message: e.into_inner().to_string(),
    })
}
