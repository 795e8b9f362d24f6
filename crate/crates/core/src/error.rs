use serde::Serialize;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// One constraint that ruled out a candidate during a pipeline's parameter search.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstraintFailure {
    pub constraint: String,
    pub detail: String,
}

impl ConstraintFailure {
    pub fn new(constraint: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            constraint: constraint.into(),
            detail: detail.into(),
        }
    }
}

/// Machine-readable account of why a pipeline could not produce a graph at `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Infeasibility {
    pub pipeline: String,
    pub n: u64,
    pub reason: String,
    pub constraints: Vec<ConstraintFailure>,
}

impl std::fmt::Display for Infeasibility {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} infeasible at n={}: {}", self.pipeline, self.n, self.reason)?;
        for c in &self.constraints {
            write!(f, "; {}: {}", c.constraint, c.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{divisor} does not divide {value}")]
    NotDivisor { divisor: u64, value: u64 },
    #[error("no irreducible polynomial of degree {m} over GF({p})")]
    NoIrreducible { p: u64, m: u32 },
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("vertex {vertex} has odd degree {degree}")]
    OddDegree { vertex: usize, degree: usize },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph has loops; remove them first")]
    HasLoops,
    #[error("graph has no 2-factor")]
    NoTwoFactor,
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("hamilton cycle search exhausted its budget of {0} expansions")]
    HamiltonBudget(u64),
    #[error("matching infeasible: {0}")]
    MatchingInfeasible(String),
    #[error("codegree scan over {s}-sets refused for n={n} (exhaustive guard)")]
    GuardTripped { s: usize, n: usize },
    #[error("eigensolver did not converge after {0} sweeps")]
    NonConvergence(usize),
    #[error("{0}")]
    Infeasible(Infeasibility),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code the CLI uses for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Infeasible(_) => 4,
            Error::InvalidParameter(_)
            | Error::NotPrime(_)
            | Error::NotDivisor { .. }
            | Error::Parse { .. }
            | Error::Io(_) => 2,
            _ => 3,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
