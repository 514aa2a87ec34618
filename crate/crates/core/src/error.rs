//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point must lie strictly inside the unit disk, got |z| = {modulus}")]
    NotInterior { modulus: f64 },

    #[error("point must lie on the unit circle, got |z| = {modulus}")]
    NotBoundary { modulus: f64 },

    #[error("point must lie in the closed unit disk, got |z| = {modulus}")]
    OutsideClosedDisk { modulus: f64 },

    #[error("function has a pole of modulus {modulus} inside the closed unit disk")]
    PoleInClosedDisk { modulus: f64 },

    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error(
        "subdivision budget exhausted after {segments} segments: gap {gap:.3e} > target {target:.3e}"
    )]
    CertificationBudget { segments: u32, gap: f64, target: f64 },

    #[error("nodes too close: pseudo-hyperbolic distance {rho:.3e} below {min:.3e}")]
    NodesTooClose { rho: f64, min: f64 },

    #[error("duplicate node at index {index}")]
    DuplicateNode { index: usize },

    #[error("arc closures overlap")]
    OverlappingArcs,

    #[error("invalid arc: {reason}")]
    InvalidArc { reason: String },

    #[error("decay budgets must satisfy sum(delta) < epsilon < 1, got sum {sum} and epsilon {epsilon}")]
    BudgetSchedule { sum: f64, epsilon: f64 },

    #[error("norm cap {cap} is not above the minimal norm {minimal}")]
    CapBelowMinimalNorm { cap: f64, minimal: f64 },

    #[error("Schur recursion produced a target of modulus {modulus} at stage {stage}; cap too tight")]
    SchurTargetEscaped { stage: usize, modulus: f64 },

    #[error("Blaschke normaliser underflow: |B_k(b_k)| = {value:.3e} at index {index}")]
    DegenerateCluster { index: usize, value: f64 },

    #[error("verified claim failed: {what}: value {value} violates bound {allowed}")]
    BoundViolated { what: String, value: f64, allowed: f64 },

    #[error("search infeasible: {reason}")]
    Infeasible { reason: String },

    #[error("system is singular or rank-deficient")]
    SingularSystem,

    #[error("removal schedule infeasible: total removed length {removed} >= interval length {length}")]
    InfeasibleSchedule { removed: String, length: String },

    #[error("arithmetic overflow: {reason}")]
    Overflow { reason: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// Whether the error signals a violated mathematical claim rather
    /// than bad input. The CLI maps these to a distinct exit code.
    pub fn is_math_violation(&self) -> bool {
        matches!(
            self,
            Error::BoundViolated { .. }
                | Error::CapBelowMinimalNorm { .. }
                | Error::SchurTargetEscaped { .. }
                | Error::PoleInClosedDisk { .. }
        )
    }
}
