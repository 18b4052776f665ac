//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the library.
///
/// `InfeasibleCoupling` is special: it does not signal a malformed input but a
/// mathematically valid configuration that admits no adversarial detector
/// coupling (the no-click budget is too small to hide every overlap run).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("amplitude vector length {len} is not a power of two (>= 2)")]
    InvalidAmplitudeCount { len: usize },

    #[error("state vector is not normalized: sum |a_i|^2 = {norm_sqr}")]
    NotNormalized { norm_sqr: f64 },

    #[error("gate matrix is not unitary (max deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("qubit index {index} out of range for {n} qubits")]
    QubitIndexOutOfRange { index: usize, n: usize },

    #[error("qubit count {n} too small, need at least {min}")]
    QubitCountTooSmall { n: usize, min: usize },

    #[error("theta = {theta} lies outside the open interval (0, pi/2)")]
    ThetaOutOfRange { theta: f64 },

    #[error("model parameter {value} lies outside [0, 1]")]
    ParameterOutOfRange { value: f64 },

    #[error("probability {value} lies outside [0, 1]")]
    ProbabilityOutOfRange { value: f64 },

    #[error("preparation label {x} does not fit in {n} bits")]
    PreparationOutOfRange { x: usize, n: usize },

    #[error("invalid range [{lo}, {hi}] with {steps} steps")]
    InvalidRange { lo: f64, hi: f64, steps: usize },

    #[error("invalid probability matrix: {detail}")]
    InvalidProbabilityMatrix { detail: String },

    #[error("matching and matrix disagree on dimension ({matching} vs {matrix})")]
    DimensionMismatch { matching: usize, matrix: usize },

    #[error("matching max probability {achieved_max:.3e} exceeds tolerance {tol:.3e}")]
    MatchingAboveTolerance { achieved_max: f64, tol: f64 },

    #[error("no coupling hides the overlap runs: p^n - (1 - eta^n) = {margin:.6e} > 0")]
    InfeasibleCoupling { margin: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
