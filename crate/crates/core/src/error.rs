//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by construction, transform, and estimation routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |M - M\u{2020}| = {deviation:.3e}, tolerance {tol:.3e})")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("matrix has eigenvalue {value:.3e} below the PSD tolerance -1e-10")]
    NegativeEigenvalue { value: f64 },

    #[error("subnormalization alpha = {alpha:.6e} is below the spectral norm {norm:.6e}")]
    AlphaTooSmall { alpha: f64, norm: f64 },

    #[error("matrix is not a contraction (spectral norm {norm:.6e} > 1)")]
    NotContraction { norm: f64 },

    #[error("block-encoding does not have the expected 2Nx2N block structure: {0}")]
    BadBlockStructure(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("beta = {0} is outside (0, 1]")]
    BetaOutOfRange(f64),

    #[error("matrix dimension {0} is not 2^n for the requested {1} qubits")]
    DimensionNotPowerOfTwo(usize, usize),

    #[error("all coefficients are zero")]
    AllZero,

    #[error("{terms} terms exceed the capacity 2^{ancillas} of the ancilla register")]
    TooManyTerms { terms: usize, ancillas: usize },

    #[error("matrix entry at ({row}, {col}) has modulus {value:.6e} > 1")]
    EntryOutOfRange { row: usize, col: usize, value: f64 },

    #[error("signal value x = {0} is outside [-1, 1]")]
    XOutOfRange(f64),

    #[error("matrix is not unitary (||UU\u{2020} - I||_F = {0:.3e})")]
    NotUnitary(f64),

    #[error("target polynomial is not admissible: {0}")]
    NotAdmissible(String),

    #[error("angle finding did not converge: residual {residual:.3e} > tolerance {tol:.3e} after {iterations} iterations")]
    NoConvergence { residual: f64, tol: f64, iterations: usize },

    #[error("block-encoded payload is not Hermitian (deviation {0:.3e})")]
    NotHermitianPayload(f64),

    #[error("phase-sequence convention mismatch: expected {expected}, got {got}")]
    ConventionMismatch { expected: &'static str, got: &'static str },

    #[error("eps = {0} is outside (0, 1)")]
    BadEps(f64),

    #[error("fitted polynomial exceeds 1 on the domain (max |p| = {0:.6e})")]
    PolynomialOverflow(f64),

    #[error("degree {degree} cannot realize a usable step (plateau error {achieved:.3e}, minimum achievable {minimum:.3e})")]
    InfeasibleDegree { degree: usize, achieved: f64, minimum: f64 },

    #[error("post-selection outcome has probability zero")]
    ZeroProbability,

    #[error("Pauli string length {string_len} does not match qubit count {qubits}")]
    LengthMismatch { string_len: usize, qubits: usize },

    #[error("parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
