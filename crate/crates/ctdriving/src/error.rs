//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors produced by construction, decomposition, and propagation routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),

    #[error("matrix is not Hermitian: max |A - A^H| = {defect:.3e} exceeds {tol:.3e}")]
    NotHermitian { defect: f64, tol: f64 },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(
        "eigensolver did not converge (dim {dim}, max |entry| = {scale:.3e}); \
         the matrix may be badly conditioned"
    )]
    Eigensolver { dim: usize, scale: f64 },

    #[error(
        "degenerate crossing at t = {t}: eigenvalue groups separated by {gap:.3e} \
         are coupled by the Hamiltonian derivative (coupling {coupling:.3e}); \
         counterdiabatic driving is undefined here"
    )]
    DegenerateCrossing { t: f64, gap: f64, coupling: f64 },

    #[error("integration diverged at step {step} (t = {t})")]
    IntegrationDiverged { step: usize, t: f64 },

    #[error("propagator is not unitary: max |U^H U - I| = {defect:.3e}")]
    NonUnitary { defect: f64 },

    #[error("level tracking ambiguous: {0}")]
    TrackingAmbiguous(String),
}

pub type Result<T> = std::result::Result<T, Error>;
