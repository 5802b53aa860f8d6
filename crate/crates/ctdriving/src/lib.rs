//! Counterdiabatic driving fields for time-dependent quantum Hamiltonians,
//! the energetic cost of applying them, and two-time-measurement work
//! statistics.
//!
//! The crate is organized around a small set of dense complex-matrix types:
//!
//! - [`operator`]: Hermitian operators, pure/mixed quantum states, spectral
//!   decompositions with degeneracy grouping, thermal states.
//! - [`propagation`]: time-dependent Hamiltonian [`Schedule`]s, fixed-step
//!   RK4 propagation of states and unitaries, projector derivatives.
//! - [`counterdiabatic`]: the transitionless field, measurement-selected
//!   fields, and the cost functionals built from their Frobenius norms,
//!   plus the exigency (a driving-free proxy for the cost).
//! - [`work`]: two-time energy-measurement work distributions, adiabatic
//!   work, inner friction, and the friction-vs-cost benefit comparison.
//! - [`models`]: Landau-Zener, transverse-field Ising (dense and
//!   momentum-sector), truncated harmonic oscillator, and
//!   Lipkin-Meshkov-Glick builders with their analytic reference fields.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything here can be shared freely across threads.

pub mod counterdiabatic;
pub mod error;
pub mod fit;
pub mod models;
pub mod operator;
pub mod propagation;
pub mod work;

pub use error::{Error, Result};
pub use operator::{HermitianOperator, QuantumState, SpectralDecomposition};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
/// Dense complex matrix.
pub type CMatrix = nalgebra::DMatrix<C64>;
/// Dense complex vector.
pub type CVector = nalgebra::DVector<C64>;
