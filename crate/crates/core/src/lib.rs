//! A one-dimensional discontinuous Galerkin laboratory for the one-way wave
//! equation `u_t + u_x = 0` with periodic boundary conditions.
//!
//! Three flux families are implemented:
//!
//! * `U` — the classical upwind flux (energy dissipative),
//! * `C` — the centered flux (energy conservative),
//! * `A(α)` — the auxiliary-variable flux pair coupling `u_h` to a second
//!   advected field `φ_h` so that the combined energy `∫(u_h² + φ_h²)` is
//!   conserved for every coupling constant `α`.
//!
//! Alongside the solver, [`dispersion`] builds the closed-form characteristic
//! equations of the semi-discrete schemes from terminating confluent
//! hypergeometric series and solves for the discrete Floquet multipliers,
//! their relative errors, and the leading-order dispersion/dissipation laws.
//! [`experiments`] drives the canned parameter studies and writes CSV data
//! plus a machine-readable verification report.

pub mod dg;
pub mod dispersion;
pub mod experiments;
pub mod mesh;
pub mod mp;
pub mod polylib;
pub mod time_march;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("mesh: {0}")]
    Mesh(String),
    #[error("hypergeometric series: (b)_m vanishes before the series terminates (a={a}, b={b})")]
    HypergeometricPole { a: i64, b: i64 },
    #[error("state/config mismatch: {0}")]
    Shape(String),
    #[error("time march aborted at t={t}: non-finite state detected (instability; reduce the CFL number)")]
    NonFinite { t: f64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
