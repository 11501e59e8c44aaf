//! Floquet/Bloch dispersion analysis of the semi-discrete DG schemes.
//!
//! For every flux family the Bloch substitution reduces the scheme on a
//! uniform mesh to an algebraic characteristic equation in the Floquet
//! multiplier `λ`, with coefficients built from the terminating confluent
//! hypergeometric quartet. The physical multipliers approximate `e^{±iΩ}`
//! with relative errors that decay like high powers of `Ω`; quantifying
//! those errors is the point of this module.
//!
//! Two independent routes are maintained throughout:
//!
//! * the closed-form characteristic equations (`chars`), evaluated both in
//!   `f64` and in scaled-integer multiprecision — the latter because the
//!   relative errors sit dozens of decades below the `f64` cancellation
//!   noise floor on the fit ranges;
//! * the assembled operator symbol (`operator`), which diagonalizes the
//!   very matrices the time march applies and must agree with the closed
//!   forms wherever both are meaningful.

mod chars;
mod leading;
mod linalg;
mod matrix;
mod operator;
mod pade;
mod regime;
mod solve;

pub use chars::{
    characteristic_coefficients, characteristic_multipliers, CharacteristicCoefficients,
};
pub use leading::{
    alpha_star, c_n, d_n, e_n_exact, e_n_printed, leading_term, table1_exact, ErrorComponent,
    LeadingTermModel, MethodTag, E_TABLE,
};
pub use matrix::{build_m, det_m_identity_residual};
pub use operator::{
    cross_validate, operator_multiplier, symbol_frequencies, CrossValidation, CrossValidationRow,
};
pub use pade::{est_lam_residual, est_x_residual, pade_remainder, PadeRemainder};
pub use regime::{classify_regime, AsymptoticRegime, RegimeLabel};
pub use solve::{
    discrete_wavenumber, floquet_error, floquet_error_log10, solve_floquet, FloquetSolution,
};

/// Dispersion/dissipation split of a relative multiplier error.
///
/// With `R ≈ i(k - k_h)h`, the real part of `(k - k_h)h` (the dispersion
/// error) is `Im R` and the imaginary part (the dissipation error) is
/// `-Re R`.
pub fn dispersion_split(r: num_complex::Complex64) -> (f64, f64) {
    (r.im, -r.re)
}
