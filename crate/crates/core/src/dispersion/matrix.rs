//! The 4×4 eigenvalue-condition matrix `M(λ)` of the general-α auxiliary
//! scheme, whose vanishing determinant characterizes the Bloch modes.

use num_complex::Complex64;

use super::chars::{abc_c, quartet_c};
use super::linalg;
use crate::{Error, Result};

/// Assembles `M(λ)` at `(N, Ω, α)`. `λ = 0` is rejected: the characteristic
/// identity divides by `λ²`.
pub fn build_m(n: usize, omega: f64, alpha: f64, lambda: Complex64) -> Result<[[Complex64; 4]; 4]> {
    if lambda.norm() == 0.0 {
        return Err(Error::InvalidArgument("λ = 0 in M(λ)".into()));
    }
    let [fm, fp, gm, gp] = quartet_c(n, Complex64::new(0.0, omega));
    let sigma = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    Ok([
        [lambda * gm - fp, lambda * fm - gp, zero, zero],
        [zero, zero, lambda * gp - fm, lambda * fp - gm],
        [lambda * sigma, -one, -alpha * lambda, -alpha * sigma * one],
        [alpha * lambda * sigma, alpha * one, -lambda, sigma * one],
    ])
}

/// Normalized residual of the characteristic identity
/// `det M(λ)/λ² = a_N (λ + 1/λ)² + b_N (λ + 1/λ) + c_N`.
///
/// The determinant on the left is computed by LU, independent of the
/// closed-form coefficients on the right.
pub fn det_m_identity_residual(n: usize, omega: f64, alpha: f64, lambda: Complex64) -> Result<f64> {
    let m = build_m(n, omega, alpha, lambda)?;
    let det = linalg::det(m.iter().map(|r| r.to_vec()).collect());
    let lhs = det / (lambda * lambda);
    let (a, b, c) = abc_c(n, Complex64::new(0.0, omega), alpha);
    let z = lambda + 1.0 / lambda;
    let rhs = a * z * z + b * z + c;
    Ok((lhs - rhs).norm() / (1.0 + det.norm()))
}
