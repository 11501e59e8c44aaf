//! The operator route: temporal eigenfrequencies of the assembled Bloch
//! symbol, cross-validated against the closed-form characteristic
//! equations.
//!
//! The symbol diagonalizes the very matrices the solver applies, so
//! agreement here ties the hypergeometric analysis to the code that
//! actually marches states forward.

use num_complex::Complex64;

use super::chars::char_roots_c;
use super::linalg;
use crate::dg::{bloch_symbol, SchemeConfig};

/// Dimensionless temporal frequencies `Ω_h` of the scheme at Bloch phase
/// `θ = kh`: eigenvalues `μ` of the h-scaled symbol satisfy `μ = -iΩ_h`.
///
/// Dissipative schemes produce complex frequencies (negative imaginary part
/// of `μ` maps to positive imaginary `Ω_h`... the sign bookkeeping is
/// `Ω_h = iμ`).
pub fn symbol_frequencies(config: &SchemeConfig, theta: f64) -> Vec<Complex64> {
    let lambda = Complex64::from_polar(1.0, theta);
    let sym = bloch_symbol(config, lambda);
    let i = Complex64::new(0.0, 1.0);
    eigenvalues(&sym).into_iter().map(|mu| i * mu).collect()
}

/// All eigenvalues of a small complex matrix via its characteristic
/// polynomial: determinant samples on a circle, inverse-DFT interpolation,
/// Durand–Kerner roots, then a Newton polish on the determinant itself.
fn eigenvalues(m: &[Vec<Complex64>]) -> Vec<Complex64> {
    let d = m.len();
    let radius = 1.0 + linalg::inf_norm(m);
    let samples = d + 1;
    let mut values = Vec::with_capacity(samples);
    for s in 0..samples {
        let angle = 2.0 * std::f64::consts::PI * s as f64 / samples as f64;
        let x = Complex64::from_polar(radius, angle);
        values.push(det_shifted(m, x));
    }
    // coefficients c_k of p(x) = Σ c_k x^k from the DFT samples
    let mut coeffs = vec![Complex64::new(0.0, 0.0); samples];
    for (k, c) in coeffs.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (s, v) in values.iter().enumerate() {
            let angle = -2.0 * std::f64::consts::PI * (k * s) as f64 / samples as f64;
            acc += v * Complex64::from_polar(1.0, angle);
        }
        *c = acc / samples as f64 / radius.powi(k as i32);
    }
    let mut roots = durand_kerner(&coeffs);
    for r in roots.iter_mut() {
        *r = newton_polish(m, *r);
    }
    roots
}

fn det_shifted(m: &[Vec<Complex64>], x: Complex64) -> Complex64 {
    let d = m.len();
    let shifted: Vec<Vec<Complex64>> = (0..d)
        .map(|r| {
            (0..d)
                .map(|c| if r == c { m[r][c] - x } else { m[r][c] })
                .collect()
        })
        .collect();
    linalg::det(shifted)
}

/// Durand–Kerner simultaneous iteration; adequate for the well-separated
/// degree ≤ 8 polynomials the symbol produces.
fn durand_kerner(coeffs: &[Complex64]) -> Vec<Complex64> {
    let degree = coeffs.len() - 1;
    let lead = coeffs[degree];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |x: Complex64| -> Complex64 {
        monic
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
    };
    let scale = 1.0
        + monic[..degree]
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..degree)
        .map(|k| scale * seed.powu(k as u32 + 1))
        .collect();
    for _ in 0..200 {
        let mut moved = 0.0f64;
        for i in 0..degree {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..degree {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-14 * scale {
            break;
        }
    }
    roots
}

/// A few Newton steps on `det(M - xI)` with a centered-difference slope.
fn newton_polish(m: &[Vec<Complex64>], mut x: Complex64) -> Complex64 {
    for _ in 0..6 {
        let f = det_shifted(m, x);
        let delta = 1e-7 * (1.0 + x.norm());
        let dplus = det_shifted(m, x + delta);
        let dminus = det_shifted(m, x - delta);
        let slope = (dplus - dminus) / (2.0 * delta);
        if slope.norm() == 0.0 {
            break;
        }
        let step = f / slope;
        x -= step;
        if step.norm() < 1e-15 * (1.0 + x.norm()) {
            break;
        }
    }
    x
}

/// Spatial Floquet multiplier of the assembled operator at a real temporal
/// frequency `Ω`: Newton-inverts the symbol's dispersion relation
/// `physical Ω_h(λ) = Ω` over complex `λ`, starting from `e^{iΩ}`.
///
/// This is the fixed-frequency direction of the operator route and can be
/// compared directly against the closed-form multipliers and the tabulated
/// relative errors.
pub fn operator_multiplier(config: &SchemeConfig, omega: f64) -> Complex64 {
    let physical_excess = |lam: Complex64| -> Complex64 {
        let sym = bloch_symbol(config, lam);
        let i = Complex64::new(0.0, 1.0);
        eigenvalues(&sym)
            .into_iter()
            .map(|mu| i * mu)
            .min_by(|a, b| (a - omega).norm().total_cmp(&(b - omega).norm()))
            .expect("nonempty spectrum")
            - omega
    };
    let mut lam = Complex64::from_polar(1.0, omega);
    for _ in 0..40 {
        let f = physical_excess(lam);
        let delta = 1e-7;
        let slope = (physical_excess(lam * (1.0 + delta)) - physical_excess(lam * (1.0 - delta)))
            / (2.0 * delta * lam);
        if slope.norm() == 0.0 {
            break;
        }
        let step = f / slope;
        lam -= step;
        if step.norm() < 1e-15 * lam.norm() {
            break;
        }
    }
    lam
}

/// One Bloch phase of the cross-validation.
#[derive(Debug, Clone, Copy)]
pub struct CrossValidationRow {
    pub theta: f64,
    /// Physical temporal frequency from the operator symbol.
    pub omega_h: Complex64,
    /// `min |λ_root(Ω_h) - e^{iθ}|` over the closed-form characteristic
    /// roots evaluated at the symbol's frequency.
    pub mismatch: f64,
}

/// Result of sweeping the symbol across equispaced Bloch phases.
#[derive(Debug, Clone)]
pub struct CrossValidation {
    pub rows: Vec<CrossValidationRow>,
    pub max_mismatch: f64,
}

/// Sweeps `n_thetas` equispaced phases `θ ∈ (0, π)` and checks that the
/// closed-form characteristic equation, evaluated at the symbol's physical
/// frequency, reproduces the Bloch multiplier `e^{iθ}`.
pub fn cross_validate(config: &SchemeConfig, n_thetas: usize) -> CrossValidation {
    let mut rows = Vec::with_capacity(n_thetas);
    let mut max_mismatch = 0.0f64;
    for m in 1..=n_thetas {
        let theta = std::f64::consts::PI * m as f64 / (n_thetas + 1) as f64;
        let freqs = symbol_frequencies(config, theta);
        // the physical branch tracks Ω_h ≈ θ
        let omega_h = freqs
            .into_iter()
            .min_by(|a, b| (a - theta).norm().total_cmp(&(b - theta).norm()))
            .expect("symbol has at least one eigenvalue");
        let z = Complex64::new(0.0, 1.0) * omega_h;
        let roots = char_roots_c(&config.flux, config.degree, z);
        let target = Complex64::from_polar(1.0, theta);
        let mismatch = roots
            .iter()
            .map(|r| (r - target).norm())
            .fold(f64::MAX, f64::min);
        max_mismatch = max_mismatch.max(mismatch);
        rows.push(CrossValidationRow {
            theta,
            omega_h,
            mismatch,
        });
    }
    CrossValidation { rows, max_mismatch }
}
