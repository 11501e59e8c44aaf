//! Floquet multiplier solves and high-precision relative errors.

use num_complex::Complex64;

use super::chars;
use super::leading::{alpha_star, MethodTag};
use crate::dg::FluxKind;
use crate::mp::{exp_i, Cmpf, Mpf};
use crate::{Error, Result};

/// Roots of the auxiliary-scheme characteristic equation at `(N, Ω, α)`,
/// classified into the physical pair tracking `e^{±iΩ}` and spurious rest.
#[derive(Debug, Clone)]
pub struct FloquetSolution {
    pub degree: usize,
    pub omega: f64,
    pub alpha: f64,
    /// All multipliers (2 for α² = 1, else 4).
    pub roots: Vec<Complex64>,
    /// Multiplier tracking `e^{+iΩ}`.
    pub lambda_plus: Complex64,
    /// Multiplier tracking `e^{-iΩ}`.
    pub lambda_minus: Complex64,
    pub spurious: Vec<Complex64>,
    /// Eigenfunction ratio paired with `lambda_plus` (α² = 1 only).
    pub mu_plus: Option<Complex64>,
    /// Discrete wavenumber times `h` for the + mode: `-i Log λ⁺`, real part
    /// in `[-π, π]`.
    pub kh_plus: Complex64,
    pub kh_minus: Complex64,
    /// Relative error `(e^{iΩ} - λ⁺)/e^{iΩ}` in high precision.
    pub rho_plus: Complex64,
    pub rho_minus: Complex64,
    /// Set when the characteristic discriminant nearly vanishes; the
    /// physical/spurious split is then unreliable.
    pub repeated_roots: bool,
}

impl FloquetSolution {
    /// `R_{h,N}`: the relative accuracy of the + multiplier. Identical to
    /// `rho_plus`; both names exist because the general-α and α=1 analyses
    /// define them separately.
    pub fn relative_error(&self) -> (Complex64, Complex64) {
        (self.rho_plus, self.rho_plus)
    }

    pub fn n_spurious(&self) -> usize {
        self.spurious.len()
    }
}

/// Distance `|λ - target|²` in multiprecision.
fn dist2(lambda: &Cmpf, target: &Cmpf) -> Mpf {
    lambda.sub(target).norm_sqr()
}

/// Solves the auxiliary-scheme characteristic equation and classifies roots.
///
/// Everything is computed in scaled-integer arithmetic: the relative errors
/// of the physical roots shrink like `Ω^{2N+3}` (or `Ω^{2N+5}` with the
/// optimized α) and fall below the `f64` cancellation floor long before the
/// fit ranges end. Results are rounded to `f64` on the way out; components
/// beyond `f64` range flush to zero.
pub fn solve_floquet(n: usize, omega: f64, alpha: f64) -> Result<FloquetSolution> {
    if omega.is_nan() || omega <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "Ω must be positive, got {omega}"
        )));
    }
    if omega > 4.0 {
        return Err(Error::Unsupported(
            "the multiprecision kernels are tuned for Ω ≤ 4".into(),
        ));
    }
    if !alpha.is_finite() {
        return Err(Error::InvalidArgument("α must be finite".into()));
    }
    let omega_mp = Mpf::from_f64(omega);
    let flux = FluxKind::Aux { alpha };
    let (roots_mp, repeated) = chars::char_roots_mp(&flux, n, &omega_mp);
    let (sol, _) = classify(n, omega, alpha, &omega_mp, roots_mp, repeated)?;
    Ok(sol)
}

/// Shared pairing and error extraction; returns the solution plus the
/// multiprecision `λ⁺` for callers that keep computing.
fn classify(
    n: usize,
    omega: f64,
    alpha: f64,
    omega_mp: &Mpf,
    roots_mp: Vec<Cmpf>,
    repeated_roots: bool,
) -> Result<(FloquetSolution, Cmpf)> {
    let e_plus = exp_i(omega_mp);
    let e_minus = e_plus.conj();

    let pick = |cands: &[Cmpf], target: &Cmpf, skip: Option<usize>| -> usize {
        let mut best = usize::MAX;
        let mut best_d: Option<Mpf> = None;
        for (i, r) in cands.iter().enumerate() {
            if Some(i) == skip {
                continue;
            }
            let d = dist2(r, target);
            if best_d.as_ref().is_none_or(|b| d < *b) {
                best = i;
                best_d = Some(d);
            }
        }
        best
    };

    let i_plus = pick(&roots_mp, &e_plus, None);
    let i_minus = pick(&roots_mp, &e_minus, Some(i_plus));

    let lambda_plus_mp = roots_mp[i_plus].clone();
    let lambda_minus_mp = roots_mp[i_minus].clone();

    // ρ^± = (e^{±iΩ} - λ^±)/e^{±iΩ}, kept in multiprecision until the end.
    let rho_plus = e_plus.sub(&lambda_plus_mp).div(&e_plus).to_c64();
    let rho_minus = e_minus.sub(&lambda_minus_mp).div(&e_minus).to_c64();

    let roots: Vec<Complex64> = roots_mp.iter().map(|r| r.to_c64()).collect();
    let spurious: Vec<Complex64> = roots
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != i_plus && *i != i_minus)
        .map(|(_, r)| *r)
        .collect();

    let mu_plus = if (1.0 - alpha * alpha).abs() < 1e-12 {
        Some(pair_mu(n, omega_mp, &lambda_plus_mp))
    } else {
        None
    };

    let sol = FloquetSolution {
        degree: n,
        omega,
        alpha,
        lambda_plus: roots[i_plus],
        lambda_minus: roots[i_minus],
        roots,
        spurious,
        mu_plus,
        kh_plus: discrete_wavenumber(omega, rho_plus),
        kh_minus: discrete_wavenumber(-omega, rho_minus),
        rho_plus,
        rho_minus,
        repeated_roots,
    };
    Ok((sol, lambda_plus_mp))
}

/// `k_h h = -i Log λ` written through the relative error: with
/// `λ = e^{iΩ}(1 - ρ)`, `k_h h = Ω - i Log(1 - ρ)`. The log is expanded in
/// series for small `ρ` so the deviation from `Ω` survives even when it is
/// far below `f64` resolution relative to `Ω` itself.
pub fn discrete_wavenumber(omega: f64, rho: Complex64) -> Complex64 {
    let log1m = if rho.norm() < 1e-4 {
        // -Σ ρ^k / k
        let mut acc = Complex64::new(0.0, 0.0);
        let mut pow = Complex64::new(1.0, 0.0);
        for k in 1..=6 {
            pow *= rho;
            acc -= pow / k as f64;
        }
        acc
    } else {
        (Complex64::new(1.0, 0.0) - rho).ln()
    };
    Complex64::new(omega, 0.0) - Complex64::new(0.0, 1.0) * log1m
}

/// Of the two roots of `μ² - Zμ - 1 = 0`, returns the one whose eigenvector
/// relation `λ(μ) = (F_N^+ + μ F_{N+1}^+)/(F_{N+1}^- + μ F_N^-)` reproduces
/// the given multiplier.
fn pair_mu(n: usize, omega_mp: &Mpf, lambda: &Cmpf) -> Complex64 {
    let (_, m1, m2) = chars::mu_roots_mp(n, omega_mp);
    let [fm, fp, gm, gp] = chars::quartet_mp(n, omega_mp);
    let lambda_of = |mu: &Cmpf| fp.add(&mu.mul(&gp)).div(&gm.add(&mu.mul(&fm)));
    let d1 = dist2(&lambda_of(&m1), lambda);
    let d2 = dist2(&lambda_of(&m2), lambda);
    if d1 < d2 {
        m1.to_c64()
    } else {
        m2.to_c64()
    }
}

/// High-precision relative error `R = (e^{iΩ} - λ)/e^{iΩ}` of the physical
/// + multiplier for any of the four tabulated methods.
pub fn floquet_error(tag: MethodTag, n: usize, omega: f64) -> Result<Complex64> {
    if omega.is_nan() || omega <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "Ω must be positive, got {omega}"
        )));
    }
    let omega_mp = Mpf::from_f64(omega);
    let flux = match tag {
        MethodTag::U => FluxKind::Upwind,
        MethodTag::C => FluxKind::Centered,
        MethodTag::A => FluxKind::Aux { alpha: 1.0 },
        MethodTag::AStar => FluxKind::Aux {
            alpha: alpha_star(n),
        },
    };
    let (roots, _) = chars::char_roots_mp(&flux, n, &omega_mp);
    let e_plus = exp_i(&omega_mp);
    let best = roots
        .iter()
        .min_by(|a, b| {
            dist2(a, &e_plus)
                .partial_cmp(&dist2(b, &e_plus))
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .expect("at least one root");
    Ok(e_plus.sub(best).div(&e_plus).to_c64())
}

/// Log-magnitude (base 10) of the + mode relative error; stays meaningful
/// even when the error underflows `f64`.
pub fn floquet_error_log10(tag: MethodTag, n: usize, omega: f64) -> Result<f64> {
    if omega.is_nan() || omega <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "Ω must be positive, got {omega}"
        )));
    }
    let omega_mp = Mpf::from_f64(omega);
    let flux = match tag {
        MethodTag::U => FluxKind::Upwind,
        MethodTag::C => FluxKind::Centered,
        MethodTag::A => FluxKind::Aux { alpha: 1.0 },
        MethodTag::AStar => FluxKind::Aux {
            alpha: alpha_star(n),
        },
    };
    let (roots, _) = chars::char_roots_mp(&flux, n, &omega_mp);
    let e_plus = exp_i(&omega_mp);
    let best = roots
        .iter()
        .min_by(|a, b| {
            dist2(a, &e_plus)
                .partial_cmp(&dist2(b, &e_plus))
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .expect("at least one root");
    e_plus
        .sub(best)
        .div(&e_plus)
        .log10_abs()
        .ok_or_else(|| Error::Degenerate("relative error is exactly zero".into()))
}
