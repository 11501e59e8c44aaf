//! Closed-form characteristic equations of the Bloch-reduced schemes, built
//! from the hypergeometric quartet.
//!
//! Taking `z = iΩ` (complex `Ω` is allowed; the operator cross-validation
//! feeds complex frequencies for the dissipative scheme):
//!
//! * upwind: `λ = F_N^+ / F_{N+1}^-` — the [N/N+1] Padé multiplier;
//! * centered: `(-1)^{N+1} F_N^- λ² - (F_{N+1}^- + (-1)^{N+1} F_{N+1}^+) λ + F_N^+ = 0`;
//! * auxiliary: `a_N z² + b_N z + c_N = 0` in `z = λ + 1/λ`, which is linear
//!   for `α² = 1` where `z = Ξ_N`.
//!
//! The upwind and centered forms follow from the same test-function
//! elimination that produces the auxiliary quadratic, applied to the
//! single-field scheme; the degree-0 cases collapse to the classical
//! first-order upwind and central-difference relations, which the tests pin.

use num_complex::Complex64;

use crate::dg::FluxKind;
use crate::mp::{Cmpf, Mpf};
use crate::polylib::hyp1f1_terminating;

/// `[F_N^-, F_N^+, F_{N+1}^-, F_{N+1}^+]` at `z = iΩ`; the `±` superscript
/// is the sign of the argument, so conjugacy only holds for real `Ω`.
pub(crate) fn quartet_c(n: usize, z: Complex64) -> [Complex64; 4] {
    let a = -(n as i64);
    let b = -(2 * n as i64) - 1;
    let fn_plus = hyp1f1_terminating(a, b, z).expect("pole-free");
    let fn_minus = hyp1f1_terminating(a, b, -z).expect("pole-free");
    let fnp1_plus = hyp1f1_terminating(a - 1, b, z).expect("pole-free");
    let fnp1_minus = hyp1f1_terminating(a - 1, b, -z).expect("pole-free");
    [fn_minus, fn_plus, fnp1_minus, fnp1_plus]
}

/// Multiprecision quartet at real `Ω` (conjugate symmetry is exploited).
pub(crate) fn quartet_mp(n: usize, omega: &Mpf) -> [Cmpf; 4] {
    let a = -(n as i64);
    let b = -(2 * n as i64) - 1;
    let z = Cmpf::new(Mpf::zero(), omega.clone());
    let fn_plus = hyp1f1_mp(a, b, &z);
    let fnp1_plus = hyp1f1_mp(a - 1, b, &z);
    [fn_plus.conj(), fn_plus.clone(), fnp1_plus.conj(), fnp1_plus]
}

fn hyp1f1_mp(a: i64, b: i64, z: &Cmpf) -> Cmpf {
    let mut sum = Cmpf::one();
    let mut term = Cmpf::one();
    for m in 0..(-a) {
        term = term.mul(z).scale_i64(a + m).div_i64((b + m) * (m + 1));
        sum = sum.add(&term);
    }
    sum
}

/// `sigma = (-1)^N`, the parity sign threading every coefficient formula.
fn sign_of(n: usize) -> f64 {
    if n.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// The auxiliary-scheme quadratic coefficients `(a_N, b_N, c_N)` in
/// `z = λ + 1/λ`, complex-`Ω`-capable. For real `Ω` they are real.
pub(crate) fn abc_c(n: usize, z: Complex64, alpha: f64) -> (Complex64, Complex64, Complex64) {
    let [fm, fp, gm, gp] = quartet_c(n, z);
    let sigma = sign_of(n);
    let one_m = sigma * (1.0 - alpha * alpha);
    let one_p = 1.0 + alpha * alpha;
    let a = one_m * fm * fp;
    let b = -one_m * (fm * gm + fp * gp) + one_p * (fp * gm + fm * gp);
    let sum_sq = fm * fm + fp * fp + gm * gm + gp * gp;
    let c = 2.0 * one_m * (gm * gp - fm * fp) - one_p * sum_sq;
    (a, b, c)
}

fn abc_mp(n: usize, omega: &Mpf, alpha: &Mpf) -> (Mpf, Mpf, Mpf) {
    let [fm, fp, gm, gp] = quartet_mp(n, omega);
    let alpha2 = alpha * alpha;
    let one_m = &Mpf::one() - &alpha2;
    let one_m = if n.is_multiple_of(2) { one_m } else { -&one_m };
    let one_p = &Mpf::one() + &alpha2;
    // All combinations below are real for real Ω; keep the real parts.
    let fmfp = fm.mul(&fp);
    let gmgp = gm.mul(&gp);
    let cross1 = fm.mul(&gm).add(&fp.mul(&gp));
    let cross2 = fp.mul(&gm).add(&fm.mul(&gp));
    let sum_sq = fm
        .mul(&fm)
        .add(&fp.mul(&fp))
        .add(&gm.mul(&gm))
        .add(&gp.mul(&gp));
    let a = &one_m * &fmfp.re;
    let b = &(-&(&one_m * &cross1.re)) + &(&one_p * &cross2.re);
    let c = &(&one_m * &(&gmgp.re - &fmfp.re)).mul_i64(2) - &(&one_p * &sum_sq.re);
    (a, b, c)
}

/// `Ξ_N` and the (sign-corrected) `Z_N` ratios plus the quadratic
/// coefficients, with degeneracy flags for the two denominators.
#[derive(Debug, Clone, Copy)]
pub struct CharacteristicCoefficients {
    pub degree: usize,
    pub omega: f64,
    pub alpha: f64,
    /// `Ξ_N`: real for real `Ω`.
    pub xi: Complex64,
    /// `Z_N`: purely imaginary for real `Ω`.
    pub z: Complex64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Set when the `Ξ_N` ratio denominator nearly vanishes; `a, b, c` stay
    /// valid since that route has no denominator.
    pub xi_degenerate: bool,
    pub z_degenerate: bool,
}

/// Builds `Ξ_N`, `Z_N` and the quadratic coefficients `a_N, b_N, c_N` at
/// `(N, Ω, α)`.
///
/// `Z_N` uses the elimination form
/// `[(F_N^-)² + (F_N^+)² - (F_{N+1}^-)² - (F_{N+1}^+)²] / [F_N^- F_{N+1}^- - F_N^+ F_{N+1}^+]`,
/// which is the one that is purely imaginary for real `Ω` and whose roots
/// satisfy the `μ² - Z μ - 1 = 0` quadratic.
pub fn characteristic_coefficients(n: usize, omega: f64, alpha: f64) -> CharacteristicCoefficients {
    let z_arg = Complex64::new(0.0, omega);
    let [fm, fp, gm, gp] = quartet_c(n, z_arg);
    let sum_all = fm * fm + fp * fp + gm * gm + gp * gp;
    let xi_den = fm * gp + fp * gm;
    let xi = sum_all / xi_den;
    let z_num = fm * fm + fp * fp - gm * gm - gp * gp;
    let z_den = fm * gm - fp * gp;
    let z = z_num / z_den;
    let (a, b, c) = abc_c(n, z_arg, alpha);
    CharacteristicCoefficients {
        degree: n,
        omega,
        alpha,
        xi,
        z,
        a: a.re,
        b: b.re,
        c: c.re,
        xi_degenerate: xi_den.norm() < 1e-12 * (1.0 + sum_all.norm()),
        z_degenerate: z_den.norm() < 1e-12 * (1.0 + z_num.norm()),
    }
}

/// Stable complex quadratic solve of `a x² + b x + c = 0` (a ≠ 0).
fn quadratic_c(a: Complex64, b: Complex64, c: Complex64) -> (Complex64, Complex64) {
    let disc = b * b - 4.0 * a * c;
    let mut s = disc.sqrt();
    if (b.conj() * s).re < 0.0 {
        s = -s;
    }
    let q = -0.5 * (b + s);
    if q.norm() == 0.0 {
        (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
    } else {
        (q / a, c / q)
    }
}

fn quadratic_mp(a: &Cmpf, b: &Cmpf, c: &Cmpf) -> (Cmpf, Cmpf) {
    let disc = b.mul(b).sub(&a.mul(c).scale_i64(4));
    let mut s = disc.sqrt();
    if b.conj().mul(&s).re.is_negative() {
        s = s.neg();
    }
    let q = b.add(&s).div_i64(-2);
    (q.div(a), c.div(&q))
}

/// Roots of `λ² - zλ + 1 = 0`; the product of the pair is exactly 1, which
/// the second root exploits for accuracy.
fn lambda_pair_c(z: Complex64) -> (Complex64, Complex64) {
    let four = Complex64::new(4.0, 0.0);
    let mut s = (z * z - four).sqrt();
    if (z.conj() * s).re < 0.0 {
        s = -s;
    }
    let big = 0.5 * (z + s);
    (big, 1.0 / big)
}

fn lambda_pair_mp(z: &Cmpf) -> (Cmpf, Cmpf) {
    let four = Cmpf::from_f64(4.0, 0.0);
    let mut s = z.mul(z).sub(&four).sqrt();
    if z.conj().mul(&s).re.is_negative() {
        s = s.neg();
    }
    let big = z.add(&s).div_i64(2);
    (big.clone(), Cmpf::one().div(&big))
}

/// All Floquet multipliers of the scheme at complex `z = iΩ`: one for the
/// upwind scheme, two for centered and the α²=1 auxiliary scheme, four for
/// general α. Double precision; see the solve module for the
/// multiprecision path.
pub fn characteristic_multipliers(flux: &FluxKind, n: usize, z: Complex64) -> Vec<Complex64> {
    char_roots_c(flux, n, z)
}

pub(crate) fn char_roots_c(flux: &FluxKind, n: usize, z: Complex64) -> Vec<Complex64> {
    match flux {
        FluxKind::Upwind => {
            let [_, fp, gm, _] = quartet_c(n, z);
            vec![fp / gm]
        }
        FluxKind::Centered => {
            let [fm, fp, gm, gp] = quartet_c(n, z);
            let sp = -sign_of(n); // (-1)^{N+1}
            let a = sp * fm;
            let b = -(gm + sp * gp);
            let c = fp;
            let (r1, r2) = quadratic_c(a, b, c);
            vec![r1, r2]
        }
        FluxKind::Aux { alpha } => {
            let (a, b, c) = abc_c(n, z, *alpha);
            if (1.0 - alpha * alpha).abs() < 1e-12 {
                let zr = -c / b;
                let (l1, l2) = lambda_pair_c(zr);
                vec![l1, l2]
            } else {
                let (z1, z2) = quadratic_c(a, b, c);
                let (l1, l2) = lambda_pair_c(z1);
                let (l3, l4) = lambda_pair_c(z2);
                vec![l1, l2, l3, l4]
            }
        }
    }
}

/// Multiprecision companion of [`char_roots_c`] for real `Ω`, plus the
/// discriminant scale used for the repeated-root flag.
pub(crate) fn char_roots_mp(flux: &FluxKind, n: usize, omega: &Mpf) -> (Vec<Cmpf>, bool) {
    match flux {
        FluxKind::Upwind => {
            let [_, fp, gm, _] = quartet_mp(n, omega);
            (vec![fp.div(&gm)], false)
        }
        FluxKind::Centered => {
            let [fm, fp, gm, gp] = quartet_mp(n, omega);
            let fm_s = if n.is_multiple_of(2) { fm.neg() } else { fm };
            let gp_s = if n.is_multiple_of(2) { gp.neg() } else { gp };
            let a = fm_s;
            let b = gm.add(&gp_s).neg();
            let c = fp;
            let disc = b.mul(&b).sub(&a.mul(&c).scale_i64(4));
            let repeated = norm_tiny(&disc, 1e-24);
            let (r1, r2) = quadratic_mp(&a, &b, &c);
            (vec![r1, r2], repeated)
        }
        FluxKind::Aux { alpha } => {
            let alpha_mp = Mpf::from_f64(*alpha);
            let (a, b, c) = abc_mp(n, omega, &alpha_mp);
            if (1.0 - alpha * alpha).abs() < 1e-12 {
                let zr = Cmpf::new(&(-&c) / &b, Mpf::zero());
                let disc = &(&zr.re * &zr.re) - &Mpf::from_i64(4);
                let repeated = disc.abs().to_f64() < 1e-24;
                let (l1, l2) = lambda_pair_mp(&zr);
                (vec![l1, l2], repeated)
            } else {
                let ac = Cmpf::new(a, Mpf::zero());
                let bc = Cmpf::new(b, Mpf::zero());
                let cc = Cmpf::new(c, Mpf::zero());
                let disc = bc.mul(&bc).sub(&ac.mul(&cc).scale_i64(4));
                let repeated = norm_tiny(&disc, 1e-24);
                let (z1, z2) = quadratic_mp(&ac, &bc, &cc);
                let (l1, l2) = lambda_pair_mp(&z1);
                let (l3, l4) = lambda_pair_mp(&z2);
                (vec![l1, l2, l3, l4], repeated)
            }
        }
    }
}

fn norm_tiny(z: &Cmpf, tol: f64) -> bool {
    z.norm_sqr().to_f64() < tol
}

/// `Ξ_N` in multiprecision.
pub(crate) fn xi_mp(n: usize, omega: &Mpf) -> Mpf {
    let [fm, fp, gm, gp] = quartet_mp(n, omega);
    let num = fm
        .mul(&fm)
        .add(&fp.mul(&fp))
        .add(&gm.mul(&gm))
        .add(&gp.mul(&gp));
    let den = fm.mul(&gp).add(&fp.mul(&gm));
    &num.re / &den.re
}

/// Multipliers of the α²=1 scheme straight from `λ² - Ξλ + 1 = 0`.
pub(crate) fn aux_roots_via_xi_mp(n: usize, omega: &Mpf) -> (Cmpf, Cmpf) {
    let xi = xi_mp(n, omega);
    lambda_pair_mp(&Cmpf::new(xi, Mpf::zero()))
}

/// Eigenfunction-ratio quadratic: `μ² - Z μ - 1 = 0` with the
/// sign-corrected `Z_N`.
pub(crate) fn mu_roots_mp(n: usize, omega: &Mpf) -> (Cmpf, Cmpf, Cmpf) {
    let [fm, fp, gm, gp] = quartet_mp(n, omega);
    let num = fm
        .mul(&fm)
        .add(&fp.mul(&fp))
        .sub(&gm.mul(&gm))
        .sub(&gp.mul(&gp));
    let den = fm.mul(&gm).sub(&fp.mul(&gp));
    let z = num.div(&den);
    let one = Cmpf::one();
    let (m1, m2) = quadratic_mp(&one, &z.neg(), &one.neg());
    (z, m1, m2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upwind_degree_zero_is_classical() {
        // λ = 1/(1 - iΩ)
        let w = 0.37;
        let roots = char_roots_c(&FluxKind::Upwind, 0, Complex64::new(0.0, w));
        let want = 1.0 / Complex64::new(1.0, -w);
        assert!((roots[0] - want).norm() < 1e-15);
    }

    #[test]
    fn centered_degree_zero_is_central_difference() {
        // λ² - 2iΩλ - 1 = 0
        let w = 0.29;
        let roots = char_roots_c(&FluxKind::Centered, 0, Complex64::new(0.0, w));
        for r in roots {
            let resid = r * r - Complex64::new(0.0, 2.0 * w) * r - 1.0;
            assert!(resid.norm() < 1e-14);
        }
    }

    #[test]
    fn aux_alpha_one_xi_degree_zero_exact() {
        // Ξ_0 = 2 - Ω² exactly
        for &w in &[0.05, 0.3, 1.0] {
            let cc = characteristic_coefficients(0, w, 1.0);
            assert!((cc.xi.re - (2.0 - w * w)).abs() < 1e-14);
            assert!(cc.xi.im.abs() < 1e-14);
        }
    }

    #[test]
    fn xi_small_omega_expansion() {
        // Ξ_N = 2 - Ω² + O(Ω⁴); the quartic coefficient is 1/12 (Ξ_N tracks
        // 2cos Ω at this order for N ≥ 1), so check the law, not a smaller
        // residual than the expansion allows.
        let resid_at = |w: f64| {
            let cc = characteristic_coefficients(2, w, 1.0);
            (cc.xi.re - (2.0 - w * w)).abs()
        };
        let (r1, r2) = (resid_at(0.1), resid_at(0.05));
        assert!(r1 < 0.1 * 0.1f64.powi(4), "residual {r1} not O(Ω⁴)");
        let ratio = r1 / r2;
        assert!((ratio - 16.0).abs() < 1.0, "Ω⁴ scaling, got ratio {ratio}");
    }

    #[test]
    fn abc_are_real_for_real_omega() {
        for n in 0..=4 {
            for &alpha in &[0.3, 0.7, 1.3] {
                let (a, b, c) = abc_c(n, Complex64::new(0.0, 0.3), alpha);
                assert!(a.im.abs() < 1e-13 * (1.0 + a.norm()));
                assert!(b.im.abs() < 1e-13 * (1.0 + b.norm()));
                assert!(c.im.abs() < 1e-13 * (1.0 + c.norm()));
            }
        }
    }

    #[test]
    fn xi_real_z_imaginary() {
        for n in 0..=5 {
            for &w in &[0.1, 0.4, 0.9] {
                let cc = characteristic_coefficients(n, w, 1.0);
                assert!(
                    cc.xi.im.abs() < 1e-12 * (1.0 + cc.xi.norm()),
                    "Im Ξ at N={n}"
                );
                assert!(cc.z.re.abs() < 1e-12 * (1.0 + cc.z.norm()), "Re Z at N={n}");
                assert!(!cc.xi_degenerate && !cc.z_degenerate);
            }
        }
    }

    #[test]
    fn alpha_one_general_path_matches_xi_path() {
        for n in 0..=4 {
            for &w in &[0.1, 0.5, 1.0] {
                let z = Complex64::new(0.0, w);
                let general = char_roots_c(&FluxKind::Aux { alpha: 1.0 }, n, z);
                let cc = characteristic_coefficients(n, w, 1.0);
                let (l1, l2) = lambda_pair_c(cc.xi);
                for l in [l1, l2] {
                    let best = general
                        .iter()
                        .map(|r| (r - l).norm())
                        .fold(f64::MAX, f64::min);
                    assert!(best < 1e-12, "N={n} Ω={w}: mismatch {best}");
                }
            }
        }
    }

    #[test]
    fn mp_roots_match_f64_roots_at_moderate_omega() {
        let w = 0.3;
        let wmp = Mpf::from_f64(w);
        for flux in [
            FluxKind::Upwind,
            FluxKind::Centered,
            FluxKind::Aux { alpha: 1.0 },
            FluxKind::Aux { alpha: 0.5 },
        ] {
            for n in 0..=3 {
                let f = char_roots_c(&flux, n, Complex64::new(0.0, w));
                let (m, _) = char_roots_mp(&flux, n, &wmp);
                assert_eq!(f.len(), m.len());
                for r in &f {
                    let best = m
                        .iter()
                        .map(|q| (q.to_c64() - r).norm())
                        .fold(f64::MAX, f64::min);
                    assert!(best < 1e-12, "{flux:?} N={n}: {best}");
                }
            }
        }
    }

    #[test]
    fn quartet_mp_matches_f64() {
        let w = 0.7;
        let fq = quartet_c(3, Complex64::new(0.0, w));
        let mq = quartet_mp(3, &Mpf::from_f64(w));
        for (f, m) in fq.iter().zip(&mq) {
            assert!((f - m.to_c64()).norm() < 1e-14);
        }
    }

    #[test]
    fn z_quadratic_brackets_the_unit_circle() {
        // For α ∉ {0, ±1} and small Ω: f(2)f(-2) = -64α²Ω² + O(Ω⁴) < 0,
        // so one real z-root sits inside (-2, 2) (unimodular λ pair) and one
        // outside (real λ pair).
        for n in 0..=3usize {
            for &alpha in &[0.5, 0.7, 1.3] {
                let f2_f2m = |w: f64| {
                    let (a, b, c) = abc_c(n, Complex64::new(0.0, w), alpha);
                    let f = |z: f64| (a * z * z + b * z + c).re;
                    f(2.0) * f(-2.0)
                };
                for &w in &[0.01, 0.05, 0.1, 0.3] {
                    assert!(f2_f2m(w) < 0.0, "N={n} α={alpha} Ω={w}");
                }
                // leading coefficient by Richardson on f(2)f(-2)/Ω²
                let r = |w: f64| f2_f2m(w) / (w * w);
                let fitted = (4.0 * r(0.005) - r(0.01)) / 3.0;
                let want = -64.0 * alpha * alpha;
                assert!(
                    ((fitted - want) / want).abs() < 0.01,
                    "N={n} α={alpha}: fitted {fitted} vs {want}"
                );
            }
        }
    }

    #[test]
    fn mu_quadratic_holds() {
        for n in 1..=4 {
            let w = Mpf::from_f64(0.3);
            let (z, m1, m2) = mu_roots_mp(n, &w);
            for m in [m1, m2] {
                let resid = m.mul(&m).sub(&z.mul(&m)).sub(&Cmpf::one());
                assert!(resid.norm_sqr().to_f64() < 1e-24, "N={n}");
            }
        }
    }
}
