//! Asymptotic regimes of the α=1 multiplier error as `N` and `Ω` vary
//! jointly, with the closed-form magnitude prediction in the deep
//! super-exponential range.

/// Decay behavior of `ρ_N^+` as a function of `κ = (2N+1)/Ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegimeLabel {
    /// `2N+1 < Ω - Ω^{1/3}`: the error oscillates without decay.
    Oscillatory,
    /// `|2N+1 - Ω| ≤ Ω^{1/3}`: algebraic decay `O(N^{-1/3})`.
    Transition,
    /// `κ > 1` moderately: exponential decay (no closed-form rate is
    /// implemented; the printed one self-cancels).
    Exponential,
    /// `κ ≫ 1`: super-exponential decay with a closed-form magnitude.
    SuperExponential,
}

/// Regime classification plus the magnitude prediction where one exists.
#[derive(Debug, Clone, Copy)]
pub struct AsymptoticRegime {
    pub degree: usize,
    pub omega: f64,
    /// `(2N+1)/Ω`.
    pub kappa: f64,
    pub label: RegimeLabel,
    /// `[eΩ/(2√((2N+1)(2N+3)))]^{2N+2} · 2Ω/((2N+1)(2N+3))` in the
    /// super-exponential regime.
    pub predicted_rho: Option<f64>,
    /// Base-10 log of the prediction, which survives arbitrarily deep decay.
    pub predicted_rho_log10: Option<f64>,
}

/// Threshold on `κ` separating the exponential band from the
/// super-exponential tail; the split is an artifact convention since the
/// source regimes are asymptotic statements.
const SUPER_EXPONENTIAL_KAPPA: f64 = 3.0;

/// Classifies `(N, Ω)` into its decay regime.
pub fn classify_regime(degree: usize, omega: f64) -> AsymptoticRegime {
    assert!(omega > 0.0);
    let p = (2 * degree + 1) as f64;
    let kappa = p / omega;
    let band = omega.cbrt();
    let (label, predicted_rho_log10) = if p < omega - band {
        (RegimeLabel::Oscillatory, None)
    } else if p <= omega + band {
        (RegimeLabel::Transition, None)
    } else if kappa >= SUPER_EXPONENTIAL_KAPPA {
        (
            RegimeLabel::SuperExponential,
            Some(super_exponential_log10(degree, omega)),
        )
    } else {
        (RegimeLabel::Exponential, None)
    };
    AsymptoticRegime {
        degree,
        omega,
        kappa,
        label,
        predicted_rho: predicted_rho_log10.map(|l| 10f64.powf(l)),
        predicted_rho_log10,
    }
}

fn super_exponential_log10(degree: usize, omega: f64) -> f64 {
    let p1 = (2 * degree + 1) as f64;
    let p2 = (2 * degree + 3) as f64;
    let base = std::f64::consts::E * omega / (2.0 * (p1 * p2).sqrt());
    (2.0 * degree as f64 + 2.0) * base.log10() + (2.0 * omega / (p1 * p2)).log10()
}
