//! Polynomial kernels: Legendre/Jacobi evaluation, Gauss–Legendre quadrature,
//! terminating confluent hypergeometric series and the degree-`N`
//! eigenfunction quartet `Ψ_N^{1,±}`, `Ψ_N^{2,±}` with its endpoint
//! identities.
//!
//! Everything here is a pure function of its inputs; values are immutable
//! after construction and safe to share across threads.

use num_complex::Complex64;

use crate::{Error, Result};

/// Legendre polynomial `P_n(x)` by the three-term recurrence.
pub fn legendre(n: usize, x: f64) -> f64 {
    legendre_pair(n, x).0
}

/// Returns `(P_n(x), P_{n-1}(x))`; the pair is what Newton iterations and
/// derivative formulas actually consume.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p = 1.0;
    let mut p_prev = 0.0;
    for m in 1..=n {
        let m = m as f64;
        let next = ((2.0 * m - 1.0) * x * p - (m - 1.0) * p_prev) / m;
        p_prev = p;
        p = next;
    }
    (p, p_prev)
}

/// Derivative `P_n'(x)` for `x` in the open interval (-1, 1).
pub fn legendre_deriv(n: usize, x: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let (p, p_prev) = legendre_pair(n, x);
    (n as f64) * (x * p - p_prev) / (x * x - 1.0)
}

/// Orthonormal Legendre mode `φ_k(s) = sqrt((2k+1)/2) P_k(s)` on `[-1, 1]`,
/// so that `∫ φ_j φ_k ds = δ_jk`.
pub fn orthonormal_legendre(k: usize, s: f64) -> f64 {
    (((2 * k + 1) as f64) / 2.0).sqrt() * legendre(k, s)
}

/// Endpoint value `φ_k(1)`; `φ_k(-1)` is `(-1)^k φ_k(1)`.
pub fn orthonormal_legendre_at_one(k: usize) -> f64 {
    (((2 * k + 1) as f64) / 2.0).sqrt()
}

/// Jacobi polynomial `P_m^{(p,q)}(s)` by the standard three-term recurrence.
///
/// Valid for `p, q > -1`. The `m = 1` value is taken from the explicit
/// formula, which also covers the `p + q = 0` case where the generic
/// recurrence denominator vanishes.
pub fn jacobi_eval(m: usize, p: f64, q: f64, s: f64) -> f64 {
    assert!(p > -1.0 && q > -1.0, "Jacobi parameters must exceed -1");
    if m == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 0.5 * (p - q) + 0.5 * (p + q + 2.0) * s;
    for k in 2..=m {
        let k = k as f64;
        let a = 2.0 * k + p + q;
        // 2k (k+p+q) (a-2) P_k = (a-1) [a (a-2) s + p^2 - q^2] P_{k-1}
        //                        - 2 (k+p-1) (k+q-1) a P_{k-2}
        let c0 = 2.0 * k * (k + p + q) * (a - 2.0);
        let c1 = (a - 1.0) * (a * (a - 2.0) * s + p * p - q * q);
        let c2 = 2.0 * (k + p - 1.0) * (k + q - 1.0) * a;
        let next = (c1 * cur - c2 * prev) / c0;
        prev = cur;
        cur = next;
    }
    cur
}

/// Derivative of a Jacobi polynomial,
/// `d/ds P_m^{(p,q)}(s) = (m+p+q+1)/2 · P_{m-1}^{(p+1,q+1)}(s)`.
pub fn jacobi_deriv(m: usize, p: f64, q: f64, s: f64) -> f64 {
    if m == 0 {
        return 0.0;
    }
    0.5 * (m as f64 + p + q + 1.0) * jacobi_eval(m - 1, p + 1.0, q + 1.0, s)
}

/// Gauss–Legendre quadrature rule on the reference interval `[-1, 1]`.
///
/// An `n`-point rule integrates polynomials up to degree `2n - 1` exactly;
/// the weights are positive and sum to 2.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    /// Builds the `n`-point Gauss–Legendre rule by Newton iteration on `P_n`.
    pub fn gauss_legendre(n_points: usize) -> Self {
        assert!(n_points > 0, "quadrature rule needs at least one point");
        let n = n_points;
        let m = n.div_ceil(2);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..m {
            // Chebyshev-like initial guess, then Newton.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, p_prev) = legendre_pair(n, x);
                dp = (n as f64) * (x * p - p_prev) / (x * x - 1.0);
                let dx = -p / dp;
                x += dx;
                if dx.abs() <= 1e-15 {
                    let (p, p_prev) = legendre_pair(n, x);
                    dp = (n as f64) * (x * p - p_prev) / (x * x - 1.0);
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            // Fill symmetrically; the midpoint of odd rules lands on x = 0.
            nodes[i] = -x.abs();
            nodes[n - 1 - i] = x.abs();
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Degree through which the rule is exact.
    pub fn degree_exact(&self) -> usize {
        2 * self.len() - 1
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Complex-valued quadrature, handy for residual checks.
    pub fn integrate2<F: FnMut(f64) -> Complex64>(&self, mut f: F) -> Complex64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .fold(Complex64::new(0.0, 0.0), |a, b| a + b)
    }
}

/// `(top - count)! / top!` as a running product of reciprocals, avoiding
/// explicit factorials that overflow past 170!.
pub fn falling_factorial_ratio(top: u64, count: u64) -> f64 {
    assert!(count <= top);
    let mut r = 1.0;
    for j in 0..count {
        r /= (top - j) as f64;
    }
    r
}

/// Terminating confluent hypergeometric series `1F1(a, b, z)` with `a ≤ 0`.
///
/// Evaluates the finite sum `Σ_{m=0}^{|a|} (a)_m/(b)_m z^m/m!`. Parameter
/// pairs where `(b)_m` vanishes for some `m ≤ |a|` are rejected; this cannot
/// occur for the `(-N, -2N-1)` and `(-N-1, -2N-1)` pairs used throughout.
pub fn hyp1f1_terminating(a_neg_int: i64, b: i64, z: Complex64) -> Result<Complex64> {
    assert!(
        a_neg_int <= 0,
        "series must terminate: a must be a nonpositive integer"
    );
    let n_terms = (-a_neg_int) as u64;
    // (b)_m = b (b+1) ... (b+m-1) hits zero iff -b ∈ {0, .., m-1}.
    if n_terms > 0 && -b >= 0 && (-b as u64) < n_terms {
        return Err(Error::HypergeometricPole { a: a_neg_int, b });
    }
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    for m in 0..n_terms {
        let m = m as i64;
        let ratio = (a_neg_int + m) as f64 / (((b + m) as f64) * ((m + 1) as f64));
        term *= ratio * z;
        sum += term;
    }
    Ok(sum)
}

/// The four hypergeometric constants `F_N^±`, `F_{N+1}^±` at a given `Ω`.
///
/// `F_N^± = 1F1(-N, -2N-1, ±iΩ)`; for real `Ω` the `+` values are the
/// complex conjugates of the `-` values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricQuartet {
    pub omega: f64,
    pub fn_minus: Complex64,
    pub fn_plus: Complex64,
    pub fnp1_minus: Complex64,
    pub fnp1_plus: Complex64,
}

/// Evaluates the quartet at `(N, Ω)`.
pub fn quartet(n: usize, omega: f64) -> HypergeometricQuartet {
    let z = Complex64::new(0.0, omega);
    let a = -(n as i64);
    let b = -(2 * n as i64) - 1;
    // The pole check cannot trigger for these parameter pairs.
    let fn_plus = hyp1f1_terminating(a, b, z).expect("(-N, -2N-1) is pole-free");
    let fnp1_plus = hyp1f1_terminating(a - 1, b, z).expect("(-N-1, -2N-1) is pole-free");
    HypergeometricQuartet {
        omega,
        fn_minus: fn_plus.conj(),
        fn_plus,
        fnp1_minus: fnp1_plus.conj(),
        fnp1_plus,
    }
}

/// Which of the two eigenfunction families, distinguished by the Jacobi
/// parameter order `(N-m, N-m+1)` vs `(N-m+1, N-m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiKind {
    One,
    Two,
}

/// Sign of the `±iΩ` argument in the eigenfunction series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiSign {
    Plus,
    Minus,
}

/// Degree-`N` polynomial eigenfunctions
/// `Ψ_N^{1,±}(s) = Σ_{m=0}^N (±iΩ)^m (2N+1-m)!/(2N+1)! P_m^{(N-m, N-m+1)}(s)`
/// (family 2 swaps the Jacobi parameters), stored as coefficient vectors in
/// the orthonormal Legendre basis together with their endpoint values.
#[derive(Debug, Clone)]
pub struct EigenfunctionFrame {
    pub degree: usize,
    pub omega: f64,
    /// Orthonormal-Legendre coefficients of Ψ_N^{1,+}, Ψ_N^{2,+}, Ψ_N^{1,-}, Ψ_N^{2,-}.
    pub psi1p: Vec<Complex64>,
    pub psi2p: Vec<Complex64>,
    pub psi1m: Vec<Complex64>,
    pub psi2m: Vec<Complex64>,
    /// Endpoint values at s = -1 and s = +1, same order as the coefficient fields.
    pub at_minus_one: [Complex64; 4],
    pub at_plus_one: [Complex64; 4],
}

/// Evaluates `Ψ_N^{kind,sign}(s)` directly from the Jacobi series.
pub fn psi_eval(n: usize, omega: f64, kind: PsiKind, sign: PsiSign, s: f64) -> Complex64 {
    psi_series(n, omega, kind, sign, s, false)
}

/// Evaluates `d/ds Ψ_N^{kind,sign}(s)`.
pub fn psi_deriv(n: usize, omega: f64, kind: PsiKind, sign: PsiSign, s: f64) -> Complex64 {
    psi_series(n, omega, kind, sign, s, true)
}

fn psi_series(
    n: usize,
    omega: f64,
    kind: PsiKind,
    sign: PsiSign,
    s: f64,
    deriv: bool,
) -> Complex64 {
    let iw = match sign {
        PsiSign::Plus => Complex64::new(0.0, omega),
        PsiSign::Minus => Complex64::new(0.0, -omega),
    };
    let mut acc = Complex64::new(0.0, 0.0);
    let mut pow = Complex64::new(1.0, 0.0);
    let mut q_m = 1.0; // (2N+1-m)!/(2N+1)! as a running product
    for m in 0..=n {
        let (p, q) = match kind {
            PsiKind::One => ((n - m) as f64, (n - m) as f64 + 1.0),
            PsiKind::Two => ((n - m) as f64 + 1.0, (n - m) as f64),
        };
        let basis = if deriv {
            jacobi_deriv(m, p, q, s)
        } else {
            jacobi_eval(m, p, q, s)
        };
        acc += pow * q_m * basis;
        pow *= iw;
        q_m /= (2 * n + 1 - m) as f64;
    }
    acc
}

/// Builds the eigenfunction frame at `(N, Ω)`: orthonormal-Legendre
/// coefficients by exact quadrature projection plus endpoint values.
pub fn eigenfunctions(n: usize, omega: f64) -> EigenfunctionFrame {
    let rule = QuadratureRule::gauss_legendre(n + 2);
    let all = [
        (PsiKind::One, PsiSign::Plus),
        (PsiKind::Two, PsiSign::Plus),
        (PsiKind::One, PsiSign::Minus),
        (PsiKind::Two, PsiSign::Minus),
    ];
    let mut coeffs: [Vec<Complex64>; 4] = Default::default();
    let mut at_m1 = [Complex64::new(0.0, 0.0); 4];
    let mut at_p1 = [Complex64::new(0.0, 0.0); 4];
    for (slot, &(kind, sign)) in all.iter().enumerate() {
        let values: Vec<Complex64> = rule
            .nodes()
            .iter()
            .map(|&s| psi_eval(n, omega, kind, sign, s))
            .collect();
        let mut c = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, &w) in rule.weights().iter().enumerate() {
                acc += w * orthonormal_legendre(k, rule.nodes()[i]) * values[i];
            }
            c.push(acc);
        }
        coeffs[slot] = c;
        at_m1[slot] = psi_eval(n, omega, kind, sign, -1.0);
        at_p1[slot] = psi_eval(n, omega, kind, sign, 1.0);
    }
    let [psi1p, psi2p, psi1m, psi2m] = coeffs;
    EigenfunctionFrame {
        degree: n,
        omega,
        psi1p,
        psi2p,
        psi1m,
        psi2m,
        at_minus_one: at_m1,
        at_plus_one: at_p1,
    }
}
