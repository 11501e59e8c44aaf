//! Semi-discrete DG spatial operator for the one-way wave equation and the
//! auxiliary two-field system, with upwind, centered and coupled fluxes.
//!
//! States hold modal coefficients in the orthonormal Legendre basis on each
//! cell, so the local mass matrix is `h_j/2` times the identity and the RHS
//! assembly needs no linear solves. Sign conventions are pinned by the three
//! semi-discrete energy laws (dissipative for U, conservative for C and for
//! the combined A energy); the tests enforce them on random states.

use std::io::Write;
use std::sync::Arc;

use num_complex::Complex64;

use crate::mesh::PeriodicMesh1D;
use crate::polylib::{orthonormal_legendre, orthonormal_legendre_at_one, QuadratureRule};
use crate::{Error, Result};

/// Flux family of the scheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FluxKind {
    /// `û = u⁻`, equivalently `{{u}} - ½⟦u⟧`: energy dissipative.
    Upwind,
    /// `û = {{u}}`: energy conservative.
    Centered,
    /// `û = {{u}} + ½α⟦φ⟧`, `φ̂ = {{φ}} + ½α⟦u⟧`: conserves `E_u + E_φ`.
    Aux { alpha: f64 },
}

impl FluxKind {
    pub fn uses_aux_field(&self) -> bool {
        matches!(self, FluxKind::Aux { .. })
    }
}

/// Polynomial degree plus flux selection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeConfig {
    pub degree: usize,
    pub flux: FluxKind,
}

impl SchemeConfig {
    pub fn upwind(degree: usize) -> Self {
        Self {
            degree,
            flux: FluxKind::Upwind,
        }
    }

    pub fn centered(degree: usize) -> Self {
        Self {
            degree,
            flux: FluxKind::Centered,
        }
    }

    pub fn aux(degree: usize, alpha: f64) -> Self {
        assert!(alpha.is_finite());
        Self {
            degree,
            flux: FluxKind::Aux { alpha },
        }
    }

    pub fn modes(&self) -> usize {
        self.degree + 1
    }
}

/// Per-cell modal coefficients of `u_h` (and `φ_h` for the auxiliary
/// scheme), in the orthonormal Legendre basis, plus the simulation time.
#[derive(Debug, Clone)]
pub struct DGState {
    pub mesh: Arc<PeriodicMesh1D>,
    pub degree: usize,
    /// `n_cells × (degree+1)`, row-major by cell.
    pub u: Vec<f64>,
    /// Present exactly when the scheme carries the auxiliary field.
    pub phi: Option<Vec<f64>>,
    pub time: f64,
}

impl DGState {
    pub fn zeros(mesh: Arc<PeriodicMesh1D>, config: &SchemeConfig) -> Self {
        let len = mesh.n_cells() * config.modes();
        Self {
            mesh,
            degree: config.degree,
            u: vec![0.0; len],
            phi: config.flux.uses_aux_field().then(|| vec![0.0; len]),
            time: 0.0,
        }
    }

    pub fn n_cells(&self) -> usize {
        self.mesh.n_cells()
    }

    pub fn modes(&self) -> usize {
        self.degree + 1
    }

    fn check_shape(&self, config: &SchemeConfig) -> Result<()> {
        if self.degree != config.degree {
            return Err(Error::Shape(format!(
                "state degree {} vs config degree {}",
                self.degree, config.degree
            )));
        }
        if self.u.len() != self.n_cells() * self.modes() {
            return Err(Error::Shape("u coefficient array has wrong length".into()));
        }
        if self.phi.is_some() != config.flux.uses_aux_field() {
            return Err(Error::Shape(
                "auxiliary field present iff the flux is AUX".into(),
            ));
        }
        if let Some(phi) = &self.phi {
            if phi.len() != self.u.len() {
                return Err(Error::Shape(
                    "phi coefficient array has wrong length".into(),
                ));
            }
        }
        Ok(())
    }

    /// Value of `u_h` at reference coordinate `s` of cell `j`.
    pub fn eval_u(&self, j: usize, s: f64) -> f64 {
        eval_modal(&self.u[j * self.modes()..(j + 1) * self.modes()], s)
    }

    /// Value of `φ_h` at reference coordinate `s` of cell `j` (0 when absent).
    pub fn eval_phi(&self, j: usize, s: f64) -> f64 {
        match &self.phi {
            Some(phi) => eval_modal(&phi[j * self.modes()..(j + 1) * self.modes()], s),
            None => 0.0,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.u.iter().all(|v| v.is_finite())
            && self.phi.iter().all(|p| p.iter().all(|v| v.is_finite()))
    }
}

fn eval_modal(coeffs: &[f64], s: f64) -> f64 {
    coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| c * orthonormal_legendre(k, s))
        .sum()
}

/// Number of quadrature points for projecting arbitrary initial data; the
/// scheme's own bilinear forms only ever need `N+2` Gauss points.
const PROJECTION_POINTS: usize = 32;

/// Cellwise L² projection of initial data onto the broken polynomial space.
///
/// `phi0` is ignored unless the flux carries the auxiliary field; passing
/// `None` projects the zero function.
pub fn project_initial(
    mesh: Arc<PeriodicMesh1D>,
    config: &SchemeConfig,
    u0: &dyn Fn(f64) -> f64,
    phi0: Option<&dyn Fn(f64) -> f64>,
) -> DGState {
    let rule = QuadratureRule::gauss_legendre(PROJECTION_POINTS);
    let modes = config.modes();
    let project = |f: &dyn Fn(f64) -> f64| -> Vec<f64> {
        let mut coeffs = vec![0.0; mesh.n_cells() * modes];
        for j in 0..mesh.n_cells() {
            for k in 0..modes {
                // c_{j,k} = ∫ f(x_j(s)) φ_k(s) ds on the reference cell.
                coeffs[j * modes + k] = rule
                    .nodes()
                    .iter()
                    .zip(rule.weights())
                    .map(|(&s, &w)| w * f(mesh.to_physical(j, s)) * orthonormal_legendre(k, s))
                    .sum();
            }
        }
        coeffs
    };
    let u = project(u0);
    let phi = config.flux.uses_aux_field().then(|| match phi0 {
        Some(f) => project(f),
        None => vec![0.0; mesh.n_cells() * modes],
    });
    DGState {
        mesh,
        degree: config.degree,
        u,
        phi,
        time: 0.0,
    }
}

/// One-sided traces at every node; node `i` sits between cell `i-1` (left,
/// wrapping) and cell `i` (right).
#[derive(Debug, Clone)]
pub struct TraceValues {
    pub u_minus: Vec<f64>,
    pub u_plus: Vec<f64>,
    pub phi_minus: Option<Vec<f64>>,
    pub phi_plus: Option<Vec<f64>>,
}

impl TraceValues {
    pub fn jump_u(&self, i: usize) -> f64 {
        self.u_plus[i] - self.u_minus[i]
    }

    pub fn mean_u(&self, i: usize) -> f64 {
        0.5 * (self.u_plus[i] + self.u_minus[i])
    }
}

/// Evaluates the one-sided traces of a state at every node.
pub fn assemble_traces(state: &DGState) -> TraceValues {
    let n = state.n_cells();
    let modes = state.modes();
    // φ_k(±1): endpoint values of the orthonormal modes.
    let at_one: Vec<f64> = (0..modes).map(orthonormal_legendre_at_one).collect();
    let traces = |coeffs: &[f64]| -> (Vec<f64>, Vec<f64>) {
        let mut minus = vec![0.0; n];
        let mut plus = vec![0.0; n];
        for i in 0..n {
            let left_cell = state.mesh.left_neighbor(i);
            let mut m = 0.0;
            let mut p = 0.0;
            for k in 0..modes {
                let e = at_one[k];
                m += coeffs[left_cell * modes + k] * e;
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                p += coeffs[i * modes + k] * sign * e;
            }
            minus[i] = m;
            plus[i] = p;
        }
        (minus, plus)
    };
    let (u_minus, u_plus) = traces(&state.u);
    let (phi_minus, phi_plus) = match &state.phi {
        Some(phi) => {
            let (m, p) = traces(phi);
            (Some(m), Some(p))
        }
        None => (None, None),
    };
    TraceValues {
        u_minus,
        u_plus,
        phi_minus,
        phi_plus,
    }
}

/// Numerical flux values at every node.
#[derive(Debug, Clone)]
pub struct NodeFluxes {
    pub u_hat: Vec<f64>,
    pub phi_hat: Option<Vec<f64>>,
}

/// Evaluates the scheme's numerical flux from assembled traces.
pub fn numerical_flux(traces: &TraceValues, config: &SchemeConfig) -> NodeFluxes {
    let n = traces.u_minus.len();
    match config.flux {
        FluxKind::Upwind => {
            // {{u}} - ½⟦u⟧ collapses to the left trace.
            let u_hat = (0..n).map(|i| traces.u_minus[i]).collect();
            NodeFluxes {
                u_hat,
                phi_hat: None,
            }
        }
        FluxKind::Centered => {
            let u_hat = (0..n).map(|i| traces.mean_u(i)).collect();
            NodeFluxes {
                u_hat,
                phi_hat: None,
            }
        }
        FluxKind::Aux { alpha } => {
            let pm = traces.phi_minus.as_ref().expect("AUX traces carry phi");
            let pp = traces.phi_plus.as_ref().expect("AUX traces carry phi");
            let mut u_hat = vec![0.0; n];
            let mut phi_hat = vec![0.0; n];
            for i in 0..n {
                let jump_phi = pp[i] - pm[i];
                let mean_phi = 0.5 * (pp[i] + pm[i]);
                u_hat[i] = traces.mean_u(i) + 0.5 * alpha * jump_phi;
                phi_hat[i] = mean_phi + 0.5 * alpha * traces.jump_u(i);
            }
            NodeFluxes {
                u_hat,
                phi_hat: Some(phi_hat),
            }
        }
    }
}

/// Reference-cell stiffness `S_{lk} = ∫ φ_k φ_l' ds`, nonzero for `k < l`
/// with `l - k` odd, where it equals `sqrt((2k+1)(2l+1))`.
fn stiffness_entry(l: usize, k: usize) -> f64 {
    if k < l && (l - k) % 2 == 1 {
        (((2 * k + 1) * (2 * l + 1)) as f64).sqrt()
    } else {
        0.0
    }
}

/// Time-derivative coefficients of the semi-discrete system.
///
/// For each cell `j` and test mode `l`:
/// `(h_j/2) ċ_{j,l} = Σ_k S_{lk} c_{j,k} - û_{j+1/2} φ_l(1) + û_{j-1/2} φ_l(-1)`
/// and the mirrored sign pattern for the auxiliary field.
pub fn semi_discrete_rhs(
    state: &DGState,
    config: &SchemeConfig,
) -> Result<(Vec<f64>, Option<Vec<f64>>)> {
    state.check_shape(config)?;
    let traces = assemble_traces(state);
    let fluxes = numerical_flux(&traces, config);
    let n = state.n_cells();
    let modes = state.modes();
    let at_one: Vec<f64> = (0..modes).map(orthonormal_legendre_at_one).collect();

    let mut du = vec![0.0; n * modes];
    for j in 0..n {
        let scale = 2.0 / state.mesh.width(j);
        let right = fluxes.u_hat[(j + 1) % n];
        let left = fluxes.u_hat[j];
        for l in 0..modes {
            let mut acc = 0.0;
            for k in 0..l {
                acc += stiffness_entry(l, k) * state.u[j * modes + k];
            }
            let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
            acc += -right * at_one[l] + left * sign * at_one[l];
            du[j * modes + l] = scale * acc;
        }
    }

    let dphi = match (&state.phi, &fluxes.phi_hat) {
        (Some(phi), Some(phi_hat)) => {
            let mut dphi = vec![0.0; n * modes];
            for j in 0..n {
                let scale = 2.0 / state.mesh.width(j);
                let right = phi_hat[(j + 1) % n];
                let left = phi_hat[j];
                for l in 0..modes {
                    let mut acc = 0.0;
                    for k in 0..l {
                        acc += stiffness_entry(l, k) * phi[j * modes + k];
                    }
                    let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
                    // Signs mirrored relative to the u equation.
                    acc = -acc + right * at_one[l] - left * sign * at_one[l];
                    dphi[j * modes + l] = scale * acc;
                }
            }
            Some(dphi)
        }
        _ => None,
    };
    Ok((du, dphi))
}

/// `(E_u, E_φ) = (∫ u_h² dx, ∫ φ_h² dx)`, exact from modal coefficients.
pub fn energy(state: &DGState) -> (f64, f64) {
    let modes = state.modes();
    let field_energy = |coeffs: &[f64]| -> f64 {
        (0..state.n_cells())
            .map(|j| {
                let half_h = 0.5 * state.mesh.width(j);
                coeffs[j * modes..(j + 1) * modes]
                    .iter()
                    .map(|c| c * c)
                    .sum::<f64>()
                    * half_h
            })
            .sum()
    };
    let e_u = field_energy(&state.u);
    let e_phi = state.phi.as_ref().map_or(0.0, |phi| field_energy(phi));
    (e_u, e_phi)
}

/// Instantaneous `½ d/dt ∫ u² dx = ⟨u, du/dt⟩` (plus the φ part when present).
pub fn energy_rate(state: &DGState, du: &[f64], dphi: Option<&[f64]>) -> (f64, f64) {
    let modes = state.modes();
    let pairing = |a: &[f64], b: &[f64]| -> f64 {
        (0..state.n_cells())
            .map(|j| {
                let half_h = 0.5 * state.mesh.width(j);
                a[j * modes..(j + 1) * modes]
                    .iter()
                    .zip(&b[j * modes..(j + 1) * modes])
                    .map(|(x, y)| x * y)
                    .sum::<f64>()
                    * half_h
            })
            .sum()
    };
    let ru = pairing(&state.u, du);
    let rphi = match (&state.phi, dphi) {
        (Some(phi), Some(dphi)) => pairing(phi, dphi),
        _ => 0.0,
    };
    (ru, rphi)
}

/// Samples the state at `m` uniform points per cell (sub-interval midpoints,
/// so discontinuities at the nodes are never straddled).
pub fn sample(state: &DGState, m: usize) -> Vec<(f64, f64, f64)> {
    let mut rows = Vec::with_capacity(state.n_cells() * m);
    for j in 0..state.n_cells() {
        for i in 0..m {
            let s = -1.0 + (2.0 * i as f64 + 1.0) / m as f64;
            let x = state.mesh.to_physical(j, s);
            rows.push((x, state.eval_u(j, s), state.eval_phi(j, s)));
        }
    }
    rows
}

/// Writes a snapshot CSV `x, u_h, phi_h` sampled at `m` points per cell.
pub fn write_snapshot_csv<W: Write>(state: &DGState, m: usize, mut out: W) -> Result<()> {
    writeln!(out, "x,u_h,phi_h")?;
    for (x, u, phi) in sample(state, m) {
        writeln!(out, "{x:.16e},{u:.16e},{phi:.16e}")?;
    }
    Ok(())
}

/// One-cell Bloch symbol of the semi-discrete operator on a uniform mesh,
/// scaled by the cell width: substituting `u_{j±1} = λ^{±1} u_j` into
/// `h · RHS` yields the matrix returned here.
///
/// The blocks are extracted by probing the actual assembly on a small
/// periodic mesh, so the symbol is the operator the time march runs, not a
/// re-derivation of it.
pub fn bloch_symbol(config: &SchemeConfig, lambda: Complex64) -> Vec<Vec<Complex64>> {
    let dim = config.modes() * if config.flux.uses_aux_field() { 2 } else { 1 };
    let (minus, center, plus) = bloch_blocks(config);
    let mut sym = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    let inv = 1.0 / lambda;
    for r in 0..dim {
        for c in 0..dim {
            sym[r][c] = minus[r][c] * inv + center[r][c] + plus[r][c] * lambda;
        }
    }
    sym
}

type Block = Vec<Vec<f64>>;

/// Neighbor blocks `(A_{-1}, A_0, A_{+1})` of `h · RHS` on a uniform mesh.
fn bloch_blocks(config: &SchemeConfig) -> (Block, Block, Block) {
    let n_probe = 5;
    let mesh = Arc::new(PeriodicMesh1D::uniform(n_probe).expect("probe mesh"));
    let h = mesh.width(0);
    let modes = config.modes();
    let fields = if config.flux.uses_aux_field() { 2 } else { 1 };
    let dim = modes * fields;
    let mut blocks = vec![vec![vec![0.0; dim]; dim]; 3];
    // Probe column by column: a unit coefficient in cell 0/1/2 shows up in
    // cell 1's RHS as the corresponding block column.
    for field in 0..fields {
        for k in 0..modes {
            let col = field * modes + k;
            for (b, cell) in [(0usize, 0usize), (1, 1), (2, 2)] {
                let mut state = DGState::zeros(mesh.clone(), config);
                let target = cell * modes + k;
                if field == 0 {
                    state.u[target] = 1.0;
                } else {
                    state.phi.as_mut().unwrap()[target] = 1.0;
                }
                let (du, dphi) = semi_discrete_rhs(&state, config).expect("probe rhs");
                for l in 0..modes {
                    blocks[b][l][col] = h * du[modes + l];
                    if let Some(dphi) = &dphi {
                        blocks[b][modes + l][col] = h * dphi[modes + l];
                    }
                }
            }
        }
    }
    let [minus, center, plus] = <[_; 3]>::try_from(blocks).unwrap();
    (minus, center, plus)
}
