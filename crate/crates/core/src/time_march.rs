//! Explicit Runge–Kutta integration of the semi-discrete system, with energy
//! diagnostics so the temporal error stays negligible next to the spatial
//! error.

use crate::dg::{self, DGState, SchemeConfig};
use crate::polylib::QuadratureRule;
use crate::{Error, Result};

/// Time integrator selection. The classical four-stage scheme is the default
/// everywhere; the three-stage SSP variant exists for step-size studies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RkScheme {
    ClassicalRk4,
    Ssp3,
}

/// March parameters. The step is `dt = cfl · min_j h_j / (2N+1)`, shrunk so
/// that an integer number of steps lands exactly on `t_final`.
#[derive(Debug, Clone, Copy)]
pub struct MarchConfig {
    pub t_final: f64,
    pub cfl: f64,
    pub rk: RkScheme,
    /// Record energies every this many steps (the final step is always
    /// recorded).
    pub output_every: usize,
}

impl MarchConfig {
    pub fn new(t_final: f64, cfl: f64) -> Self {
        assert!(t_final >= 0.0 && cfl > 0.0);
        Self {
            t_final,
            cfl,
            rk: RkScheme::ClassicalRk4,
            output_every: 50,
        }
    }
}

/// Energy history of a march.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub entries: Vec<TrajectoryEntry>,
}

#[derive(Debug, Clone, Copy)]
pub struct TrajectoryEntry {
    pub t: f64,
    pub e_u: f64,
    pub e_phi: f64,
}

impl Trajectory {
    /// Maximum drift of the combined energy relative to its initial value.
    pub fn max_energy_drift(&self) -> f64 {
        let e0 = self.entries[0].e_u + self.entries[0].e_phi;
        self.entries
            .iter()
            .map(|e| ((e.e_u + e.e_phi) - e0).abs())
            .fold(0.0, f64::max)
            / e0.max(f64::MIN_POSITIVE)
    }

    /// Largest `E_φ(t) / E_u(0)` seen along the run.
    pub fn max_phi_fraction(&self) -> f64 {
        let e0 = self.entries[0].e_u.max(f64::MIN_POSITIVE);
        self.entries.iter().map(|e| e.e_phi).fold(0.0, f64::max) / e0
    }

    pub fn write_csv<W: std::io::Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "t,E_u,E_phi")?;
        for e in &self.entries {
            writeln!(out, "{:.16e},{:.16e},{:.16e}", e.t, e.e_u, e.e_phi)?;
        }
        Ok(())
    }
}

/// Integrates the semi-discrete system from `state0` to `march.t_final`.
///
/// Aborts with [`Error::NonFinite`] if the state stops being finite, which
/// signals instability (for explicit RK, a too-large CFL number).
pub fn advance(
    state0: &DGState,
    config: &SchemeConfig,
    march: &MarchConfig,
) -> Result<(DGState, Trajectory)> {
    let mut state = state0.clone();
    let (e_u, e_phi) = dg::energy(&state);
    let mut trajectory = Trajectory {
        entries: vec![TrajectoryEntry {
            t: state.time,
            e_u,
            e_phi,
        }],
    };
    if march.t_final == 0.0 {
        return Ok((state, trajectory));
    }
    let dt_target = march.cfl * state.mesh.min_width() / (2.0 * config.degree as f64 + 1.0);
    let n_steps = (march.t_final / dt_target).ceil().max(1.0) as u64;
    let dt = march.t_final / n_steps as f64;
    let t0 = state.time;

    for step in 0..n_steps {
        match march.rk {
            RkScheme::ClassicalRk4 => rk4_step(&mut state, config, dt)?,
            RkScheme::Ssp3 => ssp3_step(&mut state, config, dt)?,
        }
        state.time = t0 + (step + 1) as f64 * dt;
        let last = step + 1 == n_steps;
        if (step + 1) % march.output_every as u64 == 0 || last {
            let (e_u, e_phi) = dg::energy(&state);
            // A diverging run can overflow the energy while the coefficients
            // are still finite, so check both.
            if !state.is_finite() || !(e_u + e_phi).is_finite() {
                return Err(Error::NonFinite { t: state.time });
            }
            trajectory.entries.push(TrajectoryEntry {
                t: state.time,
                e_u,
                e_phi,
            });
        }
    }
    Ok((state, trajectory))
}

struct Slope {
    u: Vec<f64>,
    phi: Option<Vec<f64>>,
}

fn eval_rhs(state: &DGState, config: &SchemeConfig) -> Result<Slope> {
    let (u, phi) = dg::semi_discrete_rhs(state, config)?;
    Ok(Slope { u, phi })
}

fn add_scaled(state: &DGState, slope: &Slope, factor: f64) -> DGState {
    let mut out = state.clone();
    for (v, d) in out.u.iter_mut().zip(&slope.u) {
        *v += factor * d;
    }
    if let (Some(phi), Some(dphi)) = (out.phi.as_mut(), slope.phi.as_ref()) {
        for (v, d) in phi.iter_mut().zip(dphi) {
            *v += factor * d;
        }
    }
    out
}

fn rk4_step(state: &mut DGState, config: &SchemeConfig, dt: f64) -> Result<()> {
    let k1 = eval_rhs(state, config)?;
    let k2 = eval_rhs(&add_scaled(state, &k1, 0.5 * dt), config)?;
    let k3 = eval_rhs(&add_scaled(state, &k2, 0.5 * dt), config)?;
    let k4 = eval_rhs(&add_scaled(state, &k3, dt), config)?;
    let w = dt / 6.0;
    for i in 0..state.u.len() {
        state.u[i] += w * (k1.u[i] + 2.0 * k2.u[i] + 2.0 * k3.u[i] + k4.u[i]);
    }
    if let Some(phi) = state.phi.as_mut() {
        let (p1, p2) = (k1.phi.as_ref().unwrap(), k2.phi.as_ref().unwrap());
        let (p3, p4) = (k3.phi.as_ref().unwrap(), k4.phi.as_ref().unwrap());
        for i in 0..phi.len() {
            phi[i] += w * (p1[i] + 2.0 * p2[i] + 2.0 * p3[i] + p4[i]);
        }
    }
    Ok(())
}

fn ssp3_step(state: &mut DGState, config: &SchemeConfig, dt: f64) -> Result<()> {
    let k1 = eval_rhs(state, config)?;
    let s1 = add_scaled(state, &k1, dt);
    let k2 = eval_rhs(&s1, config)?;
    let s2_mix = |a: f64, b: f64, state_v: &[f64], s1_v: &[f64], k: &[f64], dt: f64| {
        state_v
            .iter()
            .zip(s1_v)
            .zip(k)
            .map(|((x, y), d)| a * x + b * (y + dt * d))
            .collect::<Vec<_>>()
    };
    let mut s2 = state.clone();
    s2.u = s2_mix(0.75, 0.25, &state.u, &s1.u, &k2.u, dt);
    if let Some(phi) = s2.phi.as_mut() {
        *phi = s2_mix(
            0.75,
            0.25,
            state.phi.as_ref().unwrap(),
            s1.phi.as_ref().unwrap(),
            k2.phi.as_ref().unwrap(),
            dt,
        );
    }
    let k3 = eval_rhs(&s2, config)?;
    let third = 1.0 / 3.0;
    for i in 0..state.u.len() {
        state.u[i] = third * state.u[i] + 2.0 * third * (s2.u[i] + dt * k3.u[i]);
    }
    if let Some(phi) = state.phi.as_mut() {
        let s2p = s2.phi.as_ref().unwrap();
        let k3p = k3.phi.as_ref().unwrap();
        for i in 0..phi.len() {
            phi[i] = third * phi[i] + 2.0 * third * (s2p[i] + dt * k3p[i]);
        }
    }
    Ok(())
}

/// Error measures of a state against an exact solution at time `t`.
#[derive(Debug, Clone, Copy)]
pub struct ErrorMeasure {
    /// L² error by per-cell Gauss quadrature.
    pub l2: f64,
    /// Max of |u_h| over dense samples.
    pub amplitude: f64,
    /// Spatial phase lag of the best sinusoid fit, positive when the
    /// numerical wave trails the exact one; `None` when the amplitude is too
    /// small for the fit to be meaningful.
    pub phase_lag: Option<f64>,
}

/// Compares `u_h` against `exact(x)` (the exact solution at time `t`) and,
/// for single-frequency sinusoidal signals of angular frequency `omega`,
/// extracts the phase lag by least squares.
///
/// The fit model is `u_h(x) ≈ A sin(ω(x - t) + δ)`; a positive lag `δ/ω`
/// means the numerical crest sits behind the exact one.
pub fn measure_error(
    state: &DGState,
    omega: f64,
    t: f64,
    exact: &dyn Fn(f64) -> f64,
) -> ErrorMeasure {
    let rule = QuadratureRule::gauss_legendre(32);
    let mut err2 = 0.0;
    for j in 0..state.n_cells() {
        err2 += 0.5
            * state.mesh.width(j)
            * rule.integrate(|s| {
                let d = exact(state.mesh.to_physical(j, s)) - state.eval_u(j, s);
                d * d
            });
    }
    let samples = dg::sample(state, 32);
    let amplitude = samples.iter().map(|&(_, u, _)| u.abs()).fold(0.0, f64::max);
    let phase_lag = if amplitude < 1e-6 {
        None
    } else {
        // u ≈ p sin(ω(x-t)) + q cos(ω(x-t)) = A sin(ω(x-t) + δ), δ = atan2(q, p)
        let (mut ss, mut cc, mut sc, mut us, mut uc) = (0.0, 0.0, 0.0, 0.0, 0.0);
        for &(x, u, _) in &samples {
            let arg = omega * (x - t);
            let (s, c) = arg.sin_cos();
            ss += s * s;
            cc += c * c;
            sc += s * c;
            us += u * s;
            uc += u * c;
        }
        let det = ss * cc - sc * sc;
        if det.abs() < 1e-12 {
            None
        } else {
            let p = (us * cc - uc * sc) / det;
            let q = (uc * ss - us * sc) / det;
            Some(q.atan2(p) / omega)
        }
    };
    ErrorMeasure {
        l2: err2.sqrt(),
        amplitude,
        phase_lag,
    }
}
