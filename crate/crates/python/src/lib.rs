//! Python bindings: the mesh/solver entry points and the dispersion
//! analyzer, exposed as plain functions returning builtin types plus two
//! small result classes.

use std::path::PathBuf;
use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use dgwave::dg::{self, SchemeConfig};
use dgwave::dispersion::{self, MethodTag};
use dgwave::experiments::{self, ExperimentSpec};
use dgwave::mesh::PeriodicMesh1D;
use dgwave::time_march::{advance, measure_error, MarchConfig};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_tag(scheme: &str) -> PyResult<MethodTag> {
    scheme.parse::<MethodTag>().map_err(err)
}

fn scheme_config(tag: MethodTag, degree: usize) -> SchemeConfig {
    match tag {
        MethodTag::U => SchemeConfig::upwind(degree),
        MethodTag::C => SchemeConfig::centered(degree),
        MethodTag::A => SchemeConfig::aux(degree, 1.0),
        MethodTag::AStar => SchemeConfig::aux(degree, dispersion::alpha_star(degree)),
    }
}

/// `(x_left, width)` pairs of a uniform periodic mesh of [0, 1].
#[pyfunction]
fn uniform_mesh(n_cells: usize) -> PyResult<Vec<(f64, f64)>> {
    let mesh = PeriodicMesh1D::uniform(n_cells).map_err(err)?;
    Ok((0..mesh.n_cells())
        .map(|j| (mesh.left(j), mesh.width(j)))
        .collect())
}

/// `(x_left, width)` pairs of a seeded randomly perturbed periodic mesh.
#[pyfunction]
fn perturbed_mesh(n_cells: usize, amplitude: f64, seed: u64) -> PyResult<Vec<(f64, f64)>> {
    let mesh = PeriodicMesh1D::perturbed(n_cells, amplitude, seed).map_err(err)?;
    Ok((0..mesh.n_cells())
        .map(|j| (mesh.left(j), mesh.width(j)))
        .collect())
}

/// The optimized coupling constant α*(N).
#[pyfunction]
fn alpha_star(degree: usize) -> f64 {
    dispersion::alpha_star(degree)
}

/// Leading error term of a scheme: `(order, coefficient, component)` where
/// component is `"re"` or `"im"`.
#[pyfunction]
fn leading_term(scheme: &str, degree: usize) -> PyResult<(u32, f64, String)> {
    let model = dispersion::leading_term(parse_tag(scheme)?, degree).map_err(err)?;
    let component = match model.component {
        dispersion::ErrorComponent::RealPart => "re",
        dispersion::ErrorComponent::ImagPart => "im",
    };
    Ok((model.order, model.coefficient, component.to_string()))
}

/// Floquet multipliers of the auxiliary scheme and their relative errors.
#[pyclass(get_all, skip_from_py_object)]
#[derive(Clone)]
struct FloquetResult {
    degree: usize,
    omega: f64,
    alpha: f64,
    roots: Vec<(f64, f64)>,
    lambda_plus: (f64, f64),
    lambda_minus: (f64, f64),
    spurious: Vec<(f64, f64)>,
    rho_plus: (f64, f64),
    rho_minus: (f64, f64),
    kh_plus: (f64, f64),
    n_spurious: usize,
    repeated_roots: bool,
}

fn c2t(z: num_complex::Complex64) -> (f64, f64) {
    (z.re, z.im)
}

/// Solves the auxiliary characteristic equation at `(N, Ω, α)`.
#[pyfunction]
fn solve_floquet(degree: usize, omega: f64, alpha: f64) -> PyResult<FloquetResult> {
    let sol = dispersion::solve_floquet(degree, omega, alpha).map_err(err)?;
    Ok(FloquetResult {
        degree: sol.degree,
        omega: sol.omega,
        alpha: sol.alpha,
        roots: sol.roots.iter().copied().map(c2t).collect(),
        lambda_plus: c2t(sol.lambda_plus),
        lambda_minus: c2t(sol.lambda_minus),
        spurious: sol.spurious.iter().copied().map(c2t).collect(),
        rho_plus: c2t(sol.rho_plus),
        rho_minus: c2t(sol.rho_minus),
        kh_plus: c2t(sol.kh_plus),
        n_spurious: sol.n_spurious(),
        repeated_roots: sol.repeated_roots,
    })
}

/// High-precision relative error `(Re R, Im R)` of the physical multiplier
/// for scheme `"U" | "C" | "A" | "Astar"`.
#[pyfunction]
fn floquet_error(scheme: &str, degree: usize, omega: f64) -> PyResult<(f64, f64)> {
    let r = dispersion::floquet_error(parse_tag(scheme)?, degree, omega).map_err(err)?;
    Ok((r.re, r.im))
}

/// Base-10 log magnitude of the relative error; meaningful far below f64
/// underflow.
#[pyfunction]
fn floquet_error_log10(scheme: &str, degree: usize, omega: f64) -> PyResult<f64> {
    dispersion::floquet_error_log10(parse_tag(scheme)?, degree, omega).map_err(err)
}

/// Padé remainder `((Re 𝓔, Im 𝓔), Θ)` of `e^{iΩ}` at degree N.
#[pyfunction]
fn pade_remainder(degree: usize, omega: f64) -> PyResult<((f64, f64), f64)> {
    let p = dispersion::pade_remainder(degree, omega).map_err(err)?;
    Ok(((p.e_script.re, p.e_script.im), p.theta))
}

/// Regime label, κ and (when super-exponential) the predicted log10 |ρ|.
#[pyfunction]
fn classify_regime(degree: usize, omega: f64) -> (String, f64, Option<f64>) {
    let r = dispersion::classify_regime(degree, omega);
    (format!("{:?}", r.label), r.kappa, r.predicted_rho_log10)
}

/// Outcome of a periodic advection march against the exact solution.
#[pyclass(get_all, skip_from_py_object)]
#[derive(Clone)]
struct MarchResult {
    l2_error: f64,
    amplitude: f64,
    phase_lag: Option<f64>,
    energy_u: f64,
    energy_phi: f64,
    max_energy_drift: f64,
    max_phi_fraction: f64,
}

/// Projects `sin(2πx)`, marches to `t_final` and measures errors.
#[pyfunction]
#[pyo3(signature = (scheme, degree, cells, t_final, cfl=0.05, perturb=0.0, seed=1))]
fn advance_wave(
    scheme: &str,
    degree: usize,
    cells: usize,
    t_final: f64,
    cfl: f64,
    perturb: f64,
    seed: u64,
) -> PyResult<MarchResult> {
    let tag = parse_tag(scheme)?;
    let config = scheme_config(tag, degree);
    let mesh = if perturb == 0.0 {
        PeriodicMesh1D::uniform(cells)
    } else {
        PeriodicMesh1D::perturbed(cells, perturb, seed)
    }
    .map_err(err)?;
    let omega0 = experiments::OMEGA0;
    let state = dg::project_initial(Arc::new(mesh), &config, &|x| (omega0 * x).sin(), None);
    let (end, traj) = advance(&state, &config, &MarchConfig::new(t_final, cfl)).map_err(err)?;
    let m = measure_error(&end, omega0, t_final, &move |x| {
        (omega0 * (x - t_final)).sin()
    });
    let (e_u, e_phi) = dg::energy(&end);
    Ok(MarchResult {
        l2_error: m.l2,
        amplitude: m.amplitude,
        phase_lag: m.phase_lag,
        energy_u: e_u,
        energy_phi: e_phi,
        max_energy_drift: traj.max_energy_drift(),
        max_phi_fraction: traj.max_phi_fraction(),
    })
}

/// Runs a canned experiment (see `list_experiments`) into `outdir`;
/// returns True when every attached claim passed.
#[pyfunction]
fn run_experiment(experiment: &str, outdir: &str) -> PyResult<bool> {
    let id = experiment.parse().map_err(err)?;
    let spec = ExperimentSpec::new(id, PathBuf::from(outdir));
    let report = experiments::run(&spec).map_err(err)?;
    Ok(report.all_pass())
}

#[pyfunction]
fn list_experiments() -> Vec<String> {
    experiments::ExperimentId::all_ids()
        .iter()
        .map(|id| id.dir_name().to_string())
        .collect()
}

#[pymodule]
fn dgwave_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<FloquetResult>()?;
    m.add_class::<MarchResult>()?;
    m.add_function(wrap_pyfunction!(uniform_mesh, m)?)?;
    m.add_function(wrap_pyfunction!(perturbed_mesh, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_star, m)?)?;
    m.add_function(wrap_pyfunction!(leading_term, m)?)?;
    m.add_function(wrap_pyfunction!(solve_floquet, m)?)?;
    m.add_function(wrap_pyfunction!(floquet_error, m)?)?;
    m.add_function(wrap_pyfunction!(floquet_error_log10, m)?)?;
    m.add_function(wrap_pyfunction!(pade_remainder, m)?)?;
    m.add_function(wrap_pyfunction!(classify_regime, m)?)?;
    m.add_function(wrap_pyfunction!(advance_wave, m)?)?;
    m.add_function(wrap_pyfunction!(run_experiment, m)?)?;
    m.add_function(wrap_pyfunction!(list_experiments, m)?)?;
    Ok(())
}
