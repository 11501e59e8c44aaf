//! Canned parameter studies: each experiment id reproduces one figure or
//! table as CSV data under its own output directory and evaluates the
//! quantitative claims attached to it, collected into a machine-readable
//! verification report.
//!
//! The claim evaluators live in [`checks`] so the acceptance test suite can
//! run them without going through the file-writing driver.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use crate::dg::{self, SchemeConfig};
use crate::dispersion::{alpha_star, MethodTag};
use crate::mesh::PeriodicMesh1D;
use crate::time_march::{advance, measure_error, MarchConfig};
use crate::{Error, Result};

pub mod checks;

/// Frequency of the standing initial condition `u_0 = sin(2πx)`.
pub const OMEGA0: f64 = 2.0 * std::f64::consts::PI;

/// The reproducible studies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentId {
    /// Four schemes, N=0, 20 cells, T=20.
    Fig1,
    /// Four schemes, N=1, 10 cells, T=200.
    Fig2,
    /// Four schemes, N=2, 4 cells, T=300.
    Fig3,
    /// N=0, 20 cells at scheme-specific times: U@1, C@5, A@20, A*@1500.
    Fig4,
    /// Method A on uniform vs 10%-perturbed meshes, T=40.
    Fig5,
    /// Method A* on uniform vs 10%-perturbed meshes, T=40.
    Fig6,
    /// Dispersion sweeps, leading-order fits and the algebraic identities.
    Table1,
    /// High-order coefficient fits E_N for N ≤ 4.
    Table2Partial,
    /// Asymptotic regime classification and the deep-decay prediction.
    Regimes,
    /// Everything above, each into its own subdirectory.
    All,
}

impl ExperimentId {
    pub fn dir_name(&self) -> &'static str {
        match self {
            ExperimentId::Fig1 => "fig1",
            ExperimentId::Fig2 => "fig2",
            ExperimentId::Fig3 => "fig3",
            ExperimentId::Fig4 => "fig4",
            ExperimentId::Fig5 => "fig5",
            ExperimentId::Fig6 => "fig6",
            ExperimentId::Table1 => "table1",
            ExperimentId::Table2Partial => "table2-partial",
            ExperimentId::Regimes => "regimes",
            ExperimentId::All => "all",
        }
    }

    pub fn all_ids() -> [ExperimentId; 9] {
        [
            ExperimentId::Fig1,
            ExperimentId::Fig2,
            ExperimentId::Fig3,
            ExperimentId::Fig4,
            ExperimentId::Fig5,
            ExperimentId::Fig6,
            ExperimentId::Table1,
            ExperimentId::Table2Partial,
            ExperimentId::Regimes,
        ]
    }
}

impl FromStr for ExperimentId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig1" => Ok(ExperimentId::Fig1),
            "fig2" => Ok(ExperimentId::Fig2),
            "fig3" => Ok(ExperimentId::Fig3),
            "fig4" => Ok(ExperimentId::Fig4),
            "fig5" => Ok(ExperimentId::Fig5),
            "fig6" => Ok(ExperimentId::Fig6),
            "table1" => Ok(ExperimentId::Table1),
            "table2-partial" | "table2" => Ok(ExperimentId::Table2Partial),
            "regimes" => Ok(ExperimentId::Regimes),
            "all" => Ok(ExperimentId::All),
            other => Err(Error::InvalidArgument(format!(
                "unknown experiment '{other}'"
            ))),
        }
    }
}

/// An experiment selection plus overrides; `None` fields take the
/// experiment's published defaults.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub id: ExperimentId,
    pub scheme: Option<MethodTag>,
    pub degree: Option<usize>,
    pub cells: Option<usize>,
    pub t_final: Option<f64>,
    pub cfl: Option<f64>,
    pub perturb: Option<f64>,
    pub seed: Option<u64>,
    pub outdir: PathBuf,
}

impl ExperimentSpec {
    pub fn new(id: ExperimentId, outdir: impl Into<PathBuf>) -> Self {
        Self {
            id,
            scheme: None,
            degree: None,
            cells: None,
            t_final: None,
            cfl: None,
            perturb: None,
            seed: None,
            outdir: outdir.into(),
        }
    }
}

/// One verified claim: a named quantity, the value the source reports, the
/// computed value, the tolerance and the verdict.
#[derive(Debug, Clone)]
pub struct Claim {
    pub id: String,
    pub paper_value: f64,
    pub computed: f64,
    pub tol: f64,
    pub pass: bool,
}

/// Claims accumulated by one `run` invocation.
#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub claims: Vec<Claim>,
}

impl VerificationReport {
    /// Claim that `computed` lies within `tol` of `paper_value`.
    fn check_abs(&mut self, id: &str, paper_value: f64, computed: f64, tol: f64) {
        let pass = (computed - paper_value).abs() <= tol;
        self.claims.push(Claim {
            id: id.into(),
            paper_value,
            computed,
            tol,
            pass,
        });
    }

    /// Claim that a boolean condition holds.
    fn check_bool(&mut self, id: &str, cond: bool) {
        self.claims.push(Claim {
            id: id.into(),
            paper_value: 1.0,
            computed: if cond { 1.0 } else { 0.0 },
            tol: 0.0,
            pass: cond,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.claims.extend(other.claims);
    }

    /// Claim ids must be unique; a full `all` run must cover every
    /// acceptance criterion exactly once per sub-aspect.
    pub fn ids_unique(&self) -> bool {
        let mut ids: Vec<&str> = self.claims.iter().map(|c| c.id.as_str()).collect();
        ids.sort_unstable();
        ids.windows(2).all(|w| w[0] != w[1])
    }

    pub fn covers_all_criteria(&self) -> bool {
        (1..=9).all(|k| {
            let prefix = format!("C{k}-");
            self.claims.iter().any(|c| c.id.starts_with(&prefix))
        })
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "claim,paper_value,computed,tol,pass")?;
        for c in &self.claims {
            writeln!(
                out,
                "{},{:.16e},{:.16e},{:.16e},{}",
                c.id, c.paper_value, c.computed, c.tol, c.pass
            )?;
        }
        Ok(())
    }
}

/// Runs an experiment, writing CSVs and `report.csv` under
/// `outdir/<experiment>/`; returns the report.
pub fn run(spec: &ExperimentSpec) -> Result<VerificationReport> {
    if spec.id == ExperimentId::All {
        let mut report = VerificationReport::default();
        for id in ExperimentId::all_ids() {
            let mut sub = spec.clone();
            sub.id = id;
            report.merge(run(&sub)?);
        }
        debug_assert!(report.ids_unique());
        debug_assert!(report.covers_all_criteria());
        fs::create_dir_all(&spec.outdir)?;
        let mut file = fs::File::create(spec.outdir.join("report.csv"))?;
        report.write_csv(&mut file)?;
        return Ok(report);
    }

    let dir = spec.outdir.join(spec.id.dir_name());
    fs::create_dir_all(&dir)?;
    let mut report = VerificationReport::default();
    match spec.id {
        ExperimentId::Fig1 => figure_run(spec, &dir, &mut report, 1, 0, 20, 20.0)?,
        ExperimentId::Fig2 => figure_run(spec, &dir, &mut report, 2, 1, 10, 200.0)?,
        ExperimentId::Fig3 => figure_run(spec, &dir, &mut report, 3, 2, 4, 300.0)?,
        ExperimentId::Fig4 => fig4(spec, &dir, &mut report)?,
        ExperimentId::Fig5 => leakage_run(spec, &dir, &mut report, MethodTag::A, 5)?,
        ExperimentId::Fig6 => leakage_run(spec, &dir, &mut report, MethodTag::AStar, 6)?,
        ExperimentId::Table1 => table1(spec, &dir, &mut report)?,
        ExperimentId::Table2Partial => table2(spec, &dir, &mut report)?,
        ExperimentId::Regimes => regimes(spec, &dir, &mut report)?,
        ExperimentId::All => unreachable!(),
    }
    let mut file = fs::File::create(dir.join("report.csv"))?;
    report.write_csv(&mut file)?;
    Ok(report)
}

fn scheme_config(tag: MethodTag, degree: usize) -> SchemeConfig {
    match tag {
        MethodTag::U => SchemeConfig::upwind(degree),
        MethodTag::C => SchemeConfig::centered(degree),
        MethodTag::A => SchemeConfig::aux(degree, 1.0),
        MethodTag::AStar => SchemeConfig::aux(degree, alpha_star(degree)),
    }
}

struct RunOutcome {
    l2: f64,
    amplitude: f64,
    phase_lag: Option<f64>,
    max_drift: f64,
    max_phi_fraction: f64,
}

/// Projects the sine, marches to `t_final`, writes the snapshot and
/// trajectory CSVs, and measures errors against the advected exact solution.
fn march_and_measure(
    dir: &Path,
    label: &str,
    mesh: Arc<PeriodicMesh1D>,
    config: &SchemeConfig,
    t_final: f64,
    cfl: f64,
) -> Result<RunOutcome> {
    let state = dg::project_initial(mesh, config, &|x| (OMEGA0 * x).sin(), None);
    let (end, traj) = advance(&state, config, &MarchConfig::new(t_final, cfl))?;
    let exact = move |x: f64| (OMEGA0 * (x - t_final)).sin();
    let m = measure_error(&end, OMEGA0, t_final, &exact);
    let mut snap = fs::File::create(dir.join(format!("{label}_snapshot.csv")))?;
    dg::write_snapshot_csv(&end, 8, &mut snap)?;
    let mut tr = fs::File::create(dir.join(format!("{label}_trajectory.csv")))?;
    traj.write_csv(&mut tr)?;
    Ok(RunOutcome {
        l2: m.l2,
        amplitude: m.amplitude,
        phase_lag: m.phase_lag,
        max_drift: traj.max_energy_drift(),
        max_phi_fraction: traj.max_phi_fraction(),
    })
}

/// Figures 1–3: the four schemes side by side at one (N, cells, T). The
/// quantitative surrogates are the dissipation of U and the dispersion
/// ordering A* < A < C in L².
fn figure_run(
    spec: &ExperimentSpec,
    dir: &Path,
    report: &mut VerificationReport,
    fig: usize,
    degree_default: usize,
    cells_default: usize,
    t_default: f64,
) -> Result<()> {
    let degree = spec.degree.unwrap_or(degree_default);
    let cells = spec.cells.unwrap_or(cells_default);
    let t_final = spec.t_final.unwrap_or(t_default);
    let cfl = spec.cfl.unwrap_or(0.05);
    let mesh = Arc::new(PeriodicMesh1D::uniform(cells)?);
    let tags = match spec.scheme {
        Some(tag) => vec![tag],
        None => vec![MethodTag::U, MethodTag::C, MethodTag::A, MethodTag::AStar],
    };
    let mut l2 = std::collections::HashMap::new();
    let mut amp = std::collections::HashMap::new();
    for tag in &tags {
        let config = scheme_config(*tag, degree);
        let out = march_and_measure(dir, &tag.to_string(), mesh.clone(), &config, t_final, cfl)?;
        amp.insert(*tag, out.amplitude);
        l2.insert(*tag, out.l2);
    }
    if tags.len() == 4 {
        // The figure's qualitative content as quantitative surrogates: the
        // upwind amplitude collapses while the conservative schemes hold
        // theirs, and the phase accuracy orders A* ahead of A ahead of C.
        report.check_abs(
            &format!("fig{fig}-u-dissipated"),
            0.0,
            amp[&MethodTag::U],
            0.5,
        );
        let conserved = [MethodTag::C, MethodTag::A, MethodTag::AStar]
            .iter()
            .map(|t| amp[t])
            .fold(f64::MAX, f64::min);
        report.check_bool(
            &format!("fig{fig}-conservative-amplitudes"),
            conserved > 0.9,
        );
        let ordered =
            l2[&MethodTag::AStar] < l2[&MethodTag::A] && l2[&MethodTag::A] < l2[&MethodTag::C];
        report.check_bool(&format!("fig{fig}-dispersion-ordering"), ordered);
    }
    Ok(())
}

/// Figure 4 and acceptance criterion 6: amplitude of U at T=1 against
/// `e^{-π²/10}` and the ≈0.08 phase lags of C/A/A* at their times, plus the
/// step-halving certificate that the temporal error is negligible.
fn fig4(spec: &ExperimentSpec, dir: &Path, report: &mut VerificationReport) -> Result<()> {
    let degree = spec.degree.unwrap_or(0);
    let cells = spec.cells.unwrap_or(20);
    let base_cfl = spec.cfl.unwrap_or(0.05);
    let mesh = Arc::new(PeriodicMesh1D::uniform(cells)?);
    // The T=1500 leg runs at a smaller CFL so the RK4 energy drift stays
    // inside the 1e-7 budget over 10⁶ steps.
    let legs = [
        (MethodTag::U, spec.t_final.unwrap_or(1.0), base_cfl),
        (MethodTag::C, spec.t_final.unwrap_or(5.0), base_cfl),
        (MethodTag::A, spec.t_final.unwrap_or(20.0), base_cfl),
        (
            MethodTag::AStar,
            spec.t_final.unwrap_or(1500.0),
            base_cfl.min(0.03),
        ),
    ];
    let mut halving_worst = 0.0f64;
    for (tag, t_final, cfl) in legs {
        let config = scheme_config(tag, degree);
        let label = format!("{tag}_T{t_final}");
        let out = march_and_measure(dir, &label, mesh.clone(), &config, t_final, cfl)?;
        let halved = march_and_measure(
            dir,
            &format!("{label}_halved"),
            mesh.clone(),
            &config,
            t_final,
            cfl / 2.0,
        )?;
        if out.l2 > 0.0 {
            halving_worst = halving_worst.max((out.l2 - halved.l2).abs() / out.l2);
        }
        match tag {
            MethodTag::U => {
                let target = (-std::f64::consts::PI.powi(2) / 10.0).exp();
                report.check_abs("C6-u-amplitude", target, out.amplitude, 0.02);
            }
            MethodTag::C => {
                report.check_abs(
                    "C6-phase-lag-C",
                    0.08,
                    out.phase_lag.unwrap_or(f64::NAN),
                    0.01,
                );
            }
            MethodTag::A => {
                report.check_abs(
                    "C6-phase-lag-A",
                    0.08,
                    out.phase_lag.unwrap_or(f64::NAN),
                    0.01,
                );
            }
            MethodTag::AStar => {
                report.check_abs(
                    "C6-phase-lag-Astar",
                    0.08,
                    out.phase_lag.unwrap_or(f64::NAN),
                    0.01,
                );
                report.check_abs("C6-astar-energy-drift", 0.0, out.max_drift, 1e-7);
            }
        }
    }
    report.check_abs("C6-temporal-halving", 0.0, halving_worst, 0.01);
    Ok(())
}

/// Figures 5–6: uniform vs perturbed meshes for an auxiliary scheme. The
/// source's qualitative claim (more leakage into φ on non-uniform meshes) is
/// evaluated in distribution: the median max-leakage over a small seed
/// ensemble against the uniform-mesh value. Criterion 5 (the semi-discrete
/// energy laws, perturbed meshes included) is attached to fig5.
fn leakage_run(
    spec: &ExperimentSpec,
    dir: &Path,
    report: &mut VerificationReport,
    tag: MethodTag,
    fig: usize,
) -> Result<()> {
    let degree = spec.degree.unwrap_or(0);
    let cells = spec.cells.unwrap_or(20);
    let t_final = spec.t_final.unwrap_or(40.0);
    let cfl = spec.cfl.unwrap_or(0.05);
    let amplitude = spec.perturb.unwrap_or(0.1);
    let seed0 = spec.seed.unwrap_or(1);
    let config = scheme_config(tag, degree);

    let uniform = Arc::new(PeriodicMesh1D::uniform(cells)?);
    let base = march_and_measure(dir, "uniform", uniform, &config, t_final, cfl)?;

    // Mesh provenance: the perturbation generator and its parameters, so the
    // node placement is reproducible from the outputs alone.
    let mut meta = fs::File::create(dir.join("run_metadata.csv"))?;
    writeln!(meta, "key,value")?;
    writeln!(meta, "generator,splitmix64")?;
    writeln!(meta, "perturb_amplitude,{amplitude}")?;
    writeln!(meta, "seeds,{seed0}..{}", seed0 + 4)?;
    writeln!(meta, "cells,{cells}")?;
    writeln!(meta, "degree,{degree}")?;
    writeln!(meta, "t_final,{t_final}")?;
    writeln!(meta, "cfl,{cfl}")?;

    let mut leaks = Vec::new();
    for k in 0..5u64 {
        let seed = seed0 + k;
        let mesh = Arc::new(PeriodicMesh1D::perturbed(cells, amplitude, seed)?);
        let mut mesh_csv = fs::File::create(dir.join(format!("mesh_seed{seed}.csv")))?;
        mesh.write_csv(&mut mesh_csv)?;
        let label = format!("perturbed_seed{seed}");
        let out = march_and_measure(dir, &label, mesh, &config, t_final, cfl)?;
        report.check_abs(
            &format!("fig{fig}-combined-energy-drift-seed{seed}"),
            0.0,
            out.max_drift,
            1e-7,
        );
        leaks.push(out.max_phi_fraction);
    }
    leaks.sort_by(f64::total_cmp);
    let median = leaks[leaks.len() / 2];
    report.check_bool(
        &format!("fig{fig}-leakage-larger-perturbed"),
        median > base.max_phi_fraction,
    );

    let mut leak_csv = fs::File::create(dir.join("leakage.csv"))?;
    writeln!(leak_csv, "mesh,max_phi_fraction")?;
    writeln!(leak_csv, "uniform,{:.16e}", base.max_phi_fraction)?;
    for (k, leak) in leaks.iter().enumerate() {
        writeln!(leak_csv, "perturbed_rank{k},{leak:.16e}")?;
    }

    if fig == 5 {
        // Criterion 5: instantaneous energy laws on random states.
        let r = checks::criterion5_energy_residuals(spec.seed.unwrap_or(1));
        report.check_abs("C5-upwind-rate", 0.0, r.upwind, 1e-12);
        report.check_abs("C5-centered-rate", 0.0, r.centered, 1e-12);
        report.check_abs("C5-aux-rate", 0.0, r.aux, 1e-12);
    }
    Ok(())
}

/// Table 1: dispersion sweeps with the slope/coefficient fits, plus the
/// algebraic identities (criteria 1, 4, 7, 9).
fn table1(spec: &ExperimentSpec, dir: &Path, report: &mut VerificationReport) -> Result<()> {
    let degrees: Vec<usize> = match spec.degree {
        Some(n) => vec![n],
        None => vec![0, 1, 2],
    };

    // Sweep CSV across the fit range.
    let mut sweep = fs::File::create(dir.join("dispersion_sweep.csv"))?;
    writeln!(
        sweep,
        "scheme,N,alpha,omega,re_R,im_R,k_h_re,k_h_im,n_spurious"
    )?;
    for tag in [MethodTag::U, MethodTag::C, MethodTag::A, MethodTag::AStar] {
        for &n in &degrees {
            for point in checks::sweep_points(tag, n, 12) {
                let alpha = match tag {
                    MethodTag::U | MethodTag::C => String::new(),
                    MethodTag::A => "1".into(),
                    MethodTag::AStar => format!("{:.16e}", alpha_star(n)),
                };
                writeln!(
                    sweep,
                    "{tag},{n},{alpha},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{}",
                    point.omega, point.r.re, point.r.im, point.kh.re, point.kh.im, point.n_spurious
                )?;
            }
        }
    }

    // Criterion 2: observed orders and coefficients.
    for fit in checks::criterion2_fits(&degrees) {
        report.check_abs(
            &format!("C2-slope-{}-N{}", fit.tag, fit.degree),
            fit.order as f64,
            fit.slope,
            0.05,
        );
        report.check_abs(
            &format!("C2-coeff-{}-N{}", fit.tag, fit.degree),
            1.0,
            fit.coeff_ratio,
            0.02,
        );
    }

    // Criterion 1: the determinant identity of the 4×4 condition matrix.
    report.check_abs(
        "C1-characteristic-identity",
        0.0,
        checks::criterion1_max_residual(200, 0xD15EA5E),
        1e-10,
    );

    // Criterion 4: unimodularity of the physical pair and the real spurious
    // pair at α = 1/2.
    report.check_abs(
        "C4-unimodularity",
        0.0,
        checks::criterion4_unimodularity(),
        1e-12,
    );
    report.check_bool(
        "C4-spurious-real-alpha-half",
        checks::criterion4_spurious_real(),
    );

    // Criterion 7: Padé remainder structure.
    for fit in checks::criterion7_pade_fits() {
        report.check_abs(
            &format!("C7-pade-slope-N{}", fit.degree),
            fit.order as f64,
            fit.slope,
            0.05,
        );
        report.check_abs(
            &format!("C7-pade-coeff-N{}", fit.degree),
            1.0,
            fit.coeff_ratio,
            0.02,
        );
    }

    // Criterion 9: operator symbol vs closed forms.
    report.check_abs(
        "C9-cross-validation",
        0.0,
        checks::criterion9_max_mismatch(),
        1e-10,
    );
    Ok(())
}

/// Table 2 (partial): fitted `E_N` against the printed values for N ≤ 4.
fn table2(_spec: &ExperimentSpec, dir: &Path, report: &mut VerificationReport) -> Result<()> {
    let mut csv = fs::File::create(dir.join("e_n_fits.csv"))?;
    writeln!(csv, "N,e_n_fitted,e_n_printed")?;
    for fit in checks::criterion3_e_fits() {
        writeln!(
            csv,
            "{},{:.16e},{:.16e}",
            fit.degree, fit.fitted, fit.printed
        )?;
        report.check_abs(
            &format!("C3-E{}", fit.degree),
            1.0,
            fit.fitted / fit.printed,
            0.005,
        );
    }
    Ok(())
}

/// Regime sweep at Ω = 1 plus the super-exponential magnitude check.
fn regimes(_spec: &ExperimentSpec, dir: &Path, report: &mut VerificationReport) -> Result<()> {
    let mut csv = fs::File::create(dir.join("regimes.csv"))?;
    writeln!(
        csv,
        "N,omega,kappa,label,predicted_log10_rho,computed_log10_rho"
    )?;
    for n in 0..=20usize {
        let omega = 1.0;
        let r = crate::dispersion::classify_regime(n, omega);
        let computed = crate::dispersion::floquet_error_log10(MethodTag::A, n, omega)?;
        writeln!(
            csv,
            "{n},{omega},{:.6},{:?},{},{:.6}",
            r.kappa,
            r.label,
            r.predicted_rho_log10
                .map_or(String::new(), |v| format!("{v:.6}")),
            computed
        )?;
    }
    // Criterion 8 as stated: agreement within a factor of 2 at (N=15, Ω=1).
    // The printed prediction formula carries a systematic factor-2 excess
    // over the source's own leading coefficient (see the analysis notes), so
    // this check documents a near-miss rather than passing.
    let ratio = checks::criterion8_ratio();
    report.check_abs("C8-super-exponential-factor2", 1.0, ratio, 1.0);
    report.check_bool("regimes-label-examples", checks::regime_label_examples());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tmpdir(name: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("dgwave-test-{name}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        fs::create_dir_all(&dir).unwrap();
        dir
    }

    #[test]
    fn experiment_ids_parse() {
        assert_eq!("fig4".parse::<ExperimentId>().unwrap(), ExperimentId::Fig4);
        assert_eq!(
            "table2-partial".parse::<ExperimentId>().unwrap(),
            ExperimentId::Table2Partial
        );
        assert!("fig7".parse::<ExperimentId>().is_err());
    }

    #[test]
    fn report_csv_and_uniqueness() {
        let mut r = VerificationReport::default();
        r.check_abs("a", 1.0, 1.001, 0.01);
        r.check_bool("b", true);
        assert!(r.all_pass());
        assert!(r.ids_unique());
        r.check_abs("a", 0.0, 5.0, 0.1);
        assert!(!r.ids_unique());
        assert!(!r.all_pass());
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("claim,paper_value,computed,tol,pass"));
        assert_eq!(text.lines().count(), 4);
    }

    #[test]
    fn table2_experiment_passes_and_writes_files() {
        let dir = tmpdir("table2");
        let spec = ExperimentSpec::new(ExperimentId::Table2Partial, &dir);
        let report = run(&spec).unwrap();
        assert!(report.all_pass(), "claims: {:?}", report.claims);
        assert!(dir.join("table2-partial/e_n_fits.csv").exists());
        assert!(dir.join("table2-partial/report.csv").exists());
        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn fig5_runs_deterministically() {
        let dir_a = tmpdir("fig5a");
        let dir_b = tmpdir("fig5b");
        for dir in [&dir_a, &dir_b] {
            let mut spec = ExperimentSpec::new(ExperimentId::Fig5, dir);
            spec.t_final = Some(2.0); // keep the unit test fast
            let report = run(&spec).unwrap();
            assert!(report.ids_unique());
        }
        let read = |d: &PathBuf| fs::read(d.join("fig5/perturbed_seed1_snapshot.csv")).unwrap();
        assert_eq!(read(&dir_a), read(&dir_b), "same seed, same bytes");
        let _ = fs::remove_dir_all(&dir_a);
        let _ = fs::remove_dir_all(&dir_b);
    }
}
