//! One-dimensional periodic meshes of the unit interval, uniform or randomly
//! perturbed.

use std::io::Write;

use crate::{Error, Result};

/// Periodic partition of `[0, 1]`: nodes `x_{j-1/2}` (strictly increasing,
/// first node at 0) and cell widths `h_j`, wrapping at the right endpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicMesh1D {
    nodes: Vec<f64>,
    widths: Vec<f64>,
    min_width: f64,
    /// Provenance of the node placement, recorded so perturbed meshes can be
    /// reproduced bit-exactly.
    pub metadata: MeshMetadata,
}

/// How the mesh nodes were generated.
#[derive(Debug, Clone, PartialEq)]
pub enum MeshMetadata {
    Uniform,
    /// splitmix64-driven uniform perturbation of the interior nodes; the
    /// domain endpoint x = 0 stays fixed.
    Perturbed {
        generator: &'static str,
        amplitude: f64,
        seed: u64,
    },
}

impl PeriodicMesh1D {
    /// Uniform mesh with `n_cells` cells of width `1/n_cells`.
    pub fn uniform(n_cells: usize) -> Result<Self> {
        if n_cells < 2 {
            return Err(Error::Mesh(format!("need at least 2 cells, got {n_cells}")));
        }
        let h = 1.0 / n_cells as f64;
        let nodes: Vec<f64> = (0..n_cells).map(|j| j as f64 * h).collect();
        Ok(Self::from_nodes(nodes, MeshMetadata::Uniform))
    }

    /// Mesh with each interior node displaced from its uniform position by an
    /// independent uniform sample in `[-amplitude·h, +amplitude·h]`.
    ///
    /// `amplitude` must lie in `[0, 0.5)` so cells cannot collapse. The
    /// perturbation is deterministic for a fixed seed.
    pub fn perturbed(n_cells: usize, amplitude: f64, seed: u64) -> Result<Self> {
        if n_cells < 2 {
            return Err(Error::Mesh(format!("need at least 2 cells, got {n_cells}")));
        }
        if !(0.0..0.5).contains(&amplitude) {
            return Err(Error::Mesh(format!(
                "perturbation amplitude must lie in [0, 0.5), got {amplitude}"
            )));
        }
        let h = 1.0 / n_cells as f64;
        let mut state = seed;
        let nodes: Vec<f64> = (0..n_cells)
            .map(|j| {
                let base = j as f64 * h;
                if j == 0 {
                    base
                } else {
                    base + amplitude * h * unit_symmetric(&mut state)
                }
            })
            .collect();
        Ok(Self::from_nodes(
            nodes,
            MeshMetadata::Perturbed {
                generator: "splitmix64",
                amplitude,
                seed,
            },
        ))
    }

    fn from_nodes(nodes: Vec<f64>, metadata: MeshMetadata) -> Self {
        let n = nodes.len();
        let widths: Vec<f64> = (0..n)
            .map(|j| {
                if j + 1 < n {
                    nodes[j + 1] - nodes[j]
                } else {
                    1.0 - nodes[j]
                }
            })
            .collect();
        debug_assert!(widths.iter().all(|&w| w > 0.0));
        let min_width = widths.iter().cloned().fold(f64::INFINITY, f64::min);
        Self {
            nodes,
            widths,
            min_width,
            metadata,
        }
    }

    pub fn n_cells(&self) -> usize {
        self.nodes.len()
    }

    /// Left node position of cell `j`.
    pub fn left(&self, j: usize) -> f64 {
        self.nodes[j]
    }

    pub fn width(&self, j: usize) -> f64 {
        self.widths[j]
    }

    pub fn widths(&self) -> &[f64] {
        &self.widths
    }

    pub fn min_width(&self) -> f64 {
        self.min_width
    }

    /// Index of the cell to the left of cell `j`, wrapping periodically.
    pub fn left_neighbor(&self, j: usize) -> usize {
        (j + self.n_cells() - 1) % self.n_cells()
    }

    /// Maps a reference coordinate `s ∈ [-1, 1]` into cell `j`.
    pub fn to_physical(&self, j: usize, s: f64) -> f64 {
        self.nodes[j] + 0.5 * (s + 1.0) * self.widths[j]
    }

    /// Writes the mesh as CSV rows `j, x_left, h_j`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "j,x_left,h_j")?;
        for j in 0..self.n_cells() {
            writeln!(out, "{j},{:.16e},{:.16e}", self.nodes[j], self.widths[j])?;
        }
        Ok(())
    }
}

/// splitmix64 step: a counter-based generator with a full 2^64 period.
pub(crate) fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Uniform sample in [-1, 1) with 53 random bits.
fn unit_symmetric(state: &mut u64) -> f64 {
    let u = splitmix64(state) >> 11;
    u as f64 / (1u64 << 52) as f64 - 1.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_twenty_cells() {
        let mesh = PeriodicMesh1D::uniform(20).unwrap();
        assert_eq!(mesh.n_cells(), 20);
        for j in 0..20 {
            assert!((mesh.width(j) - 0.05).abs() < 1e-16);
        }
    }

    #[test]
    fn uniform_two_cells() {
        let mesh = PeriodicMesh1D::uniform(2).unwrap();
        assert_eq!(mesh.left(0), 0.0);
        assert_eq!(mesh.left(1), 0.5);
        assert_eq!(mesh.width(0), 0.5);
        assert_eq!(mesh.width(1), 0.5);
    }

    #[test]
    fn widths_partition_unity() {
        for mesh in [
            PeriodicMesh1D::uniform(4).unwrap(),
            PeriodicMesh1D::perturbed(17, 0.3, 42).unwrap(),
            PeriodicMesh1D::perturbed(20, 0.1, 1).unwrap(),
        ] {
            let total: f64 = mesh.widths().iter().sum();
            assert!((total - 1.0).abs() < 1e-15, "total = {total}");
            assert!(mesh.widths().iter().all(|&w| w > 0.0));
        }
    }

    #[test]
    fn rejects_tiny_and_collapsing() {
        assert!(PeriodicMesh1D::uniform(1).is_err());
        assert!(PeriodicMesh1D::perturbed(10, 0.5, 3).is_err());
        assert!(PeriodicMesh1D::perturbed(10, -0.1, 3).is_err());
    }

    #[test]
    fn zero_amplitude_matches_uniform() {
        let a = PeriodicMesh1D::uniform(20).unwrap();
        let b = PeriodicMesh1D::perturbed(20, 0.0, 7).unwrap();
        for j in 0..20 {
            assert_eq!(a.left(j), b.left(j));
            assert_eq!(a.width(j), b.width(j));
        }
    }

    #[test]
    fn perturbation_respects_displacement_bound() {
        let mesh = PeriodicMesh1D::perturbed(20, 0.1, 1).unwrap();
        let h = 1.0 / 20.0;
        for j in 0..20 {
            assert!(
                mesh.width(j) >= 0.8 * h - 1e-15,
                "cell {j}: {}",
                mesh.width(j)
            );
            assert!(
                mesh.width(j) <= 1.2 * h + 1e-15,
                "cell {j}: {}",
                mesh.width(j)
            );
        }
    }

    #[test]
    fn seeded_meshes_are_bit_identical() {
        let a = PeriodicMesh1D::perturbed(20, 0.1, 1).unwrap();
        let b = PeriodicMesh1D::perturbed(20, 0.1, 1).unwrap();
        assert_eq!(a, b);
        let c = PeriodicMesh1D::perturbed(20, 0.1, 2).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn csv_roundtrips_widths() {
        let mesh = PeriodicMesh1D::perturbed(5, 0.2, 9).unwrap();
        let mut buf = Vec::new();
        mesh.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("j,x_left,h_j"));
        let total: f64 = lines
            .map(|l| l.split(',').nth(2).unwrap().parse::<f64>().unwrap())
            .sum();
        assert!((total - 1.0).abs() < 1e-14);
    }
}
