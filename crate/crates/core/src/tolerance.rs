//! Numerical tolerances and resolutions.
//!
//! Every threshold used by a validator or a numerical check lives here so
//! a scenario can override it in one place.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    /// Group-element invariants (unitarity, determinant, metric preservation).
    pub alg: f64,
    /// Spinor normalization constraints.
    pub norm: f64,
    /// Phase-space constraint surfaces and tangency.
    pub geom: f64,
    /// Finite-difference agreement (curvature, closedness).
    pub fd: f64,
    /// Central finite-difference step.
    pub fd_step: f64,
    /// Change of a line integral under 2× refinement.
    pub quad: f64,
    /// Distance of flux / 2π from an integer.
    pub int: f64,
    /// Chart distance below which two particles are considered coincident.
    pub diag: f64,
    /// Distance within which an exchange phase snaps to an admissible value.
    pub snap: f64,
    /// Samples per closed loop or exchange leg.
    pub path_samples: usize,
    /// Grid resolution of the diagonal-crossing scan.
    pub diag_grid: usize,
    /// Icosphere refinement depth for flux integrals.
    pub mesh_depth: u32,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            alg: 1e-10,
            norm: 1e-9,
            geom: 1e-9,
            fd: 1e-6,
            fd_step: 1e-4,
            quad: 1e-6,
            int: 1e-3,
            diag: 1e-6,
            snap: 1e-6,
            path_samples: 512,
            diag_grid: 1024,
            mesh_depth: 5,
        }
    }
}
