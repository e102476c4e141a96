//! Independent numerical eigenvalue oracles for radial bound-state problems:
//! a Laguerre-mesh discretization of the nonrelativistic radial equation, an
//! oscillator-basis variational solver for square-root kinetic energies, and
//! closed-form exact spectra for calibration.

mod basis;
mod exact;
mod mesh;
mod quadrature;

pub use basis::basis_salpeter;
pub use exact::{airy_exact_linear, exp_swave_exact};
pub use mesh::{mesh_critical_coupling, mesh_schrodinger, mesh_solve, MeshConfig, MeshSolution};
pub use quadrature::{gauss_laguerre, laguerre_nodes};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RefError {
    #[error("eigenvalue still moving after growing the mesh to {points} points")]
    NonConvergence { points: usize },
    #[error("quadrature or diagonalization produced no usable result")]
    QuadratureFailure,
    #[error("no bound level in the searched range")]
    NoRoot,
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(&'static str),
}
