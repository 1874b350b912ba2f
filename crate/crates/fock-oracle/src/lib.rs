//! Brute-force oracle for the generalized E⊗ε Hamiltonian
//!
//! ```text
//! H = n1 + n2 + 1 + (1/2 + 2μ)σ0 + 2κ[(a1 + a2†)σ+ + (a1† + a2)σ-]
//! ```
//!
//! restricted to one eigenspace of `J = n1 - n2 + σ0/2`, diagonalised at
//! doubling truncations.

pub mod full;
pub mod params;
pub mod sector;
pub mod spectrum;

pub use full::{check_j_commutes, FullSpace};
pub use params::{mirror_sector, OracleTarget, SectorParams};
pub use sector::{build_sector_hamiltonian, sector_bands, BasisLabel, SectorBasis};
pub use spectrum::{contains_energy, converged_spectrum, residual_norm, EnergyMatch, SpectrumReport, N0, N_MAX, RESIDUAL_MARGIN};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("sector j = {0} is not realizable (j must be a nonnegative integer)")]
    NonRealizable(String),
    #[error("truncation must be at least 1")]
    BadTruncation,
    #[error("window must be at least 1")]
    BadWindow,
    #[error("tolerance must be positive")]
    BadTolerance,
    #[error("no convergence up to N = {n_max} (last drift {gap:e})")]
    NonConvergence { n_max: usize, gap: f64 },
    #[error("state has zero norm")]
    ZeroState,
    #[error("state length {got} does not match basis dimension {want}")]
    StateLength { got: usize, want: usize },
}
