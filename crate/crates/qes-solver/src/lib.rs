//! Recurrence systems for polynomial solutions on the energy baselines,
//! their determinants in t = κ², and validated Juddian points.
//!
//! `mu` everywhere is the σ0 coupling of the Hamiltonian, (1/2 + 2μ)σ0.
//! The displayed literature matrix uses the opposite sign; see
//! [`RecurrenceSystem::printed`].

pub mod juddian;
pub mod nullvec;
pub mod printed;
pub mod reconstruct;
pub mod recurrence;

pub(crate) mod ser {
    use numeric_core::rational::rational_string;
    use numeric_core::Rational;

    pub fn ser_rat<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_string(r))
    }

    pub fn ser_opt_rat<S: serde::Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&rational_string(r)),
            None => s.serialize_none(),
        }
    }
}

pub use juddian::{
    juddian_points, BaselineCondition, EnergyValue, JuddianOptions, JuddianPoint, JuddianReport, OracleCheck,
    ReconstructionCheck, Validation,
};
pub use nullvec::{exact_eigencheck, null_vector, CoefficientVector};
pub use printed::{
    compare_with_printed, eta_rho_params, printed_polynomial, random_draws, ComparisonReport, DrawRecord, Verdict,
};
pub use reconstruct::{bargmann_to_fock, reconstruct_fock_state};
pub use recurrence::{BasisLabel, RecurrenceSystem};

use fock_oracle::OracleError;
use numeric_core::{QuotientError, RootError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolverError {
    #[error("k = {0} is invalid: 2k must be a nonnegative integer")]
    InvalidK(String),
    #[error("kappa_max must be positive")]
    InvalidKappaMax,
    #[error("tolerance must be positive")]
    InvalidTolerance,
    #[error("determinant vanishes identically for k={k}, j={j}, mu={mu}")]
    DegenerateDeterminant { k: String, j: String, mu: String },
    #[error("printed polynomial only exists for k in {{0, 1/2, 1}}, got {0}")]
    UnsupportedPrinted(String),
    #[error("reconstruction needs a realizable sector with kappa > 0")]
    NotReconstructible,
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
}
