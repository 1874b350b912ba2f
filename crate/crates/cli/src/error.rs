use fock_oracle::OracleError;
use qes_solver::SolverError;
use systems_catalog::CatalogError;
use std::fmt;

pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_ORACLE: i32 = 4;
pub const EXIT_ALGEBRA: i32 = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: EXIT_BAD_INPUT, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::NonConvergence { .. } => EXIT_ORACLE,
            _ => EXIT_BAD_INPUT,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::DegenerateDeterminant { .. } => CliError { code: EXIT_DEGENERATE, message: e.to_string() },
            SolverError::Oracle(o) => o.into(),
            SolverError::Root(_) | SolverError::Quotient(_) | SolverError::NotReconstructible => {
                CliError { code: EXIT_DEGENERATE, message: e.to_string() }
            }
            _ => CliError::input(e.to_string()),
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Oracle(o) => o.into(),
            _ => CliError::input(e.to_string()),
        }
    }
}
