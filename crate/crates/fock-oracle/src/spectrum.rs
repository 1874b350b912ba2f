use crate::params::SectorParams;
use crate::sector::{build_sector_hamiltonian, sector_bands};
use crate::OracleError;
use numeric_core::tridiagonal_eigenvalues;
use serde::Serialize;

pub const N0: usize = 16;
pub const N_MAX: usize = 4096;
/// Extra Fock levels kept when evaluating residuals.
pub const RESIDUAL_MARGIN: usize = 4;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<f64>,
    pub truncation_used: usize,
    pub convergence_gap: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EnergyMatch {
    pub found: bool,
    pub distance: f64,
}

fn lowest(p: &SectorParams, n: usize, window: usize) -> Result<Vec<f64>, OracleError> {
    let (d, e) = sector_bands(p, n)?;
    Ok(tridiagonal_eigenvalues(&d, &e, window))
}

/// Doubles the truncation from N0 until the lowest `window` eigenvalues move
/// by less than `tol`.
pub fn converged_spectrum(p: &SectorParams, window: usize, tol: f64) -> Result<SpectrumReport, OracleError> {
    if window == 0 {
        return Err(OracleError::BadWindow);
    }
    if !(tol > 0.0) {
        return Err(OracleError::BadTolerance);
    }
    let mut n = N0.max(window);
    let mut prev = lowest(p, n, window)?;
    let mut gap = f64::INFINITY;
    while n < N_MAX {
        n *= 2;
        let cur = lowest(p, n, window)?;
        gap = prev.iter().zip(&cur).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        prev = cur;
        if gap < tol {
            return Ok(SpectrumReport { eigenvalues: prev, truncation_used: n, convergence_gap: gap });
        }
    }
    Err(OracleError::NonConvergence { n_max: N_MAX, gap })
}

pub fn contains_energy(report: &SpectrumReport, e: f64, tol: f64) -> EnergyMatch {
    let distance = report.eigenvalues.iter().map(|v| (v - e).abs()).fold(f64::INFINITY, f64::min);
    EnergyMatch { found: distance <= tol, distance }
}

/// ‖(H - E)ψ‖/‖ψ‖ with ψ given on SectorBasis(j, N), evaluated with
/// RESIDUAL_MARGIN extra levels so that truncation leakage is visible.
pub fn residual_norm(state: &[f64], p: &SectorParams, n: usize, e: f64) -> Result<f64, OracleError> {
    let want = 2 * (n + 1);
    if state.len() != want {
        return Err(OracleError::StateLength { got: state.len(), want });
    }
    let norm = state.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(OracleError::ZeroState);
    }
    let h = build_sector_hamiltonian(p, n + RESIDUAL_MARGIN)?;
    let mut psi = state.to_vec();
    psi.resize(h.dim(), 0.0);
    let hpsi = h.mul_vec(&psi);
    let r = hpsi.iter().zip(&psi).map(|(a, b)| (a - e * b).powi(2)).sum::<f64>().sqrt();
    Ok(r / norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use numeric_core::rational::int;

    #[test]
    fn decoupled_ladder() {
        let p = SectorParams::new(int(0), int(0), 0.0, int(0));
        let r = converged_spectrum(&p, 4, 1e-12).unwrap();
        for (a, b) in r.eigenvalues.iter().zip([1.5, 1.5, 3.5, 3.5]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn energy_lookup() {
        let r = SpectrumReport { eigenvalues: vec![1.0, 2.0], truncation_used: 16, convergence_gap: 0.0 };
        assert_eq!(contains_energy(&r, 2.0, 1e-6), EnergyMatch { found: true, distance: 0.0 });
        assert_eq!(contains_energy(&r, 2.5, 1e-6), EnergyMatch { found: false, distance: 0.5 });
    }

    #[test]
    fn decoupled_basis_state_has_zero_residual() {
        let p = SectorParams::new(int(2), int(1), 0.0, int(0));
        let mut s = vec![0.0; 2 * 9];
        s[0] = 1.0;
        let e = 2.0 + 1.5 + 2.0;
        assert_eq!(residual_norm(&s, &p, 8, e).unwrap(), 0.0);
        assert_eq!(residual_norm(&vec![0.0; 18], &p, 8, e).unwrap_err(), OracleError::ZeroState);
    }

    #[test]
    fn input_validation() {
        let p = SectorParams::new(int(0), int(0), 0.3, int(0));
        assert_eq!(converged_spectrum(&p, 0, 1e-9).unwrap_err(), OracleError::BadWindow);
        assert_eq!(converged_spectrum(&p, 1, 0.0).unwrap_err(), OracleError::BadTolerance);
    }
}
