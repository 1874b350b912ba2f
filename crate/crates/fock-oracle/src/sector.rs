use crate::params::SectorParams;
use crate::OracleError;
use numeric_core::SymmetricMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    /// |j+n, n⟩|↑⟩
    Up(usize),
    /// |j+1+n, n⟩|↓⟩
    Down(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SectorBasis {
    pub j: usize,
    pub truncation: usize,
}

impl SectorBasis {
    pub fn dim(&self) -> usize {
        2 * (self.truncation + 1)
    }

    pub fn labels(&self) -> Vec<BasisLabel> {
        (0..=self.truncation).flat_map(|n| [BasisLabel::Up(n), BasisLabel::Down(n)]).collect()
    }

    pub fn index(label: BasisLabel) -> usize {
        match label {
            BasisLabel::Up(n) => 2 * n,
            BasisLabel::Down(n) => 2 * n + 1,
        }
    }

    /// Boson numbers and spin (true = up) of a label.
    pub fn occupation(&self, label: BasisLabel) -> (usize, usize, bool) {
        match label {
            BasisLabel::Up(n) => (self.j + n, n, true),
            BasisLabel::Down(n) => (self.j + 1 + n, n, false),
        }
    }
}

fn checked(p: &SectorParams, n: usize) -> Result<usize, OracleError> {
    let j = p.j_index().ok_or_else(|| OracleError::NonRealizable(p.j.to_string()))?;
    if n < 1 {
        return Err(OracleError::BadTruncation);
    }
    Ok(j)
}

/// Diagonal and off-diagonal of the sector matrix. In the interleaved
/// ordering only up(n)-down(n) and down(n-1)-up(n) couple, so the matrix
/// is tridiagonal.
pub fn sector_bands(p: &SectorParams, n: usize) -> Result<(Vec<f64>, Vec<f64>), OracleError> {
    let j = checked(p, n)? as f64;
    let split = 0.5 + 2.0 * p.mu_f64();
    let two_k = 2.0 * p.kappa;
    let mut diag = Vec::with_capacity(2 * (n + 1));
    let mut off = Vec::with_capacity(2 * n + 1);
    for m in 0..=n {
        let m = m as f64;
        diag.push(j + 2.0 * m + 1.0 + split);
        diag.push(j + 2.0 * m + 2.0 - split);
        // ⟨up(m)|H|down(m)⟩ from a1 σ+
        off.push(two_k * (j + 1.0 + m).sqrt());
        // ⟨up(m+1)|H|down(m)⟩ from a2† σ+
        off.push(two_k * (m + 1.0).sqrt());
    }
    off.pop();
    Ok((diag, off))
}

pub fn build_sector_hamiltonian(p: &SectorParams, n: usize) -> Result<SymmetricMatrix, OracleError> {
    let (d, e) = sector_bands(p, n)?;
    let mut m = SymmetricMatrix::zeros(d.len());
    for (i, v) in d.iter().enumerate() {
        m.set(i, i, *v);
    }
    for (i, v) in e.iter().enumerate() {
        m.set(i + 1, i, *v);
    }
    Ok(m)
}
