use crate::params::SectorParams;
use crate::sector::{BasisLabel, SectorBasis};

/// All states |n1, n2⟩|s⟩ with n1 + n2 ≤ N, and H in that basis.
pub struct FullSpace {
    pub states: Vec<(usize, usize, bool)>,
    pub h: Vec<Vec<f64>>,
}

impl FullSpace {
    pub fn build(p: &SectorParams, n_max: usize) -> Self {
        let mut states = Vec::new();
        for n1 in 0..=n_max {
            for n2 in 0..=n_max - n1 {
                states.push((n1, n2, true));
                states.push((n1, n2, false));
            }
        }
        let index = |s: (usize, usize, bool)| states.iter().position(|&x| x == s);
        let dim = states.len();
        let mut h = vec![vec![0.0; dim]; dim];
        let split = 0.5 + 2.0 * p.mu_f64();
        let c = 2.0 * p.kappa;
        for (col, &(n1, n2, up)) in states.iter().enumerate() {
            h[col][col] = (n1 + n2) as f64 + 1.0 + if up { split } else { -split };
            let mut emit = |target: (usize, usize, bool), amp: f64| {
                if let Some(row) = index(target) {
                    h[row][col] += c * amp;
                }
            };
            if up {
                // a1† σ- and a2 σ-
                emit((n1 + 1, n2, false), ((n1 + 1) as f64).sqrt());
                if n2 > 0 {
                    emit((n1, n2 - 1, false), (n2 as f64).sqrt());
                }
            } else {
                // a1 σ+ and a2† σ+
                if n1 > 0 {
                    emit((n1 - 1, n2, true), (n1 as f64).sqrt());
                }
                emit((n1, n2 + 1, true), ((n2 + 1) as f64).sqrt());
            }
        }
        FullSpace { states, h }
    }

    /// Eigenvalue of J = n1 - n2 + σ0/2 on each basis state.
    pub fn j_values(&self) -> Vec<f64> {
        self.states
            .iter()
            .map(|&(n1, n2, up)| n1 as f64 - n2 as f64 + if up { 0.5 } else { -0.5 })
            .collect()
    }

    /// Largest |(JH - HJ)_ab|.
    pub fn commutator_norm(&self) -> f64 {
        let jv = self.j_values();
        let dim = self.states.len();
        let mut worst: f64 = 0.0;
        for a in 0..dim {
            for b in 0..dim {
                let jh: f64 = jv[a] * self.h[a][b];
                let hj: f64 = self.h[a][b] * jv[b];
                worst = worst.max((jh - hj).abs());
            }
        }
        worst
    }

    /// Block of H on the J = j + 1/2 states, in sector-basis order, together
    /// with the labels present at this truncation.
    pub fn sector_block(&self, j: usize) -> (Vec<BasisLabel>, Vec<Vec<f64>>) {
        let basis = SectorBasis { j, truncation: self.states.len() };
        let mut labels = Vec::new();
        let mut idx = Vec::new();
        for label in basis.labels() {
            let occ = basis.occupation(label);
            match self.states.iter().position(|&s| s == occ) {
                Some(i) => {
                    labels.push(label);
                    idx.push(i);
                }
                None => break,
            }
        }
        let block = idx.iter().map(|&a| idx.iter().map(|&b| self.h[a][b]).collect()).collect();
        (labels, block)
    }
}

pub fn check_j_commutes(p: &SectorParams, n_max: usize) -> bool {
    let f = FullSpace::build(p, n_max);
    let sym = (0..f.states.len()).all(|a| (0..f.states.len()).all(|b| f.h[a][b] == f.h[b][a]));
    sym && f.commutator_norm() <= 1e-12
}
