use crate::SolverError;
use numeric_core::rational::{as_natural, int, rational_string};
use numeric_core::{banded_determinant, PolyMatrix, Rational, RingPolynomial};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BasisLabel {
    Omega(usize),
    V(usize),
}

impl std::fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasisLabel::Omega(n) => write!(f, "w{n}"),
            BasisLabel::V(n) => write!(f, "v{n}"),
        }
    }
}

/// Tridiagonal system in the unknowns (ω0, v1, ω1, ..., v_2k, ω_2k).
///
/// Row 2n:   n v_n + (k - n - μ - (1+j)/2) ω_n + t v_{n+1} = 0
/// Row 2n+1: (2k - n) ω_n + (k - n + μ - (1+j)/2) v_{n+1} + t ω_{n+1} = 0
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceSystem {
    pub k: Rational,
    pub j: Rational,
    pub mu: Rational,
    pub order: usize,
    pub matrix: PolyMatrix,
}

impl RecurrenceSystem {
    pub fn new(k: &Rational, j: &Rational, mu: &Rational) -> Result<Self, SolverError> {
        let two_k = as_natural(&(k * int(2))).ok_or_else(|| SolverError::InvalidK(k.to_string()))? as usize;
        let d = 2 * two_k + 1;
        let zero = RingPolynomial::constant(int(0));
        let c = |r: Rational| RingPolynomial::constant(r);
        let base = k - (int(1) + j) / int(2);
        let mut m = vec![vec![zero; d]; d];
        for r in 0..d {
            let n = int((r / 2) as i64);
            if r % 2 == 0 {
                m[r][r] = c(&base - &n - mu);
                if r > 0 {
                    m[r][r - 1] = c(n);
                }
            } else {
                m[r][r] = c(&base - &n + mu);
                m[r][r - 1] = c(k * int(2) - n);
            }
            if r + 1 < d {
                m[r][r + 1] = RingPolynomial::t();
            }
        }
        Ok(RecurrenceSystem { k: k.clone(), j: j.clone(), mu: mu.clone(), order: d, matrix: m })
    }

    /// The matrix as displayed in the literature, whose μ is the negative of
    /// the Hamiltonian's.
    pub fn printed(k: &Rational, j: &Rational, mu_printed: &Rational) -> Result<Self, SolverError> {
        Self::new(k, j, &-mu_printed)
    }

    pub fn two_k(&self) -> usize {
        (self.order - 1) / 2
    }

    pub fn labels(&self) -> Vec<BasisLabel> {
        (0..self.order)
            .map(|r| if r % 2 == 0 { BasisLabel::Omega(r / 2) } else { BasisLabel::V((r + 1) / 2) })
            .collect()
    }

    pub fn determinant(&self) -> RingPolynomial {
        banded_determinant(&self.matrix, 1).expect("square tridiagonal")
    }
}

impl Serialize for RecurrenceSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RecurrenceSystem", 6)?;
        st.serialize_field("k", &rational_string(&self.k))?;
        st.serialize_field("j", &rational_string(&self.j))?;
        st.serialize_field("mu", &rational_string(&self.mu))?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("labels", &self.labels().iter().map(|l| l.to_string()).collect::<Vec<_>>())?;
        let rows: Vec<Vec<String>> = self.matrix.iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect();
        st.serialize_field("matrix", &rows)?;
        st.end()
    }
}
