//! Exact determinants of square matrices over ℚ[t].

use crate::poly::RingPolynomial;
use num::{One, Zero};
use thiserror::Error;

pub type PolyMatrix = Vec<Vec<RingPolynomial>>;

#[derive(Debug, Error, PartialEq)]
pub enum DeterminantError {
    #[error("matrix is not square (row {row} has {len} entries, expected {n})")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("nonzero entry ({row}, {col}) outside bandwidth {bandwidth}")]
    OutsideBand { row: usize, col: usize, bandwidth: usize },
}

fn check_square(m: &PolyMatrix) -> Result<usize, DeterminantError> {
    let n = m.len();
    for (row, r) in m.iter().enumerate() {
        if r.len() != n {
            return Err(DeterminantError::NotSquare { row, len: r.len(), n });
        }
    }
    Ok(n)
}

/// Determinant of a matrix whose nonzero entries satisfy |i - j| ≤ bandwidth.
/// Orders up to 4 use cofactor expansion, larger ones Bareiss elimination.
pub fn banded_determinant(m: &PolyMatrix, bandwidth: usize) -> Result<RingPolynomial, DeterminantError> {
    let n = check_square(m)?;
    for (row, r) in m.iter().enumerate() {
        for (col, e) in r.iter().enumerate() {
            if row.abs_diff(col) > bandwidth && !e.is_zero() {
                return Err(DeterminantError::OutsideBand { row, col, bandwidth });
            }
        }
    }
    if n <= 4 {
        return Ok(laplace(m));
    }
    Ok(bareiss(m.clone()))
}

/// Plain Laplace expansion along the first row; exponential, for small orders.
pub fn cofactor_determinant(m: &PolyMatrix) -> Result<RingPolynomial, DeterminantError> {
    check_square(m)?;
    Ok(laplace(m))
}

fn laplace(m: &PolyMatrix) -> RingPolynomial {
    let n = m.len();
    match n {
        0 => RingPolynomial::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = RingPolynomial::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: PolyMatrix = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, e)| e.clone()).collect())
                    .collect();
                let term = &m[0][c] * &laplace(&minor);
                acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn bareiss(mut a: PolyMatrix) -> RingPolynomial {
    let n = a.len();
    let mut negate = false;
    let mut prev = RingPolynomial::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return RingPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = RingPolynomial::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RingPolynomial {
        RingPolynomial::from_ints(c)
    }

    #[test]
    fn base_cases() {
        let c = p(&[2, 3]);
        assert_eq!(banded_determinant(&vec![vec![c.clone()]], 0).unwrap(), c);
        let (a, b) = (p(&[1, 1]), p(&[0, 0, 2]));
        let m = vec![vec![a.clone(), RingPolynomial::t()], vec![RingPolynomial::one(), b.clone()]];
        assert_eq!(banded_determinant(&m, 1).unwrap(), &(&a * &b) - &RingPolynomial::t());
    }

    #[test]
    fn bareiss_matches_continuant_with_zero_pivot() {
        // tridiagonal 6x6 with a zero leading entry forces a row swap
        let n = 6;
        let mut m = vec![vec![RingPolynomial::zero(); n]; n];
        for i in 0..n {
            m[i][i] = p(&[i as i64, 0, 1]);
            if i + 1 < n {
                m[i][i + 1] = RingPolynomial::t();
                m[i + 1][i] = p(&[i as i64 + 1]);
            }
        }
        m[0][0] = RingPolynomial::zero();
        let mut d0 = RingPolynomial::one();
        let mut d1 = m[0][0].clone();
        for i in 1..n {
            let d2 = &(&m[i][i] * &d1) - &(&(&m[i][i - 1] * &m[i - 1][i]) * &d0);
            d0 = d1;
            d1 = d2;
        }
        assert_eq!(banded_determinant(&m, 1).unwrap(), d1);
        assert_eq!(cofactor_determinant(&m).unwrap(), d1);
    }

    #[test]
    fn rejects_malformed_input() {
        let m = vec![vec![p(&[1]), p(&[1])]];
        assert!(matches!(banded_determinant(&m, 1), Err(DeterminantError::NotSquare { .. })));
        let mut m = vec![vec![RingPolynomial::zero(); 3]; 3];
        m[0][2] = p(&[1]);
        assert!(matches!(banded_determinant(&m, 1), Err(DeterminantError::OutsideBand { .. })));
    }
}
