//! Fock-space amplitudes of a Juddian eigenstate in the sector basis
//! (up(0), down(0), up(1), down(1), ...).
//!
//! With A(n) = Σ_m ω_m C(n,m) and B(n) = -A(n) - Σ_m v_m C(n,m-1),
//! up(n) = tⁿ A(n)/√(n!(n+j)!) and down(n) = κ tⁿ B(n)/√(n!(n+j+1)!).
//! These satisfy the coefficient recurrences of the ξ-system term by term.

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|i| (i as f64).ln()).sum()
}

/// `u` in the (ω0, v1, ω1, ..., v_2k, ω_2k) ordering, evaluated at the root.
pub fn reconstruct_fock_state(u: &[f64], j: usize, t: f64, kappa: f64, n: usize) -> Vec<f64> {
    let omega: Vec<f64> = u.iter().step_by(2).copied().collect();
    let v: Vec<f64> = u.iter().skip(1).step_by(2).copied().collect();
    let jf = j as f64;
    let mut wu = (-0.5 * ln_factorial(j)).exp();
    let mut wd = kappa * (-0.5 * ln_factorial(j + 1)).exp();
    let mut out = Vec::with_capacity(2 * (n + 1));
    for m in 0..=n {
        if m > 0 {
            let mf = m as f64;
            wu *= t / (mf * (mf + jf)).sqrt();
            wd *= t / (mf * (mf + jf + 1.0)).sqrt();
        }
        // binomials C(m, i) for i up to 2k
        let mut binom = vec![0.0; omega.len()];
        let mut c = 1.0;
        for (i, b) in binom.iter_mut().enumerate() {
            if i > m {
                break;
            }
            *b = c;
            c = c * (m - i) as f64 / (i + 1) as f64;
        }
        let a: f64 = omega.iter().zip(&binom).map(|(w, b)| w * b).sum();
        let lower: f64 = v.iter().zip(&binom).map(|(x, b)| x * b).sum();
        out.push(wu * a);
        out.push(wd * (-a - lower));
    }
    out
}

/// Direct map from Bargmann series coefficients, φ1 = Σ c1m ξ^m and
/// φ2 = Σ c2m ξ^m, to sector amplitudes through truncation `n`.
pub fn bargmann_to_fock(phi1: &[f64], phi2: &[f64], j: usize, n: usize) -> Vec<f64> {
    let mut out = vec![0.0; 2 * (n + 1)];
    for m in 0..=n {
        let lm = ln_factorial(m);
        if let Some(c) = phi1.get(m) {
            out[2 * m] = c * (0.5 * (ln_factorial(j + m) + lm)).exp();
        }
        if let Some(c) = phi2.get(m) {
            out[2 * m + 1] = c * (0.5 * (ln_factorial(j + 1 + m) + lm)).exp();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_lower_component() {
        let s = bargmann_to_fock(&[], &[2.0], 1, 3);
        assert_eq!(s.iter().filter(|x| **x != 0.0).count(), 1);
        assert!((s[1] - 2.0 * 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn zero_coupling_state() {
        // t = κ = 0 leaves only up(0) = ω0/√j!
        let s = reconstruct_fock_state(&[1.0], 2, 0.0, 0.0, 4);
        assert!((s[0] - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        assert!(s[1..].iter().all(|x| *x == 0.0));
    }

    #[test]
    fn nonzero_norm() {
        let s = reconstruct_fock_state(&[1.0, -0.3, 0.2], 0, 0.5, 0.5f64.sqrt(), 40);
        assert!(s.iter().map(|x| x * x).sum::<f64>() > 0.0);
    }
}
