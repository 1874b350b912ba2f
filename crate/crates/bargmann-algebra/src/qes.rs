//! The QES operator L, the parameter relations, and matrices of operators on
//! the finite spinor spaces P_{n_up, n_low}.

use crate::generators::{GeneratorSet, Realization};
use crate::operator::{PolynomialSpinor, SpinorOperator};
use crate::AlgebraError;
use numeric_core::rational::{as_natural, int, rat, rational_string};
use numeric_core::{Rational, Ring, RingPolynomial};
use serde::Serialize;

pub fn check_k(k: &Rational) -> Result<usize, AlgebraError> {
    as_natural(&(k * int(2))).map(|v| v as usize).ok_or_else(|| AlgebraError::InvalidK(k.to_string()))
}

/// L = 2μN1 + (1+2μ)N2 + t(Q1 + Q̄2) + Q2 + Q̄1 with t = κ² symbolic.
pub fn build_l(k: &Rational, mu: &Rational, realization: Realization) -> Result<SpinorOperator<RingPolynomial>, AlgebraError> {
    build_l_weighted(k, &(mu * int(2)), &(int(1) + mu * int(2)), realization)
}

/// Same as [`build_l`] with arbitrary weights on N1 and N2.
pub fn build_l_weighted(
    k: &Rational,
    w1: &Rational,
    w2: &Rational,
    realization: Realization,
) -> Result<SpinorOperator<RingPolynomial>, AlgebraError> {
    check_k(k)?;
    let g = GeneratorSet::<RingPolynomial>::new(k, realization);
    let c = |r: &Rational| RingPolynomial::constant(r.clone());
    Ok(g.n1()
        .scaled(&c(w1))
        .plus(&g.n2().scaled(&c(w2)))
        .plus(&g.q1.plus(&g.qb2).scaled(&RingPolynomial::t()))
        .plus(&g.q2)
        .plus(&g.qb1))
}

/// λ = (1 + j + 2μ + 2k(1 + 4μ))/2.
pub fn lambda(k: &Rational, j: &Rational, mu: &Rational) -> Rational {
    (int(1) + j + mu * int(2) + k * int(2) * (int(1) + mu * int(4))) / int(2)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParameterMap {
    pub lambda: Rational,
    /// ε = k - j/2 - 1/2 - t
    pub epsilon: RingPolynomial,
    /// E = 2ε + j + 3/2
    pub energy: RingPolynomial,
}

pub fn parameter_maps(k: &Rational, j: &Rational, mu: &Rational) -> ParameterMap {
    let eps = RingPolynomial::from_coeffs(vec![k - j / int(2) - rat(1, 2), int(-1)]);
    let energy = &eps.scale(&int(2)) + &RingPolynomial::constant(j + rat(3, 2));
    ParameterMap { lambda: lambda(k, j, mu), epsilon: eps, energy }
}

impl Serialize for ParameterMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ParameterMap", 3)?;
        st.serialize_field("lambda", &rational_string(&self.lambda))?;
        st.serialize_field("epsilon", &self.epsilon.to_string())?;
        st.serialize_field("energy", &self.energy.to_string())?;
        st.end()
    }
}

/// Applying `op` to each basis spinor of P_{n_up, n_low} stays inside it.
pub fn preserves_space<C: Ring>(op: &SpinorOperator<C>, n_up: i64, n_low: i64) -> bool {
    let mut basis = Vec::new();
    for d in 0..=n_up {
        basis.push(PolynomialSpinor::<C>::monomial(0, d as usize));
    }
    for d in 0..=n_low {
        basis.push(PolynomialSpinor::<C>::monomial(1, d as usize));
    }
    basis.iter().all(|s| op.apply(s).in_space(n_up, n_low))
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(int(1), |a, b| a * int(b))
}

/// Basis of P_{2k, 2k-1} ordered (w0, v1, w1, v2, ..., v_2k, w_2k) with
/// w_n = (x^n/n!, 0) and v_n = (0, x^(n-1)/(n-1)!).
pub fn divided_power_basis<C: Ring>(two_k: usize) -> Vec<PolynomialSpinor<C>> {
    (0..=2 * two_k)
        .map(|r| {
            let (slot, deg) = if r % 2 == 0 { (0, r / 2) } else { (1, (r + 1) / 2 - 1) };
            PolynomialSpinor::monomial(slot, deg).scaled(&C::from_rational(&factorial(deg).recip()))
        })
        .collect()
}

fn coordinates<C: Ring>(s: &PolynomialSpinor<C>, two_k: usize) -> Option<Vec<C>> {
    if !s.in_space(two_k as i64, two_k as i64 - 1) {
        return None;
    }
    Some(
        (0..=2 * two_k)
            .map(|r| {
                let (slot, deg) = if r % 2 == 0 { (0, r / 2) } else { (1, (r + 1) / 2 - 1) };
                s.slot(slot).coeff(deg) * C::from_rational(&factorial(deg))
            })
            .collect(),
    )
}

/// Column matrix of `op` on P_{2k,2k-1} in the divided-power basis:
/// `m[s][r]` is the s-th coordinate of op(e_r). `None` if op leaves the space.
pub fn divided_power_matrix<C: Ring>(op: &SpinorOperator<C>, two_k: usize) -> Option<Vec<Vec<C>>> {
    let cols: Option<Vec<Vec<C>>> =
        divided_power_basis::<C>(two_k).iter().map(|e| coordinates(&op.apply(e), two_k)).collect();
    let cols = cols?;
    let d = cols.len();
    Some((0..d).map(|s| (0..d).map(|r| cols[r][s].clone()).collect()).collect())
}

/// Spinor with divided-power coordinates `u` (same ordering as the basis).
pub fn spinor_from_coordinates<C: Ring>(u: &[C]) -> PolynomialSpinor<C> {
    let two_k = (u.len() - 1) / 2;
    let basis = divided_power_basis::<C>(two_k);
    let mut acc = PolynomialSpinor::new(crate::XPoly::zero(), crate::XPoly::zero());
    for (c, e) in u.iter().zip(&basis) {
        let s = e.scaled(c);
        acc = PolynomialSpinor::new(acc.phi1.plus(&s.phi1), acc.phi2.plus(&s.phi2));
    }
    acc
}
