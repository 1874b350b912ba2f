//! The first-order system in ξ = z1 z2 and its image under ξ = κ²(1+x),
//! φ1 = ϕ1 + ϕ2, φ2 = -ϕ2/κ.

use crate::generators::Realization;
use crate::operator::{ScalarOperator, SpinorOperator};
use crate::qes::{build_l_weighted, lambda};
use crate::AlgebraError;
use numeric_core::rational::int;
use numeric_core::{Laurent, Rational, Ring, RingPolynomial};
use serde::Serialize;

fn sc<C: Ring>(c: C, a: usize, b: usize) -> ScalarOperator<C> {
    ScalarOperator::term(c, a, b)
}

/// The system acting on (φ1, φ2) with numeric κ and ε:
/// row 0: [ξD - (ε-μ)]φ1 + κ[ξD + ξ + j + 1]φ2
/// row 1: κ[D + 1]φ1 + [ξD - (ε+μ)]φ2
pub fn xi_system(j: &Rational, mu: &Rational, kappa: &Rational, eps: &Rational) -> SpinorOperator<Rational> {
    let one = int(1);
    let e00 = sc(one.clone(), 1, 1).minus(&ScalarOperator::scalar(eps - mu));
    let e01 = sc(one.clone(), 1, 1)
        .plus(&ScalarOperator::x())
        .plus(&ScalarOperator::scalar(j + int(1)))
        .scaled(kappa);
    let e10 = ScalarOperator::d().plus(&ScalarOperator::identity()).scaled(kappa);
    let e11 = sc(one, 1, 1).minus(&ScalarOperator::scalar(eps + mu));
    SpinorOperator::new([[e00, e01], [e10, e11]])
}

/// Same system on (φ1, φ2/κ), so only t = κ² appears; ε is a polynomial in t.
pub fn xi_system_scaled(j: &Rational, mu: &Rational, eps: &RingPolynomial) -> SpinorOperator<RingPolynomial> {
    let one = RingPolynomial::constant(int(1));
    let cst = |r: &Rational| RingPolynomial::constant(r.clone());
    let e00 = sc(one.clone(), 1, 1).minus(&ScalarOperator::scalar(eps - &cst(mu)));
    let e01 = sc(one.clone(), 1, 1)
        .plus(&ScalarOperator::x())
        .plus(&ScalarOperator::scalar(cst(&(j + int(1)))))
        .scaled(&RingPolynomial::t());
    let e10 = ScalarOperator::d().plus(&ScalarOperator::identity());
    let e11 = sc(one, 1, 1).minus(&ScalarOperator::scalar(eps + &cst(mu)));
    SpinorOperator::new([[e00, e01], [e10, e11]])
}

fn substitute<C: Ring>(op: &ScalarOperator<C>, a: &C, b: &C, inv_b: &C) -> ScalarOperator<C> {
    // c(ξ) D_ξ^m  ->  c(a + b x) b^{-m} D_x^m
    let mut scale = C::one();
    let mut terms = Vec::new();
    for c in op.terms() {
        terms.push(c.substitute_affine(a, b).scaled(&scale));
        scale = scale * inv_b.clone();
    }
    ScalarOperator::from_terms(terms)
}

fn change_variables<C: Ring>(sys: &SpinorOperator<C>, a: &C, b: &C, inv_b: &C, columns: SpinorOperator<C>) -> SpinorOperator<C> {
    let e = |r: usize, c: usize| substitute(&sys.entries[r][c], a, b, inv_b);
    SpinorOperator::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]).then(&columns)
}

/// Image of the scaled system: rows are the transformed equations, columns
/// act on (ϕ1, ϕ2).
pub fn to_x_system(sys: &SpinorOperator<RingPolynomial>) -> SpinorOperator<Laurent> {
    let lsys = sys.map(|p| Laurent::from(p.clone()));
    let t = Laurent::from(RingPolynomial::t());
    // (φ1, φ2/κ) = (ϕ1 + ϕ2, -ϕ2/t)
    let columns = SpinorOperator::new([
        [ScalarOperator::identity(), ScalarOperator::identity()],
        [ScalarOperator::zero(), ScalarOperator::scalar(-Laurent::t_power(-1))],
    ]);
    change_variables(&lsys, &t, &t, &Laurent::t_power(-1), columns)
}

/// Literal transform at a numeric coupling.
pub fn to_x_system_numeric(
    j: &Rational,
    mu: &Rational,
    kappa: &Rational,
    eps: &Rational,
) -> Result<SpinorOperator<Rational>, AlgebraError> {
    if *kappa == int(0) {
        return Err(AlgebraError::SingularSubstitution);
    }
    let t = kappa * kappa;
    let columns = SpinorOperator::new([
        [ScalarOperator::identity(), ScalarOperator::identity()],
        [ScalarOperator::zero(), ScalarOperator::scalar(-kappa.recip())],
    ]);
    Ok(change_variables(&xi_system(j, mu, kappa, eps), &t, &t, &t.recip(), columns))
}

/// The printed x-system, with the unbalanced bracket of the first equation
/// closed after (ε + κ² - μ):
/// row 0: [-xD + (ε + t - μ)]ϕ1 + [-xD + 2ε + 2t + 1 + j + t x]ϕ2
/// row 1: [D + t]ϕ1 + [-xD + (ε + t + μ)]ϕ2
pub fn printed_x_system(j: &Rational, mu: &Rational, eps: &RingPolynomial) -> SpinorOperator<Laurent> {
    let l = |p: RingPolynomial| Laurent::from(p);
    let t = RingPolynomial::t();
    let cst = |r: &Rational| RingPolynomial::constant(r.clone());
    let mxd = sc(l(RingPolynomial::from_ints(&[-1])), 1, 1);
    let eps_t = eps + &t;
    let e00 = mxd.plus(&ScalarOperator::scalar(l(&eps_t - &cst(mu))));
    let e01 = mxd
        .plus(&ScalarOperator::scalar(l(&eps_t.scale(&int(2)) + &cst(&(j + int(1))))))
        .plus(&sc(l(t.clone()), 1, 0));
    let e10 = ScalarOperator::d().plus(&ScalarOperator::scalar(l(t)));
    let e11 = mxd.plus(&ScalarOperator::scalar(l(&eps_t + &cst(mu))));
    SpinorOperator::new([[e00, e01], [e10, e11]])
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OdeComparison {
    pub derived_first: String,
    pub derived_second: String,
    pub printed_first: String,
    pub printed_second: String,
    /// t · (transformed second equation) equals the printed second equation.
    pub second_matches: bool,
    /// The transformed first equation equals the printed first equation.
    pub first_matches: bool,
    /// Printed first = t·(transformed second) - (transformed first).
    pub first_is_row_combination: bool,
}

fn row<C: Ring>(s: &SpinorOperator<C>, r: usize) -> SpinorOperator<C> {
    let mut out = SpinorOperator::zero();
    out.entries[0] = s.entries[r].clone();
    out
}

fn row_text<C: Ring>(s: &SpinorOperator<C>) -> String {
    format!("({})*phi1 + ({})*phi2", s.entries[0][0], s.entries[0][1])
}

/// Derive the x-system from the ξ-system and compare it with the printed one.
pub fn compare_x_system(j: &Rational, mu: &Rational, eps: &RingPolynomial) -> OdeComparison {
    let derived = to_x_system(&xi_system_scaled(j, mu, eps));
    let printed = printed_x_system(j, mu, eps);
    let t = Laurent::from(RingPolynomial::t());
    let r1 = row(&derived, 0);
    let r2 = row(&derived, 1).scaled(&t);
    let p1 = row(&printed, 0);
    let p2 = row(&printed, 1);
    OdeComparison {
        derived_first: row_text(&r1),
        derived_second: row_text(&r2),
        printed_first: row_text(&p1),
        printed_second: row_text(&p2),
        second_matches: r2 == p2,
        first_matches: r1 == p1,
        first_is_row_combination: r2.minus(&r1) == p1,
    }
}

/// On the baseline ε = k - (1+j)/2 - t the printed x-system is exactly
/// L - λ for the printed realization with the N1/N2 weights exchanged.
pub fn printed_x_system_is_l_minus_lambda(k: &Rational, j: &Rational, mu: &Rational) -> Result<bool, AlgebraError> {
    let eps = RingPolynomial::from_coeffs(vec![k - (int(1) + j) / int(2), int(-1)]);
    let printed = printed_x_system(j, mu, &eps);
    let w1 = int(1) + mu * int(2);
    let w2 = mu * int(2);
    let l = build_l_weighted(k, &w1, &w2, Realization::Printed)?.map(|p| Laurent::from(p.clone()));
    let lam = Laurent::from(RingPolynomial::constant(lambda(k, j, mu)));
    Ok(l.minus(&SpinorOperator::identity().scaled(&lam)) == printed)
}

/// Evaluate a Laurent-coefficient operator at a nonzero rational t.
pub fn evaluate_at(op: &SpinorOperator<Laurent>, t: &Rational) -> SpinorOperator<Rational> {
    op.map(|l| {
        let v = l.body().eval(t);
        let s = l.shift();
        let mut p = int(1);
        for _ in 0..s.unsigned_abs() {
            p *= t;
        }
        if s >= 0 {
            v * p
        } else {
            v / p
        }
    })
}

/// x = -1 is ξ = 0.
pub fn xi_of_x(t: &Rational, x: &Rational) -> Rational {
    t * (int(1) + x)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::PolynomialSpinor;
    use crate::xpoly::XPoly;
    use numeric_core::rational::rat;

    #[test]
    fn unit_spinor_gives_minus_eps_minus_mu_and_kappa() {
        let (j, mu, kappa, eps) = (int(1), rat(1, 4), rat(2, 3), rat(5, 7));
        let s = xi_system(&j, &mu, &kappa, &eps);
        let out = s.apply(&PolynomialSpinor::upper(XPoly::one()));
        assert_eq!(out, PolynomialSpinor::new(XPoly::constant(-(&eps - &mu)), XPoly::constant(kappa)));
    }

    #[test]
    fn decoupled_euler_operator() {
        // κ = 0 and ε - μ = 3: φ1 = ξ^3 solves the first equation
        let s = xi_system(&int(0), &rat(1, 2), &int(0), &rat(7, 2));
        let out = s.apply(&PolynomialSpinor::upper(XPoly::monomial(int(1), 3)));
        assert!(out.is_zero());
        let out = s.apply(&PolynomialSpinor::upper(XPoly::monomial(int(1), 2)));
        assert!(!out.is_zero());
    }

    #[test]
    fn numeric_transform_agrees_with_symbolic() {
        let (j, mu, kappa, eps) = (int(2), rat(-1, 3), rat(3, 2), rat(1, 5));
        let t = &kappa * &kappa;
        let sym = to_x_system(&xi_system_scaled(&j, &mu, &RingPolynomial::constant(eps.clone())));
        let sym_t = evaluate_at(&sym, &t);
        // the scaled system has φ2/κ in place of φ2, so row 1 differs by κ
        let num = to_x_system_numeric(&j, &mu, &kappa, &eps).unwrap();
        let mut want = num.clone();
        want.entries[1] = [num.entries[1][0].scaled(&kappa.recip()), num.entries[1][1].scaled(&kappa.recip())];
        assert_eq!(sym_t, want);
        assert_eq!(to_x_system_numeric(&j, &mu, &int(0), &eps), Err(AlgebraError::SingularSubstitution));
    }

    #[test]
    fn endpoint() {
        assert_eq!(xi_of_x(&rat(3, 4), &int(-1)), int(0));
    }
}
