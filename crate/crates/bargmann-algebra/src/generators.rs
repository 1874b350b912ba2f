//! Two differential realizations of osp(2,2) on polynomial spinors.
//!
//! `Printed` keeps J+ = x, Q1 = σ-, Q2 = σ- D, Q̄1 = σ+(2k - xD), Q̄2 = xσ+,
//! J0 = xD - k + Π/2, with J- = xD² - 2kD + ΠD. The last term must carry a
//! derivative: with a bare Π the sl2 relations fail.
//!
//! `Polynomial` is the x <-> D adjoint: Q1 = σ- D, Q2 = σ-(2k - xD),
//! Q̄1 = xσ+, Q̄2 = σ+, J+ = x²D - 2kx + Πx, J- = D, J0 = xD - k + Π/2.
//! It preserves finite polynomial spaces and is the one L is built from.

use crate::operator::{anticommutator, commutator, agree_on_monomials, ScalarOperator, SpinorOperator};
use numeric_core::rational::{int, rat};
use numeric_core::{Rational, Ring};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Realization {
    Printed,
    Polynomial,
}

#[derive(Clone, Debug)]
pub struct GeneratorSet<C: Ring> {
    pub k: Rational,
    pub realization: Realization,
    pub j_plus: SpinorOperator<C>,
    pub j_minus: SpinorOperator<C>,
    pub j_zero: SpinorOperator<C>,
    pub j: SpinorOperator<C>,
    pub q1: SpinorOperator<C>,
    pub q2: SpinorOperator<C>,
    pub qb1: SpinorOperator<C>,
    pub qb2: SpinorOperator<C>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub relation: String,
    pub holds: bool,
}

fn c<C: Ring>(r: Rational) -> C {
    C::from_rational(&r)
}

fn sc<C: Ring>(r: Rational, a: usize, b: usize) -> ScalarOperator<C> {
    ScalarOperator::term(c(r), a, b)
}

impl<C: Ring> GeneratorSet<C> {
    pub fn new(k: &Rational, realization: Realization) -> Self {
        let two_k = k * int(2);
        let pi = SpinorOperator::<C>::pi();
        let half = c::<C>(rat(1, 2));
        let j_zero = SpinorOperator::scalar(sc(int(1), 1, 1).minus(&ScalarOperator::scalar(c(k.clone()))))
            .plus(&pi.scaled(&half));
        let j = SpinorOperator::scalar(ScalarOperator::scalar(c(k.clone()))).plus(&pi.scaled(&half));
        // 2k - xD
        let two_k_minus_xd = ScalarOperator::scalar(c(two_k.clone())).minus(&sc(int(1), 1, 1));
        match realization {
            Realization::Printed => GeneratorSet {
                k: k.clone(),
                realization,
                j_plus: SpinorOperator::scalar(ScalarOperator::x()),
                j_minus: SpinorOperator::scalar(sc(int(1), 1, 2).minus(&sc(two_k.clone(), 0, 1)))
                    .plus(&pi.then(&SpinorOperator::scalar(ScalarOperator::d()))),
                j_zero,
                j,
                q1: SpinorOperator::lowering(ScalarOperator::identity()),
                q2: SpinorOperator::lowering(ScalarOperator::d()),
                qb1: SpinorOperator::raising(two_k_minus_xd),
                qb2: SpinorOperator::raising(ScalarOperator::x()),
            },
            Realization::Polynomial => GeneratorSet {
                k: k.clone(),
                realization,
                j_plus: SpinorOperator::scalar(sc(int(1), 2, 1).minus(&sc(two_k, 1, 0)))
                    .plus(&pi.then(&SpinorOperator::scalar(ScalarOperator::x()))),
                j_minus: SpinorOperator::scalar(ScalarOperator::d()),
                j_zero,
                j,
                q1: SpinorOperator::lowering(ScalarOperator::d()),
                q2: SpinorOperator::lowering(two_k_minus_xd),
                qb1: SpinorOperator::raising(ScalarOperator::x()),
                qb2: SpinorOperator::raising(ScalarOperator::identity()),
            },
        }
    }

    pub fn n1(&self) -> SpinorOperator<C> {
        anticommutator(&self.q1, &self.qb1)
    }

    pub fn n2(&self) -> SpinorOperator<C> {
        anticommutator(&self.q2, &self.qb2)
    }

    /// N1, N2 written out by hand rather than via anticommutators.
    pub fn number_operators_direct(&self) -> (SpinorOperator<C>, SpinorOperator<C>) {
        let xd = SpinorOperator::scalar(sc(int(1), 1, 1));
        let two_k = SpinorOperator::scalar(ScalarOperator::scalar(c(&self.k * int(2))));
        let xd_pi = xd.plus(&SpinorOperator::pi());
        let k_xd = two_k.minus(&xd);
        match self.realization {
            Realization::Printed => (k_xd, xd_pi),
            Realization::Polynomial => (xd_pi, k_xd),
        }
    }

    /// The sl2 relations, the nilpotency and number-operator relations, each checked by applying both
    /// sides to every monomial spinor of degree ≤ `max_degree`.
    pub fn identity_suite(&self, max_degree: usize) -> Vec<IdentityCheck> {
        let mut out = Vec::new();
        let mut check = |name: &str, lhs: SpinorOperator<C>, rhs: SpinorOperator<C>| {
            out.push(IdentityCheck { relation: name.to_string(), holds: agree_on_monomials(&lhs, &rhs, max_degree) });
        };
        let zero = SpinorOperator::zero();
        let neg = |o: &SpinorOperator<C>| o.scaled(&(-C::one()));
        check("[J+,J-] = -2J0", commutator(&self.j_plus, &self.j_minus), self.j_zero.scaled(&c(int(-2))));
        check("[J0,J+] = J+", commutator(&self.j_zero, &self.j_plus), self.j_plus.clone());
        check("[J0,J-] = -J-", commutator(&self.j_zero, &self.j_minus), neg(&self.j_minus));
        let qs = [("Q1", &self.q1), ("Q2", &self.q2)];
        let qbs = [("Qb1", &self.qb1), ("Qb2", &self.qb2)];
        for set in [qs, qbs] {
            for a in 0..2 {
                for b in a..2 {
                    check(
                        &format!("{{{},{}}} = 0", set[a].0, set[b].0),
                        anticommutator(set[a].1, set[b].1),
                        zero.clone(),
                    );
                }
            }
        }
        let (n1d, n2d) = self.number_operators_direct();
        let (n1, n2) = (self.n1(), self.n2());
        check("N1 = {Q1,Qb1}", n1.clone(), n1d);
        check("N2 = {Q2,Qb2}", n2.clone(), n2d);
        check("[N1,Q1] = 0", commutator(&n1, &self.q1), zero.clone());
        check("[N1,Qb1] = 0", commutator(&n1, &self.qb1), zero.clone());
        check("[N1,Q2] = Q2", commutator(&n1, &self.q2), self.q2.clone());
        check("[N1,Qb2] = -Qb2", commutator(&n1, &self.qb2), neg(&self.qb2));
        check("[N2,Q2] = 0", commutator(&n2, &self.q2), zero.clone());
        check("[N2,Qb2] = 0", commutator(&n2, &self.qb2), zero.clone());
        check("[N2,Q1] = Q1", commutator(&n2, &self.q1), self.q1.clone());
        check("[N2,Qb1] = -Qb1", commutator(&n2, &self.qb1), neg(&self.qb1));
        out
    }
}

/// J- exactly as printed, with a bare Π instead of ΠD.
pub fn printed_j_minus_literal<C: Ring>(k: &Rational) -> SpinorOperator<C> {
    SpinorOperator::scalar(sc(int(1), 1, 2).minus(&sc(k * int(2), 0, 1))).plus(&SpinorOperator::pi())
}
