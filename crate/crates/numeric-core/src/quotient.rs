//! Arithmetic in ℚ[t]/(f) for squarefree f.

use crate::poly::RingPolynomial;
use num::One;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuotientError {
    #[error("modulus must have degree at least 1")]
    ConstantModulus,
    #[error("operands have different moduli")]
    ModulusMismatch,
    /// `factor` is the nontrivial gcd; the modulus splits along it.
    #[error("element not invertible: modulus has factor {factor}")]
    NotInvertible { factor: RingPolynomial },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientElement {
    representative: RingPolynomial,
    modulus: RingPolynomial,
}

impl QuotientElement {
    pub fn new(p: &RingPolynomial, modulus: &RingPolynomial) -> Result<Self, QuotientError> {
        if modulus.is_constant() {
            return Err(QuotientError::ConstantModulus);
        }
        let m = modulus.monic();
        Ok(QuotientElement { representative: p.rem(&m), modulus: m })
    }

    pub fn representative(&self) -> &RingPolynomial {
        &self.representative
    }

    pub fn modulus(&self) -> &RingPolynomial {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.representative.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.representative.is_one()
    }

    fn check(&self, o: &Self) -> Result<(), QuotientError> {
        if self.modulus == o.modulus {
            Ok(())
        } else {
            Err(QuotientError::ModulusMismatch)
        }
    }

    fn wrap(&self, p: RingPolynomial) -> Self {
        QuotientElement { representative: p.rem(&self.modulus), modulus: self.modulus.clone() }
    }

    pub fn add(&self, o: &Self) -> Result<Self, QuotientError> {
        self.check(o)?;
        Ok(self.wrap(&self.representative + &o.representative))
    }

    pub fn sub(&self, o: &Self) -> Result<Self, QuotientError> {
        self.check(o)?;
        Ok(self.wrap(&self.representative - &o.representative))
    }

    pub fn mul(&self, o: &Self) -> Result<Self, QuotientError> {
        self.check(o)?;
        Ok(self.wrap(&self.representative * &o.representative))
    }

    pub fn inv(&self) -> Result<Self, QuotientError> {
        let (g, s, _) = RingPolynomial::ext_gcd(&self.representative, &self.modulus);
        if g.is_zero() || !g.is_constant() {
            let factor = if g.is_zero() { self.modulus.clone() } else { g };
            return Err(QuotientError::NotInvertible { factor });
        }
        Ok(self.wrap(s))
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod ({})", self.representative, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;
    use crate::rational::rat;

    fn p(c: &[i64]) -> RingPolynomial {
        RingPolynomial::from_ints(c)
    }

    #[test]
    fn t_squared_mod_t2_minus_2() {
        let m = p(&[-2, 0, 1]);
        let t = QuotientElement::new(&RingPolynomial::t(), &m).unwrap();
        assert_eq!(t.mul(&t).unwrap().representative(), &p(&[2]));
        let inv = t.inv().unwrap();
        assert_eq!(inv.representative(), &RingPolynomial::from_coeffs(vec![rat(0, 1), rat(1, 2)]));
        assert!(inv.mul(&t).unwrap().is_one());
    }

    #[test]
    fn zero_is_additive_identity() {
        let m = p(&[-2, 0, 1]);
        let x = QuotientElement::new(&p(&[3, 5]), &m).unwrap();
        let z = QuotientElement::new(&RingPolynomial::zero(), &m).unwrap();
        assert_eq!(z.add(&x).unwrap(), x);
    }

    #[test]
    fn zero_divisor_reports_factor() {
        let m = &p(&[-1, 1]) * &p(&[-2, 1]);
        let x = QuotientElement::new(&p(&[-1, 1]), &m).unwrap();
        match x.inv() {
            Err(QuotientError::NotInvertible { factor }) => assert_eq!(factor, p(&[-1, 1])),
            other => panic!("expected split, got {other:?}"),
        }
    }

    #[test]
    fn moduli_must_agree() {
        let a = QuotientElement::new(&p(&[1]), &p(&[0, 1])).unwrap();
        let b = QuotientElement::new(&p(&[1]), &p(&[1, 1])).unwrap();
        assert_eq!(a.add(&b), Err(QuotientError::ModulusMismatch));
        assert_eq!(QuotientElement::new(&p(&[1]), &p(&[3])), Err(QuotientError::ConstantModulus));
    }
}
