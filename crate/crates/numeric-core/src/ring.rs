//! Commutative coefficient rings used by the symbolic operator code.

use crate::poly::RingPolynomial;
use crate::rational::Rational;
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;
}

impl Ring for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Ring for RingPolynomial {
    fn from_rational(r: &Rational) -> Self {
        RingPolynomial::constant(r.clone())
    }
}

/// `p(t) · t^shift` with `p(0) ≠ 0` unless `p = 0`. Only powers of `t` may
/// appear in denominators, which is all the ξ = t(1+x) substitution needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    body: RingPolynomial,
    shift: i64,
}

impl Laurent {
    pub fn new(body: RingPolynomial, shift: i64) -> Self {
        if body.is_zero() {
            return Laurent { body, shift: 0 };
        }
        let v = body.t_adic_valuation();
        Laurent { body: body.shift_down(v), shift: shift + v as i64 }
    }

    pub fn t_power(e: i64) -> Self {
        Laurent::new(RingPolynomial::one(), e)
    }

    pub fn body(&self) -> &RingPolynomial {
        &self.body
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// The polynomial this element equals, if it has no negative powers.
    pub fn to_polynomial(&self) -> Option<RingPolynomial> {
        if self.shift < 0 {
            None
        } else {
            Some(self.body.shift_up(self.shift as usize))
        }
    }
}

impl From<RingPolynomial> for Laurent {
    fn from(p: RingPolynomial) -> Self {
        Laurent::new(p, 0)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shift {
            0 => write!(f, "{}", self.body),
            s if s > 0 => write!(f, "({})*t^{}", self.body, s),
            s => write!(f, "({})/t^{}", self.body, -s),
        }
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, o: Laurent) -> Laurent {
        if self.body.is_zero() {
            return o;
        }
        if o.body.is_zero() {
            return self;
        }
        let s = self.shift.min(o.shift);
        let a = self.body.shift_up((self.shift - s) as usize);
        let b = o.body.shift_up((o.shift - s) as usize);
        Laurent::new(&a + &b, s)
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, o: Laurent) -> Laurent {
        self + (-o)
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { body: -self.body, shift: self.shift }
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, o: Laurent) -> Laurent {
        Laurent::new(&self.body * &o.body, self.shift + o.shift)
    }
}

impl Zero for Laurent {
    fn zero() -> Self {
        Laurent { body: RingPolynomial::zero(), shift: 0 }
    }
    fn is_zero(&self) -> bool {
        self.body.is_zero()
    }
}

impl One for Laurent {
    fn one() -> Self {
        Laurent { body: RingPolynomial::one(), shift: 0 }
    }
}

impl Ring for Laurent {
    fn from_rational(r: &Rational) -> Self {
        Laurent::new(RingPolynomial::constant(r.clone()), 0)
    }
}
