//! Univariate polynomials over ℚ in the formal variable `t`.

use crate::rational::{int, parse_rational, rational_string, to_f64, Rational};
use num::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RingPolynomial {
    coeffs: Vec<Rational>,
}

impl RingPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RingPolynomial { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&v| int(v)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The ring variable itself.
    pub fn t() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut v = vec![Rational::zero(); degree + 1];
        v[degree] = c;
        Self::from_coeffs(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    /// Sign of p(x): -1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Multiply by t^n.
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![Rational::zero(); n];
        v.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(v)
    }

    /// Drop the n lowest coefficients (divide by t^n, discarding the rest).
    pub fn shift_down(&self, n: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().skip(n).cloned().collect())
    }

    /// Largest v with t^v dividing p (0 for the zero polynomial).
    pub fn t_adic_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Quotient when `d` divides `self`, else `None`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Extended gcd: (g, s, u) with s·a + u·b = g, g monic.
    pub fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut u0, mut u1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let u2 = &u0 - &(&q * &u1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            u0 = std::mem::replace(&mut u1, u2);
        }
        if r0.is_zero() {
            return (r0, s0, u0);
        }
        let inv = r0.leading().recip();
        (r0.scale(&inv), s0.scale(&inv), u0.scale(&inv))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Yun's algorithm: monic squarefree factors `(f_i, i)` with
    /// `p = lc · Π f_i^i`; constant factors are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let mut c = df.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).expect("gcd divides");
            c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Monic polynomial with the same distinct roots.
    pub fn squarefree_part(&self) -> Self {
        self.squarefree_decomposition()
            .into_iter()
            .fold(Self::one(), |acc, (f, _)| &acc * &f)
    }

    /// Render with a chosen variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mag = if a.is_integer() || i == 0 { a.to_string() } else { format!("({a})") };
            match i {
                0 => s.push_str(&mag),
                _ => {
                    if !a.is_one() {
                        s.push_str(&mag);
                        s.push('*');
                    }
                    s.push_str(var);
                    if i > 1 {
                        s.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        s
    }
}

impl fmt::Display for RingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Serialize for RingPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(rational_string).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        let c = v
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(RingPolynomial::from_coeffs(c))
    }
}

impl Zero for RingPolynomial {
    fn zero() -> Self {
        RingPolynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for RingPolynomial {
    fn one() -> Self {
        Self::from_ints(&[1])
    }
}

impl<'a> Add<&'a RingPolynomial> for &'a RingPolynomial {
    type Output = RingPolynomial;
    fn add(self, o: &RingPolynomial) -> RingPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        RingPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a RingPolynomial> for &'a RingPolynomial {
    type Output = RingPolynomial;
    fn sub(self, o: &RingPolynomial) -> RingPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        RingPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a RingPolynomial> for &'a RingPolynomial {
    type Output = RingPolynomial;
    fn mul(self, o: &RingPolynomial) -> RingPolynomial {
        if self.is_zero() || o.is_zero() {
            return RingPolynomial::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        RingPolynomial::from_coeffs(v)
    }
}

impl Neg for &RingPolynomial {
    type Output = RingPolynomial;
    fn neg(self) -> RingPolynomial {
        RingPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RingPolynomial {
            type Output = RingPolynomial;
            fn $m(self, o: RingPolynomial) -> RingPolynomial {
                (&self).$m(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for RingPolynomial {
    type Output = RingPolynomial;
    fn neg(self) -> RingPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(c: &[i64]) -> RingPolynomial {
        RingPolynomial::from_ints(c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn additive_identity_and_scalar_cancellation() {
        let q = p(&[3, 0, -2, 5]);
        assert_eq!(&q + &RingPolynomial::zero(), q);
        let two_t = p(&[0, 2]);
        assert_eq!(&two_t * &RingPolynomial::constant(rat(1, 2)), RingPolynomial::t());
    }

    #[test]
    fn division_and_gcd() {
        let a = &p(&[-1, 0, 1]) * &p(&[2, 1]);
        let (q, r) = a.div_rem(&p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, &p(&[1, 1]) * &p(&[2, 1]));
        assert_eq!(a.gcd(&p(&[1, 2, 1])), p(&[1, 1]));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[-2, 0, 1]);
        let b = p(&[0, 1]);
        let (g, s, u) = RingPolynomial::ext_gcd(&a, &b);
        assert_eq!(g, RingPolynomial::one());
        assert_eq!(&(&s * &a) + &(&u * &b), g);
    }

    #[test]
    fn yun_reports_multiplicities() {
        let f = &p(&[-3, 1]).pow(2) * &p(&[1, 1]);
        let d = f.squarefree_decomposition();
        assert_eq!(d, vec![(p(&[1, 1]), 1), (p(&[-3, 1]), 2)]);
        assert_eq!(f.squarefree_part(), &p(&[-3, 1]) * &p(&[1, 1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "t^2 - 1");
        assert_eq!(RingPolynomial::constant(rat(-1, 8)).to_string(), "-1/8");
        assert_eq!(p(&[0, -2]).display_in("x"), "-2*x");
    }
}
