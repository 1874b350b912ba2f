//! Polynomial-coefficient differential operators and their 2×2 spinor
//! matrices. Slot 0 is the upper spinor component, slot 1 the lower.

use crate::xpoly::XPoly;
use numeric_core::rational::int;
use numeric_core::Ring;
use std::fmt;

/// Σ_m c_m(x) (d/dx)^m, stored with `terms[m] = c_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarOperator<C: Ring> {
    terms: Vec<XPoly<C>>,
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

impl<C: Ring> ScalarOperator<C> {
    pub fn from_terms(mut terms: Vec<XPoly<C>>) -> Self {
        while terms.last().is_some_and(|t| t.is_zero()) {
            terms.pop();
        }
        ScalarOperator { terms }
    }

    pub fn zero() -> Self {
        ScalarOperator { terms: Vec::new() }
    }

    /// Multiplication by a polynomial.
    pub fn mult(p: XPoly<C>) -> Self {
        Self::from_terms(vec![p])
    }

    pub fn scalar(c: C) -> Self {
        Self::mult(XPoly::constant(c))
    }

    pub fn identity() -> Self {
        Self::scalar(C::one())
    }

    /// c x^a (d/dx)^b
    pub fn term(c: C, a: usize, b: usize) -> Self {
        let mut terms = vec![XPoly::zero(); b + 1];
        terms[b] = XPoly::monomial(c, a);
        Self::from_terms(terms)
    }

    pub fn d() -> Self {
        Self::term(C::one(), 0, 1)
    }

    pub fn x() -> Self {
        Self::term(C::one(), 1, 0)
    }

    pub fn terms(&self) -> &[XPoly<C>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, o: &Self) -> Self {
        let n = self.terms.len().max(o.terms.len());
        let z = XPoly::zero();
        Self::from_terms(
            (0..n)
                .map(|m| self.terms.get(m).unwrap_or(&z).plus(o.terms.get(m).unwrap_or(&z)))
                .collect(),
        )
    }

    pub fn minus(&self, o: &Self) -> Self {
        self.plus(&o.scaled(&(-C::one())))
    }

    pub fn scaled(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|t| t.scaled(c)).collect())
    }

    /// `self ∘ o`, via D^m b = Σ_i C(m,i) b^(i) D^(m-i).
    pub fn then(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![XPoly::zero(); self.terms.len() + o.terms.len() - 1];
        for (m, a) in self.terms.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (n, b) in o.terms.iter().enumerate() {
                let mut bd = b.clone();
                for i in 0..=m {
                    if bd.is_zero() {
                        break;
                    }
                    let c = C::from_rational(&int(binomial(m, i)));
                    let slot = m - i + n;
                    out[slot] = out[slot].plus(&a.times(&bd).scaled(&c));
                    bd = bd.derivative();
                }
            }
        }
        Self::from_terms(out)
    }

    pub fn apply(&self, f: &XPoly<C>) -> XPoly<C> {
        let mut acc = XPoly::zero();
        let mut df = f.clone();
        for c in &self.terms {
            if df.is_zero() {
                break;
            }
            acc = acc.plus(&c.times(&df));
            df = df.derivative();
        }
        acc
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D + Copy) -> ScalarOperator<D> {
        ScalarOperator::from_terms(self.terms.iter().map(|t| t.map(f)).collect())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialSpinor<C: Ring> {
    pub phi1: XPoly<C>,
    pub phi2: XPoly<C>,
}

impl<C: Ring> PolynomialSpinor<C> {
    pub fn new(phi1: XPoly<C>, phi2: XPoly<C>) -> Self {
        PolynomialSpinor { phi1, phi2 }
    }

    pub fn upper(p: XPoly<C>) -> Self {
        Self::new(p, XPoly::zero())
    }

    pub fn lower(p: XPoly<C>) -> Self {
        Self::new(XPoly::zero(), p)
    }

    /// Basis spinor x^n in the given slot (0 upper, 1 lower).
    pub fn monomial(slot: usize, n: usize) -> Self {
        let m = XPoly::monomial(C::one(), n);
        if slot == 0 {
            Self::upper(m)
        } else {
            Self::lower(m)
        }
    }

    pub fn slot(&self, s: usize) -> &XPoly<C> {
        if s == 0 {
            &self.phi1
        } else {
            &self.phi2
        }
    }

    pub fn is_zero(&self) -> bool {
        self.phi1.is_zero() && self.phi2.is_zero()
    }

    pub fn minus(&self, o: &Self) -> Self {
        Self::new(self.phi1.minus(&o.phi1), self.phi2.minus(&o.phi2))
    }

    pub fn scaled(&self, c: &C) -> Self {
        Self::new(self.phi1.scaled(c), self.phi2.scaled(c))
    }

    /// Belongs to P_{n_up, n_low}: deg φ1 ≤ n_up and deg φ2 ≤ n_low
    /// (a negative bound means the slot must vanish).
    pub fn in_space(&self, n_up: i64, n_low: i64) -> bool {
        let fits = |p: &XPoly<C>, n: i64| p.degree().map_or(true, |d| (d as i64) <= n);
        fits(&self.phi1, n_up) && fits(&self.phi2, n_low)
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D + Copy) -> PolynomialSpinor<D> {
        PolynomialSpinor::new(self.phi1.map(f), self.phi2.map(f))
    }
}

/// 2×2 matrix of scalar operators; `entries[r][c]` maps slot c into slot r.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorOperator<C: Ring> {
    pub entries: [[ScalarOperator<C>; 2]; 2],
}

impl<C: Ring> SpinorOperator<C> {
    pub fn new(entries: [[ScalarOperator<C>; 2]; 2]) -> Self {
        SpinorOperator { entries }
    }

    pub fn zero() -> Self {
        Self::new([[ScalarOperator::zero(), ScalarOperator::zero()], [ScalarOperator::zero(), ScalarOperator::zero()]])
    }

    pub fn diagonal(upper: ScalarOperator<C>, lower: ScalarOperator<C>) -> Self {
        Self::new([[upper, ScalarOperator::zero()], [ScalarOperator::zero(), lower]])
    }

    /// The same scalar operator on both slots.
    pub fn scalar(op: ScalarOperator<C>) -> Self {
        Self::diagonal(op.clone(), op)
    }

    pub fn identity() -> Self {
        Self::scalar(ScalarOperator::identity())
    }

    /// σ+ · op: lower slot to upper slot.
    pub fn raising(op: ScalarOperator<C>) -> Self {
        let mut s = Self::zero();
        s.entries[0][1] = op;
        s
    }

    /// σ- · op: upper slot to lower slot.
    pub fn lowering(op: ScalarOperator<C>) -> Self {
        let mut s = Self::zero();
        s.entries[1][0] = op;
        s
    }

    /// Π = σ-σ+, the projector onto the lower slot.
    pub fn pi() -> Self {
        Self::diagonal(ScalarOperator::zero(), ScalarOperator::identity())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(ScalarOperator::is_zero)
    }

    pub fn plus(&self, o: &Self) -> Self {
        let e = |r: usize, c: usize| self.entries[r][c].plus(&o.entries[r][c]);
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn minus(&self, o: &Self) -> Self {
        let e = |r: usize, c: usize| self.entries[r][c].minus(&o.entries[r][c]);
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn scaled(&self, c: &C) -> Self {
        let e = |r: usize, cc: usize| self.entries[r][cc].scaled(c);
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    /// `self ∘ o`.
    pub fn then(&self, o: &Self) -> Self {
        let e = |r: usize, c: usize| {
            self.entries[r][0].then(&o.entries[0][c]).plus(&self.entries[r][1].then(&o.entries[1][c]))
        };
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn apply(&self, s: &PolynomialSpinor<C>) -> PolynomialSpinor<C> {
        let row = |r: usize| self.entries[r][0].apply(&s.phi1).plus(&self.entries[r][1].apply(&s.phi2));
        PolynomialSpinor::new(row(0), row(1))
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D + Copy) -> SpinorOperator<D> {
        let e = |r: usize, c: usize| self.entries[r][c].map(f);
        SpinorOperator::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    /// Largest derivative order over all entries.
    pub fn order(&self) -> usize {
        self.entries.iter().flatten().map(|e| e.terms().len().saturating_sub(1)).max().unwrap_or(0)
    }
}

pub fn commutator<C: Ring>(a: &SpinorOperator<C>, b: &SpinorOperator<C>) -> SpinorOperator<C> {
    a.then(b).minus(&b.then(a))
}

pub fn anticommutator<C: Ring>(a: &SpinorOperator<C>, b: &SpinorOperator<C>) -> SpinorOperator<C> {
    a.then(b).plus(&b.then(a))
}

/// `a` and `b` agree on every monomial spinor of degree ≤ `max_degree`.
pub fn agree_on_monomials<C: Ring>(a: &SpinorOperator<C>, b: &SpinorOperator<C>, max_degree: usize) -> bool {
    (0..2).all(|slot| {
        (0..=max_degree).all(|n| {
            let s = PolynomialSpinor::monomial(slot, n);
            a.apply(&s) == b.apply(&s)
        })
    })
}

impl<C: Ring> fmt::Display for ScalarOperator<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match m {
                0 => write!(f, "[{c}]")?,
                1 => write!(f, "[{c}]*D")?,
                _ => write!(f, "[{c}]*D^{m}")?,
            }
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Display for SpinorOperator<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "[[{}, {}], [{}, {}]]", e[0][0], e[0][1], e[1][0], e[1][1])
    }
}
