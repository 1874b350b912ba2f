//! Real-root isolation by Sturm sequences and exact bisection.

use crate::poly::RingPolynomial;
use crate::rational::{rational_string, to_f64, Rational};
use num::Zero;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RootError {
    #[error("root isolation of the zero polynomial")]
    ZeroPolynomial,
    #[error("empty search range")]
    EmptyRange,
    #[error("enclosure [{0}, {1}] does not bracket a root")]
    InvalidEnclosure(String, String),
    #[error("refinement tolerance must be positive")]
    BadTolerance,
}

/// Either the single point `lower == upper` (an exact rational root) or the
/// open interval `(lower, upper)` holding exactly one distinct root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEnclosure {
    pub lower: Rational,
    pub upper: Rational,
    pub multiplicity_hint: usize,
}

impl RootEnclosure {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lower + &self.upper) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        if self.is_exact() {
            x == &self.lower
        } else {
            &self.lower < x && x < &self.upper
        }
    }

    pub fn midpoint_f64(&self) -> f64 {
        to_f64(&self.midpoint())
    }
}

impl Serialize for RootEnclosure {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RootEnclosure", 4)?;
        st.serialize_field("lower", &rational_string(&self.lower))?;
        st.serialize_field("upper", &rational_string(&self.upper))?;
        st.serialize_field("midpoint", &self.midpoint_f64())?;
        st.serialize_field("multiplicity_hint", &self.multiplicity_hint)?;
        st.end()
    }
}

struct Sturm {
    seq: Vec<RingPolynomial>,
}

impl Sturm {
    fn new(q: &RingPolynomial) -> Self {
        let mut seq = vec![q.clone(), q.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_constant() {
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            // positive rescaling keeps the sign pattern and tames coefficients
            let lc = r.leading();
            let scale = if lc > Rational::zero() { lc.recip() } else { -lc.recip() };
            seq.push(-&r.scale(&scale));
        }
        Sturm { seq }
    }

    fn variations(&self, x: &Rational) -> usize {
        let mut last = 0;
        let mut v = 0;
        for s in self.seq.iter().map(|p| p.sign_at(x)) {
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(2.into())
}

/// Disjoint enclosures for every distinct real root of `p` in `[lo, hi]`,
/// sorted ascending, with multiplicities taken from the squarefree factors.
pub fn isolate_real_roots(
    p: &RingPolynomial,
    lo: &Rational,
    hi: &Rational,
) -> Result<Vec<RootEnclosure>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if lo > hi {
        return Err(RootError::EmptyRange);
    }
    let factors = p.squarefree_decomposition();
    let q = p.squarefree_part();
    if q.is_constant() {
        return Ok(Vec::new());
    }
    let sturm = Sturm::new(&q);
    let mut points = Vec::new();
    let mut intervals = Vec::new();
    if q.sign_at(lo) == 0 {
        points.push(lo.clone());
    }
    if hi != lo && q.sign_at(hi) == 0 {
        points.push(hi.clone());
    }
    if lo < hi {
        let n = sturm.variations(lo) - sturm.variations(hi) - usize::from(q.sign_at(hi) == 0);
        let mut stack = vec![(lo.clone(), hi.clone(), n)];
        while let Some((a, b, n)) = stack.pop() {
            match n {
                0 => {}
                1 if q.sign_at(&a) != 0 && q.sign_at(&b) != 0 => intervals.push((a, b)),
                _ => {
                    let m = half(&a, &b);
                    let vm = sturm.variations(&m);
                    let at_m = q.sign_at(&m) == 0;
                    if at_m {
                        points.push(m.clone());
                    }
                    let left = sturm.variations(&a) - vm - usize::from(at_m);
                    let right = vm - sturm.variations(&b) - usize::from(q.sign_at(&b) == 0);
                    stack.push((m.clone(), b, right));
                    stack.push((a, m, left));
                }
            }
        }
    }
    let mult_of = |a: &Rational, b: &Rational| -> usize {
        for (f, i) in &factors {
            let hit = if a == b {
                f.sign_at(a) == 0
            } else {
                f.sign_at(a) * f.sign_at(b) < 0
            };
            if hit {
                return *i;
            }
        }
        1
    };
    let mut out: Vec<RootEnclosure> = points
        .into_iter()
        .map(|x| RootEnclosure { multiplicity_hint: mult_of(&x, &x), lower: x.clone(), upper: x })
        .chain(intervals.into_iter().map(|(a, b)| RootEnclosure {
            multiplicity_hint: mult_of(&a, &b),
            lower: a,
            upper: b,
        }))
        .collect();
    out.sort_by(|x, y| x.lower.cmp(&y.lower));
    Ok(out)
}

/// Bisect `e` until its width is at most `tol`.
pub fn refine_enclosure(
    p: &RingPolynomial,
    e: &RootEnclosure,
    tol: &Rational,
) -> Result<RootEnclosure, RootError> {
    if *tol <= Rational::zero() {
        return Err(RootError::BadTolerance);
    }
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let q = p.squarefree_part();
    let invalid = || RootError::InvalidEnclosure(e.lower.to_string(), e.upper.to_string());
    if e.is_exact() {
        return if q.sign_at(&e.lower) == 0 { Ok(e.clone()) } else { Err(invalid()) };
    }
    let (mut a, mut b) = (e.lower.clone(), e.upper.clone());
    let sa = q.sign_at(&a);
    if a >= b || sa * q.sign_at(&b) >= 0 {
        return Err(invalid());
    }
    while &b - &a > *tol {
        let m = half(&a, &b);
        let sm = q.sign_at(&m);
        if sm == 0 {
            return Ok(RootEnclosure { lower: m.clone(), upper: m, multiplicity_hint: e.multiplicity_hint });
        }
        if sm == sa {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(RootEnclosure { lower: a, upper: b, multiplicity_hint: e.multiplicity_hint })
}
