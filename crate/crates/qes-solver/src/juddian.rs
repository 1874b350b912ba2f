//! Determinant roots on the energy baselines, certified exactly and checked
//! against the Fock-space oracle.

use crate::nullvec::{exact_eigencheck, null_vector, CoefficientVector};
use crate::reconstruct::reconstruct_fock_state;
use crate::recurrence::RecurrenceSystem;
use crate::ser::ser_rat;
use crate::SolverError;
use fock_oracle::{contains_energy, converged_spectrum, residual_norm, OracleTarget, SectorParams};
use numeric_core::rational::{int, parse_rational, rat, simplest_between, to_f64};
use numeric_core::{isolate_real_roots, refine_enclosure, Rational, RingPolynomial, RootEnclosure};
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct JuddianOptions {
    pub kappa_max: Rational,
    /// Width of the final t enclosure.
    pub tol: Rational,
    pub oracle: bool,
    /// Largest accepted distance between E and an oracle eigenvalue.
    pub oracle_tol: f64,
    /// Truncation-doubling tolerance passed to the oracle.
    pub convergence_tol: f64,
    pub min_truncation: usize,
    /// Initial oracle window; doubled until it reaches past E.
    pub window: usize,
}

impl Default for JuddianOptions {
    fn default() -> Self {
        JuddianOptions {
            kappa_max: int(10),
            tol: parse_rational("1/1000000000000000000000000").expect("literal"),
            oracle: true,
            oracle_tol: 1e-6,
            convergence_tol: 1e-10,
            min_truncation: 40,
            window: 8,
        }
    }
}

/// E(t) = 2k + 1/2 - 2t on the enclosure.
#[derive(Clone, Debug, Serialize)]
pub struct EnergyValue {
    pub expression: RingPolynomial,
    #[serde(serialize_with = "ser_rat")]
    pub lower: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub upper: Rational,
    pub midpoint: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleCheck {
    /// "direct" or "mirrored"
    pub target: String,
    pub params: SectorParams,
    pub distance: f64,
    pub matched: bool,
    pub truncation: usize,
    pub window: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReconstructionCheck {
    pub truncation: usize,
    pub residual: f64,
    pub norm: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Validation {
    pub exact_eigencheck: bool,
    /// The factor changes sign across the enclosure or vanishes at an exact root.
    pub sign_change: bool,
    pub oracle: Option<OracleCheck>,
    pub reconstruction: Option<ReconstructionCheck>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct JuddianPoint {
    pub kappa_sq: RootEnclosure,
    /// [lower, upper] for positive t.
    pub kappa: Option<[f64; 2]>,
    pub multiplicity: usize,
    /// Squarefree factor of the determinant with this root; the modulus of
    /// the coefficients.
    pub factor: RingPolynomial,
    pub energy: EnergyValue,
    pub coefficients: CoefficientVector,
    pub validation: Validation,
}

/// For k = 0 the determinant is a constant and the whole baseline is
/// either exact (constant zero) or not.
#[derive(Clone, Debug, Serialize)]
pub struct BaselineCondition {
    #[serde(serialize_with = "ser_rat")]
    pub determinant: Rational,
    pub holds: bool,
    pub energy: RingPolynomial,
}

#[derive(Clone, Debug, Serialize)]
pub struct JuddianReport {
    pub system: RecurrenceSystem,
    #[serde(serialize_with = "ser_rat")]
    pub mu_printed: Rational,
    pub determinant: RingPolynomial,
    /// Power of t divided out before root isolation.
    pub t_valuation: usize,
    #[serde(serialize_with = "ser_rat")]
    pub kappa_max: Rational,
    pub baseline_condition: Option<BaselineCondition>,
    pub points: Vec<JuddianPoint>,
    pub notes: Vec<String>,
}

fn energy_poly(k: &Rational) -> RingPolynomial {
    RingPolynomial::from_coeffs(vec![k * int(2) + rat(1, 2), int(-2)])
}

/// All real roots of `det` (t = 0 excluded) in [lo, hi], refined to `tol`,
/// with exact null vectors and the exact eigen-check. No oracle.
pub(crate) fn certified_points(
    sys: &RecurrenceSystem,
    det: &RingPolynomial,
    lo: &Rational,
    hi: &Rational,
    tol: &Rational,
) -> Result<Vec<JuddianPoint>, SolverError> {
    let stripped = det.shift_down(det.t_adic_valuation());
    let e_poly = energy_poly(&sys.k);
    let mut out = Vec::new();
    if stripped.is_constant() {
        return Ok(out);
    }
    for (f, mult) in stripped.squarefree_decomposition() {
        if f.is_constant() {
            continue;
        }
        for enc in isolate_real_roots(&f, lo, hi)? {
            let mut enc = refine_enclosure(&f, &enc, tol)?;
            if !enc.is_exact() {
                // rational roots with moderate denominators become exact
                let r = simplest_between(&enc.lower, &enc.upper);
                if f.sign_at(&r) == 0 {
                    enc = RootEnclosure { lower: r.clone(), upper: r, multiplicity_hint: enc.multiplicity_hint };
                }
            }
            let (modulus, sign_change) = if enc.is_exact() {
                (RingPolynomial::from_coeffs(vec![-enc.lower.clone(), int(1)]), f.sign_at(&enc.lower) == 0)
            } else {
                (f.clone(), f.sign_at(&enc.lower) * f.sign_at(&enc.upper) < 0)
            };
            let coefficients = null_vector(sys, &modulus)?;
            let exact = exact_eigencheck(&coefficients, &sys.k, &sys.j, &sys.mu);
            let kappa = (enc.lower >= int(0)).then(|| [to_f64(&enc.lower).sqrt(), to_f64(&enc.upper).sqrt()]);
            let energy = EnergyValue {
                expression: e_poly.clone(),
                lower: e_poly.eval(&enc.upper),
                upper: e_poly.eval(&enc.lower),
                midpoint: to_f64(&e_poly.eval(&enc.midpoint())),
            };
            out.push(JuddianPoint {
                kappa_sq: RootEnclosure { multiplicity_hint: mult, ..enc },
                kappa,
                multiplicity: mult,
                factor: modulus,
                energy,
                coefficients,
                validation: Validation {
                    exact_eigencheck: exact,
                    sign_change,
                    oracle: None,
                    reconstruction: None,
                    notes: Vec::new(),
                },
            });
        }
    }
    out.sort_by(|a, b| a.kappa_sq.lower.cmp(&b.kappa_sq.lower));
    Ok(out)
}

fn oracle_check(point: &mut JuddianPoint, sys: &RecurrenceSystem, opts: &JuddianOptions) -> Result<(), SolverError> {
    let t = point.kappa_sq.midpoint();
    let kappa = to_f64(&t).sqrt();
    let e = point.energy.midpoint;
    let params = SectorParams::new(sys.j.clone(), sys.mu.clone(), kappa, sys.k.clone());
    let target = OracleTarget::for_params(&params);
    let (label, p) = match &target {
        OracleTarget::Direct(p) => ("direct", p),
        OracleTarget::Mirrored(p) => ("mirrored", p),
        OracleTarget::Unavailable => {
            point.validation.notes.push("no realizable sector; exact check only".into());
            return Ok(());
        }
    };
    let mut window = opts.window.max(1);
    let report = loop {
        let r = converged_spectrum(p, window, opts.convergence_tol)?;
        let top = r.eigenvalues.last().copied().unwrap_or(f64::NEG_INFINITY);
        if top > e + 1.0 || window >= 1024 {
            break r;
        }
        window *= 2;
    };
    let m = contains_energy(&report, e, opts.oracle_tol);
    point.validation.oracle = Some(OracleCheck {
        target: label.into(),
        params: p.clone(),
        distance: m.distance,
        matched: m.found,
        truncation: report.truncation_used,
        window,
    });
    if let OracleTarget::Direct(p) = &target {
        let j = p.j_index().expect("direct target is realizable");
        let u: Vec<f64> = point.coefficients.evaluate(&t).iter().map(to_f64).collect();
        let tf = to_f64(&t);
        let mut n = opts.min_truncation.max(1);
        let state = loop {
            let s = reconstruct_fock_state(&u, j, tf, kappa, n);
            let norm2: f64 = s.iter().map(|x| x * x).sum();
            let tail: f64 = s[s.len() - 8.min(s.len())..].iter().map(|x| x * x).sum();
            if tail <= 1e-34 * norm2 || n >= fock_oracle::N_MAX {
                break s;
            }
            n *= 2;
        };
        let norm = state.iter().map(|x| x * x).sum::<f64>().sqrt();
        let residual = residual_norm(&state, p, n, e)?;
        point.validation.reconstruction = Some(ReconstructionCheck { truncation: n, residual, norm });
    }
    Ok(())
}

/// Juddian points with t = κ² in (0, κ_max²].
pub fn juddian_points(
    k: &Rational,
    j: &Rational,
    mu: &Rational,
    opts: &JuddianOptions,
) -> Result<JuddianReport, SolverError> {
    if opts.kappa_max <= int(0) {
        return Err(SolverError::InvalidKappaMax);
    }
    if opts.tol <= int(0) || !(opts.oracle_tol > 0.0) || !(opts.convergence_tol > 0.0) {
        return Err(SolverError::InvalidTolerance);
    }
    let sys = RecurrenceSystem::new(k, j, mu)?;
    let det = sys.determinant();
    let mut notes = Vec::new();
    let mut baseline_condition = None;
    let mut points = Vec::new();
    if sys.order == 1 {
        let c = det.coeff(0);
        notes.push(if c == int(0) {
            "no kappa roots; the baseline condition holds, so E(t) is exact for every kappa".to_string()
        } else {
            "no kappa roots; baseline condition reported".to_string()
        });
        baseline_condition = Some(BaselineCondition { holds: c == int(0), determinant: c, energy: energy_poly(k) });
    } else if det.is_zero() {
        return Err(SolverError::DegenerateDeterminant { k: k.to_string(), j: j.to_string(), mu: mu.to_string() });
    } else {
        let v = det.t_adic_valuation();
        if v > 0 {
            notes.push(format!("the determinant has the factor t^{v}; kappa = 0 is not a Juddian point"));
        }
        let hi = &opts.kappa_max * &opts.kappa_max;
        points = certified_points(&sys, &det, &int(0), &hi, &opts.tol)?;
        if points.is_empty() {
            notes.push("no determinant roots in (0, kappa_max^2]".into());
        }
        if opts.oracle {
            for p in points.iter_mut() {
                oracle_check(p, &sys, opts)?;
            }
        }
    }
    Ok(JuddianReport {
        mu_printed: -mu,
        t_valuation: det.t_adic_valuation(),
        kappa_max: opts.kappa_max.clone(),
        determinant: det,
        system: sys,
        baseline_condition,
        points,
        notes,
    })
}
