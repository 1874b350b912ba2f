use crate::args::{CommonArgs, Ordering};
use crate::error::{CliError, EXIT_ALGEBRA};
use bargmann_algebra::{
    build_l, divided_power_matrix, lambda, preserves_space, GeneratorSet, Realization, SpinorOperator,
};
use fock_oracle::{converged_spectrum, OracleTarget, SectorParams};
use numeric_core::rational::{int, parse_rational, rat, rational_string, to_f64};
use numeric_core::{Rational, RingPolynomial};
use qes_solver::{
    compare_with_printed, eta_rho_params, juddian_points, random_draws, JuddianOptions, RecurrenceSystem,
};
use serde_json::{json, Value};
use std::time::Instant;
use systems_catalog::{preset, EtaRhoOrdering, PhysicalCase, RawParams};

/// JSON payload plus CSV rows (floats only) for one grid cell.
pub struct CellOutput {
    pub json: Value,
    pub csv_header: Vec<&'static str>,
    pub csv_rows: Vec<Vec<String>>,
    pub notes: Vec<String>,
    /// Nonzero exit code reported alongside a complete record.
    pub status: i32,
}

impl CellOutput {
    fn ok(json: Value, csv_header: Vec<&'static str>, csv_rows: Vec<Vec<String>>) -> Self {
        CellOutput { json, csv_header, csv_rows, notes: Vec::new(), status: 0 }
    }
}

fn f(x: f64) -> String {
    format!("{x}")
}

fn rf(r: &Rational) -> String {
    f(to_f64(r))
}

fn kappa_value(a: &CommonArgs) -> Result<Option<f64>, CliError> {
    match &a.kappa {
        None => Ok(None),
        Some(s) => {
            let r = parse_rational(s).map_err(CliError::input)?;
            Ok(Some(to_f64(&r)))
        }
    }
}

fn ordering(a: &CommonArgs) -> Option<EtaRhoOrdering> {
    a.ordering.map(|o| match o {
        Ordering::SubstituteOnly => EtaRhoOrdering::SubstituteOnly,
        Ordering::SubstituteThenReplace => EtaRhoOrdering::SubstituteThenReplace,
    })
}

fn eta_rho(a: &CommonArgs) -> Result<Option<(Rational, Rational)>, CliError> {
    match (&a.eta, &a.rho) {
        (Some(e), Some(r)) => Ok(Some((e.clone(), r.clone()))),
        (None, None) => Ok(None),
        _ => Err(CliError::input("--eta and --rho must be given together")),
    }
}

/// Resolved (k, j, μ) of the Hamiltonian, with the preset record if any.
fn resolve(a: &CommonArgs, kappa: f64) -> Result<(SectorParams, Option<Value>, Vec<String>), CliError> {
    let mut notes = Vec::new();
    if let Some(name) = &a.case {
        let case = PhysicalCase::parse(name)?;
        let raw = RawParams {
            k: a.k.clone(),
            j: a.j.clone(),
            mu: a.mu.clone(),
            g: a.g.clone(),
            eta_rho: eta_rho(a)?,
            ordering: ordering(a),
            kappa,
            label: a.label.clone(),
        };
        let rec = preset(case, &raw)?;
        let p = rec.params.clone();
        return Ok((p, Some(serde_json::to_value(&rec).expect("serializable")), notes));
    }
    if a.g.is_some() {
        return Err(CliError::input("--G needs --case dimer"));
    }
    let k = a.k.clone().unwrap_or_else(|| int(0));
    let (j, mu) = if let Some((eta, rho)) = eta_rho(a)? {
        if a.j.is_some() || a.mu.is_some() {
            return Err(CliError::input("give either --eta/--rho or --j/--mu"));
        }
        let (j, mu_p) = eta_rho_params(&eta, &rho);
        notes.push(format!("j = -(eta+rho+2)/2 = {j}; mu = (eta-rho)/4 = {mu_p} in the displayed-matrix sign, so the Hamiltonian mu is {}", -&mu_p));
        (j, -mu_p)
    } else {
        let j = a.j.clone().ok_or_else(|| CliError::input("--j is required (or --case / --eta --rho)"))?;
        (j, a.mu.clone().unwrap_or_else(|| int(0)))
    };
    Ok((SectorParams::new(j, mu, kappa, k), None, notes))
}

pub fn juddian(a: &CommonArgs) -> Result<CellOutput, CliError> {
    let (p, preset_rec, mut notes) = resolve(a, 0.0)?;
    let mut opts = JuddianOptions { oracle: !a.no_oracle, ..Default::default() };
    if let Some(m) = &a.kappa_max {
        opts.kappa_max = m.clone();
    }
    if let Some(t) = &a.tol {
        opts.tol = t.clone();
    }
    if let Some(w) = a.window {
        opts.window = w.max(1);
    }
    let report = juddian_points(&p.k, &p.j, &p.mu, &opts)?;
    notes.extend(report.notes.iter().cloned());
    let mut rows = Vec::new();
    for pt in &report.points {
        let o = pt.validation.oracle.as_ref();
        let rec = pt.validation.reconstruction.as_ref();
        rows.push(vec![
            rf(&p.k),
            rf(&p.j),
            rf(&p.mu),
            f(pt.kappa_sq.midpoint_f64()),
            pt.kappa.map(|k| f(0.5 * (k[0] + k[1]))).unwrap_or_default(),
            f(pt.energy.midpoint),
            pt.multiplicity.to_string(),
            pt.validation.exact_eigencheck.to_string(),
            o.map(|o| o.target.clone()).unwrap_or_else(|| "none".into()),
            o.map(|o| f(o.distance)).unwrap_or_default(),
            rec.map(|r| f(r.residual)).unwrap_or_default(),
        ]);
    }
    let all_exact = report.points.iter().all(|p| p.validation.exact_eigencheck);
    let all_oracle = report.points.iter().all(|p| p.validation.oracle.as_ref().map_or(true, |o| o.matched));
    let json = json!({
        "preset": preset_rec,
        "params": p,
        "report": report,
        "all_exact_eigenchecks_pass": all_exact,
        "all_oracle_checks_pass": all_oracle,
    });
    let header = vec![
        "k", "j", "mu", "kappa_sq", "kappa", "energy", "multiplicity", "exact_eigencheck", "oracle_target",
        "oracle_distance", "residual",
    ];
    let mut out = CellOutput::ok(json, header, rows);
    out.notes = notes;
    Ok(out)
}

pub fn spectrum(a: &CommonArgs) -> Result<CellOutput, CliError> {
    let kappa = kappa_value(a)?.unwrap_or(0.0);
    let (p, preset_rec, mut notes) = resolve(a, kappa)?;
    let window = a.window.unwrap_or(8);
    let tol = a.tol.as_ref().map(to_f64).unwrap_or(1e-10);
    let (label, target) = match OracleTarget::for_params(&p) {
        OracleTarget::Direct(q) => ("direct", q),
        OracleTarget::Mirrored(q) => {
            notes.push(format!("sector j={} is evaluated through its mirror j={}, mu={}", p.j, q.j, q.mu));
            ("mirrored", q)
        }
        OracleTarget::Unavailable => {
            return Err(CliError::input(format!("j = {} has no realizable sector (directly or mirrored)", p.j)))
        }
    };
    let report = converged_spectrum(&target, window, tol)?;
    let rows = report
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(i, e)| vec![rf(&target.j), rf(&target.mu), f(kappa), i.to_string(), f(*e)])
        .collect();
    let json = json!({ "preset": preset_rec, "params": p, "oracle_target": label, "sector": target, "spectrum": report });
    let mut out = CellOutput::ok(json, vec!["j", "mu", "kappa", "index", "eigenvalue"], rows);
    out.notes = notes;
    Ok(out)
}

pub const ALGEBRA_CAP: usize = 8;

pub fn algebra_check(a: &CommonArgs) -> Result<CellOutput, CliError> {
    let start = Instant::now();
    let ks: Vec<usize> = match &a.k {
        Some(k) => {
            let two_k = numeric_core::rational::as_natural(&(k * int(2)))
                .ok_or_else(|| CliError::input(format!("k = {k}: 2k must be a nonnegative integer")))?
                as usize;
            if two_k > ALGEBRA_CAP {
                return Err(CliError::input(format!("2k = {two_k} exceeds the cap {ALGEBRA_CAP}")));
            }
            vec![two_k]
        }
        None => (0..=4).collect(),
    };
    let draws = random_draws(a.seed.unwrap_or(17), a.draws.unwrap_or(10));
    let mut rows = Vec::new();
    let mut per_k = Vec::new();
    let mut failed = 0;
    for two_k in ks {
        let k = rat(two_k as i64, 2);
        let mut relations = Vec::new();
        for real in [Realization::Printed, Realization::Polynomial] {
            let g = GeneratorSet::<Rational>::new(&k, real);
            for c in g.identity_suite(two_k + 3) {
                failed += usize::from(!c.holds);
                rows.push(vec![f(to_f64(&k)), format!("{real:?}").to_lowercase(), c.relation.clone(), c.holds.to_string()]);
                relations.push(json!({ "realization": real, "relation": c.relation, "holds": c.holds }));
            }
        }
        let mut bridge = Vec::new();
        for (j, mu) in &draws {
            let l = build_l(&k, mu, Realization::Polynomial).map_err(|e| CliError::input(e.to_string()))?;
            let shifted = l.minus(&SpinorOperator::identity().scaled(&RingPolynomial::constant(lambda(&k, j, mu))));
            let m = divided_power_matrix(&shifted, two_k);
            let r = RecurrenceSystem::new(&k, j, mu)?;
            let holds = m.as_ref() == Some(&r.matrix);
            failed += usize::from(!holds);
            bridge.push(json!({ "j": rational_string(j), "mu": rational_string(mu), "holds": holds }));
        }
        let holds = bridge.iter().all(|b| b["holds"] == json!(true));
        rows.push(vec![f(to_f64(&k)), "polynomial".into(), "bridge identity".into(), holds.to_string()]);
        let l = build_l(&k, &rat(1, 3), Realization::Polynomial).map_err(|e| CliError::input(e.to_string()))?;
        let n = two_k as i64;
        let closed = preserves_space(&l, n, n - 1);
        let wider = preserves_space(&l, n + 1, n);
        failed += usize::from(!closed);
        rows.push(vec![f(to_f64(&k)), "polynomial".into(), "L preserves P(2k,2k-1)".into(), closed.to_string()]);
        rows.push(vec![f(to_f64(&k)), "polynomial".into(), "L preserves P(2k+1,2k)".into(), wider.to_string()]);
        per_k.push(json!({
            "k": rational_string(&k),
            "relations": relations,
            "bridge_identity": bridge,
            "closure": {
                "upper_degree_2k_lower_2k_minus_1": closed,
                "upper_degree_2k_plus_1_lower_2k": wider,
            },
        }));
    }
    let json = json!({
        "checks": per_k,
        "failures": failed,
        "runtime_ms": start.elapsed().as_secs_f64() * 1e3,
    });
    let mut out = CellOutput::ok(json, vec!["k", "realization", "relation", "holds"], rows);
    out.notes.push(
        "L preserves the space with upper degree <= 2k and lower degree <= 2k-1; the space one degree larger is reported for information".into(),
    );
    if failed > 0 {
        out.status = EXIT_ALGEBRA;
    }
    Ok(out)
}

pub fn compare_printed(a: &CommonArgs) -> Result<CellOutput, CliError> {
    let k = a.k.clone().ok_or_else(|| CliError::input("--k is required (0, 1/2 or 1)"))?;
    if k != int(0) && k != rat(1, 2) && k != int(1) {
        return Err(CliError::input(format!("compare-printed supports k in {{0, 1/2, 1}}, got {k}")));
    }
    let draws = match eta_rho(a)? {
        Some(p) => vec![p],
        None => random_draws(a.seed.unwrap_or(1), a.draws.unwrap_or(5).max(1)),
    };
    let report = compare_with_printed(&k, &draws)?;
    let rows = report
        .draws
        .iter()
        .map(|d| {
            vec![
                rf(&k),
                rf(&d.eta),
                rf(&d.rho),
                format!("{:?}", report.verdict).to_uppercase(),
                d.ratio.as_ref().map(rf).unwrap_or_default(),
                d.roots.len().to_string(),
                d.roots_certified.to_string(),
            ]
        })
        .collect();
    let json = serde_json::to_value(&report).expect("serializable");
    let mut out = CellOutput::ok(json, vec!["k", "eta", "rho", "verdict", "ratio", "roots", "roots_certified"], rows);
    out.notes = report.notes.clone();
    Ok(out)
}

pub fn presets() -> CellOutput {
    let list: Vec<Value> = PhysicalCase::ALL
        .iter()
        .map(|c| {
            json!({
                "name": c.name(),
                "constraint": c.constraint(),
                "labels": c.labels(),
                "mapping": "j -> -j-1; 2mu = G for the dimer; mu quoted in the displayed-matrix sign",
            })
        })
        .collect();
    let rows = PhysicalCase::ALL.iter().map(|c| vec![c.name().to_string(), c.constraint().to_string()]).collect();
    CellOutput::ok(json!({ "presets": list }), vec!["name", "constraint"], rows)
}
