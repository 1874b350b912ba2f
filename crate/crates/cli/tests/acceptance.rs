//! One line per acceptance criterion. Runs with `harness = false`, so the
//! lines are always printed by `cargo test`. A criterion listed in
//! `KNOWN_FAIL` prints FAIL with its analysis and must fail for exactly the
//! documented reason; anything else that fails makes the target fail.

use bargmann_algebra::{build_l, divided_power_matrix, lambda, preserves_space, GeneratorSet, Realization, SpinorOperator};
use fock_oracle::{converged_spectrum, sector_bands, SectorParams};
use numeric_core::rational::{int, rat};
use numeric_core::{tridiagonal_eigenvalues, Rational, RingPolynomial};
use qes_solver::{compare_with_printed, exact_eigencheck, juddian_points, random_draws, JuddianOptions, RecurrenceSystem, Verdict};
use std::time::{Duration, Instant};
use systems_catalog::{arbitrate_displaced_oscillator, Confirmation};

const ORACLE_TOL: f64 = 1e-6;
const RESIDUAL_TOL: f64 = 1e-8;
const MIN_TRUNCATION: usize = 40;
const SANITY_TOL: f64 = 1e-10;
const KNOWN_FAIL: &[u32] = &[2];

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(id: u32, name: &str, o: &Outcome, took: Duration) -> bool {
    let tag = if o.pass { "PASS" } else { "FAIL" };
    println!("[{tag}] {id}. {name} ({:.2}s): {}", took.as_secs_f64(), o.detail);
    o.pass != KNOWN_FAIL.contains(&id)
}

fn half(two_k: i64) -> Rational {
    rat(two_k, 2)
}

fn c1_algebra() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut failed = Vec::new();
    for two_k in 0..=4 {
        for real in [Realization::Printed, Realization::Polynomial] {
            for c in GeneratorSet::<Rational>::new(&half(two_k), real).identity_suite(two_k as usize + 3) {
                checked += 1;
                if !c.holds {
                    failed.push(format!("2k={two_k} {real:?} {}", c.relation));
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Outcome {
        pass: failed.is_empty() && secs <= 10.0,
        detail: format!("{checked} relation checks on monomials of degree <= 2k+3, {} failed, {secs:.2}s <= 10s; {failed:?}", failed.len()),
    }
}

fn c2_closure() -> Outcome {
    let mut literal = Vec::new();
    let mut shifted = Vec::new();
    for two_k in 0..=4i64 {
        let l = build_l(&half(two_k), &rat(1, 3), Realization::Polynomial).unwrap();
        literal.push(preserves_space(&l, two_k + 1, two_k));
        shifted.push(preserves_space(&l, two_k, two_k - 1));
    }
    let pass = literal.iter().all(|b| *b);
    let analysis = if pass {
        String::new()
    } else {
        format!(
            "; analysis: L maps P_(2k+1,2k) out of itself for 2k=0..4 ({literal:?}) because the t(Q1+Qb2) and Qb1 terms raise the upper degree past 2k+1; \
             the invariant space is P_(2k,2k-1), i.e. n = 2k-1, and closure there holds exactly: {shifted:?}"
        )
    };
    Outcome { pass, detail: format!("n = 2k as stated{analysis}") }
}

fn c3_bridge() -> Outcome {
    let draws = random_draws(2024, 10);
    let mut bad = 0;
    for two_k in 0..=4 {
        let k = half(two_k);
        for (j, mu) in &draws {
            let l = build_l(&k, mu, Realization::Polynomial).unwrap();
            let s = l.minus(&SpinorOperator::identity().scaled(&RingPolynomial::constant(lambda(&k, j, mu))));
            let m = divided_power_matrix(&s, two_k as usize);
            if m.as_ref() != Some(&RecurrenceSystem::new(&k, j, mu).unwrap().matrix) {
                bad += 1;
            }
        }
    }
    Outcome {
        pass: bad == 0,
        detail: format!(
            "L - lambda vs recurrence matrix, 2k=0..4 x 10 rational (j, mu) draws, {bad} mismatches; basis x^n/n! (upper), x^(n-1)/(n-1)! (lower), order 4k+1"
        ),
    }
}

fn c4_p1() -> Outcome {
    let r = compare_with_printed(&int(0), &random_draws(4, 5)).unwrap();
    Outcome {
        pass: r.verdict == Verdict::Match && r.constant == Some(rat(1, 2)),
        detail: format!("k=0 over 5 (eta, rho) draws: {:?}, constant {:?}", r.verdict, r.constant.map(|c| c.to_string())),
    }
}

fn c5_printed(points: &mut usize, certified: &mut usize) -> Outcome {
    let draws = random_draws(5, 5);
    let mut lines = Vec::new();
    let mut pass = true;
    for k in [rat(1, 2), int(1)] {
        let r = compare_with_printed(&k, &draws).unwrap();
        let all_certified = r.draws.iter().all(|d| d.roots_certified);
        for d in &r.draws {
            *points += d.roots.len();
            *certified += d.roots.iter().filter(|p| p.validation.exact_eigencheck).count();
        }
        let roots: usize = r.draws.iter().map(|d| d.roots.len()).sum();
        if r.verdict == Verdict::Mismatch && !all_certified {
            pass = false;
        }
        lines.push(format!(
            "k={k}: {:?}{} ({roots} determinant roots, all exact-checked: {all_certified}); det {} vs listed {}",
            r.verdict,
            r.constant.as_ref().map(|c| format!(" constant {c}")).unwrap_or_default(),
            r.draws[0].determinant,
            r.draws[0].printed
        ));
    }
    Outcome { pass, detail: lines.join("; ") }
}

fn c6_oracle(points: &mut usize, certified: &mut usize) -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    let mut worst_d: f64 = 0.0;
    let mut worst_r: f64 = 0.0;
    let mut min_n = usize::MAX;
    let mut bad = Vec::new();
    for two_k in 1..=3 {
        for j in 0..=2 {
            for mu in [int(0), rat(1, 4)] {
                let rep = juddian_points(&half(two_k), &int(j), &mu, &JuddianOptions::default()).unwrap();
                for p in &rep.points {
                    n += 1;
                    *points += 1;
                    *certified += usize::from(p.validation.exact_eigencheck);
                    let (Some(o), Some(r)) = (&p.validation.oracle, &p.validation.reconstruction) else {
                        bad.push(format!("2k={two_k} j={j} mu={mu}: no oracle/reconstruction"));
                        continue;
                    };
                    worst_d = worst_d.max(o.distance);
                    worst_r = worst_r.max(r.residual);
                    min_n = min_n.min(r.truncation);
                    if o.distance > ORACLE_TOL || r.residual > RESIDUAL_TOL || r.truncation < MIN_TRUNCATION {
                        bad.push(format!("2k={two_k} j={j} mu={mu} t={}", p.kappa_sq.midpoint_f64()));
                    }
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Outcome {
        pass: n > 0 && bad.is_empty() && secs <= 60.0,
        detail: format!(
            "{n} points; max |E - oracle| = {worst_d:.1e} <= {ORACLE_TOL:e}; max residual = {worst_r:.1e} <= {RESIDUAL_TOL:e}; min N = {min_n} >= {MIN_TRUNCATION}; {secs:.2}s <= 60s; {bad:?}"
        ),
    }
}

fn c7_exact(points: &mut usize, certified: &mut usize) -> Outcome {
    // a wider batch including non-realizable sectors
    let opts = JuddianOptions { oracle: false, ..Default::default() };
    let draws = random_draws(77, 12);
    for two_k in 1..=4 {
        for (j, mu) in &draws {
            if let Ok(rep) = juddian_points(&half(two_k), j, mu, &opts) {
                for p in &rep.points {
                    *points += 1;
                    let again = exact_eigencheck(&p.coefficients, &half(two_k), j, mu);
                    *certified += usize::from(p.validation.exact_eigencheck && again);
                }
            }
        }
    }
    Outcome {
        pass: *points > 0 && certified == points,
        detail: format!("{certified}/{points} emitted points satisfy (L - lambda) psi = 0 in Q[t]/(f)"),
    }
}

fn c8_oscillator() -> Outcome {
    let kappas = [0.3, 0.7, 1.1, 1.6];
    let mut lines = Vec::new();
    let mut pass = true;
    for k in [rat(1, 2), int(1), rat(3, 2)] {
        let a = arbitrate_displaced_oscillator(&k, &kappas, ORACLE_TOL).unwrap();
        let both_present = a.energies.len() == kappas.len();
        // a formula may only be called confirmed if it matched at every kappa
        let honest = match a.confirmed {
            Confirmation::Printed => a.mapped_sector.iter().all(|p| p.printed_distance <= ORACLE_TOL),
            Confirmation::Derived => a.mapped_sector.iter().all(|p| p.derived_distance <= ORACLE_TOL),
            Confirmation::Both => a.mapped_sector.iter().all(|p| p.printed_distance.max(p.derived_distance) <= ORACLE_TOL),
            Confirmation::Neither => true,
        };
        pass &= both_present && honest;
        let dp = a.mapped_sector.iter().map(|p| p.printed_distance).fold(f64::INFINITY, f64::min);
        let dd = a.mapped_sector.iter().map(|p| p.derived_distance).fold(f64::INFINITY, f64::min);
        lines.push(format!("k={k}: {:?} (closest printed {dp:.1e}, derived {dd:.1e})", a.confirmed));
    }
    let zero = arbitrate_displaced_oscillator(&int(0), &kappas, ORACLE_TOL).unwrap();
    lines.push(format!("k=0 reference: {:?}", zero.confirmed));
    Outcome {
        pass,
        detail: format!("printed (2k+3/2) - kappa^2 vs derived 2k + 1/2 - 2kappa^2 in sector j'=0, mu'=-1/2: {}", lines.join("; ")),
    }
}

fn c9_sanity() -> Outcome {
    let start = Instant::now();
    let mut worst_ladder: f64 = 0.0;
    let mut worst_sign: f64 = 0.0;
    let mut monotone = true;
    for j in 0..=3 {
        for mu in [int(0), rat(1, 4), rat(-3, 10)] {
            let p = SectorParams::new(int(j), mu.clone(), 0.0, int(0));
            let got = converged_spectrum(&p, 6, 1e-12).unwrap().eigenvalues;
            let m = numeric_core::rational::to_f64(&mu);
            let mut want: Vec<f64> = (0..8)
                .flat_map(|n| {
                    let n = n as f64;
                    let jf = j as f64;
                    [jf + 2.0 * n + 1.5 + 2.0 * m, jf + 2.0 * n + 1.5 - 2.0 * m]
                })
                .collect();
            want.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (a, b) in got.iter().zip(&want) {
                worst_ladder = worst_ladder.max((a - b).abs());
            }
            for kappa in [0.4, 1.3] {
                let a = converged_spectrum(&p.with_kappa(kappa), 6, 1e-12).unwrap();
                let b = converged_spectrum(&p.with_kappa(-kappa), 6, 1e-12).unwrap();
                for (x, y) in a.eigenvalues.iter().zip(&b.eigenvalues) {
                    worst_sign = worst_sign.max((x - y).abs());
                }
                let mut last = f64::INFINITY;
                for n in [8, 16, 32, 64, 128] {
                    let (d, e) = sector_bands(&p.with_kappa(kappa), n).unwrap();
                    let g = tridiagonal_eigenvalues(&d, &e, 1)[0];
                    monotone &= g <= last + 1e-12;
                    last = g;
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Outcome {
        pass: worst_ladder <= SANITY_TOL && worst_sign <= SANITY_TOL && monotone && secs <= 5.0,
        detail: format!(
            "ladder error {worst_ladder:.1e}, kappa sign error {worst_sign:.1e} (<= {SANITY_TOL:e}); ground state non-increasing under doubling: {monotone}; {secs:.2}s <= 5s"
        ),
    }
}

fn main() {
    // `cargo test -- <filter>` passes arguments; listing mode must not run
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let mut points = 0;
    let mut certified = 0;
    let mut ok = true;
    let mut run = |id: u32, name: &str, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let o = f();
        ok &= report(id, name, &o, t.elapsed());
    };
    run(1, "algebra suite", &mut c1_algebra);
    run(2, "QES closure on P_(n+1,n), n = 2k", &mut c2_closure);
    run(3, "bridge identity", &mut c3_bridge);
    run(4, "P1 reproduction", &mut c4_p1);
    run(5, "P2/P3 comparison", &mut || c5_printed(&mut points, &mut certified));
    run(6, "oracle cross-validation", &mut || c6_oracle(&mut points, &mut certified));
    run(7, "exact eigen-check", &mut || c7_exact(&mut points, &mut certified));
    run(8, "displaced-oscillator arbitration", &mut c8_oscillator);
    run(9, "oracle sanity", &mut c9_sanity);
    if !ok {
        eprintln!("acceptance: unexpected outcome");
        std::process::exit(1);
    }
}
