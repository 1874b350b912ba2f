use num::{One, Zero};
use numeric_core::rational::{int, rat};
use numeric_core::*;
use proptest::prelude::*;

fn poly(max_deg: usize) -> impl Strategy<Value = RingPolynomial> {
    prop::collection::vec((-20i64..20, 1i64..6), 0..=max_deg + 1)
        .prop_map(|c| RingPolynomial::from_coeffs(c.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = RingPolynomial> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn product_degree_is_additive(p in nonzero_poly(8), q in nonzero_poly(8)) {
        prop_assert_eq!((&p * &q).degree().unwrap(), p.degree().unwrap() + q.degree().unwrap());
    }

    #[test]
    fn add_then_sub_is_identity(p in poly(8), q in poly(8)) {
        prop_assert_eq!(&(&p + &q) - &q, p);
    }

    #[test]
    fn isolates_each_linear_factor(roots in prop::collection::btree_set((-40i64..40, 1i64..5), 1..6)) {
        let vals: std::collections::BTreeSet<Rational> = roots.iter().map(|&(n, d)| rat(n, d)).collect();
        let p = vals.iter().fold(RingPolynomial::one(), |acc, r| {
            &acc * &RingPolynomial::from_coeffs(vec![-r.clone(), int(1)])
        });
        let found = isolate_real_roots(&p, &int(-50), &int(50)).unwrap();
        prop_assert_eq!(found.len(), vals.len());
        for (e, r) in found.iter().zip(&vals) {
            prop_assert!(e.contains(r));
            prop_assert_eq!(e.multiplicity_hint, 1);
            let fine = refine_enclosure(&p, e, &rat(1, 1 << 20)).unwrap();
            prop_assert!(fine.contains(r) || (fine.lower <= *r && *r <= fine.upper));
        }
    }

    #[test]
    fn banded_matches_cofactor(
        n in 1usize..=5,
        entries in prop::collection::vec(poly(2), 25),
        band in 0usize..=4,
    ) {
        let m: PolyMatrix = (0..n)
            .map(|i| (0..n).map(|j| if i.abs_diff(j) <= band { entries[i * 5 + j].clone() } else { RingPolynomial::zero() }).collect())
            .collect();
        prop_assert_eq!(banded_determinant(&m, band).unwrap(), cofactor_determinant(&m).unwrap());
    }

    #[test]
    fn jacobi_orthonormal_and_trace(n in 1usize..12, seed in prop::collection::vec(-5.0f64..5.0, 144)) {
        let m = SymmetricMatrix::from_fn(n, |i, j| seed[i * 12 + j]);
        let r = symmetric_eigen(&m, 1e-13).unwrap();
        for a in 0..n {
            for b in 0..n {
                let dot: f64 = (0..n).map(|i| r.vectors[a][i] * r.vectors[b][i]).sum();
                let want = if a == b { 1.0 } else { 0.0 };
                prop_assert!((dot - want).abs() < 1e-10);
            }
        }
        let s: f64 = r.values.iter().sum();
        prop_assert!((s - m.trace()).abs() <= 1e-10 * m.frobenius_norm().max(1.0));
        let norm = m.frobenius_norm();
        for (lam, v) in r.values.iter().zip(&r.vectors) {
            let mv = m.mul_vec(v);
            let res: f64 = mv.iter().zip(v).map(|(a, b)| (a - lam * b).powi(2)).sum::<f64>().sqrt();
            prop_assert!(res <= 10.0 * 1e-13 * norm.max(1.0) * n as f64);
        }
    }

    #[test]
    fn quotient_inverse(a in nonzero_poly(5), m in nonzero_poly(4)) {
        prop_assume!(m.degree().unwrap() >= 1);
        let m = m.squarefree_part();
        let x = QuotientElement::new(&a, &m).unwrap();
        if let Ok(inv) = x.inv() {
            prop_assert!(x.mul(&inv).unwrap().is_one());
        }
    }
}

#[test]
fn determinant_base_case_with_eta_rho_is_eta_over_two() {
    // top-left entry k + mu - (1+j)/2 at k = 0, j = -(eta+rho+2)/2, mu = (eta-rho)/4
    for (eta, rho) in [(3, 1), (-2, 5), (7, 7)] {
        let (eta, rho) = (int(eta), int(rho));
        let j = -(&eta + &rho + int(2)) / int(2);
        let mu = (&eta - &rho) / int(4);
        let entry = RingPolynomial::constant(&mu - (int(1) + &j) / int(2));
        let d = banded_determinant(&vec![vec![entry]], 0).unwrap();
        assert_eq!(d, RingPolynomial::constant(eta / int(2)));
    }
}

#[test]
fn isolating_zero_polynomial_fails() {
    assert_eq!(isolate_real_roots(&RingPolynomial::zero(), &int(0), &int(1)), Err(RootError::ZeroPolynomial));
}
