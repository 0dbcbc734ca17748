use std::sync::Arc;

use spherical_bruhat::arith::{ExactMatrix, Scalar, SeedStream};
use spherical_bruhat::atlas::*;
use spherical_bruhat::bruhat::EstimateOptions;
use spherical_bruhat::groups::*;
use spherical_bruhat::roots::{cascade, CascadeKind, Root, RootError, RootSystem, WeylElement};
use spherical_bruhat::sphericity::*;

fn ctx(label: &str) -> Arc<GroupContext> {
    GroupContext::from_label(label).unwrap()
}

fn upper_jordan(n: usize, ones: &[usize]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for &i in ones {
        m[i][i + 1] = 1;
    }
    m
}

fn regular_unipotent(c: &Arc<GroupContext>) -> GroupElement {
    let rs = c.root_system();
    (1..=c.rank()).fold(GroupElement::identity(c), |g, i| {
        g.mul(&root_element(c, &Root::simple(rs.rank(), i), &Scalar::one()).unwrap())
    })
}

/// `sigma_1 * u` in Sp6 with `u` of type (2,2) in the Sp4 factor.
fn excluded_mixed() -> GroupElement {
    let mut m = ExactMatrix::diagonal(&[-1, 1, 1, -1, 1, 1].map(Scalar::from_int));
    m[(4, 1)] = Scalar::one();
    m[(5, 2)] = Scalar::one();
    GroupElement::new(&ctx("C3"), m).unwrap()
}

fn verdict(g: &GroupElement, seed: u64) -> SphericityOutcome {
    sphericity_test(g, &SeedStream::new(seed), EstimateOptions::default())
}

#[test]
fn minimal_orbit_in_sp4() {
    let c = ctx("C2");
    let rs = c.root_system();
    let beta = cascade(rs, CascadeKind::Beta).unwrap().get("beta_1").unwrap().clone();
    let g = root_element(&c, &beta.neg(), &Scalar::one()).unwrap();
    let out = verdict(&g, 0);
    assert_eq!(out.verdict, Verdict::Spherical);
    assert_eq!((out.dim, out.bound()), (4, Some(4)));
}

#[test]
fn two_column_unipotent_in_sl5() {
    let g = GroupElement::from_ints(&ctx("A4"), &upper_jordan(5, &[0, 2])).unwrap();
    let out = verdict(&g, 1);
    assert_eq!(out.dim, 12);
    assert_eq!(out.verdict, Verdict::Spherical);
}

#[test]
fn identity_is_spherical() {
    let out = verdict(&GroupElement::identity(&ctx("C2")), 0);
    assert_eq!(out.verdict, Verdict::Spherical);
    assert_eq!(out.dim, 0);
    assert!(out.z.unwrap().is_identity());
}

#[test]
fn negative_controls() {
    let mut cases = vec![
        ("A2", GroupElement::from_ints(&ctx("A2"), &upper_jordan(3, &[0, 1])).unwrap(), 6, 4),
        ("A3", GroupElement::from_ints(&ctx("A3"), &upper_jordan(4, &[0, 1, 2])).unwrap(), 12, 8),
        ("C3 sigma_1*u", excluded_mixed(), 14, 12),
    ];
    for label in ["C2", "B2"] {
        cases.push((label, regular_unipotent(&ctx(label)), 8, 6));
    }
    for (name, g, dim, bound) in cases {
        for seed in 0..3 {
            let out = verdict(&g, seed);
            assert_eq!(out.verdict, Verdict::NonSpherical, "{name} seed {seed}: {out:?}");
            assert_eq!((out.dim, out.bound()), (dim, Some(bound)), "{name}");
        }
    }
}

#[test]
fn witness_inference() {
    let g2 = RootSystem::from_label("G2").unwrap();
    let b1 = cascade(&g2, CascadeKind::Beta).unwrap().get("beta_1").unwrap().clone();
    let g1 = cascade(&g2, CascadeKind::Gamma).unwrap().get("gamma_1").unwrap().clone();
    let ws = [WeylElement::reflection(&g2, &b1).unwrap(), WeylElement::reflection(&g2, &g1).unwrap()];
    assert_eq!(infer_spherical_from_witness(8, &ws).unwrap(), Inference::Spherical);
    assert_eq!(infer_spherical_from_witness(8, &ws[..1]).unwrap(), Inference::NotInferable);

    let a3 = RootSystem::from_label("A3").unwrap();
    assert_eq!(infer_spherical_from_witness(0, &[WeylElement::identity(&a3)]).unwrap(), Inference::Spherical);
    assert_eq!(infer_spherical_from_witness(10, &[WeylElement::simple(&a3, 1)]).unwrap(), Inference::NotInferable);
    assert!(matches!(infer_spherical_from_witness(3, &[]), Err(RootError::EmptyInput)));
}

#[test]
fn atlas_reports_pass() {
    for label in supported_groups(2, 4) {
        for rec in enumerate_spherical(&label).unwrap() {
            let rep = check_characterization(&rec);
            assert!(rep.passed(), "{}", rep.to_json());
            match check_well_placed(&rec) {
                Ok(rep) => assert!(rep.passed(), "{}", rep.to_json()),
                Err(AtlasError::NoMatrixModel(_)) => assert!(!rec.has_matrix_model),
                Err(e) => panic!("{label} {}: {e}", rec.label),
            }
        }
    }
}

#[test]
fn report_examples() {
    let find = |g: &str, l: &str| enumerate_spherical(g).unwrap().into_iter().find(|r| r.label == l).unwrap();
    let r1 = check_characterization(&find("E8", "r_1"));
    assert_eq!((r1.checks[0].lhs.as_str(), r1.checks[0].rhs.as_str()), ("128", "128"));
    let x = check_characterization(&find("C3", "X_{2,6}"));
    assert_eq!(x.checks[0].lhs, "10");
    let wp = check_well_placed(&find("D4", "X_{2,8}")).unwrap();
    assert!(wp.passed());
    let b = check_well_placed(&find("B3", "b_lambda")).unwrap();
    assert!(b.passed() && b.checks.iter().any(|c| c.status == CheckStatus::Cited));
    assert!(matches!(check_well_placed(&find("F4", "f_2*x_beta1(1)")), Err(AtlasError::NoMatrixModel(_))));
}

#[test]
fn element_json_validation() {
    let g = regular_unipotent(&ctx("C3"));
    assert_eq!(element_from_json(&element_to_json(&g)).unwrap(), g);
    let bad = r#"{"group": "C2", "matrix": [[1,1,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}"#;
    let err = element_from_json(bad).unwrap_err().to_string();
    assert!(err.contains("form violated at"), "{err}");
    let zeta = r#"{"group": "A1", "matrix": [["z", 0], [0, "z^2"]], "cyclotomic_order": 3}"#;
    assert!(element_from_json(zeta).is_ok());
}
