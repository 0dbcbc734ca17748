mod common;

use common::{field_axioms, scalar};
use proptest::prelude::*;
use spherical_bruhat::arith::{parse_scalar, ArithError, ExactMatrix, Scalar};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn field_laws(a in scalar(), b in scalar(), c in scalar()) {
        let r = field_axioms(&a, &b, &c);
        prop_assert!(r.is_ok(), "{:?}", r);
    }

    #[test]
    fn specialization_is_a_homomorphism(a in scalar(), b in scalar(), v in 4i64..9) {
        let v = Scalar::from_int(v);
        let ev = |x: &Scalar| x.eval_t(&v);
        if let (Ok(ea), Ok(eb), Ok(es), Ok(ep)) = (ev(&a), ev(&b), ev(&(&a + &b)), ev(&(&a * &b))) {
            prop_assert_eq!(es, &ea + &eb);
            prop_assert_eq!(ep, &ea * &eb);
        }
    }

    #[test]
    fn determinant_is_multiplicative(xs in prop::collection::vec(-4i64..=4, 18)) {
        let a = ExactMatrix::from_ints(&xs[..9].chunks(3).map(|r| r.to_vec()).collect::<Vec<_>>());
        let b = ExactMatrix::from_ints(&xs[9..].chunks(3).map(|r| r.to_vec()).collect::<Vec<_>>());
        prop_assert_eq!(a.mul(&b).det().unwrap(), &a.det().unwrap() * &b.det().unwrap());
        match a.inverse() {
            Ok(inv) => prop_assert!(a.mul(&inv).is_identity()),
            Err(e) => {
                prop_assert_eq!(e, ArithError::Singular);
                prop_assert!(a.det().unwrap().is_zero());
            }
        }
    }
}

#[test]
fn cyclotomic_relations() {
    for m in [3u32, 4, 5, 6, 8, 12] {
        let z = Scalar::zeta(m, 1).unwrap();
        assert!(z.pow(m as i64).unwrap().is_one(), "zeta_{m}^{m}");
        for d in 1..m {
            if m % d == 0 {
                assert!(!z.pow(d as i64).unwrap().is_one(), "zeta_{m} has order {d}");
            }
        }
        let sum = (0..m as i64).fold(Scalar::zero(), |acc, k| &acc + &Scalar::zeta(m, k).unwrap());
        assert!(sum.is_zero(), "sum of {m}-th roots");
    }
}

#[test]
fn parse_errors_carry_position() {
    match parse_scalar("1 + * 2", 1) {
        Err(ArithError::Parse { at, .. }) => assert!(at >= 4),
        other => panic!("{other:?}"),
    }
    assert!(matches!(Scalar::zeta(0, 1), Err(ArithError::UnsupportedOrder(0))));
    assert!(matches!(&Scalar::one() / &Scalar::zero(), Err(ArithError::DivisionByZero)));
}

#[test]
fn characteristic_polynomial_of_companion() {
    // Companion matrix of x^3 - 2x + 5.
    let c = ExactMatrix::from_ints(&[vec![0, 0, -5], vec![1, 0, 2], vec![0, 1, 0]]);
    let p: Vec<i64> = c.char_poly().iter().map(|x| x.to_i64().unwrap()).collect();
    assert_eq!(p, [5, -2, 0, 1]);
}
