mod common;

use common::monotone_pairs;
use proptest::prelude::*;
use spherical_bruhat::roots::*;

const LABELS: [&str; 9] = ["A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"];

#[test]
fn group_orders() {
    for (label, order) in [("A3", 24), ("B3", 48), ("C3", 48), ("D4", 192), ("G2", 12), ("F4", 1152)] {
        let rs = RootSystem::from_label(label).unwrap();
        assert_eq!(WeylElement::enumerate(&rs).unwrap().len(), order, "{label}");
    }
    let e8 = RootSystem::from_label("E8").unwrap();
    assert!(matches!(WeylElement::enumerate(&e8), Err(RootError::GroupTooLarge(696729600))));
}

#[test]
fn positive_root_counts() {
    for (label, n) in [("A5", 15), ("B4", 16), ("C5", 25), ("D6", 30), ("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6)] {
        assert_eq!(RootSystem::from_label(label).unwrap().positive_roots().len(), n, "{label}");
    }
}

#[test]
fn monotonicity_exhaustive() {
    assert!(monotone_pairs("A3").unwrap() > 24);
    assert!(monotone_pairs("B3").unwrap() > 48);
}

#[test]
fn longest_element_bound() {
    for label in LABELS {
        let rs = RootSystem::from_label(label).unwrap();
        let w0 = WeylElement::longest(&rs);
        assert!(w0.is_involution());
        assert_eq!(w0.length(), rs.positive_roots().len());
        let minus_one = matches!(label, "B3" | "C4" | "E7" | "E8" | "F4" | "G2");
        assert_eq!(w0.rank_one_minus() == rs.rank(), minus_one, "{label}");
    }
}

#[test]
fn cascades_are_orthogonal() {
    for label in LABELS {
        let rs = RootSystem::from_label(label).unwrap();
        for kind in [CascadeKind::Beta, CascadeKind::Gamma] {
            let c = cascade(&rs, kind).unwrap();
            let roots: Vec<Root> = c.roots.iter().map(|r| r.root.clone()).collect();
            assert!(pairwise_orthogonal(&rs, &roots), "{label} {kind:?}");
            assert!(cascade_product(&rs, &roots).unwrap().is_involution());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn words_and_lengths(which in 0..LABELS.len(), raw in prop::collection::vec(1usize..=8, 0..30)) {
        let rs = RootSystem::from_label(LABELS[which]).unwrap();
        let letters: Vec<usize> = raw.iter().map(|l| (l - 1) % rs.rank() + 1).collect();
        let x = WeylElement::from_word(&rs, &letters).unwrap();
        let red = x.reduced_word();
        prop_assert_eq!(red.len(), x.length());
        prop_assert!(x.length() <= letters.len());
        prop_assert_eq!(letters.len() % 2, x.length() % 2);
        prop_assert_eq!(WeylElement::from_word(&rs, &red).unwrap(), x.clone());
        prop_assert!(x.compose(&x.inverse()).is_identity());
        let inversions = rs.positive_roots().iter().filter(|a| !x.apply(a).is_positive()).count();
        prop_assert_eq!(inversions, x.length());
        prop_assert!(x.bruhat_leq(&WeylElement::longest(&rs)).unwrap());
        for i in 1..=rs.rank() {
            let xs = x.times_simple(i);
            prop_assert_eq!(x.is_right_descent(i), xs.length() < x.length());
            prop_assert!(xs.bruhat_leq(&x).unwrap() || x.bruhat_leq(&xs).unwrap());
        }
    }
}
