use std::sync::Arc;

use spherical_bruhat::arith::{ExactMatrix, Scalar, SeedStream};
use spherical_bruhat::groups::*;
use spherical_bruhat::roots::{Family, Root, WeylElement};

fn ctx(label: &str) -> Arc<GroupContext> {
    GroupContext::from_label(label).unwrap()
}

fn q(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// dim of the Lie algebra minus the nullity of the combined linear system
/// `gX = Xg`, `X` in the Lie algebra, over all `m^2` entries of `X`.
fn centralizer_codim(g: &GroupElement) -> usize {
    let c = g.context();
    let m = c.size();
    let gm = g.matrix();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let var = |i: usize, j: usize| i * m + j;
    for i in 0..m {
        for j in 0..m {
            let mut r = vec![Scalar::zero(); m * m];
            for k in 0..m {
                r[var(k, j)] = &r[var(k, j)] + &gm[(i, k)];
                r[var(i, k)] = &r[var(i, k)] - &gm[(k, j)];
            }
            rows.push(r);
            let mut r = vec![Scalar::zero(); m * m];
            match c.gram() {
                Some(f) => {
                    for k in 0..m {
                        r[var(k, i)] = &r[var(k, i)] + &f[(k, j)];
                        r[var(k, j)] = &r[var(k, j)] + &f[(i, k)];
                    }
                }
                None if i == 0 && j == 0 => {
                    for k in 0..m {
                        r[var(k, k)] = Scalar::one();
                    }
                }
                None => continue,
            }
            rows.push(r);
        }
    }
    let nullity = m * m - ExactMatrix::from_rows(rows).unwrap().rank();
    c.lie_dim() - nullity
}

#[test]
fn gram_matrices() {
    let c2 = ctx("C2");
    let mut g = ExactMatrix::zeros(4, 4);
    g.set_block(0, 2, &ExactMatrix::identity(2));
    g.set_block(2, 0, &ExactMatrix::identity(2).neg());
    assert_eq!(c2.gram().unwrap(), &g);
    let b1 = ctx("B1");
    assert_eq!(b1.gram().unwrap(), &ExactMatrix::from_ints(&[vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]));
    let a3 = ctx("A3");
    assert_eq!(a3.size(), 4);
    assert!(a3.gram().is_none());
    assert!(matches!(GroupContext::new(Family::D, 1), Err(GroupError::BadRank(_))));
    assert!(matches!(GroupContext::new(Family::E, 6), Err(GroupError::BadRank(_))));
}

#[test]
fn membership() {
    let a1 = ctx("A1");
    assert!(GroupElement::new(&a1, ExactMatrix::identity(2)).is_ok());
    let half = Scalar::from_ratio(1, 2);
    assert!(GroupElement::new(&a1, ExactMatrix::diagonal(&[q(2), half])).is_ok());
    assert!(matches!(
        GroupElement::new(&a1, ExactMatrix::diagonal(&[q(2), q(1)])),
        Err(GroupError::NotInGroup(_))
    ));
    let c2 = ctx("C2");
    let err = GroupElement::new(&c2, ExactMatrix::diagonal(&[q(2), q(1), q(1), q(1)])).unwrap_err();
    assert!(err.to_string().contains("form violated"));
    let d2 = ctx("D2");
    let swap = ExactMatrix::from_ints(&[vec![0, 0, 1, 0], vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 0, 1]]);
    assert!(GroupElement::new(&d2, swap).unwrap_err().to_string().contains("determinant"));
}

#[test]
fn root_subgroups() {
    let a1 = ctx("A1");
    let x = root_element(&a1, &Root(vec![1]), &q(1)).unwrap();
    assert_eq!(x.matrix(), &ExactMatrix::from_ints(&[vec![1, 1], vec![0, 1]]));
    for label in ["A3", "B3", "C3", "D4", "B2", "C2"] {
        let c = ctx(label);
        for a in c.root_system().all_roots() {
            assert!(c.in_lie_algebra(c.root_vector(&a).unwrap()));
            assert!(root_element(&c, &a, &q(0)).unwrap().is_identity());
            let s = Scalar::from_ratio(2, 3);
            let t = Scalar::from_ratio(-5, 7);
            let xs = root_element(&c, &a, &s).unwrap();
            assert!(GroupElement::new(&c, xs.matrix().clone()).is_ok(), "{label} {a}");
            let prod = xs.mul(&root_element(&c, &a, &t).unwrap());
            assert_eq!(prod, root_element(&c, &a, &(&s + &t)).unwrap());
            let b = xs.in_borel_basis();
            let m = c.size();
            let upper = (0..m).all(|i| (0..i).all(|j| b[(i, j)].is_zero()));
            let lower = (0..m).all(|i| (i + 1..m).all(|j| b[(i, j)].is_zero()));
            assert_eq!((upper, lower), (a.is_positive(), !a.is_positive()), "{label} {a}");
        }
        assert!(matches!(c.root_vector(&Root(vec![7; c.rank()])), Err(GroupError::NotARoot(_))));
    }
}

#[test]
fn weyl_representatives_normalize_torus() {
    for label in ["A3", "B3", "C3", "D4"] {
        let c = ctx(label);
        let rs = c.root_system();
        let params: Vec<Scalar> = (0..c.rank()).map(|i| q(i as i64 + 2)).collect();
        let t = torus_element(&c, &params).unwrap();
        for w in WeylElement::enumerate(rs).unwrap().iter().step_by(7) {
            let wd = GroupElement::weyl_representative(&c, w).unwrap();
            assert!(wd.is_monomial());
            let conj = t.conjugate_by(&wd);
            // w(t) has the parameters of t permuted by w
            let perm = w.signed_permutation().unwrap();
            let n = c.rank();
            let mut expect = vec![Scalar::one(); c.size()];
            match c.family() {
                Family::A => {
                    for (i, &(j, _)) in perm.iter().enumerate() {
                        expect[j] = t.matrix()[(i, i)].clone();
                    }
                }
                _ => {
                    for (i, &(j, s)) in perm.iter().enumerate().take(n) {
                        let p = &params[i];
                        expect[c.weight_index(j, s)] = p.clone();
                        expect[c.weight_index(j, -s)] = p.inv().unwrap();
                    }
                }
            }
            assert_eq!(conj.matrix(), &ExactMatrix::diagonal(&expect), "{label} {w:?}");
        }
    }
    let d4 = ctx("D4");
    let mut images: Vec<(usize, i64)> = (0..4).map(|i| (i, 1)).collect();
    images[2].1 = -1;
    assert!(matches!(
        GroupElement::signed_permutation_representative(&d4, &images),
        Err(GroupError::NotInWeylImage(_))
    ));
    images[3].1 = -1;
    assert!(GroupElement::signed_permutation_representative(&d4, &images).is_ok());
    let id = WeylElement::identity(d4.root_system());
    assert!(GroupElement::weyl_representative(&d4, &id).unwrap().is_identity());
}

#[test]
fn jordan_types() {
    let a2 = ctx("A2");
    assert_eq!(jordan_type(&GroupElement::identity(&a2)).unwrap(), Partition(vec![1, 1, 1]));
    let reg = GroupElement::from_ints(&a2, &[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]).unwrap();
    assert_eq!(jordan_type(&reg).unwrap(), Partition(vec![3]));
    let t = torus_element(&a2, &[q(2), q(3)]).unwrap();
    assert!(matches!(jordan_type(&t), Err(GroupError::NotUnipotent)));
    assert_eq!(Partition::z_shape(1, 9), Partition(vec![3, 2, 2, 1, 1]));
    assert_eq!(Partition::x_shape(2, 6).to_string(), "(2^2,1^2)");
    assert!(!Partition(vec![2, 1]).valid_for(Family::C));
    assert!(Partition(vec![2, 2, 1]).valid_for(Family::B));
    assert!(!Partition(vec![2, 1, 1, 1]).valid_for(Family::D));
}

#[test]
fn class_dims_match_independent_oracle() {
    for label in ["A2", "A3", "B2", "C2", "C3", "D4"] {
        let c = ctx(label);
        let mut stream = SeedStream::new(11);
        let mut samples = vec![GroupElement::identity(&c)];
        let hr = c.root_system().highest_root();
        samples.push(root_element(&c, &hr, &q(1)).unwrap());
        let w0 = WeylElement::longest(c.root_system());
        samples.push(GroupElement::weyl_representative(&c, &w0).unwrap());
        samples.push(random_conjugate(&samples[1], &mut stream, 6, 2));
        for g in &samples {
            assert_eq!(class_dim(g), centralizer_codim(g), "{label}");
        }
        assert_eq!(class_dim(&samples[0]), 0);
        assert_eq!(class_dim(&samples[1]), class_dim(&samples[3]));
    }
    // minimal orbit in SL_{n+1} has dimension 2n
    let a3 = ctx("A3");
    let hr = a3.root_system().highest_root();
    assert_eq!(class_dim(&root_element(&a3, &hr, &q(1)).unwrap()), 6);
}

#[test]
fn tau_and_conjugation() {
    let d4 = ctx("D4");
    let mut stream = SeedStream::new(3);
    let g = random_conjugate(&GroupElement::identity(&d4), &mut stream, 1, 1);
    assert!(tau_hat(&GroupElement::identity(&d4)).unwrap().is_identity());
    let hr = d4.root_system().highest_root();
    let x = random_conjugate(&root_element(&d4, &hr, &q(1)).unwrap(), &mut stream, 8, 3);
    assert_eq!(tau_hat(&tau_hat(&x).unwrap()).unwrap(), x);
    assert!(g.is_identity());
    assert!(matches!(tau_hat(&GroupElement::identity(&ctx("C2"))), Err(GroupError::WrongFamily(_))));
    let rs = d4.root_system();
    let x3 = root_element(&d4, &rs.simple_root(3), &q(1)).unwrap();
    let x4 = root_element(&d4, &rs.simple_root(4), &q(1)).unwrap();
    assert_eq!(tau_hat(&x3).unwrap(), x4);
    let u = root_element(&d4, &hr, &q(1)).unwrap();
    assert_eq!(random_conjugate(&u, &mut stream, 10, 0), u);
    let v = random_conjugate(&u, &mut stream, 10, 3);
    assert_eq!(jordan_type(&v).unwrap(), jordan_type(&u).unwrap());
    assert_eq!(class_dim(&v), class_dim(&u));
}

#[test]
fn embeddings() {
    let b2 = ctx("B2");
    let id4 = ExactMatrix::identity(4);
    assert!(Embedding::Leading.apply(&b2, &[&id4]).unwrap().is_identity());
    let d2 = ctx("D2");
    let x = root_element(&d2, &d2.root_system().simple_root(1), &q(3)).unwrap();
    let y = Embedding::Leading.apply(&b2, &[x.matrix()]).unwrap();
    assert_eq!(y.matrix().block(1, 1, 4, 4), *x.matrix());
    let c3 = ctx("C3");
    let c1 = ctx("C1");
    let z = root_element(&c1, &Root(vec![1]), &q(2)).unwrap();
    let w = Embedding::Leading.apply(&c3, &[z.matrix()]).unwrap();
    assert_eq!(w.matrix()[(0, 3)], q(2));
    assert!(Embedding::Leading.apply(&c3, &[&ExactMatrix::identity(3)]).is_err());
    let b3 = ctx("B3");
    let minus = ExactMatrix::identity(2).neg();
    let id3 = ExactMatrix::identity(3);
    assert!(Embedding::BTimesD.apply(&b3, &[&id3, &minus]).is_err());
    let id5 = ExactMatrix::identity(5);
    let e = Embedding::BTimesD.apply(&b3, &[&id5, &minus]).unwrap();
    assert_eq!(e.matrix()[(3, 3)], q(-1));
    assert_eq!(e.matrix()[(6, 6)], q(-1));
}

#[test]
fn mixed_decomposition_splits_involution() {
    let c2 = ctx("C2");
    let s = GroupElement::new(&c2, ExactMatrix::diagonal(&[q(-1), q(1), q(-1), q(1)])).unwrap();
    let u = root_element(&c2, &Root(vec![0, 1]), &q(1)).unwrap();
    // x_{alpha_2} lives on the e_2 coordinates, where s is 1
    let g = s.mul(&u);
    let d = mixed_decomposition(&g).unwrap();
    assert_eq!(d.semisimple, s);
    assert_eq!(d.unipotent, u);
    assert_eq!(d.eigen_multiplicities(), (2, 2));
    assert!(d.unipotent_trivial_on(-1));
    assert!(!d.unipotent_trivial_on(1));
    assert!(is_semisimple(&s, &[(q(1), 2), (q(-1), 2)]));
    assert!(!is_semisimple(&g, &[(q(1), 2), (q(-1), 2)]));
}
