//! Records for the exceptional groups, with root-datum dimension oracles.

use crate::roots::{CartanType, Family, Root, RootSystem};

use super::{AtlasError, ClassKind, Draft, Recipe, ZFactor};

/// Dimension of the nilpotent orbit of `sum e_beta` over strongly orthogonal
/// roots: `#Phi - #Phi_0 - #Phi_1` for the grading by `sum beta^vee`.
pub fn graded_dim_oracle(rs: &RootSystem, roots: &[Root]) -> Result<usize, AtlasError> {
    for (i, a) in roots.iter().enumerate() {
        rs.check_root(a)?;
        for b in &roots[..i] {
            let sum = Root(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect());
            let diff = Root(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect());
            if rs.inner(a, b) != 0 || rs.is_root(&sum) || rs.is_root(&diff) || a == b {
                return Err(AtlasError::NotOrthogonal);
            }
        }
    }
    let mut low = 0;
    for a in rs.all_roots() {
        let grade: i64 = roots.iter().map(|b| rs.pairing(&a, b)).sum();
        if grade == 0 || grade == 1 {
            low += 1;
        }
    }
    Ok(2 * rs.positive_roots().len() - low)
}

/// Dimension of the class of `exp(2 pi i coweight_index / order)`: the
/// number of roots whose `index` coordinate is not divisible by `order`.
pub fn coweight_dim_oracle(rs: &RootSystem, index: usize, order: u32) -> usize {
    2 * rs.positive_roots().iter().filter(|a| a.0[index - 1] % order as i64 != 0).count()
}

const E7_D4: [i64; 7] = [0, 1, 1, 2, 1, 0, 0];
const E8_D4: [i64; 8] = [0, 1, 1, 2, 1, 0, 0, 0];

fn simple(rank: usize, i: usize) -> Vec<i64> {
    Root::simple(rank, i).0
}

fn unipotent(label: &str, dim: usize, z: Vec<ZFactor>, roots: Vec<Vec<i64>>) -> Draft {
    Draft::new(ClassKind::Unipotent, label, dim, "root datum", z, Recipe::GradedRoots(roots)).orbit(label)
}

fn semisimple(label: &str, dim: usize, z: Vec<ZFactor>, index: usize, order: u32) -> Draft {
    Draft::new(ClassKind::Semisimple, label, dim, "root datum", z, Recipe::Coweight { index, order }).semisimple(label, 1, &[])
}

pub(crate) fn drafts(ty: CartanType) -> Vec<Draft> {
    use ZFactor::{Longest, Simple};
    let rs = RootSystem::new(ty);
    let n = ty.rank;
    let hr = |i: usize| ZFactor::beta(i);
    let beta_root = |i: usize| {
        let c = crate::roots::cascade(&rs, crate::roots::CascadeKind::Beta).expect("beta cascade");
        c.get(&format!("beta_{i}")).expect("cascade root").0.clone()
    };
    let gamma_root = |i: usize| {
        let c = crate::roots::cascade(&rs, crate::roots::CascadeKind::Gamma).expect("gamma cascade");
        c.get(&format!("gamma_{i}")).expect("cascade root").0.clone()
    };
    match (ty.family, n) {
        (Family::E, 6) => vec![
            unipotent("A1", 22, vec![hr(1)], vec![beta_root(1)]),
            unipotent("2A1", 32, vec![hr(1), hr(2)], vec![beta_root(1), beta_root(2)]),
            unipotent("3A1", 40, vec![Longest], vec![beta_root(1), beta_root(2), beta_root(3)]),
            semisimple("p_1", 40, vec![Longest], 2, 2),
            semisimple("p_2", 32, vec![hr(1), hr(2)], 1, 2),
        ],
        (Family::E, 7) => {
            let d4 = ZFactor::Root(E7_D4.to_vec());
            let head = || vec![hr(1), hr(2), d4.clone(), Simple(3), Simple(2)];
            let mut w1 = head();
            w1.push(Simple(5));
            let mut w2 = head();
            w2.push(Simple(7));
            vec![
                unipotent("A1", 34, vec![hr(1)], vec![beta_root(1)]),
                unipotent("2A1", 52, vec![hr(1), hr(2)], vec![beta_root(1), beta_root(2)]),
                unipotent(
                    "(3A1)'",
                    64,
                    vec![hr(1), hr(2), d4.clone(), Simple(3)],
                    vec![beta_root(1), E7_D4.to_vec(), simple(7, 3)],
                ),
                unipotent("(3A1)''", 54, vec![hr(1), hr(2), Simple(7)], vec![beta_root(1), beta_root(2), simple(7, 7)]),
                unipotent(
                    "4A1",
                    70,
                    vec![Longest],
                    vec![beta_root(1), beta_root(2), simple(7, 2), simple(7, 7)],
                )
                .witness(w1)
                .witness(w2),
                semisimple("q_1", 70, vec![Longest], 2, 2),
                semisimple("q_2", 64, vec![hr(1), hr(2), d4, Simple(3)], 1, 2),
                semisimple("q_3", 54, vec![hr(1), hr(2), Simple(7)], 7, 2),
            ]
        }
        (Family::E, 8) => {
            let d4 = ZFactor::Root(E8_D4.to_vec());
            let head = || vec![hr(1), hr(2), hr(3), d4.clone()];
            let mut w1 = head();
            w1.extend([Simple(2), Simple(5)]);
            let mut w2 = head();
            w2.extend([Simple(3), Simple(7)]);
            vec![
                unipotent("A1", 58, vec![hr(1)], vec![beta_root(1)]),
                unipotent("2A1", 92, vec![hr(1), hr(2)], vec![beta_root(1), beta_root(2)]),
                unipotent(
                    "3A1",
                    112,
                    vec![hr(1), hr(2), hr(3), Simple(7)],
                    vec![beta_root(1), beta_root(2), beta_root(3)],
                ),
                unipotent(
                    "4A1",
                    128,
                    vec![Longest],
                    vec![beta_root(1), beta_root(2), beta_root(3), E8_D4.to_vec()],
                )
                .witness(w1)
                .witness(w2),
                semisimple("r_1", 128, vec![Longest], 1, 2),
                semisimple("r_2", 112, vec![hr(1), hr(2), hr(3), Simple(7)], 8, 2),
            ]
        }
        (Family::F, 4) => vec![
            unipotent("A1", 16, vec![hr(1)], vec![beta_root(1)]),
            unipotent("~A1", 22, vec![hr(1), hr(2)], vec![beta_root(1), beta_root(2)]),
            unipotent("A1+~A1", 28, vec![Longest], vec![beta_root(1), gamma_root(4)]),
            semisimple("f_1", 28, vec![Longest], 1, 2),
            semisimple("f_2", 16, vec![ZFactor::gamma(1)], 4, 2),
            Draft::new(ClassKind::Mixed, "f_2*x_beta1(1)", 28, "root datum", vec![Longest], Recipe::WeylOnly)
                .semisimple("f_2", 1, &[])
                .orbit("A1")
                .witness(vec![Longest, Simple(2)])
                .witness(vec![Longest, ZFactor::Root(vec![0, 0, 1, 1])]),
        ],
        (Family::G, 2) => vec![
            unipotent("A1", 6, vec![hr(1)], vec![beta_root(1)]),
            unipotent("~A1", 8, vec![Longest], vec![gamma_root(1)])
                .witness(vec![hr(1)])
                .witness(vec![ZFactor::gamma(1)]),
            semisimple("e_1", 8, vec![Longest], 2, 2),
            semisimple("e_2", 6, vec![ZFactor::gamma(1)], 1, 3),
        ],
        _ => unreachable!("exceptional type {ty}"),
    }
}
