//! Block embeddings between classical groups, the diagram automorphism of
//! `SO_{2n}`, and random conjugation.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{random_scalar, ExactMatrix, Scalar, SeedStream};
use crate::roots::Family;

use super::lie::{root_element, torus_element};
use super::{GroupContext, GroupElement, GroupError};

/// How smaller blocks are placed into a target group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Embedding {
    /// One block on the leading weights `e_1..e_k` (and the zero weight in
    /// type B), identity elsewhere. An even block in type B is an
    /// `SO_{2k}` placed as `diag(1, X)`.
    Leading,
    /// `SO_{2p+1} x SO_{2q}` into `SO_{2n+1}` with `n = p + q`: the first block
    /// on weights `0, e_1..e_p`, the second on `e_{p+1}..e_n`.
    BTimesD,
}

/// Target basis index of each basis vector of a block of size `s`.
fn leading_map(target: &GroupContext, s: usize, offset: usize) -> Result<Vec<usize>, GroupError> {
    let n = target.rank();
    let bad = || GroupError::IncompatibleRecipe(format!("block of size {s} does not fit {}", target.cartan_type()));
    match target.family() {
        Family::A => (s <= n + 1).then(|| (0..s).collect()).ok_or_else(bad),
        Family::B if s % 2 == 1 && offset == 0 => {
            let k = s / 2;
            if k > n {
                return Err(bad());
            }
            Ok(std::iter::once(0).chain((0..k).map(|i| 1 + i)).chain((0..k).map(|i| 1 + n + i)).collect())
        }
        Family::B | Family::C | Family::D if s.is_multiple_of(2) => {
            let k = s / 2;
            if k + offset > n {
                return Err(bad());
            }
            let shift = usize::from(target.family() == Family::B);
            Ok((0..k)
                .map(|i| shift + offset + i)
                .chain((0..k).map(|i| shift + n + offset + i))
                .collect())
        }
        _ => Err(bad()),
    }
}

fn place(out: &mut ExactMatrix, block: &ExactMatrix, map: &[usize]) {
    for i in 0..map.len() {
        for j in 0..map.len() {
            out[(map[i], map[j])] = block[(i, j)].clone();
        }
    }
}

impl Embedding {
    pub fn apply(&self, target: &Arc<GroupContext>, blocks: &[&ExactMatrix]) -> Result<GroupElement, GroupError> {
        let mut out = ExactMatrix::identity(target.size());
        match (self, blocks) {
            (Embedding::Leading, [x]) => {
                if target.family() == Family::C && x.rows() % 2 == 1 {
                    return Err(GroupError::IncompatibleRecipe("odd block in a symplectic group".into()));
                }
                place(&mut out, x, &leading_map(target, x.rows(), 0)?);
            }
            (Embedding::BTimesD, [b, d]) => {
                if target.family() != Family::B || b.rows() % 2 == 0 || d.rows() % 2 == 1 {
                    return Err(GroupError::IncompatibleRecipe("expects SO_odd x SO_even into SO_odd".into()));
                }
                let p = b.rows() / 2;
                if p + d.rows() / 2 != target.rank() {
                    return Err(GroupError::IncompatibleRecipe("block ranks do not add up".into()));
                }
                place(&mut out, b, &leading_map(target, b.rows(), 0)?);
                place(&mut out, d, &leading_map(target, d.rows(), p)?);
            }
            _ => return Err(GroupError::IncompatibleRecipe(format!("{self:?} with {} blocks", blocks.len()))),
        }
        GroupElement::new(target, out)
    }
}

/// Swap of the basis vectors of weight `e_n` and `-e_n`, as a matrix.
fn tau_matrix(ctx: &GroupContext) -> ExactMatrix {
    let n = ctx.rank();
    let mut p = ExactMatrix::identity(2 * n);
    for (i, j) in [(n - 1, n - 1), (2 * n - 1, 2 * n - 1)] {
        p[(i, j)] = Scalar::zero();
    }
    p[(n - 1, 2 * n - 1)] = Scalar::one();
    p[(2 * n - 1, n - 1)] = Scalar::one();
    p
}

/// Diagram automorphism of `SO_{2n}` exchanging `alpha_{n-1}` and `alpha_n`:
/// conjugation by the reflection swapping `e_n` and `-e_n`.
pub fn tau_hat(g: &GroupElement) -> Result<GroupElement, GroupError> {
    let ctx = g.context();
    if ctx.family() != Family::D {
        return Err(GroupError::WrongFamily(format!("tau_hat needs type D, got {}", ctx.cartan_type())));
    }
    let p = tau_matrix(ctx);
    Ok(GroupElement::trusted(ctx, p.mul(g.matrix()).mul(&p)))
}

/// `h g h^-1` for a random product `h` of `steps` root and torus elements
/// with parameters of the given height. Height 0 returns `g`.
pub fn random_conjugate(g: &GroupElement, stream: &mut SeedStream, steps: usize, height: u32) -> GroupElement {
    let ctx = g.context();
    let roots: Vec<_> = ctx.root_system().all_roots().collect();
    let mut out = g.clone();
    for _ in 0..steps {
        if stream.below(4) == 0 {
            let params: Vec<Scalar> = (0..ctx.rank()).map(|_| random_scalar(stream, height, true)).collect();
            let t = torus_element(ctx, &params).expect("nonzero parameters");
            out = out.conjugate_by(&t);
        } else {
            let a = &roots[stream.below(roots.len())];
            let s = random_scalar(stream, height, false);
            if s.is_zero() {
                continue;
            }
            let x = root_element(ctx, a, &s).unwrap();
            let xinv = root_element(ctx, a, &-&s).unwrap();
            out = x.mul(&out).mul(&xinv);
        }
    }
    out
}
