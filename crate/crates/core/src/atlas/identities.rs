//! Matrix factorizations placing unipotent representatives in their cells.

use std::sync::Arc;

use crate::arith::ExactMatrix;
use crate::groups::{GroupContext, GroupElement};
use crate::roots::Family;

use super::classical::{d_borel_factor, d_unipotent, d_weyl_factor};

/// `lhs = product of factors`, with the factors in `borel` claimed to lie in
/// the standard Borel subgroup.
#[derive(Clone, Debug)]
pub struct MatrixIdentity {
    pub name: String,
    pub group: String,
    pub lhs: ExactMatrix,
    pub factors: Vec<ExactMatrix>,
    pub borel: Vec<usize>,
}

impl MatrixIdentity {
    pub fn product(&self) -> ExactMatrix {
        let mut p = ExactMatrix::identity(self.lhs.rows());
        for f in &self.factors {
            p = p.mul(f);
        }
        p
    }

    /// The product matches and each claimed factor is an upper triangular
    /// group element in the Borel-adapted basis.
    pub fn holds(&self, ctx: &Arc<GroupContext>) -> bool {
        if self.product() != self.lhs {
            return false;
        }
        self.borel.iter().all(|&i| match GroupElement::new(ctx, self.factors[i].clone()) {
            Ok(g) => {
                let b = g.in_borel_basis();
                (0..b.rows()).all(|r| (0..r).all(|c| b[(r, c)].is_zero()))
            }
            Err(_) => false,
        })
    }
}

fn corner(n: usize, k: usize, sign: i64) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    for i in 0..k {
        m[(i, i)] = crate::arith::Scalar::from_int(sign);
    }
    m
}

fn blocks(a: &ExactMatrix, b: &ExactMatrix, c: &ExactMatrix, d: &ExactMatrix) -> ExactMatrix {
    let n = a.rows();
    let mut m = ExactMatrix::zeros(2 * n, 2 * n);
    m.set_block(0, 0, a);
    m.set_block(0, n, b);
    m.set_block(n, 0, c);
    m.set_block(n, n, d);
    m
}

/// Factorizations `A_k = U_k w_k B_k` in `Sp_{2n}` and `u_k = H_k w_k H_k`
/// in `SO_{2n}`, for every admissible `k`.
pub fn proof_identities(ctx: &Arc<GroupContext>) -> Vec<MatrixIdentity> {
    let n = ctx.rank();
    let group = ctx.cartan_type().to_string();
    let id = ExactMatrix::identity(n);
    let zero = ExactMatrix::zeros(n, n);
    match ctx.family() {
        Family::C => (1..=n)
            .map(|k| {
                let ik = corner(n, k, 1);
                let a = blocks(&id, &zero, &ik, &id);
                let u = blocks(&id, &ik, &zero, &id);
                let rest = id.sub(&ik);
                let w = blocks(&rest, &ik, &ik.neg(), &rest);
                let dk = id.sub(&ik).sub(&ik);
                let b = blocks(&dk, &ik.neg(), &zero, &dk);
                MatrixIdentity { name: format!("A_{k} = U_{k} w_{k} B_{k}"), group: group.clone(), lhs: a, factors: vec![u, w, b], borel: vec![0, 2] }
            })
            .collect(),
        Family::D => (1..=n / 2)
            .map(|k| {
                let h = d_borel_factor(k, n);
                MatrixIdentity {
                    name: format!("u_{k} = H_{k} w_{k} H_{k}"),
                    group: group.clone(),
                    lhs: d_unipotent(k, n),
                    factors: vec![h.clone(), d_weyl_factor(k, n), h],
                    borel: vec![0, 2],
                }
            })
            .collect(),
        _ => Vec::new(),
    }
}
