//! Root vectors, root subgroups and the Lie algebra of a classical group.

use std::collections::HashMap;
use std::sync::Arc;

use crate::arith::{ExactMatrix, Scalar};
use crate::roots::{Family, Root};

use super::{GroupContext, GroupElement, GroupError};

fn unit(m: usize, i: usize, j: usize) -> ExactMatrix {
    let mut e = ExactMatrix::zeros(m, m);
    e[(i, j)] = Scalar::one();
    e
}

/// Row and column of the leading matrix unit of the root vector of a
/// positive root.
fn anchor(ctx: &GroupContext, a: &Root) -> (usize, usize) {
    let v = ctx.root_system().ambient(a);
    let nz: Vec<(usize, i64)> = v.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| (i, *c)).collect();
    if ctx.family() == Family::A {
        let x = nz.iter().find(|p| p.1 > 0).unwrap().0;
        let y = nz.iter().find(|p| p.1 < 0).unwrap().0;
        return (x, y);
    }
    match nz.as_slice() {
        [(i, c)] if c.abs() == 1 => (ctx.weight_index(*i, c.signum()), 0),
        [(i, c)] => (ctx.weight_index(*i, c.signum()), ctx.weight_index(*i, -c.signum())),
        [(i, a), (j, b)] => (ctx.weight_index(*i, *a), ctx.weight_index(*j, -*b)),
        _ => unreachable!("classical roots have at most two nonzero coordinates"),
    }
}

pub(crate) fn build_root_vectors(ctx: &GroupContext) -> HashMap<Root, ExactMatrix> {
    let m = ctx.size();
    let mut out = HashMap::new();
    for a in ctx.root_system().positive_roots() {
        let (x, y) = anchor(ctx, a);
        let e = match ctx.gram() {
            None => unit(m, x, y),
            Some(g) => {
                let ginv = g.inverse().expect("invertible form");
                let raw = unit(m, x, y).sub(&ginv.mul(&unit(m, y, x)).mul(g));
                let c = raw[(x, y)].inv().expect("anchor entry");
                raw.scale(&c)
            }
        };
        let et = e.transpose();
        let h = e.mul(&et).sub(&et.mul(&e));
        let c = (&Scalar::from_int(2) / &(&h[(x, x)] - &h[(y, y)])).expect("nondegenerate pairing");
        out.insert(a.neg(), et.scale(&c));
        out.insert(a.clone(), e);
    }
    out
}

impl GroupContext {
    /// Chevalley generator `e_alpha` in the defining representation.
    pub fn root_vector(&self, a: &Root) -> Result<&ExactMatrix, GroupError> {
        self.root_vector_cache().get(a).ok_or_else(|| GroupError::NotARoot(a.to_string()))
    }

    /// Basis of the Lie algebra: root vectors followed by a torus basis.
    pub fn lie_basis(&self) -> Vec<ExactMatrix> {
        let m = self.size();
        let mut out: Vec<ExactMatrix> =
            self.root_system().all_roots().map(|a| self.root_vector(&a).unwrap().clone()).collect();
        for i in 0..self.rank() {
            let (p, q) = match self.family() {
                Family::A => (i, i + 1),
                _ => (self.weight_index(i, 1), self.weight_index(i, -1)),
            };
            out.push(unit(m, p, p).sub(&unit(m, q, q)));
        }
        out
    }

    pub fn lie_dim(&self) -> usize {
        self.root_system().positive_roots().len() * 2 + self.rank()
    }

    /// Whether `x` lies in the Lie algebra.
    pub fn in_lie_algebra(&self, x: &ExactMatrix) -> bool {
        if x.rows() != self.size() || x.cols() != self.size() {
            return false;
        }
        match self.gram() {
            None => x.trace().is_zero(),
            Some(g) => x.transpose().mul(g).add(&g.mul(x)).is_zero(),
        }
    }
}

/// Element of the Lie algebra of a classical group.
#[derive(Clone, Debug)]
pub struct LieAlgebraElement {
    ctx: Arc<GroupContext>,
    mat: ExactMatrix,
}

impl LieAlgebraElement {
    pub fn new(ctx: &Arc<GroupContext>, mat: ExactMatrix) -> Result<Self, GroupError> {
        if !ctx.in_lie_algebra(&mat) {
            return Err(GroupError::NotInGroup("matrix is not in the Lie algebra".into()));
        }
        Ok(LieAlgebraElement { ctx: ctx.clone(), mat })
    }

    pub fn context(&self) -> &Arc<GroupContext> {
        &self.ctx
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.mat
    }
}

/// `exp(x)` for nilpotent `x`.
pub(crate) fn exp_nilpotent(x: &ExactMatrix) -> ExactMatrix {
    let mut acc = ExactMatrix::identity(x.rows());
    let mut term = ExactMatrix::identity(x.rows());
    for k in 1..=x.rows() {
        term = term.mul(x).scale(&Scalar::from_ratio(1, k as i64));
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
    }
    acc
}

/// `x_alpha(s)`.
pub fn root_element(ctx: &Arc<GroupContext>, a: &Root, s: &Scalar) -> Result<GroupElement, GroupError> {
    let e = ctx.root_vector(a)?;
    Ok(GroupElement::trusted(ctx, exp_nilpotent(&e.scale(s))))
}

/// Diagonal torus element with `e_i`-weight value `params[i]`; for type A
/// the last entry is fixed by the determinant.
pub fn torus_element(ctx: &Arc<GroupContext>, params: &[Scalar]) -> Result<GroupElement, GroupError> {
    let n = ctx.rank();
    if params.len() != n {
        return Err(GroupError::NotInGroup(format!("torus needs {n} parameters")));
    }
    let mut d = vec![Scalar::one(); ctx.size()];
    match ctx.family() {
        Family::A => {
            let mut prod = Scalar::one();
            for (i, p) in params.iter().enumerate() {
                d[i] = p.clone();
                prod = &prod * p;
            }
            d[n] = prod.inv()?;
        }
        _ => {
            for (i, p) in params.iter().enumerate() {
                d[ctx.weight_index(i, 1)] = p.clone();
                d[ctx.weight_index(i, -1)] = p.inv()?;
            }
        }
    }
    Ok(GroupElement::trusted(ctx, ExactMatrix::diagonal(&d)))
}

/// `s_alpha-dot = x_alpha(1) x_{-alpha}(-1) x_alpha(1)`.
pub fn reflection_representative(ctx: &Arc<GroupContext>, a: &Root) -> Result<GroupElement, GroupError> {
    let one = Scalar::one();
    let p = root_element(ctx, a, &one)?;
    let q = root_element(ctx, &a.neg(), &-&one)?;
    Ok(p.mul(&q).mul(&p))
}

/// Class dimension `dim g - dim Lie(C(g))`, as the rank of `x -> gx - xg`.
pub fn class_dim(g: &GroupElement) -> usize {
    let ctx = g.context();
    let gm = g.matrix();
    let rows: Vec<Scalar> = ctx
        .lie_basis()
        .iter()
        .flat_map(|x| gm.mul(x).sub(&x.mul(gm)).entries().to_vec())
        .collect();
    let m = ctx.size();
    ExactMatrix::from_vec(ctx.lie_dim(), m * m, rows).rank()
}
