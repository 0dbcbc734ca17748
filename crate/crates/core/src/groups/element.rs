use std::fmt;
use std::sync::Arc;

use crate::arith::{ExactMatrix, Scalar};
use crate::roots::{Family, WeylElement};

use super::lie::reflection_representative;
use super::{GroupContext, GroupError};

/// Matrix in a classical group, validated on construction.
#[derive(Clone)]
pub struct GroupElement {
    ctx: Arc<GroupContext>,
    mat: ExactMatrix,
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}\n{}", self.ctx, self.mat)
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.cartan_type() == other.ctx.cartan_type() && self.mat == other.mat
    }
}

/// Why `mat` fails to be in the group, if it does.
pub(crate) fn membership_error(ctx: &GroupContext, mat: &ExactMatrix) -> Option<String> {
    let m = ctx.size();
    if mat.rows() != m || mat.cols() != m {
        return Some(format!("expected a {m}x{m} matrix, got {}x{}", mat.rows(), mat.cols()));
    }
    if let Some(g) = ctx.gram() {
        let lhs = mat.transpose().mul(g).mul(mat);
        for i in 0..m {
            for j in 0..m {
                if lhs[(i, j)] != g[(i, j)] {
                    return Some(format!("form violated at ({i},{j})"));
                }
            }
        }
        if ctx.family() == Family::C {
            return None;
        }
    }
    match mat.det() {
        Ok(d) if d.is_one() => None,
        Ok(d) => Some(format!("determinant is {d}, expected 1")),
        Err(e) => Some(e.to_string()),
    }
}

impl GroupElement {
    pub fn new(ctx: &Arc<GroupContext>, mat: ExactMatrix) -> Result<Self, GroupError> {
        match membership_error(ctx, &mat) {
            Some(msg) => Err(GroupError::NotInGroup(msg)),
            None => Ok(GroupElement { ctx: ctx.clone(), mat }),
        }
    }

    /// Skip validation; for products of known group elements.
    pub(crate) fn trusted(ctx: &Arc<GroupContext>, mat: ExactMatrix) -> Self {
        debug_assert!(membership_error(ctx, &mat).is_none(), "{:?} rejects\n{}", ctx, mat);
        GroupElement { ctx: ctx.clone(), mat }
    }

    pub fn from_ints(ctx: &Arc<GroupContext>, rows: &[Vec<i64>]) -> Result<Self, GroupError> {
        Self::new(ctx, ExactMatrix::from_ints(rows))
    }

    pub fn identity(ctx: &Arc<GroupContext>) -> Self {
        GroupElement { ctx: ctx.clone(), mat: ExactMatrix::identity(ctx.size()) }
    }

    /// Scalar matrix `c I`, if central in the group.
    pub fn central(ctx: &Arc<GroupContext>, c: &Scalar) -> Result<Self, GroupError> {
        Self::new(ctx, ExactMatrix::identity(ctx.size()).scale(c))
    }

    pub fn context(&self) -> &Arc<GroupContext> {
        &self.ctx
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ExactMatrix {
        self.mat
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ctx.cartan_type(), other.ctx.cartan_type(), "mixed groups");
        GroupElement { ctx: self.ctx.clone(), mat: self.mat.mul(&other.mat) }
    }

    pub fn inverse(&self) -> Self {
        let mat = match self.ctx.gram() {
            Some(g) => g.inverse().expect("invertible form").mul(&self.mat.transpose()).mul(g),
            None => self.mat.inverse().expect("group elements are invertible"),
        };
        GroupElement { ctx: self.ctx.clone(), mat }
    }

    /// Whether some entry involves the formal parameter `t`.
    pub fn has_parameter(&self) -> bool {
        self.mat.entries().iter().any(|x| !x.is_constant())
    }

    /// The element with `t` replaced by `v`, checked for membership again.
    pub fn specialize_t(&self, v: &Scalar) -> Result<Self, GroupError> {
        let mat = self.mat.map(|x| x.eval_t(v))?;
        Self::new(&self.ctx, mat)
    }

    pub fn conjugate_by(&self, x: &Self) -> Self {
        x.mul(self).mul(&x.inverse())
    }

    pub fn pow(&self, e: u32) -> Self {
        GroupElement { ctx: self.ctx.clone(), mat: self.mat.pow(e) }
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }

    /// One nonzero entry in every row and column.
    pub fn is_monomial(&self) -> bool {
        let m = self.ctx.size();
        (0..m).all(|i| self.mat.row(i).iter().filter(|x| !x.is_zero()).count() == 1)
            && (0..m).all(|j| (0..m).filter(|&i| !self.mat[(i, j)].is_zero()).count() == 1)
    }

    /// Matrix in the basis where the standard Borel subgroup is upper triangular.
    pub fn in_borel_basis(&self) -> ExactMatrix {
        self.mat.permute_basis(&self.ctx.borel_position())
    }

    /// Product of simple reflection representatives along a reduced word.
    pub fn weyl_representative(ctx: &Arc<GroupContext>, w: &WeylElement) -> Result<Self, GroupError> {
        if w.root_system().cartan_type() != ctx.cartan_type() {
            return Err(GroupError::NotInWeylImage(format!("{w:?} is not in W({})", ctx.cartan_type())));
        }
        let rs = ctx.root_system();
        let mut g = Self::identity(ctx);
        for i in w.reduced_word() {
            g = g.mul(&reflection_representative(ctx, &rs.simple_root(i))?);
        }
        Ok(g)
    }

    /// Representative of the Weyl element acting by `e_i -> sign * e_j` on
    /// the weights, for `images[i] = (j, sign)`.
    pub fn signed_permutation_representative(
        ctx: &Arc<GroupContext>,
        images: &[(usize, i64)],
    ) -> Result<Self, GroupError> {
        let w = WeylElement::from_signed_permutation(ctx.root_system(), images)
            .map_err(|e| GroupError::NotInWeylImage(format!("{images:?}: {e}")))?;
        Self::weyl_representative(ctx, &w)
    }
}
