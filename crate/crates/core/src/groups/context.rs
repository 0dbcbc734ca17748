use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith::{ExactMatrix, Scalar};
use crate::roots::{CartanType, Family, Root, RootSystem};

use super::GroupError;

/// A classical group `SL_{n+1}`, `SO_{2n+1}`, `Sp_{2n}` or `SO_{2n}` in its
/// defining representation, with a fixed invariant form.
///
/// Basis conventions: for types B, C, D the basis vector of weight `e_i`
/// precedes the one of weight `-e_i` by `n` places, and type B puts the
/// zero-weight vector first.
pub struct GroupContext {
    ty: CartanType,
    size: usize,
    gram: Option<ExactMatrix>,
    rs: Arc<RootSystem>,
    root_vectors: OnceLock<HashMap<Root, ExactMatrix>>,
}

impl fmt::Debug for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupContext({})", self.ty)
    }
}

fn block_form(n: usize, sign: i64, shift: usize) -> ExactMatrix {
    let m = 2 * n + shift;
    let mut g = ExactMatrix::zeros(m, m);
    if shift == 1 {
        g[(0, 0)] = Scalar::one();
    }
    for i in 0..n {
        g[(shift + i, shift + n + i)] = Scalar::one();
        g[(shift + n + i, shift + i)] = Scalar::from_int(sign);
    }
    g
}

impl GroupContext {
    pub fn new(family: Family, n: usize) -> Result<Arc<Self>, GroupError> {
        if !family.is_classical() {
            return Err(GroupError::BadRank(format!("{} is not a classical family", family.letter())));
        }
        let ty = CartanType::new(family, n).map_err(|e| GroupError::BadRank(e.to_string()))?;
        let (size, gram) = match family {
            Family::A => (n + 1, None),
            Family::B => (2 * n + 1, Some(block_form(n, 1, 1))),
            Family::C => (2 * n, Some(block_form(n, -1, 0))),
            _ => (2 * n, Some(block_form(n, 1, 0))),
        };
        Ok(Arc::new(GroupContext {
            ty,
            size,
            gram,
            rs: RootSystem::new(ty),
            root_vectors: OnceLock::new(),
        }))
    }

    pub fn from_label(label: &str) -> Result<Arc<Self>, GroupError> {
        let ty: CartanType = label.parse().map_err(|e: crate::roots::RootError| GroupError::BadRank(e.to_string()))?;
        Self::new(ty.family, ty.rank)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn family(&self) -> Family {
        self.ty.family
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// Matrix size of the defining representation.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn gram(&self) -> Option<&ExactMatrix> {
        self.gram.as_ref()
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    fn shift(&self) -> usize {
        usize::from(self.family() == Family::B)
    }

    /// Basis index of weight `sign * e_i` (0-based `i`).
    pub fn weight_index(&self, i: usize, sign: i64) -> usize {
        match self.family() {
            Family::A => i,
            _ => self.shift() + i + if sign < 0 { self.rank() } else { 0 },
        }
    }

    /// Weight of a basis vector as `(i, sign)`; `None` for the zero weight.
    pub fn basis_weight(&self, idx: usize) -> Option<(usize, i64)> {
        if self.family() == Family::A {
            return Some((idx, 1));
        }
        let n = self.rank();
        match idx.checked_sub(self.shift()) {
            None => None,
            Some(j) if j < n => Some((j, 1)),
            Some(j) => Some((j - n, -1)),
        }
    }

    /// Basis order (new position to old index) in which the standard Borel
    /// subgroup is upper triangular: weights in decreasing order.
    pub fn borel_order(&self) -> Vec<usize> {
        let n = self.rank();
        match self.family() {
            Family::A => (0..self.size).collect(),
            Family::B => (1..=n).chain(std::iter::once(0)).chain((n + 1..=2 * n).rev()).collect(),
            _ => (0..n).chain((n..2 * n).rev()).collect(),
        }
    }

    /// Inverse of `borel_order`: old index to new position.
    pub fn borel_position(&self) -> Vec<usize> {
        let mut pos = vec![0; self.size];
        for (new, old) in self.borel_order().into_iter().enumerate() {
            pos[old] = new;
        }
        pos
    }

    pub(crate) fn root_vector_cache(&self) -> &HashMap<Root, ExactMatrix> {
        self.root_vectors.get_or_init(|| super::lie::build_root_vectors(self))
    }
}
