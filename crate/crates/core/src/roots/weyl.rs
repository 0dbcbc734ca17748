use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::arith::ExactMatrix;

use super::{Root, RootError, RootSystem};

/// Element of the Weyl group, stored as its integer action on simple-root
/// coordinates: column `j` holds `w(alpha_j)`.
#[derive(Clone)]
pub struct WeylElement {
    rs: Arc<RootSystem>,
    mat: Vec<i64>,
}

/// Groups above this order are never enumerated.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rs.cartan_type() == other.rs.cartan_type() && self.mat == other.mat
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W({})[{:?}]", self.rs.cartan_type(), self.reduced_word())
    }
}

impl WeylElement {
    pub fn identity(rs: &Arc<RootSystem>) -> Self {
        let r = rs.rank();
        let mut mat = vec![0; r * r];
        for i in 0..r {
            mat[i * r + i] = 1;
        }
        WeylElement { rs: rs.clone(), mat }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    fn r(&self) -> usize {
        self.rs.rank()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.mat[i * self.r() + j]
    }

    /// Action matrix as rows.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let r = self.r();
        (0..r).map(|i| self.mat[i * r..(i + 1) * r].to_vec()).collect()
    }

    /// Reflection in an arbitrary root.
    pub fn reflection(rs: &Arc<RootSystem>, a: &Root) -> Result<Self, RootError> {
        rs.check_root(a)?;
        let r = rs.rank();
        let mut mat = vec![0; r * r];
        for j in 0..r {
            let img = rs.reflect(a, &Root::simple(r, j + 1));
            for i in 0..r {
                mat[i * r + j] = img.0[i];
            }
        }
        Ok(WeylElement { rs: rs.clone(), mat })
    }

    /// Simple reflection `s_i`, 1-based.
    pub fn simple(rs: &Arc<RootSystem>, i: usize) -> Self {
        Self::reflection(rs, &rs.simple_root(i)).expect("simple root")
    }

    pub fn from_word(rs: &Arc<RootSystem>, word: &[usize]) -> Result<Self, RootError> {
        let mut w = Self::identity(rs);
        for &i in word {
            if i == 0 || i > rs.rank() {
                return Err(RootError::BadIndex(i));
            }
            w = w.times_simple(i);
        }
        Ok(w)
    }

    /// Product of reflections in the given roots, left to right.
    pub fn from_reflections(rs: &Arc<RootSystem>, roots: &[Root]) -> Result<Self, RootError> {
        let mut w = Self::identity(rs);
        for a in roots {
            w = w.compose(&Self::reflection(rs, a)?);
        }
        Ok(w)
    }

    /// Element sending `alpha_j` to `images[j]`; fails unless this is a
    /// genuine Weyl group element.
    pub fn from_simple_images(rs: &Arc<RootSystem>, images: &[Root]) -> Result<Self, RootError> {
        let r = rs.rank();
        if images.len() != r {
            return Err(RootError::BadIndex(images.len()));
        }
        let mut mat = vec![0; r * r];
        for (j, img) in images.iter().enumerate() {
            rs.check_root(img)?;
            for i in 0..r {
                mat[i * r + j] = img.0[i];
            }
        }
        let w = WeylElement { rs: rs.clone(), mat };
        if !w.preserves_form() || !w.preserves_roots() {
            return Err(RootError::NotARoot("image of the simple system".into()));
        }
        // Form-preserving root permutations outside W are diagram symmetries.
        let mut v = w.clone();
        while let Some(i) = v.right_descents().first().copied() {
            v = v.times_simple(i);
        }
        if !v.is_identity() {
            return Err(RootError::NotARoot("image of the simple system".into()));
        }
        Ok(w)
    }

    /// Element acting on the ambient basis by `e_i -> sign * e_j` for
    /// `images[i] = (j, sign)`; classical types only.
    pub fn from_signed_permutation(rs: &Arc<RootSystem>, images: &[(usize, i64)]) -> Result<Self, RootError> {
        if images.len() != rs.ambient_dim() {
            return Err(RootError::BadIndex(images.len()));
        }
        let d = rs.ambient_dim();
        let imgs = rs
            .simple_roots_ambient()
            .iter()
            .map(|a| {
                let mut v = vec![0; d];
                for (i, &c) in a.iter().enumerate() {
                    let (j, s) = images[i];
                    v[j] += s * c;
                }
                rs.root_from_ambient(&v).ok_or_else(|| RootError::NotARoot(format!("{v:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_simple_images(rs, &imgs)
    }

    /// Action on the ambient basis as `(target, sign)` pairs, when it is a
    /// signed permutation (always so for classical types).
    pub fn signed_permutation(&self) -> Option<Vec<(usize, i64)>> {
        let d = self.rs.ambient_dim();
        let word = self.reduced_word();
        (0..d)
            .map(|i| {
                let mut v = vec![0; d];
                v[i] = 1;
                for &s in word.iter().rev() {
                    v = self.rs.reflect_ambient(&self.rs.simple_root(s), &v)?;
                }
                let nz: Vec<usize> = (0..d).filter(|&k| v[k] != 0).collect();
                match nz.as_slice() {
                    [k] if v[*k].abs() == 1 => Some((*k, v[*k])),
                    _ => None,
                }
            })
            .collect()
    }

    pub fn apply(&self, v: &Root) -> Root {
        let r = self.r();
        Root((0..r).map(|i| (0..r).map(|j| self.mat[i * r + j] * v.0[j]).sum()).collect())
    }

    /// `self * other`, acting as `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.rs.cartan_type(), other.rs.cartan_type(), "mixed root systems");
        let r = self.r();
        let mut mat = vec![0; r * r];
        for i in 0..r {
            for k in 0..r {
                let a = self.mat[i * r + k];
                if a != 0 {
                    for j in 0..r {
                        mat[i * r + j] += a * other.mat[k * r + j];
                    }
                }
            }
        }
        WeylElement { rs: self.rs.clone(), mat }
    }

    pub fn try_compose(&self, other: &Self) -> Result<Self, RootError> {
        if self.rs.cartan_type() != other.rs.cartan_type() {
            return Err(RootError::MixedRootSystems);
        }
        Ok(self.compose(other))
    }

    /// `self * s_i` by a column operation.
    pub fn times_simple(&self, i: usize) -> Self {
        let r = self.r();
        let c = self.rs.cartan_matrix();
        let j = i - 1;
        let mut mat = self.mat.clone();
        for k in 0..r {
            let f = c[k][j];
            if f != 0 {
                for row in 0..r {
                    mat[row * r + k] -= f * self.mat[row * r + j];
                }
            }
        }
        WeylElement { rs: self.rs.clone(), mat }
    }

    /// True when `w(alpha_i) < 0`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        let r = self.r();
        (0..r).any(|row| self.mat[row * r + i - 1] < 0)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..=self.r()).filter(|&i| self.is_right_descent(i)).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.rs)
    }

    pub fn length(&self) -> usize {
        self.rs
            .positive_roots()
            .iter()
            .filter(|p| !self.apply(p).is_positive())
            .count()
    }

    pub fn rank_one_minus(&self) -> usize {
        let r = self.r();
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| i64::from(i == j) - self.mat[i * r + j]).collect())
            .collect();
        ExactMatrix::from_ints(&rows).rank()
    }

    /// `l(w) + rk(1 - w)`.
    pub fn length_plus_rank(&self) -> usize {
        self.length() + self.rank_one_minus()
    }

    /// Reduced word in 1-based simple indices, peeling the smallest right
    /// descent off the end at each step.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        while let Some(i) = (1..=self.r()).find(|&i| w.is_right_descent(i)) {
            word.push(i);
            w = w.times_simple(i);
        }
        word.reverse();
        word
    }

    pub fn inverse(&self) -> Self {
        let mut word = self.reduced_word();
        word.reverse();
        Self::from_word(&self.rs, &word).unwrap()
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    pub fn longest(rs: &Arc<RootSystem>) -> Self {
        let mut w = Self::identity(rs);
        while let Some(i) = (1..=rs.rank()).find(|&i| !w.is_right_descent(i)) {
            w = w.times_simple(i);
        }
        w
    }

    /// Bruhat order by the lifting property on a right descent of `w`.
    pub fn bruhat_leq(&self, w: &Self) -> Result<bool, RootError> {
        if self.rs.cartan_type() != w.rs.cartan_type() {
            return Err(RootError::MixedRootSystems);
        }
        let mut u = self.clone();
        let mut w = w.clone();
        let mut lu = u.length();
        let mut lw = w.length();
        loop {
            if lu > lw {
                return Ok(false);
            }
            if lw == 0 {
                return Ok(u.is_identity());
            }
            if lu == 0 {
                return Ok(true);
            }
            let s = w.right_descents()[0];
            w = w.times_simple(s);
            lw -= 1;
            if u.is_right_descent(s) {
                u = u.times_simple(s);
                lu -= 1;
            }
        }
    }

    /// All elements, by depth-first search of the canonical tree in which the
    /// parent of `v` is `v s_d` for its smallest right descent `d`.
    pub fn enumerate(rs: &Arc<RootSystem>) -> Result<Vec<Self>, RootError> {
        let order = rs.cartan_type().weyl_order();
        if order > ENUMERATION_LIMIT {
            return Err(RootError::GroupTooLarge(order));
        }
        let mut out = Vec::with_capacity(order as usize);
        let mut stack = vec![Self::identity(rs)];
        while let Some(w) = stack.pop() {
            for j in 1..=rs.rank() {
                if w.is_right_descent(j) {
                    continue;
                }
                let c = w.times_simple(j);
                if (1..j).all(|d| !c.is_right_descent(d)) {
                    stack.push(c);
                }
            }
            out.push(w);
        }
        debug_assert_eq!(out.len() as u128, order);
        Ok(out)
    }

    /// Whether `w_0` is the only element above every member of `ws`.
    ///
    /// Upper bounds form an upper set, so it suffices that no coatom
    /// `w_0 s_i` dominates all of `ws`.
    pub fn unique_common_upper_bound_is_w0(ws: &[Self]) -> Result<bool, RootError> {
        let Some(first) = ws.first() else {
            return Err(RootError::EmptyInput);
        };
        let rs = first.root_system();
        let w0 = Self::longest(rs);
        for i in 1..=rs.rank() {
            let coatom = w0.times_simple(i);
            let mut all = true;
            for w in ws {
                if !w.bruhat_leq(&coatom)? {
                    all = false;
                    break;
                }
            }
            if all {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same question answered by exhaustive enumeration.
    pub fn unique_common_upper_bound_is_w0_exhaustive(ws: &[Self]) -> Result<bool, RootError> {
        let Some(first) = ws.first() else {
            return Err(RootError::EmptyInput);
        };
        let rs = first.root_system();
        let w0 = Self::longest(rs);
        for v in Self::enumerate(rs)? {
            if v == w0 {
                continue;
            }
            let mut all = true;
            for w in ws {
                if !w.bruhat_leq(&v)? {
                    all = false;
                    break;
                }
            }
            if all {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Permutation of all roots (positives then negatives) induced by `self`.
    pub fn preserves_roots(&self) -> bool {
        self.rs.all_roots().all(|a| self.rs.is_root(&self.apply(&a)))
    }

    pub fn preserves_form(&self) -> bool {
        let r = self.r();
        (1..=r).all(|i| {
            (1..=r).all(|j| {
                let a = self.rs.simple_root(i);
                let b = self.rs.simple_root(j);
                self.rs.inner(&self.apply(&a), &self.apply(&b)) == self.rs.inner(&a, &b)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> Arc<RootSystem> {
        RootSystem::from_label(s).unwrap()
    }

    #[test]
    fn lengths_and_ranks() {
        let e6 = rs("E6");
        let w0 = WeylElement::longest(&e6);
        assert_eq!(w0.length(), 36);
        assert_eq!(w0.rank_one_minus(), 4);
        let c4 = rs("C4");
        assert_eq!(WeylElement::longest(&c4).rank_one_minus(), 4);
        let c2 = rs("C2");
        let s = WeylElement::reflection(&c2, &c2.highest_root()).unwrap();
        assert_eq!(s.length(), 3);
    }

    #[test]
    fn words() {
        let a2 = rs("A2");
        assert!(WeylElement::identity(&a2).reduced_word().is_empty());
        assert_eq!(WeylElement::simple(&a2, 1).reduced_word(), vec![1]);
        let w0 = WeylElement::longest(&a2);
        let word = w0.reduced_word();
        assert_eq!(word.len(), 3);
        assert_eq!(WeylElement::from_word(&a2, &word).unwrap(), w0);
    }

    #[test]
    fn enumeration_sizes() {
        for (l, n) in [("A3", 24), ("B3", 48), ("G2", 12), ("D4", 192), ("F4", 1152)] {
            let all = WeylElement::enumerate(&rs(l)).unwrap();
            assert_eq!(all.len(), n);
            let set: std::collections::HashSet<_> = all.into_iter().collect();
            assert_eq!(set.len(), n);
        }
        assert!(matches!(
            WeylElement::enumerate(&rs("E8")),
            Err(RootError::GroupTooLarge(_))
        ));
    }

    #[test]
    fn atoms_incomparable() {
        let a2 = rs("A2");
        let s1 = WeylElement::simple(&a2, 1);
        let s2 = WeylElement::simple(&a2, 2);
        assert!(!s1.bruhat_leq(&s2).unwrap());
        assert!(WeylElement::identity(&a2).bruhat_leq(&s2).unwrap());
        assert!(s1.bruhat_leq(&WeylElement::longest(&a2)).unwrap());
        let b2 = rs("B2");
        assert_eq!(s1.bruhat_leq(&WeylElement::simple(&b2, 1)), Err(RootError::MixedRootSystems));
    }

    #[test]
    fn upper_bounds() {
        let a2 = rs("A2");
        assert!(!WeylElement::unique_common_upper_bound_is_w0(&[WeylElement::identity(&a2)]).unwrap());
        assert!(WeylElement::unique_common_upper_bound_is_w0(&[WeylElement::longest(&a2)]).unwrap());
        let g2 = rs("G2");
        let sb = WeylElement::reflection(&g2, &g2.highest_root()).unwrap();
        let sg = WeylElement::reflection(&g2, &g2.highest_short_root()).unwrap();
        assert!(WeylElement::unique_common_upper_bound_is_w0(&[sb.clone(), sg.clone()]).unwrap());
        assert!(WeylElement::unique_common_upper_bound_is_w0_exhaustive(&[sb.clone(), sg]).unwrap());
        assert!(!WeylElement::unique_common_upper_bound_is_w0(&[sb]).unwrap());
    }
}
