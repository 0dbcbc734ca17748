//! Jordan types, semisimple certificates and the Jordan decomposition of
//! elements whose semisimple part is an involution.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{poly_from_roots, ExactMatrix, Scalar};
use crate::roots::Family;

use super::{GroupElement, GroupError};

/// A partition, parts in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(2^k, 1^(m-2k))`.
    pub fn x_shape(k: usize, m: usize) -> Self {
        assert!(2 * k <= m);
        let mut p = vec![2; k];
        p.resize(m - k, 1);
        Partition(p)
    }

    /// `(3, 2^(2h), 1^(m-3-4h))`.
    pub fn z_shape(h: usize, m: usize) -> Self {
        assert!(3 + 4 * h <= m);
        let mut p = vec![3];
        p.resize(1 + 2 * h, 2);
        p.resize(m - 2 - 2 * h, 1);
        Partition(p)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    /// Transpose diagram.
    pub fn conjugate(&self) -> Self {
        Partition((1..=self.largest()).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }

    /// Parity rule for unipotent classes: even parts have even multiplicity
    /// in types B and D, odd parts in type C.
    pub fn valid_for(&self, family: Family) -> bool {
        let bad_parity = match family {
            Family::B | Family::D => 0,
            Family::C => 1,
            _ => return true,
        };
        let mut parts = self.0.clone();
        parts.dedup();
        parts.iter().all(|&p| p % 2 != bad_parity || self.multiplicity(p).is_multiple_of(2))
    }

    /// Spherical shapes for unipotent classes in classical groups: at most
    /// two columns, or in types B and D three columns with a single part 3.
    pub fn is_spherical_shape(&self, family: Family) -> bool {
        match self.largest() {
            0..=2 => true,
            3 => matches!(family, Family::B | Family::D) && self.multiplicity(3) == 1,
            _ => false,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = Vec::new();
        let mut parts = self.0.clone();
        parts.dedup();
        for p in parts {
            match self.multiplicity(p) {
                1 => out.push(p.to_string()),
                k => out.push(format!("{p}^{k}")),
            }
        }
        write!(f, "({})", out.join(","))
    }
}

fn minus_one(m: &ExactMatrix) -> ExactMatrix {
    m.sub(&ExactMatrix::identity(m.rows()))
}

pub fn is_unipotent(g: &GroupElement) -> bool {
    minus_one(g.matrix()).pow(g.context().size() as u32).is_zero()
}

/// Jordan block sizes of a unipotent element.
pub fn jordan_type(g: &GroupElement) -> Result<Partition, GroupError> {
    let m = g.context().size();
    let n = minus_one(g.matrix());
    let mut ranks = vec![m];
    let mut p = ExactMatrix::identity(m);
    while *ranks.last().unwrap() > 0 {
        p = p.mul(&n);
        let r = p.rank();
        if r == *ranks.last().unwrap() {
            return Err(GroupError::NotUnipotent);
        }
        ranks.push(r);
    }
    // ranks[k-1] - ranks[k] counts blocks of size at least k
    let conj: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(Partition(conj).conjugate())
}

/// `g` is diagonalizable with the given eigenvalues: the characteristic
/// polynomial matches and the product of `g - mu` over distinct `mu` vanishes.
pub fn is_semisimple(g: &GroupElement, eigenvalues: &[(Scalar, usize)]) -> bool {
    let mat = g.matrix();
    if mat.char_poly() != poly_from_roots(eigenvalues) {
        return false;
    }
    let m = mat.rows();
    let mut acc = ExactMatrix::identity(m);
    for (mu, _) in eigenvalues {
        acc = acc.mul(&mat.sub(&ExactMatrix::identity(m).scale(mu)));
    }
    acc.is_zero()
}

/// `g = s u = u s` with `s` an involution and `u` unipotent.
#[derive(Clone, Debug)]
pub struct MixedDecomposition {
    pub semisimple: GroupElement,
    pub unipotent: GroupElement,
}

impl MixedDecomposition {
    /// Multiplicities of the eigenvalues `+1` and `-1` of `s`.
    pub fn eigen_multiplicities(&self) -> (usize, usize) {
        let s = self.semisimple.matrix();
        let m = s.rows();
        let minus = s.sub(&ExactMatrix::identity(m)).rank();
        (m - minus, minus)
    }

    /// `u` acts trivially on the eigenspace of `s` for `sign`.
    pub fn unipotent_trivial_on(&self, sign: i64) -> bool {
        let m = self.semisimple.context().size();
        let id = ExactMatrix::identity(m);
        let proj = self.semisimple.matrix().scale(&Scalar::from_int(sign)).add(&id);
        minus_one(self.unipotent.matrix()).mul(&proj).is_zero()
    }
}

/// Jordan decomposition of `g` when `g^2` is unipotent, so that the
/// semisimple part squares to the identity. The unipotent part is the
/// square root of `g^2` given by the terminating binomial series.
pub fn mixed_decomposition(g: &GroupElement) -> Result<MixedDecomposition, GroupError> {
    let ctx = g.context();
    let m = ctx.size();
    let n = minus_one(&g.matrix().mul(g.matrix()));
    if !n.pow(m as u32).is_zero() {
        return Err(GroupError::NotUnipotent);
    }
    let mut u = ExactMatrix::identity(m);
    let mut coeff = Scalar::one();
    let mut term = ExactMatrix::identity(m);
    let half = Scalar::from_ratio(1, 2);
    for k in 1..m {
        let num = &half - &Scalar::from_int(k as i64 - 1);
        coeff = (&(&coeff * &num) / &Scalar::from_int(k as i64))?;
        term = term.mul(&n);
        if term.is_zero() {
            break;
        }
        u = u.add(&term.scale(&coeff));
    }
    let unipotent = GroupElement::new(ctx, u)?;
    let semisimple = GroupElement::new(ctx, g.mul(&unipotent.inverse()).into_matrix())?;
    debug_assert!(semisimple.pow(2).is_identity());
    debug_assert_eq!(semisimple.mul(&unipotent), unipotent.mul(&semisimple));
    Ok(MixedDecomposition { semisimple, unipotent })
}
