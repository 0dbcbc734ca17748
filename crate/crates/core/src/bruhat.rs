//! Bruhat cells of matrices in classical groups.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{ExactMatrix, SeedStream};
use crate::groups::{random_conjugate, GroupElement, GroupError};
use crate::roots::{Family, WeylElement};

#[derive(Debug, Clone, thiserror::Error)]
pub enum BruhatError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("observed cells have no Bruhat maximum: {0:?}")]
    IncomparableMaxima(Vec<WeylElement>),
}

/// Cell `B w B` containing a matrix, with the permutation found by
/// elimination in the Borel-adapted basis.
#[derive(Clone, Debug)]
pub struct CellResult {
    pub weyl: WeylElement,
    /// `perm[j]` is the row of the pivot in column `j` (adapted basis).
    pub perm: Vec<usize>,
}

impl CellResult {
    /// `r[i][j]`: rank of the corner of rows `i..` and columns `..=j`.
    pub fn rank_profile(&self) -> Vec<Vec<usize>> {
        let m = self.perm.len();
        (0..m)
            .map(|i| (0..m).map(|j| (0..=j).filter(|&b| self.perm[b] >= i).count()).collect())
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CellSummary {
    pub weyl_word: Vec<usize>,
    pub length: usize,
    pub rank_one_minus: usize,
}

impl From<&WeylElement> for CellSummary {
    fn from(w: &WeylElement) -> Self {
        CellSummary { weyl_word: w.reduced_word(), length: w.length(), rank_one_minus: w.rank_one_minus() }
    }
}

/// Permutation `p` with `a = b1 P b2` for upper triangular `b1`, `b2`, where
/// `P` sends basis vector `j` to `p[j]`.
pub fn gl_bruhat_permutation(a: &ExactMatrix) -> Vec<usize> {
    let m = a.rows();
    let mut a = a.clone();
    let mut perm = Vec::with_capacity(m);
    let mut used = vec![false; m];
    for j in 0..m {
        for (k, &p) in perm.clone().iter().enumerate() {
            if a[(p, j)].is_zero() {
                continue;
            }
            let c = (&a[(p, j)] / &a[(p, k)]).unwrap();
            for i in 0..m {
                if !a[(i, k)].is_zero() {
                    let d = &c * &a[(i, k)];
                    a[(i, j)] = &a[(i, j)] - &d;
                }
            }
        }
        let p = (0..m).rev().find(|&i| !used[i] && !a[(i, j)].is_zero()).expect("invertible matrix");
        for i in 0..p {
            if a[(i, j)].is_zero() {
                continue;
            }
            let c = (&a[(i, j)] / &a[(p, j)]).unwrap();
            for l in j..m {
                if !a[(p, l)].is_zero() {
                    let d = &c * &a[(p, l)];
                    a[(i, l)] = &a[(i, l)] - &d;
                }
            }
        }
        used[p] = true;
        perm.push(p);
    }
    perm
}

pub fn bruhat_cell(g: &GroupElement) -> Result<CellResult, GroupError> {
    let ctx = g.context();
    let perm = gl_bruhat_permutation(&g.in_borel_basis());
    let order = ctx.borel_order();
    let pos = ctx.borel_position();
    let old = |idx: usize| order[perm[pos[idx]]];
    let inconsistent = || GroupError::NotInGroup("cell permutation is not a Weyl group element".into());
    let n = ctx.rank();
    let images: Vec<(usize, i64)> = match ctx.family() {
        Family::A => (0..=n).map(|i| (old(i), 1)).collect(),
        _ => {
            if ctx.family() == Family::B && old(0) != 0 {
                return Err(inconsistent());
            }
            (0..n)
                .map(|i| {
                    let (j, s) = ctx.basis_weight(old(ctx.weight_index(i, 1))).ok_or_else(inconsistent)?;
                    if ctx.basis_weight(old(ctx.weight_index(i, -1))) != Some((j, -s)) {
                        return Err(inconsistent());
                    }
                    Ok((j, s))
                })
                .collect::<Result<_, _>>()?
        }
    };
    let weyl = WeylElement::from_signed_permutation(ctx.root_system(), &images).map_err(|_| inconsistent())?;
    Ok(CellResult { weyl, perm })
}

pub fn lies_over(g: &GroupElement, w: &WeylElement) -> Result<bool, GroupError> {
    Ok(bruhat_cell(g)?.weyl == *w)
}

pub fn in_opposite_borel(g: &GroupElement) -> bool {
    let b = g.in_borel_basis();
    let m = b.rows();
    (0..m).all(|i| (i + 1..m).all(|j| b[(i, j)].is_zero()))
}

/// Whether an element of `B^-` lies over `w_0 = -1`, read off the blocks
/// `F`, `F Sigma` (and `psi` in type B) of its matrix.
pub fn big_cell_check(g: &GroupElement) -> Result<bool, BruhatError> {
    let ctx = g.context();
    let n = ctx.rank();
    let ok_family = match ctx.family() {
        Family::B | Family::C => true,
        Family::D => n.is_multiple_of(2),
        _ => false,
    };
    if !ok_family {
        return Err(BruhatError::PreconditionViolated(format!("w0 is not -1 in {}", ctx.cartan_type())));
    }
    if !in_opposite_borel(g) {
        return Err(BruhatError::PreconditionViolated("element is not in B^-".into()));
    }
    let x = g.matrix();
    if ctx.family() != Family::B {
        return Ok(x.block(n, 0, n, n).leading_minors_nonzero());
    }
    let f = x.block(n + 1, n + 1, n, n);
    let f_sigma = x.block(n + 1, 1, n, n);
    if !f_sigma.leading_minors_nonzero() {
        return Ok(false);
    }
    let sigma = f.inverse().map_err(GroupError::from)?.mul(&f_sigma);
    let psi = x.block(0, 1, 1, n);
    let val = psi.mul(&sigma.inverse().map_err(GroupError::from)?).mul(&psi.transpose())[(0, 0)].clone();
    let sign = if n.is_multiple_of(2) { 0 } else { -2 };
    Ok(val == crate::arith::Scalar::from_int(sign))
}

/// Sampling budget for [`estimate_z`].
#[derive(Clone, Copy, Debug)]
pub struct EstimateOptions {
    pub samples: usize,
    /// Random factors per conjugator; `None` means four per positive root.
    pub steps: Option<usize>,
    pub height: u32,
}

impl Default for EstimateOptions {
    fn default() -> Self {
        EstimateOptions { samples: 8, steps: None, height: 5 }
    }
}

#[derive(Clone, Debug)]
pub struct ZEstimate {
    pub z: WeylElement,
    /// Cell of each random conjugate, in sample order.
    pub observed: Vec<WeylElement>,
}

impl ZEstimate {
    pub fn samples(&self) -> usize {
        self.observed.len()
    }

    /// Samples landing in the estimated cell.
    pub fn hits(&self) -> usize {
        self.observed.iter().filter(|w| **w == self.z).count()
    }
}

/// Bruhat maxima of a set of Weyl elements.
pub fn bruhat_maxima(ws: &[WeylElement]) -> Vec<WeylElement> {
    let mut distinct: Vec<WeylElement> = Vec::new();
    for w in ws {
        if !distinct.contains(w) {
            distinct.push(w.clone());
        }
    }
    distinct
        .iter()
        .filter(|w| !distinct.iter().any(|v| v != *w && w.bruhat_leq(v).unwrap()))
        .cloned()
        .collect()
}

/// The dense cell of the class of `g`, estimated as the Bruhat maximum of
/// the cells of random conjugates. Sample `i` uses child stream `i`.
pub fn estimate_z(g: &GroupElement, stream: &SeedStream, opts: EstimateOptions) -> Result<ZEstimate, BruhatError> {
    if opts.samples == 0 {
        return Err(BruhatError::PreconditionViolated("at least one sample is needed".into()));
    }
    let steps = opts.steps.unwrap_or(4 * g.context().root_system().positive_roots().len());
    let observed = (0..opts.samples)
        .into_par_iter()
        .map(|i| {
            let mut s = stream.child(i as u64);
            bruhat_cell(&random_conjugate(g, &mut s, steps, opts.height)).map(|c| c.weyl)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut maxima = bruhat_maxima(&observed);
    if maxima.len() != 1 {
        maxima.sort_by_key(|w| w.reduced_word());
        return Err(BruhatError::IncomparableMaxima(maxima));
    }
    Ok(ZEstimate { z: maxima.pop().unwrap(), observed })
}
