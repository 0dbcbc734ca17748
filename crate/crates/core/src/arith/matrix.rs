//! Dense matrices over [`Scalar`].

use std::fmt;
use std::ops::{Index, IndexMut};

use super::{ArithError, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

/// Elimination cost heuristic: prefer small, `t`-free pivots.
fn pivot_cost(s: &Scalar) -> (bool, usize) {
    (!s.is_constant(), s.height())
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "shape mismatch");
        ExactMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, ArithError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ArithError::Shape("ragged rows".into()));
        }
        Ok(ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Self {
        let data: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect();
        Self::from_rows(data).expect("rectangular input")
    }

    pub fn diagonal(d: &[Scalar]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    /// Least common cyclotomic order over all entries.
    pub fn order(&self) -> u32 {
        self.data.iter().fold(1, |acc, s| super::cyclo::lcm(acc, s.order()))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j { x.is_one() } else { x.is_zero() }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] = &out[(i, j)] + &prod;
                    }
                }
            }
        }
        out
    }

    fn zip(&self, other: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| &acc + &self[(i, i)])
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// Apply `f` to every entry.
    pub fn map(&self, f: impl Fn(&Scalar) -> Result<Scalar, ArithError>) -> Result<Self, ArithError> {
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// Sub-block with the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        let rows: Vec<usize> = (r0..r0 + nr).collect();
        let cols: Vec<usize> = (c0..c0 + nc).collect();
        self.submatrix(&rows, &cols)
    }

    /// Copy `b` into `self` with top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    /// `P A P^-1` for the permutation sending basis vector `j` to `perm[j]`.
    pub fn permute_basis(&self, perm: &[usize]) -> Self {
        assert!(self.is_square() && perm.len() == self.rows);
        let mut out = Self::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(perm[i], perm[j])] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Row echelon form by Gaussian elimination; returns the pivot columns.
    fn echelon(&mut self) -> (Vec<usize>, bool) {
        let mut pivots = Vec::new();
        let mut swaps_odd = false;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let best = (r..self.rows)
                .filter(|&i| !self[(i, c)].is_zero())
                .min_by_key(|&i| pivot_cost(&self[(i, c)]));
            let Some(p) = best else { continue };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
                swaps_odd = !swaps_odd;
            }
            let inv = self[(r, c)].inv().expect("nonzero pivot");
            for i in r + 1..self.rows {
                if self[(i, c)].is_zero() {
                    continue;
                }
                let f = &self[(i, c)] * &inv;
                self[(i, c)] = Scalar::zero();
                for j in c + 1..self.cols {
                    if !self[(r, j)].is_zero() {
                        let d = &f * &self[(r, j)];
                        self[(i, j)] = &self[(i, j)] - &d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (pivots, swaps_odd)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.echelon().0.len()
    }

    pub fn det(&self) -> Result<Scalar, ArithError> {
        if !self.is_square() {
            return Err(ArithError::Shape("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let (piv, odd) = m.echelon();
        if piv.len() < self.rows {
            return Ok(Scalar::zero());
        }
        let mut d = (0..self.rows).fold(Scalar::one(), |acc, i| &acc * &m[(i, i)]);
        if odd {
            d = -d;
        }
        Ok(d)
    }

    /// All leading principal minors, computed independently.
    pub fn leading_principal_minors(&self) -> Vec<Scalar> {
        (1..=self.rows.min(self.cols))
            .map(|k| self.block(0, 0, k, k).det().unwrap())
            .collect()
    }

    /// True iff every leading principal minor is nonzero, via elimination
    /// without pivoting.
    pub fn leading_minors_nonzero(&self) -> bool {
        let n = self.rows.min(self.cols);
        let mut m = self.clone();
        for k in 0..n {
            if m[(k, k)].is_zero() {
                return false;
            }
            let inv = m[(k, k)].inv().unwrap();
            for i in k + 1..n {
                if m[(i, k)].is_zero() {
                    continue;
                }
                let f = &m[(i, k)] * &inv;
                for j in k + 1..n {
                    if !m[(k, j)].is_zero() {
                        let d = &f * &m[(k, j)];
                        m[(i, j)] = &m[(i, j)] - &d;
                    }
                }
            }
        }
        true
    }

    pub fn inverse(&self) -> Result<Self, ArithError> {
        if !self.is_square() {
            return Err(ArithError::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Self::identity(n));
        let (piv, _) = aug.echelon();
        if piv.len() < n || piv[n - 1] >= n {
            return Err(ArithError::Singular);
        }
        for r in (0..n).rev() {
            let inv = aug[(r, r)].inv()?;
            for j in r..2 * n {
                aug[(r, j)] = &aug[(r, j)] * &inv;
            }
            for i in 0..r {
                if aug[(i, r)].is_zero() {
                    continue;
                }
                let f = aug[(i, r)].clone();
                for j in r..2 * n {
                    if !aug[(r, j)].is_zero() {
                        let d = &f * &aug[(r, j)];
                        aug[(i, j)] = &aug[(i, j)] - &d;
                    }
                }
            }
        }
        Ok(aug.block(0, n, n, n))
    }

    /// Characteristic polynomial `det(x - A)`, coefficients low degree first,
    /// by the Faddeev-LeVerrier recursion.
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert!(self.is_square());
        let n = self.rows;
        let mut c = vec![Scalar::zero(); n + 1];
        c[n] = Scalar::one();
        let mut mk = Self::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&mk);
            for i in 0..n {
                next[(i, i)] = &next[(i, i)] + &c[n - k + 1];
            }
            mk = next;
            let tr = self.mul(&mk).trace();
            c[n - k] = (&(-tr) / &Scalar::from_int(k as i64)).unwrap();
        }
        c
    }

    /// Direct sum `diag(self, other)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Coefficients of `prod (x - r)` for the listed roots with multiplicities.
pub fn poly_from_roots(roots: &[(Scalar, usize)]) -> Vec<Scalar> {
    let mut acc = vec![Scalar::one()];
    for (r, mult) in roots {
        for _ in 0..*mult {
            let mut next = vec![Scalar::zero(); acc.len() + 1];
            for (k, a) in acc.iter().enumerate() {
                next[k + 1] = &next[k + 1] + a;
                next[k] = &next[k] - &(a * r);
            }
            acc = next;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_det_inverse() {
        let a = ExactMatrix::from_ints(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]);
        assert_eq!(a.det().unwrap(), Scalar::from_int(18));
        assert_eq!(a.rank(), 3);
        assert!(a.mul(&a.inverse().unwrap()).is_identity());
        let s = ExactMatrix::from_ints(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(s.rank(), 1);
        assert!(s.inverse().is_err());
    }

    #[test]
    fn char_poly_of_companion() {
        // x^3 - 2x + 5
        let a = ExactMatrix::from_ints(&[vec![0, 0, -5], vec![1, 0, 2], vec![0, 1, 0]]);
        let cp: Vec<i64> = a.char_poly().iter().map(|s| s.to_i64().unwrap()).collect();
        assert_eq!(cp, vec![5, -2, 0, 1]);
    }

    #[test]
    fn leading_minors_agree() {
        let a = ExactMatrix::from_ints(&[vec![0, 1], vec![1, 0]]);
        assert!(!a.leading_minors_nonzero());
        let b = ExactMatrix::from_ints(&[vec![1, 2, 3], vec![2, 5, 1], vec![3, 1, 1]]);
        assert!(b.leading_minors_nonzero());
        assert!(b.leading_principal_minors().iter().all(|m| !m.is_zero()));
    }

    #[test]
    fn formal_parameter_entries() {
        let t = Scalar::t();
        let a = ExactMatrix::from_rows(vec![
            vec![t.clone(), Scalar::one()],
            vec![Scalar::zero(), t.inv().unwrap()],
        ])
        .unwrap();
        assert_eq!(a.det().unwrap(), Scalar::one());
        assert!(a.mul(&a.inverse().unwrap()).is_identity());
    }
}
