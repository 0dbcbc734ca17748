use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use super::{CartanType, Family, RootError};

/// A root written in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// Simple root `alpha_i`, 1-based.
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Root(v)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let coef = match c {
                1 => String::new(),
                -1 => "-".into(),
                _ => c.to_string(),
            };
            terms.push(format!("{coef}a{}", i + 1));
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&terms.join("+").replace("+-", "-"))
    }
}

/// Root datum of a simple type with integer ambient coordinates.
#[derive(Debug)]
pub struct RootSystem {
    ty: CartanType,
    ambient_dim: usize,
    simple_ambient: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    by_ambient: HashMap<Vec<i64>, Root>,
    min_norm: i64,
}

fn unit(d: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; d];
    v[i] = c;
    v
}

fn combo(d: usize, terms: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; d];
    for &(i, c) in terms {
        v[i] += c;
    }
    v
}

/// Simple roots in ambient coordinates; exceptional types carry a factor 2
/// so that half-integral coordinates stay integral.
fn simple_roots(ty: CartanType) -> (usize, Vec<Vec<i64>>) {
    let n = ty.rank;
    match ty.family {
        Family::A => {
            let d = n + 1;
            (d, (0..n).map(|i| combo(d, &[(i, 1), (i + 1, -1)])).collect())
        }
        Family::B | Family::C | Family::D => {
            let d = n;
            let mut s: Vec<Vec<i64>> = (0..n.saturating_sub(1))
                .map(|i| combo(d, &[(i, 1), (i + 1, -1)]))
                .collect();
            s.push(match ty.family {
                Family::B => unit(d, n - 1, 1),
                Family::C => unit(d, n - 1, 2),
                _ => combo(d, &[(n - 2, 1), (n - 1, 1)]),
            });
            (d, s)
        }
        Family::E => {
            let d = 8;
            let mut s = vec![
                vec![1, -1, -1, -1, -1, -1, -1, 1],
                combo(d, &[(0, 2), (1, 2)]),
            ];
            for i in 0..6 {
                s.push(combo(d, &[(i, -2), (i + 1, 2)]));
            }
            s.truncate(n);
            (d, s)
        }
        Family::F => (
            4,
            vec![vec![0, 2, -2, 0], vec![0, 0, 2, -2], vec![0, 0, 0, 2], vec![1, -1, -1, -1]],
        ),
        Family::G => (3, vec![vec![1, -1, 0], vec![-2, 1, 1]]),
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RootSystem {
    pub fn new(ty: CartanType) -> Arc<RootSystem> {
        let (ambient_dim, simple_ambient) = simple_roots(ty);
        let r = ty.rank;
        let gram: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| dot(&simple_ambient[i], &simple_ambient[j])).collect())
            .collect();
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();

        // Orbit of the simple roots under simple reflections.
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..r {
            let v = Root::simple(r, i + 1).0;
            seen.insert(v.clone());
            queue.push_back(v);
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..r {
                let pair: i64 = (0..r).map(|j| v[j] * cartan[j][i]).sum();
                if pair == 0 {
                    continue;
                }
                let mut w = v.clone();
                w[i] -= pair;
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut positive: Vec<Root> =
            seen.into_iter().map(Root).filter(Root::is_positive).collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
        assert_eq!(positive.len(), ty.positive_root_count(), "root count for {ty}");

        let n_pos = positive.len();
        let mut index = HashMap::with_capacity(2 * n_pos);
        for (k, p) in positive.iter().enumerate() {
            index.insert(p.0.clone(), k);
            index.insert(p.neg().0, k + n_pos);
        }
        let min_norm = (0..r).map(|i| gram[i][i]).min().unwrap();
        let mut rs = RootSystem {
            ty,
            ambient_dim,
            simple_ambient,
            gram,
            cartan,
            positive,
            index,
            by_ambient: HashMap::new(),
            min_norm,
        };
        let by_ambient = rs.all_roots().map(|a| (rs.ambient(&a), a)).collect();
        rs.by_ambient = by_ambient;
        Arc::new(rs)
    }

    pub fn from_label(label: &str) -> Result<Arc<RootSystem>, RootError> {
        Ok(RootSystem::new(label.parse()?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Scale factor between stored ambient coordinates and the usual ones.
    pub fn ambient_scale(&self) -> i64 {
        match self.ty.family {
            Family::E | Family::F => 2,
            _ => 1,
        }
    }

    pub fn simple_roots_ambient(&self) -> &[Vec<i64>] {
        &self.simple_ambient
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram_matrix(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn all_roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive.iter().cloned().chain(self.positive.iter().map(Root::neg))
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn is_root(&self, v: &Root) -> bool {
        v.0.len() == self.rank() && self.index.contains_key(&v.0)
    }

    /// Position in `positive_roots` of a root or its negative.
    pub fn positive_index(&self, v: &Root) -> Option<usize> {
        self.index.get(&v.0).map(|&k| k % self.positive.len())
    }

    pub fn check_root(&self, v: &Root) -> Result<(), RootError> {
        if self.is_root(v) {
            Ok(())
        } else {
            Err(RootError::NotARoot(v.to_string()))
        }
    }

    /// Invariant form on simple coordinates.
    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        let r = self.rank();
        let mut s = 0;
        for i in 0..r {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..r {
                s += a.0[i] * self.gram[i][j] * b.0[j];
            }
        }
        s
    }

    /// `<a, b^vee> = 2 (a, b) / (b, b)`.
    pub fn pairing(&self, a: &Root, b: &Root) -> i64 {
        2 * self.inner(a, b) / self.inner(b, b)
    }

    pub fn is_short(&self, a: &Root) -> bool {
        self.inner(a, a) == self.min_norm
    }

    pub fn is_single_length(&self) -> bool {
        self.positive.iter().all(|p| self.is_short(p))
    }

    pub fn ambient(&self, a: &Root) -> Vec<i64> {
        let mut v = vec![0; self.ambient_dim];
        for (i, &c) in a.0.iter().enumerate() {
            if c != 0 {
                for (x, s) in v.iter_mut().zip(&self.simple_ambient[i]) {
                    *x += c * s;
                }
            }
        }
        v
    }

    /// Root with the given ambient coordinates (in stored scaling).
    pub fn root_from_ambient(&self, v: &[i64]) -> Option<Root> {
        self.by_ambient.get(v).cloned()
    }

    /// Reflect an ambient vector in the hyperplane of `a`.
    /// `None` when the result leaves the integer lattice.
    pub fn reflect_ambient(&self, a: &Root, v: &[i64]) -> Option<Vec<i64>> {
        let av = self.ambient(a);
        let num = 2 * av.iter().zip(v).map(|(x, y)| x * y).sum::<i64>();
        let den: i64 = av.iter().map(|x| x * x).sum();
        if num % den != 0 {
            return None;
        }
        let c = num / den;
        Some(v.iter().zip(&av).map(|(x, y)| x - c * y).collect())
    }

    pub fn highest_root(&self) -> Root {
        self.positive.last().unwrap().clone()
    }

    pub fn highest_short_root(&self) -> Root {
        self.positive.iter().rev().find(|p| self.is_short(p)).unwrap().clone()
    }

    /// Reflection of `v` in `a`.
    pub fn reflect(&self, a: &Root, v: &Root) -> Root {
        let c = self.pairing(v, a);
        Root(v.0.iter().zip(&a.0).map(|(x, y)| x - c * y).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> Arc<RootSystem> {
        RootSystem::from_label(s).unwrap()
    }

    #[test]
    fn root_counts() {
        assert_eq!(rs("G2").positive_roots().len(), 6);
        assert_eq!(rs("C4").positive_roots().len(), 16);
        assert_eq!(rs("E8").positive_roots().len(), 120);
        assert_eq!(rs("E7").positive_roots().len(), 63);
        assert_eq!(rs("F4").positive_roots().len(), 24);
    }

    #[test]
    fn cartan_entries() {
        let g2 = rs("G2");
        // alpha_1 short, alpha_2 long
        assert_eq!(g2.cartan_matrix(), &[vec![2, -1], vec![-3, 2]]);
        let b3 = rs("B3");
        assert_eq!(b3.cartan_matrix()[2][1], -1);
        assert_eq!(b3.cartan_matrix()[1][2], -2);
        let e8 = rs("E8");
        // Bourbaki: alpha_2 attached to alpha_4, alpha_1 to alpha_3
        assert_eq!(e8.cartan_matrix()[1][3], -1);
        assert_eq!(e8.cartan_matrix()[0][2], -1);
        assert_eq!(e8.cartan_matrix()[1][2], 0);
    }

    #[test]
    fn highest_roots() {
        let e8 = rs("E8");
        assert_eq!(e8.highest_root().0, vec![2, 3, 4, 6, 5, 4, 3, 2]);
        let f4 = rs("F4");
        assert_eq!(f4.highest_root().0, vec![2, 3, 4, 2]);
        assert_eq!(f4.highest_short_root().0, vec![1, 2, 3, 2]);
        let g2 = rs("G2");
        assert_eq!(g2.highest_root().0, vec![3, 2]);
        let c3 = rs("C3");
        assert_eq!(c3.ambient(&c3.highest_root()), vec![2, 0, 0]);
    }
}
