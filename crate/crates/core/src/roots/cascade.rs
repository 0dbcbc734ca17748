use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::ExactMatrix;

use super::{CartanType, Family, Root, RootError, RootSystem, WeylElement};

/// An irreducible component of a subsystem, given by its positive roots.
#[derive(Clone, Debug)]
pub struct Component {
    pub label: String,
    pub positive: Vec<Root>,
}

impl Component {
    /// Root of maximal height; the ambient order restricts to the component's own.
    pub fn highest_root(&self, rs: &RootSystem) -> Root {
        self.positive.iter().max_by(|a, b| order_key(rs, a, b)).unwrap().clone()
    }

    /// Highest root among those short in the ambient system.
    pub fn highest_short_root(&self, rs: &RootSystem) -> Option<Root> {
        self.positive
            .iter()
            .filter(|p| rs.is_short(p))
            .max_by(|a, b| order_key(rs, a, b))
            .cloned()
    }

    pub fn has_short_roots(&self, rs: &RootSystem) -> bool {
        self.positive.iter().any(|p| rs.is_short(p))
    }
}

/// Height first, ties broken towards the lexicographically larger ambient vector.
fn order_key(rs: &RootSystem, a: &Root, b: &Root) -> std::cmp::Ordering {
    a.height().cmp(&b.height()).then_with(|| rs.ambient(a).cmp(&rs.ambient(b)))
}

fn classify(rs: &RootSystem, positive: &[Root]) -> String {
    let rows: Vec<Vec<i64>> = positive.iter().map(|p| p.0.clone()).collect();
    let r = ExactMatrix::from_ints(&rows).rank();
    let n = positive.len();
    let lengths: std::collections::BTreeSet<i64> = positive.iter().map(|p| rs.inner(p, p)).collect();
    let single = lengths.len() == 1;
    let name = if single {
        if n == r * (r + 1) / 2 {
            format!("A{r}")
        } else if n == r * (r - 1) {
            format!("D{r}")
        } else if r >= 6 && n == [36, 63, 120][r.min(8) - 6] {
            format!("E{r}")
        } else {
            "?".into()
        }
    } else if n == 6 && r == 2 {
        "G2".into()
    } else if n == 24 && r == 4 {
        "F4".into()
    } else if n == r * r {
        // Long/short split: B_r has r short positive roots, C_r has r(r-1).
        let rel_short = positive.iter().filter(|p| rs.inner(p, p) == *lengths.first().unwrap()).count();
        if r == 2 {
            if rs.cartan_type().family == Family::C { "C2".into() } else { "B2".into() }
        } else if rel_short == r {
            format!("B{r}")
        } else {
            format!("C{r}")
        }
    } else {
        "?".into()
    };
    name
}

fn support(rs: &RootSystem, a: &Root) -> Vec<usize> {
    rs.ambient(a).iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect()
}

fn shares_support(rs: &RootSystem, a: &Root, b: &Root) -> bool {
    let sa = support(rs, a);
    support(rs, b).iter().any(|i| sa.contains(i))
}

/// Roots orthogonal to all of `s`, split into irreducible components.
pub fn orthogonal_subsystem(rs: &RootSystem, s: &[Root]) -> Result<Vec<Component>, RootError> {
    for a in s {
        rs.check_root(a)?;
    }
    let orth: Vec<Root> = rs
        .positive_roots()
        .iter()
        .filter(|p| s.iter().all(|a| rs.inner(p, a) == 0))
        .cloned()
        .collect();
    Ok(components(rs, &orth))
}

fn components(rs: &RootSystem, roots: &[Root]) -> Vec<Component> {
    let n = roots.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![start];
        comp[start] = id;
        let mut members = Vec::new();
        while let Some(i) = stack.pop() {
            members.push(i);
            for j in 0..n {
                if comp[j] == usize::MAX && rs.inner(&roots[i], &roots[j]) != 0 {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        let positive: Vec<Root> = members.iter().map(|&i| roots[i].clone()).collect();
        out.push(Component { label: classify(rs, &positive), positive });
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CascadeKind {
    Beta,
    Gamma,
    MuNu,
    GammaPrime,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeRoot {
    pub name: String,
    pub root: Root,
}

#[derive(Clone, Debug)]
pub struct Cascade {
    pub kind: CascadeKind,
    pub roots: Vec<CascadeRoot>,
    /// Component labels of the orthogonal subsystem seen at each step.
    pub steps: Vec<Vec<String>>,
}

impl Cascade {
    pub fn get(&self, name: &str) -> Option<&Root> {
        self.roots.iter().find(|c| c.name == name).map(|c| &c.root)
    }

    pub fn prefix(&self, len: usize) -> Option<Vec<Root>> {
        (len <= self.roots.len()).then(|| self.roots[..len].iter().map(|c| c.root.clone()).collect())
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

impl fmt::Display for Cascade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.roots.iter().map(|c| format!("{}={}", c.name, c.root)).collect();
        f.write_str(&parts.join(", "))
    }
}

fn labels(c: &[Component]) -> Vec<String> {
    c.iter().map(|x| x.label.clone()).collect()
}

/// Merge components whose ambient supports overlap (e.g. the two A1 factors of D2).
fn blocks(rs: &RootSystem, comps: Vec<Component>) -> Vec<Component> {
    let mut out: Vec<Component> = Vec::new();
    'next: for c in comps {
        for b in out.iter_mut() {
            if b.positive.iter().any(|x| c.positive.iter().any(|y| shares_support(rs, x, y))) {
                b.positive.extend(c.positive.iter().cloned());
                b.label = format!("{}+{}", b.label, c.label);
                continue 'next;
            }
        }
        out.push(c);
    }
    out
}

pub fn cascade(rs: &Arc<RootSystem>, kind: CascadeKind) -> Result<Cascade, RootError> {
    let ty = rs.cartan_type();
    match kind {
        CascadeKind::MuNu if !matches!(ty.family, Family::B | Family::D) => {
            return Err(RootError::KindUnavailable(kind, ty));
        }
        CascadeKind::GammaPrime if ty.family != Family::C => {
            return Err(RootError::KindUnavailable(kind, ty));
        }
        _ => {}
    }
    let mut chosen: Vec<CascadeRoot> = Vec::new();
    let mut steps = Vec::new();
    let push = |chosen: &mut Vec<CascadeRoot>, name: String, root: Root| {
        chosen.push(CascadeRoot { name, root });
    };
    let current = |chosen: &[CascadeRoot]| -> Vec<Root> { chosen.iter().map(|c| c.root.clone()).collect() };
    match kind {
        CascadeKind::Beta | CascadeKind::Gamma => {
            let short = kind == CascadeKind::Gamma;
            let prefix = if short { "gamma" } else { "beta" };
            loop {
                let comps = orthogonal_subsystem(rs, &current(&chosen))?;
                steps.push(labels(&comps));
                if comps.len() != 1 {
                    break;
                }
                let next = if short { comps[0].highest_short_root(rs) } else { Some(comps[0].highest_root(rs)) };
                let Some(root) = next else { break };
                let name = format!("{prefix}_{}", chosen.len() + 1);
                push(&mut chosen, name, root);
            }
        }
        CascadeKind::MuNu => {
            let beta = rs.highest_root();
            push(&mut chosen, "beta_1".into(), beta);
            let mut r = 1;
            loop {
                let comps = orthogonal_subsystem(rs, &current(&chosen))?;
                steps.push(labels(&comps));
                let last = chosen.last().unwrap().root.clone();
                let (partner, rest): (Vec<Component>, Vec<Component>) = if r == 1 && ty == CartanType::new(Family::D, 4)? {
                    let a1 = rs.simple_root(1);
                    comps.into_iter().partition(|c| c.positive == vec![a1.clone()])
                } else {
                    comps
                        .into_iter()
                        .partition(|c| c.positive.len() == 1 && shares_support(rs, &c.positive[0], &last))
                };
                if partner.len() != 1 {
                    break;
                }
                push(&mut chosen, format!("mu_{r}"), partner[0].positive[0].clone());
                let rest = blocks(rs, rest);
                if rest.len() != 1 {
                    break;
                }
                push(&mut chosen, format!("nu_{r}"), rest[0].highest_root(rs));
                r += 1;
            }
        }
        CascadeKind::GammaPrime => {
            push(&mut chosen, "gamma_1".into(), rs.highest_short_root());
            loop {
                let comps = orthogonal_subsystem(rs, &current(&chosen))?;
                steps.push(labels(&comps));
                let picked = current(&chosen);
                let free: Vec<Component> = comps
                    .into_iter()
                    .filter(|c| c.positive.iter().all(|p| picked.iter().all(|q| !shares_support(rs, p, q))))
                    .collect();
                let free = blocks(rs, free);
                if free.len() != 1 {
                    break;
                }
                let Some(root) = free[0].highest_short_root(rs) else { break };
                let name = format!("gamma'_{}", chosen.len() + 1);
                push(&mut chosen, name, root);
            }
        }
    }
    let out = Cascade { kind, roots: chosen, steps };
    debug_assert!(pairwise_orthogonal(rs, &out.roots.iter().map(|c| c.root.clone()).collect::<Vec<_>>()));
    Ok(out)
}

pub fn pairwise_orthogonal(rs: &RootSystem, roots: &[Root]) -> bool {
    roots.iter().enumerate().all(|(i, a)| roots[i + 1..].iter().all(|b| rs.inner(a, b) == 0))
}

/// Product of reflections in a cascade prefix.
pub fn cascade_product(rs: &Arc<RootSystem>, roots: &[Root]) -> Result<WeylElement, RootError> {
    WeylElement::from_reflections(rs, roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> Arc<RootSystem> {
        RootSystem::from_label(s).unwrap()
    }

    fn amb(r: &RootSystem, c: &Cascade) -> Vec<Vec<i64>> {
        c.roots.iter().map(|x| r.ambient(&x.root)).collect()
    }

    #[test]
    fn orthogonal_components() {
        let b4 = rs("B4");
        let comps = orthogonal_subsystem(&b4, &[b4.highest_root()]).unwrap();
        let mut l = labels(&comps);
        l.sort();
        assert_eq!(l, vec!["A1", "B2"]);
        let d4 = rs("D4");
        let comps = orthogonal_subsystem(&d4, &[d4.highest_root()]).unwrap();
        assert_eq!(labels(&comps), vec!["A1", "A1", "A1"]);
        let e8 = rs("E8");
        assert_eq!(labels(&orthogonal_subsystem(&e8, &[]).unwrap()), vec!["E8"]);
        assert_eq!(labels(&orthogonal_subsystem(&e8, &[e8.highest_root()]).unwrap()), vec!["E7"]);
    }

    #[test]
    fn beta_cascades() {
        let a5 = rs("A5");
        let c = cascade(&a5, CascadeKind::Beta).unwrap();
        assert_eq!(amb(&a5, &c), vec![vec![1, 0, 0, 0, 0, -1], vec![0, 1, 0, 0, -1, 0], vec![0, 0, 1, -1, 0, 0]]);
        let lens: Vec<usize> = ["E6", "E7", "E8", "F4", "C3"]
            .iter()
            .map(|l| cascade(&rs(l), CascadeKind::Beta).unwrap().len())
            .collect();
        assert_eq!(lens, vec![4, 2, 3, 4, 3]);
        let e6 = rs("E6");
        assert_eq!(cascade(&e6, CascadeKind::Beta).unwrap().roots[3].root, e6.simple_root(4));
    }

    #[test]
    fn mu_nu_cascades() {
        let d6 = rs("D6");
        let c = cascade(&d6, CascadeKind::MuNu).unwrap();
        let names: Vec<&str> = c.roots.iter().map(|x| x.name.as_str()).collect();
        assert_eq!(names, vec!["beta_1", "mu_1", "nu_1", "mu_2", "nu_2", "mu_3"]);
        assert_eq!(d6.ambient(c.get("nu_2").unwrap()), vec![0, 0, 0, 0, 1, 1]);
        let d4 = rs("D4");
        assert_eq!(cascade(&d4, CascadeKind::MuNu).unwrap().get("mu_1"), Some(&d4.simple_root(1)));
        let b5 = rs("B5");
        let c = cascade(&b5, CascadeKind::MuNu).unwrap();
        assert_eq!(amb(&b5, &c).last().unwrap(), &vec![0, 0, 0, 0, 1]);
        assert!(cascade(&rs("C3"), CascadeKind::MuNu).is_err());
    }

    #[test]
    fn gamma_prime_cascade() {
        let c6 = rs("C6");
        let c = cascade(&c6, CascadeKind::GammaPrime).unwrap();
        assert_eq!(
            amb(&c6, &c),
            vec![vec![1, 1, 0, 0, 0, 0], vec![0, 0, 1, 1, 0, 0], vec![0, 0, 0, 0, 1, 1]]
        );
        assert!(cascade(&rs("B3"), CascadeKind::GammaPrime).is_err());
    }
}
