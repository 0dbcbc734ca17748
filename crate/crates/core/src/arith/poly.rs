//! Polynomials in `t` with coefficients in `Q(zeta_m)`.

use super::cyclo::{self, Q};
use num_traits::One;

/// Coefficient list, low degree first, no trailing zero coefficients.
pub type Poly = Vec<Vec<Q>>;

pub fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

pub fn constant(c: Vec<Q>) -> Poly {
    if c.is_empty() {
        Vec::new()
    } else {
        vec![c]
    }
}

pub fn one() -> Poly {
    vec![vec![Q::one()]]
}

pub fn is_one(p: &Poly) -> bool {
    p.len() == 1 && p[0].len() == 1 && p[0][0].is_one()
}

pub fn add(a: &Poly, b: &Poly) -> Poly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.clone();
    for (o, s) in out.iter_mut().zip(short) {
        *o = cyclo::add(o, s);
    }
    trim(&mut out);
    out
}

pub fn neg(a: &Poly) -> Poly {
    a.iter().map(|c| cyclo::neg(c)).collect()
}

pub fn scale(a: &Poly, c: &[Q], m: u32) -> Poly {
    if c.is_empty() {
        return Vec::new();
    }
    let mut out: Poly = a.iter().map(|x| cyclo::mul(x, c, m)).collect();
    trim(&mut out);
    out
}

pub fn mul(a: &Poly, b: &Poly, m: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len() == 1 {
        return scale(b, &a[0], m);
    }
    if b.len() == 1 {
        return scale(a, &b[0], m);
    }
    let mut out: Poly = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_empty() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_empty() {
                out[i + j] = cyclo::add(&out[i + j], &cyclo::mul(x, y, m));
            }
        }
    }
    trim(&mut out);
    out
}

/// Division with remainder; `b` must be nonzero.
pub fn divrem(a: &Poly, b: &Poly, m: u32) -> (Poly, Poly) {
    let db = b.len() - 1;
    let lead_inv = cyclo::inv(&b[db], m).expect("nonzero leading coefficient");
    let mut rem = a.clone();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quo: Poly = vec![Vec::new(); rem.len() - db];
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let c = cyclo::mul(rem.last().unwrap(), &lead_inv, m);
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_empty() {
                rem[k + j] = cyclo::sub(&rem[k + j], &cyclo::mul(&c, bj, m));
            }
        }
        quo[k] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quo);
    (quo, rem)
}

pub fn make_monic(p: &Poly, m: u32) -> Poly {
    match p.last() {
        None => Vec::new(),
        Some(l) if l.len() == 1 && l[0].is_one() => p.clone(),
        Some(l) => scale(p, &cyclo::inv(l, m).unwrap(), m),
    }
}

/// Monic gcd.
pub fn gcd(a: &Poly, b: &Poly, m: u32) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        if y.len() == 1 {
            return one();
        }
        let (_, r) = divrem(&x, &y, m);
        x = std::mem::replace(&mut y, r);
    }
    make_monic(&x, m)
}

pub fn lift(p: &Poly, from: u32, to: u32) -> Poly {
    if from == to {
        return p.clone();
    }
    p.iter().map(|c| cyclo::lift(c, from, to)).collect()
}

pub fn is_constant(p: &Poly) -> bool {
    p.len() <= 1
}

pub fn fmt(p: &Poly) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in p.iter().enumerate().rev() {
        if c.is_empty() {
            continue;
        }
        let coeff = cyclo::fmt_coeff(c);
        let simple = c.len() == 1;
        let tp = match k {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{k}"),
        };
        let term = if k == 0 {
            if simple { coeff } else { format!("({coeff})") }
        } else if simple && coeff == "1" {
            tp
        } else if simple && coeff == "-1" {
            format!("-{tp}")
        } else if simple {
            format!("{coeff}*{tp}")
        } else {
            format!("({coeff})*{tp}")
        };
        parts.push(term);
    }
    parts.join(" + ")
}
