//! Dense arithmetic in `Q(zeta_m)`.
//!
//! An element is a coefficient vector in the power basis `1, z, .., z^(phi(m)-1)`,
//! trimmed of trailing zeros. The order `m` is carried by the caller.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

/// Largest cyclotomic order for which the minimal-polynomial table is built.
pub const MAX_ORDER: u32 = 240;

static TABLE: LazyLock<Vec<Vec<i64>>> = LazyLock::new(|| {
    let mut table: Vec<Vec<i64>> = vec![Vec::new(); MAX_ORDER as usize + 1];
    for m in 1..=MAX_ORDER as usize {
        // x^m - 1 divided by Phi_d for every proper divisor d.
        let mut num = vec![0i64; m + 1];
        num[0] = -1;
        num[m] = 1;
        for d in 1..m {
            if m % d == 0 {
                num = int_exact_div(&num, &table[d]);
            }
        }
        table[m] = num;
    }
    table
});

fn int_exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut quo = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        quo[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

/// Coefficients of the `m`-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_poly(m: u32) -> &'static [i64] {
    assert!((1..=MAX_ORDER).contains(&m), "cyclotomic order {m} unsupported");
    &TABLE[m as usize]
}

/// Euler phi, read off the table degree.
pub fn degree(m: u32) -> usize {
    cyclotomic_poly(m).len() - 1
}

pub fn trim(v: &mut Vec<Q>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn reduce(mut v: Vec<Q>, m: u32) -> Vec<Q> {
    let phi = cyclotomic_poly(m);
    let d = phi.len() - 1;
    // Phi_m is monic, so top coefficients can be cancelled one at a time.
    while v.len() > d {
        let top = v.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = v.len() - d;
        for (j, &pj) in phi[..d].iter().enumerate() {
            if pj != 0 {
                v[shift + j] -= &top * BigInt::from(pj);
            }
        }
    }
    trim(&mut v);
    v
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    trim(&mut out);
    out
}

pub fn neg(a: &[Q]) -> Vec<Q> {
    a.iter().map(|c| -c).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    add(a, &neg(b))
}

pub fn scale(a: &[Q], q: &Q) -> Vec<Q> {
    if q.is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c * q).collect()
}

pub fn mul(a: &[Q], b: &[Q], m: u32) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len() == 1 {
        return scale(b, &a[0]);
    }
    if b.len() == 1 {
        return scale(a, &b[0]);
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    reduce(out, m)
}

/// Inverse by solving `M_a x = e_0`, where `M_a` is multiplication by `a`
/// in the power basis, with fraction-free elimination over `Z`. Returns
/// `None` for zero.
pub fn inv(a: &[Q], m: u32) -> Option<Vec<Q>> {
    if a.is_empty() {
        return None;
    }
    if a.len() == 1 {
        return Some(vec![a[0].recip()]);
    }
    let a = &reduce(a.to_vec(), m)[..];
    let phi = cyclotomic_poly(m);
    let d = phi.len() - 1;
    let den = a.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let mut col: Vec<BigInt> = (0..d).map(|i| a.get(i).map_or_else(BigInt::zero, |c| (c * &den).to_integer())).collect();
    // rows[i][j] = coefficient i of a * z^j; last column is the right-hand side.
    let mut rows = vec![vec![BigInt::zero(); d + 1]; d];
    for j in 0..d {
        for i in 0..d {
            rows[i][j] = col[i].clone();
        }
        let top = col.pop().unwrap();
        col.insert(0, BigInt::zero());
        if !top.is_zero() {
            for (c, &p) in col.iter_mut().zip(phi) {
                *c -= &top * p;
            }
        }
    }
    rows[0][d] = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..d {
        let p = (k..d).find(|&r| !rows[r][k].is_zero())?;
        rows.swap(k, p);
        for r in k + 1..d {
            for c in k + 1..=d {
                let v = &rows[r][c] * &rows[k][k] - &rows[r][k] * &rows[k][c];
                rows[r][c] = v / &prev;
            }
            rows[r][k] = BigInt::zero();
        }
        prev = rows[k][k].clone();
    }
    let mut x = vec![Q::zero(); d];
    for k in (0..d).rev() {
        let mut acc = Q::from_integer(rows[k][d].clone());
        for c in k + 1..d {
            acc -= &x[c] * &rows[k][c];
        }
        x[k] = acc / Q::from_integer(rows[k][k].clone());
    }
    let den = Q::from_integer(den);
    let mut out: Vec<Q> = x.into_iter().map(|c| c * &den).collect();
    trim(&mut out);
    Some(out)
}

/// Embed an element of `Q(zeta_from)` into `Q(zeta_to)`, `from | to`.
pub fn lift(a: &[Q], from: u32, to: u32) -> Vec<Q> {
    if from == to || a.len() <= 1 {
        return a.to_vec();
    }
    debug_assert_eq!(to % from, 0);
    let step = (to / from) as usize;
    let mut out = vec![Q::zero(); (a.len() - 1) * step + 1];
    for (i, c) in a.iter().enumerate() {
        out[i * step] = c.clone();
    }
    reduce(out, to)
}

/// `z^k` in `Q(zeta_m)` for any integer `k`.
pub fn zeta_pow(k: i64, m: u32) -> Vec<Q> {
    let e = k.rem_euclid(m as i64) as usize;
    let mut v = vec![Q::zero(); e + 1];
    v[e] = Q::one();
    reduce(v, m)
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

pub fn is_rational(a: &[Q]) -> bool {
    a.len() <= 1
}

pub fn fmt_coeff(a: &[Q]) -> String {
    if a.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (i, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        let body = match (i, mag.is_one()) {
            (0, _) => fmt_q(&mag),
            (1, true) => "z".to_string(),
            (1, false) => format!("{}*z", fmt_q(&mag)),
            (_, true) => format!("z^{i}"),
            (_, false) => format!("{}*z^{i}", fmt_q(&mag)),
        };
        parts.push((sign, body));
    }
    let mut s = String::new();
    for (k, (sign, body)) in parts.into_iter().enumerate() {
        match (k, sign) {
            (0, "-") => s.push('-'),
            (0, _) => {}
            (_, sg) => {
                s.push(' ');
                s.push_str(sg);
                s.push(' ');
            }
        }
        s.push_str(&body);
    }
    s
}

pub fn fmt_q(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), &[-1, 1]);
        assert_eq!(cyclotomic_poly(4), &[1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), &[1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), &[1, 0, -1, 0, 1]);
        assert_eq!(degree(105), 48);
        assert!(cyclotomic_poly(105).contains(&-2));
    }

    #[test]
    fn zeta_has_exact_order() {
        for m in [3u32, 4, 5, 8, 12, 14] {
            let z = zeta_pow(1, m);
            let mut acc = vec![q(1)];
            for k in 1..=m {
                acc = mul(&acc, &z, m);
                assert_eq!(acc == vec![q(1)], k == m, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = 12;
        let a = vec![q(2), q(-1), q(0), q(3)];
        let b = inv(&a, m).unwrap();
        assert_eq!(mul(&a, &b, m), vec![q(1)]);
    }

    #[test]
    fn lift_respects_powers() {
        // zeta_4 = zeta_12^3
        assert_eq!(lift(&zeta_pow(1, 4), 4, 12), zeta_pow(3, 12));
    }
}
