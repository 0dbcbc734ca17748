#![allow(dead_code)]
//! Generators and property checks shared by the test suites.

use std::sync::Arc;

use proptest::prelude::*;
use spherical_bruhat::arith::{parse_scalar, random_scalar, Scalar, SeedStream};
use spherical_bruhat::bruhat::bruhat_cell;
use spherical_bruhat::groups::*;
use spherical_bruhat::roots::{RootSystem, WeylElement};

pub fn ctx(label: &str) -> Arc<GroupContext> {
    GroupContext::from_label(label).unwrap()
}

/// Random element of the standard Borel subgroup.
pub fn random_borel(c: &Arc<GroupContext>, s: &mut SeedStream) -> GroupElement {
    let params: Vec<Scalar> = (0..c.rank()).map(|_| random_scalar(s, 3, true)).collect();
    let mut b = torus_element(c, &params).unwrap();
    for a in c.root_system().positive_roots() {
        if s.below(2) == 0 {
            b = b.mul(&root_element(c, a, &random_scalar(s, 3, false)).unwrap());
        }
    }
    b
}

/// Random element of `B^-`; each negative root factor appears with
/// probability `1/density`.
pub fn random_opposite_borel(c: &Arc<GroupContext>, s: &mut SeedStream, density: usize) -> GroupElement {
    let params: Vec<Scalar> = (0..c.rank()).map(|_| random_scalar(s, 2, true)).collect();
    let mut b = torus_element(c, &params).unwrap();
    for a in c.root_system().positive_roots() {
        if s.below(density) == 0 {
            b = b.mul(&root_element(c, &a.neg(), &random_scalar(s, 2, false)).unwrap());
        }
    }
    b
}

// Pairwise lcm stays within the supported range.
const ORDERS: [u32; 6] = [1, 3, 4, 5, 8, 12];

fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=5).prop_map(|(p, q)| Scalar::from_ratio(p, q))
}

/// Elements of `Q(zeta_m)(t)`: a cyclotomic polynomial in `zeta_m`, times
/// an optional linear fraction in `t`.
pub fn scalar() -> impl Strategy<Value = Scalar> {
    let cyclo = (0..ORDERS.len(), prop::collection::vec(rational(), 1..5)).prop_map(|(i, cs)| {
        let m = ORDERS[i];
        cs.iter().enumerate().fold(Scalar::zero(), |acc, (k, c)| &acc + &(c * &Scalar::zeta(m, k as i64).unwrap()))
    });
    let frac = prop_oneof![
        Just(None),
        (-3i64..=3, -3i64..=3, 1i64..=3, -2i64..=2).prop_map(|(a, b, c, d)| Some((a, b, c, d))),
    ];
    (cyclo, frac).prop_map(|(x, f)| match f {
        None => x,
        Some((a, b, c, d)) => {
            let t = Scalar::t();
            let num = &Scalar::from_int(a) + &(&Scalar::from_int(b) * &t);
            let den = &Scalar::from_int(c) + &(&Scalar::from_int(d) * &t);
            &x * &(&num / &den).unwrap()
        }
    })
}

/// Field axioms on one triple, plus the parse/display round trip.
#[allow(clippy::eq_op)]
pub fn field_axioms(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<(), String> {
    let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(format!("{what} fails for {a}, {b}, {c}")) };
    check(&(a + b) + c == a + &(b + c), "additive associativity")?;
    check(&(a * b) * c == a * &(b * c), "multiplicative associativity")?;
    check(a + b == b + a && a * b == b * a, "commutativity")?;
    check(a * &(b + c) == &(a * b) + &(a * c), "distributivity")?;
    check(a + &Scalar::zero() == *a && a * &Scalar::one() == *a, "identities")?;
    check((a - a).is_zero() && (a + &(-a)).is_zero(), "additive inverse")?;
    if !a.is_zero() {
        let inv = a.inv().map_err(|e| e.to_string())?;
        check((a * &inv).is_one(), "multiplicative inverse")?;
        check((&(b / a).map_err(|e| e.to_string())? * a) == *b, "division")?;
    } else {
        check(a.inv().is_err(), "zero has no inverse")?;
    }
    let order = a.order();
    let back = parse_scalar(&a.to_string(), order).map_err(|e| e.to_string())?;
    check(back == *a, "parse(display)")
}

/// `B w B` membership of `b1 * w * b2` for a random `w` and Borel factors.
pub fn double_coset_case(seed: u64, label: &str) -> Result<(), String> {
    let c = ctx(label);
    let mut s = SeedStream::new(seed);
    let ws = WeylElement::enumerate(c.root_system()).unwrap();
    let w = &ws[s.below(ws.len())];
    let g = GroupElement::weyl_representative(&c, w).map_err(|e| e.to_string())?;
    let h = random_borel(&c, &mut s).mul(&g).mul(&random_borel(&c, &mut s));
    let got = bruhat_cell(&h).map_err(|e| e.to_string())?.weyl;
    if &got == w {
        Ok(())
    } else {
        Err(format!("{label} seed {seed}: {:?} landed in {:?}", w.reduced_word(), got.reduced_word()))
    }
}

/// Every Bruhat-comparable pair `u <= w` has `l(u)+rk(1-u) <= l(w)+rk(1-w)`;
/// returns the number of comparable pairs.
pub fn monotone_pairs(label: &str) -> Result<usize, String> {
    let rs = RootSystem::from_label(label).unwrap();
    let ws = WeylElement::enumerate(&rs).unwrap();
    let mut pairs = 0;
    for u in &ws {
        for w in &ws {
            if u.bruhat_leq(w).unwrap() {
                pairs += 1;
                if u.length_plus_rank() > w.length_plus_rank() {
                    return Err(format!("{label}: {:?} <= {:?} breaks monotonicity", u.reduced_word(), w.reduced_word()));
                }
            }
        }
    }
    Ok(pairs)
}
