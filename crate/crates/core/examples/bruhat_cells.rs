//! Bruhat cells of explicit matrices, and the sampled dense cell of a class.

use spherical_bruhat::arith::{Scalar, SeedStream};
use spherical_bruhat::bruhat::*;
use spherical_bruhat::groups::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let so8 = GroupContext::from_label("D4")?;
    let rs = so8.root_system().clone();

    let x = root_element(&so8, &rs.highest_root().neg(), &Scalar::one())?;
    let cell = bruhat_cell(&x)?;
    println!(
        "x_(-highest) in SO8 lies over {:?}: l = {}, rk(1-w) = {}, in B^- = {}",
        cell.weyl.reduced_word(),
        cell.weyl.length(),
        cell.weyl.rank_one_minus(),
        in_opposite_borel(&x)
    );

    let mut s = SeedStream::new(11);
    let g = random_conjugate(&x, &mut s, 40, 3);
    println!("a random conjugate lies over {:?}", bruhat_cell(&g)?.weyl.reduced_word());

    // An element of B^- lies over w0 exactly when its leading minors are nonzero.
    let t = torus_element(&so8, &[2, 3, -1, 5].map(Scalar::from_int))?;
    let mut b = t.clone();
    for a in rs.positive_roots() {
        b = b.mul(&root_element(&so8, &a.neg(), &Scalar::one())?);
    }
    for (name, h) in [("x", &x), ("t", &t), ("t * prod x_(-a)(1)", &b)] {
        println!("{name}: big cell {}, cell length {}", big_cell_check(h)?, bruhat_cell(h)?.weyl.length());
    }

    let est = estimate_z(&x, &SeedStream::new(0), EstimateOptions::default())?;
    println!(
        "estimated z = {:?} ({} of {} samples in it), l + rk = {}, class dim = {}",
        est.z.reduced_word(),
        est.hits(),
        est.samples(),
        est.z.length_plus_rank(),
        class_dim(&x)
    );
    Ok(())
}
