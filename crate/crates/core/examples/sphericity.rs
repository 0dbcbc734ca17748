//! Sphericity: reports on atlas records and a sampling test for matrices.

use spherical_bruhat::arith::{Scalar, SeedStream};
use spherical_bruhat::atlas::enumerate_spherical;
use spherical_bruhat::bruhat::EstimateOptions;
use spherical_bruhat::groups::{root_element, GroupContext, GroupElement};
use spherical_bruhat::roots::{Root, RootSystem, WeylElement};
use spherical_bruhat::sphericity::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f4 = enumerate_spherical("F4")?;
    let mixed = f4.iter().find(|r| r.label.starts_with("f_2*")).unwrap();
    let rep = check_characterization(mixed);
    for c in &rep.checks {
        println!("{:<32} {:?}  {} / {}", c.name, c.status, c.lhs, c.rhs);
    }

    let b3 = enumerate_spherical("B3")?;
    let b = b3.iter().find(|r| r.label == "b_lambda").unwrap();
    println!("\n{}", check_well_placed(b)?.to_json());

    let sp4 = GroupContext::from_label("C2")?;
    let mut reg = GroupElement::identity(&sp4);
    for i in 1..=2 {
        reg = reg.mul(&root_element(&sp4, &Root::simple(2, i), &Scalar::one())?);
    }
    let minimal = root_element(&sp4, &sp4.root_system().highest_root().neg(), &Scalar::one())?;
    for (name, g) in [("minimal", &minimal), ("regular", &reg)] {
        let out = sphericity_test(g, &SeedStream::new(0), EstimateOptions::default());
        println!("Sp4 {name}: {} (dim {} vs l + rk {:?})", out.verdict, out.dim, out.bound());
    }

    let g2 = RootSystem::from_label("G2")?;
    let ws = [
        WeylElement::reflection(&g2, &g2.highest_root())?,
        WeylElement::reflection(&g2, &g2.highest_short_root())?,
    ];
    println!("G2 dim 8 from two witnesses: {}", infer_spherical_from_witness(8, &ws)?);
    Ok(())
}
