//! The catalog of spherical classes: records, representatives, identities.

use spherical_bruhat::atlas::*;
use spherical_bruhat::bruhat::lies_over;
use spherical_bruhat::groups::{class_dim, jordan_type, GroupContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let group = std::env::args().nth(1).unwrap_or_else(|| "C3".into());
    let recs = enumerate_spherical(&group)?;
    println!("{group}: {} spherical classes", recs.len());
    for r in &recs {
        let z = r.expected_z()?;
        print!("  {:<22} {:<10?} dim {:>3} = {} + {}  z = {}", r.label, r.kind, r.dim, z.length(), z.rank_one_minus(), r.z_label());
        if let Ok(g) = r.representative() {
            print!("  [class dim {}, lies over z: {}", class_dim(&g), lies_over(&g, &z)?);
            if let Ok(p) = jordan_type(&g) {
                print!(", Jordan {:?}", p.parts());
            }
            print!("]");
        }
        println!();
    }

    let twisted = expand_central(&recs);
    println!("with central translates: {} records", twisted.len());

    if let Ok(ctx) = GroupContext::from_label(&group) {
        for id in proof_identities(&ctx) {
            println!("  {}: {}", id.name, id.holds(&ctx));
        }
    }
    let json = export_json(&recs[..1]);
    println!("first record as JSON:\n{json}");
    Ok(())
}
