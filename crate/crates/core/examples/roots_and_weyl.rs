//! Root systems, Weyl group elements and orthogonal-root cascades.

use spherical_bruhat::roots::{cascade, CascadeKind, RootSystem, WeylElement};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for label in ["C3", "D4", "F4", "E8"] {
        let rs = RootSystem::from_label(label)?;
        let w0 = WeylElement::longest(&rs);
        println!(
            "{label}: {} positive roots, l(w0) = {}, rk(1-w0) = {}",
            rs.positive_roots().len(),
            w0.length(),
            w0.rank_one_minus()
        );
        let c = cascade(&rs, CascadeKind::Beta)?;
        for r in &c.roots {
            println!("  {} = {:?}", r.name, r.root.coords());
        }
        let mut prefix = Vec::new();
        for r in &c.roots {
            prefix.push(r.root.clone());
            let w = WeylElement::from_reflections(&rs, &prefix)?;
            println!("  s_beta prefix of length {}: l + rk = {}", prefix.len(), w.length_plus_rank());
        }
    }

    // Two reflections in G2 with w0 as their only common upper bound.
    let g2 = RootSystem::from_label("G2")?;
    let b = WeylElement::reflection(&g2, &g2.highest_root())?;
    let g = WeylElement::reflection(&g2, &g2.highest_short_root())?;
    println!(
        "G2: s_beta = {:?}, s_gamma = {:?}, force w0: {}",
        b.reduced_word(),
        g.reduced_word(),
        WeylElement::unique_common_upper_bound_is_w0(&[b.clone(), g])?
    );
    println!("s_beta <= w0: {}", b.bruhat_leq(&WeylElement::longest(&g2))?);
    Ok(())
}
