use spherical_bruhat::atlas::*;
use spherical_bruhat::bruhat::{in_opposite_borel, lies_over};
use spherical_bruhat::groups::*;
use spherical_bruhat::roots::{Root, RootSystem, WeylElement};

fn classical_labels(hi: usize) -> Vec<String> {
    supported_groups(1, hi).into_iter().filter(|g| !matches!(&g[..1], "E" | "F" | "G")).collect()
}

/// Every way a classical record can disagree with its representative.
fn record_problems(r: &SphericalRecord) -> Vec<String> {
    let mut bad = Vec::new();
    let g = match r.representative() {
        Ok(g) => g,
        Err(e) => return vec![format!("no representative: {e}")],
    };
    let z = r.expected_z().unwrap();
    if class_dim(&g) != r.dim {
        bad.push(format!("class dim {} != {}", class_dim(&g), r.dim));
    }
    if z.length_plus_rank() != r.dim {
        bad.push(format!("l+rk {} != {}", z.length_plus_rank(), r.dim));
    }
    if !z.is_involution() {
        bad.push("z is not an involution".into());
    }
    if !lies_over(&g, &z).unwrap() {
        let got = spherical_bruhat::bruhat::bruhat_cell(&g).unwrap().weyl.reduced_word();
        bad.push(format!("lies over {got:?}, expected {:?}", r.z_word));
    }
    if r.claims_opposite_borel() != in_opposite_borel(&g) || (!r.claims_opposite_borel() && !g.is_monomial()) {
        bad.push("location claim".into());
    }
    let d = &r.descriptor;
    match r.kind {
        ClassKind::Unipotent => {
            if jordan_type(&g).ok().as_ref() != d.partition.as_ref() {
                bad.push(format!("jordan type {:?}", jordan_type(&g)));
            }
        }
        ClassKind::Semisimple => {
            if !is_semisimple(&g, &d.eigenvalue_scalars().unwrap()) {
                bad.push("eigenvalues".into());
            }
        }
        ClassKind::Mixed => {
            let md = mixed_decomposition(&g).unwrap();
            if !is_semisimple(&md.semisimple, &d.eigenvalue_scalars().unwrap()) {
                bad.push("semisimple part".into());
            }
            if jordan_type(&md.unipotent).ok().as_ref() != d.partition.as_ref() {
                bad.push(format!("unipotent part {:?}", jordan_type(&md.unipotent)));
            }
            if !md.unipotent_trivial_on(d.unipotent_trivial_on.unwrap()) {
                bad.push("unipotent part not trivial on the stated eigenspace".into());
            }
        }
    }
    bad
}

#[test]
fn classical_records_are_consistent() {
    let mut failures = Vec::new();
    for label in classical_labels(5) {
        for r in enumerate_spherical(&label).unwrap() {
            for p in record_problems(&r) {
                failures.push(format!("{label} {}: {p}", r.label));
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn exceptional_records_match_oracles() {
    let mut failures = Vec::new();
    for label in ["E6", "E7", "E8", "F4", "G2"] {
        let rs = RootSystem::from_label(label).unwrap();
        for r in enumerate_spherical(label).unwrap() {
            let z = r.expected_z().unwrap();
            let oracle = match &r.recipe {
                Recipe::GradedRoots(roots) => {
                    let roots: Vec<Root> = roots.iter().cloned().map(Root).collect();
                    Some(graded_dim_oracle(&rs, &roots).map_err(|e| e.to_string()))
                }
                Recipe::Coweight { index, order } => Some(Ok(coweight_dim_oracle(&rs, *index, *order))),
                _ => None,
            };
            if let Some(o) = oracle {
                if o != Ok(r.dim) {
                    failures.push(format!("{label} {}: oracle {o:?} != {}", r.label, r.dim));
                }
            }
            if z.length_plus_rank() != r.dim {
                failures.push(format!("{label} {}: l+rk {} != {}", r.label, z.length_plus_rank(), r.dim));
            }
            if !z.is_involution() {
                failures.push(format!("{label} {}: not an involution", r.label));
            }
            let ws = r.witness_cells().unwrap();
            if !ws.is_empty() {
                for w in &ws {
                    assert!(w.bruhat_leq(&z).unwrap());
                }
                if !WeylElement::unique_common_upper_bound_is_w0(&ws).unwrap() {
                    failures.push(format!("{label} {}: witnesses do not force w0", r.label));
                }
            }
            assert!(matches!(r.base_representative(), Err(AtlasError::NoMatrixModel(_))));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn record_counts() {
    assert_eq!(enumerate_spherical("E8").unwrap().len(), 6);
    assert!(matches!(enumerate_spherical("Z9"), Err(AtlasError::UnsupportedGroup(_))));
    assert!(matches!(enumerate_spherical("D3"), Err(AtlasError::UnsupportedGroup(_))));
}

#[test]
fn proof_identities_hold() {
    for label in ["C2", "C3", "C4", "C5", "D4", "D5", "D6"] {
        let ctx = GroupContext::from_label(label).unwrap();
        let ids = proof_identities(&ctx);
        assert!(!ids.is_empty());
        for id in ids {
            assert!(id.holds(&ctx), "{label} {}", id.name);
        }
    }
}

#[test]
fn json_round_trip() {
    for label in ["A3", "B3", "C4", "D5", "E7", "F4"] {
        let recs = expand_central(&enumerate_spherical(label).unwrap());
        let back = import_json(&export_json(&recs)).unwrap();
        assert_eq!(back, recs);
    }
}

#[test]
fn central_twists_keep_the_cell() {
    for label in ["A2", "A3", "C3", "D4"] {
        let recs = expand_central(&enumerate_spherical(label).unwrap());
        for r in recs.iter().filter(|r| r.central_twist.is_some()) {
            let g = r.representative().unwrap();
            assert!(lies_over(&g, &r.expected_z().unwrap()).unwrap(), "{label} {}", r.label);
            assert_eq!(class_dim(&g), r.dim);
        }
    }
    assert_eq!(expand_central(&enumerate_spherical("B3").unwrap()).len(), enumerate_spherical("B3").unwrap().len());
}
