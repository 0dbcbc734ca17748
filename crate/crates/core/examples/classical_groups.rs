//! Matrices in SL, SO and Sp: membership, Jordan types, class dimensions.

use spherical_bruhat::arith::{ExactMatrix, Scalar};
use spherical_bruhat::groups::*;
use spherical_bruhat::roots::Root;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sp6 = GroupContext::from_label("C3")?;
    println!("Sp6: matrix size {}, Lie algebra dim {}", sp6.size(), sp6.lie_dim());

    // Regular unipotent: product of simple root elements.
    let mut u = GroupElement::identity(&sp6);
    for i in 1..=3 {
        u = u.mul(&root_element(&sp6, &Root::simple(3, i), &Scalar::one())?);
    }
    println!("regular unipotent: Jordan type {:?}, class dim {}", jordan_type(&u)?.parts(), class_dim(&u));

    let hi = sp6.root_system().highest_root();
    let x = root_element(&sp6, &hi.neg(), &Scalar::one())?;
    println!("x_(-highest)(1): Jordan type {:?}, class dim {}", jordan_type(&x)?.parts(), class_dim(&x));

    let sigma = GroupElement::new(&sp6, ExactMatrix::diagonal(&[-1, 1, 1, -1, 1, 1].map(Scalar::from_int)))?;
    let eig = [(Scalar::from_int(-1), 2), (Scalar::one(), 4)];
    println!("sigma_1: semisimple with spectrum (-1)^2 1^4: {}, class dim {}", is_semisimple(&sigma, &eig), class_dim(&sigma));

    let md = mixed_decomposition(&sigma.mul(&x))?;
    println!("sigma_1 * x: unipotent part {:?}", jordan_type(&md.unipotent)?.parts());

    for p in [vec![2, 2, 1, 1], vec![3, 1, 1], vec![3, 3, 1]] {
        let p = Partition::new(p);
        println!(
            "{:?}: valid in B {}, spherical shape in B {}",
            p.parts(),
            p.valid_for(spherical_bruhat::roots::Family::B),
            p.is_spherical_shape(spherical_bruhat::roots::Family::B)
        );
    }

    println!("element file format:\n{}", element_to_json(&x));
    let bad = r#"{"group": "C2", "matrix": [[1,1,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}"#;
    println!("rejected: {}", element_from_json(bad).unwrap_err());
    Ok(())
}
