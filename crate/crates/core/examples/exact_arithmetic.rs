//! Exact scalars in Q(zeta_m)(t), and matrices over them.

use spherical_bruhat::arith::{parse_scalar, poly_from_roots, ExactMatrix, Scalar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z = Scalar::zeta(3, 1)?;
    let sum = &(&Scalar::one() + &z) + &(&z * &z);
    println!("1 + z + z^2 in Q(zeta_3) = {sum}");

    let i = Scalar::zeta(4, 1)?;
    println!("zeta_4 * zeta_3 = {} (order {})", &i * &z, (&i * &z).order());

    let r = parse_scalar("(t^2 - 1)/(t + 1)", 1)?;
    println!("(t^2-1)/(t+1) = {r}, at t = 3: {}", r.eval_t(&Scalar::from_int(3))?);

    let t = Scalar::t();
    let m = ExactMatrix::diagonal(&[t.clone(), t.inv()?, Scalar::one()]);
    println!("det diag(t, 1/t, 1) = {}", m.det()?);

    let a = ExactMatrix::from_ints(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]);
    println!("char poly of A3 Cartan matrix (constant term first):");
    for c in a.char_poly() {
        print!(" {c}");
    }
    println!();
    let roots = [(Scalar::from_int(-1), 2), (Scalar::from_int(1), 1)];
    let p: Vec<String> = poly_from_roots(&roots).iter().map(|c| c.to_string()).collect();
    println!("(x+1)^2 (x-1) = [{}]", p.join(", "));
    println!("inverse:\n{}", a.inverse()?);
    Ok(())
}
