//! Irreducibility, splitting degrees and roots of polynomials.

use tgrs::{gcd, Field, Poly};

fn main() -> tgrs::Result<()> {
    let f = Field::prime(89)?;
    // (x^11 - 1)/(x - 1) splits over F_89 because 11 | 88.
    let cyclo = Poly::from_ints(&f, &[1; 11]);
    println!("f = {cyclo}");
    println!("splitting degree: {}", cyclo.splitting_degree()?);
    println!("roots: {:?}", cyclo.roots_in(&f)?);

    // x^6 + x^5 + 1 over F_3 needs an extension.
    let f3 = Field::prime(3)?;
    let m = Poly::from_ints(&f3, &[1, 0, 0, 0, 0, 1, 1]);
    let s = m.splitting_degree()?;
    println!(
        "m = {m}: squarefree {}, splits over F_(3^{s})",
        m.is_squarefree()?
    );
    for (d, factor) in m.distinct_degree_factors()? {
        println!("  product of degree-{d} factors: {factor}");
    }
    let ext = Field::new(3, s as usize)?;
    for r in m.roots_in(&ext)? {
        println!("  root {r}, m(root) = {}", m.eval(&r)?);
    }

    // Large field: roots come from randomized splitting.
    let big = Field::prime(65537)?;
    let p = Poly::from_roots(
        &big,
        &[big.from_u64(5), big.from_u64(40000), big.from_u64(7)],
    );
    println!("roots over F_65537: {:?}", p.roots_in(&big)?);
    println!("gcd(p, p') = {}", gcd(&p, &p.derivative())?);
    Ok(())
}
