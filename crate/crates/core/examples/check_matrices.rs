//! Generator and parity-check matrices in each of the three check-matrix
//! cases.

use tgrs::{Field, TgrsCode};

fn main() -> tgrs::Result<()> {
    let f = Field::prime(13)?;
    let e = |xs: &[i64]| xs.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
    let ones = e(&[1; 4]);

    // a = 1+2+3+4 = 10; eta = 5 is generic, eta = -1/10 is singular.
    // Points summing to zero give the zero-sum case.
    let cases = [
        ("generic", e(&[1, 2, 3, 4]), f.from_u64(5)),
        ("singular", e(&[1, 2, 3, 4]), -f.from_u64(10).inv()?),
        ("zero-sum", e(&[1, 2, 3, 7]), f.from_u64(5)),
    ];
    for (name, alpha, eta) in cases {
        let code = TgrsCode::new(&f, alpha, ones.clone(), 2, eta)?;
        let g = code.generator_matrix();
        let h = code.check_matrix();
        println!("{name}: case {}, eta = {}", code.case_tag(), code.eta());
        print!("G =\n{g}H =\n{h}");
        println!("G H^T zero: {}\n", g.mul_transpose(h)?.is_zero());
    }

    let code = TgrsCode::new(&f, e(&[1, 2, 3, 4]), ones, 2, f.from_u64(5))?;
    let word = code.twisted_eval(&e(&[1, 1]))?;
    println!("codeword of 1 + x + 5x^2: {word:?}");
    println!("syndrome: {:?}", code.syndrome(&word)?);
    Ok(())
}
