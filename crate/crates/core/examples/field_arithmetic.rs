//! Prime and extension field arithmetic, square roots, and embeddings.

use tgrs::{Embedding, Field};

fn main() -> tgrs::Result<()> {
    let f89 = Field::prime(89)?;
    let two = f89.from_u64(2);
    println!("in F_89: 1/2 = {}, -1/2 = {}", two.inv()?, -two.inv()?);
    println!("generator of F_89^*: {}", f89.find_generator());
    println!("element of order 11: {}", f89.element_of_order(11)?);

    // F_89 has non-squares; all of them become squares in F_{89^2}.
    let ext = Field::new(89, 2)?;
    let emb = Embedding::new(&f89, &ext)?;
    println!("F_(89^2) = {ext}");
    for x in [3u64, 5, 7] {
        let e = f89.from_u64(x);
        let r = ext
            .sqrt(&emb.apply(&e)?)
            .expect("every base element is a square");
        println!(
            "{x}: square in F_89 = {}, sqrt in F_(89^2) = {r}, r^2 = {}",
            e.is_square(),
            r.square()
        );
    }

    let g = ext.primitive_element();
    println!("x in F_(89^2) has order {}", g.multiplicative_order());
    Ok(())
}
