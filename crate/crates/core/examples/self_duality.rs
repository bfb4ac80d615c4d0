//! Structural and matrix self-duality tests, and the full report.

use tgrs::analysis::{analyze, render_text, self_dual_matrix, self_dual_structural, OracleBudget};
use tgrs::{lagrange_weights, Embedding, Field, TgrsCode};

fn main() -> tgrs::Result<()> {
    // Half-rate code over F_(13^2) with v_i = sqrt(lambda u_i) and
    // 2 + a eta = 0.
    let f = Field::prime(13)?;
    let ext = Field::new(13, 2)?;
    let emb = Embedding::new(&f, &ext)?;
    let alpha: Vec<_> = [1, 2, 3, 4, 5, 6].iter().map(|&x| f.from_u64(x)).collect();
    let a: tgrs::FieldElement = alpha.iter().cloned().sum();
    let eta = -f.from_u64(2) * a.inv()?;
    let v = lagrange_weights(&alpha)?
        .iter()
        .map(|u| Ok(ext.sqrt(&emb.apply(u)?).expect("square in F_(q^2)")))
        .collect::<tgrs::Result<Vec<_>>>()?;
    let alpha = alpha
        .iter()
        .map(|x| emb.apply(x))
        .collect::<tgrs::Result<Vec<_>>>()?;
    let code = TgrsCode::new(&ext, alpha, v.clone(), 3, emb.apply(&eta)?)?;

    let verdict = self_dual_structural(&code)?;
    println!("structural: {verdict:?}");
    println!("G G^T = 0: {}", self_dual_matrix(&code));

    // Any other twist breaks it.
    let other = TgrsCode::new(&ext, code.alpha().to_vec(), v, 3, ext.one())?;
    println!(
        "with eta = 1: structural {}, matrix {}",
        self_dual_structural(&other)?.self_dual,
        self_dual_matrix(&other)
    );

    print!(
        "{}",
        render_text(&analyze(&code, Some(OracleBudget::default()))?)
    );
    Ok(())
}
