//! The subset-sum MDS/NMDS criterion against the brute-force distance
//! oracle.

use tgrs::analysis::{
    classify, dual_min_distance_oracle, min_distance_oracle, subset_sum_witnesses, OracleBudget,
};
use tgrs::{Field, TgrsCode};

fn main() -> tgrs::Result<()> {
    let f = Field::prime(13)?;
    let e = |xs: &[i64]| xs.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
    let alpha = e(&[1, 2, 3, 4, 5, 6]);
    let budget = OracleBudget::default();
    for eta in 1..13 {
        let code = TgrsCode::new(&f, alpha.clone(), e(&[1; 6]), 3, f.from_u64(eta))?;
        let c = classify(&code)?;
        let all = subset_sum_witnesses(code.alpha(), code.k(), &c.target)?;
        println!(
            "eta = {eta:2}  -1/eta = {:2}  {:4}  witnesses {:2}  d = {}  dual d = {}",
            c.target,
            c.class,
            all.len(),
            min_distance_oracle(&code, budget)?,
            dual_min_distance_oracle(&code, budget)?
        );
    }
    Ok(())
}
