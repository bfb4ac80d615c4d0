//! Rebuilds the two worked examples and prints their comparison tables.

use tgrs::analysis::OracleBudget;
use tgrs::constructions::WORKED_EXAMPLES;

fn main() -> tgrs::Result<()> {
    for ex in &WORKED_EXAMPLES {
        let outcome = ex.run(OracleBudget::default())?;
        println!("{}", outcome.table());
    }
    Ok(())
}
