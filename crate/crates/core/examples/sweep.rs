//! Runs the cyclic-point family over a range of fields.

use tgrs::constructions::{sweep, BuildOptions, ConstructionSpec, T36Params};

fn main() {
    let mut specs = Vec::new();
    for q in (29..=89u64).filter(|&q| (2..q).all(|d| q % d != 0)) {
        for n in (2..q as usize - 1)
            .step_by(2)
            .filter(|n| (q - 1) % (*n as u64 + 1) == 0)
        {
            specs.push(ConstructionSpec::T36(T36Params {
                q,
                beta: "1".into(),
                n,
                j: 0,
            }));
        }
    }
    let table = sweep(&specs, &BuildOptions::default(), None);
    print!("{}", table.render_text());
    assert!(table.violations().is_empty());
}
