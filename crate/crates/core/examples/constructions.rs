//! One build from each construction family.

use tgrs::analysis::{classify, recover_lambda, self_dual_matrix};
use tgrs::constructions::{
    construct, BuildOptions, ConstructionSpec, T31Params, T33Params, T35Params, T36Params,
};

fn main() {
    let specs = [
        ConstructionSpec::T31(T31Params {
            p: 3,
            t: 1,
            l: 1,
            b: "1".into(),
            c: "1".into(),
        }),
        ConstructionSpec::T33(T33Params { p: 5, s: None }),
        ConstructionSpec::T33(T33Params { p: 7, s: None }),
        ConstructionSpec::T35(T35Params {
            q_prime: 13,
            b: "3".into(),
            n: 4,
        }),
        ConstructionSpec::T36(T36Params {
            q: 89,
            beta: "1".into(),
            n: 10,
            j: 0,
        }),
        ConstructionSpec::T36(T36Params {
            q: 61,
            beta: "3".into(),
            n: 14,
            j: 1,
        }),
        ConstructionSpec::T36(T36Params {
            q: 13,
            beta: "1".into(),
            n: 10,
            j: 0,
        }),
    ];
    for spec in &specs {
        match construct(spec, &BuildOptions::default()) {
            Ok(c) => {
                let class = classify(&c.code).expect("built codes classify");
                println!(
                    "{}: [{}, {}] over {}, {}, self-dual {}, lambda {} (predicted {})",
                    spec.label(),
                    c.code.n(),
                    c.code.k(),
                    c.provenance.code_field,
                    class.class,
                    self_dual_matrix(&c.code),
                    recover_lambda(&c.code).map_or("-".into(), |l| l.to_string()),
                    c.predicted_lambda,
                );
            }
            Err(e) => println!("{}: refused: {e}", spec.label()),
        }
    }
}
