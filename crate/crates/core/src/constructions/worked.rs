//! The two worked examples, rebuilt from fixed parameters and compared with
//! their published verdicts.

use serde::{Deserialize, Serialize};

use super::{construct_t36, BuildOptions, T36Params};
use crate::analysis::{
    analyze, self_dual_structural, subset_sum_witnesses, CodeClass, CodeReport, OracleBudget,
};
use crate::code::{lagrange_weights, TgrsCode};
use crate::error::{Error, Result};
use crate::field::{Embedding, Field};

/// A length-`n` code over `F_(q^2)` with `alpha_i = g^i mod q` (`i = 1..n`),
/// `eta = 2` and `v_i = sqrt(u_i)`.
#[derive(Clone, Copy, Debug)]
pub struct WorkedExample {
    pub id: &'static str,
    pub q: u64,
    pub n: usize,
    pub g: u64,
    pub target: u64,
    pub class: CodeClass,
    /// Published witness, 1-based.
    pub witness: Option<&'static [usize]>,
    pub min_distance: usize,
    pub dual_min_distance: usize,
}

pub const WORKED_EXAMPLES: [WorkedExample; 2] = [
    WorkedExample {
        id: "3.10",
        q: 89,
        n: 10,
        g: 64,
        target: 44,
        class: CodeClass::Mds,
        witness: None,
        min_distance: 6,
        dual_min_distance: 6,
    },
    WorkedExample {
        id: "3.11",
        q: 61,
        n: 14,
        g: 16,
        target: 30,
        class: CodeClass::Nmds,
        witness: Some(&[2, 5, 9, 11, 12, 13, 14]),
        min_distance: 7,
        dual_min_distance: 7,
    },
];

pub fn worked_example(id: &str) -> Result<&'static WorkedExample> {
    WORKED_EXAMPLES.iter().find(|e| e.id == id).ok_or_else(|| {
        let known: Vec<&str> = WORKED_EXAMPLES.iter().map(|e| e.id).collect();
        Error::Parse(format!(
            "unknown example id `{id}` (known: {})",
            known.join(", ")
        ))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub quantity: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleOutcome {
    pub id: String,
    pub passed: bool,
    pub comparisons: Vec<Comparison>,
    pub report: CodeReport,
}

impl ExampleOutcome {
    /// Fixed-width comparison table.
    pub fn table(&self) -> String {
        let w = self
            .comparisons
            .iter()
            .map(|c| c.quantity.len())
            .max()
            .unwrap_or(0)
            .max(8);
        let we = self
            .comparisons
            .iter()
            .map(|c| c.expected.len())
            .max()
            .unwrap_or(0)
            .max(8);
        let mut out = format!("{:<w$}  {:<we$}  observed\n", "quantity", "expected");
        for c in &self.comparisons {
            out.push_str(&format!(
                "{:<w$}  {:<we$}  {}{}\n",
                c.quantity,
                c.expected,
                c.observed,
                if c.pass { "" } else { "   <-- MISMATCH" }
            ));
        }
        out.push_str(&format!(
            "example {}: {}\n",
            self.id,
            if self.passed { "PASS" } else { "FAIL" }
        ));
        out
    }
}

fn fmt_set(s: &[usize]) -> String {
    let items: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

impl WorkedExample {
    pub fn build(&self) -> Result<TgrsCode> {
        let fq = Field::prime(self.q)?;
        let ext = Field::new(self.q, 2)?;
        let emb = Embedding::new(&fq, &ext)?;
        let g = fq.from_u64(self.g);
        let alpha_q: Vec<_> = (1..=self.n).map(|i| g.pow(i as u128)).collect();
        let u = lagrange_weights(&alpha_q)?;
        let v = u
            .iter()
            .map(|ui| {
                let r = emb.apply(ui)?;
                ext.sqrt(&r)
                    .ok_or_else(|| Error::Internal(format!("u = {ui} has no square root")))
            })
            .collect::<Result<Vec<_>>>()?;
        let alpha = alpha_q
            .iter()
            .map(|a| emb.apply(a))
            .collect::<Result<Vec<_>>>()?;
        TgrsCode::new(&ext, alpha, v, self.n / 2, ext.from_u64(2))
    }

    /// Builds the code, runs every check, and compares with the published
    /// values.
    pub fn run(&self, budget: OracleBudget) -> Result<ExampleOutcome> {
        let code = self.build()?;
        let report = analyze(&code, Some(budget))?;
        let structural = self_dual_structural(&code)?;
        let ext = code.field();
        let mut rows = Vec::new();
        let mut row = |quantity: &str, expected: String, observed: String| {
            let pass = expected == observed;
            rows.push(Comparison {
                quantity: quantity.to_string(),
                expected,
                observed,
                pass,
            });
        };

        row("-1/eta", self.target.to_string(), report.target.clone());
        row(
            "classification",
            self.class.to_string(),
            report.classification.to_string(),
        );
        let target = ext.from_u64(self.target);
        let all = subset_sum_witnesses(code.alpha(), code.k(), &target)?;
        match self.witness {
            None => row(
                "k-subsets summing to -1/eta",
                "0".into(),
                all.len().to_string(),
            ),
            Some(w) => {
                let zero_based: Vec<usize> = w.iter().map(|i| i - 1).collect();
                let sum = zero_based
                    .iter()
                    .fold(ext.zero(), |acc, &i| acc + &code.alpha()[i]);
                row(
                    &format!("sum over {}", fmt_set(w)),
                    self.target.to_string(),
                    sum.to_string(),
                );
                row(
                    &format!("{} is a witness", fmt_set(w)),
                    "true".into(),
                    all.contains(&zero_based).to_string(),
                );
            }
        }
        row(
            "self-dual (structural)",
            "true".into(),
            structural.self_dual.to_string(),
        );
        row(
            "lambda",
            "1".into(),
            structural
                .lambda
                .map_or_else(|| "-".to_string(), |l| l.to_string()),
        );
        row(
            "self-dual (G G^T = 0)",
            "true".into(),
            report.self_dual.to_string(),
        );
        row(
            "G H^T = 0",
            "true".into(),
            report.checks.g_ht_zero.to_string(),
        );
        let opt = |d: Option<usize>| d.map_or_else(|| "skipped".to_string(), |d| d.to_string());
        row(
            "minimum distance",
            self.min_distance.to_string(),
            opt(report.min_distance),
        );
        row(
            "dual minimum distance",
            self.dual_min_distance.to_string(),
            opt(report.dual_min_distance),
        );
        let t36 = construct_t36(
            &T36Params {
                q: self.q,
                beta: "1".into(),
                n: self.n,
                j: 0,
            },
            &BuildOptions::default(),
        )?;
        row(
            "alpha, eta match T36 (beta=1, j=0)",
            "true".into(),
            (t36.code.alpha() == code.alpha() && t36.code.eta() == code.eta()).to_string(),
        );

        Ok(ExampleOutcome {
            id: self.id.to_string(),
            passed: rows.iter().all(|r| r.pass),
            comparisons: rows,
            report,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id() {
        let e = worked_example("9.99").unwrap_err();
        assert!(e.to_string().contains("unknown example id"));
    }

    #[test]
    fn both_examples_pass() {
        for ex in &WORKED_EXAMPLES {
            let out = ex.run(OracleBudget::default()).unwrap();
            assert!(out.passed, "{}", out.table());
        }
    }
}
