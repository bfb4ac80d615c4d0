use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{
    classify, dual_min_distance_oracle, min_distance_oracle, recover_lambda, self_dual_matrix,
    self_dual_structural, CodeClass, OracleBudget,
};
use crate::code::{CaseTag, TgrsCode};
use crate::error::Result;
use crate::field::FieldElement;

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub field: String,
    pub n: usize,
    pub k: usize,
    pub eta: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum OracleStatus {
    Ran,
    Skipped { reason: String },
    Disabled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    #[serde(rename = "G_Ht_zero")]
    pub g_ht_zero: bool,
    #[serde(rename = "G_Gt_zero")]
    pub g_gt_zero: bool,
    pub rank_g: usize,
    pub rank_h: usize,
    pub moment_identities: bool,
    /// Structural verdict when `n = 2k` (matrix fallback below `k = 3`).
    pub structural_self_dual: Option<bool>,
    /// Whether the subset-sum verdict agrees with the distance oracles.
    pub criterion_matches_oracle: Option<bool>,
}

/// Everything known about one code. Witness positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub schema: u32,
    pub params: ReportParams,
    pub case_tag: CaseTag,
    pub classification: CodeClass,
    /// `-1/eta`, the sum a witness subset must hit.
    pub target: String,
    pub witness: Option<Vec<usize>>,
    pub self_dual: bool,
    pub lambda: Option<String>,
    pub min_distance: Option<usize>,
    pub dual_min_distance: Option<usize>,
    pub oracle: OracleStatus,
    pub checks: Checks,
}

impl CodeReport {
    /// Internal invariants that failed. Any entry here is a bug, not a
    /// property of the input.
    pub fn invariant_violations(&self) -> Vec<String> {
        let (n, k) = (self.params.n, self.params.k);
        let mut out = Vec::new();
        if !self.checks.g_ht_zero {
            out.push("G * H^T != 0".to_string());
        }
        if self.checks.rank_g != k {
            out.push(format!("rank(G) = {} != k = {k}", self.checks.rank_g));
        }
        if self.checks.rank_h != n - k {
            out.push(format!(
                "rank(H) = {} != n - k = {}",
                self.checks.rank_h,
                n - k
            ));
        }
        if !self.checks.moment_identities {
            out.push("moment identities of the Lagrange weights fail".to_string());
        }
        if self
            .checks
            .structural_self_dual
            .is_some_and(|s| s != self.self_dual)
        {
            out.push("structural and matrix self-duality disagree".to_string());
        }
        if self.checks.criterion_matches_oracle == Some(false) {
            out.push("subset-sum classification disagrees with the distance oracle".to_string());
        }
        if (self.classification == CodeClass::Nmds) != self.witness.is_some() {
            out.push("classification and witness disagree".to_string());
        }
        out
    }
}

/// `sum u_i a_i^m` is 0 for `m <= n-2`, 1 for `m = n-1`, and `sum a_i` for
/// `m = n`.
pub fn moment_identities_hold(alpha: &[FieldElement], weights: &[FieldElement]) -> bool {
    let field = alpha[0].field();
    let n = alpha.len();
    let mut powers: Vec<FieldElement> = weights.to_vec();
    for m in 0..=n {
        let total = powers.iter().fold(field.zero(), |acc, x| acc + x);
        let expected = match m {
            _ if m + 2 <= n => field.zero(),
            _ if m + 1 == n => field.one(),
            _ => alpha.iter().fold(field.zero(), |acc, a| acc + a),
        };
        if total != expected {
            return false;
        }
        for (p, a) in powers.iter_mut().zip(alpha) {
            *p = &*p * a;
        }
    }
    true
}

/// Runs every check on `code`. Distance oracles run only when a budget is
/// given and the search fits in it.
pub fn analyze(code: &TgrsCode, budget: Option<OracleBudget>) -> Result<CodeReport> {
    let (n, k) = (code.n(), code.k());
    let g = code.generator_matrix();
    let h = code.check_matrix();
    let class = classify(code)?;
    let self_dual = self_dual_matrix(code);
    let structural = if n == 2 * k {
        Some(self_dual_structural(code)?.self_dual)
    } else {
        None
    };
    let lambda = if self_dual {
        recover_lambda(code)
    } else {
        None
    };

    let (oracle, min_distance, dual_min_distance) = match budget {
        None => (OracleStatus::Disabled, None, None),
        Some(b) if !b.admits(n, n - k) || !b.admits(n, k) => (
            OracleStatus::Skipped {
                reason: format!(
                    "column subsets of length {n} exceed the budget of {} per size",
                    b.max_subsets_per_size
                ),
            },
            None,
            None,
        ),
        Some(b) => (
            OracleStatus::Ran,
            Some(min_distance_oracle(code, b)?),
            Some(dual_min_distance_oracle(code, b)?),
        ),
    };
    let criterion_matches_oracle =
        min_distance
            .zip(dual_min_distance)
            .map(|(d, dd)| match class.class {
                CodeClass::Mds => d == n - k + 1,
                CodeClass::Nmds => d == n - k && dd == k,
            });

    Ok(CodeReport {
        schema: REPORT_SCHEMA,
        params: ReportParams {
            field: code.field().to_string(),
            n,
            k,
            eta: code.eta().to_string(),
        },
        case_tag: code.case_tag(),
        classification: class.class,
        target: class.target.to_string(),
        witness: class
            .witness
            .map(|w| w.into_iter().map(|i| i + 1).collect()),
        self_dual,
        lambda: lambda.map(|l| l.to_string()),
        min_distance,
        dual_min_distance,
        oracle,
        checks: Checks {
            g_ht_zero: g.mul_transpose(h)?.is_zero(),
            g_gt_zero: g.mul_transpose(g)?.is_zero(),
            rank_g: g.rank(),
            rank_h: h.rank(),
            moment_identities: moment_identities_hold(code.alpha(), code.weights()),
            structural_self_dual: structural,
            criterion_matches_oracle,
        },
    })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref()
        .map_or_else(|| "-".to_string(), ToString::to_string)
}

/// Line-per-field text rendering; carries the same information as the JSON.
pub fn render_text(r: &CodeReport) -> String {
    let mut s = String::new();
    let oracle = match &r.oracle {
        OracleStatus::Ran => "ran".to_string(),
        OracleStatus::Skipped { reason } => format!("skipped ({reason})"),
        OracleStatus::Disabled => "disabled".to_string(),
    };
    let witness = r.witness.as_ref().map(|w| {
        let items: Vec<String> = w.iter().map(ToString::to_string).collect();
        format!("{{{}}}", items.join(","))
    });
    let _ = writeln!(s, "schema: {}", r.schema);
    let _ = writeln!(s, "field: {}", r.params.field);
    let _ = writeln!(s, "n: {}", r.params.n);
    let _ = writeln!(s, "k: {}", r.params.k);
    let _ = writeln!(s, "eta: {}", r.params.eta);
    let _ = writeln!(s, "case_tag: {}", r.case_tag);
    let _ = writeln!(s, "classification: {}", r.classification);
    let _ = writeln!(s, "target: {}", r.target);
    let _ = writeln!(s, "witness: {}", opt(&witness));
    let _ = writeln!(s, "self_dual: {}", r.self_dual);
    let _ = writeln!(s, "lambda: {}", opt(&r.lambda));
    let _ = writeln!(s, "min_distance: {}", opt(&r.min_distance));
    let _ = writeln!(s, "dual_min_distance: {}", opt(&r.dual_min_distance));
    let _ = writeln!(s, "oracle: {oracle}");
    let _ = writeln!(s, "check G_Ht_zero: {}", r.checks.g_ht_zero);
    let _ = writeln!(s, "check G_Gt_zero: {}", r.checks.g_gt_zero);
    let _ = writeln!(s, "check rank_g: {}", r.checks.rank_g);
    let _ = writeln!(s, "check rank_h: {}", r.checks.rank_h);
    let _ = writeln!(s, "check moment_identities: {}", r.checks.moment_identities);
    let _ = writeln!(
        s,
        "check structural_self_dual: {}",
        opt(&r.checks.structural_self_dual)
    );
    let _ = writeln!(
        s,
        "check criterion_matches_oracle: {}",
        opt(&r.checks.criterion_matches_oracle)
    );
    s
}
