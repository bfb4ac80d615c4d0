use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{construct, BuildOptions, ConstructionSpec};
use crate::analysis::{analyze, recover_lambda, CodeClass, CodeReport, OracleBudget};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum RowOutcome {
    Built {
        predicted_lambda: String,
        lambda_matches: bool,
        report: Box<CodeReport>,
    },
    Refused {
        hypothesis: Option<String>,
        error: String,
    },
    /// An internal invariant failed; always a bug.
    Failed { error: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub spec: ConstructionSpec,
    pub label: String,
    #[serde(flatten)]
    pub outcome: RowOutcome,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub rows: usize,
    pub built: usize,
    pub refused: usize,
    pub failed: usize,
    pub self_dual: usize,
    pub mds: usize,
    pub nmds: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepTable {
    pub schema: u32,
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

impl SweepTable {
    /// Built rows that are not self-dual, disagree on `lambda`, or report an
    /// invariant violation, plus all failed rows.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for row in &self.rows {
            match &row.outcome {
                RowOutcome::Built {
                    lambda_matches,
                    report,
                    ..
                } => {
                    if !report.self_dual {
                        out.push(format!("{}: not self-dual", row.label));
                    }
                    if !lambda_matches {
                        out.push(format!("{}: predicted lambda differs", row.label));
                    }
                    for v in report.invariant_violations() {
                        out.push(format!("{}: {v}", row.label));
                    }
                }
                RowOutcome::Failed { error } => out.push(format!("{}: {error}", row.label)),
                RowOutcome::Refused { .. } => {}
            }
        }
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let detail = match &row.outcome {
                RowOutcome::Built {
                    predicted_lambda,
                    lambda_matches,
                    report,
                } => {
                    let witness = report.witness.as_ref().map_or_else(
                        || "-".to_string(),
                        |w| {
                            let items: Vec<String> = w.iter().map(ToString::to_string).collect();
                            format!("{{{}}}", items.join(","))
                        },
                    );
                    let d = report
                        .min_distance
                        .map_or_else(|| "-".to_string(), |d| d.to_string());
                    format!(
                        "built    n={} k={} {} self_dual={} lambda={} lambda_matches={} witness={} d={} field={}",
                        report.params.n,
                        report.params.k,
                        report.classification,
                        report.self_dual,
                        predicted_lambda,
                        lambda_matches,
                        witness,
                        d,
                        report.params.field,
                    )
                }
                RowOutcome::Refused { error, .. } => format!("refused  {error}"),
                RowOutcome::Failed { error } => format!("FAILED   {error}"),
            };
            out.push_str(&format!("{}: {detail}\n", row.label));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "rows={} built={} refused={} failed={} self_dual={} mds={} nmds={}\n",
            s.rows, s.built, s.refused, s.failed, s.self_dual, s.mds, s.nmds
        ));
        out
    }
}

fn run_row(spec: &ConstructionSpec, opts: &BuildOptions, budget: Option<OracleBudget>) -> SweepRow {
    let outcome = match construct(spec, opts).and_then(|c| {
        let report = analyze(&c.code, budget)?;
        Ok((c, report))
    }) {
        Ok((c, report)) => RowOutcome::Built {
            predicted_lambda: c.predicted_lambda.to_string(),
            lambda_matches: recover_lambda(&c.code).as_ref() == Some(&c.predicted_lambda),
            report: Box::new(report),
        },
        Err(e @ Error::Internal(_)) => RowOutcome::Failed {
            error: e.to_string(),
        },
        Err(e) => RowOutcome::Refused {
            hypothesis: e.hypothesis_name().map(str::to_string),
            error: e.to_string(),
        },
    };
    SweepRow {
        spec: spec.clone(),
        label: spec.label(),
        outcome,
    }
}

/// Builds and analyzes every point concurrently; rows come back in input
/// order.
pub fn sweep(
    specs: &[ConstructionSpec],
    opts: &BuildOptions,
    budget: Option<OracleBudget>,
) -> SweepTable {
    let rows: Vec<SweepRow> = specs.par_iter().map(|s| run_row(s, opts, budget)).collect();
    let mut summary = SweepSummary {
        rows: rows.len(),
        ..SweepSummary::default()
    };
    for row in &rows {
        match &row.outcome {
            RowOutcome::Built { report, .. } => {
                summary.built += 1;
                summary.self_dual += usize::from(report.self_dual);
                match report.classification {
                    CodeClass::Mds => summary.mds += 1,
                    CodeClass::Nmds => summary.nmds += 1,
                }
            }
            RowOutcome::Refused { .. } => summary.refused += 1,
            RowOutcome::Failed { .. } => summary.failed += 1,
        }
    }
    SweepTable {
        schema: crate::analysis::REPORT_SCHEMA,
        rows,
        summary,
    }
}
