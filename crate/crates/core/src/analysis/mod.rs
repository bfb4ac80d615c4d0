//! MDS/NMDS classification, self-duality tests and distance oracles.

mod distance;
mod report;
mod subset;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use distance::{
    dual_min_distance_oracle, min_dependent_columns, min_distance_oracle, OracleBudget, BUDGET_ENV,
    DEFAULT_BUDGET,
};
pub use report::{
    analyze, moment_identities_hold, render_text, Checks, CodeReport, OracleStatus, ReportParams,
    REPORT_SCHEMA,
};
pub use subset::{
    subset_sum_witness, subset_sum_witness_with, subset_sum_witnesses, SubsetSearch, MITM_THRESHOLD,
};

use crate::code::{CaseTag, TgrsCode};
use crate::error::{Error, Result};
use crate::field::FieldElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CodeClass {
    #[serde(rename = "MDS")]
    Mds,
    #[serde(rename = "NMDS")]
    Nmds,
}

impl fmt::Display for CodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeClass::Mds => "MDS",
            CodeClass::Nmds => "NMDS",
        })
    }
}

/// Verdict of the subset-sum criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub class: CodeClass,
    /// 0-based positions of a k-subset with `sum(alpha_I) = -1/eta`.
    pub witness: Option<Vec<usize>>,
    /// `-1/eta`.
    pub target: FieldElement,
}

/// A TGRS code is MDS iff no k-subset of the evaluation points sums to
/// `-1/eta`, and NMDS otherwise.
pub fn classify(code: &TgrsCode) -> Result<Classification> {
    let target = -code.eta().inv()?;
    let witness = subset_sum_witness(code.alpha(), code.k(), &target)?;
    Ok(Classification {
        class: if witness.is_some() {
            CodeClass::Nmds
        } else {
            CodeClass::Mds
        },
        witness,
        target,
    })
}

/// Closed form of the k x k minor of the twisted Vandermonde matrix on the
/// given points (multipliers 1):
/// `prod_{s<t} (x_t - x_s) * (1 + eta * sum(x))`.
pub fn k_minor_det(points: &[FieldElement], eta: &FieldElement) -> Result<FieldElement> {
    let field = eta.field();
    let mut vandermonde = field.one();
    let mut sum = field.zero();
    for (t, xt) in points.iter().enumerate() {
        for (s, xs) in points[..t].iter().enumerate() {
            let diff = xt.checked_sub(xs)?;
            if diff.is_zero() {
                return Err(Error::RepeatedPoints(s, t));
            }
            vandermonde = vandermonde * diff;
        }
        sum = sum.checked_add(xt)?;
    }
    Ok(vandermonde * (field.one() + eta * &sum))
}

/// `lambda` with `v_i^2 = lambda * u_i` for every position, if one exists.
pub fn recover_lambda(code: &TgrsCode) -> Option<FieldElement> {
    let u = code.weights();
    let v = code.v();
    let lambda = v[0].square() * u[0].inv().ok()?;
    v.iter()
        .zip(u)
        .all(|(vi, ui)| vi.square() == &lambda * ui)
        .then_some(lambda)
}

/// Result of the structural self-duality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralVerdict {
    pub self_dual: bool,
    pub lambda: Option<FieldElement>,
    /// False when `k < 3`: the structural criterion is only established for
    /// `k >= 3`, so the verdict came from [`self_dual_matrix`] instead.
    pub criterion_applies: bool,
}

/// Self-duality of a half-rate code from its parameters alone: the code is
/// GENERIC, `v_i^2 = lambda * u_i` for a common `lambda`, and
/// `2 + a * eta = 0`. ZERO_SUM and SINGULAR codes are never self-dual.
pub fn self_dual_structural(code: &TgrsCode) -> Result<StructuralVerdict> {
    let (n, k) = (code.n(), code.k());
    if n != 2 * k {
        return Err(Error::NotHalfRate { n, k });
    }
    if k < 3 {
        let self_dual = self_dual_matrix(code);
        return Ok(StructuralVerdict {
            self_dual,
            lambda: if self_dual {
                recover_lambda(code)
            } else {
                None
            },
            criterion_applies: false,
        });
    }
    if code.case_tag() != CaseTag::Generic {
        return Ok(StructuralVerdict {
            self_dual: false,
            lambda: None,
            criterion_applies: true,
        });
    }
    let field = code.field();
    let twist_ok = (field.from_u64(2) + code.alpha_sum() * code.eta()).is_zero();
    let lambda = recover_lambda(code);
    Ok(StructuralVerdict {
        self_dual: twist_ok && lambda.is_some(),
        lambda: if twist_ok { lambda } else { None },
        criterion_applies: true,
    })
}

/// `n = 2k` and `G G^T = 0`.
pub fn self_dual_matrix(code: &TgrsCode) -> bool {
    let g = code.generator_matrix();
    code.n() == 2 * code.k()
        && g.mul_transpose(g)
            .expect("generator matrix is internally consistent")
            .is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn f13_code(v: &[u64]) -> TgrsCode {
        let f = Field::prime(13).unwrap();
        let e = |xs: &[u64]| xs.iter().map(|&x| f.from_u64(x)).collect::<Vec<_>>();
        TgrsCode::new(&f, e(&[1, 2, 3, 4]), e(v), 2, f.from_u64(5)).unwrap()
    }

    #[test]
    fn small_code_is_nmds() {
        let code = f13_code(&[1, 1, 1, 1]);
        let c = classify(&code).unwrap();
        assert_eq!(c.class, CodeClass::Nmds);
        assert_eq!(c.target.as_prime(), Some(5));
        // 1+4 and 2+3 both hit 5; {2,3} comes first in colex order
        assert_eq!(c.witness, Some(vec![1, 2]));
        let all = subset_sum_witnesses(code.alpha(), 2, &c.target).unwrap();
        assert_eq!(all, vec![vec![1, 2], vec![0, 3]]);
    }

    #[test]
    fn minor_closed_form() {
        let f = Field::prime(13).unwrap();
        let eta = f.from_u64(5);
        let pts = [f.from_u64(1), f.from_u64(4)];
        assert!(k_minor_det(&pts, &eta).unwrap().is_zero());
        let one = [f.from_u64(3)];
        assert_eq!(k_minor_det(&one, &eta).unwrap(), f.from_u64(16 % 13));
        assert_eq!(
            k_minor_det(&[f.from_u64(3), f.from_u64(3)], &eta).unwrap_err(),
            Error::RepeatedPoints(0, 1)
        );
    }

    #[test]
    fn small_self_dual_code_uses_matrix_path() {
        // v^2 = (4,1,12,9) = 2 * (2,7,6,11) and 2 + 10*5 = 52 = 0 mod 13
        let code = f13_code(&[2, 1, 5, 3]);
        let verdict = self_dual_structural(&code).unwrap();
        assert!(verdict.self_dual);
        assert!(!verdict.criterion_applies);
        assert_eq!(verdict.lambda, Some(code.field().from_u64(2)));
        assert!(self_dual_matrix(&code));
        assert!(!self_dual_matrix(&f13_code(&[1, 1, 1, 1])));
    }

    #[test]
    fn not_half_rate() {
        let f = Field::prime(13).unwrap();
        let e = |xs: &[u64]| xs.iter().map(|&x| f.from_u64(x)).collect::<Vec<_>>();
        let code = TgrsCode::new(&f, e(&[1, 2, 3, 4, 5]), e(&[1; 5]), 2, f.one()).unwrap();
        assert_eq!(
            self_dual_structural(&code).unwrap_err(),
            Error::NotHalfRate { n: 5, k: 2 }
        );
        assert!(!self_dual_matrix(&code));
    }
}
