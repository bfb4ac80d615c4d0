//! Brute-force minimum distance via column dependence.
//!
//! The minimum distance of a code equals the smallest number of linearly
//! dependent columns of its parity-check matrix. The search cost depends on
//! `C(n, s)`, not on the field size.

use rayon::prelude::*;

use super::subset::{combinations_below, mask_to_indices};
use crate::code::TgrsCode;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::nt;

/// Default cap on column subsets examined at any one size: `C(24, 12)`.
pub const DEFAULT_BUDGET: u64 = 2_704_156;

/// Environment variable overriding [`DEFAULT_BUDGET`] in the CLI.
pub const BUDGET_ENV: &str = "TGRS_ORACLE_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_subsets_per_size: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_subsets_per_size: DEFAULT_BUDGET,
        }
    }
}

impl OracleBudget {
    pub fn new(max_subsets_per_size: u64) -> Self {
        OracleBudget {
            max_subsets_per_size,
        }
    }

    /// Whether the search on an `rows x n` matrix fits, without running it.
    pub fn admits(&self, n: usize, rows: usize) -> bool {
        (1..=rows.min(n)).all(|s| nt::binomial(n as u64, s as u64) <= self.max_subsets_per_size)
    }
}

/// Smallest number of linearly dependent columns of `m` (`rows + 1` if every
/// set of `rows` columns is independent).
pub fn min_dependent_columns(m: &Matrix, budget: OracleBudget) -> Result<usize> {
    let n = m.cols();
    if n > 60 {
        return Err(Error::Dimension(format!(
            "distance oracle supports n <= 60, got {n}"
        )));
    }
    for s in 1..=m.rows().min(n) {
        let needed = nt::binomial(n as u64, s as u64);
        if needed > budget.max_subsets_per_size {
            return Err(Error::BudgetExceeded {
                size: s,
                needed,
                budget: budget.max_subsets_per_size,
            });
        }
        let dependent = (s - 1..n).into_par_iter().any(|top| {
            combinations_below(top, s - 1).any(|low| {
                let cols = mask_to_indices(low | 1 << top);
                m.select_columns(&cols).rank() < s
            })
        });
        if dependent {
            return Ok(s);
        }
    }
    Ok(m.rows() + 1)
}

/// Minimum Hamming weight of the code, from the columns of `H_{n-k}`.
pub fn min_distance_oracle(code: &TgrsCode, budget: OracleBudget) -> Result<usize> {
    min_dependent_columns(code.check_matrix(), budget)
}

/// Minimum Hamming weight of the dual code, from the columns of `G_k`.
pub fn dual_min_distance_oracle(code: &TgrsCode, budget: OracleBudget) -> Result<usize> {
    min_dependent_columns(code.generator_matrix(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn small_nmds_code() {
        let f = Field::prime(13).unwrap();
        let e = |xs: &[u64]| xs.iter().map(|&x| f.from_u64(x)).collect::<Vec<_>>();
        let code = TgrsCode::new(&f, e(&[1, 2, 3, 4]), e(&[2, 1, 5, 3]), 2, f.from_u64(5)).unwrap();
        assert_eq!(
            min_distance_oracle(&code, OracleBudget::default()).unwrap(),
            2
        );
        assert_eq!(
            dual_min_distance_oracle(&code, OracleBudget::default()).unwrap(),
            2
        );
    }

    #[test]
    fn budget_is_enforced() {
        let f = Field::prime(13).unwrap();
        let e = |xs: &[u64]| xs.iter().map(|&x| f.from_u64(x)).collect::<Vec<_>>();
        let code = TgrsCode::new(&f, e(&[1, 2, 3, 4]), e(&[1, 1, 1, 1]), 2, f.from_u64(1)).unwrap();
        assert!(matches!(
            min_distance_oracle(&code, OracleBudget::new(4)),
            Err(Error::BudgetExceeded {
                size: 2,
                needed: 6,
                ..
            })
        ));
        assert!(!OracleBudget::new(4).admits(4, 2));
        assert!(OracleBudget::new(6).admits(4, 2));
    }
}
