//! Exact k-subset sum search over field elements.
//!
//! Subsets are `u64` bitmasks over positions; increasing mask value is
//! colexicographic order, so "first witness" always means smallest mask.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::FieldElement;

/// Above this length [`SubsetSearch::Auto`] switches to meet-in-the-middle.
pub const MITM_THRESHOLD: usize = 28;
const MAX_POSITIONS: usize = 60;
const MAX_MITM_POSITIONS: usize = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SubsetSearch {
    #[default]
    Auto,
    /// Colex enumeration of all k-subsets, partitioned by largest position.
    Enumerate,
    /// Hash the lower half's subset sums, scan the upper half in mask order.
    MeetInTheMiddle,
}

/// Coefficient-vector view of the points, so sums run without allocating.
struct Digits {
    p: u64,
    width: usize,
    points: Vec<Vec<u64>>,
    target: Vec<u64>,
}

impl Digits {
    fn new(alpha: &[FieldElement], target: &FieldElement) -> Result<Digits> {
        let field = target.field();
        for a in alpha {
            field.ensure_same(a.field())?;
        }
        Ok(Digits {
            p: field.characteristic(),
            width: field.degree(),
            points: alpha.iter().map(|a| a.repr().to_vec()).collect(),
            target: target.repr().to_vec(),
        })
    }

    fn sum_into(&self, mut mask: u64, acc: &mut [u64]) {
        acc.fill(0);
        while mask != 0 {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            for (a, &d) in acc.iter_mut().zip(&self.points[i]) {
                *a += d;
                if *a >= self.p {
                    *a -= self.p;
                }
            }
        }
    }

    fn hits(&self, mask: u64, acc: &mut [u64]) -> bool {
        self.sum_into(mask, acc);
        *acc == *self.target
    }
}

fn next_combination(x: u64) -> u64 {
    let low = x & x.wrapping_neg();
    let ripple = x + low;
    (((ripple ^ x) >> 2) / low) | ripple
}

/// Size-`r` subsets of positions `< m`, in increasing mask order.
pub(crate) fn combinations_below(m: usize, r: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << m;
    let start = if r == 0 { 0 } else { (1u64 << r) - 1 };
    let mut next = (r <= m).then_some(start);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            Some(next_combination(cur)).filter(|&x| x < limit)
        };
        Some(cur)
    })
}

pub(crate) fn mask_to_indices(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

fn check_args(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::Dimension(format!(
            "subset size {k} out of range 1..={n}"
        )));
    }
    if n > MAX_POSITIONS {
        return Err(Error::Dimension(format!(
            "subset search supports at most {MAX_POSITIONS} points, got {n}"
        )));
    }
    Ok(())
}

/// First (colex) size-`k` index subset of `alpha` summing to `target`.
pub fn subset_sum_witness(
    alpha: &[FieldElement],
    k: usize,
    target: &FieldElement,
) -> Result<Option<Vec<usize>>> {
    subset_sum_witness_with(alpha, k, target, SubsetSearch::Auto)
}

pub fn subset_sum_witness_with(
    alpha: &[FieldElement],
    k: usize,
    target: &FieldElement,
    strategy: SubsetSearch,
) -> Result<Option<Vec<usize>>> {
    let n = alpha.len();
    check_args(n, k)?;
    let digits = Digits::new(alpha, target)?;
    let mask = match strategy {
        SubsetSearch::MeetInTheMiddle => meet_in_the_middle(&digits, k)?,
        SubsetSearch::Auto if (MITM_THRESHOLD..=MAX_MITM_POSITIONS).contains(&n) => {
            meet_in_the_middle(&digits, k)?
        }
        _ => enumerate_first(&digits, k),
    };
    Ok(mask.map(mask_to_indices))
}

/// Every witness, in colex order.
pub fn subset_sum_witnesses(
    alpha: &[FieldElement],
    k: usize,
    target: &FieldElement,
) -> Result<Vec<Vec<usize>>> {
    let n = alpha.len();
    check_args(n, k)?;
    let digits = Digits::new(alpha, target)?;
    let per_top: Vec<Vec<u64>> = (k - 1..n)
        .into_par_iter()
        .map(|top| {
            let mut acc = vec![0; digits.width];
            combinations_below(top, k - 1)
                .map(|low| low | 1 << top)
                .filter(|&m| digits.hits(m, &mut acc))
                .collect()
        })
        .collect();
    Ok(per_top.into_iter().flatten().map(mask_to_indices).collect())
}

/// Partitions by the largest chosen position; partitions are themselves in
/// colex order, so the first partition with a hit holds the global first.
fn enumerate_first(digits: &Digits, k: usize) -> Option<u64> {
    let n = digits.points.len();
    (k - 1..n).into_par_iter().find_map_first(|top| {
        let mut acc = vec![0; digits.width];
        combinations_below(top, k - 1)
            .map(|low| low | 1 << top)
            .find(|&m| digits.hits(m, &mut acc))
    })
}

fn meet_in_the_middle(digits: &Digits, k: usize) -> Result<Option<u64>> {
    let n = digits.points.len();
    if n > MAX_MITM_POSITIONS {
        return Err(Error::Dimension(format!(
            "meet-in-the-middle supports at most {MAX_MITM_POSITIONS} points, got {n}"
        )));
    }
    let low_len = n / 2;
    let high_len = n - low_len;
    let mut acc = vec![0; digits.width];

    // (size, sum) -> smallest low mask
    let mut table: HashMap<(u32, Vec<u64>), u64> = HashMap::new();
    for mask in 0..(1u64 << low_len) {
        let size = mask.count_ones();
        if size as usize > k {
            continue;
        }
        digits.sum_into(mask, &mut acc);
        table.entry((size, acc.clone())).or_insert(mask);
    }

    let mut need = vec![0; digits.width];
    for high in 0..(1u64 << high_len) {
        let size = high.count_ones() as usize;
        if size > k || k - size > low_len {
            continue;
        }
        let shifted = high << low_len;
        digits.sum_into(shifted, &mut acc);
        for ((n, &t), &a) in need.iter_mut().zip(&digits.target).zip(&acc) {
            *n = if t >= a { t - a } else { t + digits.p - a };
        }
        if let Some(&low) = table.get(&((k - size) as u32, need.clone())) {
            return Ok(Some(shifted | low));
        }
    }
    Ok(None)
}
