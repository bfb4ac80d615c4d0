//! Twisted generalized Reed-Solomon codes with hook `k-1` and twist 1.
//!
//! A message `(a_0, ..., a_{k-1})` is the polynomial
//! `f(x) = a_0 + a_1 x + ... + a_{k-1} x^{k-1} + eta * a_{k-1} x^k`, and its
//! codeword is `(v_1 f(alpha_1), ..., v_n f(alpha_n))`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::matrix::Matrix;

/// Which closed form the last row of the parity-check matrix takes,
/// depending on `a = sum(alpha)` and `eta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseTag {
    /// `a != 0` and `1 + a*eta != 0`.
    Generic,
    /// `a = 0`.
    ZeroSum,
    /// `a != 0` and `eta = -1/a`.
    Singular,
}

impl CaseTag {
    pub fn of(alpha_sum: &FieldElement, eta: &FieldElement) -> CaseTag {
        if alpha_sum.is_zero() {
            CaseTag::ZeroSum
        } else if (alpha_sum.field().one() + alpha_sum * eta).is_zero() {
            CaseTag::Singular
        } else {
            CaseTag::Generic
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Generic => "GENERIC",
            CaseTag::ZeroSum => "ZERO_SUM",
            CaseTag::Singular => "SINGULAR",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `u_i = prod_{j != i} (alpha_i - alpha_j)^{-1}`.
pub fn lagrange_weights(alpha: &[FieldElement]) -> Result<Vec<FieldElement>> {
    let field = alpha
        .first()
        .ok_or_else(|| Error::Dimension("at least two evaluation points required".into()))?
        .field()
        .clone();
    if alpha.len() < 2 {
        return Err(Error::Dimension(
            "at least two evaluation points required".into(),
        ));
    }
    check_distinct(alpha)?;
    alpha
        .iter()
        .enumerate()
        .map(|(i, ai)| {
            let mut prod = field.one();
            for (j, aj) in alpha.iter().enumerate() {
                if i != j {
                    prod = prod * ai.checked_sub(aj)?;
                }
            }
            prod.inv()
        })
        .collect()
}

fn check_distinct(alpha: &[FieldElement]) -> Result<()> {
    let mut sorted: Vec<(usize, &FieldElement)> = alpha.iter().enumerate().collect();
    sorted.sort_by(|a, b| a.1.cmp(b.1).then(a.0.cmp(&b.0)));
    for w in sorted.windows(2) {
        if w[0].1 == w[1].1 {
            return Err(Error::RepeatedPoints(w[0].0, w[1].0));
        }
    }
    Ok(())
}

/// A TGRS code `C_k(alpha, v, eta)` with its generator and parity-check
/// matrices computed at construction.
#[derive(Clone, Debug)]
pub struct TgrsCode {
    field: Field,
    alpha: Vec<FieldElement>,
    v: Vec<FieldElement>,
    k: usize,
    eta: FieldElement,
    alpha_sum: FieldElement,
    weights: Vec<FieldElement>,
    case_tag: CaseTag,
    generator: Matrix,
    check: Matrix,
}

impl TgrsCode {
    /// Validates the parameters (distinct points, nonzero multipliers and
    /// twist, `1 <= k <= n - k`) and builds both matrices.
    pub fn new(
        field: &Field,
        alpha: Vec<FieldElement>,
        v: Vec<FieldElement>,
        k: usize,
        eta: FieldElement,
    ) -> Result<TgrsCode> {
        let n = alpha.len();
        if v.len() != n {
            return Err(Error::Length {
                expected: n,
                got: v.len(),
            });
        }
        if n < 2 {
            return Err(Error::Dimension(format!(
                "length n = {n} must be at least 2"
            )));
        }
        if k == 0 || k > n - k {
            return Err(Error::Dimension(format!(
                "need 1 <= k <= n - k, got n = {n}, k = {k}"
            )));
        }
        for e in alpha.iter().chain(&v).chain(std::iter::once(&eta)) {
            field.ensure_same(e.field())?;
        }
        if let Some(i) = v.iter().position(FieldElement::is_zero) {
            return Err(Error::ZeroMultiplier(i));
        }
        if eta.is_zero() {
            return Err(Error::ZeroTwist);
        }
        let weights = lagrange_weights(&alpha)?;
        let alpha_sum = alpha.iter().fold(field.zero(), |acc, a| acc + a);
        let case_tag = CaseTag::of(&alpha_sum, &eta);
        let generator = generator_matrix(field, &alpha, &v, k, &eta);
        let check = check_matrix(field, &alpha, &v, k, &eta, &weights, &alpha_sum, case_tag);
        Ok(TgrsCode {
            field: field.clone(),
            alpha,
            v,
            k,
            eta,
            alpha_sum,
            weights,
            case_tag,
            generator,
            check,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn alpha(&self) -> &[FieldElement] {
        &self.alpha
    }

    pub fn v(&self) -> &[FieldElement] {
        &self.v
    }

    pub fn eta(&self) -> &FieldElement {
        &self.eta
    }

    /// `a = sum(alpha_i)`.
    pub fn alpha_sum(&self) -> &FieldElement {
        &self.alpha_sum
    }

    /// Lagrange weights `u_i`.
    pub fn weights(&self) -> &[FieldElement] {
        &self.weights
    }

    pub fn case_tag(&self) -> CaseTag {
        self.case_tag
    }

    /// `G_k`, k x n.
    pub fn generator_matrix(&self) -> &Matrix {
        &self.generator
    }

    /// `H_{n-k}`, (n-k) x n.
    pub fn check_matrix(&self) -> &Matrix {
        &self.check
    }

    /// Codeword of the message `a_0..a_{k-1}`; the twist term is implied.
    pub fn twisted_eval(&self, coeffs: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if coeffs.len() != self.k {
            return Err(Error::Length {
                expected: self.k,
                got: coeffs.len(),
            });
        }
        for c in coeffs {
            self.field.ensure_same(c.field())?;
        }
        let twist = &self.eta * &coeffs[self.k - 1];
        Ok(self
            .alpha
            .iter()
            .zip(&self.v)
            .map(|(a, v)| {
                let value = std::iter::once(&twist)
                    .chain(coeffs.iter().rev())
                    .fold(self.field.zero(), |acc, c| acc * a + c);
                v * &value
            })
            .collect())
    }

    /// `H * word^T`; zero exactly for codewords.
    pub fn syndrome(&self, word: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if word.len() != self.n() {
            return Err(Error::Length {
                expected: self.n(),
                got: word.len(),
            });
        }
        self.check.mul_vec(word)
    }
}

fn generator_matrix(
    field: &Field,
    alpha: &[FieldElement],
    v: &[FieldElement],
    k: usize,
    eta: &FieldElement,
) -> Matrix {
    let mut g = Matrix::zeros(field, k, alpha.len());
    for (j, (a, vj)) in alpha.iter().zip(v).enumerate() {
        let mut power = vj.clone();
        for i in 0..k - 1 {
            g.set(i, j, power.clone());
            power = power * a;
        }
        // v a^{k-1} + eta v a^k
        let last = &power + &(eta * &(&power * a));
        g.set(k - 1, j, last);
    }
    g
}

#[allow(clippy::too_many_arguments)]
fn check_matrix(
    field: &Field,
    alpha: &[FieldElement],
    v: &[FieldElement],
    k: usize,
    eta: &FieldElement,
    weights: &[FieldElement],
    alpha_sum: &FieldElement,
    case_tag: CaseTag,
) -> Matrix {
    let n = alpha.len();
    let r = n - k;
    // coefficient of alpha^{n-k} in the last row (GENERIC and ZERO_SUM)
    let tail = match case_tag {
        CaseTag::Generic => {
            let denom = field.one() + alpha_sum * eta;
            Some(eta * &denom.inv().expect("GENERIC excludes 1 + a*eta = 0"))
        }
        CaseTag::ZeroSum => Some(eta.clone()),
        CaseTag::Singular => None,
    };
    let mut h = Matrix::zeros(field, r, n);
    for j in 0..n {
        let scale = &weights[j] * &v[j].inv().expect("multipliers are nonzero");
        let mut power = scale;
        for i in 0..r - 1 {
            h.set(i, j, power.clone());
            power = power * &alpha[j];
        }
        // power = (u/v) a^{n-k-1}
        let next = &power * &alpha[j];
        let last = match &tail {
            Some(c) => &power - &(c * &next),
            None => next,
        };
        h.set(r - 1, j, last);
    }
    h
}
