//! Builders for the four self-dual TGRS families.
//!
//! Each builder checks its family's hypotheses and refuses with
//! [`Error::Hypothesis`] naming the first one that fails. A successful build
//! carries the `lambda` with `v_i^2 = lambda * u_i` that the family predicts.

mod sweep;
mod worked;

use serde::{Deserialize, Serialize};

pub use sweep::{sweep, RowOutcome, SweepRow, SweepSummary, SweepTable};
pub use worked::{worked_example, Comparison, ExampleOutcome, WorkedExample, WORKED_EXAMPLES};

use crate::code::TgrsCode;
use crate::error::{Error, Result};
use crate::field::{Embedding, Field, FieldElement};
use crate::nt;
use crate::poly::{gcd, Poly, DEFAULT_SEED};
use crate::text::parse_element;

/// Default cap on the degree of a splitting field over its prime field.
pub const MAX_EXTENSION_DEGREE: usize = 20;

const ORDER_LIMIT: u64 = 1 << 62;

/// `x^(2lp) + b x^(2lp-1) + c` over `F_(p^t)`; `v_i = alpha_i^(1-lp)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct T31Params {
    pub p: u64,
    #[serde(default = "one")]
    pub t: usize,
    pub l: u64,
    pub b: String,
    pub c: String,
}

/// `x^(2p) - x^(2p-1) + 2x^(p+1) + 3^-1 x^3 + 1` over `F_p`, `eta = -2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct T33Params {
    pub p: u64,
    /// Expected splitting degree; checked against the computed one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
}

/// `x^n + b x^(n-1) + 1` over `F_q'`, code over `F_(q^2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct T35Params {
    pub q_prime: u64,
    pub b: String,
    pub n: usize,
}

/// Points `beta * gamma^i` (`gamma` of order `n+1`) minus the anchor
/// `beta * gamma^j`, code over `F_(q^2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct T36Params {
    pub q: u64,
    #[serde(default = "one_str")]
    pub beta: String,
    pub n: usize,
    #[serde(default)]
    pub j: usize,
}

fn one() -> usize {
    1
}

fn one_str() -> String {
    "1".to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum ConstructionSpec {
    T31(T31Params),
    T33(T33Params),
    T35(T35Params),
    T36(T36Params),
}

impl ConstructionSpec {
    pub fn family(&self) -> &'static str {
        match self {
            ConstructionSpec::T31(_) => "T31",
            ConstructionSpec::T33(_) => "T33",
            ConstructionSpec::T35(_) => "T35",
            ConstructionSpec::T36(_) => "T36",
        }
    }

    /// Compact one-line form, e.g. `T36 q=89 beta=1 n=10 j=0`.
    pub fn label(&self) -> String {
        match self {
            ConstructionSpec::T31(p) => {
                format!("T31 p={} t={} l={} b={} c={}", p.p, p.t, p.l, p.b, p.c)
            }
            ConstructionSpec::T33(p) => match p.s {
                Some(s) => format!("T33 p={} s={s}", p.p),
                None => format!("T33 p={}", p.p),
            },
            ConstructionSpec::T35(p) => format!("T35 q'={} b={} n={}", p.q_prime, p.b, p.n),
            ConstructionSpec::T36(p) => {
                format!("T36 q={} beta={} n={} j={}", p.q, p.beta, p.n, p.j)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Seed for randomized root splitting. Results do not depend on it.
    pub seed: u64,
    pub max_extension_degree: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            seed: DEFAULT_SEED,
            max_extension_degree: MAX_EXTENSION_DEGREE,
        }
    }
}

/// What was built and which conditions were checked on the way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub family: String,
    pub description: String,
    pub base_field: String,
    pub code_field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    /// Degree of the field holding the points over the base field.
    pub splitting_degree: u64,
    pub conditions_checked: Vec<String>,
    pub predicted_lambda: String,
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub spec: ConstructionSpec,
    pub code: TgrsCode,
    pub predicted_lambda: FieldElement,
    pub provenance: Provenance,
}

pub fn construct(spec: &ConstructionSpec, opts: &BuildOptions) -> Result<Construction> {
    match spec {
        ConstructionSpec::T31(p) => construct_t31(p, opts),
        ConstructionSpec::T33(p) => construct_t33(p, opts),
        ConstructionSpec::T35(p) => construct_t35(p, opts),
        ConstructionSpec::T36(p) => construct_t36(p, opts),
    }
}

fn hyp(name: &str, detail: impl Into<String>) -> Error {
    Error::hypothesis(name, detail)
}

fn odd_prime(p: u64, name: &str) -> Result<()> {
    if p == 2 || !nt::is_prime(p) {
        return Err(hyp(name, format!("p = {p} is not an odd prime")));
    }
    Ok(())
}

fn odd_prime_power(q: u64, name: &str) -> Result<(u64, usize)> {
    match nt::prime_power(q) {
        Some((p, s)) if p != 2 => Ok((p, s as usize)),
        _ => Err(hyp(name, format!("{q} is not a power of an odd prime"))),
    }
}

/// Refuses extensions of `F_p` that are too large to build.
fn check_degree(p: u64, degree: u64, cap: Option<usize>) -> Result<usize> {
    if let Some(cap) = cap {
        if degree > cap as u64 {
            return Err(hyp(
                "extension degree <= cap",
                format!("the splitting field has degree {degree} over F_{p}, cap is {cap}"),
            ));
        }
    }
    let fits = u32::try_from(degree)
        .ok()
        .and_then(|d| p.checked_pow(d))
        .is_some_and(|q| q < ORDER_LIMIT);
    if !fits {
        return Err(hyp(
            "field order < 2^62",
            format!("F_{p}^{degree} does not fit in 62 bits"),
        ));
    }
    Ok(degree as usize)
}

fn parse_param(field: &Field, name: &str, s: &str) -> Result<FieldElement> {
    parse_element(field, s).map_err(|e| Error::Parse(format!("parameter {name}: {e}")))
}

fn nonzero(e: &FieldElement, name: &str) -> Result<()> {
    if e.is_zero() {
        return Err(hyp(&format!("{name} != 0"), format!("{name} is zero")));
    }
    Ok(())
}

/// The splitting field of `m` over its coefficient field, with `m`'s roots.
fn split(m: &Poly, opts: &BuildOptions) -> Result<(Field, u64, Vec<FieldElement>)> {
    let base = m.field();
    let d = m.splitting_degree().map_err(|e| match e {
        Error::NotSquarefree => hyp("m squarefree", format!("m = {m} has a repeated factor")),
        e => e,
    })?;
    let degree = check_degree(
        base.characteristic(),
        base.degree() as u64 * d,
        Some(opts.max_extension_degree),
    )?;
    let ext = Field::new(base.characteristic(), degree)?;
    let roots = m.roots_in_seeded(&ext, opts.seed)?;
    Ok((ext, d, roots))
}

fn require_all_roots(m: &Poly, roots: &[FieldElement]) -> Result<()> {
    let deg = m.degree().unwrap_or(0);
    if roots.len() != deg {
        return Err(hyp(
            "m squarefree",
            format!("m has {} distinct roots, expected {deg}", roots.len()),
        ));
    }
    Ok(())
}

fn twist_condition(code: &TgrsCode) -> Result<()> {
    let two = code.field().from_u64(2);
    if !(two + code.alpha_sum() * code.eta()).is_zero() {
        return Err(Error::Internal(format!(
            "2 + a*eta != 0 (a = {}, eta = {})",
            code.alpha_sum(),
            code.eta()
        )));
    }
    Ok(())
}

fn to_strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

pub fn construct_t31(params: &T31Params, opts: &BuildOptions) -> Result<Construction> {
    let T31Params { p, t, l, .. } = *params;
    odd_prime(p, "p odd prime")?;
    if t == 0 {
        return Err(hyp("t >= 1", "t = 0"));
    }
    if l == 0 {
        return Err(hyp("l >= 1", "l = 0"));
    }
    check_degree(p, t as u64, Some(opts.max_extension_degree))?;
    let base = Field::new(p, t)?;
    let b = parse_param(&base, "b", &params.b)?;
    let c = parse_param(&base, "c", &params.c)?;
    nonzero(&b, "b")?;
    nonzero(&c, "c")?;
    let lp = l
        .checked_mul(p)
        .filter(|&lp| lp <= 1 << 16)
        .ok_or_else(|| hyp("n = 2lp <= 2^17", format!("l = {l}, p = {p}")))? as usize;
    let n = 2 * lp;
    let m = Poly::monomial(base.one(), n)
        + Poly::monomial(b.clone(), n - 1)
        + Poly::constant(c.clone());
    if !m.is_squarefree()? {
        return Err(hyp(
            "m squarefree",
            format!("m = {m} has a repeated factor"),
        ));
    }
    let (ext, d, alpha) = split(&m, opts)?;
    require_all_roots(&m, &alpha)?;
    let emb = Embedding::new(&base, &ext)?;
    let b_ext = emb.apply(&b)?;
    let v = alpha
        .iter()
        .map(|a| a.pow_signed(1 - lp as i64))
        .collect::<Result<Vec<_>>>()?;
    let eta = ext.from_u64(2) * b_ext.inv()?;
    let code = TgrsCode::new(&ext, alpha, v, lp, eta)?;
    twist_condition(&code)?;
    let lambda = -b_ext;
    Ok(Construction {
        spec: ConstructionSpec::T31(params.clone()),
        provenance: Provenance {
            family: "T31".into(),
            description: "roots of x^(2lp) + b x^(2lp-1) + c, v_i = alpha_i^(1-lp), eta = 2/b"
                .into(),
            base_field: base.to_string(),
            code_field: ext.to_string(),
            polynomial: Some(m.to_string()),
            splitting_degree: d,
            conditions_checked: to_strings(&[
                "p odd prime",
                "b != 0",
                "c != 0",
                "m squarefree",
                "extension degree <= cap",
                "2 + a*eta = 0",
            ]),
            predicted_lambda: lambda.to_string(),
        },
        code,
        predicted_lambda: lambda,
    })
}

pub const T33_GCD_HYPOTHESIS: &str = "gcd(m', x^4 - (3 - 3^-1)x^3 + 1) = 1";

pub fn construct_t33(params: &T33Params, opts: &BuildOptions) -> Result<Construction> {
    let p = params.p;
    if p <= 3 {
        return Err(hyp("p > 3", format!("p = {p}")));
    }
    odd_prime(p, "p prime")?;
    if p > 1 << 16 {
        return Err(hyp("n = 2p <= 2^17", format!("p = {p}")));
    }
    let base = Field::prime(p)?;
    let pu = p as usize;
    let third = base.from_u64(3).inv()?;
    let m = Poly::monomial(base.one(), 2 * pu) - Poly::monomial(base.one(), 2 * pu - 1)
        + Poly::monomial(base.from_u64(2), pu + 1)
        + Poly::monomial(third.clone(), 3)
        + Poly::one(&base);
    let dm = m.derivative();
    let h = Poly::monomial(base.one(), 4) - Poly::monomial(base.from_u64(3) - &third, 3)
        + Poly::one(&base);
    let g = gcd(&dm, &h)?;
    if !g.is_constant() {
        return Err(hyp(
            T33_GCD_HYPOTHESIS,
            format!("over F_{p} the gcd is {g}"),
        ));
    }
    let w = Poly::monomial(base.one(), pu - 1) + Poly::x(&base);
    if dm != &w * &w {
        return Err(Error::Internal(format!("m' != (x^(p-1) + x)^2 over F_{p}")));
    }
    if !m.is_squarefree()? {
        return Err(hyp(
            "m squarefree",
            format!("m = {m} has a repeated factor"),
        ));
    }
    let (ext, d, alpha) = split(&m, opts)?;
    if let Some(s) = params.s {
        if s as u64 != d {
            return Err(hyp(
                "s = splitting degree",
                format!("supplied s = {s}, the splitting field of m has degree {d}"),
            ));
        }
    }
    require_all_roots(&m, &alpha)?;
    let v = alpha
        .iter()
        .map(|a| {
            let s = a.pow(pu as u128 - 1) + a;
            s.inv().map_err(|_| {
                hyp(
                    "alpha_i^(p-1) + alpha_i != 0",
                    format!("vanishes at the root {a}"),
                )
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let eta = -ext.from_u64(2);
    let code = TgrsCode::new(&ext, alpha, v, pu, eta)?;
    twist_condition(&code)?;
    let lambda = ext.one();
    Ok(Construction {
        spec: ConstructionSpec::T33(T33Params {
            p,
            s: Some(d as usize),
        }),
        provenance: Provenance {
            family: "T33".into(),
            description:
                "roots of x^(2p) - x^(2p-1) + 2x^(p+1) + 3^-1 x^3 + 1, v_i = (alpha_i^(p-1) + alpha_i)^-1, eta = -2"
                    .into(),
            base_field: base.to_string(),
            code_field: ext.to_string(),
            polynomial: Some(m.to_string()),
            splitting_degree: d,
            conditions_checked: to_strings(&[
                "p > 3",
                T33_GCD_HYPOTHESIS,
                "m' = (x^(p-1) + x)^2",
                "m squarefree",
                "extension degree <= cap",
                "alpha_i^(p-1) + alpha_i != 0",
                "2 + a*eta = 0",
            ]),
            predicted_lambda: lambda.to_string(),
        },
        code,
        predicted_lambda: lambda,
    })
}

/// `F_(q^2)` over the field `f` of order `q`, and the fixed embedding.
fn quadratic_extension(f: &Field) -> Result<(Field, Embedding)> {
    let p = f.characteristic();
    let degree = check_degree(p, 2 * f.degree() as u64, None)?;
    let ext = Field::new(p, degree)?;
    let emb = Embedding::new(f, &ext)?;
    Ok((ext, emb))
}

fn sqrt_in(ext: &Field, emb: &Embedding, radicand: &FieldElement) -> Result<FieldElement> {
    let r = emb.apply(radicand)?;
    ext.sqrt(&r).ok_or_else(|| {
        Error::Internal(format!(
            "{radicand} has no square root in the quadratic extension"
        ))
    })
}

pub fn construct_t35(params: &T35Params, opts: &BuildOptions) -> Result<Construction> {
    let (p, s) = odd_prime_power(params.q_prime, "q' odd prime power")?;
    let n = params.n;
    if n < 2 || !n.is_multiple_of(2) {
        return Err(hyp("n even", format!("n = {n}")));
    }
    if (n as u64).is_multiple_of(p) {
        return Err(hyp(
            "gcd(q, n) = 1",
            format!("the characteristic {p} divides n = {n}"),
        ));
    }
    check_degree(p, s as u64, Some(opts.max_extension_degree))?;
    let base = Field::new(p, s)?;
    let b = parse_param(&base, "b", &params.b)?;
    nonzero(&b, "b")?;
    let m = Poly::monomial(base.one(), n) + Poly::monomial(b.clone(), n - 1) + Poly::one(&base);
    // m' = x^(n-2) (n x + b(n-1)), so the only possible repeated root is
    // b(1-n)/n, which lies in the base field.
    let n_base = base.from_u64(n as u64);
    let excluded = &b * &(base.one() - &n_base) * n_base.inv()?;
    if m.eval(&excluded)?.is_zero() {
        return Err(hyp(
            "alpha_i != b(1-n)/n",
            format!("the root {excluded} equals b(1-n)/n"),
        ));
    }
    let (fq, d, roots) = split(&m, opts)?;
    let to_fq = Embedding::new(&base, &fq)?;
    let b_fq = to_fq.apply(&b)?;
    let n_minus_1 = fq.from_u64(n as u64 - 1);
    for a in &roots {
        if a.pow(n as u128) == n_minus_1 {
            return Err(hyp(
                "alpha_i^n != n-1",
                format!("the root {a} has alpha^n = n-1"),
            ));
        }
    }
    require_all_roots(&m, &roots)?;
    let (ext, emb) = quadratic_extension(&fq)?;
    let mut alpha = Vec::with_capacity(n);
    let mut v = Vec::with_capacity(n);
    for a in &roots {
        let radicand = a * &(a.pow(n as u128) - &n_minus_1).inv()?;
        v.push(sqrt_in(&ext, &emb, &radicand)?);
        alpha.push(emb.apply(a)?);
    }
    let eta = ext.from_u64(2) * emb.apply(&b_fq)?.inv()?;
    let code = TgrsCode::new(&ext, alpha, v, n / 2, eta)?;
    twist_condition(&code)?;
    let lambda = ext.one();
    Ok(Construction {
        spec: ConstructionSpec::T35(params.clone()),
        provenance: Provenance {
            family: "T35".into(),
            description:
                "roots of x^n + b x^(n-1) + 1, v_i = sqrt(alpha_i / (alpha_i^n - n + 1)) in F_(q^2), eta = 2/b"
                    .into(),
            base_field: base.to_string(),
            code_field: ext.to_string(),
            polynomial: Some(m.to_string()),
            splitting_degree: d,
            conditions_checked: to_strings(&[
                "n even",
                "gcd(q, n) = 1",
                "b != 0",
                "alpha_i != b(1-n)/n",
                "extension degree <= cap",
                "alpha_i^n != n-1",
                "m squarefree",
                "2 + a*eta = 0",
            ]),
            predicted_lambda: lambda.to_string(),
        },
        code,
        predicted_lambda: lambda,
    })
}

pub fn construct_t36(params: &T36Params, _opts: &BuildOptions) -> Result<Construction> {
    let (p, s) = odd_prime_power(params.q, "q odd prime power")?;
    let (q, n, j) = (params.q, params.n, params.j);
    if n < 2 || n % 2 != 0 {
        return Err(hyp("n even", format!("n = {n}")));
    }
    if (q - 1) % (n as u64 + 1) != 0 {
        return Err(hyp(
            "(n+1) | (q-1)",
            format!("(n+1) = {} does not divide q-1 = {}", n + 1, q - 1),
        ));
    }
    if j > n {
        return Err(hyp("0 <= j <= n", format!("j = {j}, n = {n}")));
    }
    let base = Field::new(p, s)?;
    let beta = parse_param(&base, "beta", &params.beta)?;
    nonzero(&beta, "beta")?;
    let gamma = base.element_of_order(n as u64 + 1)?;
    let anchor = &beta * &gamma.pow(j as u128);
    let (ext, emb) = quadratic_extension(&base)?;
    let mut alpha = Vec::with_capacity(n);
    let mut v = Vec::with_capacity(n);
    for i in (0..=n).filter(|&i| i != j) {
        let a = &beta * &gamma.pow(i as u128);
        v.push(sqrt_in(&ext, &emb, &(&a * &(&a - &anchor)))?);
        alpha.push(emb.apply(&a)?);
    }
    let anchor_ext = emb.apply(&anchor)?;
    let eta = ext.from_u64(2) * anchor_ext.inv()?;
    let code = TgrsCode::new(&ext, alpha, v, n / 2, eta)?;
    twist_condition(&code)?;
    let lambda = ext.from_u64(n as u64 + 1) * anchor_ext.pow(n as u128 + 1);
    Ok(Construction {
        spec: ConstructionSpec::T36(params.clone()),
        provenance: Provenance {
            family: "T36".into(),
            description: format!(
                "alpha_i = beta*gamma^i for i != {j}, gamma = {gamma} of order n+1, \
                 v_i = sqrt(alpha_i (alpha_i - beta*gamma^{j})) in F_(q^2), eta = 2/(beta*gamma^{j})"
            ),
            base_field: base.to_string(),
            code_field: ext.to_string(),
            polynomial: None,
            splitting_degree: 1,
            conditions_checked: to_strings(&[
                "n even",
                "(n+1) | (q-1)",
                "0 <= j <= n",
                "beta != 0",
                "2 + a*eta = 0",
            ]),
            predicted_lambda: lambda.to_string(),
        },
        code,
        predicted_lambda: lambda,
    })
}
