//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Embedding, Field, FieldElement};
use crate::nt;

/// Extensions up to this order are searched for roots by evaluating at every
/// element; larger ones use equal-degree splitting.
pub const EXHAUSTIVE_ROOT_LIMIT: u64 = 1 << 16;

/// Seed used by [`Poly::roots_in`].
pub const DEFAULT_SEED: u64 = 0x7467_7273;

/// A polynomial with coefficients constant term first and no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: &Field, coeffs: Vec<FieldElement>) -> Result<Poly> {
        for c in &coeffs {
            field.ensure_same(c.field())?;
        }
        Ok(Poly::normalized(field.clone(), coeffs))
    }

    fn normalized(field: Field, mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    /// Convenience constructor from signed integers in the prime subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::normalized(
            field.clone(),
            coeffs.iter().map(|&c| field.from_i64(c)).collect(),
        )
    }

    pub fn zero(field: &Field) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Poly {
        let field = c.field().clone();
        Poly::normalized(field, vec![c])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field.one(), 1)
    }

    /// `c * x^d`.
    pub fn monomial(c: FieldElement, d: usize) -> Poly {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero(); d];
        coeffs.push(c);
        Poly::normalized(field, coeffs)
    }

    /// `prod (x - r)` over the given roots.
    pub fn from_roots(field: &Field, roots: &[FieldElement]) -> Poly {
        roots.iter().fold(Poly::one(field), |acc, r| {
            acc * Poly::normalized(field.clone(), vec![-r, field.one()])
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn checked_add(&self, rhs: &Poly) -> Result<Poly> {
        self.field.ensure_same(&rhs.field)?;
        Ok(self.add_unchecked(rhs))
    }

    pub fn checked_mul(&self, rhs: &Poly) -> Result<Poly> {
        self.field.ensure_same(&rhs.field)?;
        Ok(self.mul_unchecked(rhs))
    }

    fn add_unchecked(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::normalized(self.field.clone(), coeffs)
    }

    fn mul_unchecked(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        Poly::normalized(self.field.clone(), coeffs)
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Poly> {
        self.field.ensure_same(c.field())?;
        Ok(Poly::normalized(
            self.field.clone(),
            self.coeffs.iter().map(|a| a * c).collect(),
        ))
    }

    /// Quotient and remainder with `deg(remainder) < deg(divisor)`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.field.ensure_same(&divisor.field)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(&self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((
            Poly::normalized(self.field.clone(), quot),
            Poly::normalized(self.field.clone(), rem),
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Scales to leading coefficient one (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("leading coefficient is nonzero");
                self.scale(&inv).expect("same field")
            }
        }
    }

    /// Formal derivative; `i * c_i` is taken in characteristic `p`.
    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.field.from_u64(i as u64))
            .collect();
        Poly::normalized(self.field.clone(), coeffs)
    }

    /// Horner evaluation. If `x` lives in an extension of this polynomial's
    /// field the coefficients are embedded first.
    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        if self.field.same_as(x.field()) {
            return Ok(self.eval_same(x));
        }
        let emb = Embedding::new(&self.field, x.field())?;
        Ok(self.embed(&emb)?.eval_same(x))
    }

    fn eval_same(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(x.field().zero(), |acc, c| acc * x + c)
    }

    /// Maps the coefficients through `emb`.
    pub fn embed(&self, emb: &Embedding) -> Result<Poly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| emb.apply(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::normalized(emb.ext().clone(), coeffs))
    }

    /// `base^e mod modulus`.
    pub fn pow_mod(&self, mut e: u128, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// Irreducibility over the coefficient field: `gcd(x^(Q^i) - x, f) = 1`
    /// for every `i <= deg/2`, where `Q` is the field order.
    pub fn is_irreducible(&self) -> Result<bool> {
        let d = self
            .degree()
            .ok_or(Error::ZeroPolynomial("irreducibility"))?;
        if d == 0 {
            return Ok(false);
        }
        let q = self.field.order() as u128;
        let x = Poly::x(&self.field);
        let mut h = x.clone();
        for _ in 1..=d / 2 {
            h = h.pow_mod(q, self)?;
            if !gcd(self, &(&h - &x))?.is_constant() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff `gcd(f, f')` is constant.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("squarefreeness"));
        }
        Ok(gcd(self, &self.derivative())?.is_constant())
    }

    /// Distinct-degree factorization of a squarefree polynomial: pairs
    /// `(d, g)` where `g` is the product of all irreducible factors of degree
    /// `d`.
    pub fn distinct_degree_factors(&self) -> Result<Vec<(usize, Poly)>> {
        if !self.is_squarefree()? {
            return Err(Error::NotSquarefree);
        }
        let q = self.field.order() as u128;
        let x = Poly::x(&self.field);
        let mut rest = self.monic();
        let mut h = x.clone();
        let mut out = Vec::new();
        let mut i = 1;
        while rest.degree().unwrap_or(0) >= 2 * i {
            h = h.pow_mod(q, &rest)?;
            let g = gcd(&rest, &(&h - &x))?;
            if !g.is_constant() {
                rest = rest.divmod(&g)?.0;
                h = h.rem(&rest)?;
                out.push((i, g));
            }
            i += 1;
        }
        if let Some(d) = rest.degree().filter(|&d| d > 0) {
            out.push((d, rest));
        }
        Ok(out)
    }

    /// The least `s` such that `f` splits into linear factors over the
    /// degree-`s` extension of its coefficient field.
    pub fn splitting_degree(&self) -> Result<u64> {
        if self.is_constant() {
            return Err(Error::Dimension(
                "splitting degree of a constant polynomial".into(),
            ));
        }
        Ok(self
            .distinct_degree_factors()?
            .iter()
            .fold(1, |acc, (d, _)| nt::lcm(acc, *d as u64)))
    }

    /// All distinct roots in `ext`, sorted in index order.
    pub fn roots_in(&self, ext: &Field) -> Result<Vec<FieldElement>> {
        self.roots_in_seeded(ext, DEFAULT_SEED)
    }

    /// As [`Poly::roots_in`] with an explicit seed for the randomized
    /// splitting used on large extensions. The result does not depend on the
    /// seed.
    pub fn roots_in_seeded(&self, ext: &Field, seed: u64) -> Result<Vec<FieldElement>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("root finding"));
        }
        let f = if self.field.same_as(ext) {
            self.clone()
        } else {
            self.embed(&Embedding::new(&self.field, ext)?)?
        };
        let mut roots = if ext.order() <= EXHAUSTIVE_ROOT_LIMIT {
            ext.elements()?
                .filter(|x| f.eval_same(x).is_zero())
                .collect()
        } else {
            f.roots_by_splitting(seed)?
        };
        roots.sort();
        roots.dedup();
        Ok(roots)
    }

    fn roots_by_splitting(&self, seed: u64) -> Result<Vec<FieldElement>> {
        let field = &self.field;
        let x = Poly::x(field);
        let q = field.order() as u128;
        // product of the distinct linear factors
        let frob = x.pow_mod(q, self)?;
        let linear = gcd(self, &(&frob - &x))?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut roots = Vec::new();
        let mut stack = vec![linear];
        while let Some(g) = stack.pop() {
            match g.degree() {
                None | Some(0) => {}
                Some(1) => roots.push(-(&g.coeffs[0] * &g.coeffs[1].inv()?)),
                Some(d) => loop {
                    let delta = field.from_index(rng.gen_range(0..field.order()));
                    let shifted = &x + &Poly::constant(delta);
                    let w = &shifted.pow_mod((q - 1) / 2, &g)? - &Poly::one(field);
                    let h = gcd(&g, &w)?;
                    let hd = h.degree().unwrap_or(0);
                    if hd > 0 && hd < d {
                        stack.push(g.divmod(&h)?.0);
                        stack.push(h);
                        break;
                    }
                },
            }
        }
        Ok(roots)
    }
}

/// Monic greatest common divisor.
pub fn gcd(f: &Poly, g: &Poly) -> Result<Poly> {
    f.field.ensure_same(&g.field)?;
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial("gcd"));
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

fn assert_same(a: &Poly, b: &Poly) {
    if let Err(e) = a.field.ensure_same(&b.field) {
        panic!("{e}");
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_same(self, rhs);
        self.add_unchecked(rhs)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_same(self, rhs);
        self.add_unchecked(&-rhs)
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_same(self, rhs);
        self.mul_unchecked(rhs)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::write_poly(f, self)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{self}")
    }
}
