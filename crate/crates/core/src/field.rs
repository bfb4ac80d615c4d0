//! Exact arithmetic in `F_p` and `F_{p^s}`.
//!
//! A [`Field`] is an immutable, cheaply clonable handle. Elements are stored
//! as canonical coefficient vectors over `F_p` (constant term first) reduced
//! modulo the field's monic irreducible modulus. Two fields interoperate only
//! when characteristic, degree and modulus all agree.
//!
//! Elements are totally ordered by their *index* `c_0 + c_1 p + ... +
//! c_{s-1} p^{s-1}`, i.e. coefficient vectors compared from the top
//! coefficient down. Every "smallest element" choice in the crate (generator
//! search, non-residue, canonical square root, root ordering) uses this order.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::nt;
use crate::poly::Poly;

/// Whole-field enumeration (exhaustive scans, brute-force checks) is refused
/// above this order unless the caller overrides it.
pub const ENUMERATION_CEILING: u64 = 1 << 24;

const MAX_CHARACTERISTIC: u64 = 1 << 31;

struct Inner {
    p: u64,
    degree: usize,
    /// Monic, `degree + 1` coefficients, constant first. Empty for prime fields.
    modulus: Vec<u64>,
    order: u64,
}

/// A finite field `F_{p^s}` of odd characteristic.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field> {
        check_characteristic(p)?;
        Ok(Field {
            inner: Arc::new(Inner {
                p,
                degree: 1,
                modulus: Vec::new(),
                order: p,
            }),
        })
    }

    /// `F_{p^s}` with the first monic irreducible modulus of degree `s` in
    /// index order.
    pub fn new(p: u64, s: usize) -> Result<Field> {
        make_field(p, s, None)
    }

    /// `F_{p^s}` defined by an explicit monic modulus (constant term first,
    /// coefficients reduced mod `p` on entry).
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Field> {
        if modulus.len() < 2 {
            return Err(Error::BadModulus(
                "modulus must have degree at least 1".into(),
            ));
        }
        make_field(p, modulus.len() - 1, Some(modulus))
    }

    pub fn characteristic(&self) -> u64 {
        self.inner.p
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.degree == 1
    }

    /// The defining modulus, absent for prime fields.
    pub fn modulus(&self) -> Option<&[u64]> {
        (!self.inner.modulus.is_empty()).then_some(self.inner.modulus.as_slice())
    }

    /// Same characteristic, degree and modulus.
    pub fn same_as(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.degree == other.inner.degree
                && self.inner.modulus == other.inner.modulus)
    }

    pub(crate) fn ensure_same(&self, other: &Field) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.to_string(), other.to_string()))
        }
    }

    pub fn prime_subfield(&self) -> Field {
        if self.is_prime_field() {
            self.clone()
        } else {
            Field::prime(self.inner.p).expect("characteristic already validated")
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            repr: vec![0; self.inner.degree],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    /// The image of an integer in the prime subfield.
    pub fn from_u64(&self, n: u64) -> FieldElement {
        let mut e = self.zero();
        e.repr[0] = n % self.inner.p;
        e
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        let p = self.inner.p as i64;
        self.from_u64(n.rem_euclid(p) as u64)
    }

    /// Builds an element from coefficients over `F_p` (constant term first).
    /// Coefficients must already be canonical.
    pub fn from_repr(&self, repr: Vec<u64>) -> Result<FieldElement> {
        if repr.len() != self.inner.degree {
            return Err(Error::Length {
                expected: self.inner.degree,
                got: repr.len(),
            });
        }
        if let Some(c) = repr.iter().find(|&&c| c >= self.inner.p) {
            return Err(Error::Parse(format!(
                "coefficient {c} is not reduced mod {}",
                self.inner.p
            )));
        }
        Ok(FieldElement {
            field: self.clone(),
            repr,
        })
    }

    /// Element with the given index (`0 <= index < q`).
    pub fn from_index(&self, mut index: u64) -> FieldElement {
        debug_assert!(index < self.inner.order);
        let mut e = self.zero();
        for c in e.repr.iter_mut() {
            *c = index % self.inner.p;
            index /= self.inner.p;
        }
        e
    }

    /// The class of `x` modulo the defining polynomial (for prime fields, 0).
    pub fn primitive_element(&self) -> FieldElement {
        if self.is_prime_field() {
            self.zero()
        } else {
            let mut e = self.zero();
            e.repr[1] = 1;
            e
        }
    }

    /// All elements in index order. Errors above [`ENUMERATION_CEILING`].
    pub fn elements(&self) -> Result<impl Iterator<Item = FieldElement> + '_> {
        self.elements_with_ceiling(ENUMERATION_CEILING)
    }

    pub fn elements_with_ceiling(
        &self,
        ceiling: u64,
    ) -> Result<impl Iterator<Item = FieldElement> + '_> {
        if self.inner.order > ceiling {
            return Err(Error::EnumerationCeiling {
                order: self.inner.order,
                ceiling,
            });
        }
        Ok((0..self.inner.order).map(|i| self.from_index(i)))
    }

    /// The smallest multiplicative generator of `F_q^*` in index order.
    pub fn find_generator(&self) -> FieldElement {
        let q1 = self.inner.order - 1;
        let primes = nt::prime_divisors(q1);
        (1..self.inner.order)
            .map(|i| self.from_index(i))
            .find(|g| primes.iter().all(|r| !g.pow((q1 / r) as u128).is_one()))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// An element of multiplicative order exactly `m`: `g^((q-1)/m)` for the
    /// canonical generator `g`.
    pub fn element_of_order(&self, m: u64) -> Result<FieldElement> {
        let q1 = self.inner.order - 1;
        if m == 0 || !q1.is_multiple_of(m) {
            return Err(Error::OrderNotDivisor {
                m,
                order_minus_one: q1,
            });
        }
        let e = self.find_generator().pow((q1 / m) as u128);
        debug_assert_eq!(e.multiplicative_order(), m);
        Ok(e)
    }

    /// The smallest quadratic non-residue.
    pub fn nonresidue(&self) -> FieldElement {
        let half = ((self.inner.order - 1) / 2) as u128;
        (2..self.inner.order)
            .map(|i| self.from_index(i))
            .find(|z| !z.pow(half).is_one())
            .expect("odd-order fields have non-residues")
    }

    /// Square root of `e`, if it exists. The returned root is the smaller of
    /// the two roots in index order.
    pub fn sqrt(&self, e: &FieldElement) -> Option<FieldElement> {
        e.sqrt()
    }

    /// Whether `e` (an element of this field) lies in the subfield of order
    /// `p^d`, i.e. `e^(p^d) = e`.
    pub fn in_subfield(&self, e: &FieldElement, d: usize) -> bool {
        let mut x = e.clone();
        for _ in 0..d {
            x = x.pow(self.inner.p as u128);
        }
        &x == e
    }
}

fn check_characteristic(p: u64) -> Result<()> {
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if !nt::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p >= MAX_CHARACTERISTIC {
        return Err(Error::FieldTooLarge { p, degree: 1 });
    }
    Ok(())
}

/// Builds `F_{p^s}`. Without a modulus, scans monic degree-`s` polynomials in
/// index order and takes the first irreducible one.
pub fn make_field(p: u64, s: usize, modulus: Option<&[u64]>) -> Result<Field> {
    check_characteristic(p)?;
    if s == 0 {
        return Err(Error::ZeroDegree);
    }
    let order = u32::try_from(s)
        .ok()
        .and_then(|e| p.checked_pow(e))
        .filter(|&q| q < 1 << 62)
        .ok_or(Error::FieldTooLarge { p, degree: s })?;
    let base = Field::prime(p)?;
    let modulus = match modulus {
        Some(m) => {
            if m.len() != s + 1 {
                return Err(Error::BadModulus(format!(
                    "expected degree {s}, got degree {}",
                    m.len().saturating_sub(1)
                )));
            }
            let m: Vec<u64> = m.iter().map(|c| c % p).collect();
            if m[s] != 1 {
                return Err(Error::BadModulus("modulus must be monic".into()));
            }
            if s == 1 {
                // A monic linear modulus defines F_p itself.
                return Ok(base);
            }
            if !poly_from_u64(&base, &m).is_irreducible()? {
                return Err(Error::ReducibleModulus(p));
            }
            m
        }
        None if s == 1 => return Ok(base),
        None => find_irreducible(&base, s),
    };
    Ok(Field {
        inner: Arc::new(Inner {
            p,
            degree: s,
            modulus,
            order,
        }),
    })
}

fn poly_from_u64(base: &Field, coeffs: &[u64]) -> Poly {
    Poly::new(base, coeffs.iter().map(|&c| base.from_u64(c)).collect())
        .expect("coefficients built in the same field")
}

fn find_irreducible(base: &Field, s: usize) -> Vec<u64> {
    let p = base.characteristic();
    let count = p.pow(s as u32);
    for idx in 0..count {
        if idx % p == 0 {
            // divisible by x
            continue;
        }
        let mut m = Vec::with_capacity(s + 1);
        let mut rest = idx;
        for _ in 0..s {
            m.push(rest % p);
            rest /= p;
        }
        m.push(1);
        if poly_from_u64(base, &m)
            .is_irreducible()
            .expect("candidate is nonzero")
        {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::write_field(f, self)
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Field {}

/// An element of a specific [`Field`].
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    repr: Vec<u64>,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Canonical coefficient vector, constant term first.
    pub fn repr(&self) -> &[u64] {
        &self.repr
    }

    pub fn index(&self) -> u64 {
        let p = self.field.inner.p;
        self.repr.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    pub fn is_zero(&self) -> bool {
        self.repr.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.repr[0] == 1 && self.repr[1..].iter().all(|&c| c == 0)
    }

    /// Value when the element lies in the prime subfield.
    pub fn as_prime(&self) -> Option<u64> {
        self.repr[1..]
            .iter()
            .all(|&c| c == 0)
            .then_some(self.repr[0])
    }

    pub fn checked_add(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.field.ensure_same(&rhs.field)?;
        Ok(self.add_unchecked(rhs))
    }

    pub fn checked_sub(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.field.ensure_same(&rhs.field)?;
        Ok(self.add_unchecked(&rhs.neg_ref()))
    }

    pub fn checked_mul(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.field.ensure_same(&rhs.field)?;
        Ok(self.mul_unchecked(rhs))
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.field.ensure_same(&rhs.field)?;
        Ok(self.mul_unchecked(&rhs.inv()?))
    }

    fn add_unchecked(&self, rhs: &FieldElement) -> FieldElement {
        let p = self.field.inner.p;
        let repr = self
            .repr
            .iter()
            .zip(&rhs.repr)
            .map(|(&a, &b)| {
                let s = a + b;
                if s >= p {
                    s - p
                } else {
                    s
                }
            })
            .collect();
        FieldElement {
            field: self.field.clone(),
            repr,
        }
    }

    fn neg_ref(&self) -> FieldElement {
        let p = self.field.inner.p;
        FieldElement {
            field: self.field.clone(),
            repr: self
                .repr
                .iter()
                .map(|&c| if c == 0 { 0 } else { p - c })
                .collect(),
        }
    }

    fn mul_unchecked(&self, rhs: &FieldElement) -> FieldElement {
        let inner = &self.field.inner;
        let p = inner.p;
        let s = inner.degree;
        if s == 1 {
            return FieldElement {
                field: self.field.clone(),
                repr: vec![self.repr[0] * rhs.repr[0] % p],
            };
        }
        let mut prod = vec![0u64; 2 * s - 1];
        for (i, &a) in self.repr.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.repr.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        let m = &inner.modulus;
        for d in (s..2 * s - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            let neg = p - c;
            for t in 0..s {
                prod[d - s + t] = (prod[d - s + t] + neg * m[t]) % p;
            }
        }
        prod.truncate(s);
        FieldElement {
            field: self.field.clone(),
            repr: prod,
        }
    }

    pub fn square(&self) -> FieldElement {
        self.mul_unchecked(self)
    }

    /// `self^e` for a non-negative exponent; `x^0 = 1` (including `0^0`).
    pub fn pow(&self, mut e: u128) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// `self^e`; a negative exponent inverts first.
    pub fn pow_signed(&self, e: i64) -> Result<FieldElement> {
        if e < 0 {
            Ok(self.inv()?.pow(e.unsigned_abs() as u128))
        } else {
            Ok(self.pow(e as u128))
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if self.field.is_prime_field() {
            let p = self.field.inner.p as i64;
            let (mut r0, mut r1) = (p, self.repr[0] as i64);
            let (mut t0, mut t1) = (0i64, 1i64);
            while r1 != 0 {
                let q = r0 / r1;
                (r0, r1) = (r1, r0 - q * r1);
                (t0, t1) = (t1, t0 - q * t1);
            }
            return Ok(self.field.from_i64(t0));
        }
        Ok(self.pow((self.field.inner.order - 2) as u128))
    }

    /// Multiplicative order of a nonzero element (0 for zero).
    pub fn multiplicative_order(&self) -> u64 {
        if self.is_zero() {
            return 0;
        }
        let mut ord = self.field.inner.order - 1;
        for r in nt::prime_divisors(ord) {
            while ord.is_multiple_of(r) && self.pow((ord / r) as u128).is_one() {
                ord /= r;
            }
        }
        ord
    }

    /// Euler's criterion (zero counts as a square).
    pub fn is_square(&self) -> bool {
        self.is_zero()
            || self
                .pow(((self.field.inner.order - 1) / 2) as u128)
                .is_one()
    }

    /// Tonelli-Shanks over `F_q`. Returns the smaller root in index order.
    pub fn sqrt(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if !self.is_square() {
            return None;
        }
        let q1 = self.field.inner.order - 1;
        let twos = q1.trailing_zeros();
        let odd = (q1 >> twos) as u128;
        let mut m = twos;
        let mut c = self.field.nonresidue().pow(odd);
        let mut x = self.pow(odd.div_ceil(2));
        let mut b = self.pow(odd);
        while !b.is_one() {
            let mut i = 0;
            let mut t = b.clone();
            while !t.is_one() {
                t = t.square();
                i += 1;
            }
            let mut g = c;
            for _ in 0..(m - i - 1) {
                g = g.square();
            }
            x = x.mul_unchecked(&g);
            c = g.square();
            b = b.mul_unchecked(&c);
            m = i;
        }
        let other = x.neg_ref();
        Some(if other < x { other } else { x })
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr && self.field.same_as(&other.field)
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.inner.p.hash(state);
        self.repr.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.repr.iter().rev().cmp(other.repr.iter().rev())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::write_element(f, self)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn assert_same(a: &FieldElement, b: &FieldElement) {
    if let Err(e) = a.field.ensure_same(&b.field) {
        panic!("{e}");
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                assert_same(self, rhs);
                let f: fn(&FieldElement, &FieldElement) -> FieldElement = $body;
                f(self, rhs)
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

// Operators panic on mixed fields; the `checked_*` methods report it instead.
binop!(Add, add, |a, b| a.add_unchecked(b));
binop!(Sub, sub, |a, b| a.add_unchecked(&b.neg_ref()));
binop!(Mul, mul, |a, b| a.mul_unchecked(b));

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl std::iter::Sum for FieldElement {
    /// Panics on an empty iterator; use `fold` with an explicit zero there.
    fn sum<I: Iterator<Item = FieldElement>>(iter: I) -> FieldElement {
        iter.reduce(|a, b| a + b).expect("sum of an empty iterator")
    }
}

/// A fixed field homomorphism `sub -> ext`.
///
/// For a prime `sub` this is the inclusion of `F_p`. Otherwise the
/// generator `x` of `sub` is sent to the smallest root (index order) of
/// `sub`'s modulus in `ext`.
#[derive(Clone, Debug)]
pub struct Embedding {
    sub: Field,
    ext: Field,
    powers: Vec<FieldElement>,
}

impl Embedding {
    pub fn new(sub: &Field, ext: &Field) -> Result<Embedding> {
        let err = |reason| Error::Embedding {
            sub: sub.to_string(),
            ext: ext.to_string(),
            reason,
        };
        if sub.characteristic() != ext.characteristic() {
            return Err(err("characteristics differ"));
        }
        if !ext.degree().is_multiple_of(sub.degree()) {
            return Err(err("degree does not divide"));
        }
        let powers = if sub.same_as(ext) {
            (0..sub.degree())
                .map(|i| ext.primitive_element().pow(i as u128))
                .collect()
        } else if sub.is_prime_field() {
            vec![ext.one()]
        } else {
            let base = ext.prime_subfield();
            let modulus = poly_from_u64(&base, sub.modulus().expect("extension field"));
            let image = modulus
                .roots_in(ext)?
                .into_iter()
                .next()
                .ok_or_else(|| err("modulus has no root in the extension"))?;
            (0..sub.degree()).map(|i| image.pow(i as u128)).collect()
        };
        Ok(Embedding {
            sub: sub.clone(),
            ext: ext.clone(),
            powers,
        })
    }

    pub fn sub(&self) -> &Field {
        &self.sub
    }

    pub fn ext(&self) -> &Field {
        &self.ext
    }

    pub fn apply(&self, e: &FieldElement) -> Result<FieldElement> {
        self.sub.ensure_same(e.field())?;
        let mut acc = self.ext.zero();
        for (&c, power) in e.repr.iter().zip(&self.powers) {
            if c != 0 {
                acc = acc + &self.ext.from_u64(c) * power;
            }
        }
        Ok(acc)
    }
}

/// Image of `e` under the fixed embedding `sub -> ext`.
pub fn embed(sub: &Field, ext: &Field, e: &FieldElement) -> Result<FieldElement> {
    Embedding::new(sub, ext)?.apply(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::prime(2).unwrap_err(), Error::EvenCharacteristic);
        assert_eq!(Field::prime(15).unwrap_err(), Error::NotPrime(15));
        assert_eq!(Field::new(13, 0).unwrap_err(), Error::ZeroDegree);
        // x^2 - 1 = (x-1)(x+1)
        assert_eq!(
            Field::with_modulus(13, &[12, 0, 1]).unwrap_err(),
            Error::ReducibleModulus(13)
        );
        assert!(matches!(
            Field::with_modulus(13, &[2, 0, 3]),
            Err(Error::BadModulus(_))
        ));
        assert!(matches!(
            make_field(13, 3, Some(&[2, 0, 1])),
            Err(Error::BadModulus(_))
        ));
    }

    #[test]
    fn orders() {
        assert_eq!(f(13).order(), 13);
        assert_eq!(Field::new(89, 2).unwrap().order(), 7921);
        assert_eq!(Field::new(61, 2).unwrap().order(), 3721);
        // x^2 + 1 is the first irreducible quadratic over F_3
        assert_eq!(Field::new(3, 2).unwrap().modulus(), Some(&[1, 0, 1][..]));
    }

    #[test]
    fn inverses_from_worked_examples() {
        let f89 = f(89);
        assert_eq!(f89.from_u64(2).inv().unwrap(), f89.from_u64(45));
        assert_eq!(-f89.from_u64(2).inv().unwrap(), f89.from_u64(44));
        let f61 = f(61);
        assert_eq!(-f61.from_u64(2).inv().unwrap(), f61.from_u64(30));
        assert_eq!(f61.zero().inv().unwrap_err(), Error::ZeroInverse);
        assert!(f61.from_u64(7).pow(0).is_one());
        assert_eq!(
            f61.from_u64(7).pow_signed(-1).unwrap(),
            f61.from_u64(7).inv().unwrap()
        );
    }

    #[test]
    fn generators() {
        assert_eq!(f(89).find_generator(), f(89).from_u64(3));
        assert_eq!(f(61).find_generator(), f(61).from_u64(2));
        assert_eq!(f(3).find_generator(), f(3).from_u64(2));
        assert_eq!(f(89).element_of_order(11).unwrap(), f(89).from_u64(64));
        assert_eq!(f(61).element_of_order(15).unwrap(), f(61).from_u64(16));
        assert!(f(61).element_of_order(1).unwrap().is_one());
        assert!(matches!(
            f(13).element_of_order(11),
            Err(Error::OrderNotDivisor { .. })
        ));
    }

    #[test]
    fn square_roots() {
        let f13 = f(13);
        assert_eq!(f13.sqrt(&f13.from_u64(9)), Some(f13.from_u64(3)));
        assert_eq!(f13.sqrt(&f13.from_u64(2)), None);
        assert_eq!(f13.sqrt(&f13.zero()), Some(f13.zero()));
        let f169 = Field::new(13, 2).unwrap();
        let two = embed(&f13, &f169, &f13.from_u64(2)).unwrap();
        let r = f169.sqrt(&two).unwrap();
        assert_eq!(r.square(), two);
    }

    #[test]
    fn mixing_fields_is_an_error() {
        let a = f(13).one();
        let b = f(11).one();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch(..))));
        assert!(matches!(a.checked_mul(&b), Err(Error::FieldMismatch(..))));
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn operator_mix_panics() {
        let _ = f(13).one() + f(11).one();
    }

    #[test]
    fn embedding_prime_into_quadratic() {
        let f61 = f(61);
        let ext = Field::new(61, 2).unwrap();
        let e = Embedding::new(&f61, &ext).unwrap();
        assert!(e.apply(&f61.zero()).unwrap().is_zero());
        assert!(e.apply(&f61.one()).unwrap().is_one());
        let x = e.apply(&f61.from_u64(30)).unwrap();
        assert!((ext.from_u64(2) * &x + ext.one()).is_zero());
        assert!(Embedding::new(&f(13), &ext).is_err());
        assert!(Embedding::new(&Field::new(61, 3).unwrap(), &ext).is_err());
    }
}
