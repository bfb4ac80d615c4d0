//! Textual forms used by the CLI and the JSON files.
//!
//! * field: `p` for a prime field, `p^s:[c0,c1,...,1]` for an extension
//!   (modulus coefficients in decimal, constant term first). `p^s` alone
//!   picks the default modulus.
//! * element: an integer for prime-subfield values, `(a0,a1,...)` otherwise.
//! * polynomial: `[c0,c1,...,cd]` with each coefficient an element.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{make_field, Field, FieldElement};
use crate::poly::Poly;

pub(crate) fn write_field(f: &mut fmt::Formatter<'_>, field: &Field) -> fmt::Result {
    match field.modulus() {
        None => write!(f, "{}", field.characteristic()),
        Some(m) => {
            write!(f, "{}^{}:[", field.characteristic(), field.degree())?;
            write_list(f, m.iter())?;
            write!(f, "]")
        }
    }
}

pub(crate) fn write_element(f: &mut fmt::Formatter<'_>, e: &FieldElement) -> fmt::Result {
    if e.repr()[1..].iter().all(|&c| c == 0) {
        write!(f, "{}", e.repr()[0])
    } else {
        write!(f, "(")?;
        write_list(f, e.repr().iter())?;
        write!(f, ")")
    }
}

pub(crate) fn write_poly(f: &mut fmt::Formatter<'_>, p: &Poly) -> fmt::Result {
    write!(f, "[")?;
    write_list(f, p.coeffs().iter())?;
    write!(f, "]")
}

fn write_list<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    for (i, item) in items.enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

fn parse_int<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("invalid {what} `{}`", s.trim())))
}

/// Splits on commas that are not nested inside brackets or parentheses.
pub(crate) fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn strip_delims<'a>(s: &'a str, open: char, close: char, what: &str) -> Result<&'a str> {
    let s = s.trim();
    s.strip_prefix(open)
        .and_then(|r| r.strip_suffix(close))
        .ok_or_else(|| Error::Parse(format!("{what} must be wrapped in {open}{close}: `{s}`")))
}

pub fn parse_field(s: &str) -> Result<Field> {
    let s = s.trim();
    let (head, modulus) = match s.split_once(':') {
        Some((h, m)) => (h, Some(m)),
        None => (s, None),
    };
    let (p, degree) = match head.split_once('^') {
        Some((p, d)) => (
            parse_int::<u64>(p, "characteristic")?,
            parse_int::<usize>(d, "degree")?,
        ),
        None => (parse_int::<u64>(head, "characteristic")?, 1),
    };
    let modulus = modulus
        .map(|m| {
            let inner = strip_delims(m, '[', ']', "modulus")?;
            inner
                .split(',')
                .map(|c| parse_int::<u64>(c, "modulus coefficient"))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    make_field(p, degree, modulus.as_deref())
}

pub fn parse_element(field: &Field, s: &str) -> Result<FieldElement> {
    let s = s.trim();
    if s.starts_with('(') {
        let inner = strip_delims(s, '(', ')', "element")?;
        let p = field.characteristic();
        let repr = inner
            .split(',')
            .map(|c| parse_int::<i64>(c, "coefficient").map(|v| v.rem_euclid(p as i64) as u64))
            .collect::<Result<Vec<_>>>()?;
        field.from_repr(repr)
    } else {
        Ok(field.from_i64(parse_int::<i64>(s, "element")?))
    }
}

pub fn parse_poly(field: &Field, s: &str) -> Result<Poly> {
    let inner = strip_delims(s, '[', ']', "polynomial")?;
    if inner.trim().is_empty() {
        return Ok(Poly::zero(field));
    }
    let coeffs = split_top_level(inner)
        .into_iter()
        .map(|c| parse_element(field, c))
        .collect::<Result<Vec<_>>>()?;
    Poly::new(field, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_forms() {
        let f = parse_field("61").unwrap();
        assert_eq!(f.order(), 61);
        assert_eq!(f.to_string(), "61");
        let g = parse_field("61^2").unwrap();
        let round = parse_field(&g.to_string()).unwrap();
        assert!(round.same_as(&g));
        assert!(parse_field("13^2:[1,0,1]").is_err()); // x^2+1 splits mod 13
        assert!(parse_field("13^2:[2,0,1]").is_ok());
        assert!(parse_field("abc").is_err());
    }

    #[test]
    fn element_forms() {
        let f = Field::new(13, 2).unwrap();
        let e = parse_element(&f, "(3,4)").unwrap();
        assert_eq!(e.repr(), &[3, 4]);
        assert_eq!(e.to_string(), "(3,4)");
        assert_eq!(parse_element(&f, "-1").unwrap(), -f.one());
        assert!(parse_element(&f, "(1,2,3)").is_err());
    }

    #[test]
    fn poly_forms() {
        let f = Field::new(13, 2).unwrap();
        let p = parse_poly(&f, "[(1,2), 3, (0,1)]").unwrap();
        assert_eq!(p.degree(), Some(2));
        assert_eq!(parse_poly(&f, &p.to_string()).unwrap(), p);
        assert!(parse_poly(&f, "[]").unwrap().is_zero());
    }
}
