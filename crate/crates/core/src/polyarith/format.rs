//! Text and JSON renderings of [`IntPoly`].
//!
//! Text grammar, terms in descending exponent order:
//!
//! ```text
//! poly := "0" | term ((" + " | " - ") term)*
//! term := [sign] [coeff "*"] "q" ["^" exp] | [sign] coeff
//! ```
//!
//! A bare `q` is `q^1`; a coefficient of 1 is omitted in front of `q`.
//! JSON is `{"coeffs": ["c0", "c1", ...]}` with decimal-string coefficients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::IntPoly;
use crate::error::PolyError;

/// Largest exponent the parser accepts; guards against absurd allocations.
const MAX_PARSE_EXPONENT: usize = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyStyle {
    Text,
    Json,
}

/// Renders `(coefficient, exponent)` pairs, already in output order, using
/// the text grammar. Coefficients are pre-rendered strings so integer and
/// rational polynomials share the layout.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, terms: Vec<(String, usize)>) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (idx, (coeff, e)) in terms.into_iter().enumerate() {
        let (neg, mag) = match coeff.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, coeff),
        };
        match (idx, neg) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        match e {
            0 => f.write_str(&mag)?,
            _ => {
                if mag != "1" {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    f.write_str("q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (c.to_string(), e))
            .collect();
        write_terms(f, terms)
    }
}

pub fn format_poly(a: &IntPoly, style: PolyStyle) -> String {
    match style {
        PolyStyle::Text => a.to_string(),
        PolyStyle::Json => serde_json::to_string(a).expect("IntPoly serialization cannot fail"),
    }
}

/// Parses the text grammar.
pub fn parse_poly(s: &str) -> Result<IntPoly, PolyError> {
    Parser { src: s, pos: 0 }.poly()
}

/// Parses the JSON object form.
pub fn parse_poly_json(s: &str) -> Result<IntPoly, PolyError> {
    serde_json::from_str(s).map_err(|e| PolyError::Parse {
        pos: byte_offset(s, e.line(), e.column()),
        msg: e.to_string(),
    })
}

fn byte_offset(s: &str, line: usize, column: usize) -> usize {
    let line_start: usize = s
        .split_inclusive('\n')
        .take(line.saturating_sub(1))
        .map(str::len)
        .sum();
    line_start + column.saturating_sub(1)
}

impl FromStr for IntPoly {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b == b' ' || b == b'\t') {
            self.pos += 1;
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let src: &'a str = self.src;
        (self.pos > start).then(|| &src[start..self.pos])
    }

    fn poly(mut self) -> Result<IntPoly, PolyError> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        self.skip_ws();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            self.skip_ws();
            let (c, e) = self.term()?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            if negative {
                coeffs[e] -= c;
            } else {
                coeffs[e] += c;
            }
            self.skip_ws();
            negative = match self.peek() {
                None => break,
                Some(b'+') => false,
                Some(b'-') => true,
                Some(_) => return self.err("expected ' + ' or ' - ' between terms"),
            };
            self.pos += 1;
        }
        Ok(IntPoly::new(coeffs))
    }

    fn term(&mut self) -> Result<(BigInt, usize), PolyError> {
        let start = self.pos;
        let coeff = match self.digits() {
            Some(d) => {
                let c = BigInt::from_str(d).expect("ascii digits");
                if self.peek() != Some(b'*') {
                    return Ok((c, 0));
                }
                self.pos += 1;
                Some(c)
            }
            None => None,
        };
        if self.peek() != Some(b'q') {
            return if coeff.is_some() || self.pos != start {
                self.err("expected 'q' after '*'")
            } else {
                self.err("expected a coefficient or 'q'")
            };
        }
        self.pos += 1;
        let mut exp = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let d = match self.digits() {
                Some(d) => d,
                None => return self.err("expected exponent digits after '^'"),
            };
            exp = match d.parse::<usize>() {
                Ok(e) if e <= MAX_PARSE_EXPONENT => e,
                _ => {
                    self.pos = at;
                    return self.err(format!("exponent {d} exceeds {MAX_PARSE_EXPONENT}"));
                }
            };
        }
        Ok((coeff.unwrap_or_else(|| BigInt::from(1)), exp))
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffsRepr {
    coeffs: Vec<String>,
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CoeffsRepr {
            coeffs: self.coeffs().iter().map(BigInt::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CoeffsRepr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| {
                let digits = s.strip_prefix('-').unwrap_or(s);
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(D::Error::custom(format!(
                        "invalid decimal coefficient {s:?}"
                    )));
                }
                BigInt::from_str(s).map_err(D::Error::custom)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}
