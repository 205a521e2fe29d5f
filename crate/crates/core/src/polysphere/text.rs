//! Text format for polynomials: terms like `3/2*x1^2*x2 - x3^4` over
//! variables `x1..xN`.
//!
//! The serializer emits the canonical reduced form: terms in descending
//! graded-lexicographic order, coefficients in lowest terms, unit
//! coefficients and unit exponents omitted. Parsing the canonical form and
//! re-serializing reproduces the input byte for byte.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{MultiIndex, MultiPoly};
use crate::error::{Error, Result};
use crate::scalar::Rational;

pub(super) fn serialize_poly(poly: &MultiPoly) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    // Descending graded-lex: highest degree first, ties broken by the larger
    // exponent vector.
    for (pos, (index, coef)) in poly.terms.iter().rev().enumerate() {
        let negative = coef.is_negative();
        if pos == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&term_body(index, &coef.abs()));
    }
    out
}

fn term_body(index: &MultiIndex, coef_abs: &Rational) -> String {
    let mut factors: Vec<String> = Vec::new();
    if !coef_abs.is_one() || index.degree() == 0 {
        factors.push(coef_abs.to_string());
    }
    for (var, &exp) in index.exponents().iter().enumerate() {
        match exp {
            0 => {}
            1 => factors.push(format!("x{}", var + 1)),
            e => factors.push(format!("x{}^{}", var + 1, e)),
        }
    }
    factors.join("*")
}

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            text: text.as_bytes(),
            pos: 0,
            line: 1,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let byte = self.peek()?;
        if byte == b'\n' {
            self.line += 1;
        }
        self.pos += 1;
        Some(byte)
    }

    fn skip_spaces(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.bump();
        }
    }

    fn column(&self) -> usize {
        let line_start = self.text[..self.pos]
            .iter()
            .rposition(|&b| b == b'\n')
            .map(|p| p + 1)
            .unwrap_or(0);
        self.pos - line_start + 1
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column(),
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        let slice = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        Ok(slice.parse().unwrap())
    }
}

/// Parse the textual polynomial format with `nvars` ambient variables.
///
/// Accepts any term order and repeated variables within a term; signs appear
/// only as leading `-`/`+` or as separators between terms. Errors carry the
/// line and column of the offending byte.
pub fn parse_poly(input: &str, nvars: usize) -> Result<MultiPoly> {
    let mut cursor = Cursor::new(input);
    let mut poly = MultiPoly::zero(nvars);
    cursor.skip_spaces();
    if cursor.peek().is_none() {
        return Err(cursor.error("empty polynomial"));
    }
    let mut sign = match cursor.peek() {
        Some(b'-') => {
            cursor.bump();
            -1
        }
        Some(b'+') => {
            cursor.bump();
            1
        }
        _ => 1,
    };
    loop {
        cursor.skip_spaces();
        let (index, coef) = parse_term(&mut cursor, nvars)?;
        let signed = if sign < 0 { -coef } else { coef };
        poly.add_term(index, signed);
        cursor.skip_spaces();
        match cursor.peek() {
            None => break,
            Some(b'+') => {
                cursor.bump();
                sign = 1;
            }
            Some(b'-') => {
                cursor.bump();
                sign = -1;
            }
            Some(other) => {
                return Err(cursor.error(format!(
                    "expected '+', '-', or end of input, found {:?}",
                    other as char
                )))
            }
        }
    }
    Ok(poly)
}

fn parse_term(cursor: &mut Cursor<'_>, nvars: usize) -> Result<(MultiIndex, Rational)> {
    let mut coef = Rational::one();
    let mut exps = vec![0u32; nvars];
    loop {
        cursor.skip_spaces();
        match cursor.peek() {
            Some(b'0'..=b'9') => {
                let numer = cursor.digits()?;
                let denom = if cursor.peek() == Some(b'/') {
                    cursor.bump();
                    let d = cursor.digits()?;
                    if d.is_zero() {
                        return Err(cursor.error("zero denominator"));
                    }
                    d
                } else {
                    BigInt::one()
                };
                coef *= Rational::new(numer, denom);
            }
            Some(b'x') => {
                cursor.bump();
                let var_number = cursor.digits()?;
                let var: usize = var_number
                    .to_string()
                    .parse()
                    .map_err(|_| cursor.error("variable index too large"))?;
                if var == 0 || var > nvars {
                    return Err(cursor.error(format!(
                        "variable x{var} out of range for {nvars} variables"
                    )));
                }
                let exp: u32 = if cursor.peek() == Some(b'^') {
                    cursor.bump();
                    cursor
                        .digits()?
                        .to_string()
                        .parse()
                        .map_err(|_| cursor.error("exponent too large"))?
                } else {
                    1
                };
                exps[var - 1] += exp;
            }
            _ => return Err(cursor.error("expected a coefficient or a variable")),
        }
        cursor.skip_spaces();
        if cursor.peek() == Some(b'*') {
            cursor.bump();
        } else {
            break;
        }
    }
    Ok((MultiIndex::new(exps), coef))
}
