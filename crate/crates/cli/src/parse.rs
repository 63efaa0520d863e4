//! Text form of polynomials: `t1^2*t2 - 2*t2 + 1`.
//!
//! Terms are separated by `+` or `-`; a term is an optional integer
//! coefficient followed by `*`-separated factors `t<i>` or `t<i>^<e>`.
//! Variables are numbered from 1. Whitespace is ignored.

use std::fmt;

use rghw_core::{Monomial, Polynomial, PrimeField};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at column {}: {}", self.pos + 1, self.msg)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("number too large"))
    }
}

/// Parses `text` as a polynomial in `t1, ..., t<nvars>` over `field`.
pub fn parse_polynomial(text: &str, field: PrimeField, nvars: usize) -> Result<Polynomial, ParseError> {
    let mut c = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms: Vec<(Monomial, i64)> = Vec::new();
    let q = field.order() as i128;
    let mut first = true;
    loop {
        let mut sign = 1i128;
        if c.eat(b'-') {
            sign = -1;
        } else if !c.eat(b'+') && !first {
            return c.err("expected '+' or '-'");
        }
        first = false;

        let mut coeff: i128 = 1;
        let mut exps = vec![0u32; nvars];
        let mut has_factor = false;
        if matches!(c.peek(), Some(b'0'..=b'9')) {
            coeff = c.number()? as i128 % q;
            has_factor = true;
            if !c.eat(b'*') {
                terms.push((Monomial::new(exps), (sign * coeff % q) as i64));
                if c.peek().is_none() {
                    break;
                }
                continue;
            }
        }
        loop {
            if !c.eat(b't') {
                return c.err(if has_factor { "expected a variable t<i>" } else { "expected a term" });
            }
            let at = c.pos;
            let i = c.number()? as usize;
            if i == 0 || i > nvars {
                return Err(ParseError {
                    pos: at,
                    msg: format!("variable t{i} outside t1..t{nvars}"),
                });
            }
            let e = if c.eat(b'^') { c.number()? } else { 1 };
            let e = u32::try_from(e).or_else(|_| c.err("exponent too large"))?;
            exps[i - 1] += e;
            has_factor = true;
            if !c.eat(b'*') {
                break;
            }
        }
        terms.push((Monomial::new(exps), (sign * coeff % q) as i64));
        if c.peek().is_none() {
            break;
        }
    }
    Ok(Polynomial::from_terms(field, nvars, terms).expect("exponent vectors have length nvars"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rghw_core::MonomialOrder;

    fn k(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    fn show(text: &str, q: u64, s: usize) -> String {
        parse_polynomial(text, k(q), s).unwrap().to_text(MonomialOrder::GRevLex)
    }

    #[test]
    fn parses_terms() {
        assert_eq!(show("t1^2*t2 + 2*t2", 5, 2), "t1^2*t2 + 2*t2");
        assert_eq!(show("t1^2 - t1", 3, 2), "t1^2 - t1");
        assert_eq!(show(" -t1 + 4 ", 5, 1), "-t1 - 1");
        assert_eq!(show("3", 3, 2), "0");
        assert_eq!(show("t1*t1*t2^0", 3, 2), "t1^2");
        assert_eq!(show("t1 + t1 + t1", 3, 1), "0");
        assert_eq!(show("7*t2^3 - t2", 5, 2), "2*t2^3 - t2");
    }

    #[test]
    fn reports_positions() {
        let e = parse_polynomial("t1 + t3", k(3), 2).unwrap_err();
        assert_eq!(e.pos, 6);
        assert!(e.msg.contains("t3"));
        assert!(parse_polynomial("", k(3), 2).is_err());
        assert!(parse_polynomial("t1 t2", k(3), 2).is_err());
        assert!(parse_polynomial("2*", k(3), 2).is_err());
        assert!(parse_polynomial("x1", k(3), 2).is_err());
        assert!(parse_polynomial("t1^", k(3), 2).is_err());
    }
}
