//! Canonical text form `num / den` and a small expression parser.

use std::fmt;
use std::str::FromStr;

use super::coefrat::CoefRat;
use super::laurent::{Int, Laurent, Mono};
use crate::error::{Error, Result};

fn write_mono(out: &mut String, m: Mono) {
    let mut parts = Vec::new();
    if m.u != 0 {
        if m.u % 2 == 0 {
            parts.push(power("q", m.u / 2));
        } else {
            parts.push(power("u", m.u));
        }
    }
    if m.t != 0 {
        parts.push(power("t", m.t));
    }
    out.push_str(&parts.join("*"));
}

fn power(var: &str, e: i32) -> String {
    if e == 1 {
        var.to_string()
    } else {
        format!("{var}^{e}")
    }
}

/// Terms in descending monomial order, e.g. `u - 1 - 3*q^2*t^-1`.
pub fn format_laurent(p: &Laurent) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().rev().enumerate() {
        let neg = *c < 0;
        let a = c.unsigned_abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if *m == Mono::ONE {
            out.push_str(&a.to_string());
        } else {
            if a != 1 {
                out.push_str(&format!("{a}*"));
            }
            write_mono(&mut out, *m);
        }
    }
    out
}

fn wrap(p: &Laurent) -> String {
    let s = format_laurent(p);
    if p.len() > 1 {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for CoefRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", wrap(self.numer()), wrap(self.denom()))
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<Int> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("expected integer"))
    }

    fn expr(&mut self) -> Result<CoefRat> {
        let mut acc = if self.eat(b'-') { self.term()?.neg() } else { self.term()? };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<CoefRat> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.factor()?);
            } else if self.eat(b'/') {
                acc = acc.div(&self.factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<CoefRat> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let e = self.int()? as i32;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<CoefRat> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(b'u') => {
                self.pos += 1;
                Ok(CoefRat::u())
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(CoefRat::q())
            }
            Some(b't') => {
                self.pos += 1;
                Ok(CoefRat::t())
            }
            Some(c) if c.is_ascii_digit() => Ok(CoefRat::from_int(self.int()?)),
            _ => Err(self.err("unexpected input")),
        }
    }
}

/// Parses expressions in `u`, `q`, `t` with `+ - * / ^` and parentheses.
pub fn parse_coefrat(s: &str) -> Result<CoefRat> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

impl FromStr for CoefRat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_coefrat(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_in_descending_order() {
        let x: CoefRat = "-3*q^2*t^-1 + u - 1".parse().unwrap();
        assert_eq!(x.to_string(), "(u - 1 - 3*q^2*t^-1) / 1");
        let y: CoefRat = "1/(q-1)".parse().unwrap();
        assert_eq!(y.to_string(), "1 / (q - 1)");
    }

    #[test]
    fn round_trip() {
        for s in ["0", "q*t/(1+q)", "(u^3 - t^2)/(q^2 + 2*t)", "-7*q^-2"] {
            let x: CoefRat = s.parse().unwrap();
            let y: CoefRat = x.to_string().parse().unwrap();
            assert_eq!(x, y, "{s}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!("q + ".parse::<CoefRat>().is_err());
        assert!("x".parse::<CoefRat>().is_err());
        assert!("1/0".parse::<CoefRat>().is_err());
    }
}
