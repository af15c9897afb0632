//! Recursive-descent parser for field element expressions.
//!
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' ['-'] INT)?
//! atom  := INT | 'z' | 't' | '(' expr ')'

use super::{Field, FieldElement};
use crate::error::{Error, Result};

struct Parser<'a> {
    field: &'a Field,
    src: &'a [u8],
    pos: usize,
}

pub(super) fn parse(field: &Field, s: &str) -> Result<FieldElement> {
    let mut p = Parser { field, src: s.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { offset: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<FieldElement> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { self.field.add(&acc, &rhs) } else { self.field.sub(&acc, &rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<FieldElement> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let at = self.pos;
            let rhs = self.unary()?;
            acc = if c == b'*' {
                self.field.mul(&acc, &rhs)
            } else {
                self.field
                    .div(&acc, &rhs)
                    .map_err(|_| Error::Parse { offset: at, msg: "division by zero".into() })?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<FieldElement> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            let v = self.unary()?;
            return Ok(self.field.neg(&v));
        }
        self.power()
    }

    fn power(&mut self) -> Result<FieldElement> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
        }
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let at = self.pos;
        let e = self.int()?;
        if paren {
            if self.peek() != Some(b')') {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
        }
        let e: i64 = e.try_into().map_err(|_| Error::Parse { offset: at, msg: "exponent too large".into() })?;
        self.field
            .pow(&base, if neg { -e } else { e })
            .map_err(|_| Error::Parse { offset: at, msg: "negative power of zero".into() })
    }

    fn int(&mut self) -> Result<num_bigint::BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<FieldElement> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c @ (b'z' | b't')) => {
                let want = if self.field.is_finite() { b't' } else { b'z' };
                if c != want {
                    return Err(self.err(&format!("symbol '{}' not valid in this field", c as char)));
                }
                self.pos += 1;
                Ok(self.field.gen())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.int()?;
                self.field
                    .from_rational(&num_rational::BigRational::from_integer(n))
                    .map_err(|e| Error::Parse { offset: self.pos, msg: e.to_string() })
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
