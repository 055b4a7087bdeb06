use crate::error::{Error, Result};
use crate::poly::{Coeff, Polynomial};
use crate::ring::RingSignature;
use num_bigint::BigInt;

/// Recursive-descent parser for the polynomial grammar:
/// variables `x0..x<n>`, integer and `p/q` coefficients, `^` integer
/// powers, explicit `*` between factors, `+`/`-` with usual
/// precedence, insignificant whitespace, optional parentheses.
pub fn parse_polynomial(text: &str, sig: RingSignature) -> Result<Polynomial> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        sig,
    };
    p.skip_ws();
    let poly = p.expression()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    sig: RingSignature,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expression(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        self.skip_ws();
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.skip_ws();
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                let f = self.factor()?;
                acc = acc.mul(&f)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.unsigned_integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.expression()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                let idx = self.unsigned_integer()?;
                let idx: usize = idx
                    .try_into()
                    .map_err(|_| self.err("variable index too large"))?;
                if idx >= self.sig.num_vars() {
                    return Err(self.err(&format!(
                        "variable index {} exceeds ring with {} variables",
                        idx,
                        self.sig.num_vars()
                    )));
                }
                Ok(Polynomial::var(self.sig, idx))
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = self.unsigned_bigint()?;
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let denom = self.unsigned_bigint()?;
                    if denom == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    Ok(Polynomial::constant(self.sig, Coeff::new(numer, denom)))
                } else {
                    Ok(Polynomial::constant(self.sig, Coeff::from(numer)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => Err(self.err("unknown variable")),
            _ => Err(self.err("expected coefficient, variable, or '('")),
        }
    }

    fn unsigned_integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self
            .peek()
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn unsigned_bigint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self
            .peek()
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .unwrap())
    }
}

/// Convenience used throughout the crate: parse or panic.
#[allow(dead_code)]
pub(crate) fn must_parse(text: &str, sig: RingSignature) -> Polynomial {
    parse_polynomial(text, sig).expect("well-formed polynomial literal")
}
