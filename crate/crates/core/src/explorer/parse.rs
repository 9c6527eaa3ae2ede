use num_bigint::BigInt;

use crate::curvegeom::CurveData;
use crate::error::{Error, Result};
use crate::exactcore::{Poly, RatFunc, Rational};

/// Largest accepted `|exponent|` in `expr ^ k`.
const MAX_EXPONENT: i64 = 1024;

/// Parses `expr; expr; ...` into a curve.
///
/// Grammar, with the usual precedence and `^` binding tighter than unary
/// minus (`-t^2` is `-(t^2)`):
///
/// ```text
/// expr  := term (('+' | '-') term)*
/// term  := unary (('*' | '/') unary)*
/// unary := ('+' | '-') unary | power
/// power := atom ('^' exponent)?
/// exponent := ['-' | '+'] integer | '(' ['-' | '+'] integer ')'
/// atom  := integer | 't' | '(' expr ')'
/// ```
///
/// Error positions are byte offsets into `text`.
pub fn parse_curve(text: &str) -> Result<CurveData> {
    let mut coords = Vec::new();
    let mut offset = 0;
    for piece in text.split(';') {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: offset,
            end: offset + piece.len(),
        };
        coords.push(p.parse_coordinate()?);
        offset += piece.len() + 1;
    }
    if coords.len() < 2 {
        return Err(Error::Parse {
            position: text.len(),
            message: "expected at least two ';'-separated coordinates".into(),
        });
    }
    if let Some(i) = coords.iter().position(RatFunc::is_zero) {
        return Err(Error::domain(format!(
            "coordinate {} is identically zero",
            i + 1
        )));
    }
    CurveData::new(coords)
}

/// Parses a single rational function of `t`.
pub fn parse_ratfunc(text: &str) -> Result<RatFunc> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
        end: text.len(),
    }
    .parse_coordinate()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.end && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        (self.pos < self.end).then(|| self.src[self.pos])
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_coordinate(&mut self) -> Result<RatFunc> {
        if self.peek().is_none() {
            return self.error("empty expression");
        }
        let f = self.expr()?;
        match self.peek() {
            None => Ok(f),
            Some(c) => self.error(format!("unexpected '{}'", c as char)),
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
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

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let rhs = self.unary()?;
                if rhs.is_zero() {
                    return Err(Error::Parse {
                        position: at,
                        message: "division by zero".into(),
                    });
                }
                acc = acc.div(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.eat(b'-') {
            Ok(self.unary()?.neg())
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.pos;
        let e = if self.eat(b'(') {
            let e = self.signed_integer()?;
            if !self.eat(b')') {
                return self.error("expected ')'");
            }
            e
        } else {
            self.signed_integer()?
        };
        if e.abs() > MAX_EXPONENT {
            return Err(Error::Parse {
                position: at,
                message: format!("exponent {e} exceeds {MAX_EXPONENT} in absolute value"),
            });
        }
        if e < 0 && base.is_zero() {
            return Err(Error::Parse {
                position: at,
                message: "zero to a negative power".into(),
            });
        }
        base.pow(e)
    }

    fn signed_integer(&mut self) -> Result<i64> {
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let at = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return self.error("expected an integer exponent");
        }
        let v: i64 = digits.parse().map_err(|_| Error::Parse {
            position: at,
            message: format!("exponent {digits} out of range"),
        })?;
        Ok(if negative { -v } else { v })
    }

    fn digits(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.end && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok(RatFunc::t())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.error("expected ')'");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(RatFunc::from_poly(Poly::constant(Rational::from_integer(
                    n,
                ))))
            }
            Some(c) => self.error(format!("unexpected '{}'", c as char)),
            None => self.error("unexpected end of expression"),
        }
    }
}
