//! Recursive-descent parser for polynomial text in `x`, `y`.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*      divisor must be a nonzero constant
//! unary  := ("+" | "-") unary | power
//! power  := atom ("^" exponent)?
//! exponent := integer | "(" integer ")"
//! atom   := integer | "x" | "y" | "(" expr ")"
//! ```

use super::poly::CurvePoly;
use crate::arith::rational::Rational;
use crate::Error;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, Error> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Num(s.parse().unwrap()), start));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else if c == '−' {
            out.push((Tok::Sym('-'), i));
            i += 1;
        } else {
            return Err(err(i, format!("unexpected character '{c}'")));
        }
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn here(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<CurvePoly, Error> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<CurvePoly, Error> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if *self.peek() == Tok::Sym('/') {
                let at = self.here();
                self.bump();
                let d = self.unary()?;
                match d.as_constant() {
                    Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                    Some(_) => return Err(err(at, "division by zero")),
                    None => return Err(err(at, "division by a non-constant polynomial")),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<CurvePoly, Error> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<CurvePoly, Error> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.here();
        let e = self.exponent(at)?;
        Ok(base.pow(e))
    }

    fn exponent(&mut self, at: usize) -> Result<u32, Error> {
        let paren = self.eat('(');
        if *self.peek() == Tok::Sym('-') {
            return Err(err(at, "negative exponent"));
        }
        let n = match self.bump() {
            Tok::Num(n) => n,
            _ => return Err(err(at, "exponent must be a nonnegative integer")),
        };
        if *self.peek() == Tok::Sym('/') {
            return Err(err(at, "fractional exponent"));
        }
        if paren && !self.eat(')') {
            return Err(err(self.here(), "expected ')'"));
        }
        n.to_u32()
            .filter(|&e| e <= 10_000)
            .ok_or_else(|| err(at, "exponent too large"))
    }

    fn atom(&mut self) -> Result<CurvePoly, Error> {
        let at = self.here();
        match self.bump() {
            Tok::Num(n) => Ok(CurvePoly::constant(Rational::from_integer(n))),
            Tok::Ident(name) => match name.as_str() {
                "x" => Ok(CurvePoly::x()),
                "y" => Ok(CurvePoly::y()),
                _ => Err(err(at, format!("unknown identifier '{name}'"))),
            },
            Tok::Sym('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(err(self.here(), "expected ')'"));
                }
                Ok(e)
            }
            Tok::End => Err(err(at, "unexpected end of input")),
            Tok::Sym(c) => Err(err(at, format!("unexpected '{c}'"))),
        }
    }
}

/// Parses and fully expands a polynomial in `x`, `y`.
pub fn parse_curve(text: &str) -> Result<CurvePoly, Error> {
    let mut lx = Lexer { toks: lex(text)?, pos: 0 };
    let p = lx.expr()?;
    if *lx.peek() != Tok::End {
        return Err(err(lx.here(), "unexpected trailing input"));
    }
    Ok(p)
}
