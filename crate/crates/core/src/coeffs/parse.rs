//! Recursive-descent parser for the rendering grammar of [`RationalQ`]:
//! sums of rational multiples of integer powers of `q`, with `*`, `/`,
//! parentheses and unary minus. `q^-2`, `q^{-2}` and `q^(-2)` are accepted.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::rational::RationalQ;
use crate::error::{Error, Result};

pub(crate) fn parse_rational_q(s: &str) -> Result<RationalQ> {
    let tokens = tokenize(s)?;
    let mut p = Parser { tokens, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Q,
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(d);
                    chars.next();
                }
                out.push(Tok::Num(digits.parse().unwrap()));
            }
            'q' => {
                chars.next();
                out.push(Tok::Q);
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' | '{' | '}' => {
                chars.next();
                out.push(Tok::Op(c));
            }
            // unicode minus as printed in some renderings
            '−' => {
                chars.next();
                out.push(Tok::Op('-'));
            }
            _ => return Err(Error::Parse(format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalQ> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalQ> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                acc = acc.checked_div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalQ> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalQ> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.exponent()?;
        if e >= 0 {
            Ok(base.pow(e as u32))
        } else {
            Ok(base.pow((-e) as u32).recip()?)
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let close = if self.eat('{') {
            Some('}')
        } else if self.eat('(') {
            Some(')')
        } else {
            None
        };
        let neg = self.eat('-');
        let v = match self.tokens.get(self.pos) {
            Some(Tok::Num(n)) => {
                let v: i64 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                self.pos += 1;
                v
            }
            _ => return Err(Error::Parse("expected integer exponent".into())),
        };
        if let Some(c) = close {
            if !self.eat(c) {
                return Err(Error::Parse(format!("expected {c:?}")));
            }
        }
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<RationalQ> {
        match self.tokens.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RationalQ::from_rational(BigRational::from_integer(n)))
            }
            Some(Tok::Q) => {
                self.pos += 1;
                Ok(RationalQ::q_power(1))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                Ok(v)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}
