//! Integer expressions used for ranks and derived parameters in catalog
//! entries, e.g. `"n-1"`, `"(n-1)/2"`, `"p+q+1"`, `"min(2*p+1, 2*q+1)"`.
//!
//! Grammar: sums and differences of products and floor quotients of atoms;
//! an atom is an integer literal, a parameter name, a parenthesized
//! expression, a unary minus, or `min(a, b)` / `max(a, b)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Num(i64),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut n = 0i64;
            while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                n = n
                    .checked_mul(10)
                    .and_then(|n| n.checked_add(i64::from(d)))
                    .ok_or_else(|| bad(src, "literal overflows"))?;
                chars.next();
            }
            out.push(Token::Num(n));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push(Token::Ident(s));
        } else if "+-*/(),".contains(c) {
            out.push(Token::Op(c));
            chars.next();
        } else {
            return Err(bad(src, &format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

fn bad(src: &str, why: &str) -> Error {
    Error::CatalogFormat(format!("expression {src:?}: {why}"))
}

struct Parser<'a> {
    src: &'a str,
    tokens: Vec<Token>,
    pos: usize,
    vars: &'a BTreeMap<String, i64>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> Result<()> {
        if self.eat(op) {
            Ok(())
        } else {
            Err(bad(self.src, &format!("expected {op:?}")))
        }
    }

    fn sum(&mut self) -> Result<i64> {
        let mut acc = self.product()?;
        loop {
            if self.eat('+') {
                acc += self.product()?;
            } else if self.eat('-') {
                acc -= self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<i64> {
        let mut acc = self.atom()?;
        loop {
            if self.eat('*') {
                acc *= self.atom()?;
            } else if self.eat('/') {
                let d = self.atom()?;
                if d == 0 {
                    return Err(bad(self.src, "division by zero"));
                }
                acc = acc.div_euclid(d);
            } else {
                return Ok(acc);
            }
        }
    }

    fn atom(&mut self) -> Result<i64> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(n)
            }
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(-self.atom()?)
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let v = self.sum()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if name == "min" || name == "max" {
                    self.expect('(')?;
                    let a = self.sum()?;
                    self.expect(',')?;
                    let b = self.sum()?;
                    self.expect(')')?;
                    Ok(if name == "min" { a.min(b) } else { a.max(b) })
                } else {
                    self.vars
                        .get(&name)
                        .copied()
                        .ok_or_else(|| bad(self.src, &format!("unknown parameter {name:?}")))
                }
            }
            _ => Err(bad(self.src, "unexpected end or operator")),
        }
    }
}

/// Evaluates `src` with the given parameter bindings. `/` is floor division.
pub fn eval(src: &str, vars: &BTreeMap<String, i64>) -> Result<i64> {
    let mut p = Parser {
        src,
        tokens: tokenize(src)?,
        pos: 0,
        vars,
    };
    let v = p.sum()?;
    if p.pos != p.tokens.len() {
        return Err(bad(src, "trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn arithmetic() {
        let v = vars(&[("n", 7), ("p", 1), ("q", 2)]);
        assert_eq!(eval("n-1", &v).unwrap(), 6);
        assert_eq!(eval("(n-1)/2", &v).unwrap(), 3);
        assert_eq!(eval("n/2", &v).unwrap(), 3);
        assert_eq!(eval("p+q+1", &v).unwrap(), 4);
        assert_eq!(eval("min(2*p+1, 2*q+1)", &v).unwrap(), 3);
        assert_eq!(eval("max(p, q) * -2", &v).unwrap(), -4);
        assert_eq!(eval(" 12 ", &v).unwrap(), 12);
    }

    #[test]
    fn malformed() {
        let v = vars(&[("n", 3)]);
        for src in ["", "n+", "m", "n/0", "(n", "n n", "n % 2", "min(n)"] {
            assert!(eval(src, &v).is_err(), "{src}");
        }
    }
}
