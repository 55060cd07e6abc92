//! Exact polynomial-expression parser.
//!
//! Grammar (no implicit multiplication):
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := rational | var | '(' expr ')' | '-' factor
//! ```
//! Rationals are `a` or `a/b` with integer parts; variables are one of
//! x, y, z, s, t.

use crate::algebra::poly::{Poly, Var};
use crate::algebra::rat::Rat;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("unexpected character '{0}' at position {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected token at position {0}")]
    UnexpectedToken(usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("exponent must be a non-negative integer literal at position {0}")]
    BadExponent(usize),
    #[error("unknown variable '{0}' at position {1}")]
    UnknownVariable(String, usize),
    #[error("zero denominator at position {0}")]
    ZeroDenominator(usize),
    #[error("trailing input at position {0}")]
    TrailingInput(usize),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                out.push((Tok::Plus, pos));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, pos));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, pos));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, pos));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, pos));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, pos));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, pos));
                i += 1;
            }
            '0'..='9' => {
                let mut digits = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    digits.push(chars[i]);
                    i += 1;
                }
                out.push((Tok::Int(digits.parse().expect("digits")), pos));
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    name.push(chars[i]);
                    i += 1;
                }
                out.push((Tok::Ident(name), pos));
            }
            other => return Err(ParseError::UnexpectedChar(other, pos)),
        }
    }
    Ok(out)
}

/// Expression tree over the documented grammar.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(Rat),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn eval(&self) -> Poly<Rat> {
        match self {
            Expr::Num(r) => Poly::constant(r.clone()),
            Expr::Var(v) => Poly::var(*v),
            Expr::Neg(e) => e.eval().neg(),
            Expr::Add(a, b) => a.eval().add(&b.eval()),
            Expr::Sub(a, b) => a.eval().sub(&b.eval()),
            Expr::Mul(a, b) => a.eval().mul(&b.eval()),
            Expr::Pow(a, e) => a.eval().pow(*e),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(Tok, usize)> {
        self.toks.get(self.at)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        while let Some((tok, _)) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        while let Some((Tok::Star, _)) = self.peek() {
            self.bump();
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if let Some((Tok::Caret, cpos)) = self.peek().cloned() {
            self.bump();
            match self.bump() {
                Some((Tok::Int(n), _)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| ParseError::BadExponent(cpos))?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                Some((_, p)) => Err(ParseError::BadExponent(p)),
                None => Err(ParseError::UnexpectedEnd),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        match self.bump() {
            Some((Tok::Int(n), pos)) => {
                // optional '/ uint' forms a rational literal
                if let Some((Tok::Slash, _)) = self.peek() {
                    self.bump();
                    match self.bump() {
                        Some((Tok::Int(d), dpos)) => {
                            if d == BigInt::from(0) {
                                return Err(ParseError::ZeroDenominator(dpos));
                            }
                            Ok(Expr::Num(Rat::new(n, d)))
                        }
                        Some((_, p)) => Err(ParseError::UnexpectedToken(p)),
                        None => Err(ParseError::UnexpectedEnd),
                    }
                } else {
                    let _ = pos;
                    Ok(Expr::Num(Rat::from(n)))
                }
            }
            Some((Tok::Ident(name), pos)) => Var::from_name(&name)
                .map(Expr::Var)
                .ok_or(ParseError::UnknownVariable(name, pos)),
            Some((Tok::LParen, _)) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((Tok::RParen, _)) => Ok(inner),
                    Some((_, p)) => Err(ParseError::UnexpectedToken(p)),
                    None => Err(ParseError::UnexpectedEnd),
                }
            }
            Some((Tok::Minus, _)) => Ok(Expr::Neg(Box::new(self.factor()?))),
            Some((_, p)) => Err(ParseError::UnexpectedToken(p)),
            None => Err(ParseError::UnexpectedEnd),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0 };
    let e = p.expr()?;
    if let Some((_, pos)) = p.peek() {
        return Err(ParseError::TrailingInput(*pos));
    }
    Ok(e)
}

pub fn parse_poly(text: &str) -> Result<Poly<Rat>, ParseError> {
    parse_expr(text).map(|e| e.eval())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, rat_int};

    #[test]
    fn parse_examples() {
        let cone = parse_poly("y^2 - 2*x*z").unwrap();
        let expect = Poly::var(Var::Y).pow(2).sub(
            &Poly::var(Var::X)
                .mul(&Poly::var(Var::Z))
                .scale(&rat_int(2)),
        );
        assert_eq!(cone, expect);
        assert_eq!(parse_poly("x").unwrap(), Poly::var(Var::X));
        assert_eq!(
            parse_poly("3/5*x").unwrap(),
            Poly::var(Var::X).scale(&rat(3, 5))
        );
        assert_eq!(
            parse_poly("-(x + y)^2").unwrap(),
            Poly::var(Var::X).add(&Poly::var(Var::Y)).pow(2).neg()
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_poly("x^(1/2)"),
            Err(ParseError::BadExponent(_))
        ));
        assert!(matches!(
            parse_poly("2x"),
            Err(ParseError::TrailingInput(_))
        ));
        assert!(matches!(
            parse_poly("w + 1"),
            Err(ParseError::UnknownVariable(_, _))
        ));
        assert!(matches!(parse_poly("1/0"), Err(ParseError::ZeroDenominator(_))));
        assert!(matches!(parse_poly(""), Err(ParseError::UnexpectedEnd)));
        assert!(matches!(parse_poly("x +"), Err(ParseError::UnexpectedEnd)));
        assert!(matches!(
            parse_poly("x $ y"),
            Err(ParseError::UnexpectedChar('$', _))
        ));
    }
}
