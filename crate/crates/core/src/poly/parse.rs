//! Text grammar for scalars and univariate polynomials.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/")? unary)*      juxtaposition multiplies
//! unary  := "-" unary | power
//! power  := atom ("^" ["-"] integer)?
//! atom   := integer | "i" | "zeta(" integer ")" | variable | "(" expr ")"
//! ```
//!
//! A variable is any single ASCII letter other than `i`; one expression may
//! use only one variable. Division is only by nonzero constants, and negative
//! exponents only apply to constants.

use num_bigint::BigInt;

use super::UniPoly;
use crate::arith::{CycloNum, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        match c {
            ' ' | '\t' | '\n' => {}
            '(' => out.push(Token::LParen),
            ')' => out.push(Token::RParen),
            '+' => out.push(Token::Plus),
            '-' | '−' => out.push(Token::Minus),
            '*' => out.push(Token::Star),
            '/' => out.push(Token::Slash),
            '^' => out.push(Token::Caret),
            '0'..='9' => {
                let start = k;
                while k + 1 < chars.len() && chars[k + 1].is_ascii_digit() {
                    k += 1;
                }
                let digits: String = chars[start..=k].iter().collect();
                out.push(Token::Num(digits.parse().expect("digits")));
            }
            c if c.is_ascii_alphabetic() => {
                let start = k;
                while k + 1 < chars.len() && chars[k + 1].is_ascii_alphabetic() {
                    k += 1;
                }
                out.push(Token::Ident(chars[start..=k].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
        k += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    var: Option<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        match self.next() {
            Some(Token::Num(n)) => Ok(n),
            got => Err(Error::Parse(format!("expected an integer, found {got:?}"))),
        }
    }

    fn small_integer(&mut self) -> Result<i64> {
        let n = self.integer()?;
        i64::try_from(&n).map_err(|_| Error::Parse(format!("integer {n} is too large here")))
    }

    fn expr(&mut self) -> Result<UniPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<UniPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let den = self.unary()?;
                    if den.degree().unwrap_or(0) > 0 {
                        return Err(Error::Parse("division by a nonconstant polynomial".into()));
                    }
                    let inv = den.coeff(0).inv().map_err(|_| Error::Parse("division by zero".into()))?;
                    acc = acc.scale(&inv);
                }
                Some(Token::Ident(_)) | Some(Token::LParen) => {
                    acc = &acc * &self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<UniPoly> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<UniPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let e = self.small_integer()?;
        if negative {
            if base.degree().unwrap_or(0) > 0 {
                return Err(Error::Parse("negative power of a nonconstant polynomial".into()));
            }
            let v = base.coeff(0).pow(-e).map_err(|_| Error::Parse("division by zero".into()))?;
            return Ok(UniPoly::constant(v));
        }
        if base.degree().unwrap_or(0) == 0 {
            let v = base.coeff(0).pow(e)?;
            return Ok(UniPoly::constant(v));
        }
        let e = u32::try_from(e).ok().filter(|&e| e <= 4096).ok_or_else(|| Error::Parse("exponent too large".into()))?;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<UniPoly> {
        match self.next() {
            Some(Token::Num(n)) => Ok(UniPoly::constant(CycloNum::from_rational(Rational::from_integer(n)))),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Some(Token::Ident(name)) => match name.as_str() {
                "i" => Ok(UniPoly::constant(CycloNum::i())),
                "zeta" => {
                    self.expect(Token::LParen)?;
                    let n = self.small_integer()?;
                    self.expect(Token::RParen)?;
                    let n = u32::try_from(n).ok().filter(|&n| n > 0).ok_or_else(|| Error::Parse(format!("bad root-of-unity order {n}")))?;
                    CycloNum::zeta(n).map(UniPoly::constant)
                }
                v if v.len() == 1 => {
                    match &self.var {
                        Some(prev) if prev != v => {
                            return Err(Error::Parse(format!("two variables {prev} and {v} in one polynomial")))
                        }
                        _ => self.var = Some(v.to_string()),
                    }
                    Ok(UniPoly::var())
                }
                other => Err(Error::Parse(format!("unknown name {other:?}"))),
            },
            got => Err(Error::Parse(format!("unexpected token {got:?}"))),
        }
    }
}

fn run(s: &str) -> Result<(UniPoly, Option<String>)> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser { tokens, pos: 0, var: None };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("trailing input at token {}", parser.pos)));
    }
    Ok((value, parser.var))
}

/// Parse a univariate polynomial such as `"z^4 - 2*z^2 + 1"`.
pub fn parse_poly(s: &str) -> Result<UniPoly> {
    Ok(run(s)?.0)
}

/// Parse a univariate polynomial and report the variable name it used.
pub fn parse_poly_with_var(s: &str) -> Result<(UniPoly, Option<String>)> {
    run(s)
}

/// Parse a scalar such as `"3/7"`, `"1 - i"` or `"zeta(5)^2"`.
pub fn parse_scalar(s: &str) -> Result<CycloNum> {
    let (value, var) = run(s)?;
    if let Some(v) = var {
        return Err(Error::Parse(format!("scalar expected, found variable {v}")));
    }
    Ok(value.coeff(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("3/7").unwrap(), CycloNum::from_ratio(3, 7));
        assert_eq!(parse_scalar("-i").unwrap(), -CycloNum::i());
        assert_eq!(parse_scalar("zeta(3)^3").unwrap(), CycloNum::one());
        assert_eq!(parse_scalar("zeta(8)^-1").unwrap(), CycloNum::zeta_pow(8, 7).unwrap());
        assert_eq!(parse_scalar("(1+i)/(1-i)").unwrap(), CycloNum::i());
    }

    #[test]
    fn polynomials() {
        assert_eq!(parse_poly("z^4 - 2*z^2 + 1").unwrap(), UniPoly::from_ints(&[1, 0, -2, 0, 1]));
        assert_eq!(parse_poly("3z^2+4z").unwrap(), UniPoly::from_ints(&[0, 4, 3]));
        assert_eq!(parse_poly("(t+1)^2").unwrap(), UniPoly::from_ints(&[1, 2, 1]));
        assert_eq!(parse_poly("z^2/2").unwrap(), UniPoly::from_rationals(&[crate::arith::int(0), crate::arith::int(0), crate::arith::rat(1, 2)]));
    }

    #[test]
    fn errors() {
        for bad in ["", "z^", "x*y", "1/z", "z^-1", "foo", "2 +", "(z", "1/0", "zeta(0)"] {
            assert!(matches!(parse_poly(bad), Err(Error::Parse(_))), "{bad} should fail");
        }
        assert!(parse_scalar("z").is_err());
    }

    #[test]
    fn display_reparses() {
        let p = parse_poly("-i*z^3 + (1+i)*z - 1/2 + zeta(5)^2*z^2").unwrap();
        assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }
}
