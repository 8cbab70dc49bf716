//! Reader for the polynomial text grammar.
//!
//! ```text
//! poly   := ["+"|"-"] term (("+"|"-") term)*
//! term   := [coef "*"?] factor ("*" factor)* | coef
//! coef   := nat ("/" nat)?
//! factor := var ("^" nat)? | "(" poly ")" ("^" nat)? | coef
//! var    := letter (letter|digit|"_")* ("@" nat)?
//! ```
//!
//! Whitespace between tokens is ignored. The printer in `Display for
//! Polynomial` only emits text accepted here.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use super::{Polynomial, RingContext};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Nat(BigUint),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i].parse::<BigUint>().unwrap();
                out.push((start, Tok::Nat(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'@' {
                    let at = i;
                    i += 1;
                    let digits = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == digits {
                        return Err(syntax(at, "expected a jet level after `@`"));
                    }
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(syntax(start, alloc::format!("unexpected character `{ch}`")));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a Arc<RingContext>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn nat(&mut self) -> Result<BigUint> {
        match self.peek() {
            Some(Tok::Nat(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(syntax(self.offset(), "expected a natural number")),
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        let at = self.offset();
        let n = self.nat()?;
        n.to_u32().ok_or_else(|| syntax(at, "exponent too large"))
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if self.eat(&Tok::Minus) {
            negate = true;
        } else {
            self.eat(&Tok::Plus);
        }
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Nat(_) | Tok::Ident(_) | Tok::LParen))
    }

    fn term(&mut self) -> Result<Polynomial> {
        let leading_coef = matches!(self.peek(), Some(Tok::Nat(_)));
        let mut acc = self.factor()?;
        if leading_coef && !matches!(self.peek(), Some(Tok::Star)) && self.starts_factor() {
            // `2x` style juxtaposition after a numeric coefficient
            acc = &acc * &self.factor()?;
        }
        while self.eat(&Tok::Star) {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let at = self.offset();
        let base = match self.peek().cloned() {
            Some(Tok::Nat(n)) => {
                self.pos += 1;
                let field = self.ring.field();
                if self.eat(&Tok::Slash) {
                    let den = self.nat()?;
                    let c = field
                        .fraction(&BigInt::from(n), &BigInt::from(den))
                        .ok_or(Error::ZeroDenominator)?;
                    return Ok(Polynomial::constant(self.ring, c));
                }
                Polynomial::constant(self.ring, field.from_biguint(&n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let idx = self
                    .ring
                    .index_of(&name)
                    .ok_or(Error::UnknownVariable(name))?;
                Polynomial::variable(self.ring, idx)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let p = self.poly()?;
                if !self.eat(&Tok::RParen) {
                    return Err(syntax(self.offset(), "expected `)`"));
                }
                p
            }
            _ => return Err(syntax(at, "expected a variable, number or `(`")),
        };
        if self.eat(&Tok::Caret) {
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }
}

/// Parses `text` as a polynomial over `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<RingContext>) -> Result<Polynomial> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ring,
    };
    let poly = p.poly()?;
    if p.pos != p.toks.len() {
        return Err(syntax(p.offset(), "unexpected trailing input"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::Monomial;
    use alloc::vec;

    fn ring() -> Arc<RingContext> {
        RingContext::new(FieldSpec::Rationals, ["x", "y"]).unwrap()
    }

    #[test]
    fn reads_terms() {
        let r = ring();
        let p = parse_polynomial("x^2 - y", &r).unwrap();
        let q = r.field();
        assert_eq!(
            p.terms(),
            &[
                (Monomial::new(vec![2, 0]), q.from_i64(1)),
                (Monomial::new(vec![0, 1]), q.from_i64(-1))
            ]
        );
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        assert_eq!(
            parse_polynomial("2*x*y + x*y", &r).unwrap().to_string(),
            "3*x*y"
        );
    }

    #[test]
    fn juxtaposed_coefficients_and_fractions() {
        let r = ring();
        assert_eq!(
            parse_polynomial("2x y", &r).map(|p| p.to_string()).ok(),
            None
        );
        assert_eq!(parse_polynomial("2x*y", &r).unwrap().to_string(), "2*x*y");
        assert_eq!(
            parse_polynomial("-1/2*x + (x+y)^2", &r)
                .unwrap()
                .to_string(),
            "x^2 + 2*x*y + y^2 - 1/2*x"
        );
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring();
        assert_eq!(
            parse_polynomial("x + z", &r),
            Err(Error::UnknownVariable("z".into()))
        );
        assert!(matches!(
            parse_polynomial("x + * y", &r),
            Err(Error::Syntax { offset: 4, .. })
        ));
        assert!(matches!(
            parse_polynomial("x $", &r),
            Err(Error::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse_polynomial("(x", &r),
            Err(Error::Syntax { offset: 2, .. })
        ));
        assert_eq!(parse_polynomial("x/0", &r).ok(), None);
    }

    #[test]
    fn jet_variables() {
        let r = RingContext::new(FieldSpec::Rationals, ["x@0", "x@1"]).unwrap();
        let p = parse_polynomial("2*x@0*x@1 + x@1^2", &r).unwrap();
        assert_eq!(p.to_string(), "2*x@0*x@1 + x@1^2");
    }
}
