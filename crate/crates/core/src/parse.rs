//! Parser for Laurent polynomial expressions.
//!
//! ```text
//! expr     := sign? term (('+' | '-') term)*
//! term     := rational ('*'? atom)? | atom
//! atom     := 't' ('^' integer)?
//! rational := digits ('/' digits)?
//! integer  := ('+' | '-')? digits
//! ```
//!
//! Whitespace between tokens is ignored. Every string produced by the
//! `Display` impl of [`LaurentPoly`] parses back to the same polynomial.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{LaurentPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty expression")]
    Empty,
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: &'static str, found: String },
    #[error("division is not allowed in an exponent")]
    DivisionInExponent,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("exponent out of range")]
    ExponentOverflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

/// One signed term `coeff · t^exp` as written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub negative: bool,
    pub coeff: Option<Rational>,
    pub exp: Option<i64>,
}

/// Parse tree of an expression: the sequence of signed terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentExpr {
    pub terms: Vec<Term>,
}

impl LaurentExpr {
    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|term| {
            let c = term.coeff.clone().unwrap_or_else(Rational::one);
            (term.exp.unwrap_or(0), if term.negative { -c } else { c })
        }))
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error(&mut self, kind: ParseErrorKind) -> ParseError {
        self.skip_ws();
        ParseError {
            offset: self.pos,
            kind,
        }
    }

    fn unexpected(&mut self, expected: &'static str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("`{c}`"),
            None => "end of input".to_owned(),
        };
        self.error(ParseErrorKind::Unexpected { expected, found })
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(rest[..len].parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<Option<Rational>, ParseError> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        if !self.eat('/') {
            return Ok(Some(Rational::from_integer(num)));
        }
        let den = self.digits().ok_or_else(|| self.unexpected("denominator"))?;
        if den.is_zero() {
            return Err(self.error(ParseErrorKind::ZeroDenominator));
        }
        Ok(Some(Rational::new(num, den)))
    }

    fn atom(&mut self) -> Result<Option<i64>, ParseError> {
        if !self.eat('t') {
            return Ok(None);
        }
        if !self.eat('^') {
            return Ok(Some(1));
        }
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let start = self.pos;
        let mag = self.digits().ok_or_else(|| self.unexpected("integer exponent"))?;
        if self.peek() == Some('/') {
            return Err(self.error(ParseErrorKind::DivisionInExponent));
        }
        let exp = if negative { -mag } else { mag };
        i64::try_from(exp).map(Some).map_err(|_| ParseError {
            offset: start,
            kind: ParseErrorKind::ExponentOverflow,
        })
    }

    fn term(&mut self, negative: bool) -> Result<Term, ParseError> {
        let coeff = self.rational()?;
        let exp = match coeff {
            Some(_) => {
                let star = self.eat('*');
                match self.atom()? {
                    Some(e) => Some(e),
                    None if star => return Err(self.unexpected("`t`")),
                    None => None,
                }
            }
            None => Some(self.atom()?.ok_or_else(|| self.unexpected("number or `t`"))?),
        };
        Ok(Term { negative, coeff, exp })
    }
}

pub fn parse_expr(s: &str) -> Result<LaurentExpr, ParseError> {
    let mut cur = Cursor { src: s, pos: 0 };
    if cur.peek().is_none() {
        return Err(cur.error(ParseErrorKind::Empty));
    }
    let mut negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    let mut terms = Vec::new();
    loop {
        terms.push(cur.term(negative)?);
        negative = match cur.peek() {
            None => break,
            Some('+') => false,
            Some('-') => true,
            Some(_) => return Err(cur.unexpected("`+`, `-` or end of input")),
        };
        cur.bump();
    }
    Ok(LaurentExpr { terms })
}

/// Parses an expression such as `t + t^-1 - 2` or `3/2*t^2 - t^-3`.
pub fn parse_laurent(s: &str) -> Result<LaurentPoly, ParseError> {
    parse_expr(s).map(|e| e.to_poly())
}

impl FromStr for LaurentPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_laurent(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(parse_laurent("t + t^-1 - 2").unwrap(), LaurentPoly::whitehead_bead());
        assert!(parse_laurent("0").unwrap().is_zero());
        let p = parse_laurent("3/2*t^2 - t^-3").unwrap();
        assert_eq!(p, LaurentPoly::from_terms([(2, rat(3, 2)), (-3, rat(-1, 1))]));
        assert_eq!(parse_laurent(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn variants() {
        assert_eq!(parse_laurent("2t").unwrap(), LaurentPoly::from_int_terms(&[(1, 2)]));
        assert_eq!(parse_laurent(" - t ^ - 1 + 1").unwrap(), LaurentPoly::from_int_terms(&[(-1, -1), (0, 1)]));
        assert_eq!(parse_laurent("+t^+2").unwrap(), LaurentPoly::from_int_terms(&[(2, 1)]));
        assert_eq!(parse_laurent("t - t").unwrap(), LaurentPoly::zero());
        assert_eq!(parse_laurent("4/6").unwrap(), LaurentPoly::constant(rat(2, 3)));
    }

    #[test]
    fn errors_carry_offsets() {
        let err = |s: &str| parse_laurent(s).unwrap_err();
        assert_eq!(err("").kind, ParseErrorKind::Empty);
        assert_eq!(err("   ").kind, ParseErrorKind::Empty);
        let e = err("t^1/2");
        assert_eq!((e.offset, e.kind), (3, ParseErrorKind::DivisionInExponent));
        let e = err("t + x");
        assert_eq!(e.offset, 4);
        assert!(matches!(e.kind, ParseErrorKind::Unexpected { .. }));
        assert_eq!(err("1/0").kind, ParseErrorKind::ZeroDenominator);
        assert_eq!(err("2*").offset, 2);
        assert_eq!(err("t^").offset, 2);
        assert_eq!(err("t +").offset, 3);
        assert_eq!(err("t t").offset, 2);
        assert_eq!(err("t^99999999999999999999").kind, ParseErrorKind::ExponentOverflow);
        assert_eq!(err("t^1/2").to_string(), "division is not allowed in an exponent at byte 3");
    }

    proptest! {
        #[test]
        fn render_round_trip(terms in prop::collection::vec((-6i64..=6, -20i64..=20, 1i64..=6), 0..8)) {
            let p = LaurentPoly::from_terms(terms.iter().map(|&(e, n, d)| (e, rat(n, d))));
            prop_assert_eq!(parse_laurent(&p.to_string()).unwrap(), p);
        }
    }
}
