//! Recursive-descent parser for the ASCII polynomial grammar:
//!
//! ```text
//! poly   := [sign] term (('+' | '-') term)*
//! term   := coeff | coeff '*' mono | mono
//! mono   := factor ('*' factor)*
//! factor := ident ('^' posint)?
//! coeff  := integer | integer '/' posint
//! ```
//!
//! Whitespace is insignificant. Identifiers must belong to the supplied
//! generator set.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{GeneratorSet, NcPoly, Word};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character '{0}'")]
    UnexpectedChar(char),
    #[error("unexpected end of input, expected {0}")]
    UnexpectedEnd(&'static str),
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("exponent must be a positive integer")]
    NonPositiveExponent,
    #[error("denominator must be a positive integer")]
    BadDenominator,
    #[error("number too large")]
    Overflow,
}

const MAX_EXPONENT: usize = 1 << 24;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    gens: &'a GeneratorSet,
}

impl<'a> Parser<'a> {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { position: self.pos, kind }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self, what: &'static str) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.src.get(self.pos) {
                None => self.err(ParseErrorKind::UnexpectedEnd(what)),
                Some(_) => self.err(ParseErrorKind::Expected(what)),
            });
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let num: BigInt = self.digits("integer")?.parse().expect("digits parse as integer");
        if self.eat(b'/') {
            let at = self.pos;
            let den: BigInt = self.digits("denominator")?.parse().expect("digits parse as integer");
            if den.is_zero() {
                return Err(ParseError { position: at, kind: ParseErrorKind::BadDenominator });
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn identifier(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.src.get(self.pos) {
                None => self.err(ParseErrorKind::UnexpectedEnd("generator")),
                Some(_) => self.err(ParseErrorKind::Expected("generator")),
            });
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        self.gens
            .index_of(name)
            .ok_or(ParseError { position: start, kind: ParseErrorKind::UnknownGenerator(name.to_string()) })
    }

    fn exponent(&mut self) -> Result<usize, ParseError> {
        let at = {
            self.skip_ws();
            self.pos
        };
        if self.peek() == Some(b'-') {
            return Err(ParseError { position: at, kind: ParseErrorKind::NonPositiveExponent });
        }
        let text = self.digits("exponent")?;
        let e: usize = text.parse().map_err(|_| ParseError { position: at, kind: ParseErrorKind::Overflow })?;
        if e > MAX_EXPONENT {
            return Err(ParseError { position: at, kind: ParseErrorKind::Overflow });
        }
        if e == 0 {
            return Err(ParseError { position: at, kind: ParseErrorKind::NonPositiveExponent });
        }
        Ok(e)
    }

    fn monomial(&mut self) -> Result<Word, ParseError> {
        let mut letters = Vec::new();
        loop {
            let g = self.identifier()?;
            let e = if self.eat(b'^') { self.exponent()? } else { 1 };
            letters.extend(std::iter::repeat_n(g as u8, e));
            if !self.eat(b'*') {
                return Ok(Word::from_letters(letters));
            }
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.err(ParseErrorKind::Expected("generator")));
            }
        }
    }

    fn term(&mut self) -> Result<(Word, Rational), ParseError> {
        match self.peek() {
            None => Err(self.err(ParseErrorKind::UnexpectedEnd("term"))),
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.coefficient()?;
                if self.eat(b'*') {
                    Ok((self.monomial()?, coeff))
                } else {
                    Ok((Word::empty(), coeff))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => Ok((self.monomial()?, Rational::one())),
            Some(c) => Err(self.err(ParseErrorKind::UnexpectedChar(c as char))),
        }
    }

    fn poly(&mut self) -> Result<NcPoly, ParseError> {
        let mut terms = Vec::new();
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (w, c) = self.term()?;
            terms.push((w, if negative { -c } else { c }));
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(c) => return Err(self.err(ParseErrorKind::UnexpectedChar(c as char))),
            }
            self.pos += 1;
        }
        Ok(NcPoly::from_terms(self.gens, terms))
    }
}

/// Parses `text` over `gens` into canonical form.
pub fn parse_poly(text: &str, gens: &GeneratorSet) -> Result<NcPoly, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, gens };
    if let Some((i, c)) = text.char_indices().find(|(_, c)| !c.is_ascii()) {
        return Err(ParseError { position: i, kind: ParseErrorKind::UnexpectedChar(c) });
    }
    p.poly()
}

impl std::str::FromStr for NcPoly {
    type Err = ParseError;

    /// Parses over the standard two-generator set `x, y`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s, &GeneratorSet::standard(2))
    }
}
