//! Ideal expressions.
//!
//! ```text
//! ideal := '(' mono (',' mono)* ')' | mono (',' mono)*
//! mono  := term+          terms optionally separated by '*'
//! term  := var exponent?
//! var   := x | y | z      (at most three variables; digits are exponents)
//!        | 'x' digit+     (four or more variables)
//! exponent := '^'? digit+ ('^' is required after 'x' digit+)
//! ```
//! Whitespace is ignored. The literal `1` is the unit monomial.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, LETTERS};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealExpr {
    pub source: String,
    pub n: usize,
    pub generators: Vec<Monomial>,
}

impl IdealExpr {
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVariables);
        }
        let generators = Parser { src: text.as_bytes(), pos: 0, n }.ideal()?;
        Ok(Self { source: text.to_string(), n, generators })
    }

    /// Some generator is the unit monomial.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn warnings(&self) -> Vec<String> {
        if self.is_unit() {
            vec!["a generator collapses to 1, so this is the unit ideal".into()]
        } else {
            Vec::new()
        }
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::minimalize(self.generators.clone())
    }
}

pub fn parse_ideal(text: &str, n: usize) -> Result<MonomialIdeal> {
    IdealExpr::parse(text, n)?.to_ideal()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.pos, message: message.into() })
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

    fn digits(&mut self) -> Result<Option<u32>> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse()
            .map(Some)
            .map_err(|_| Error::Parse { offset: start, message: format!("number `{text}` is too large") })
    }

    fn ideal(&mut self) -> Result<Vec<Monomial>> {
        let bracketed = self.peek() == Some(b'(');
        if bracketed {
            self.pos += 1;
        }
        let mut gens = vec![self.mono()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            gens.push(self.mono()?);
        }
        if bracketed {
            if self.peek() != Some(b')') {
                return self.err("expected `,` or `)`");
            }
            self.pos += 1;
        }
        match self.peek() {
            None => Ok(gens),
            Some(b'^') => {
                self.err("powers of ideals are not supported; list the generators (see `lexbs gen power-ideal`)")
            }
            Some(c) => self.err(format!("unexpected `{}`", c as char)),
        }
    }

    fn mono(&mut self) -> Result<Monomial> {
        let mut exps = vec![0u32; self.n];
        match self.peek() {
            Some(b'(') => {
                return self.err("`(` cannot start a monomial; expand ideal powers and products into generators")
            }
            Some(b'1') => {
                let start = self.pos;
                if self.digits()? == Some(1) {
                    return Monomial::new(exps);
                }
                self.pos = start;
                return self.err("expected a variable");
            }
            None => return self.err("expected a monomial"),
            _ => {}
        }
        let mut terms = 0;
        loop {
            match self.peek() {
                Some(b'*') if terms > 0 => {
                    self.pos += 1;
                }
                Some(b'(') => return self.err("`(` cannot appear inside a monomial; expand ideal powers and products"),
                _ => {}
            }
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => {
                    let (var, needs_caret) = self.var()?;
                    let e = self.exponent(needs_caret)?;
                    exps[var - 1] = exps[var - 1]
                        .checked_add(e)
                        .ok_or_else(|| Error::Parse { offset: self.pos, message: "exponent overflow".into() })?;
                    terms += 1;
                }
                Some(b'(') => return self.err("`(` cannot appear inside a monomial; expand ideal powers and products"),
                _ if terms == 0 => return self.err("expected a variable"),
                _ => break,
            }
        }
        Monomial::new(exps)
    }

    /// Returns the 1-based index and whether a following exponent needs `^`.
    fn var(&mut self) -> Result<(usize, bool)> {
        let start = self.pos;
        let c = self.src[self.pos] as char;
        self.pos += 1;
        if self.n <= LETTERS.len() {
            return match LETTERS[..self.n].iter().position(|&l| l == c) {
                Some(i) => Ok((i + 1, false)),
                None => Err(Error::UnknownVariable { name: c.to_string(), offset: start }),
            };
        }
        if c != 'x' {
            return Err(Error::UnknownVariable { name: c.to_string(), offset: start });
        }
        match self.digits()? {
            Some(i) if (1..=self.n).contains(&(i as usize)) => Ok((i as usize, true)),
            Some(i) => Err(Error::UnknownVariable { name: format!("x{i}"), offset: start }),
            None => {
                self.pos = start;
                self.err(format!("with {} variables write x1 ... x{}", self.n, self.n))
            }
        }
    }

    fn exponent(&mut self, needs_caret: bool) -> Result<u32> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            return match self.digits()? {
                Some(e) => Ok(e),
                None => self.err("expected an exponent after `^`"),
            };
        }
        if needs_caret {
            return Ok(1);
        }
        Ok(self.digits()?.unwrap_or(1))
    }
}
