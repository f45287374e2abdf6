//! Parser for the canonical polynomial text form produced by `Display`.
//!
//! Grammar, whitespace-tolerant:
//!   poly   := ['-'] term (('+' | '-') term)*
//!   term   := coeff | coeff ['*'] monos | monos
//!   coeff  := int ['/' int]
//!   monos  := var ('*' var)*   where var := 'x' index ['^' exp]
//!
//! `2x1` is accepted as a synonym for `2*x1`.

use num_traits::{One, Zero};

use super::{Integer, Monomial, Polynomial, Rational};
use crate::error::{Error, Result};

pub fn parse_polynomial(input: &str, nvars: usize) -> Result<Polynomial> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
        nvars,
    };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!(
            "trailing input at position {}: `{}`",
            p.pos, input
        )));
    }
    Ok(poly)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.nvars);
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            let (m, c) = self.term()?;
            let signed = if sign < 0 { -c } else { c };
            out.add_term(m, signed);
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        self.skip_ws();
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; self.nvars];
        let mut saw_anything = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.integer()?;
            let den = if self.eat('/') {
                let d = self.integer()?;
                if d.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                d
            } else {
                Integer::one()
            };
            coeff = Rational::new(num, den);
            saw_anything = true;
            // optional '*' between the coefficient and the first variable
            let save = self.pos;
            if !self.eat('*') {
                self.pos = save;
            }
        }
        self.skip_ws();
        while self.peek() == Some('x') {
            self.pos += 1;
            let idx = self.index()?;
            if idx == 0 || idx > self.nvars {
                return Err(Error::Parse(format!(
                    "variable x{} out of range (nvars = {})",
                    idx, self.nvars
                )));
            }
            let exp = if self.eat('^') { self.index()? } else { 1 };
            exps[idx - 1] += exp as u32;
            saw_anything = true;
            let save = self.pos;
            if !self.eat('*') {
                self.pos = save;
                break;
            }
            self.skip_ws();
        }
        if !saw_anything {
            return Err(Error::Parse(format!(
                "expected a term at position {}",
                self.pos
            )));
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn integer(&mut self) -> Result<Integer> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!(
                "expected an integer at position {}",
                start
            )));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<Integer>()
            .map_err(|e| Error::Parse(format!("bad integer `{}`: {}", s, e)))
    }

    fn index(&mut self) -> Result<usize> {
        let n = self.integer()?;
        u32::try_from(n.clone())
            .map(|v| v as usize)
            .map_err(|_| Error::Parse(format!("index too large: {}", n)))
    }
}
