//! Parser for univariate polynomials in `s` written in factored or
//! expanded form, e.g. `(s+2/3)(s+1)^4(s+4/3)` or `9s^2 + 18s + 8`.

use num_bigint::BigInt;

use super::uni::UniPoly;
use crate::error::{Error, Result};
use crate::rational::Rational;

pub fn parse_unipoly(input: &str) -> Result<UniPoly> {
    let normalized: Vec<char> = input
        .chars()
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .filter(|c| !c.is_whitespace())
        .collect();
    let mut p = Parser { src: &normalized, pos: 0, text: input };
    let out = p.expr()?;
    if p.pos != normalized.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [char],
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {} in `{}`", self.pos, self.text))
    }

    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<UniPoly> {
        let mut acc = self.signed_term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn signed_term(&mut self) -> Result<UniPoly> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.term()?)
            }
            Some('+') => {
                self.pos += 1;
                self.term()
            }
            _ => self.term(),
        }
    }

    fn term(&mut self) -> Result<UniPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c == '(' || c == 's' || c.is_ascii_digit() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<UniPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<UniPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('s') => {
                self.pos += 1;
                Ok(UniPoly::s())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let mut q = Rational::from_integer(n);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d == BigInt::from(0) {
                        return Err(self.error("zero denominator"));
                    }
                    q /= Rational::from_integer(d);
                }
                Ok(UniPoly::constant(q))
            }
            _ => Err(self.error("expected a number, `s`, or `(`")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits: String = self.src[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.error("bad integer"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    #[test]
    fn factored_and_expanded_forms() {
        assert_eq!(parse_unipoly("9s^2+18s+8").unwrap(), UniPoly::from_integers(&[8, 18, 9]));
        assert_eq!(parse_unipoly("(3s+2)(3s+4)").unwrap(), UniPoly::from_integers(&[8, 18, 9]));
        let p = parse_unipoly("(s+2/3)(s+1)^4(s + 4/3)").unwrap();
        assert_eq!(
            p,
            UniPoly::from_roots(&[(frac(-2, 3), 1), (rat(-1), 4), (frac(-4, 3), 1)])
        );
        assert_eq!(parse_unipoly("-s^2 \u{2212} 1").unwrap(), UniPoly::from_integers(&[-1, 0, -1]));
        assert_eq!(parse_unipoly("2*(s-1)").unwrap(), UniPoly::from_integers(&[-2, 2]));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_unipoly("(s+1").is_err());
        assert!(parse_unipoly("x+1").is_err());
        assert!(parse_unipoly("1/0").is_err());
        assert!(parse_unipoly("").is_err());
    }
}
