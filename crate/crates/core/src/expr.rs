//! A small reader for polynomial expressions written the way they appear in
//! print: implicit multiplication, `^` powers, parentheses, rational
//! literals `a/b`. Identifiers are a single letter with optional trailing
//! digits (`w`, `z2`) or the raw form `x_{0110}`.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

/// A monomial over named variables, sorted by name.
pub(crate) type NamedMonomial = Vec<(String, u32)>;

/// Fully expanded polynomial over named variables.
#[derive(Debug, Clone, Default, PartialEq)]
pub(crate) struct NamedPoly(pub BTreeMap<NamedMonomial, BigRational>);

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigRational),
    Ident(String),
    Caret,
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<Token>, String> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' | '·' => {
                out.push(Token::Star);
                i += 1
            }
            '(' => {
                out.push(Token::LParen);
                i += 1
            }
            ')' => {
                out.push(Token::RParen);
                i += 1
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: BigInt = chars[start..i].iter().collect::<String>().parse().unwrap();
                // `a/b` is a single literal only when a digit follows the slash
                if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    i += 1;
                    let s = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let denom: BigInt = chars[s..i].iter().collect::<String>().parse().unwrap();
                    if denom.is_zero() {
                        return Err("zero denominator".into());
                    }
                    out.push(Token::Num(BigRational::new(numer, denom)));
                } else {
                    out.push(Token::Num(BigRational::from_integer(numer)));
                }
            }
            c if c.is_ascii_alphabetic() => {
                if c == 'x' && chars.get(i + 1) == Some(&'_') {
                    if chars.get(i + 2) != Some(&'{') {
                        return Err(format!("expected `{{` after `x_` at {i}"));
                    }
                    let close = chars[i + 3..]
                        .iter()
                        .position(|&ch| ch == '}')
                        .ok_or_else(|| format!("unterminated `x_{{` at {i}"))?;
                    let bits: String = chars[i + 3..i + 3 + close].iter().collect();
                    if bits.is_empty() || !bits.chars().all(|b| b == '0' || b == '1') {
                        return Err(format!("bad variable bits `{bits}`"));
                    }
                    out.push(Token::Ident(format!("x_{{{bits}}}")));
                    i += 4 + close;
                } else {
                    let start = i;
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    out.push(Token::Ident(chars[start..i].iter().collect()));
                }
            }
            other => return Err(format!("unexpected character `{other}`")),
        }
    }
    Ok(out)
}

impl NamedPoly {
    fn constant(c: BigRational) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(Vec::new(), c);
        }
        NamedPoly(m)
    }

    fn var(name: String) -> Self {
        NamedPoly(BTreeMap::from([(vec![(name, 1)], BigRational::one())]))
    }

    fn add_assign(&mut self, other: &NamedPoly, sign: &BigRational) {
        for (m, c) in &other.0 {
            let e = self.0.entry(m.clone()).or_insert_with(BigRational::zero);
            *e += c * sign;
            if e.is_zero() {
                self.0.remove(m);
            }
        }
    }

    fn mul(&self, other: &NamedPoly) -> NamedPoly {
        let mut out = NamedPoly::default();
        for (ma, ca) in &self.0 {
            for (mb, cb) in &other.0 {
                let mut merged: BTreeMap<String, u32> = ma.iter().cloned().collect();
                for (v, e) in mb {
                    *merged.entry(v.clone()).or_insert(0) += e;
                }
                let key: NamedMonomial = merged.into_iter().collect();
                out.add_assign(&NamedPoly(BTreeMap::from([(key, ca * cb)])), &BigRational::one());
            }
        }
        out
    }

    fn pow(&self, e: u32) -> NamedPoly {
        let mut acc = NamedPoly::constant(BigRational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<NamedPoly, String> {
        let mut acc = NamedPoly::default();
        let mut sign = BigRational::one();
        let mut expect_term = true;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    expect_term = true;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    sign = -sign;
                    expect_term = true;
                }
                Some(Token::RParen) | None => {
                    if expect_term && self.pos > 0 && matches!(self.tokens[self.pos - 1], Token::Plus | Token::Minus) {
                        return Err("dangling sign".into());
                    }
                    return Ok(acc);
                }
                _ => {
                    if !expect_term {
                        return Err(format!("unexpected token {:?}", self.peek()));
                    }
                    let term = self.term()?;
                    acc.add_assign(&term, &sign);
                    sign = BigRational::one();
                    expect_term = false;
                }
            }
        }
    }

    fn term(&mut self) -> Result<NamedPoly, String> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Token::Num(_) | Token::Ident(_) | Token::LParen) => acc = acc.mul(&self.factor()?),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<NamedPoly, String> {
        let base = match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                NamedPoly::constant(n)
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                NamedPoly::var(name)
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err("missing `)`".into());
                }
                self.pos += 1;
                inner
            }
            other => return Err(format!("expected a factor, found {other:?}")),
        };
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.tokens.get(self.pos).cloned() {
                Some(Token::Num(n)) if n.is_integer() && n >= BigRational::zero() => {
                    self.pos += 1;
                    let e: u32 = n.to_integer().try_into().map_err(|_| "exponent too large".to_string())?;
                    return Ok(base.pow(e));
                }
                other => return Err(format!("expected a nonnegative integer exponent, found {other:?}")),
            }
        }
        Ok(base)
    }
}

/// Parse and fully expand an expression.
pub(crate) fn parse(text: &str) -> Result<NamedPoly, String> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err("empty expression".into());
    }
    let mut p = Parser { tokens, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(format!("unexpected trailing input at token {}", p.pos));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeff(p: &NamedPoly, mono: &[(&str, u32)]) -> BigRational {
        let key: NamedMonomial = mono.iter().map(|(n, e)| (n.to_string(), *e)).collect();
        p.0.get(&key).cloned().unwrap_or_else(BigRational::zero)
    }

    #[test]
    fn grouped_products_expand() {
        let p = parse("2wz(72x^5y^5+90x^2y^8)").unwrap();
        assert_eq!(p.0.len(), 2);
        assert_eq!(coeff(&p, &[("w", 1), ("x", 5), ("y", 5), ("z", 1)]), BigRational::from_integer(144.into()));
    }

    #[test]
    fn signs_and_rationals() {
        let p = parse("-3/2x^2 - (x^2 - y)").unwrap();
        assert_eq!(coeff(&p, &[("x", 2)]), BigRational::new((-5).into(), 2.into()));
        assert_eq!(coeff(&p, &[("y", 1)]), BigRational::one());
        assert!(parse("0").unwrap().0.is_empty());
    }

    #[test]
    fn raw_identifiers() {
        let p = parse("x_{00}^3x_{01}").unwrap();
        assert_eq!(coeff(&p, &[("x_{00}", 3), ("x_{01}", 1)]), BigRational::one());
    }

    #[test]
    fn errors() {
        assert!(parse("").is_err());
        assert!(parse("x^").is_err());
        assert!(parse("(x+y").is_err());
        assert!(parse("x+").is_err());
        assert!(parse("x^-1").is_err());
        assert!(parse("x $ y").is_err());
    }
}
