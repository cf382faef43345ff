//! Text syntax for polynomials.
//!
//! Identifiers are `[A-Za-z][A-Za-z0-9_]*`. A trailing `^+` (or `†`) selects
//! the Moore-Penrose partner, a trailing `*` the adjoint, `adj(...)` the
//! adjoint of a whole expression and `^n` a power. Factors multiply by
//! juxtaposition; an explicit `*` multiplies when it is not glued to the
//! preceding factor or when it is directly followed by `(`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::{Alphabet, Coeff, Monomial, Poly, Term, Var};
use crate::error::{Error, Result};
use crate::ordering::MonomialOrder;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Dagger,
    Adjoint,
    Times,
    Plus,
    Minus,
    Slash,
    Pow(u32),
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out: Vec<(Tok, usize)> = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Num(s.parse().unwrap()), col));
            continue;
        }
        match c {
            '†' => out.push((Tok::Dagger, col)),
            '^' => {
                if chars.get(i + 1) == Some(&'+') {
                    out.push((Tok::Dagger, col));
                    i += 1;
                } else {
                    let start = i + 1;
                    let mut j = start;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == start {
                        return Err(Error::parse(1, col, "expected `^+` or `^<integer>`"));
                    }
                    let s: String = chars[start..j].iter().collect();
                    let n = s
                        .parse()
                        .map_err(|_| Error::parse(1, col, "exponent too large"))?;
                    out.push((Tok::Pow(n), col));
                    i = j - 1;
                }
            }
            '*' => {
                let glued = i > 0 && !chars[i - 1].is_whitespace();
                let after_atom = matches!(
                    out.last(),
                    Some((Tok::Ident(_) | Tok::Dagger | Tok::Adjoint | Tok::RParen, _))
                );
                let before_paren = chars.get(i + 1) == Some(&'(');
                if glued && after_atom && !before_paren {
                    out.push((Tok::Adjoint, col));
                } else {
                    out.push((Tok::Times, col));
                }
            }
            '+' => out.push((Tok::Plus, col)),
            '-' => out.push((Tok::Minus, col)),
            '/' => out.push((Tok::Slash, col)),
            '(' => out.push((Tok::LParen, col)),
            ')' => out.push((Tok::RParen, col)),
            _ => return Err(Error::parse(1, col, format!("unexpected character `{c}`"))),
        }
        i += 1;
    }
    Ok(out)
}

/// Unordered sum of terms used while parsing.
#[derive(Clone, Debug, Default)]
struct Raw(FxHashMap<Monomial, Coeff>);

impl Raw {
    fn constant(c: Coeff) -> Self {
        let mut m = FxHashMap::default();
        if !c.is_zero() {
            m.insert(Monomial::one(), c);
        }
        Raw(m)
    }

    fn add(mut self, other: Raw, sign: i64) -> Raw {
        for (m, c) in other.0 {
            let e = self.0.entry(m).or_insert_with(Coeff::zero);
            if sign < 0 {
                *e -= c;
            } else {
                *e += c;
            }
        }
        self.0.retain(|_, c| !c.is_zero());
        self
    }

    fn mul(&self, other: &Raw) -> Raw {
        let mut out: FxHashMap<Monomial, Coeff> = FxHashMap::default();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &other.0 {
                *out.entry(m1.concat(m2)).or_insert_with(Coeff::zero) += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Raw(out)
    }

    fn adjoint(&self, alphabet: &Alphabet) -> Result<Raw> {
        let mut out = FxHashMap::default();
        for (m, c) in &self.0 {
            out.insert(alphabet.adjoint_word(m)?, c.clone());
        }
        Ok(Raw(out))
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    alphabet: &'a Alphabet,
    end_col: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end_col)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(1, self.col(), msg)
    }

    fn expr(&mut self) -> Result<Raw> {
        let mut sign = 1;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                sign = -1;
                self.pos += 1
            }
            _ => {}
        }
        let mut acc = Raw::default().add(self.product()?, sign);
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(self.product()?, 1);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.add(self.product()?, -1);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::LParen))
    }

    fn product(&mut self) -> Result<Raw> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(&Tok::Times) {
                self.pos += 1;
                acc = acc.mul(&self.factor()?);
            } else if self.starts_factor() {
                acc = acc.mul(&self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Raw> {
        let col = self.col();
        let mut base = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut c = BigRational::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            self.pos += 1;
                            c /= BigRational::from_integer(d);
                        }
                        _ => return Err(self.err("expected a nonzero denominator")),
                    }
                }
                Raw::constant(c)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == "adj" && self.peek() == Some(&Tok::LParen) {
                    self.pos += 1;
                    let inner = self.expr()?;
                    self.expect_rparen()?;
                    inner
                        .adjoint(self.alphabet)
                        .map_err(|e| Error::parse(1, col, e.to_string()))?
                } else {
                    let mut full = name.clone();
                    if self.peek() == Some(&Tok::Dagger) {
                        self.pos += 1;
                        full.push('†');
                    }
                    let v = self
                        .alphabet
                        .get(&full)
                        .ok_or_else(|| Error::parse(1, col, format!("unknown symbol `{full}`")))?;
                    let mut r = Raw::default();
                    r.0.insert(Monomial::letter(v), Coeff::one());
                    r
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect_rparen()?;
                inner
            }
            _ => return Err(self.err("expected a factor")),
        };
        loop {
            match self.peek() {
                Some(Tok::Adjoint) => {
                    let col = self.col();
                    self.pos += 1;
                    base = base
                        .adjoint(self.alphabet)
                        .map_err(|e| Error::parse(1, col, e.to_string()))?;
                }
                Some(Tok::Pow(n)) => {
                    let n = *n;
                    self.pos += 1;
                    let mut acc = Raw::constant(Coeff::one());
                    for _ in 0..n {
                        acc = acc.mul(&base);
                    }
                    base = acc;
                }
                _ => return Ok(base),
            }
        }
    }

    fn expect_rparen(&mut self) -> Result<()> {
        if self.peek() == Some(&Tok::RParen) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err("expected `)`"))
        }
    }
}

fn parse_raw(text: &str, alphabet: &Alphabet) -> Result<Raw> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        alphabet,
        end_col: text.chars().count() + 1,
    };
    let r = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(r)
}

/// Parses a polynomial and normalises it under `ord`.
pub fn parse_poly(text: &str, alphabet: &Alphabet, ord: &MonomialOrder) -> Result<Poly> {
    let raw = parse_raw(text, alphabet)?;
    Ok(Poly::from_terms(
        raw.0.into_iter().map(|(m, c)| Term::new(c, m)).collect(),
        ord,
    ))
}

/// Parses a single word; `1` denotes the empty word.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Monomial> {
    let raw = parse_raw(text, alphabet)?;
    let mut it = raw.0.into_iter();
    match (it.next(), it.next()) {
        (Some((m, c)), None) if c.is_one() => Ok(m),
        _ => Err(Error::parse(1, 1, format!("`{text}` is not a single word"))),
    }
}

pub fn show_monomial(m: &Monomial, alphabet: &Alphabet) -> String {
    if m.is_one() {
        return "1".into();
    }
    let names: Vec<&str> = m
        .letters()
        .iter()
        .map(|&v: &Var| {
            if alphabet.contains(v) {
                alphabet.name(v)
            } else {
                "?"
            }
        })
        .collect();
    names.join(" ")
}

pub fn show_poly(f: &Poly, alphabet: &Alphabet) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, t) in f.terms().iter().enumerate() {
        let neg = t.coeff.is_negative();
        let abs = t.coeff.abs();
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        if t.mono.is_one() {
            s.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                s.push_str(&abs.to_string());
                s.push(' ');
            }
            s.push_str(&show_monomial(&t.mono, alphabet));
        }
    }
    s
}
