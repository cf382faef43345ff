//! Words, terms and polynomials of the free algebra over the rationals.
//!
//! Letters are interned in an [`Alphabet`]; a [`Monomial`] is a word of letter
//! indices and a [`Poly`] is a list of terms kept strictly descending under a
//! [`MonomialOrder`]. Polynomials do not carry their order: every operation
//! that has to compare monomials takes the order explicitly, and [`Ring`]
//! bundles an alphabet with an order for the common case.

mod syntax;

pub use syntax::{parse_poly, parse_word, show_monomial, show_poly};

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::ordering::MonomialOrder;

/// Exact rational coefficient.
pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Index of a letter in an [`Alphabet`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var(pub u16);

impl Var {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarSymbol {
    pub name: String,
    pub is_adjoint: bool,
    /// `None` for letters without an adjoint (tags), `Some(self)` for
    /// self-adjoint letters.
    pub partner: Option<Var>,
}

/// Interned letter table. Immutable once shared; extensions produce a new
/// table whose prefix coincides with the old one, so polynomials embed
/// without renumbering.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<VarSymbol>,
    by_name: FxHashMap<String, Var>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    fn push(&mut self, name: &str, is_adjoint: bool, partner: Option<Var>) -> Result<Var> {
        if self.by_name.contains_key(name) {
            return Err(Error::Input(format!("symbol `{name}` declared twice")));
        }
        if self.symbols.len() >= u16::MAX as usize {
            return Err(Error::Input("alphabet too large".into()));
        }
        let v = Var(self.symbols.len() as u16);
        self.symbols.push(VarSymbol {
            name: name.to_string(),
            is_adjoint,
            partner,
        });
        self.by_name.insert(name.to_string(), v);
        Ok(v)
    }

    /// A letter without adjoint partner.
    pub fn add_plain(&mut self, name: &str) -> Result<Var> {
        self.push(name, false, None)
    }

    /// A letter that is its own adjoint.
    pub fn add_self_adjoint(&mut self, name: &str) -> Result<Var> {
        let v = self.push(name, false, None)?;
        self.symbols[v.idx()].partner = Some(v);
        Ok(v)
    }

    /// A letter `name` together with its adjoint `adj_name`.
    pub fn add_pair(&mut self, name: &str, adj_name: &str) -> Result<(Var, Var)> {
        if name == adj_name {
            return Err(Error::Input(format!(
                "adjoint of `{name}` must be a distinct symbol"
            )));
        }
        let v = self.push(name, false, None)?;
        let w = self.push(adj_name, true, Some(v))?;
        self.symbols[v.idx()].partner = Some(w);
        Ok((v, w))
    }

    pub fn get(&self, name: &str) -> Option<Var> {
        self.by_name.get(name).copied()
    }

    pub fn symbol(&self, v: Var) -> &VarSymbol {
        &self.symbols[v.idx()]
    }

    pub fn name(&self, v: Var) -> &str {
        &self.symbols[v.idx()].name
    }

    pub fn partner(&self, v: Var) -> Option<Var> {
        self.symbols.get(v.idx()).and_then(|s| s.partner)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.symbols.len()).map(|i| Var(i as u16))
    }

    pub fn contains(&self, v: Var) -> bool {
        v.idx() < self.symbols.len()
    }

    /// A name not yet in the table, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if !self.by_name.contains_key(base) {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}_{i}"))
            .find(|n| !self.by_name.contains_key(n))
            .unwrap()
    }

    pub fn check_word(&self, m: &Monomial) -> Result<()> {
        match m.letters().iter().find(|v| !self.contains(**v)) {
            Some(v) => Err(Error::ForeignVariable(v.idx())),
            None => Ok(()),
        }
    }

    pub fn check_poly(&self, f: &Poly) -> Result<()> {
        f.terms().iter().try_for_each(|t| self.check_word(&t.mono))
    }

    /// Adjoint of a word: reversed, every letter replaced by its partner.
    pub fn adjoint_word(&self, m: &Monomial) -> Result<Monomial> {
        m.letters()
            .iter()
            .rev()
            .map(|&v| {
                self.partner(v)
                    .ok_or_else(|| match self.symbols.get(v.idx()) {
                        Some(s) => Error::NoAdjoint(s.name.clone()),
                        None => Error::ForeignVariable(v.idx()),
                    })
            })
            .collect()
    }
}

/// A word over the alphabet; the empty word is the unit monomial.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(SmallVec<[Var; 8]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn letter(v: Var) -> Self {
        let mut w = SmallVec::new();
        w.push(v);
        Monomial(w)
    }

    pub fn from_slice(vs: &[Var]) -> Self {
        Monomial(SmallVec::from_slice(vs))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn letters(&self) -> &[Var] {
        &self.0
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut w = SmallVec::with_capacity(self.len() + other.len());
        w.extend_from_slice(&self.0);
        w.extend_from_slice(&other.0);
        Monomial(w)
    }

    /// `a · self · b`
    pub fn sandwich(&self, a: &Monomial, b: &Monomial) -> Monomial {
        let mut w = SmallVec::with_capacity(a.len() + self.len() + b.len());
        w.extend_from_slice(&a.0);
        w.extend_from_slice(&self.0);
        w.extend_from_slice(&b.0);
        Monomial(w)
    }

    pub fn subword(&self, start: usize, end: usize) -> Monomial {
        Monomial::from_slice(&self.0[start..end])
    }

    pub fn reversed(&self) -> Monomial {
        Monomial(self.0.iter().rev().copied().collect())
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.0.contains(&v)
    }

    /// All `(a, b)` with `target = a · self · b`, ordered by `|a|`.
    pub fn find_divisions(&self, target: &Monomial) -> Vec<(Monomial, Monomial)> {
        let (m, t) = (self.letters(), target.letters());
        if m.len() > t.len() {
            return Vec::new();
        }
        (0..=t.len() - m.len())
            .filter(|&i| &t[i..i + m.len()] == m)
            .map(|i| (target.subword(0, i), target.subword(i + m.len(), t.len())))
            .collect()
    }

    /// Position of the leftmost occurrence of `self` in `target`.
    pub fn divides_at(&self, target: &Monomial) -> Option<usize> {
        let (m, t) = (self.letters(), target.letters());
        if m.len() > t.len() {
            return None;
        }
        (0..=t.len() - m.len()).find(|&i| &t[i..i + m.len()] == m)
    }

    /// `b` with `target = self · b`, if `self` is a prefix of `target`.
    pub fn right_cofactor(&self, target: &Monomial) -> Option<Monomial> {
        target
            .0
            .starts_with(&self.0)
            .then(|| target.subword(self.len(), target.len()))
    }
}

impl FromIterator<Var> for Monomial {
    fn from_iter<I: IntoIterator<Item = Var>>(iter: I) -> Self {
        Monomial(iter.into_iter().collect())
    }
}

/// Concatenation of two words.
pub fn mono_concat(a: &Monomial, b: &Monomial) -> Monomial {
    a.concat(b)
}

/// All factorisations `target = a · m · b`.
pub fn find_divisions(m: &Monomial, target: &Monomial) -> Vec<(Monomial, Monomial)> {
    m.find_divisions(target)
}

/// `Some(b)` with `target = m · b`.
pub fn is_right_multiple(target: &Monomial, m: &Monomial) -> Option<Monomial> {
    m.right_cofactor(target)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: Coeff, mono: Monomial) -> Self {
        Term { coeff, mono }
    }
}

/// A polynomial as a strictly descending list of nonzero terms.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: Vec<Term>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: Coeff) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn term(c: Coeff, m: Monomial) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![Term::new(c, m)],
            }
        }
    }

    pub fn mono(m: Monomial) -> Self {
        Self::term(Coeff::one(), m)
    }

    pub fn var(v: Var) -> Self {
        Self::mono(Monomial::letter(v))
    }

    /// Sorts, merges duplicate monomials and drops zero coefficients.
    pub fn from_terms(mut terms: Vec<Term>, ord: &MonomialOrder) -> Self {
        terms.sort_by(|a, b| ord.compare(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff += t.coeff,
                _ => {
                    if out.last().is_some_and(|l| l.coeff.is_zero()) {
                        out.pop();
                    }
                    out.push(t)
                }
            }
        }
        if out.last().is_some_and(|l| l.coeff.is_zero()) {
            out.pop();
        }
        Poly { terms: out }
    }

    /// Wraps terms that are already strictly descending and nonzero.
    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        Poly { terms }
    }

    /// Re-sorts under another order.
    pub fn reorder(&self, ord: &MonomialOrder) -> Self {
        Poly::from_terms(self.terms.clone(), ord)
    }

    pub fn is_normalized(&self, ord: &MonomialOrder) -> bool {
        self.terms.iter().all(|t| !t.coeff.is_zero())
            && self
                .terms
                .windows(2)
                .all(|w| ord.compare(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn lc(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn tail(&self) -> Poly {
        Poly {
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.mono)
    }

    /// Maximal word length in the support (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.terms.iter().map(|t| t.mono.len()).max().unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.terms
            .iter()
            .flat_map(|t| t.mono.letters().iter().copied())
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|t| t.mono.contains_var(v))
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(-t.coeff.clone(), t.mono.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.mono.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.lc() {
            Some(c) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    /// `a · self · b`; order is preserved, so no re-sorting happens.
    pub fn sandwich(&self, a: &Monomial, b: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(t.coeff.clone(), t.mono.sandwich(a, b)))
                .collect(),
        }
    }

    pub fn mul_mono_left(&self, a: &Monomial) -> Poly {
        self.sandwich(a, &Monomial::one())
    }

    pub fn mul_mono_right(&self, b: &Monomial) -> Poly {
        self.sandwich(&Monomial::one(), b)
    }

    pub fn add(&self, other: &Poly, ord: &MonomialOrder) -> Poly {
        Poly {
            terms: merge_scaled(&self.terms, &other.terms, &Coeff::one(), ord),
        }
    }

    pub fn sub(&self, other: &Poly, ord: &MonomialOrder) -> Poly {
        Poly {
            terms: merge_scaled(&self.terms, &other.terms, &-Coeff::one(), ord),
        }
    }

    /// `self + c · other`
    pub fn add_scaled(&self, other: &Poly, c: &Coeff, ord: &MonomialOrder) -> Poly {
        Poly {
            terms: merge_scaled(&self.terms, &other.terms, c, ord),
        }
    }

    pub fn mul(&self, other: &Poly, ord: &MonomialOrder) -> Poly {
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for s in &self.terms {
            for o in &other.terms {
                terms.push(Term::new(&s.coeff * &o.coeff, s.mono.concat(&o.mono)));
            }
        }
        Poly::from_terms(terms, ord)
    }

    /// Image under the involutive antiautomorphism: words reversed, letters
    /// replaced by their partners.
    pub fn adjoint(&self, alphabet: &Alphabet, ord: &MonomialOrder) -> Result<Poly> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(Term::new(t.coeff.clone(), alphabet.adjoint_word(&t.mono)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_terms(terms, ord))
    }

    /// Applies a letter-wise substitution given as an algebra homomorphism.
    pub fn substitute(&self, image: impl Fn(Var) -> Poly, ord: &MonomialOrder) -> Poly {
        let mut acc: Vec<Term> = Vec::new();
        for t in &self.terms {
            let mut prod = Poly::constant(t.coeff.clone());
            for &v in t.mono.letters() {
                prod = prod.mul(&image(v), ord);
                if prod.is_zero() {
                    break;
                }
            }
            acc.extend(prod.terms);
        }
        Poly::from_terms(acc, ord)
    }

    /// Removes the content so that the polynomial has coprime integer
    /// coefficients with positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        use num_integer::Integer;
        if self.is_zero() {
            return Poly::zero();
        }
        let mut den = BigInt::one();
        for t in &self.terms {
            den = den.lcm(t.coeff.denom());
        }
        let mut num = BigInt::zero();
        for t in &self.terms {
            num = num.gcd(t.coeff.numer());
        }
        let mut c = BigRational::new(den, num);
        if self.terms[0].coeff.is_negative() {
            c = -c;
        }
        self.scale(&c)
    }
}

/// Merges `a + c·b` for two descending term lists.
pub(crate) fn merge_scaled(a: &[Term], b: &[Term], c: &Coeff, ord: &MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let unit = c.is_one();
    let scaled = |t: &Term| {
        if unit {
            t.clone()
        } else {
            Term::new(&t.coeff * c, t.mono.clone())
        }
    };
    if c.is_zero() {
        return a.to_vec();
    }
    while i < a.len() && j < b.len() {
        match ord.compare(&a[i].mono, &b[j].mono) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(scaled(&b[j]));
                j += 1;
            }
            Ordering::Equal => {
                let s = if unit {
                    &a[i].coeff + &b[j].coeff
                } else {
                    &a[i].coeff + &b[j].coeff * c
                };
                if !s.is_zero() {
                    out.push(Term::new(s, a[i].mono.clone()));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(scaled));
    out
}

/// An alphabet together with a monomial order covering it.
#[derive(Clone, Debug)]
pub struct Ring {
    alphabet: Arc<Alphabet>,
    order: Arc<MonomialOrder>,
}

impl Ring {
    pub fn new(alphabet: Alphabet, order: MonomialOrder) -> Result<Self> {
        if order.num_vars() != alphabet.len() {
            return Err(Error::Order(format!(
                "order ranks {} letters but the alphabet has {}",
                order.num_vars(),
                alphabet.len()
            )));
        }
        Ok(Ring {
            alphabet: Arc::new(alphabet),
            order: Arc::new(order),
        })
    }

    /// Ring over `alphabet` with degree-lexicographic order in declaration
    /// order.
    pub fn deglex(alphabet: Alphabet) -> Self {
        let order = MonomialOrder::deglex(&alphabet.vars().collect::<Vec<_>>());
        Ring::new(alphabet, order).expect("deglex covers the alphabet")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring> {
        Ring::new((*self.alphabet).clone(), order)
    }

    /// Adds fresh plain letters named after `bases` as a new highest block.
    pub fn with_top_letters(&self, bases: &[&str]) -> Result<(Ring, Vec<Var>)> {
        self.extend(bases, true)
    }

    /// Adds fresh plain letters named after `bases` as a new lowest block.
    pub fn with_bottom_letters(&self, bases: &[&str]) -> Result<(Ring, Vec<Var>)> {
        self.extend(bases, false)
    }

    fn extend(&self, bases: &[&str], top: bool) -> Result<(Ring, Vec<Var>)> {
        let mut alphabet = (*self.alphabet).clone();
        let mut fresh = Vec::with_capacity(bases.len());
        for b in bases {
            let name = alphabet.fresh_name(b);
            fresh.push(alphabet.add_plain(&name)?);
        }
        let order = if top {
            self.order.with_top_block(fresh.clone())?
        } else {
            self.order.with_bottom_block(fresh.clone())?
        };
        Ok((Ring::new(alphabet, order)?, fresh))
    }

    pub fn var(&self, name: &str) -> Result<Var> {
        self.alphabet
            .get(name)
            .ok_or_else(|| Error::Input(format!("unknown symbol `{name}`")))
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        parse_poly(text, &self.alphabet, &self.order)
    }

    pub fn word(&self, text: &str) -> Result<Monomial> {
        parse_word(text, &self.alphabet)
    }

    pub fn show(&self, f: &Poly) -> String {
        show_poly(f, &self.alphabet)
    }

    pub fn show_mono(&self, m: &Monomial) -> String {
        show_monomial(m, &self.alphabet)
    }

    pub fn check(&self, f: &Poly) -> Result<()> {
        self.alphabet.check_poly(f)
    }

    pub fn add(&self, f: &Poly, g: &Poly) -> Poly {
        f.add(g, &self.order)
    }

    pub fn sub(&self, f: &Poly, g: &Poly) -> Poly {
        f.sub(g, &self.order)
    }

    pub fn mul(&self, f: &Poly, g: &Poly) -> Poly {
        f.mul(g, &self.order)
    }

    pub fn adjoint(&self, f: &Poly) -> Result<Poly> {
        f.adjoint(&self.alphabet, &self.order)
    }
}

/// Polynomial ring operations in one place.
#[derive(Clone, Debug)]
pub enum PolyOp<'a> {
    Add(&'a Poly),
    Sub(&'a Poly),
    Scale(&'a Coeff),
    Mul(&'a Poly),
    LeftMulMono(&'a Monomial),
    RightMulMono(&'a Monomial),
}

pub fn poly_arith(f: &Poly, op: PolyOp<'_>, ord: &MonomialOrder) -> Poly {
    match op {
        PolyOp::Add(g) => f.add(g, ord),
        PolyOp::Sub(g) => f.sub(g, ord),
        PolyOp::Scale(c) => f.scale(c),
        PolyOp::Mul(g) => f.mul(g, ord),
        PolyOp::LeftMulMono(a) => f.mul_mono_left(a),
        PolyOp::RightMulMono(b) => f.mul_mono_right(b),
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}
