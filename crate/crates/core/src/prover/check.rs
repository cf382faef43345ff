//! Certificate files and their stand-alone checker.
//!
//! ```text
//! ncideal certificate
//! vars: mp(a), b*, c*, y*, z*
//! order: [a, a*, a†, a†*, b, b*, c, c*, y, y*, z, z*]
//! edge: 2 -> 1 label a
//! target: a z* b - c
//! gen: a a† a - a
//! 1 | a | 3 | z* b
//! ```
//!
//! Generators are numbered from 0 in order of appearance. Each summand line
//! reads `coeff | left | gen | right`, with `1` for the empty word. The
//! checker expands the sum with plain polynomial arithmetic.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, Coeff, Monomial, Poly, Ring, Term};
use crate::ordering::MonomialOrder;
use crate::quiver::Quiver;

use super::statement::{build_quiver, declare, parse_edge, parse_order, Span};

pub const MAGIC: &str = "ncideal certificate";

/// One summand `coeff · left · gen · right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertLine {
    pub coeff: Coeff,
    pub left: Monomial,
    pub gen: usize,
    pub right: Monomial,
}

/// Everything a certificate file records.
#[derive(Clone, Debug)]
pub struct CertificateFile {
    pub declarations: Vec<String>,
    pub ring: Ring,
    pub edges: Vec<(String, String, String)>,
    pub quiver: Option<Quiver>,
    pub target: Poly,
    pub generators: Vec<Poly>,
    pub summands: Vec<CertLine>,
}

/// The order of `ring` as `[..] > [..]`.
pub fn order_line(ring: &Ring) -> String {
    let al = ring.alphabet();
    ring.order()
        .blocks()
        .iter()
        .map(|b| {
            let names: Vec<&str> = b.iter().map(|&v| al.name(v)).collect();
            format!("[{}]", names.join(", "))
        })
        .collect::<Vec<_>>()
        .join(" > ")
}

impl CertificateFile {
    pub fn render(&self) -> String {
        let r = &self.ring;
        let mut out = String::new();
        out.push_str(MAGIC);
        out.push('\n');
        out.push_str(&format!("vars: {}\n", self.declarations.join(", ")));
        out.push_str(&format!("order: {}\n", order_line(r)));
        for (s, t, l) in &self.edges {
            out.push_str(&format!("edge: {s} -> {t} label {l}\n"));
        }
        out.push_str(&format!("target: {}\n", r.show(&self.target)));
        for g in &self.generators {
            out.push_str(&format!("gen: {}\n", r.show(g)));
        }
        for s in &self.summands {
            out.push_str(&format!(
                "{} | {} | {} | {}\n",
                s.coeff,
                r.show_mono(&s.left),
                s.gen,
                r.show_mono(&s.right)
            ));
        }
        out
    }
}

/// Outcome of [`check_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    /// The sum expands to the target.
    pub sums_to_target: bool,
    /// Compatibility of the target with the recorded quiver, if any.
    pub compatible: Option<bool>,
    /// The difference `Σ - target` when it is nonzero.
    pub residual: Option<String>,
}

impl CheckReport {
    pub fn is_valid(&self) -> bool {
        self.sums_to_target && self.compatible != Some(false)
    }
}

fn field<'a>(span: &Span<'a>, key: &str) -> Option<Span<'a>> {
    let rest = span
        .text
        .strip_prefix(key)?
        .trim_start()
        .strip_prefix(':')?;
    let start = span.text.len() - rest.len();
    Some(Span {
        text: rest.trim(),
        line: span.line,
        col: span.col + span.text[..start].chars().count() + (rest.len() - rest.trim_start().len()),
    })
}

/// Parses a certificate file.
pub fn parse_certificate(text: &str) -> Result<CertificateFile> {
    let mut lines = text.lines().enumerate().filter_map(|(i, l)| {
        let body = l.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some(Span {
            text: body,
            line: i + 1,
            col: 1 + l.len() - l.trim_start().len(),
        })
    });
    match lines.next() {
        Some(s) if s.text == MAGIC => {}
        Some(s) => return Err(Error::parse(s.line, s.col, format!("expected `{MAGIC}`"))),
        None => return Err(Error::parse(1, 1, "empty certificate file")),
    }
    let mut vars = Vec::new();
    let mut order = None;
    let mut edges = Vec::new();
    let mut target = None;
    let mut gens = Vec::new();
    let mut sums = Vec::new();
    for s in lines {
        if let Some(v) = field(&s, "vars") {
            vars.push(v);
        } else if let Some(o) = field(&s, "order") {
            order = Some(o);
        } else if field(&s, "edge").is_some() {
            edges.push(s);
        } else if let Some(t) = field(&s, "target") {
            target = Some(t);
        } else if let Some(g) = field(&s, "gen") {
            gens.push(g);
        } else if s.text.contains('|') {
            sums.push(s);
        } else {
            return Err(Error::parse(s.line, s.col, "unrecognised line"));
        }
    }
    let mut alphabet = Alphabet::new();
    let (declarations, _) = declare(&vars, &mut alphabet)?;
    let ord = match &order {
        Some(o) => parse_order(o, &alphabet)?,
        None => MonomialOrder::deglex(&alphabet.vars().collect::<Vec<_>>()),
    };
    let ring = Ring::new(alphabet, ord).map_err(|e| Error::parse(1, 1, e.to_string()))?;
    let edge_spans = edges.iter().map(parse_edge).collect::<Result<Vec<_>>>()?;
    let quiver = if edge_spans.is_empty() {
        None
    } else {
        Some(build_quiver(&edge_spans, ring.alphabet())?)
    };
    let edges = edge_spans
        .iter()
        .map(|(s, t, l)| (s.text.to_string(), t.text.to_string(), l.text.to_string()))
        .collect();
    let target = target
        .ok_or_else(|| Error::parse(1, 1, "missing `target:`"))?
        .poly(&ring)?;
    let generators = gens
        .iter()
        .map(|g| g.poly(&ring))
        .collect::<Result<Vec<_>>>()?;
    let mut summands = Vec::new();
    for s in &sums {
        let parts: Vec<&str> = s.text.split('|').map(str::trim).collect();
        let [c, l, g, r] = parts.as_slice() else {
            return Err(Error::parse(
                s.line,
                s.col,
                "expected `coeff | left | gen | right`",
            ));
        };
        let bad = |what: &str| Error::parse(s.line, s.col, format!("malformed {what}"));
        let coeff = Coeff::from_str(c).map_err(|_| bad("coefficient"))?;
        let left = ring.word(l).map_err(|_| bad("left word"))?;
        let gen: usize = g.parse().map_err(|_| bad("generator index"))?;
        let right = ring.word(r).map_err(|_| bad("right word"))?;
        summands.push(CertLine {
            coeff,
            left,
            gen,
            right,
        });
    }
    Ok(CertificateFile {
        declarations,
        ring,
        edges,
        quiver,
        target,
        generators,
        summands,
    })
}

/// Expands `Σ c · u · gens[j] · v`.
pub fn expand(summands: &[CertLine], gens: &[Poly], ord: &MonomialOrder) -> Result<Poly> {
    let mut terms: Vec<Term> = Vec::new();
    for s in summands {
        let g = gens.get(s.gen).ok_or(Error::GeneratorIndex {
            index: s.gen,
            len: gens.len(),
        })?;
        for t in g.terms() {
            terms.push(Term::new(
                &t.coeff * &s.coeff,
                sandwich(&s.left, &t.mono, &s.right),
            ));
        }
    }
    Ok(Poly::from_terms(terms, ord))
}

fn sandwich(a: &Monomial, m: &Monomial, b: &Monomial) -> Monomial {
    a.concat(m).concat(b)
}

/// Re-verifies a parsed certificate file.
pub fn check_parsed(file: &CertificateFile) -> Result<CheckReport> {
    let ord = file.ring.order();
    let sum = expand(&file.summands, &file.generators, ord)?;
    let diff = sum.sub(&file.target, ord);
    let compatible = file
        .quiver
        .as_ref()
        .map(|q| q.is_compatible(&file.target).compatible);
    Ok(CheckReport {
        sums_to_target: diff.is_zero(),
        compatible,
        residual: (!diff.is_zero()).then(|| file.ring.show(&diff)),
    })
}

/// Parses and re-verifies a certificate file.
pub fn check_certificate(text: &str) -> Result<CheckReport> {
    check_parsed(&parse_certificate(text)?)
}
