//! Line-oriented statement files.
//!
//! ```text
//! vars: mp(a), b*, c*, y*, z*
//! order: [a, a*, a†, a†*, b, b*, c, c*, y, y*, z, z*]
//! quiver:
//!   edge: 2 -> 1 label a
//! assume:
//!   c = a y
//! claim: solvable a X b = c
//! config:
//!   max-deg = 5
//! ```
//!
//! Sections may hold their items on the header line or on the following
//! lines. `#` starts a comment.

use crate::error::{Error, Result};
use crate::freealg::{parse_poly, parse_word, Alphabet, Monomial, Poly, Ring, Var};
use crate::ordering::MonomialOrder;
use crate::quiver::Quiver;

use super::moore_penrose;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    /// `f ∈ (F)`.
    Member(Poly),
    /// `a·X·b = c` has a solution `X`.
    Solvable {
        a: Monomial,
        b: Monomial,
        c: Monomial,
        unknown: String,
    },
    /// `p = Q*·Q` for some `Q`.
    Positive(Poly),
    /// `a = b·X` for some `X`.
    Range {
        a: Monomial,
        b: Monomial,
        unknown: String,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// Degree bound for `ρ`.
    pub max_deg: Option<usize>,
    /// Degree bound for two-sided completions.
    pub gb_max_deg: Option<usize>,
    pub max_iterations: Option<usize>,
    /// Number of generators scanned in streamed searches.
    pub max_gens: Option<usize>,
    /// Keep only quiver-compatible elements of `ρ`.
    pub quiver_filter: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct Statement {
    pub ring: Ring,
    /// The `vars:` items as written.
    pub declarations: Vec<String>,
    pub quiver: Option<Quiver>,
    /// Edges as `(source, target, label)` text.
    pub edges: Vec<(String, String, String)>,
    /// Assumptions as polynomials `lhs - rhs`, expanded axioms first.
    pub assumptions: Vec<Poly>,
    pub claim: Claim,
    pub options: Options,
}

/// Shifts an expression-level parse error to its place in the file.
fn relocate(e: Error, line: usize, col: usize) -> Error {
    match e {
        Error::Parse { col: c, msg, .. } => Error::parse(line, col + c - 1, msg),
        other => Error::parse(line, col, other.to_string()),
    }
}

/// A piece of text with its 1-based position.
#[derive(Clone, Debug)]
pub(crate) struct Span<'a> {
    pub text: &'a str,
    pub line: usize,
    pub col: usize,
}

impl<'a> Span<'a> {
    fn trim(&self) -> Span<'a> {
        let lead = self.text.len() - self.text.trim_start().len();
        Span {
            text: self.text.trim(),
            line: self.line,
            col: self.col + self.text[..lead].chars().count(),
        }
    }

    fn sub(&self, start: usize, end: usize) -> Span<'a> {
        Span {
            text: &self.text[start..end],
            line: self.line,
            col: self.col + self.text[..start].chars().count(),
        }
        .trim()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.col, msg)
    }

    /// Splits at every occurrence of `sep`.
    fn split(&self, sep: char) -> Vec<Span<'a>> {
        let mut out = Vec::new();
        let mut start = 0;
        for (i, c) in self.text.char_indices() {
            if c == sep {
                out.push(self.sub(start, i));
                start = i + c.len_utf8();
            }
        }
        out.push(self.sub(start, self.text.len()));
        out
    }

    pub fn poly(&self, ring: &Ring) -> Result<Poly> {
        parse_poly(self.text, ring.alphabet(), ring.order())
            .map_err(|e| relocate(e, self.line, self.col))
    }

    pub fn word(&self, ring: &Ring) -> Result<Monomial> {
        parse_word(self.text, ring.alphabet()).map_err(|e| relocate(e, self.line, self.col))
    }
}

const SECTIONS: [&str; 7] = [
    "vars", "quiver", "order", "assume", "with", "claim", "config",
];

/// Splits `text` into comment-free lines grouped by section.
pub(crate) fn sections(text: &str) -> Result<Vec<(String, Vec<Span<'_>>)>> {
    let mut out: Vec<(String, Vec<Span<'_>>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let span = Span {
            text: body,
            line: i + 1,
            col: 1,
        }
        .trim();
        if span.text.is_empty() {
            continue;
        }
        let header = span.text.split_once(':').and_then(|(k, _)| {
            let k = k.trim();
            SECTIONS.contains(&k).then(|| k.to_string())
        });
        match header {
            Some(k) => {
                let colon = span.text.find(':').unwrap();
                let rest = span.sub(colon + 1, span.text.len());
                if out.iter().any(|(name, _)| *name == k) {
                    return Err(span.err(format!("section `{k}` appears twice")));
                }
                let items = if rest.text.is_empty() {
                    Vec::new()
                } else {
                    vec![rest]
                };
                out.push((k, items));
            }
            None => match out.last_mut() {
                Some((_, items)) => items.push(span),
                None => {
                    if span.text.starts_with("edge") {
                        out.push(("quiver".into(), vec![span]));
                    } else {
                        return Err(span.err("expected a section header"));
                    }
                }
            },
        }
    }
    Ok(out)
}

/// Parses `vars:` items into an alphabet; returns the symbols to expand
/// into Moore-Penrose axioms.
pub(crate) fn declare(
    items: &[Span<'_>],
    alphabet: &mut Alphabet,
) -> Result<(Vec<String>, Vec<String>)> {
    let mut mp = Vec::new();
    let mut written = Vec::new();
    for line in items {
        for item in line.split(',') {
            if item.text.is_empty() {
                continue;
            }
            written.push(item.text.to_string());
            let dup = |e: Error| item.err(e.to_string());
            if let Some(inner) = wrapped(item.text, "mp") {
                check_ident(inner, &item)?;
                alphabet
                    .add_pair(inner, &format!("{inner}*"))
                    .map_err(dup)?;
                alphabet
                    .add_pair(&format!("{inner}†"), &format!("{inner}†*"))
                    .map_err(dup)?;
                mp.push(inner.to_string());
            } else if let Some(inner) = wrapped(item.text, "sa") {
                check_ident(inner, &item)?;
                alphabet.add_self_adjoint(inner).map_err(dup)?;
            } else if let Some(base) = item.text.strip_suffix('*') {
                let name = dagger_name(base.trim_end(), &item)?;
                alphabet.add_pair(&name, &format!("{name}*")).map_err(dup)?;
            } else {
                let name = dagger_name(item.text, &item)?;
                alphabet.add_plain(&name).map_err(dup)?;
            }
        }
    }
    Ok((written, mp))
}

fn wrapped<'t>(text: &'t str, head: &str) -> Option<&'t str> {
    text.strip_prefix(head)?
        .trim_start()
        .strip_prefix('(')?
        .strip_suffix(')')
        .map(str::trim)
}

fn check_ident(s: &str, at: &Span<'_>) -> Result<()> {
    let mut cs = s.chars();
    let ok = cs.next().is_some_and(|c| c.is_ascii_alphabetic())
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_');
    if ok {
        Ok(())
    } else {
        Err(at.err(format!("`{s}` is not a valid identifier")))
    }
}

/// `a`, `a^+` or `a†` as a symbol name.
fn dagger_name(s: &str, at: &Span<'_>) -> Result<String> {
    let base = s.strip_suffix("^+").or_else(|| s.strip_suffix('†'));
    match base {
        Some(b) => {
            check_ident(b, at)?;
            Ok(format!("{b}†"))
        }
        None => {
            check_ident(s, at)?;
            Ok(s.to_string())
        }
    }
}

/// `[x, y] > [z]`: blocks highest first, ascending within a block.
pub(crate) fn parse_order(span: &Span<'_>, alphabet: &Alphabet) -> Result<MonomialOrder> {
    let mut blocks = Vec::new();
    for part in span.split('>') {
        let inner = part
            .text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| part.err("expected a bracketed block `[...]`"))?;
        let inner = Span {
            text: inner,
            line: part.line,
            col: part.col + 1,
        };
        let mut blk: Vec<Var> = Vec::new();
        for name in inner.split(',') {
            if name.text.is_empty() {
                continue;
            }
            let m =
                parse_word(name.text, alphabet).map_err(|e| relocate(e, name.line, name.col))?;
            match m.letters() {
                [v] => blk.push(*v),
                _ => return Err(name.err(format!("`{}` is not a single letter", name.text))),
            }
        }
        blocks.push(blk);
    }
    MonomialOrder::block(blocks).map_err(|e| span.err(e.to_string()))
}

/// `edge: 2 -> 1 label a`.
pub(crate) fn parse_edge<'t>(span: &Span<'t>) -> Result<(Span<'t>, Span<'t>, Span<'t>)> {
    let text = span.text;
    let body_start = text
        .strip_prefix("edge")
        .and_then(|r| r.trim_start().strip_prefix(':'))
        .map(|r| text.len() - r.len())
        .ok_or_else(|| span.err("expected `edge: <source> -> <target> label <letter>`"))?;
    let body = span.sub(body_start, text.len());
    let arrow = body
        .text
        .find("->")
        .ok_or_else(|| body.err("expected `->`"))?;
    let src = body.sub(0, arrow);
    let rest = body.sub(arrow + 2, body.text.len());
    let lab = rest
        .text
        .find(" label ")
        .ok_or_else(|| rest.err("expected `label <letter>`"))?;
    let tgt = rest.sub(0, lab);
    let label = rest.sub(lab + " label ".len(), rest.text.len());
    for s in [&src, &tgt, &label] {
        if s.text.is_empty() || s.text.contains(char::is_whitespace) {
            return Err(s.err("expected a single name"));
        }
    }
    Ok((src, tgt, label))
}

pub(crate) fn build_quiver(
    edges: &[(Span<'_>, Span<'_>, Span<'_>)],
    alphabet: &Alphabet,
) -> Result<Quiver> {
    let mut q = Quiver::new();
    for (s, t, l) in edges {
        let m = parse_word(l.text, alphabet).map_err(|e| relocate(e, l.line, l.col))?;
        let v = match m.letters() {
            [v] => *v,
            _ => return Err(l.err(format!("label `{}` is not a single letter", l.text))),
        };
        q.add_edge(s.text, t.text, v, alphabet);
    }
    q.close_under_adjoint(alphabet);
    Ok(q)
}

fn equation(span: &Span<'_>, ring: &Ring) -> Result<Poly> {
    let parts = span.split('=');
    match parts.as_slice() {
        [f] => f.poly(ring),
        [l, r] => Ok(l.poly(ring)?.sub(&r.poly(ring)?, ring.order())),
        _ => Err(span.err("more than one `=`")),
    }
}

/// Finds the single identifier of `span` that is not a symbol.
fn unknown_in<'t>(span: &Span<'t>, alphabet: &Alphabet) -> Result<Option<(usize, usize)>> {
    let text = span.text;
    let mut found = None;
    let mut i = 0;
    let bytes = text.as_bytes();
    while i < bytes.len() {
        if bytes[i].is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let name = &text[start..i];
            let daggered = text[i..].starts_with("^+") || text[i..].starts_with('†');
            let known = alphabet.get(name).is_some()
                || (daggered && alphabet.get(&format!("{name}†")).is_some());
            if !known && name != "adj" {
                if found.is_some() {
                    return Err(span.err("more than one unknown"));
                }
                found = Some((start, i));
            }
        } else {
            i += 1;
        }
    }
    Ok(found)
}

fn word_or_one(span: &Span<'_>, ring: &Ring) -> Result<Monomial> {
    if span.text.is_empty() {
        Ok(Monomial::one())
    } else {
        span.word(ring)
    }
}

fn parse_claim(span: &Span<'_>, ring: &Ring) -> Result<Claim> {
    let (kw, _) = span.text.split_once(char::is_whitespace).ok_or_else(|| {
        span.err("expected `member`, `solvable`, `positive` or `range` followed by the claim")
    })?;
    let rest = span.sub(kw.len(), span.text.len());
    match kw {
        "member" => Ok(Claim::Member(equation(&rest, ring)?)),
        "positive" => Ok(Claim::Positive(rest.poly(ring)?)),
        "solvable" | "range" => {
            let sides = rest.split('=');
            let [lhs, rhs] = sides.as_slice() else {
                return Err(rest.err("expected one `=`"));
            };
            let (with, other, unknown_left) = match (
                unknown_in(lhs, ring.alphabet())?,
                unknown_in(rhs, ring.alphabet())?,
            ) {
                (Some(u), None) => (lhs, rhs, u),
                (None, Some(u)) => (rhs, lhs, u),
                _ => return Err(rest.err("expected exactly one unknown")),
            };
            let (s, e) = unknown_left;
            let unknown = with.text[s..e].to_string();
            let before = with.sub(0, s);
            let after = with.sub(e, with.text.len());
            let a = word_or_one(&before, ring)?;
            let b = word_or_one(&after, ring)?;
            let c = other.word(ring)?;
            if kw == "solvable" {
                Ok(Claim::Solvable { a, b, c, unknown })
            } else {
                if !b.is_one() {
                    return Err(after.err("the unknown must end the product"));
                }
                Ok(Claim::Range {
                    a: c,
                    b: a,
                    unknown,
                })
            }
        }
        other => Err(span.err(format!("unknown claim kind `{other}`"))),
    }
}

fn parse_options(items: &[Span<'_>]) -> Result<Options> {
    let mut o = Options::default();
    for it in items {
        let (k, v) = it
            .text
            .split_once('=')
            .ok_or_else(|| it.err("expected `key = value`"))?;
        let (k, v) = (k.trim(), v.trim());
        let num = || {
            v.parse::<usize>()
                .map_err(|_| it.err(format!("`{v}` is not a number")))
        };
        match k {
            "max-deg" => o.max_deg = Some(num()?),
            "gb-max-deg" => o.gb_max_deg = Some(num()?),
            "max-iterations" => o.max_iterations = Some(num()?),
            "max-gens" => o.max_gens = Some(num()?),
            "quiver-filter" => {
                o.quiver_filter = Some(match v {
                    "yes" | "true" => true,
                    "no" | "false" => false,
                    _ => return Err(it.err("expected `yes` or `no`")),
                })
            }
            _ => return Err(it.err(format!("unknown option `{k}`"))),
        }
    }
    Ok(o)
}

/// Generators over a declared alphabet, without a claim.
#[derive(Clone, Debug)]
pub struct System {
    pub ring: Ring,
    pub declarations: Vec<String>,
    pub quiver: Option<Quiver>,
    pub edges: Vec<(String, String, String)>,
    /// The `assume:` items, expanded axioms first.
    pub generators: Vec<Poly>,
    /// The `with:` items.
    pub others: Vec<Poly>,
}

impl System {
    /// Replaces the order by one written as `[..] > [..]`.
    pub fn reorder(&self, text: &str) -> Result<System> {
        let span = Span {
            text: text.trim(),
            line: 1,
            col: 1,
        };
        let ord = parse_order(&span, self.ring.alphabet())?;
        if ord.num_vars() != self.ring.alphabet().len() {
            return Err(Error::parse(1, 1, "the order must list every symbol"));
        }
        let ring = self.ring.with_order(ord)?;
        let o = ring.order();
        Ok(System {
            generators: self.generators.iter().map(|g| g.reorder(o)).collect(),
            others: self.others.iter().map(|g| g.reorder(o)).collect(),
            ring,
            ..self.clone()
        })
    }
}

type Sections<'t> = [(String, Vec<Span<'t>>)];

fn section<'s, 't>(secs: &'s Sections<'t>, k: &str) -> Option<&'s [Span<'t>]> {
    secs.iter().find(|(n, _)| n == k).map(|(_, v)| v.as_slice())
}

fn system_of(secs: &Sections<'_>) -> Result<System> {
    let get = |k: &str| section(secs, k);
    let mut alphabet = Alphabet::new();
    let (declarations, mp) = declare(get("vars").unwrap_or(&[]), &mut alphabet)?;
    let order = match get("order") {
        Some([one]) => parse_order(one, &alphabet)?,
        Some([]) | None => MonomialOrder::deglex(&alphabet.vars().collect::<Vec<_>>()),
        Some([_, second, ..]) => return Err(second.err("the order must be given on one line")),
    };
    if order.num_vars() != alphabet.len() {
        return Err(Error::parse(1, 1, "the order must list every symbol"));
    }
    let ring = Ring::new(alphabet, order).map_err(|e| Error::parse(1, 1, e.to_string()))?;
    let edge_spans = get("quiver")
        .unwrap_or(&[])
        .iter()
        .map(parse_edge)
        .collect::<Result<Vec<_>>>()?;
    let quiver = if edge_spans.is_empty() {
        None
    } else {
        Some(build_quiver(&edge_spans, ring.alphabet())?)
    };
    let edges = edge_spans
        .iter()
        .map(|(s, t, l)| (s.text.to_string(), t.text.to_string(), l.text.to_string()))
        .collect();
    let mut generators = Vec::new();
    for name in &mp {
        let a = ring.alphabet().get(name).expect("declared");
        generators.extend(moore_penrose(a, &ring)?);
    }
    let compatible = |it: &Span<'_>, f: Poly| -> Result<Poly> {
        match &quiver {
            Some(q) if !q.is_compatible(&f).compatible => {
                Err(it.err("assumption is not compatible with the quiver"))
            }
            _ => Ok(f),
        }
    };
    for it in get("assume").unwrap_or(&[]) {
        generators.push(compatible(it, equation(it, &ring)?)?);
    }
    let mut others = Vec::new();
    for it in get("with").unwrap_or(&[]) {
        others.push(compatible(it, equation(it, &ring)?)?);
    }
    Ok(System {
        ring,
        declarations,
        quiver,
        edges,
        generators,
        others,
    })
}

/// Parses a file of generators: the sections of a statement file, with
/// `with:` for a second generator list and no claim.
pub fn parse_system(text: &str) -> Result<System> {
    let secs = sections(text)?;
    for (k, items) in &secs {
        if k == "claim" || k == "config" {
            let (line, col) = items.first().map_or((1, 1), |s| (s.line, s.col));
            return Err(Error::parse(line, col, format!("unexpected section `{k}`")));
        }
    }
    system_of(&secs)
}

/// Parses a statement file.
pub fn parse_statement(text: &str) -> Result<Statement> {
    let secs = sections(text)?;
    let get = |k: &str| section(&secs, k);
    if let Some(first) = get("with").and_then(|w| w.first()) {
        return Err(first.err("`with:` is not allowed in a statement"));
    }
    let System {
        ring,
        declarations,
        quiver,
        edges,
        generators: assumptions,
        ..
    } = system_of(&secs)?;
    let claim = match get("claim") {
        Some([one]) => {
            let claim = parse_claim(one, &ring)?;
            if let Some(q) = &quiver {
                let target = match &claim {
                    Claim::Member(f) | Claim::Positive(f) => f.clone(),
                    Claim::Solvable { c, .. } | Claim::Range { a: c, .. } => Poly::mono(c.clone()),
                };
                if !q.is_compatible(&target).compatible {
                    return Err(one.err("claim is not compatible with the quiver"));
                }
            }
            claim
        }
        Some([]) | None => return Err(Error::parse(1, 1, "missing `claim:`")),
        Some([_, second, ..]) => return Err(second.err("only one claim is allowed")),
    };
    let options = parse_options(get("config").unwrap_or(&[]))?;
    Ok(Statement {
        ring,
        declarations,
        quiver,
        edges,
        assumptions,
        claim,
        options,
    })
}

/// Parses a file of `edge:` lines over `alphabet`.
pub fn parse_quiver(text: &str, alphabet: &Alphabet) -> Result<Quiver> {
    let secs = sections(text)?;
    let mut edges = Vec::new();
    for (k, items) in &secs {
        if k != "quiver" {
            let (line, col) = items.first().map_or((1, 1), |s| (s.line, s.col));
            return Err(Error::parse(line, col, format!("unexpected section `{k}`")));
        }
        for it in items {
            edges.push(parse_edge(it)?);
        }
    }
    if edges.is_empty() {
        return Err(Error::parse(1, 1, "no edges"));
    }
    build_quiver(&edges, alphabet)
}
