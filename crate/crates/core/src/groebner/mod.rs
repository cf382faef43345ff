//! Two-sided and right Groebner bases.
//!
//! [`buchberger_enumerate`] completes a generating set by resolving overlap
//! and inclusion ambiguities between leading words, smallest degree first and
//! first-in-first-out within a degree. The procedure need not terminate, so
//! every call carries a [`GbConfig`] with optional bounds; a result reached
//! under a bound is flagged incomplete. [`Enumerator`] exposes the same
//! process one new element at a time.

mod certificate;
mod engine;
mod index;
mod oracle;
mod reduce;
mod right;

use num_traits::One;

pub use certificate::{verify_certificate, Certificate, Summand};
pub use engine::Enumerator;
pub use oracle::{membership_oracle, membership_oracle_scoped, OracleAnswer};
pub use right::{right_interreduce, right_normal_form};

pub(crate) use certificate::CertAcc;
pub(crate) use reduce::{index_of, Mode, Reducer};

use crate::freealg::{Coeff, Monomial, Poly};
use crate::ordering::MonomialOrder;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Selection {
    #[default]
    DegreeThenFifo,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GbConfig {
    /// Obstructions whose S-polynomial leading word is longer are not
    /// processed.
    pub degree_bound: Option<usize>,
    /// Cap on processed obstructions.
    pub max_iterations: Option<usize>,
    pub certificates: bool,
    pub selection: Selection,
}

impl GbConfig {
    pub fn unbounded() -> Self {
        Self::default()
    }

    pub fn with_degree(d: usize) -> Self {
        GbConfig {
            degree_bound: Some(d),
            ..Self::default()
        }
    }

    pub fn certified(mut self) -> Self {
        self.certificates = true;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub elements_added: usize,
    pub obstructions_processed: usize,
    pub obstructions_skipped: usize,
}

#[derive(Clone, Debug)]
pub struct GbResult {
    /// Monic, tail-reduced, sorted by ascending leading monomial.
    pub basis: Vec<Poly>,
    pub complete: bool,
    /// `certificates[i]` expresses `basis[i]` over the input generators.
    pub certificates: Option<Vec<Certificate>>,
    pub stats: GbStats,
}

/// Runs the completion procedure on `gens`.
pub fn buchberger_enumerate(gens: &[Poly], ord: &MonomialOrder, cfg: GbConfig) -> GbResult {
    let mut e = Enumerator::new(gens, ord, cfg);
    e.run();
    e.result()
}

/// One reduction step of `f` by `g` at the leftmost division of `lm(f)`.
pub fn top_reduce_step(f: &Poly, g: &Poly, ord: &MonomialOrder) -> Option<Poly> {
    let (lf, lg) = (f.lm()?, g.lm()?);
    let pos = lg.divides_at(lf)?;
    let a = lf.subword(0, pos);
    let b = lf.subword(pos + lg.len(), lf.len());
    let c = f.lc()? / g.lc()?;
    Some(f.sub(&g.sandwich(&a, &b).scale(&c), ord))
}

/// Full normal form of `f` modulo the leading words of `gens`, with
/// `f - nf` expressed over `gens`.
pub fn normal_form(f: &Poly, gens: &[Poly], ord: &MonomialOrder) -> (Poly, Certificate) {
    let gens: Vec<Poly> = gens.iter().map(|g| g.reorder(ord)).collect();
    let ix = index_of(&gens);
    let r = Reducer {
        polys: &gens,
        index: &ix,
        ord,
    }
    .reduce(&f.reorder(ord), Mode::Full, true);
    let mut acc = CertAcc::default();
    for s in r.steps {
        acc.add(s.coeff, s.left, s.gen, s.right);
    }
    (r.nf, acc.finish())
}

/// Normal form without a certificate.
pub fn reduce(f: &Poly, gens: &[Poly], ord: &MonomialOrder) -> Poly {
    let ix = index_of(gens);
    Reducer {
        polys: gens,
        index: &ix,
        ord,
    }
    .reduce(f, Mode::Full, false)
    .nf
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AmbiguityKind {
    /// A proper suffix of one leading word equals a proper prefix of the
    /// other, of the given width.
    Overlap { width: usize },
    /// `lm(g2)` occurs in `lm(g1)` at the given position.
    Inclusion { pos: usize },
}

/// An ambiguity `u·g1·v` versus `u'·g2·v'` with equal leading words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub first: (Monomial, Monomial),
    pub second: (Monomial, Monomial),
    /// `u·g1·v / lc(g1) - u'·g2·v' / lc(g2)`
    pub s_poly: Poly,
}

/// Overlap and inclusion ambiguities between `g1` and `g2`.
pub fn obstructions(g1: &Poly, g2: &Poly, ord: &MonomialOrder) -> Vec<Ambiguity> {
    let (Some(u), Some(w)) = (g1.lm(), g2.lm()) else {
        return Vec::new();
    };
    let same = g1 == g2;
    let n1 = g1.scale(&(Coeff::one() / g1.lc().unwrap()));
    let n2 = g2.scale(&(Coeff::one() / g2.lc().unwrap()));
    let one = Monomial::one;
    let mut out = Vec::new();
    let mut push = |kind, first: (Monomial, Monomial), second: (Monomial, Monomial)| {
        let s = n1
            .sandwich(&first.0, &first.1)
            .sub(&n2.sandwich(&second.0, &second.1), ord);
        out.push(Ambiguity {
            kind,
            first,
            second,
            s_poly: s,
        });
    };
    for width in engine::overlap_widths(u.letters(), w.letters()) {
        push(
            AmbiguityKind::Overlap { width },
            (one(), w.subword(width, w.len())),
            (u.subword(0, u.len() - width), one()),
        );
    }
    if !same {
        for width in engine::overlap_widths(w.letters(), u.letters()) {
            push(
                AmbiguityKind::Overlap { width },
                (w.subword(0, w.len() - width), one()),
                (one(), u.subword(width, u.len())),
            );
        }
        for (a, b) in w.find_divisions(u) {
            let pos = a.len();
            push(AmbiguityKind::Inclusion { pos }, (one(), one()), (a, b));
        }
    }
    out
}

/// A reduced set generating the same two-sided ideal: monic, no leading
/// word divides another, tails irreducible. Sorted by leading monomial.
pub fn interreduce(gens: &[Poly], ord: &MonomialOrder) -> Vec<Poly> {
    let mut queue: Vec<Poly> = gens
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.reorder(ord))
        .collect();
    let mut set: Vec<Poly> = Vec::new();
    loop {
        queue.sort_by(|f, g| ord.compare(g.lm().unwrap(), f.lm().unwrap()));
        let Some(f) = queue.pop() else { break };
        let h = reduce(&f, &set, ord);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        let lm = h.lm().unwrap().clone();
        let (kicked, kept): (Vec<Poly>, Vec<Poly>) = set
            .into_iter()
            .partition(|g| lm.divides_at(g.lm().unwrap()).is_some());
        set = kept;
        queue.extend(kicked);
        set.push(h);
    }
    tail_reduce(&set, ord, Mode::Full)
}

pub(crate) fn tail_reduce(set: &[Poly], ord: &MonomialOrder, mode: Mode) -> Vec<Poly> {
    let ix = index_of(set);
    let r = Reducer {
        polys: set,
        index: &ix,
        ord,
    };
    let mut out: Vec<Poly> = set
        .iter()
        .map(|g| {
            let lead = Poly::term(Coeff::one(), g.lm().unwrap().clone());
            lead.add(&r.reduce(&g.tail(), mode, false).nf, ord)
        })
        .collect();
    out.sort_by(|f, g| ord.compare(f.lm().unwrap(), g.lm().unwrap()));
    out
}

#[cfg(test)]
mod tests;
