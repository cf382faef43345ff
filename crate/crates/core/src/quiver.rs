//! Labelled quivers and the compatibility predicate.
//!
//! A monomial is read as a path from right to left: in `x y` the edge
//! labelled `y` is traversed first. The signature of a monomial is the set of
//! vertex pairs `(source, target)` joined by a path with that label.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, Monomial, Poly, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub label: Var,
}

pub type Signature = BTreeSet<(usize, usize)>;

#[derive(Clone, Debug, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    by_label: Vec<Vec<(usize, usize)>>,
    label_names: Vec<Option<String>>,
}

/// Result of a compatibility query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Compatibility {
    pub compatible: bool,
    pub witness: Option<(usize, usize)>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, name: &str) -> usize {
        match self.vertices.iter().position(|v| v == name) {
            Some(i) => i,
            None => {
                self.vertices.push(name.to_string());
                self.vertices.len() - 1
            }
        }
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Adds an edge `source -> target` labelled by `label`, creating the
    /// vertices on first use.
    pub fn add_edge(&mut self, source: &str, target: &str, label: Var, alphabet: &Alphabet) {
        let s = self.vertex(source);
        let t = self.vertex(target);
        let i = label.idx();
        if self.by_label.len() <= i {
            self.by_label.resize(i + 1, Vec::new());
            self.label_names.resize(i + 1, None);
        }
        if !self.by_label[i].contains(&(s, t)) {
            self.by_label[i].push((s, t));
        }
        if alphabet.contains(label) {
            self.label_names[i] = Some(alphabet.name(label).to_string());
        }
        self.edges.push(Edge {
            source: s,
            target: t,
            label,
        });
    }

    /// Adds, for every edge whose label has an adjoint partner, the reversed
    /// edge labelled by the partner.
    pub fn close_under_adjoint(&mut self, alphabet: &Alphabet) {
        let edges = self.edges.clone();
        for e in edges {
            if let Some(p) = alphabet.partner(e.label) {
                if !self.arrows(p).contains(&(e.target, e.source)) {
                    let (s, t) = (
                        self.vertices[e.target].clone(),
                        self.vertices[e.source].clone(),
                    );
                    self.add_edge(&s, &t, p, alphabet);
                }
            }
        }
    }

    /// `(source, target)` pairs of the edges labelled `v`.
    pub fn arrows(&self, v: Var) -> &[(usize, usize)] {
        self.by_label
            .get(v.idx())
            .map(|e| e.as_slice())
            .unwrap_or(&[])
    }

    pub fn labels(&self, v: Var) -> bool {
        !self.arrows(v).is_empty()
    }

    fn unlabelled(&self, v: Var) -> Error {
        let name = self
            .label_names
            .get(v.idx())
            .and_then(|n| n.clone())
            .unwrap_or_else(|| format!("#{}", v.idx()));
        Error::UnlabelledLetter(name)
    }

    pub fn identity(&self) -> Signature {
        (0..self.vertices.len()).map(|v| (v, v)).collect()
    }

    /// Signature of a word; every letter must label an edge.
    pub fn mono_signature(&self, m: &Monomial) -> Result<Signature> {
        let mut sig = self.identity();
        for &x in m.letters().iter().rev() {
            let arrows = self.arrows(x);
            if arrows.is_empty() {
                return Err(self.unlabelled(x));
            }
            sig = compose(&sig, arrows);
            if sig.is_empty() {
                break;
            }
        }
        Ok(sig)
    }

    /// Signature with unlabelled letters treated as unrealisable.
    pub fn signature_or_empty(&self, m: &Monomial) -> Signature {
        self.mono_signature(m).unwrap_or_default()
    }

    /// Whether all monomials of `f` label paths between one common pair of
    /// vertices.
    pub fn is_compatible(&self, f: &Poly) -> Compatibility {
        let mut common: Option<Signature> = None;
        for m in f.support() {
            let s = self.signature_or_empty(m);
            common = Some(match common {
                None => s,
                Some(c) => c.intersection(&s).copied().collect(),
            });
        }
        match common {
            None => Compatibility {
                compatible: true,
                witness: None,
            },
            Some(c) => Compatibility {
                compatible: !c.is_empty(),
                witness: c.iter().next().copied(),
            },
        }
    }

    /// Like [`Quiver::is_compatible`], but the common pair must be `pair`.
    pub fn is_compatible_with(&self, f: &Poly, pair: (usize, usize)) -> bool {
        f.support()
            .all(|m| self.signature_or_empty(m).contains(&pair))
    }
}

/// Pairs `(v, w)` with `(v, u)` in `first` and `(u, w)` an arrow.
fn compose(first: &Signature, arrows: &[(usize, usize)]) -> Signature {
    let mut out = Signature::new();
    for &(v, u) in first {
        for &(s, w) in arrows {
            if s == u {
                out.insert((v, w));
            }
        }
    }
    out
}

/// Relational composition: the signature of `m · m'` from those of `m`
/// (`outer`) and `m'` (`inner`).
pub fn compose_signatures(outer: &Signature, inner: &Signature) -> Signature {
    let mut out = Signature::new();
    for &(v, u) in inner {
        for &(s, w) in outer {
            if s == u {
                out.insert((v, w));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Ring;
    use proptest::prelude::*;

    fn fig1() -> (Ring, Quiver) {
        let mut a = Alphabet::new();
        for n in ["a", "b", "c", "y", "z"] {
            a.add_pair(n, &format!("{n}*")).unwrap();
        }
        a.add_pair("a†", "a†*").unwrap();
        let mut q = Quiver::new();
        for (s, t, l) in [
            ("2", "1", "a"),
            ("1", "2", "a†"),
            ("4", "3", "b"),
            ("4", "1", "c"),
            ("4", "2", "y"),
            ("2", "3", "z"),
        ] {
            let v = a.get(l).unwrap();
            q.add_edge(s, t, v, &a);
        }
        q.close_under_adjoint(&a);
        (Ring::deglex(a), q)
    }

    #[test]
    fn fig1_signatures() {
        let (r, q) = fig1();
        let v = |n: &str| q.vertex_index(n).unwrap();
        let sig = q.mono_signature(&r.word("a a† a").unwrap()).unwrap();
        assert_eq!(sig, q.mono_signature(&r.word("a").unwrap()).unwrap());
        assert_eq!(sig, [(v("2"), v("1"))].into_iter().collect());
        assert_eq!(
            q.mono_signature(&r.word("a* a†*").unwrap()).unwrap(),
            [(v("2"), v("2"))].into_iter().collect()
        );
        assert!(q
            .mono_signature(&r.word("a a").unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn fig1_compatibility() {
        let (r, q) = fig1();
        assert!(q.is_compatible(&r.parse("a a^+ a - a").unwrap()).compatible);
        let c = q.is_compatible(&r.parse("a z* b - c").unwrap());
        assert!(c.compatible);
        assert_eq!(
            c.witness,
            Some((q.vertex_index("4").unwrap(), q.vertex_index("1").unwrap()))
        );
        assert!(!q.is_compatible(&r.parse("a + b").unwrap()).compatible);
        assert_eq!(
            q.is_compatible(&Poly::zero()),
            Compatibility {
                compatible: true,
                witness: None
            }
        );
    }

    #[test]
    fn trivial_signatures() {
        let mut a = Alphabet::new();
        let x = a.add_plain("x").unwrap();
        let u = a.add_plain("u").unwrap();
        let mut q = Quiver::new();
        q.add_edge("1", "2", x, &a);
        assert_eq!(
            q.mono_signature(&Monomial::one()).unwrap(),
            [(0, 0), (1, 1)].into_iter().collect()
        );
        assert!(q
            .mono_signature(&Monomial::from_slice(&[x, x]))
            .unwrap()
            .is_empty());
        assert_eq!(
            q.mono_signature(&Monomial::letter(u)),
            Err(Error::UnlabelledLetter("#1".into()))
        );
        let r = Ring::deglex(a);
        // constant plus a non-loop monomial
        assert!(!q.is_compatible(&r.parse("x + 1").unwrap()).compatible);
        assert!(q.is_compatible(&r.parse("3").unwrap()).compatible);
    }

    proptest! {
        #[test]
        fn signature_is_multiplicative(
            w1 in prop::collection::vec(0u16..12, 0..6),
            w2 in prop::collection::vec(0u16..12, 0..6),
        ) {
            let (_, q) = fig1();
            let m1: Monomial = w1.into_iter().map(Var).collect();
            let m2: Monomial = w2.into_iter().map(Var).collect();
            let whole = q.mono_signature(&m1.concat(&m2)).unwrap();
            let parts = compose_signatures(
                &q.mono_signature(&m1).unwrap(),
                &q.mono_signature(&m2).unwrap(),
            );
            prop_assert_eq!(whole, parts);
        }

        #[test]
        fn adjoint_preserves_compatibility(
            ws in prop::collection::vec(prop::collection::vec(0u16..12, 1..5), 1..4),
        ) {
            let (r, q) = fig1();
            let f = Poly::from_terms(
                ws.into_iter().map(|w| crate::Term::new(crate::freealg::coeff(1), w.into_iter().map(Var).collect())).collect(),
                r.order(),
            );
            if q.is_compatible(&f).compatible {
                prop_assert!(q.is_compatible(&r.adjoint(&f).unwrap()).compatible);
            }
        }
    }
}
