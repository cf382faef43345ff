//! Reduction against an indexed set of polynomials.

use num_traits::Zero;

use super::certificate::Summand;
use super::index::LmIndex;
use crate::freealg::{merge_scaled, Monomial, Poly, Term};
use crate::ordering::MonomialOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Rewrite every monomial until none is divisible.
    Full,
    /// Stop as soon as the leading monomial is irreducible.
    Top,
    /// Full reduction by right multiples `g · b` only.
    Right,
}

/// Outcome of a reduction: `f = nf + Σ steps` where every step refers to an
/// index into the reducer's polynomial slice.
pub(crate) struct Reduced {
    pub nf: Poly,
    pub steps: Vec<Summand>,
}

pub(crate) struct Reducer<'a> {
    pub polys: &'a [Poly],
    pub index: &'a LmIndex,
    pub ord: &'a MonomialOrder,
}

impl Reducer<'_> {
    fn lookup(&self, m: &Monomial, mode: Mode) -> Option<(usize, usize)> {
        match mode {
            Mode::Right => self.index.find_prefix(m.letters()).map(|(id, _)| (id, 0)),
            _ => self.index.find(m.letters()),
        }
    }

    pub fn reduce(&self, f: &Poly, mode: Mode, track: bool) -> Reduced {
        let mut done: Vec<Term> = Vec::new();
        let mut rest: Vec<Term> = f.terms().to_vec();
        let mut start = 0;
        let mut steps = Vec::new();
        while start < rest.len() {
            let t = &rest[start];
            match self.lookup(&t.mono, mode) {
                Some((id, pos)) => {
                    let g = &self.polys[id];
                    let lm = g.lm().expect("indexed polynomials are nonzero");
                    let w = t.mono.letters();
                    let a = Monomial::from_slice(&w[..pos]);
                    let b = Monomial::from_slice(&w[pos + lm.len()..]);
                    let c = &t.coeff / g.lc().expect("nonzero");
                    let sub = g.tail().sandwich(&a, &b);
                    rest = merge_scaled(&rest[start + 1..], sub.terms(), &-&c, self.ord);
                    start = 0;
                    if track {
                        steps.push(Summand {
                            coeff: c,
                            left: a,
                            gen: id,
                            right: b,
                        });
                    }
                }
                None if mode == Mode::Top => break,
                None => {
                    done.push(rest[start].clone());
                    start += 1;
                }
            }
        }
        done.extend(rest.drain(start..));
        debug_assert!(done.iter().all(|t| !t.coeff.is_zero()));
        Reduced {
            nf: Poly::from_sorted(done),
            steps,
        }
    }
}

/// Builds an index over the nonzero members of `polys`; the first
/// polynomial with a given leading word wins.
pub(crate) fn index_of(polys: &[Poly]) -> LmIndex {
    let mut ix = LmIndex::default();
    for (i, g) in polys.iter().enumerate() {
        if let Some(lm) = g.lm() {
            ix.insert(lm.letters(), i);
        }
    }
    ix
}
