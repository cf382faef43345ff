//! Cofactor certificates `f = Σ c · u · F[j] · v`.

use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::freealg::{Coeff, Monomial, Poly, Term};
use crate::ordering::MonomialOrder;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub coeff: Coeff,
    pub left: Monomial,
    pub gen: usize,
    pub right: Monomial,
}

/// A representation of a polynomial as a combination of two-sided multiples
/// of indexed generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub summands: Vec<Summand>,
}

impl Certificate {
    pub fn empty() -> Self {
        Self::default()
    }

    /// `1 · F[gen] · 1`
    pub fn generator(gen: usize) -> Self {
        Certificate {
            summands: vec![Summand {
                coeff: Coeff::one(),
                left: Monomial::one(),
                gen,
                right: Monomial::one(),
            }],
        }
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Expands `Σ c · u · gens[j] · v`.
    pub fn evaluate(&self, gens: &[Poly], ord: &MonomialOrder) -> Result<Poly> {
        let mut terms: Vec<Term> = Vec::new();
        for s in &self.summands {
            let g = gens.get(s.gen).ok_or(Error::GeneratorIndex {
                index: s.gen,
                len: gens.len(),
            })?;
            terms.extend(
                g.terms()
                    .iter()
                    .map(|t| Term::new(&t.coeff * &s.coeff, t.mono.sandwich(&s.left, &s.right))),
            );
        }
        Ok(Poly::from_terms(terms, ord))
    }

    /// Rewrites a certificate over `G` into one over `F`, given for every
    /// `G[i]` its certificate `over[i]` in terms of `F`.
    pub fn compose(&self, over: &[Certificate]) -> Result<Certificate> {
        let mut acc = CertAcc::default();
        for s in &self.summands {
            let inner = over.get(s.gen).ok_or(Error::GeneratorIndex {
                index: s.gen,
                len: over.len(),
            })?;
            acc.add_scaled(&s.coeff, &s.left, inner, &s.right);
        }
        Ok(acc.finish())
    }

    pub fn scale(&self, c: &Coeff) -> Certificate {
        let mut acc = CertAcc::default();
        acc.add_scaled(c, &Monomial::one(), self, &Monomial::one());
        acc.finish()
    }

    /// Sorts summands by generator, then left and right word, and merges
    /// duplicates.
    pub fn canonical(&self) -> Certificate {
        let mut acc = CertAcc::default();
        acc.add_scaled(&Coeff::one(), &Monomial::one(), self, &Monomial::one());
        acc.finish()
    }
}

/// Accumulates summands, merging equal `(left, gen, right)` triples.
#[derive(Clone, Debug, Default)]
pub(crate) struct CertAcc {
    map: FxHashMap<(Monomial, usize, Monomial), Coeff>,
}

impl CertAcc {
    pub fn add(&mut self, c: Coeff, left: Monomial, gen: usize, right: Monomial) {
        if c.is_zero() {
            return;
        }
        let e = self
            .map
            .entry((left, gen, right))
            .or_insert_with(Coeff::zero);
        *e += c;
    }

    /// Adds `c · a · cert · b`.
    pub fn add_scaled(&mut self, c: &Coeff, a: &Monomial, cert: &Certificate, b: &Monomial) {
        for s in &cert.summands {
            self.add(c * &s.coeff, a.concat(&s.left), s.gen, s.right.concat(b));
        }
    }

    pub fn finish(self) -> Certificate {
        let mut summands: Vec<Summand> = self
            .map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((left, gen, right), coeff)| Summand {
                coeff,
                left,
                gen,
                right,
            })
            .collect();
        summands.sort_by(|x, y| {
            (
                x.gen,
                x.left.len(),
                x.left.letters(),
                x.right.len(),
                x.right.letters(),
            )
                .cmp(&(
                    y.gen,
                    y.left.len(),
                    y.left.letters(),
                    y.right.len(),
                    y.right.letters(),
                ))
        });
        Certificate { summands }
    }
}

/// Checks `f = Σ c · u · gens[j] · v` exactly.
pub fn verify_certificate(
    f: &Poly,
    gens: &[Poly],
    cert: &Certificate,
    ord: &MonomialOrder,
) -> Result<bool> {
    Ok(cert.evaluate(gens, ord)? == f.reorder(ord))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{coeff, Alphabet, Ring};

    fn ring() -> Ring {
        let mut a = Alphabet::new();
        for n in ["x", "y", "z"] {
            a.add_plain(n).unwrap();
        }
        Ring::deglex(a)
    }

    #[test]
    fn one_summand() {
        let r = ring();
        let gens = vec![r.parse("x y - 1").unwrap()];
        let f = r.parse("z x y x - z x").unwrap();
        let cert = Certificate {
            summands: vec![Summand {
                coeff: coeff(1),
                left: r.word("z").unwrap(),
                gen: 0,
                right: r.word("x").unwrap(),
            }],
        };
        assert!(verify_certificate(&f, &gens, &cert, r.order()).unwrap());
        let mut bad = cert.clone();
        bad.summands[0].coeff = coeff(2);
        assert!(!verify_certificate(&f, &gens, &bad, r.order()).unwrap());
    }

    #[test]
    fn index_out_of_range() {
        let r = ring();
        let cert = Certificate::generator(3);
        assert_eq!(
            verify_certificate(&Poly::zero(), &[r.parse("x").unwrap()], &cert, r.order()),
            Err(Error::GeneratorIndex { index: 3, len: 1 })
        );
    }

    #[test]
    fn compose_through_intermediate_basis() {
        let r = ring();
        let f_gens = vec![r.parse("x - y").unwrap(), r.parse("y - z").unwrap()];
        // G[0] = x - z = F0 + F1
        let g_cert = Certificate {
            summands: vec![
                Summand {
                    coeff: coeff(1),
                    left: Monomial::one(),
                    gen: 0,
                    right: Monomial::one(),
                },
                Summand {
                    coeff: coeff(1),
                    left: Monomial::one(),
                    gen: 1,
                    right: Monomial::one(),
                },
            ],
        };
        let g = [g_cert.evaluate(&f_gens, r.order()).unwrap()];
        assert_eq!(g[0], r.parse("x - z").unwrap());
        let over_g = Certificate {
            summands: vec![Summand {
                coeff: coeff(3),
                left: r.word("y").unwrap(),
                gen: 0,
                right: Monomial::one(),
            }],
        };
        let target = r.parse("3 y x - 3 y z").unwrap();
        let over_f = over_g.compose(&[g_cert]).unwrap();
        assert!(verify_certificate(&target, &f_gens, &over_f, r.order()).unwrap());
    }
}
