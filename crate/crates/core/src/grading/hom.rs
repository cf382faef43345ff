//! Streaming enumeration of the homogeneous part of an ideal.

use crate::error::Result;
use crate::freealg::{Monomial, Poly, Ring};
use crate::groebner::{CertAcc, Certificate, Enumerator, GbConfig};

use super::{phi_a, tag_relations, GradingMatrix, TagBlock};

/// One element of the stream.
#[derive(Clone, Debug)]
pub struct HomElement {
    pub poly: Poly,
    /// 1-based position among the emitted tag-free elements.
    pub index: usize,
    /// 1-based position among all elements added by the enumerator.
    pub engine_index: usize,
    /// `poly = Σ c · u · F[j] · v`, when certificates are tracked.
    pub certificate: Option<Certificate>,
}

/// Elements of a Groebner basis of `(φ_A(F)) + J` that involve no tag,
/// produced one at a time.
pub struct HomPartStream {
    base: Ring,
    tagged: Ring,
    tags: TagBlock,
    engine: Enumerator,
    num_inputs: usize,
    emitted: usize,
    cap: Option<usize>,
}

impl HomPartStream {
    pub fn new(f: &[Poly], a: &GradingMatrix, base: &Ring, cfg: GbConfig) -> Result<Self> {
        let (tagged, tags) = TagBlock::adjoin(base, a.rank())?;
        let ord = tagged.order();
        let mut inputs = Vec::with_capacity(f.len());
        for g in f {
            inputs.push(phi_a(a, g, &tags, ord)?);
        }
        let letters: Vec<_> = base.alphabet().vars().collect();
        inputs.extend(tag_relations(&letters, &tags, a.is_nonnegative(), ord));
        let engine = Enumerator::new(&inputs, ord, cfg);
        Ok(HomPartStream {
            base: base.clone(),
            tagged,
            tags,
            engine,
            num_inputs: f.len(),
            emitted: 0,
            cap: None,
        })
    }

    /// Stops after `n` emitted elements.
    pub fn with_max_emitted(mut self, n: usize) -> Self {
        self.cap = Some(n);
        self
    }

    pub fn tagged_ring(&self) -> &Ring {
        &self.tagged
    }

    pub fn tags(&self) -> &TagBlock {
        &self.tags
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    pub fn engine(&self) -> &Enumerator {
        &self.engine
    }

    /// Whether the underlying enumeration ran to completion.
    pub fn is_complete(&self) -> bool {
        self.engine.is_complete()
    }

    /// An emitted element with its tail reduced by everything found so far.
    pub fn tail_reduced(&self, el: &HomElement) -> (Poly, Option<Certificate>) {
        let (g, cert) = self.engine.tail_reduced(el.engine_index - 1);
        (g.reorder(self.base.order()), cert.map(|c| self.untag(&c)))
    }

    fn tag_free(&self, g: &Poly) -> bool {
        !g.vars().any(|v| self.tags.contains(v))
    }

    /// Sets every tag to 1 and drops the tag relations.
    fn untag(&self, cert: &Certificate) -> Certificate {
        let strip = |m: &Monomial| -> Monomial {
            m.letters()
                .iter()
                .copied()
                .filter(|&v| !self.tags.contains(v))
                .collect()
        };
        let mut acc = CertAcc::default();
        for s in &cert.summands {
            if s.gen < self.num_inputs {
                acc.add(s.coeff.clone(), strip(&s.left), s.gen, strip(&s.right));
            }
        }
        acc.finish()
    }
}

impl Iterator for HomPartStream {
    type Item = HomElement;

    fn next(&mut self) -> Option<HomElement> {
        if self.cap.is_some_and(|c| self.emitted >= c) {
            return None;
        }
        loop {
            let id = self.engine.next_element()?;
            let g = self.engine.element(id);
            if !self.tag_free(g) {
                continue;
            }
            self.emitted += 1;
            let certificate = self.engine.certificate(id).map(|c| self.untag(c));
            return Some(HomElement {
                poly: g.reorder(self.base.order()),
                index: self.emitted,
                engine_index: id + 1,
                certificate,
            });
        }
    }
}

/// Collects up to `max` elements of the stream.
pub fn hom_part_enumerate(
    f: &[Poly],
    a: &GradingMatrix,
    base: &Ring,
    cfg: GbConfig,
    max: usize,
) -> Result<Vec<HomElement>> {
    Ok(HomPartStream::new(f, a, base, cfg)?
        .with_max_emitted(max)
        .collect())
}
