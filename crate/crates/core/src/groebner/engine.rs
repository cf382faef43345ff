//! Incremental completion with an explicit obstruction queue.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_traits::One;

use super::certificate::{CertAcc, Certificate, Summand};
use super::index::LmIndex;
use super::reduce::{Mode, Reducer};
use super::{GbConfig, GbResult, GbStats};
use crate::freealg::{Coeff, Monomial, Poly};
use crate::ordering::MonomialOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Job {
    /// `lm(left) = u·s`, `lm(right) = s·w` with `|s| = width`.
    Overlap {
        left: usize,
        right: usize,
        width: usize,
    },
    /// `lm(outer) = a · lm(inner) · b` with `|a| = pos`.
    Inclusion {
        outer: usize,
        inner: usize,
        pos: usize,
    },
}

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Queued {
    degree: usize,
    seq: u64,
    job: Job,
}

/// A running enumeration. Elements are added one at a time; callers may
/// inspect every new element as it appears.
pub struct Enumerator {
    ord: MonomialOrder,
    inputs: Vec<Poly>,
    pending: Vec<usize>,
    elems: Vec<Poly>,
    certs: Vec<Certificate>,
    active: Vec<bool>,
    index: LmIndex,
    queue: BinaryHeap<Reverse<Queued>>,
    seq: u64,
    cfg: GbConfig,
    truncated: bool,
    stats: GbStats,
}

impl Enumerator {
    pub fn new(inputs: &[Poly], ord: &MonomialOrder, cfg: GbConfig) -> Self {
        let inputs: Vec<Poly> = inputs.iter().map(|f| f.reorder(ord)).collect();
        let mut pending: Vec<usize> = (0..inputs.len())
            .filter(|&i| !inputs[i].is_zero())
            .collect();
        // smallest first; popped from the back
        pending.sort_by(|&i, &j| {
            ord.compare(inputs[j].lm().unwrap(), inputs[i].lm().unwrap())
                .then(j.cmp(&i))
        });
        Enumerator {
            ord: ord.clone(),
            inputs,
            pending,
            elems: Vec::new(),
            certs: Vec::new(),
            active: Vec::new(),
            index: LmIndex::default(),
            queue: BinaryHeap::new(),
            seq: 0,
            cfg,
            truncated: false,
            stats: GbStats::default(),
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.ord
    }

    /// Every element ever added, in order of appearance.
    pub fn elements(&self) -> &[Poly] {
        &self.elems
    }

    pub fn element(&self, id: usize) -> &Poly {
        &self.elems[id]
    }

    /// Cofactors of element `id` over the inputs (tracked runs only).
    pub fn certificate(&self, id: usize) -> Option<&Certificate> {
        self.cfg.certificates.then(|| &self.certs[id])
    }

    pub fn is_active(&self, id: usize) -> bool {
        self.active[id]
    }

    pub fn stats(&self) -> &GbStats {
        &self.stats
    }

    /// True once the queue is exhausted without hitting a bound.
    pub fn is_complete(&self) -> bool {
        self.pending.is_empty() && self.queue.is_empty() && !self.truncated
    }

    fn budget_left(&self) -> bool {
        self.cfg
            .max_iterations
            .is_none_or(|m| self.stats.obstructions_processed < m)
    }

    fn track(&self) -> bool {
        self.cfg.certificates
    }

    fn reducer(&self) -> Reducer<'_> {
        Reducer {
            polys: &self.elems,
            index: &self.index,
            ord: &self.ord,
        }
    }

    /// Runs until one new element is added; returns its id, or `None` when
    /// the enumeration has stopped.
    pub fn next_element(&mut self) -> Option<usize> {
        while let Some(i) = self.pending.pop() {
            let f = self.inputs[i].clone();
            let cert = Certificate::generator(i);
            if let Some(id) = self.absorb(f, Vec::new(), Some(cert)) {
                return Some(id);
            }
        }
        loop {
            if !self.budget_left() {
                if !self.queue.is_empty() {
                    self.truncated = true;
                }
                return None;
            }
            let Reverse(q) = self.queue.pop()?;
            if self.cfg.degree_bound.is_some_and(|d| q.degree > d) {
                self.truncated = true;
                self.queue.clear();
                return None;
            }
            let Some((s, steps)) = self.s_poly(q.job) else {
                self.stats.obstructions_skipped += 1;
                continue;
            };
            self.stats.obstructions_processed += 1;
            if let Some(id) = self.absorb(s, steps, None) {
                return Some(id);
            }
        }
    }

    /// Runs to the end.
    pub fn run(&mut self) {
        while self.next_element().is_some() {}
    }

    fn s_poly(&self, job: Job) -> Option<(Poly, Vec<Summand>)> {
        let track = self.track();
        match job {
            Job::Overlap { left, right, width } => {
                if !self.active[left] || !self.active[right] {
                    return None;
                }
                let (g, h) = (&self.elems[left], &self.elems[right]);
                let (u, w) = (g.lm().unwrap(), h.lm().unwrap());
                let a = u.subword(0, u.len() - width);
                let b = w.subword(width, w.len());
                let s = g.mul_mono_right(&b).sub(&h.mul_mono_left(&a), &self.ord);
                let steps = if track {
                    vec![
                        Summand {
                            coeff: Coeff::one(),
                            left: Monomial::one(),
                            gen: left,
                            right: b,
                        },
                        Summand {
                            coeff: -Coeff::one(),
                            left: a,
                            gen: right,
                            right: Monomial::one(),
                        },
                    ]
                } else {
                    Vec::new()
                };
                Some((s, steps))
            }
            Job::Inclusion { outer, inner, pos } => {
                if !self.active[inner] {
                    // the inner element was itself superseded; `outer` is
                    // re-reduced against the current basis instead
                    let g = self.elems[outer].clone();
                    let steps = if track {
                        vec![Summand {
                            coeff: Coeff::one(),
                            left: Monomial::one(),
                            gen: outer,
                            right: Monomial::one(),
                        }]
                    } else {
                        Vec::new()
                    };
                    return Some((g, steps));
                }
                let (g, h) = (&self.elems[outer], &self.elems[inner]);
                let u = g.lm().unwrap();
                let a = u.subword(0, pos);
                let b = u.subword(pos + h.lm().unwrap().len(), u.len());
                let s = g.sub(&h.sandwich(&a, &b), &self.ord);
                let steps = if track {
                    vec![
                        Summand {
                            coeff: Coeff::one(),
                            left: Monomial::one(),
                            gen: outer,
                            right: Monomial::one(),
                        },
                        Summand {
                            coeff: -Coeff::one(),
                            left: a,
                            gen: inner,
                            right: b,
                        },
                    ]
                } else {
                    Vec::new()
                };
                Some((s, steps))
            }
        }
    }

    /// Reduces `f` (given as `Σ steps` over elements, or as an input with
    /// certificate `input_cert`) and adds it if nonzero.
    fn absorb(
        &mut self,
        f: Poly,
        mut steps: Vec<Summand>,
        input_cert: Option<Certificate>,
    ) -> Option<usize> {
        let track = self.track();
        let red = self.reducer().reduce(&f, Mode::Full, track);
        if red.nf.is_zero() {
            return None;
        }
        let lc = red.nf.lc().unwrap().clone();
        let h = red.nf.monic();
        let cert = if track {
            // nf = f - Σ red.steps
            let inv = Coeff::one() / &lc;
            let mut acc = CertAcc::default();
            let one = Monomial::one();
            if let Some(c) = &input_cert {
                acc.add_scaled(&inv, &one, c, &one);
            }
            for s in steps.drain(..) {
                acc.add_scaled(&(&inv * &s.coeff), &s.left, &self.certs[s.gen], &s.right);
            }
            for s in red.steps {
                acc.add_scaled(&(-&inv * &s.coeff), &s.left, &self.certs[s.gen], &s.right);
            }
            acc.finish()
        } else {
            Certificate::empty()
        };
        Some(self.push(h, cert))
    }

    fn enqueue(&mut self, degree: usize, job: Job) {
        self.seq += 1;
        self.queue.push(Reverse(Queued {
            degree,
            seq: self.seq,
            job,
        }));
    }

    fn push(&mut self, h: Poly, cert: Certificate) -> usize {
        let id = self.elems.len();
        let lm = h.lm().unwrap().clone();
        // supersede elements whose leading word contains lm(h)
        for g in 0..self.elems.len() {
            if !self.active[g] {
                continue;
            }
            let u = self.elems[g].lm().unwrap();
            if let Some(pos) = lm.divides_at(u) {
                self.active[g] = false;
                self.index.remove(u.letters());
                let degree = u.len();
                self.enqueue(
                    degree,
                    Job::Inclusion {
                        outer: g,
                        inner: id,
                        pos,
                    },
                );
            }
        }
        self.elems.push(h);
        self.certs.push(cert);
        self.active.push(true);
        self.index.insert(lm.letters(), id);
        self.stats.elements_added += 1;
        for g in 0..=id {
            if !self.active[g] {
                continue;
            }
            let u = self.elems[g].lm().unwrap().clone();
            if g == id {
                for width in overlap_widths(lm.letters(), lm.letters()) {
                    self.enqueue(
                        2 * lm.len() - width,
                        Job::Overlap {
                            left: id,
                            right: id,
                            width,
                        },
                    );
                }
                continue;
            }
            let degree = u.len() + lm.len();
            for width in overlap_widths(u.letters(), lm.letters()) {
                self.enqueue(
                    degree - width,
                    Job::Overlap {
                        left: g,
                        right: id,
                        width,
                    },
                );
            }
            for width in overlap_widths(lm.letters(), u.letters()) {
                self.enqueue(
                    degree - width,
                    Job::Overlap {
                        left: id,
                        right: g,
                        width,
                    },
                );
            }
        }
        id
    }

    /// Ids of the active elements, sorted by ascending leading monomial.
    pub fn active_ids(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.elems.len()).filter(|&i| self.active[i]).collect();
        ids.sort_by(|&i, &j| {
            self.ord
                .compare(self.elems[i].lm().unwrap(), self.elems[j].lm().unwrap())
        });
        ids
    }

    /// Element `id` with its tail fully reduced by the current active set,
    /// and the matching certificate over the inputs in tracked runs.
    pub fn tail_reduced(&self, id: usize) -> (Poly, Option<Certificate>) {
        let track = self.track();
        let g = &self.elems[id];
        let tail = self.reducer().reduce(&g.tail(), Mode::Full, track);
        let lead = Poly::term(g.lc().unwrap().clone(), g.lm().unwrap().clone());
        let poly = lead.add(&tail.nf, &self.ord);
        let cert = track.then(|| {
            let mut acc = CertAcc::default();
            let one = Monomial::one();
            acc.add_scaled(&Coeff::one(), &one, &self.certs[id], &one);
            for s in tail.steps {
                acc.add_scaled(&-&s.coeff, &s.left, &self.certs[s.gen], &s.right);
            }
            acc.finish()
        });
        (poly, cert)
    }

    /// The tail-reduced active set.
    pub fn result(&self) -> GbResult {
        let ids = self.active_ids();
        let (basis, certs): (Vec<Poly>, Vec<Option<Certificate>>) =
            ids.iter().map(|&i| self.tail_reduced(i)).unzip();
        GbResult {
            basis,
            complete: self.is_complete(),
            certificates: certs.into_iter().collect(),
            stats: self.stats.clone(),
        }
    }
}

/// Widths `k` with `1 ≤ k < min(|u|, |w|)` such that the last `k` letters
/// of `u` equal the first `k` letters of `w`.
pub(crate) fn overlap_widths(u: &[crate::freealg::Var], w: &[crate::freealg::Var]) -> Vec<usize> {
    let max = u.len().min(w.len());
    (1..max).filter(|&k| u[u.len() - k..] == w[..k]).collect()
}
