//! Right reduction: only right multiples `g · b` are subtracted.

use super::certificate::{CertAcc, Certificate};
use super::reduce::{index_of, Mode, Reducer};
use super::tail_reduce;
use crate::freealg::Poly;
use crate::ordering::MonomialOrder;

/// Right normal form of `f` modulo `gens`; the certificate only uses empty
/// left cofactors.
pub fn right_normal_form(f: &Poly, gens: &[Poly], ord: &MonomialOrder) -> (Poly, Certificate) {
    let gens: Vec<Poly> = gens.iter().map(|g| g.reorder(ord)).collect();
    let ix = index_of(&gens);
    let r = Reducer {
        polys: &gens,
        index: &ix,
        ord,
    }
    .reduce(&f.reorder(ord), Mode::Right, true);
    let mut acc = CertAcc::default();
    for s in r.steps {
        acc.add(s.coeff, s.left, s.gen, s.right);
    }
    (r.nf, acc.finish())
}

fn right_reduce(f: &Poly, set: &[Poly], ord: &MonomialOrder) -> Poly {
    let ix = index_of(set);
    Reducer {
        polys: set,
        index: &ix,
        ord,
    }
    .reduce(f, Mode::Right, false)
    .nf
}

/// The reduced right Groebner basis of the right ideal generated by `gens`,
/// sorted by leading monomial.
pub fn right_interreduce(gens: &[Poly], ord: &MonomialOrder) -> Vec<Poly> {
    let mut queue: Vec<Poly> = gens
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.reorder(ord))
        .collect();
    let mut set: Vec<Poly> = Vec::new();
    loop {
        queue.sort_by(|f, g| ord.compare(g.lm().unwrap(), f.lm().unwrap()));
        let Some(f) = queue.pop() else { break };
        let h = right_reduce(&f, &set, ord);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        let lm = h.lm().unwrap().clone();
        let (kicked, kept): (Vec<Poly>, Vec<Poly>) = set
            .into_iter()
            .partition(|g| lm.right_cofactor(g.lm().unwrap()).is_some());
        set = kept;
        queue.extend(kicked);
        set.push(h);
    }
    tail_reduce(&set, ord, Mode::Right)
}
