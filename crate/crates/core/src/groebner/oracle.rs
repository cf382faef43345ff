//! Degree-bounded ideal membership by linear algebra.
//!
//! Every multiple `u·g·v` with `|u| + |lm(g)| + |v| ≤ d` is put into a
//! lead-reduced echelon form; the target is then lead-reduced against it.
//! This path shares nothing with the completion engine.

use num_traits::One;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::freealg::{Coeff, Monomial, Poly, Var};
use crate::ordering::MonomialOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleAnswer {
    MemberUpToD,
    NotWitnessedUpToD,
}

struct Echelon<'a> {
    ord: &'a MonomialOrder,
    rows: FxHashMap<Monomial, Poly>,
}

impl Echelon<'_> {
    fn lead_reduce(&self, mut f: Poly) -> Poly {
        while let Some(lm) = f.lm() {
            let Some(row) = self.rows.get(lm) else { break };
            let c = f.lc().unwrap().clone();
            f = f.sub(&row.scale(&c), self.ord);
        }
        f
    }

    fn insert(&mut self, f: Poly) {
        let f = self.lead_reduce(f);
        if !f.is_zero() {
            let f = f.scale(&(Coeff::one() / f.lc().unwrap()));
            self.rows.insert(f.lm().unwrap().clone(), f);
        }
    }
}

fn words_up_to(letters: &[Var], max: usize) -> Vec<Vec<Monomial>> {
    let mut by_len = vec![vec![Monomial::one()]];
    for k in 1..=max {
        let next: Vec<Monomial> = by_len[k - 1]
            .iter()
            .flat_map(|w| letters.iter().map(move |&x| w.concat(&Monomial::letter(x))))
            .collect();
        by_len.push(next);
    }
    by_len
}

/// Decides whether `f` lies in the span of the multiples `u·g·v` of `gens`
/// with `|u| + |lm(g)| + |v| ≤ d`, over all words of the order's alphabet.
pub fn membership_oracle(
    f: &Poly,
    gens: &[Poly],
    d: usize,
    ord: &MonomialOrder,
) -> Result<OracleAnswer> {
    membership_oracle_scoped(f, gens, d, ord, |_, _, _| true)
}

/// As [`membership_oracle`], restricted to multiples accepted by `keep`.
/// A positive answer remains conclusive.
pub fn membership_oracle_scoped(
    f: &Poly,
    gens: &[Poly],
    d: usize,
    ord: &MonomialOrder,
    keep: impl Fn(&Monomial, usize, &Monomial) -> bool,
) -> Result<OracleAnswer> {
    let f = f.reorder(ord);
    if f.degree() > d {
        return Err(Error::DegreeTooSmall {
            bound: d,
            degree: f.degree(),
        });
    }
    let letters: Vec<Var> = (0..ord.num_vars()).map(|i| Var(i as u16)).collect();
    let mut ech = Echelon {
        ord,
        rows: FxHashMap::default(),
    };
    let lens: Vec<usize> = gens
        .iter()
        .filter_map(|g| g.lm().map(|m| m.len()))
        .collect();
    let spare = lens.iter().map(|&l| d.saturating_sub(l)).max().unwrap_or(0);
    let words = words_up_to(&letters, spare);
    for (j, g) in gens.iter().enumerate() {
        let Some(lm) = g.lm() else { continue };
        if lm.len() > d {
            continue;
        }
        let g = g.reorder(ord);
        let room = d - lm.len();
        for lu in 0..=room {
            for u in &words[lu] {
                for by_len in &words[..=room - lu] {
                    for v in by_len {
                        if keep(u, j, v) {
                            ech.insert(g.sandwich(u, v));
                        }
                    }
                }
            }
        }
    }
    Ok(if ech.lead_reduce(f).is_zero() {
        OracleAnswer::MemberUpToD
    } else {
        OracleAnswer::NotWitnessedUpToD
    })
}
