//! Integer matrix gradings of the free algebra and homogeneous parts.
//!
//! A grading assigns each letter a row vector in `ℤ^k`; the degree of a word
//! is the sum of the rows of its letters. The homogeneous part of an ideal is
//! computed by adjoining commuting, invertible tags `t_j`, `t_j⁻¹`, mapping
//! every letter `x` to `x·τ(deg x)`, and eliminating the tags.

mod hom;
mod positivity;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use hom::{hom_part_enumerate, HomElement, HomPartStream};
pub use positivity::{
    positivity_search, symmetric_factor, PositivityConfig, PositivityFound, PositivityOutcome,
};

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, Coeff, Monomial, Poly, Ring, Term, Var};
use crate::ordering::MonomialOrder;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DegVector(pub Vec<i64>);

impl DegVector {
    pub fn zero(k: usize) -> Self {
        DegVector(vec![0; k])
    }

    pub fn add(&self, other: &DegVector) -> DegVector {
        DegVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> DegVector {
        DegVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

/// One integer row per graded letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingMatrix {
    k: usize,
    rows: Vec<Option<Vec<i64>>>,
    names: Vec<String>,
}

impl GradingMatrix {
    pub fn new(k: usize) -> Self {
        GradingMatrix {
            k,
            rows: Vec::new(),
            names: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn set_row(&mut self, v: Var, row: Vec<i64>, alphabet: &Alphabet) -> Result<()> {
        if row.len() != self.k {
            return Err(Error::Grading(format!(
                "row for `{}` has {} entries, expected {}",
                alphabet.name(v),
                row.len(),
                self.k
            )));
        }
        let i = v.idx();
        if self.rows.len() <= i {
            self.rows.resize(i + 1, None);
            self.names.resize(i + 1, String::new());
        }
        self.rows[i] = Some(row);
        self.names[i] = alphabet.name(v).to_string();
        Ok(())
    }

    /// Builds a matrix from rational rows, clearing all denominators by
    /// their least common multiple.
    pub fn from_rational(
        k: usize,
        rows: &[(Var, Vec<Coeff>)],
        alphabet: &Alphabet,
    ) -> Result<Self> {
        let mut l = num_bigint::BigInt::one();
        for (_, r) in rows {
            for c in r {
                l = l.lcm(c.denom());
            }
        }
        let mut m = GradingMatrix::new(k);
        for (v, r) in rows {
            let ints = r
                .iter()
                .map(|c| {
                    (c.numer() * (&l / c.denom()))
                        .to_i64()
                        .ok_or_else(|| Error::Grading("entry out of range".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            m.set_row(*v, ints, alphabet)?;
        }
        Ok(m)
    }

    /// `deg(x_i) = e_i`, `deg(x_i*) = -e_i` for every adjoint pair, and zero
    /// for self-adjoint letters and for `zero_letters`.
    pub fn positivity(alphabet: &Alphabet, zero_letters: &[Var]) -> Result<Self> {
        let pairs: Vec<Var> = alphabet
            .vars()
            .filter(|&v| {
                let s = alphabet.symbol(v);
                !zero_letters.contains(&v) && !s.is_adjoint && s.partner.is_some_and(|p| p != v)
            })
            .collect();
        let k = pairs.len();
        let mut m = GradingMatrix::new(k);
        for v in alphabet.vars() {
            let s = alphabet.symbol(v);
            let mut row = vec![0i64; k];
            if zero_letters.contains(&v) || s.partner == Some(v) {
            } else if let Some(i) = pairs.iter().position(|&p| p == v) {
                row[i] = 1;
            } else if let Some(i) = s.partner.and_then(|p| pairs.iter().position(|&q| q == p)) {
                row[i] = -1;
            } else {
                return Err(Error::Grading(format!(
                    "`{}` has no adjoint partner",
                    alphabet.name(v)
                )));
            }
            m.set_row(v, row, alphabet)?;
        }
        Ok(m)
    }

    pub fn row(&self, v: Var) -> Result<&[i64]> {
        self.rows
            .get(v.idx())
            .and_then(|r| r.as_deref())
            .ok_or_else(|| Error::Ungraded(format!("#{}", v.idx())))
    }

    pub fn is_graded(&self, v: Var) -> bool {
        self.rows.get(v.idx()).is_some_and(|r| r.is_some())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.rows
            .iter()
            .flatten()
            .all(|r| r.iter().all(|&a| a >= 0))
    }

    /// Same matrix multiplied by `c`.
    pub fn scaled(&self, c: i64) -> Self {
        let mut m = self.clone();
        for r in m.rows.iter_mut().flatten() {
            for a in r.iter_mut() {
                *a *= c;
            }
        }
        m
    }

    pub fn deg(&self, m: &Monomial) -> Result<DegVector> {
        deg_a(self, m)
    }
}

/// `deg_A(m)`: the sum of the rows of the letters of `m`.
pub fn deg_a(a: &GradingMatrix, m: &Monomial) -> Result<DegVector> {
    let mut d = vec![0i64; a.k];
    for &x in m.letters() {
        let row = a.row(x)?;
        for (di, ri) in d.iter_mut().zip(row) {
            *di += ri;
        }
    }
    Ok(DegVector(d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial.
    Any,
    Of(DegVector),
    Not,
}

pub fn is_homogeneous(a: &GradingMatrix, f: &Poly) -> Result<Homogeneity> {
    let mut common: Option<DegVector> = None;
    for m in f.support() {
        let d = deg_a(a, m)?;
        match &common {
            None => common = Some(d),
            Some(c) if *c != d => return Ok(Homogeneity::Not),
            _ => {}
        }
    }
    Ok(match common {
        None => Homogeneity::Any,
        Some(d) => Homogeneity::Of(d),
    })
}

/// The tag letters `t_1..t_k` and their formal inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TagBlock {
    pub t: Vec<Var>,
    pub t_inv: Vec<Var>,
}

impl TagBlock {
    /// Extends `base` by `t_j`, `t_j⁻¹` as a new highest block in which the
    /// letters ascend as `t_1, t_1⁻¹, t_2, …`.
    pub fn adjoin(base: &Ring, k: usize) -> Result<(Ring, TagBlock)> {
        let mut names = Vec::with_capacity(2 * k);
        for j in 1..=k {
            names.push(format!("t{j}"));
            names.push(format!("t{j}inv"));
        }
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let (ring, fresh) = base.with_top_letters(&refs)?;
        let t = fresh.iter().step_by(2).copied().collect();
        let t_inv = fresh.iter().skip(1).step_by(2).copied().collect();
        Ok((ring, TagBlock { t, t_inv }))
    }

    pub fn k(&self) -> usize {
        self.t.len()
    }

    pub fn all(&self) -> Vec<Var> {
        self.t.iter().chain(&self.t_inv).copied().collect()
    }

    pub fn contains(&self, v: Var) -> bool {
        self.t.contains(&v) || self.t_inv.contains(&v)
    }
}

/// `τ(α) = s_1^{|α_1|} ⋯ s_k^{|α_k|}` with `s_j = t_j` for `α_j ≥ 0` and
/// `t_j⁻¹` otherwise.
pub fn tau(alpha: &DegVector, tags: &TagBlock) -> Monomial {
    let mut w = Vec::new();
    for (j, &a) in alpha.0.iter().enumerate() {
        let s = if a >= 0 { tags.t[j] } else { tags.t_inv[j] };
        w.extend(std::iter::repeat_n(s, a.unsigned_abs() as usize));
    }
    Monomial::from_slice(&w)
}

/// The substitution `x ↦ x·τ(a_x)`.
pub fn phi_a(a: &GradingMatrix, f: &Poly, tags: &TagBlock, ord: &MonomialOrder) -> Result<Poly> {
    let mut terms = Vec::with_capacity(f.len());
    for t in f.terms() {
        let mut w = Vec::new();
        for &x in t.mono.letters() {
            w.push(x);
            let row = a.row(x)?;
            w.extend_from_slice(tau(&DegVector(row.to_vec()), tags).letters());
        }
        terms.push(Term::new(t.coeff.clone(), Monomial::from_slice(&w)));
    }
    Ok(Poly::from_terms(terms, ord))
}

/// Generators of the tag relations: `[X ∪ T ∪ T⁻¹, T ∪ T⁻¹]` and
/// `1 - t_j t_j⁻¹`, or the smaller `[X ∪ T, T]` and `1 - t_j t_j⁻¹` when
/// the grading is nonnegative.
pub fn tag_relations(
    base_letters: &[Var],
    tags: &TagBlock,
    nonnegative: bool,
    ord: &MonomialOrder,
) -> Vec<Poly> {
    let right: Vec<Var> = if nonnegative {
        tags.t.clone()
    } else {
        tags.all()
    };
    let mut left: Vec<Var> = base_letters.to_vec();
    left.extend(right.iter().copied());
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &y in &left {
        for &z in &right {
            if y == z || !seen.insert((y.min(z), y.max(z))) {
                continue;
            }
            let (ym, zm) = (Monomial::letter(y), Monomial::letter(z));
            out.push(Poly::from_terms(
                vec![
                    Term::new(Coeff::one(), ym.concat(&zm)),
                    Term::new(-Coeff::one(), zm.concat(&ym)),
                ],
                ord,
            ));
        }
    }
    for j in 0..tags.k() {
        out.push(Poly::from_terms(
            vec![
                Term::new(Coeff::one(), Monomial::one()),
                Term::new(
                    -Coeff::one(),
                    Monomial::from_slice(&[tags.t[j], tags.t_inv[j]]),
                ),
            ],
            ord,
        ));
    }
    out.into_iter().map(|p| p.monic()).collect()
}

/// Rational square root, if it exists.
pub(crate) fn rational_sqrt(c: &Coeff) -> Option<Coeff> {
    if c.is_negative() {
        return None;
    }
    if c.is_zero() {
        return Some(Coeff::zero());
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    (&n * &n == *c.numer() && &d * &d == *c.denom()).then(|| Coeff::new(n, d))
}

#[cfg(test)]
mod tests;
