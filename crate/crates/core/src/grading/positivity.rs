//! Search for a factorisation `p ≡ q*·q` modulo an ideal.

use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::freealg::{Alphabet, Coeff, Monomial, Poly, Ring, Term, Var};
use crate::groebner::{buchberger_enumerate, CertAcc, Certificate, GbConfig};

use super::{rational_sqrt, GradingMatrix, HomElement, HomPartStream};

#[derive(Clone, Debug)]
pub struct PositivityConfig {
    pub gb: GbConfig,
    /// Maximal number of tag-free elements to scan.
    pub max_emitted: usize,
    /// Replace `F + (v - p)` by its reduced Groebner basis before the scan.
    pub reduce_first: bool,
}

impl Default for PositivityConfig {
    fn default() -> Self {
        PositivityConfig {
            gb: GbConfig::unbounded(),
            max_emitted: 1000,
            reduce_first: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PositivityFound {
    /// `q = √c · w`.
    pub q: Poly,
    pub word: Monomial,
    pub coeff: Coeff,
    /// The element `v - c·w*·w`, over the extended ring.
    pub element: Poly,
    /// Number of tag-free elements emitted when the element was recognised.
    pub index: usize,
    /// Number of elements added by the enumerator at that point.
    pub engine_index: usize,
    /// Size of the reduced basis used as input, if one was computed.
    pub input_basis: Option<usize>,
    /// `p - q*·q = Σ c · u · F[j] · v`, when certificates were tracked.
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug)]
pub enum PositivityOutcome {
    Found(PositivityFound),
    /// `v - c·w*·w` was found, but `√c` is irrational.
    Raw {
        element: Poly,
        word: Monomial,
        coeff: Coeff,
        index: usize,
    },
    Exhausted {
        emitted: usize,
        complete: bool,
    },
}

impl PositivityOutcome {
    pub fn found(&self) -> Option<&PositivityFound> {
        match self {
            PositivityOutcome::Found(f) => Some(f),
            _ => None,
        }
    }
}

/// `Some(w)` if `m = w*·w`.
pub fn symmetric_factor(m: &Monomial, alphabet: &Alphabet) -> Option<Monomial> {
    let n = m.len();
    if n == 0 || !n.is_multiple_of(2) {
        return None;
    }
    let w = m.subword(n / 2, n);
    let ws = alphabet.adjoint_word(&w).ok()?;
    (ws == m.subword(0, n / 2)).then_some(w)
}

/// Adjoins `v` above all letters, grades every adjoint pair by `±e_i` and
/// `v` by zero, and scans the homogeneous part of `F + (v - p)` for an
/// element `v - c·w*·w` with `c > 0`.
pub fn positivity_search(
    f: &[Poly],
    p: &Poly,
    ring: &Ring,
    cfg: &PositivityConfig,
) -> Result<PositivityOutcome> {
    let (ext, fresh) = ring.with_top_letters(&["v"])?;
    let v = fresh[0];
    let ord = ext.order();
    let a = GradingMatrix::positivity(ext.alphabet(), &[v])?;
    let mut gens: Vec<Poly> = f.iter().map(|g| g.reorder(ord)).collect();
    gens.push(Poly::var(v).sub(&p.reorder(ord), ord));
    let track = cfg.gb.certificates;
    // certificates of the stream inputs over `gens`
    let (inputs, over, input_basis) = if cfg.reduce_first {
        let gb_cfg = GbConfig {
            degree_bound: cfg.gb.degree_bound,
            max_iterations: cfg.gb.max_iterations,
            ..GbConfig::unbounded()
        };
        let gb = buchberger_enumerate(&gens, ord, if track { gb_cfg.certified() } else { gb_cfg });
        let n = gb.basis.len();
        (gb.basis, gb.certificates, Some(n))
    } else {
        (gens.clone(), None, None)
    };
    let mut stream =
        HomPartStream::new(&inputs, &a, &ext, cfg.gb.clone())?.with_max_emitted(cfg.max_emitted);
    let mut raw = None;
    let mut last = 0;
    let mut with_v: Vec<HomElement> = Vec::new();
    while let Some(el) = stream.next() {
        last = el.index;
        if el.poly.lm() == Some(&Monomial::letter(v)) {
            with_v.push(el);
        }
        // later elements may reduce the tails of earlier ones
        for el in &with_v {
            let (g, cert) = stream.tail_reduced(el);
            let Some((w, c)) = v_shape(&g, v, ext.alphabet()) else {
                continue;
            };
            let Some(r) = rational_sqrt(&c) else {
                raw.get_or_insert(PositivityOutcome::Raw {
                    element: g,
                    word: w,
                    coeff: c,
                    index: el.index,
                });
                continue;
            };
            let certificate = match (cert, &over) {
                (Some(cert), Some(over)) => Some(cert.compose(over)?),
                (cert, _) => cert,
            }
            .map(|cert| substitute_v(&cert, v, p, f.len(), ring));
            return Ok(PositivityOutcome::Found(PositivityFound {
                q: Poly::term(r, w.clone()),
                word: w,
                coeff: c,
                element: g,
                index: last,
                engine_index: stream.engine().elements().len(),
                input_basis,
                certificate,
            }));
        }
    }
    Ok(raw.unwrap_or(PositivityOutcome::Exhausted {
        emitted: last,
        complete: stream.is_complete(),
    }))
}

/// `g = v - c·w*·w` with `c > 0`.
fn v_shape(g: &Poly, v: Var, alphabet: &Alphabet) -> Option<(Monomial, Coeff)> {
    let [head, rest] = g.terms() else {
        return None;
    };
    if head.mono != Monomial::letter(v) || rest.mono.contains_var(v) {
        return None;
    }
    let c = -(&rest.coeff / &head.coeff);
    if !c.is_positive() {
        return None;
    }
    let w = symmetric_factor(&rest.mono, alphabet)?;
    Some((w, c))
}

/// Replaces `v` by `p` in the cofactors and drops the summands of `v - p`.
fn substitute_v(cert: &Certificate, v: Var, p: &Poly, num_f: usize, ring: &Ring) -> Certificate {
    let ord = ring.order();
    let expand = |m: &Monomial| -> Vec<Term> {
        if !m.contains_var(v) {
            return vec![Term::new(Coeff::one(), m.clone())];
        }
        Poly::mono(m.clone())
            .substitute(|x| if x == v { p.clone() } else { Poly::var(x) }, ord)
            .into_terms()
    };
    let mut acc = CertAcc::default();
    for s in cert.summands.iter().filter(|s| s.gen < num_f) {
        let (ls, rs) = (expand(&s.left), expand(&s.right));
        for l in &ls {
            for r in &rs {
                let c = &s.coeff * &l.coeff * &r.coeff;
                if !c.is_zero() {
                    acc.add(c, l.mono.clone(), s.gen, r.mono.clone());
                }
            }
        }
    }
    acc.finish()
}
