//! Monomial parts of right and left ideals.
//!
//! Every letter `x_i` gets its own tag `t_i`, which commutes with the letters
//! but not with the other tags and can be cancelled from the right. The
//! right ideal is turned into a two-sided one by a prefix letter `y`, and
//! the tag-free elements `y·g` of the completed basis give the monomial part.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::freealg::{Coeff, Monomial, Poly, Ring, Term, Var};
use crate::grading::TagBlock;
use crate::groebner::{CertAcc, Certificate, Enumerator, GbConfig};
use crate::ordering::MonomialOrder;

/// Reduced word in the free group on `g_1, g_2, …`. Generator `g_i` is
/// stored as `i` and its inverse as `-i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeGroupWord(Vec<i32>);

impl FreeGroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(i: usize) -> Self {
        FreeGroupWord(vec![i as i32])
    }

    pub fn from_letters(letters: &[i32]) -> Self {
        let mut w = Self::identity();
        for &l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, l: i32) {
        debug_assert!(l != 0);
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn mul(&self, other: &FreeGroupWord) -> FreeGroupWord {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord(self.0.iter().rev().map(|l| -l).collect())
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("g{l}")
                } else {
                    format!("g{}^-1", -l)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The letters `x_1..x_n` with their tags.
#[derive(Clone, Debug)]
pub struct MonTags {
    pub letters: Vec<Var>,
    pub tags: TagBlock,
}

impl MonTags {
    fn tag_of(&self, x: Var) -> Option<usize> {
        self.letters.iter().position(|&l| l == x)
    }

    /// `x_i ↦ x_i t_i`.
    pub fn phi(&self, f: &Poly, ord: &MonomialOrder) -> Poly {
        let terms = f
            .terms()
            .iter()
            .map(|t| {
                let mut w = Vec::with_capacity(2 * t.mono.len());
                for &x in t.mono.letters() {
                    w.push(x);
                    if let Some(i) = self.tag_of(x) {
                        w.push(self.tags.t[i]);
                    }
                }
                Term::new(t.coeff.clone(), Monomial::from_slice(&w))
            })
            .collect();
        Poly::from_terms(terms, ord)
    }

    /// `μ(m)⁻¹ λ(m)` with `λ: x_i ↦ g_i` and `μ: t_i ↦ g_i, t_i⁻¹ ↦ g_i⁻¹`.
    pub fn sdeg(&self, m: &Monomial) -> FreeGroupWord {
        let mut lambda = FreeGroupWord::identity();
        let mut mu = FreeGroupWord::identity();
        for &v in m.letters() {
            if let Some(i) = self.tag_of(v) {
                lambda.push(i as i32 + 1);
            } else if let Some(i) = self.tags.t.iter().position(|&t| t == v) {
                mu.push(i as i32 + 1);
            } else if let Some(i) = self.tags.t_inv.iter().position(|&t| t == v) {
                mu.push(-(i as i32 + 1));
            }
        }
        mu.inverse().mul(&lambda)
    }

    /// `[X, T]` and `1 - t_j t_j⁻¹`.
    pub fn relations(&self, ord: &MonomialOrder) -> Vec<Poly> {
        let one = Coeff::one();
        let mut out = Vec::new();
        for &x in &self.letters {
            for &t in &self.tags.t {
                let (xm, tm) = (Monomial::letter(x), Monomial::letter(t));
                out.push(
                    Poly::from_terms(
                        vec![
                            Term::new(one.clone(), xm.concat(&tm)),
                            Term::new(-&one, tm.concat(&xm)),
                        ],
                        ord,
                    )
                    .monic(),
                );
            }
        }
        for j in 0..self.tags.k() {
            out.push(
                Poly::from_terms(
                    vec![
                        Term::new(one.clone(), Monomial::one()),
                        Term::new(
                            -&one,
                            Monomial::from_slice(&[self.tags.t[j], self.tags.t_inv[j]]),
                        ),
                    ],
                    ord,
                )
                .monic(),
            );
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Side {
    #[default]
    Right,
    /// Handled by reversing every word.
    Left,
}

/// One emitted monomial.
#[derive(Clone, Debug)]
pub struct MonElement {
    pub monomial: Monomial,
    /// 1-based position in the stream.
    pub index: usize,
    /// Whether the basis element itself was this monomial. Otherwise the
    /// monomial is its leading word.
    pub exact: bool,
    /// One-sided cofactors over `F` (`Σ c · F[j] · v` for right ideals,
    /// `Σ c · u · F[j]` for left ideals), for exact elements of tracked runs.
    pub certificate: Option<Certificate>,
}

/// Generators of `mon((F)_ρ)` (or of the left analogue), one at a time.
pub struct MonPartStream {
    base: Ring,
    ring: Ring,
    y: Var,
    tags: MonTags,
    engine: Enumerator,
    side: Side,
    num_inputs: usize,
    emitted: usize,
    cap: Option<usize>,
}

fn reverse(f: &Poly, ord: &MonomialOrder) -> Poly {
    Poly::from_terms(
        f.terms()
            .iter()
            .map(|t| Term::new(t.coeff.clone(), t.mono.reversed()))
            .collect(),
        ord,
    )
}

impl MonPartStream {
    pub fn new(f: &[Poly], base: &Ring, side: Side, cfg: GbConfig) -> Result<Self> {
        let (with_y, fresh) = base.with_bottom_letters(&["y"])?;
        let y = fresh[0];
        let letters: Vec<Var> = base.alphabet().vars().collect();
        let (ring, tags) = TagBlock::adjoin(&with_y, letters.len())?;
        let tags = MonTags { letters, tags };
        let ord = ring.order();
        let ym = Monomial::letter(y);
        let mut inputs: Vec<Poly> = f
            .iter()
            .map(|g| {
                let g = g.reorder(ord);
                let g = if side == Side::Left {
                    reverse(&g, ord)
                } else {
                    g
                };
                tags.phi(&g, ord).mul_mono_left(&ym)
            })
            .collect();
        inputs.extend(tags.relations(ord));
        let engine = Enumerator::new(&inputs, ord, cfg);
        Ok(MonPartStream {
            base: base.clone(),
            ring,
            y,
            tags,
            engine,
            side,
            num_inputs: f.len(),
            emitted: 0,
            cap: None,
        })
    }

    pub fn with_max_emitted(mut self, n: usize) -> Self {
        self.cap = Some(n);
        self
    }

    pub fn base_ring(&self) -> &Ring {
        &self.base
    }

    pub fn tagged_ring(&self) -> &Ring {
        &self.ring
    }

    pub fn tags(&self) -> &MonTags {
        &self.tags
    }

    pub fn is_complete(&self) -> bool {
        self.engine.is_complete()
    }

    pub fn engine(&self) -> &Enumerator {
        &self.engine
    }

    /// `g` if the element is `y·g` with `g` free of tags and of `y`.
    fn strip_y(&self, g: &Poly) -> Option<Poly> {
        let mut terms = Vec::with_capacity(g.len());
        for t in g.terms() {
            let (&first, rest) = t.mono.letters().split_first()?;
            if first != self.y
                || rest
                    .iter()
                    .any(|&v| v == self.y || self.tags.tags.contains(v))
            {
                return None;
            }
            terms.push(Term::new(t.coeff.clone(), Monomial::from_slice(rest)));
        }
        Some(Poly::from_terms(terms, self.ring.order()))
    }

    /// Keeps the summands `1 · yφ(F[j]) · v`, sets every tag to 1 and
    /// mirrors back for left ideals.
    fn one_sided(&self, cert: &Certificate) -> Certificate {
        let mut acc = CertAcc::default();
        for s in &cert.summands {
            if s.gen >= self.num_inputs || !s.left.is_one() || s.right.contains_var(self.y) {
                continue;
            }
            let v: Monomial = s
                .right
                .letters()
                .iter()
                .copied()
                .filter(|&v| !self.tags.tags.contains(v))
                .collect();
            match self.side {
                Side::Right => acc.add(s.coeff.clone(), Monomial::one(), s.gen, v),
                Side::Left => acc.add(s.coeff.clone(), v.reversed(), s.gen, Monomial::one()),
            }
        }
        acc.finish()
    }
}

impl Iterator for MonPartStream {
    type Item = MonElement;

    fn next(&mut self) -> Option<MonElement> {
        if self.cap.is_some_and(|c| self.emitted >= c) {
            return None;
        }
        loop {
            let id = self.engine.next_element()?;
            if self.strip_y(self.engine.element(id)).is_none() {
                continue;
            }
            let (g, cert) = self.engine.tail_reduced(id);
            let g = self
                .strip_y(&g)
                .expect("tail of a tag-free element is tag-free");
            let exact = g.is_monomial();
            let lm = g.lm().expect("nonzero").clone();
            let monomial = match self.side {
                Side::Right => lm,
                Side::Left => lm.reversed(),
            };
            self.emitted += 1;
            return Some(MonElement {
                monomial,
                index: self.emitted,
                exact,
                certificate: if exact {
                    cert.map(|c| self.one_sided(&c))
                } else {
                    None
                },
            });
        }
    }
}

/// Collects up to `max` generators of `mon((F)_ρ)`.
pub fn mon_part_right_enumerate(
    f: &[Poly],
    ring: &Ring,
    cfg: GbConfig,
    max: usize,
) -> Result<Vec<MonElement>> {
    Ok(MonPartStream::new(f, ring, Side::Right, cfg)?
        .with_max_emitted(max)
        .collect())
}

/// Collects up to `max` generators of the monomial part of `(F)_λ`.
pub fn mon_part_left_enumerate(
    f: &[Poly],
    ring: &Ring,
    cfg: GbConfig,
    max: usize,
) -> Result<Vec<MonElement>> {
    Ok(MonPartStream::new(f, ring, Side::Left, cfg)?
        .with_max_emitted(max)
        .collect())
}

/// For a complete basis `G` in which every leading word lies in `⟨X⟩` and
/// every tail in `K⟨Y⟩`, the monomials of `G` in `⟨X⟩` form a basis of the
/// monomial part of `(G)`.
pub fn mon_part_two_sided_special(
    g: &[Poly],
    x_part: &[Var],
    y_part: &[Var],
    ring: &Ring,
) -> Result<Vec<Poly>> {
    if let Some(v) = x_part.iter().find(|v| y_part.contains(v)) {
        return Err(Error::Input(format!(
            "`{}` is in both letter sets",
            ring.alphabet().name(*v)
        )));
    }
    let within = |m: &Monomial, part: &[Var]| m.letters().iter().all(|v| part.contains(v));
    let mut out = Vec::new();
    for p in g {
        let p = p.reorder(ring.order());
        let Some(lm) = p.lm() else { continue };
        let tail = p.tail();
        if !within(lm, x_part) || !tail.support().all(|m| within(m, y_part)) {
            return Err(Error::SplitHypothesis(ring.show(&p)));
        }
        if tail.is_zero() {
            out.push(p.monic());
        }
    }
    Ok(out)
}

/// Monomial parts of general two-sided ideals are not computed.
pub fn two_sided_guard(_f: &[Poly]) -> Result<Vec<Poly>> {
    Err(Error::Unsupported(
        "the monomial part of a two-sided ideal cannot be computed with tags; only right and left ideals and split bases are supported".into(),
    ))
}

/// Two-sided requests: split bases go to [`mon_part_two_sided_special`],
/// everything else is refused.
pub fn mon_part_two_sided(
    g: &[Poly],
    split: Option<(&[Var], &[Var])>,
    ring: &Ring,
) -> Result<Vec<Poly>> {
    match split {
        Some((x, y)) => mon_part_two_sided_special(g, x, y, ring),
        None => two_sided_guard(g),
    }
}
