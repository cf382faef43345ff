//! Intersections of two-sided and right ideals.
//!
//! A two-sided ideal is turned into a right ideal through the right
//! Groebner basis `ρ(I)`: all products `m·g` with `g` in the reduced basis
//! such that every proper prefix of `m·lm(g)` is irreducible. `ρ(I)` is
//! finite only for zero-dimensional ideals, so it is enumerated up to a
//! degree bound, optionally keeping only products compatible with a quiver.

use num_traits::One;

use crate::error::{Error, Result};
use crate::freealg::{Coeff, Monomial, Poly, Ring, Term, Var};
use crate::groebner::{
    buchberger_enumerate, index_of, right_interreduce, GbConfig, GbResult, Mode, Reducer,
};
use crate::ordering::MonomialOrder;
use crate::quiver::Quiver;

#[derive(Clone, Copy, Debug, Default)]
pub struct RhoConfig<'a> {
    /// Largest `|lm(m·g)|` enumerated.
    pub degree_bound: usize,
    pub quiver: Option<&'a Quiver>,
}

#[derive(Clone, Debug)]
pub struct RhoResult {
    pub elements: Vec<Poly>,
    /// True if `ρ(I)` provably has no element beyond the bound.
    pub exhaustive: bool,
}

fn tagged(ring: &Ring) -> Result<(Ring, Var)> {
    let (r, t) = ring.with_top_letters(&["t"])?;
    Ok((r, t[0]))
}

/// Right Groebner basis of `(F)_ρ ∩ (G)_ρ`.
pub fn intersect_right_right(f: &[Poly], g: &[Poly], ring: &Ring) -> Result<Vec<Poly>> {
    let (tr, t) = tagged(ring)?;
    let ord = tr.order();
    let tm = Monomial::letter(t);
    let mut h: Vec<Poly> = f
        .iter()
        .map(|p| p.reorder(ord).mul_mono_left(&tm))
        .collect();
    for p in g {
        let p = p.reorder(ord);
        h.push(p.sub(&p.mul_mono_left(&tm), ord));
    }
    Ok(right_interreduce(&h, ord)
        .into_iter()
        .filter(|p| !p.contains_var(t))
        .map(|p| p.reorder(ring.order()))
        .collect())
}

/// Groebner basis enumeration of `(F) ∩ (G)` through a commuting tag.
pub fn intersect_two_two(f: &[Poly], g: &[Poly], ring: &Ring, cfg: GbConfig) -> Result<GbResult> {
    let (tr, t) = tagged(ring)?;
    let ord = tr.order();
    let tm = Monomial::letter(t);
    let mut h: Vec<Poly> = f
        .iter()
        .map(|p| p.reorder(ord).mul_mono_left(&tm))
        .collect();
    for p in g {
        let p = p.reorder(ord);
        h.push(p.sub(&p.mul_mono_left(&tm), ord));
    }
    for x in ring.alphabet().vars() {
        let xm = Monomial::letter(x);
        h.push(Poly::from_terms(
            vec![
                Term::new(Coeff::one(), tm.concat(&xm)),
                Term::new(-Coeff::one(), xm.concat(&tm)),
            ],
            ord,
        ));
    }
    let mut res = buchberger_enumerate(
        &h,
        ord,
        GbConfig {
            certificates: false,
            ..cfg
        },
    );
    res.basis = res
        .basis
        .into_iter()
        .filter(|p| !p.contains_var(t))
        .map(|p| p.reorder(ring.order()))
        .collect();
    res.basis
        .sort_by(|p, q| ring.order().compare(p.lm().unwrap(), q.lm().unwrap()));
    Ok(res)
}

/// Checks that `gens` is a reduced Groebner basis in the structural sense:
/// monic, no leading word inside another, no tail monomial reducible.
pub fn check_reduced(gens: &[Poly], ord: &MonomialOrder) -> Result<()> {
    let ix = index_of(gens);
    for (i, g) in gens.iter().enumerate() {
        let lm = g
            .lm()
            .ok_or_else(|| Error::NotReduced("zero polynomial".into()))?;
        if !g.lc().unwrap().is_one() {
            return Err(Error::NotReduced(format!("element {i} is not monic")));
        }
        if !g.is_normalized(ord) {
            return Err(Error::NotReduced(format!(
                "element {i} is not sorted by the order"
            )));
        }
        for (j, h) in gens.iter().enumerate() {
            if i != j && h.lm().unwrap().divides_at(lm).is_some() {
                return Err(Error::NotReduced(format!(
                    "leading word of element {j} divides that of element {i}"
                )));
            }
        }
        for t in g.terms().iter().skip(1) {
            if let Some((j, _)) = ix.find(t.mono.letters()) {
                return Err(Error::NotReduced(format!(
                    "tail of element {i} is reducible by element {j}"
                )));
            }
        }
    }
    Ok(())
}

/// Irreducible words of length `len`, given those of length `len - 1`.
fn extend_irreducible(
    prev: &[Monomial],
    letters: &[Var],
    is_reducible: impl Fn(&[Var]) -> bool,
) -> Vec<Monomial> {
    let mut out = Vec::new();
    for w in prev {
        for &x in letters {
            let m = w.concat(&Monomial::letter(x));
            if !is_reducible(m.letters()) {
                out.push(m);
            }
        }
    }
    out
}

/// Letters sorted by ascending rank.
fn letters_by_rank(ord: &MonomialOrder) -> Vec<Var> {
    ord.precedence()
}

/// `ρ^(d)(I)`, or `ρ^(d)_Q(I)` if a quiver is given, from the reduced
/// Groebner basis `g` of `I`.
pub fn rho_enumerate(g: &[Poly], ord: &MonomialOrder, cfg: RhoConfig<'_>) -> Result<RhoResult> {
    let g: Vec<Poly> = g.iter().map(|p| p.reorder(ord)).collect();
    check_reduced(&g, ord)?;
    let ix = index_of(&g);
    // a word is reducible iff some leading word occurs in it; prefixes of
    // enumerated words are irreducible, so only suffixes need checking
    let ends_reducible = |w: &[Var]| {
        (0..w.len()).any(|p| {
            ix.find_prefix(&w[p..])
                .is_some_and(|(_, l)| p + l == w.len())
        })
    };
    let letters = letters_by_rank(ord);
    let d = cfg.degree_bound;
    let mut order: Vec<usize> = (0..g.len()).collect();
    order.sort_by(|&i, &j| ord.compare(g[i].lm().unwrap(), g[j].lm().unwrap()));
    let min_lm = g.iter().map(|p| p.lm().unwrap().len()).min().unwrap_or(0);
    let mut elements = Vec::new();
    let mut level = vec![Monomial::one()];
    let mut len = 0;
    let mut exhaustive = true;
    loop {
        for m in &level {
            for &i in &order {
                let lm = g[i].lm().unwrap();
                if lm.is_one() {
                    // I is the whole algebra and ρ(I) = {1}
                    if m.is_one() {
                        elements.push(g[i].clone());
                    }
                    continue;
                }
                // the longest proper prefix of m·lm(g) must be irreducible
                let w = m.concat(lm);
                let head = &w.letters()[..w.len() - 1];
                if (len..head.len()).any(|k| ends_reducible(&head[..=k])) {
                    continue;
                }
                if len + lm.len() > d {
                    exhaustive = false;
                    continue;
                }
                let p = g[i].mul_mono_left(m);
                if let Some(q) = cfg.quiver {
                    if !q.is_compatible(&p).compatible {
                        continue;
                    }
                }
                elements.push(p);
            }
        }
        if level.is_empty() || g.is_empty() || min_lm == 0 {
            break;
        }
        let mut next = extend_irreducible(&level, &letters, ends_reducible);
        if len + 1 + min_lm > d {
            // longer prefixes may still carry elements
            if !next.is_empty() {
                exhaustive = false;
            }
            break;
        }
        next.sort_by(|a, b| ord.compare(a, b));
        level = next;
        len += 1;
    }
    Ok(RhoResult {
        elements,
        exhaustive,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroDim {
    /// The quotient is finite dimensional with the given monomial basis.
    ZeroDimensional(Vec<Monomial>),
    NotZeroDimensional,
    Unknown,
}

/// Aho–Corasick automaton over the leading words.
struct Automaton {
    delta: Vec<Vec<usize>>,
    accepting: Vec<bool>,
}

impl Automaton {
    fn new(words: &[&Monomial], nletters: usize) -> Self {
        let mut goto: Vec<Vec<Option<usize>>> = vec![vec![None; nletters]];
        let mut accepting = vec![false];
        for w in words {
            let mut s = 0;
            for &x in w.letters() {
                s = match goto[s][x.idx()] {
                    Some(n) => n,
                    None => {
                        goto.push(vec![None; nletters]);
                        accepting.push(false);
                        let n = goto.len() - 1;
                        goto[s][x.idx()] = Some(n);
                        n
                    }
                };
            }
            accepting[s] = true;
        }
        let n = goto.len();
        let mut delta = vec![vec![0usize; nletters]; n];
        let mut fail = vec![0usize; n];
        let mut queue = std::collections::VecDeque::new();
        for x in 0..nletters {
            match goto[0][x] {
                Some(c) => {
                    delta[0][x] = c;
                    queue.push_back(c);
                }
                None => delta[0][x] = 0,
            }
        }
        while let Some(s) = queue.pop_front() {
            accepting[s] = accepting[s] || accepting[fail[s]];
            for x in 0..nletters {
                match goto[s][x] {
                    Some(c) => {
                        fail[c] = delta[fail[s]][x];
                        delta[s][x] = c;
                        queue.push_back(c);
                    }
                    None => delta[s][x] = delta[fail[s]][x],
                }
            }
        }
        Automaton { delta, accepting }
    }

    /// Whether a cycle of non-accepting states is reachable from the start.
    fn has_live_cycle(&self) -> bool {
        let n = self.delta.len();
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; n];
        let mut stack: Vec<(usize, usize)> = Vec::new();
        if self.accepting[0] {
            return false;
        }
        stack.push((0, 0));
        state[0] = 1;
        while let Some(&mut (s, ref mut next)) = stack.last_mut() {
            if *next == self.delta[s].len() {
                state[s] = 2;
                stack.pop();
                continue;
            }
            let t = self.delta[s][*next];
            *next += 1;
            if self.accepting[t] {
                continue;
            }
            match state[t] {
                1 => return true,
                0 => {
                    state[t] = 1;
                    stack.push((t, 0));
                }
                _ => {}
            }
        }
        false
    }
}

/// Decides whether `K⟨X⟩/I` is finite dimensional, given a Groebner basis
/// of `I`. Without completeness nothing is concluded.
pub fn zero_dimensionality_probe(g: &[Poly], complete: bool, ord: &MonomialOrder) -> ZeroDim {
    if !complete {
        return ZeroDim::Unknown;
    }
    let lms: Vec<&Monomial> = g.iter().filter_map(|p| p.lm()).collect();
    let aut = Automaton::new(&lms, ord.num_vars());
    if aut.has_live_cycle() {
        return ZeroDim::NotZeroDimensional;
    }
    if aut.accepting[0] {
        return ZeroDim::ZeroDimensional(Vec::new());
    }
    let letters = letters_by_rank(ord);
    let mut basis = vec![Monomial::one()];
    let mut level = vec![(Monomial::one(), 0usize)];
    while !level.is_empty() {
        let mut next = Vec::new();
        for (w, s) in &level {
            for &x in &letters {
                let t = aut.delta[*s][x.idx()];
                if !aut.accepting[t] {
                    next.push((w.concat(&Monomial::letter(x)), t));
                }
            }
        }
        next.sort_by(|a, b| ord.compare(&a.0, &b.0));
        basis.extend(next.iter().map(|(w, _)| w.clone()));
        level = next;
    }
    ZeroDim::ZeroDimensional(basis)
}

#[derive(Clone, Debug)]
pub struct MixedResult {
    pub basis: Vec<Poly>,
    /// Set when the two-sided basis was incomplete or `ρ` was truncated, so
    /// that `basis` only generates a subideal of the intersection.
    pub approximate: bool,
    pub gb_complete: bool,
    pub gb_size: usize,
    pub rho_size: usize,
}

/// Right Groebner basis of `(ρ^(d)_Q(F))_ρ ∩ (G)_ρ`.
pub fn intersect_mixed(
    f: &[Poly],
    g_right: &[Poly],
    ring: &Ring,
    rho: RhoConfig<'_>,
    gb: GbConfig,
) -> Result<MixedResult> {
    let res = buchberger_enumerate(
        f,
        ring.order(),
        GbConfig {
            certificates: false,
            ..gb
        },
    );
    let r = rho_enumerate(&res.basis, ring.order(), rho)?;
    let basis = intersect_right_right(&r.elements, g_right, ring)?;
    Ok(MixedResult {
        basis,
        approximate: !res.complete || !r.exhaustive,
        gb_complete: res.complete,
        gb_size: res.basis.len(),
        rho_size: r.elements.len(),
    })
}

/// Splits `g` into the terms `γ·a·x·b` (collected into `x`), the `c` term,
/// and the remaining terms.
fn split_pattern(
    g: &Poly,
    a: &Monomial,
    b: &Monomial,
    c: &Monomial,
) -> (Vec<Term>, Coeff, Vec<Term>) {
    let mut mids = Vec::new();
    let mut cc = Coeff::from_integer(0.into());
    let mut bad = Vec::new();
    for t in g.terms() {
        let w = t.mono.letters();
        if &t.mono == c {
            cc = t.coeff.clone();
        } else if w.len() >= a.len() + b.len()
            && w.starts_with(a.letters())
            && w.ends_with(b.letters())
        {
            let mid = Monomial::from_slice(&w[a.len()..w.len() - b.len()]);
            mids.push(Term::new(t.coeff.clone(), mid));
        } else {
            bad.push(t.clone());
        }
    }
    (mids, cc, bad)
}

fn solution_of(
    g: &Poly,
    a: &Monomial,
    b: &Monomial,
    c: &Monomial,
    ord: &MonomialOrder,
) -> Option<Poly> {
    let (mids, cc, bad) = split_pattern(g, a, b, c);
    if !bad.is_empty() || cc == Coeff::from_integer(0.into()) || mids.is_empty() {
        return None;
    }
    // g = γ(a x b - c) with γ = -cc
    let gamma = -cc;
    Some(Poly::from_terms(
        mids.into_iter()
            .map(|t| Term::new(t.coeff / &gamma, t.mono))
            .collect(),
        ord,
    ))
}

/// Looks for `γ(a·x·b - c)` among single elements of `basis`, then among
/// combinations `g1 + λ·g2`. Returns `x`.
pub fn find_solution_pattern(
    basis: &[Poly],
    a: &Monomial,
    b: &Monomial,
    c: &Monomial,
    ord: &MonomialOrder,
) -> Option<Poly> {
    for g in basis {
        if let Some(x) = solution_of(g, a, b, c, ord) {
            return Some(x);
        }
    }
    let bads: Vec<Vec<Term>> = basis.iter().map(|g| split_pattern(g, a, b, c).2).collect();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i == j || bads[i].is_empty() || bads[i].len() != bads[j].len() {
                continue;
            }
            if bads[i].iter().zip(&bads[j]).any(|(s, t)| s.mono != t.mono) {
                continue;
            }
            let lambda = -(&bads[i][0].coeff / &bads[j][0].coeff);
            let comb = basis[i].add(&basis[j].scale(&lambda), ord);
            if let Some(x) = solution_of(&comb, a, b, c, ord) {
                return Some(x);
            }
        }
    }
    None
}

/// Right normal form with respect to a right Groebner basis.
pub fn right_reduce(f: &Poly, basis: &[Poly], ord: &MonomialOrder) -> Poly {
    let ix = index_of(basis);
    Reducer {
        polys: basis,
        index: &ix,
        ord,
    }
    .reduce(f, Mode::Right, false)
    .nf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Alphabet;
    use crate::groebner::{membership_oracle, membership_oracle_scoped, OracleAnswer};
    use proptest::prelude::*;

    fn ring(names: &[&str]) -> Ring {
        let mut a = Alphabet::new();
        for n in names {
            a.add_plain(n).unwrap();
        }
        Ring::deglex(a)
    }

    fn polys(r: &Ring, fs: &[&str]) -> Vec<Poly> {
        fs.iter().map(|f| r.parse(f).unwrap()).collect()
    }

    fn in_right_ideal(f: &Poly, gens: &[Poly], d: usize, ord: &MonomialOrder) -> bool {
        membership_oracle_scoped(f, gens, d, ord, |u, _, _| u.is_one()).unwrap()
            == OracleAnswer::MemberUpToD
    }

    #[test]
    fn right_right_examples() {
        let r = ring(&["x", "y"]);
        let x = polys(&r, &["x"]);
        assert_eq!(intersect_right_right(&x, &x, &r).unwrap(), x);
        assert!(intersect_right_right(&x, &polys(&r, &["y"]), &r)
            .unwrap()
            .is_empty());
        let out =
            intersect_right_right(&polys(&r, &["x"]), &polys(&r, &["x y - y", "y x"]), &r).unwrap();
        for h in &out {
            assert!(in_right_ideal(h, &polys(&r, &["x"]), 5, r.order()));
            assert!(in_right_ideal(
                h,
                &polys(&r, &["x y - y", "y x"]),
                5,
                r.order()
            ));
        }
    }

    #[test]
    fn two_two_examples() {
        let r = ring(&["x", "y"]);
        let res = intersect_two_two(
            &polys(&r, &["x"]),
            &polys(&r, &["y"]),
            &r,
            GbConfig::with_degree(6),
        )
        .unwrap();
        assert_eq!(res.basis, polys(&r, &["x y", "y x"]));
        let f = polys(&r, &["x y - y x", "x x - y"]);
        let same = intersect_two_two(&f, &f, &r, GbConfig::with_degree(8)).unwrap();
        let direct = buchberger_enumerate(&f, r.order(), GbConfig::with_degree(8));
        assert_eq!(same.basis, direct.basis);
        let res = intersect_two_two(
            &polys(&r, &["x - y"]),
            &polys(&r, &["x"]),
            &r,
            GbConfig::with_degree(5),
        )
        .unwrap();
        assert!(!res.basis.is_empty());
        for h in &res.basis {
            if h.degree() <= 5 {
                for gens in [polys(&r, &["x - y"]), polys(&r, &["x"])] {
                    assert_eq!(
                        membership_oracle(h, &gens, 5, r.order()).unwrap(),
                        OracleAnswer::MemberUpToD
                    );
                }
            }
        }
    }

    #[test]
    fn rho_examples() {
        let r = ring(&["x"]);
        let g = polys(&r, &["x^2 - x"]);
        let rho = rho_enumerate(
            &g,
            r.order(),
            RhoConfig {
                degree_bound: 10,
                quiver: None,
            },
        )
        .unwrap();
        assert_eq!(rho.elements, g);
        assert!(rho.exhaustive);
        let err = rho_enumerate(
            &polys(&r, &["2 x^2"]),
            r.order(),
            RhoConfig {
                degree_bound: 4,
                quiver: None,
            },
        );
        assert!(matches!(err, Err(Error::NotReduced(_))));
        let r2 = ring(&["x", "y"]);
        let bad = polys(&r2, &["x y", "x y x - y"]);
        assert!(matches!(
            check_reduced(&bad, r2.order()),
            Err(Error::NotReduced(_))
        ));
    }

    #[test]
    fn rho_elements_are_members_and_right_irreducible() {
        let r = ring(&["x", "y"]);
        let f = polys(&r, &["x y - y x", "x x - 1"]);
        let g = buchberger_enumerate(&f, r.order(), GbConfig::with_degree(8));
        assert!(g.complete);
        let rho = rho_enumerate(
            &g.basis,
            r.order(),
            RhoConfig {
                degree_bound: 5,
                quiver: None,
            },
        )
        .unwrap();
        for (i, e) in rho.elements.iter().enumerate() {
            assert_eq!(
                membership_oracle(e, &f, 5, r.order()).unwrap(),
                OracleAnswer::MemberUpToD
            );
            for (j, o) in rho.elements.iter().enumerate() {
                if i != j {
                    assert!(o.lm().unwrap().right_cofactor(e.lm().unwrap()).is_none());
                }
            }
        }
    }

    #[test]
    fn zero_dimensional_rho_stabilises() {
        let r = ring(&["x", "y"]);
        let f = polys(&r, &["x x - x", "y y - y", "x y", "y x"]);
        let g = buchberger_enumerate(&f, r.order(), GbConfig::unbounded());
        assert!(g.complete);
        let a = rho_enumerate(
            &g.basis,
            r.order(),
            RhoConfig {
                degree_bound: 4,
                quiver: None,
            },
        )
        .unwrap();
        let b = rho_enumerate(
            &g.basis,
            r.order(),
            RhoConfig {
                degree_bound: 9,
                quiver: None,
            },
        )
        .unwrap();
        assert_eq!(a.elements, b.elements);
        assert!(a.exhaustive);
        for h in &f {
            assert!(right_reduce(h, &a.elements, r.order()).is_zero());
        }
        assert_eq!(
            zero_dimensionality_probe(&g.basis, true, r.order()),
            ZeroDim::ZeroDimensional(vec![
                Monomial::one(),
                r.word("x").unwrap(),
                r.word("y").unwrap()
            ])
        );
    }

    #[test]
    fn zero_dimensionality_examples() {
        let r = ring(&["x"]);
        assert_eq!(
            zero_dimensionality_probe(&polys(&r, &["x^2 - x"]), true, r.order()),
            ZeroDim::ZeroDimensional(vec![Monomial::one(), r.word("x").unwrap()])
        );
        let r2 = ring(&["x1", "x2"]);
        let g = polys(&r2, &["x1 x2 - 1"]);
        assert!(buchberger_enumerate(&g, r2.order(), GbConfig::unbounded()).complete);
        assert_eq!(
            zero_dimensionality_probe(&g, true, r2.order()),
            ZeroDim::NotZeroDimensional
        );
        assert_eq!(
            zero_dimensionality_probe(&g, false, r2.order()),
            ZeroDim::Unknown
        );
        assert_eq!(
            zero_dimensionality_probe(&polys(&r, &["1"]), true, r.order()),
            ZeroDim::ZeroDimensional(vec![])
        );
    }

    #[test]
    fn mixed_examples() {
        let r = ring(&["y", "x"]);
        let x = polys(&r, &["x"]);
        let res = intersect_mixed(
            &x,
            &x,
            &r,
            RhoConfig {
                degree_bound: 3,
                quiver: None,
            },
            GbConfig::with_degree(6),
        )
        .unwrap();
        assert!(res.basis.contains(&x[0]));
        let f = polys(&r, &["x - y"]);
        let res = intersect_mixed(
            &f,
            &x,
            &r,
            RhoConfig {
                degree_bound: 4,
                quiver: None,
            },
            GbConfig::with_degree(6),
        )
        .unwrap();
        assert!(res.approximate);
        for h in &res.basis {
            assert_eq!(
                membership_oracle(h, &f, 5, r.order()).unwrap(),
                OracleAnswer::MemberUpToD
            );
            assert!(in_right_ideal(h, &x, 5, r.order()));
        }
    }

    #[test]
    fn solution_pattern() {
        let r = ring(&["a", "b", "c", "x", "w"]);
        let o = r.order();
        let (a, b, c) = (
            r.word("a").unwrap(),
            r.word("b").unwrap(),
            r.word("c").unwrap(),
        );
        let lit = polys(&r, &["a x b - c"]);
        assert_eq!(
            find_solution_pattern(&lit, &a, &b, &c, o),
            Some(r.parse("x").unwrap())
        );
        let scaled = polys(&r, &["3 c - 3 a x b - 6 a w b"]);
        assert_eq!(
            find_solution_pattern(&scaled, &a, &b, &c, o),
            Some(r.parse("x + 2 w").unwrap())
        );
        let pair = polys(&r, &["a x b - c + w", "2 w - a b"]);
        assert_eq!(
            find_solution_pattern(&pair, &a, &b, &c, o),
            Some(r.parse("x + 1/2").unwrap())
        );
        assert_eq!(
            find_solution_pattern(&polys(&r, &["a x - c"]), &a, &b, &c, o),
            None
        );
    }

    fn arb_poly(nvars: u16, maxdeg: usize) -> impl Strategy<Value = Poly> {
        let term = (-2i64..=2, prop::collection::vec(0..nvars, 1..=maxdeg));
        prop::collection::vec(term, 1..=2).prop_map(move |ts| {
            let ord = MonomialOrder::deglex(&(0..nvars).map(Var).collect::<Vec<_>>());
            Poly::from_terms(
                ts.into_iter()
                    .map(|(c, w)| {
                        Term::new(crate::freealg::coeff(c), w.into_iter().map(Var).collect())
                    })
                    .collect(),
                &ord,
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn right_intersections_are_sound(
            f in prop::collection::vec(arb_poly(2, 2), 1..=2),
            g in prop::collection::vec(arb_poly(2, 2), 1..=2),
        ) {
            let r = ring(&["x", "y"]);
            for h in intersect_right_right(&f, &g, &r).unwrap() {
                prop_assume!(h.degree() <= 5);
                prop_assert!(in_right_ideal(&h, &f, 6, r.order()));
                prop_assert!(in_right_ideal(&h, &g, 6, r.order()));
            }
        }
    }
}
