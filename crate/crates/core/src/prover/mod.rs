//! Statements about operators, proof workflows and certificates.
//!
//! A statement lists assumptions as polynomial identities and one claim.
//! [`prove`] picks the workflow for the claim: ideal membership, solvability
//! of `a·X·b = c`, range inclusion `a = b·X`, or positivity `p = Q*·Q`. A
//! claim is reported as proved only after its certificate has been expanded
//! by [`check`] and its target found compatible with the quiver.

pub mod check;
mod statement;

use std::fmt::Write as _;

pub use check::{
    check_certificate, order_line, parse_certificate, CertLine, CertificateFile, CheckReport,
};
pub use statement::{
    parse_quiver, parse_statement, parse_system, Claim, Options, Statement, System,
};

use crate::error::{Error, Result};
use crate::freealg::{Monomial, Poly, Ring, Var};
use crate::grading::{positivity_search, PositivityConfig, PositivityOutcome};
use crate::groebner::{buchberger_enumerate, normal_form, Certificate, GbConfig};
use crate::intersect::{find_solution_pattern, intersect_mixed, RhoConfig};

/// `a a† a - a`, `a* a†* a* - a*`, `a†* a* - a a†`, `a† a a† - a†`,
/// `a†* a* a†* - a†*` and `a* a†* - a† a`.
pub fn moore_penrose(a: Var, ring: &Ring) -> Result<Vec<Poly>> {
    let al = ring.alphabet();
    let name = al.name(a);
    let missing = |s: String| Error::Input(format!("`{s}` is not declared"));
    let astar = al.partner(a).ok_or_else(|| missing(format!("{name}*")))?;
    let dag = al
        .get(&format!("{name}†"))
        .ok_or_else(|| missing(format!("{name}†")))?;
    let dstar = al
        .partner(dag)
        .ok_or_else(|| missing(format!("{name}†*")))?;
    let w = |vs: &[Var]| Poly::mono(Monomial::from_slice(vs));
    let ord = ring.order();
    let eq = |l: Poly, r: Poly| l.sub(&r, ord);
    Ok(vec![
        eq(w(&[a, dag, a]), w(&[a])),
        eq(w(&[astar, dstar, astar]), w(&[astar])),
        eq(w(&[dstar, astar]), w(&[a, dag])),
        eq(w(&[dag, a, dag]), w(&[dag])),
        eq(w(&[dstar, astar, dstar]), w(&[dstar])),
        eq(w(&[astar, dstar]), w(&[dag, a])),
    ])
}

#[derive(Clone, Debug)]
pub struct ProveConfig {
    /// Degree bound for `ρ`.
    pub rho_degree: usize,
    pub gb: GbConfig,
    /// Generators scanned by streamed searches.
    pub max_gens: usize,
    /// Restrict `ρ` to quiver-compatible elements.
    pub quiver_filter: bool,
}

impl Default for ProveConfig {
    fn default() -> Self {
        ProveConfig {
            rho_degree: 5,
            gb: GbConfig::unbounded(),
            max_gens: 1000,
            quiver_filter: true,
        }
    }
}

impl ProveConfig {
    pub fn from_options(o: &Options) -> Self {
        let d = ProveConfig::default();
        ProveConfig {
            rho_degree: o.max_deg.unwrap_or(d.rho_degree),
            gb: GbConfig {
                degree_bound: o.gb_max_deg,
                max_iterations: o.max_iterations,
                ..GbConfig::unbounded()
            },
            max_gens: o.max_gens.unwrap_or(d.max_gens),
            quiver_filter: o.quiver_filter.unwrap_or(d.quiver_filter),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Proved,
    NotFoundWithinBounds,
}

#[derive(Clone, Debug)]
pub struct ProofReport {
    pub outcome: Outcome,
    pub claim: String,
    /// Name and value of the unknown.
    pub witness: Option<(String, Poly)>,
    /// The polynomial shown to lie in the ideal of the assumptions.
    pub target: Option<Poly>,
    /// `target = Σ c · u · F[j] · v` over the assumptions.
    pub certificate: Option<Certificate>,
    /// Vertex names `(source, target)` of a common path pair of the target.
    pub compatibility: Option<(String, String)>,
    pub stats: Vec<(String, String)>,
    pub note: Option<String>,
}

impl ProofReport {
    fn not_found(claim: String, stats: Vec<(String, String)>, note: impl Into<String>) -> Self {
        ProofReport {
            outcome: Outcome::NotFoundWithinBounds,
            claim,
            witness: None,
            target: None,
            certificate: None,
            compatibility: None,
            stats,
            note: Some(note.into()),
        }
    }

    pub fn is_proved(&self) -> bool {
        self.outcome == Outcome::Proved
    }

    pub fn render(&self, st: &Statement) -> String {
        let r = &st.ring;
        let mut out = String::new();
        let _ = writeln!(out, "claim: {}", self.claim);
        let _ = writeln!(
            out,
            "outcome: {}",
            match self.outcome {
                Outcome::Proved => "proved",
                Outcome::NotFoundWithinBounds => "not found within bounds",
            }
        );
        if let Some((name, x)) = &self.witness {
            let _ = writeln!(out, "witness: {name} = {}", r.show(x));
        }
        if let Some(t) = &self.target {
            let _ = writeln!(out, "in ideal: {}", r.show(t));
        }
        if let Some((s, t)) = &self.compatibility {
            let _ = writeln!(out, "compatible: {s} -> {t}");
        }
        if let Some(c) = &self.certificate {
            let _ = writeln!(
                out,
                "certificate: {} summands over {} assumptions",
                c.len(),
                st.assumptions.len()
            );
        }
        for (k, v) in &self.stats {
            let _ = writeln!(out, "{k}: {v}");
        }
        if let Some(n) = &self.note {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }

    /// The certificate as a self-contained file.
    pub fn certificate_file(&self, st: &Statement) -> Option<CertificateFile> {
        let (target, cert) = (self.target.as_ref()?, self.certificate.as_ref()?);
        Some(CertificateFile {
            declarations: st.declarations.clone(),
            ring: st.ring.clone(),
            edges: st.edges.clone(),
            quiver: st.quiver.clone(),
            target: target.clone(),
            generators: st.assumptions.clone(),
            summands: lines(cert),
        })
    }
}

fn lines(cert: &Certificate) -> Vec<CertLine> {
    cert.summands
        .iter()
        .map(|s| CertLine {
            coeff: s.coeff.clone(),
            left: s.left.clone(),
            gen: s.gen,
            right: s.right.clone(),
        })
        .collect()
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

pub fn describe_claim(claim: &Claim, ring: &Ring) -> String {
    let w = |m: &Monomial| ring.show_mono(m);
    match claim {
        Claim::Member(f) => format!("member {}", ring.show(f)),
        Claim::Positive(p) => format!("positive {}", ring.show(p)),
        Claim::Solvable { a, b, c, unknown } => {
            let lhs: Vec<String> = [
                (!a.is_one()).then(|| w(a)),
                Some(unknown.clone()),
                (!b.is_one()).then(|| w(b)),
            ]
            .into_iter()
            .flatten()
            .collect();
            format!("solvable {} = {}", lhs.join(" "), w(c))
        }
        Claim::Range { a, b, unknown } => {
            let rhs = if b.is_one() {
                unknown.clone()
            } else {
                format!("{} {unknown}", w(b))
            };
            format!("range {} = {rhs}", w(a))
        }
    }
}

/// Certificate of `f` over `gens` through a certified completion, if `f`
/// reduces to zero.
fn membership_certificate(
    f: &Poly,
    gens: &[Poly],
    ring: &Ring,
    gb: &GbConfig,
) -> (Option<Certificate>, usize, bool) {
    let res = buchberger_enumerate(gens, ring.order(), gb.clone().certified());
    let (nf, over_basis) = normal_form(f, &res.basis, ring.order());
    let cert = if nf.is_zero() {
        res.certificates
            .as_ref()
            .and_then(|c| over_basis.compose(c).ok())
    } else {
        None
    };
    (cert, res.basis.len(), res.complete)
}

/// Expands the certificate independently and checks the quiver.
fn confirm(
    st: &Statement,
    target: &Poly,
    cert: &Certificate,
) -> Result<std::result::Result<Option<(String, String)>, String>> {
    let sum = check::expand(&lines(cert), &st.assumptions, st.ring.order())?;
    if sum != target.reorder(st.ring.order()) {
        return Ok(Err("certificate does not expand to the target".into()));
    }
    match &st.quiver {
        None => Ok(Ok(None)),
        Some(q) => {
            let c = q.is_compatible(target);
            if !c.compatible {
                return Ok(Err("target is not compatible with the quiver".into()));
            }
            Ok(Ok(c.witness.map(|(s, t)| {
                (q.vertex_name(s).to_string(), q.vertex_name(t).to_string())
            })))
        }
    }
}

fn finish(
    st: &Statement,
    claim: String,
    witness: Option<(String, Poly)>,
    target: Poly,
    cert: Option<Certificate>,
    mut stats: Vec<(String, String)>,
) -> Result<ProofReport> {
    let Some(cert) = cert else {
        return Ok(ProofReport::not_found(
            claim,
            stats,
            format!("no certificate found for {}", st.ring.show(&target)),
        ));
    };
    match confirm(st, &target, &cert)? {
        Ok(compatibility) => {
            stats.push(("certificate-checked".into(), "yes".into()));
            Ok(ProofReport {
                outcome: Outcome::Proved,
                claim,
                witness,
                target: Some(target),
                certificate: Some(cert),
                compatibility,
                stats,
                note: None,
            })
        }
        Err(why) => Ok(ProofReport::not_found(claim, stats, why)),
    }
}

/// Runs the workflow for the statement's claim.
pub fn prove(st: &Statement, cfg: &ProveConfig) -> Result<ProofReport> {
    let ring = &st.ring;
    let ord = ring.order();
    let f = &st.assumptions;
    let claim = describe_claim(&st.claim, ring);
    match &st.claim {
        Claim::Member(g) => {
            let (cert, size, complete) = membership_certificate(g, f, ring, &cfg.gb);
            let stats = vec![
                ("gb-size".into(), size.to_string()),
                ("gb-complete".into(), yes_no(complete)),
            ];
            finish(st, claim, None, g.clone(), cert, stats)
        }
        Claim::Solvable { a, b, c, unknown } => solve_pattern(st, cfg, claim, a, b, c, unknown),
        Claim::Range { a, b, unknown } => {
            solve_pattern(st, cfg, claim, b, &Monomial::one(), a, unknown)
        }
        Claim::Positive(p) => {
            let pcfg = PositivityConfig {
                gb: cfg.gb.clone().certified(),
                max_emitted: cfg.max_gens,
                reduce_first: true,
            };
            match positivity_search(f, p, ring, &pcfg)? {
                PositivityOutcome::Found(found) => {
                    let qq = ring.mul(&ring.adjoint(&found.q)?, &found.q);
                    let target = p.sub(&qq, ord);
                    let mut stats = Vec::new();
                    if let Some(n) = found.input_basis {
                        stats.push(("input-basis-size".into(), n.to_string()));
                    }
                    stats.push(("hom-generators-emitted".into(), found.index.to_string()));
                    stats.push(("engine-elements".into(), found.engine_index.to_string()));
                    let witness = Some(("Q".to_string(), found.q.clone()));
                    finish(st, claim, witness, target, found.certificate, stats)
                }
                PositivityOutcome::Raw { element, index, .. } => Ok(ProofReport::not_found(
                    claim,
                    vec![("hom-generators-emitted".into(), index.to_string())],
                    format!(
                        "found {} but the scale has no rational square root",
                        ring.show(&element.reorder(ord))
                    ),
                )),
                PositivityOutcome::Exhausted { emitted, complete } => Ok(ProofReport::not_found(
                    claim,
                    vec![
                        ("hom-generators-emitted".into(), emitted.to_string()),
                        ("hom-complete".into(), yes_no(complete)),
                    ],
                    "no element v - w* w among the scanned generators",
                )),
            }
        }
    }
}

fn solve_pattern(
    st: &Statement,
    cfg: &ProveConfig,
    claim: String,
    a: &Monomial,
    b: &Monomial,
    c: &Monomial,
    unknown: &str,
) -> Result<ProofReport> {
    let ring = &st.ring;
    let ord = ring.order();
    let rho = RhoConfig {
        degree_bound: cfg.rho_degree,
        quiver: if cfg.quiver_filter {
            st.quiver.as_ref()
        } else {
            None
        },
    };
    let right = [Poly::mono(a.clone()), Poly::mono(c.clone())];
    let mixed = intersect_mixed(&st.assumptions, &right, ring, rho, cfg.gb.clone())?;
    let mut stats = vec![
        ("gb-size".into(), mixed.gb_size.to_string()),
        ("gb-complete".into(), yes_no(mixed.gb_complete)),
        (
            if rho.quiver.is_some() {
                "rho-q-size"
            } else {
                "rho-size"
            }
            .into(),
            mixed.rho_size.to_string(),
        ),
        ("intersection-size".into(), mixed.basis.len().to_string()),
    ];
    let Some(x) = find_solution_pattern(&mixed.basis, a, b, c, ord) else {
        return Ok(ProofReport::not_found(
            claim,
            stats,
            "no element of the required form in the intersection",
        ));
    };
    let target = Poly::mono(a.clone())
        .mul(&x, ord)
        .mul(&Poly::mono(b.clone()), ord)
        .sub(&Poly::mono(c.clone()), ord);
    let (cert, _, _) = membership_certificate(&target, &st.assumptions, ring, &cfg.gb);
    stats.retain(|(k, _)| k != "certificate-checked");
    finish(
        st,
        claim,
        Some((unknown.to_string(), x)),
        target,
        cert,
        stats,
    )
}
