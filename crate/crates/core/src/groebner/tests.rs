use super::*;
use crate::freealg::{Alphabet, Ring};
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

#[test]
fn top_reduce_examples() {
    let r = ring(&["x1", "x2", "x"]);
    let o = r.order();
    let f = r.parse("x1 x2 - 1").unwrap();
    assert_eq!(
        top_reduce_step(&f, &r.parse("x2").unwrap(), o),
        Some(r.parse("-1").unwrap())
    );
    let x = r.parse("x").unwrap();
    assert_eq!(
        top_reduce_step(&r.parse("x^2").unwrap(), &x, o),
        Some(Poly::zero())
    );
    assert_eq!(top_reduce_step(&f, &f, o), Some(Poly::zero()));
    assert_eq!(top_reduce_step(&x, &f, o), None);
}

#[test]
fn normal_form_examples() {
    let r = ring(&["x1", "x2"]);
    let o = r.order();
    let g = polys(&r, &["x1 x2 - 1"]);
    let f = r.parse("x1 x2 x1").unwrap();
    let (nf, cert) = normal_form(&f, &g, o);
    assert_eq!(nf, r.parse("x1").unwrap());
    assert!(verify_certificate(&f.sub(&nf, o), &g, &cert, o).unwrap());
    assert_eq!(
        membership_oracle(&f.sub(&nf, o), &g, 3, o).unwrap(),
        OracleAnswer::MemberUpToD
    );
    let (nf, cert) = normal_form(&g[0], &g, o);
    assert!(nf.is_zero());
    assert_eq!(cert.len(), 1);
}

#[test]
fn obstruction_examples() {
    let r = ring(&["x1", "x2", "x3"]);
    let o = r.order();
    let g1 = r.parse("x1 x2").unwrap();
    let g2 = r.parse("x2 x3").unwrap();
    let obs = obstructions(&g1, &g2, o);
    assert_eq!(obs.len(), 1);
    assert_eq!(obs[0].kind, AmbiguityKind::Overlap { width: 1 });
    assert_eq!(obs[0].first, (Monomial::one(), r.word("x3").unwrap()));
    assert_eq!(obs[0].second, (r.word("x1").unwrap(), Monomial::one()));
    assert!(obs[0].s_poly.is_zero());
    assert!(obstructions(&r.parse("x1").unwrap(), &r.parse("x2").unwrap(), o).is_empty());
    let sq = r.parse("x1 x1 - x2").unwrap();
    let obs = obstructions(&sq, &sq, o);
    assert_eq!(obs.len(), 1);
    assert_eq!(obs[0].kind, AmbiguityKind::Overlap { width: 1 });
    assert_eq!(obs[0].s_poly, r.parse("x1 x2 - x2 x1").unwrap());
    let inc = obstructions(
        &r.parse("x3 x1 x2 - 1").unwrap(),
        &r.parse("x1 x2 - x3").unwrap(),
        o,
    );
    assert!(inc
        .iter()
        .any(|a| a.kind == AmbiguityKind::Inclusion { pos: 1 }
            && a.s_poly == r.parse("x3 x3 - 1").unwrap()));
}

#[test]
fn two_inverse_words_are_already_complete() {
    let r = ring(&["x1", "x2"]);
    let f = polys(&r, &["x1 x2 - 1", "x2 x1 - 1"]);
    let res = buchberger_enumerate(&f, r.order(), GbConfig::unbounded());
    assert!(res.complete);
    assert_eq!(res.stats.elements_added, 2);
    let mut b = res.basis.clone();
    b.sort_by(|p, q| r.order().compare(p.lm().unwrap(), q.lm().unwrap()));
    let mut want = f.clone();
    want.sort_by(|p, q| r.order().compare(p.lm().unwrap(), q.lm().unwrap()));
    assert_eq!(b, want);
}

#[test]
fn single_letter() {
    let r = ring(&["x"]);
    let res = buchberger_enumerate(&polys(&r, &["x"]), r.order(), GbConfig::unbounded());
    assert!(res.complete);
    assert_eq!(res.basis, polys(&r, &["x"]));
}

#[test]
fn infinite_basis_is_truncated() {
    // x y x - y x y generates an infinite basis under deglex
    let r = ring(&["x", "y"]);
    let f = polys(&r, &["x y x - y x y"]);
    let res = buchberger_enumerate(&f, r.order(), GbConfig::with_degree(8));
    assert!(!res.complete);
    assert!(res.basis.len() > 1);
}

#[test]
fn certificates_of_basis_elements_verify() {
    let r = ring(&["x", "y", "z"]);
    let f = polys(&r, &["x y - z", "y z - x", "z x - y"]);
    let res = buchberger_enumerate(&f, r.order(), GbConfig::with_degree(6).certified());
    let certs = res.certificates.as_ref().unwrap();
    for (g, c) in res.basis.iter().zip(certs) {
        assert!(
            verify_certificate(g, &f, c, r.order()).unwrap(),
            "{}",
            r.show(g)
        );
    }
}

#[test]
fn member_certificate_round_trip() {
    let r = ring(&["x", "y"]);
    let o = r.order();
    let f = polys(&r, &["x x - y", "y y - x"]);
    let res = buchberger_enumerate(&f, o, GbConfig::unbounded().certified());
    assert!(res.complete);
    let target = r.parse("x y - y x").unwrap();
    let (nf, over_g) = normal_form(&target, &res.basis, o);
    assert!(nf.is_zero());
    let over_f = over_g.compose(res.certificates.as_ref().unwrap()).unwrap();
    assert!(verify_certificate(&target, &f, &over_f, o).unwrap());
}

#[test]
fn interreduce_examples() {
    let r = ring(&["x", "x1", "x2", "x3"]);
    let o = r.order();
    assert_eq!(interreduce(&polys(&r, &["2 x", "x"]), o), polys(&r, &["x"]));
    let f = polys(&r, &["x1 x2 - 1", "x1 x2 - x3"]);
    let g = interreduce(&f, o);
    assert_eq!(g.len(), 2);
    for h in &g {
        assert_eq!(
            membership_oracle(h, &f, 2, o).unwrap(),
            OracleAnswer::MemberUpToD
        );
    }
    for h in &f {
        assert_eq!(
            membership_oracle(h, &g, 2, o).unwrap(),
            OracleAnswer::MemberUpToD
        );
    }
    assert_eq!(interreduce(&g, o), g);
}

#[test]
fn right_interreduce_examples() {
    let r = ring(&["y", "x", "x1", "x2"]);
    let o = r.order();
    assert_eq!(
        right_interreduce(&polys(&r, &["x1", "x1 x2"]), o),
        polys(&r, &["x1"])
    );
    assert_eq!(
        right_interreduce(&polys(&r, &["x + y", "x - y"]), o),
        polys(&r, &["y", "x"])
    );
    // x2 x1 is not a right multiple of x1
    assert_eq!(
        right_interreduce(&polys(&r, &["x1", "x2 x1"]), o),
        polys(&r, &["x1", "x2 x1"])
    );
    let (nf, cert) = right_normal_form(
        &r.parse("x1 x2 + x2 x1").unwrap(),
        &polys(&r, &["x1 - y"]),
        o,
    );
    assert_eq!(nf, r.parse("x2 x1 + y x2").unwrap());
    assert!(cert.summands.iter().all(|s| s.left.is_one()));
}

#[test]
fn oracle_negative_and_bound() {
    let r = ring(&["x1", "x2"]);
    let o = r.order();
    let g = polys(&r, &["x1 x2"]);
    let f = r.parse("x1").unwrap();
    for d in 1..5 {
        assert_eq!(
            membership_oracle(&f, &g, d, o).unwrap(),
            OracleAnswer::NotWitnessedUpToD
        );
    }
    assert_eq!(
        membership_oracle(&r.parse("x1 x1").unwrap(), &g, 1, o),
        Err(crate::Error::DegreeTooSmall {
            bound: 1,
            degree: 2
        })
    );
}

#[test]
fn enumerator_streams_match_final_result() {
    let r = ring(&["x", "y"]);
    let f = polys(&r, &["x y x - y x y"]);
    let mut e = Enumerator::new(&f, r.order(), GbConfig::with_degree(10));
    let mut seen = 0;
    while let Some(id) = e.next_element() {
        assert!(e.is_active(id));
        assert_eq!(id, seen);
        seen += 1;
    }
    assert_eq!(e.elements().len(), seen);
    assert_eq!(e.result().basis.len(), e.active_ids().len());
}

fn arb_poly(nvars: u16, maxdeg: usize) -> impl Strategy<Value = Poly> {
    let term = (-3i64..=3, prop::collection::vec(0..nvars, 0..=maxdeg));
    prop::collection::vec(term, 1..=3).prop_map(move |ts| {
        let ord = MonomialOrder::deglex(&(0..nvars).map(crate::Var).collect::<Vec<_>>());
        Poly::from_terms(
            ts.into_iter()
                .map(|(c, w)| {
                    crate::Term::new(
                        crate::freealg::coeff(c),
                        w.into_iter().map(crate::Var).collect(),
                    )
                })
                .collect(),
            &ord,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_basis_ignores_input_order(fs in prop::collection::vec(arb_poly(2, 2), 1..=3)) {
        let ord = MonomialOrder::deglex(&[crate::Var(0), crate::Var(1)]);
        let a = buchberger_enumerate(&fs, &ord, GbConfig::with_degree(5));
        let mut rev = fs.clone();
        rev.reverse();
        let b = buchberger_enumerate(&rev, &ord, GbConfig::with_degree(5));
        if a.complete && b.complete {
            prop_assert_eq!(a.basis, b.basis);
        }
    }

    #[test]
    fn zero_normal_forms_come_with_valid_certificates(
        fs in prop::collection::vec(arb_poly(2, 2), 1..=3),
        u in prop::collection::vec(0u16..2, 0..=2),
        v in prop::collection::vec(0u16..2, 0..=2),
        k in 0usize..3,
    ) {
        let ord = MonomialOrder::deglex(&[crate::Var(0), crate::Var(1)]);
        let res = buchberger_enumerate(&fs, &ord, GbConfig::with_degree(6).certified());
        prop_assume!(res.complete);
        let u: Monomial = u.into_iter().map(crate::Var).collect();
        let v: Monomial = v.into_iter().map(crate::Var).collect();
        let f = fs[k % fs.len()].sandwich(&u, &v);
        let (nf, over_g) = normal_form(&f, &res.basis, &ord);
        prop_assert!(nf.is_zero());
        let over_f = over_g.compose(res.certificates.as_ref().unwrap()).unwrap();
        prop_assert!(verify_certificate(&f, &fs, &over_f, &ord).unwrap());
    }

    #[test]
    fn right_interreduce_output_is_right_reduced(fs in prop::collection::vec(arb_poly(3, 3), 1..=5)) {
        let ord = MonomialOrder::deglex(&[crate::Var(0), crate::Var(1), crate::Var(2)]);
        let g = right_interreduce(&fs, &ord);
        for (i, gi) in g.iter().enumerate() {
            prop_assert!(gi.lc().unwrap().is_one());
            for (j, gj) in g.iter().enumerate() {
                if i == j { continue; }
                let lm = gj.lm().unwrap();
                for m in gi.support() {
                    prop_assert!(lm.right_cofactor(m).is_none());
                }
            }
        }
        // every input right-reduces to zero
        for f in &fs {
            prop_assert!(right_normal_form(f, &g, &ord).0.is_zero());
        }
    }
}
