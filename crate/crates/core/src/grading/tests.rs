use super::*;
use crate::freealg::{coeff, ratio};
use crate::groebner::{
    buchberger_enumerate, membership_oracle, reduce, verify_certificate, GbConfig, OracleAnswer,
};
use proptest::prelude::*;

fn plain(names: &[&str]) -> Ring {
    let mut a = Alphabet::new();
    for n in names {
        a.add_plain(n).unwrap();
    }
    Ring::deglex(a)
}

fn starred(names: &[&str]) -> Ring {
    let mut a = Alphabet::new();
    for n in names {
        a.add_pair(n, &format!("{n}*")).unwrap();
    }
    Ring::deglex(a)
}

fn matrix(r: &Ring, rows: &[(&str, &[i64])]) -> GradingMatrix {
    let k = rows[0].1.len();
    let mut m = GradingMatrix::new(k);
    for (n, row) in rows {
        m.set_row(r.var(n).unwrap(), row.to_vec(), r.alphabet())
            .unwrap();
    }
    m
}

/// Complete basis of the tag relations alone.
fn tag_basis(r: &Ring, k: usize) -> (Ring, TagBlock, Vec<Poly>) {
    let (tr, tags) = TagBlock::adjoin(r, k).unwrap();
    let letters: Vec<Var> = r.alphabet().vars().collect();
    let j = tag_relations(&letters, &tags, false, tr.order());
    let gb = buchberger_enumerate(&j, tr.order(), GbConfig::unbounded());
    assert!(gb.complete);
    (tr, tags, gb.basis)
}

#[test]
fn degree_of_words() {
    let r = plain(&["x", "y"]);
    let a = matrix(&r, &[("x", &[1, 0]), ("y", &[0, 1])]);
    assert_eq!(
        deg_a(&a, &r.word("x").unwrap()).unwrap(),
        DegVector(vec![1, 0])
    );
    assert_eq!(deg_a(&a, &Monomial::one()).unwrap(), DegVector::zero(2));
    assert_eq!(
        deg_a(&a, &r.word("x y x").unwrap()).unwrap(),
        DegVector(vec![2, 1])
    );
    let partial = matrix(&r, &[("x", &[1])]);
    assert!(matches!(
        deg_a(&partial, &r.word("y").unwrap()),
        Err(Error::Ungraded(_))
    ));
}

#[test]
fn rational_rows_are_cleared() {
    let r = plain(&["x", "y"]);
    let (x, y) = (r.var("x").unwrap(), r.var("y").unwrap());
    let a = GradingMatrix::from_rational(
        2,
        &[
            (x, vec![ratio(1, 2), coeff(0)]),
            (y, vec![ratio(1, 3), coeff(1)]),
        ],
        r.alphabet(),
    )
    .unwrap();
    assert_eq!(a.row(x).unwrap(), &[3, 0]);
    assert_eq!(a.row(y).unwrap(), &[2, 6]);
}

#[test]
fn positivity_matrix_rows() {
    let r = starred(&["a", "b"]);
    let a = GradingMatrix::positivity(r.alphabet(), &[]).unwrap();
    assert_eq!(a.rank(), 2);
    assert_eq!(a.row(r.var("a").unwrap()).unwrap(), &[1, 0]);
    assert_eq!(a.row(r.var("b*").unwrap()).unwrap(), &[0, -1]);
    let mut lone = Alphabet::new();
    lone.add_plain("x").unwrap();
    assert!(GradingMatrix::positivity(&lone, &[]).is_err());
}

#[test]
fn tau_example() {
    let r = plain(&["x"]);
    let (tr, tags) = TagBlock::adjoin(&r, 4).unwrap();
    let m = tau(&DegVector(vec![3, -2, 0, 1]), &tags);
    assert_eq!(tr.show_mono(&m), "t1 t1 t1 t2inv t2inv t4");
    assert!(tau(&DegVector::zero(4), &tags).is_one());
}

#[test]
fn tau_inverse_reduces_to_one() {
    let r = plain(&["x"]);
    let (tr, tags, j) = tag_basis(&r, 3);
    let alpha = DegVector(vec![2, -1, 3]);
    let prod = Poly::mono(tau(&alpha, &tags).concat(&tau(&alpha.neg(), &tags)));
    assert_eq!(reduce(&prod, &j, tr.order()), Poly::one());
}

#[test]
fn phi_normal_form_separates_tags() {
    let r = plain(&["x", "y"]);
    let a = matrix(&r, &[("x", &[1, -1]), ("y", &[0, 2])]);
    let (tr, tags, j) = tag_basis(&r, 2);
    for w in ["x", "x y", "y x x", "x y y x"] {
        let m = r.word(w).unwrap();
        let image = phi_a(&a, &Poly::mono(m.clone()), &tags, tr.order()).unwrap();
        let expected = Poly::mono(m.concat(&tau(&deg_a(&a, &m).unwrap(), &tags)));
        assert_eq!(
            reduce(&image, &j, tr.order()),
            reduce(&expected, &j, tr.order()),
            "{w}"
        );
    }
    assert_eq!(
        phi_a(&a, &Poly::one(), &tags, tr.order()).unwrap(),
        Poly::one()
    );
}

#[test]
fn homogeneity() {
    let r = plain(&["x", "y"]);
    let a = matrix(&r, &[("x", &[1, 0]), ("y", &[0, 1])]);
    assert_eq!(
        is_homogeneous(&a, &r.parse("x y - y x").unwrap()).unwrap(),
        Homogeneity::Of(DegVector(vec![1, 1]))
    );
    assert_eq!(
        is_homogeneous(&a, &r.parse("x - y y").unwrap()).unwrap(),
        Homogeneity::Not
    );
    assert_eq!(is_homogeneous(&a, &Poly::zero()).unwrap(), Homogeneity::Any);
    let s = starred(&["a", "b"]);
    let p = GradingMatrix::positivity(s.alphabet(), &[]).unwrap();
    assert_eq!(
        is_homogeneous(&p, &s.parse("b* a* a b").unwrap()).unwrap(),
        Homogeneity::Of(DegVector::zero(2))
    );
}

#[test]
fn homogeneous_ideal_is_its_own_hom_part() {
    let r = plain(&["x", "y"]);
    let a = matrix(&r, &[("x", &[1, 0]), ("y", &[0, 1])]);
    let f = vec![r.parse("x y - y x").unwrap()];
    let out = hom_part_enumerate(&f, &a, &r, GbConfig::with_degree(8), 20).unwrap();
    let polys: Vec<Poly> = out.iter().map(|e| e.poly.clone()).collect();
    assert!(!polys.is_empty());
    for g in &polys {
        assert_eq!(
            membership_oracle(g, &f, 5, r.order()).unwrap(),
            OracleAnswer::MemberUpToD
        );
    }
    for g in &f {
        assert_eq!(
            membership_oracle(g, &polys, 5, r.order()).unwrap(),
            OracleAnswer::MemberUpToD
        );
    }
}

#[test]
fn hom_part_of_linear_difference() {
    let r = plain(&["x", "y"]);
    let a = matrix(&r, &[("x", &[1, 0]), ("y", &[0, 1])]);
    let f = vec![r.parse("x - y").unwrap()];
    let out = hom_part_enumerate(&f, &a, &r, GbConfig::with_degree(6).certified(), 10).unwrap();
    let polys: Vec<Poly> = out.iter().map(|e| e.poly.clone()).collect();
    let target = r.parse("x y - y x").unwrap();
    assert!(
        polys.iter().any(|g| *g == target || g.neg() == target),
        "{polys:?}"
    );
    for e in &out {
        assert!(matches!(
            is_homogeneous(&a, &e.poly).unwrap(),
            Homogeneity::Of(_)
        ));
        let cert = e.certificate.as_ref().unwrap();
        assert!(verify_certificate(&e.poly, &f, cert, r.order()).unwrap());
    }
    assert_eq!(
        membership_oracle(&target, &polys, 4, r.order()).unwrap(),
        OracleAnswer::MemberUpToD
    );
}

#[test]
fn scaling_keeps_hom_part() {
    let r = plain(&["x", "y"]);
    let a = matrix(&r, &[("x", &[1, 2]), ("y", &[2, 1])]);
    let f = vec![
        r.parse("x x y - y x x + x y").unwrap(),
        r.parse("y y - x").unwrap(),
    ];
    let cfg = GbConfig::with_degree(7);
    let one: Vec<Poly> = hom_part_enumerate(&f, &a, &r, cfg.clone(), 6)
        .unwrap()
        .into_iter()
        .map(|e| e.poly)
        .collect();
    let three: Vec<Poly> = hom_part_enumerate(&f, &a.scaled(3), &r, cfg, 6)
        .unwrap()
        .into_iter()
        .map(|e| e.poly)
        .collect();
    for g in &one {
        assert_eq!(
            membership_oracle(g, &three, 5, r.order()).unwrap(),
            OracleAnswer::MemberUpToD
        );
    }
    for g in &three {
        assert_eq!(
            membership_oracle(g, &one, 5, r.order()).unwrap(),
            OracleAnswer::MemberUpToD
        );
    }
}

fn with_p(extra: &[&str]) -> Ring {
    let mut a = Alphabet::new();
    for n in extra {
        a.add_pair(n, &format!("{n}*")).unwrap();
    }
    let p = a.add_self_adjoint("p").unwrap();
    let rest = a.vars().filter(|&v| v != p).collect();
    Ring::new(a, MonomialOrder::block(vec![vec![p], rest]).unwrap()).unwrap()
}

#[test]
fn positivity_immediate() {
    let r = with_p(&["x"]);
    let f = vec![r.parse("p - x* x").unwrap()];
    let p = r.parse("p").unwrap();
    let cfg = PositivityConfig {
        gb: GbConfig::with_degree(6).certified(),
        max_emitted: 20,
        reduce_first: true,
    };
    let out = positivity_search(&f, &p, &r, &cfg).unwrap();
    let found = out.found().expect("found");
    assert_eq!(found.q, r.parse("x").unwrap());
    let claim = p.sub(&r.parse("x* x").unwrap(), r.order());
    assert!(
        verify_certificate(&claim, &f, found.certificate.as_ref().unwrap(), r.order()).unwrap()
    );
}

#[test]
fn positivity_irrational_scale_is_raw() {
    let r = with_p(&["x"]);
    let f = vec![r.parse("p - 2 x* x").unwrap()];
    let cfg = PositivityConfig {
        gb: GbConfig::with_degree(6),
        max_emitted: 20,
        reduce_first: false,
    };
    match positivity_search(&f, &r.parse("p").unwrap(), &r, &cfg).unwrap() {
        PositivityOutcome::Raw { coeff: c, word, .. } => {
            assert_eq!(c, coeff(2));
            assert_eq!(word, r.word("x").unwrap());
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn symmetric_words() {
    let r = starred(&["a", "b"]);
    let al = r.alphabet();
    assert_eq!(
        symmetric_factor(&r.word("b* a* a b").unwrap(), al),
        Some(r.word("a b").unwrap())
    );
    assert_eq!(symmetric_factor(&r.word("a* b").unwrap(), al), None);
    assert_eq!(symmetric_factor(&r.word("a* a a").unwrap(), al), None);
}

fn small_word() -> impl Strategy<Value = Vec<u16>> {
    prop::collection::vec(0u16..4, 0..7)
}

proptest! {
    #[test]
    fn deg_is_additive(w1 in small_word(), w2 in small_word()) {
        let r = starred(&["a", "b"]);
        let a = GradingMatrix::positivity(r.alphabet(), &[]).unwrap();
        let m1: Monomial = w1.into_iter().map(Var).collect();
        let m2: Monomial = w2.into_iter().map(Var).collect();
        prop_assert_eq!(
            deg_a(&a, &m1.concat(&m2)).unwrap(),
            deg_a(&a, &m1).unwrap().add(&deg_a(&a, &m2).unwrap())
        );
    }

    #[test]
    fn symmetric_words_have_degree_zero(w in small_word()) {
        let r = starred(&["a", "b"]);
        let a = GradingMatrix::positivity(r.alphabet(), &[]).unwrap();
        let q: Monomial = w.into_iter().map(Var).collect();
        let qq = r.alphabet().adjoint_word(&q).unwrap().concat(&q);
        prop_assert!(deg_a(&a, &qq).unwrap().is_zero());
    }

    #[test]
    fn tau_is_additive_modulo_tags(
        x in prop::collection::vec(-3i64..4, 2),
        y in prop::collection::vec(-3i64..4, 2),
    ) {
        let r = plain(&["x"]);
        let (tr, tags, j) = tag_basis(&r, 2);
        let (a, b) = (DegVector(x), DegVector(y));
        let lhs = reduce(&Poly::mono(tau(&a.add(&b), &tags)), &j, tr.order());
        let rhs = reduce(&Poly::mono(tau(&a, &tags).concat(&tau(&b, &tags))), &j, tr.order());
        prop_assert_eq!(lhs, rhs);
    }
}
