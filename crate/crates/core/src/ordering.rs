//! Block degree-lexicographic monomial orders.
//!
//! Blocks are listed highest first. Two words are compared by their number
//! of letters in the highest block, then the next block, and so on; ties are
//! broken by total length and then lexicographically by letter rank. Within a
//! block letters are listed in ascending precedence, and every letter of a
//! higher block outranks every letter of a lower one.

use std::cmp::Ordering;

use num_traits::Zero;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::freealg::{Coeff, Monomial, Poly, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    rank: Vec<u16>,
    block_of: Vec<u8>,
    blocks: Vec<Vec<Var>>,
}

impl MonomialOrder {
    /// Degree-lexicographic order; `precedence` lists every letter once,
    /// smallest first.
    pub fn deglex(precedence: &[Var]) -> Self {
        Self::block(vec![precedence.to_vec()]).expect("single block is valid")
    }

    /// Block order over letters `0..n`, highest block first.
    pub fn block(blocks: Vec<Vec<Var>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        if blocks.len() > u8::MAX as usize {
            return Err(Error::Order("too many blocks".into()));
        }
        let mut rank = vec![u16::MAX; n];
        let mut block_of = vec![0u8; n];
        let mut next = 0u16;
        for (bi, blk) in blocks.iter().enumerate().rev() {
            for &v in blk {
                if v.idx() >= n || rank[v.idx()] != u16::MAX {
                    return Err(Error::Order(format!(
                        "letter #{} is missing from or repeated in the block list",
                        v.idx()
                    )));
                }
                rank[v.idx()] = next;
                block_of[v.idx()] = bi as u8;
                next += 1;
            }
        }
        let blocks = blocks
            .into_iter()
            .filter(|b| !b.is_empty())
            .collect::<Vec<_>>();
        // renumber block indices after dropping empty blocks
        let mut order = MonomialOrder {
            rank,
            block_of,
            blocks: Vec::new(),
        };
        for (bi, blk) in blocks.iter().enumerate() {
            for v in blk {
                order.block_of[v.idx()] = bi as u8;
            }
        }
        order.blocks = blocks;
        Ok(order)
    }

    pub fn num_vars(&self) -> usize {
        self.rank.len()
    }

    pub fn blocks(&self) -> &[Vec<Var>] {
        &self.blocks
    }

    pub fn contains(&self, v: Var) -> bool {
        v.idx() < self.rank.len()
    }

    pub fn rank(&self, v: Var) -> u16 {
        self.rank[v.idx()]
    }

    /// Letters from smallest to largest.
    pub fn precedence(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = (0..self.rank.len()).map(|i| Var(i as u16)).collect();
        vs.sort_by_key(|v| self.rank[v.idx()]);
        vs
    }

    /// New order with `top` as an additional highest block; letters of the
    /// existing blocks keep their relative order.
    pub fn with_top_block(&self, top: Vec<Var>) -> Result<Self> {
        let mut blocks = vec![top];
        blocks.extend(self.blocks.iter().cloned());
        Self::block(blocks)
    }

    pub fn with_bottom_block(&self, bottom: Vec<Var>) -> Result<Self> {
        let mut blocks = self.blocks.clone();
        blocks.push(bottom);
        Self::block(blocks)
    }

    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.compare_words(a.letters(), b.letters())
    }

    pub fn compare_words(&self, a: &[Var], b: &[Var]) -> Ordering {
        if self.blocks.len() > 1 {
            let mut diff: SmallVec<[i32; 8]> = SmallVec::from_elem(0, self.blocks.len());
            for v in a {
                diff[self.block_of[v.idx()] as usize] += 1;
            }
            for v in b {
                diff[self.block_of[v.idx()] as usize] -= 1;
            }
            if let Some(d) = diff.iter().find(|d| **d != 0) {
                return d.cmp(&0);
            }
        }
        a.len().cmp(&b.len()).then_with(|| {
            for (x, y) in a.iter().zip(b) {
                if x != y {
                    return self.rank[x.idx()].cmp(&self.rank[y.idx()]);
                }
            }
            Ordering::Equal
        })
    }

    /// Comparison that rejects letters outside the order.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for v in a.letters().iter().chain(b.letters()) {
            if !self.contains(*v) {
                return Err(Error::ForeignVariable(v.idx()));
            }
        }
        Ok(self.compare(a, b))
    }

    /// Structural test: `ys` is a union of blocks that all sit above every
    /// block containing a letter outside `ys`.
    pub fn is_elimination_for(&self, ys: &[Var]) -> bool {
        if ys.iter().any(|v| !self.contains(*v)) {
            return false;
        }
        let mut seen_other = false;
        for blk in &self.blocks {
            let inside = blk.iter().filter(|v| ys.contains(v)).count();
            if inside == 0 {
                seen_other = true;
            } else if inside < blk.len() || seen_other {
                return false;
            }
        }
        true
    }

    /// Leading monomial, leading coefficient and tail of a nonzero
    /// polynomial, computed from scratch under this order.
    pub fn decompose(&self, f: &Poly) -> Result<(Monomial, Coeff, Poly)> {
        let lead = f
            .terms()
            .iter()
            .max_by(|a, b| self.compare(&a.mono, &b.mono))
            .ok_or(Error::ZeroPolynomial)?;
        debug_assert!(!lead.coeff.is_zero());
        let tail = Poly::from_terms(
            f.terms()
                .iter()
                .filter(|t| t.mono != lead.mono)
                .cloned()
                .collect(),
            self,
        );
        Ok((lead.mono.clone(), lead.coeff.clone(), tail))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{coeff, Alphabet, Ring};
    use proptest::prelude::*;

    fn v(i: u16) -> Var {
        Var(i)
    }

    fn w(xs: &[u16]) -> Monomial {
        xs.iter().map(|&i| Var(i)).collect()
    }

    #[test]
    fn deglex_precedence() {
        // x = 0, y = 1, x < y
        let o = MonomialOrder::deglex(&[v(0), v(1)]);
        assert_eq!(o.compare(&w(&[0, 1]), &w(&[1, 0])), Ordering::Less);
        assert_eq!(o.compare(&w(&[0, 1]), &w(&[0, 1])), Ordering::Equal);
        assert_eq!(o.compare(&w(&[1]), &w(&[0, 0])), Ordering::Less);
    }

    #[test]
    fn elimination_block_dominates() {
        // t = 0 above {x = 1, y = 2}
        let o = MonomialOrder::block(vec![vec![v(0)], vec![v(1), v(2)]]).unwrap();
        assert_eq!(o.compare(&w(&[0]), &w(&[1, 1, 1, 1, 1])), Ordering::Greater);
        assert!(o.is_elimination_for(&[v(0)]));
        assert!(!o.is_elimination_for(&[v(1)]));
    }

    #[test]
    fn elimination_structural_check() {
        let mixed = MonomialOrder::deglex(&[v(0), v(1), v(2)]);
        assert!(!mixed.is_elimination_for(&[v(2)]));
        let three = MonomialOrder::block(vec![vec![v(0), v(1)], vec![v(2)], vec![v(3)]]).unwrap();
        assert!(three.is_elimination_for(&[v(0), v(1), v(2)]));
        assert!(three.is_elimination_for(&[v(0), v(1)]));
        assert!(!three.is_elimination_for(&[v(0), v(2)]));
        assert!(!three.is_elimination_for(&[v(2)]));
    }

    #[test]
    fn block_list_must_partition() {
        assert!(MonomialOrder::block(vec![vec![v(0)], vec![v(0)]]).is_err());
        assert!(MonomialOrder::block(vec![vec![v(0)], vec![v(2)]]).is_err());
    }

    #[test]
    fn foreign_letters_rejected() {
        let o = MonomialOrder::deglex(&[v(0)]);
        assert_eq!(
            o.try_compare(&w(&[0]), &w(&[3])),
            Err(Error::ForeignVariable(3))
        );
    }

    #[test]
    fn decompose_examples() {
        let mut a = Alphabet::new();
        a.add_plain("x1").unwrap();
        a.add_plain("x2").unwrap();
        let r = Ring::deglex(a);
        let f = r.parse("2 x1 x2 - 3 x2").unwrap();
        let (lm, lc, tail) = r.order().decompose(&f).unwrap();
        assert_eq!(lm, r.word("x1 x2").unwrap());
        assert_eq!(lc, coeff(2));
        assert_eq!(tail, r.parse("-3 x2").unwrap());
        let (lm, lc, tail) = r.order().decompose(&r.parse("5").unwrap()).unwrap();
        assert_eq!((lm, lc, tail), (Monomial::one(), coeff(5), Poly::zero()));
        assert_eq!(
            r.order().decompose(&Poly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn decompose_under_elimination_for_v() {
        let mut a = Alphabet::new();
        a.add_pair("b", "b*").unwrap();
        a.add_pair("y", "y*").unwrap();
        let vv = a.add_self_adjoint("v").unwrap();
        let base: Vec<Var> = a.vars().filter(|x| *x != vv).collect();
        let o = MonomialOrder::block(vec![vec![vv], base]).unwrap();
        let r = Ring::new(a, o).unwrap();
        let f = r.parse("v - b* y* y b").unwrap();
        assert_eq!(r.order().decompose(&f).unwrap().0, Monomial::letter(vv));
        assert_eq!(f.lm(), Some(&Monomial::letter(vv)));
    }

    fn arb_word(n: u16, max: usize) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0..n, 0..=max).prop_map(|xs| w(&xs))
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::deglex(&[v(0), v(1), v(2), v(3)])),
            Just(MonomialOrder::deglex(&[v(3), v(1), v(0), v(2)])),
            Just(MonomialOrder::block(vec![vec![v(3)], vec![v(0), v(1), v(2)]]).unwrap()),
            Just(MonomialOrder::block(vec![vec![v(2), v(3)], vec![v(1)], vec![v(0)]]).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn total_antisymmetric_transitive(o in arb_order(), a in arb_word(4, 5), b in arb_word(4, 5), c in arb_word(4, 5)) {
            let ab = o.compare(&a, &b);
            prop_assert_eq!(ab, o.compare(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab != Ordering::Greater && o.compare(&b, &c) != Ordering::Greater {
                prop_assert_ne!(o.compare(&a, &c), Ordering::Greater);
            }
            prop_assert_ne!(o.compare(&Monomial::one(), &a), Ordering::Greater);
        }

        #[test]
        fn multiplicative(o in arb_order(), m in arb_word(4, 4), n in arb_word(4, 4), a in arb_word(4, 3), b in arb_word(4, 3)) {
            prop_assert_eq!(o.compare(&m, &n), o.compare(&m.sandwich(&a, &b), &n.sandwich(&a, &b)));
        }

        #[test]
        fn elimination_sound(terms in prop::collection::vec(arb_word(4, 4), 1..6)) {
            // block order eliminating {2, 3}
            let o = MonomialOrder::block(vec![vec![v(2), v(3)], vec![v(0), v(1)]]).unwrap();
            prop_assert!(o.is_elimination_for(&[v(2), v(3)]));
            let f = Poly::from_terms(terms.into_iter().map(|m| crate::freealg::Term::new(coeff(1), m)).collect(), &o);
            let lm = f.lm().unwrap();
            if !lm.contains_var(v(2)) && !lm.contains_var(v(3)) {
                prop_assert!(!f.contains_var(v(2)) && !f.contains_var(v(3)));
            }
        }
    }
}
