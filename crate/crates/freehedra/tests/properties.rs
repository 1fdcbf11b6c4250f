//! Randomized invariants on the algebraic bases, reaching sizes beyond the
//! exhaustive suites.

use proptest::prelude::*;

use freehedra::chain::Chain;
use freehedra::correspond::{bijection_i, inverse_i, word_map};
use freehedra::expression::NiceExpression;
use freehedra::forest::{FtfTriple, MiddleTree, ShortForest, Tree};
use freehedra::operad::{comult_c, d_omega, d_triple, eps_inner, eps_outer};
use freehedra::word::CubeWord;

fn arb_tree() -> impl Strategy<Value = Tree> {
    prop::collection::vec(1u32..=4, 1..=4).prop_map(|b| Tree::new(b).unwrap())
}

fn arb_forest() -> impl Strategy<Value = ShortForest> {
    prop::collection::vec(arb_tree(), 0..=4).prop_map(ShortForest::new)
}

fn arb_triple() -> impl Strategy<Value = FtfTriple> {
    (arb_forest(), prop::collection::vec(1u32..=4, 0..=3), arb_forest())
        .prop_map(|(f, t, g)| FtfTriple::new(f, MiddleTree::new(t).unwrap(), g))
}

proptest! {
    #[test]
    fn forest_encoding_roundtrip(f in arb_forest()) {
        prop_assert_eq!(ShortForest::parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn triple_encoding_roundtrip(x in arb_triple()) {
        prop_assert_eq!(FtfTriple::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn expression_roundtrip_through_triples(x in arb_triple()) {
        let e = inverse_i(&x);
        prop_assert_eq!(NiceExpression::parse(&e.to_string()).unwrap(), e.clone());
        prop_assert_eq!(bijection_i(&e), x.clone());
        prop_assert_eq!(e.dim(), x.dim());
    }

    #[test]
    fn d_omega_squares_to_zero(f in arb_forest()) {
        let mut dd: Chain<ShortForest> = Chain::zero();
        for g in d_omega(&f).iter() {
            dd.add_chain(d_omega(g));
        }
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn d_triple_squares_to_zero(x in arb_triple()) {
        let mut dd: Chain<FtfTriple> = Chain::zero();
        for y in d_triple(&x).iter() {
            dd.add_chain(d_triple(y));
        }
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn word_commutes_with_differentials(f in arb_forest()) {
        let lhs: Chain<CubeWord> = d_omega(&f).iter().map(word_map).collect();
        let rhs: Chain<CubeWord> = word_map(&f).boundary().into_iter().collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn word_degree_counts_b_letters(f in arb_forest()) {
        prop_assert_eq!(word_map(&f).dim(), f.dim());
    }

    #[test]
    fn counit_laws_hold(x in arb_triple()) {
        let mut left: Chain<FtfTriple> = Chain::zero();
        let mut right: Chain<FtfTriple> = Chain::zero();
        for q in comult_c(&x).iter() {
            if let Some(y) = eps_outer(q) {
                left.add(y);
            }
            if let Some(y) = eps_inner(q) {
                right.add(y);
            }
        }
        let id = Chain::singleton(x);
        prop_assert_eq!(&left, &id);
        prop_assert_eq!(&right, &id);
    }

    #[test]
    fn face_transformations_drop_dimension(x in arb_triple()) {
        let e = inverse_i(&x);
        for t in e.face_transformations() {
            prop_assert_eq!(t.dim() + 1, e.dim());
            prop_assert_eq!(t.ambient(), e.ambient());
        }
    }
}
