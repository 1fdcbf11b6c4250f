//! The operad pair on explicit bases: differentials of short forests and
//! triples, operadic composition and bimodule actions, the counit and the
//! comultiplication, and the quotient maps from tree bases.
//!
//! Composition conventions follow the leaf order fixed in [`crate::forest`]:
//! forests are stored innermost-first, so composing into the module slot puts
//! the inner factor's trees first, the counit concatenates `G` before `F`, and
//! a left action appends to `F` while a right action prepends to `G`.

use std::fmt;

use crate::chain::Chain;
use crate::forest::{FtfTriple, MiddleTree, ShortForest, Side, Tree, TripleSpot};
use crate::tree::{PaintedTree, PlanarTree};
use crate::{Error, Result};

/// Homogeneous GF(2) combination of short forests.
pub type OmegaElement = Chain<ShortForest>;
/// Homogeneous GF(2) combination of triples.
pub type TElement = Chain<FtfTriple>;
/// Homogeneous GF(2) combination of quintuples, the normal form for T ⊗ T.
pub type TTensorTElement = Chain<Quint>;

/// Differential of a short forest: unite and separate at every neighbouring
/// branch pair.
pub fn d_omega(f: &ShortForest) -> OmegaElement {
    let mut out = Chain::zero();
    for (tree, left) in f.branch_pairs() {
        out.add(f.unite(tree, left).expect("valid address"));
        out.add(f.separate(tree, left).expect("valid address"));
    }
    out
}

/// Differential of a triple: unites everywhere, in-place separations inside
/// the two forests, and every split of the middle tree sent to either side.
///
/// Splitting after `p` of the `b` middle branches contributes the left-side
/// term for `p < b` (upper part into `F`, lower part stays the map) and the
/// right-side term for `p > 0` (lower part into `G`); the two extremes are the
/// unit-middle terms, which vanish when the middle tree is already the unit.
pub fn d_triple(x: &FtfTriple) -> TElement {
    let mut out = Chain::zero();
    for (spot, left) in x.branch_pairs() {
        out.add(x.unite(spot, left).expect("valid address"));
        if spot != TripleSpot::Middle {
            out.add(x.separate(spot, left).expect("valid address"));
        }
    }
    let b = x.middle.branch_count();
    for p in 0..b {
        out.add(x.split_middle(p, Side::Left));
    }
    for p in 1..=b {
        out.add(x.split_middle(p, Side::Right));
    }
    out
}

/// Operadic composition in the module slot: the inner factor happens first,
/// so its trees come first.
pub fn compose_m(outer: &ShortForest, inner: &ShortForest) -> ShortForest {
    inner.concat(outer)
}

/// Left action of a forest on a triple (after the map).
pub fn act_left(w: &ShortForest, x: &FtfTriple) -> FtfTriple {
    FtfTriple::new(x.after.concat(w), x.middle.clone(), x.before.clone())
}

/// Right action of a forest on a triple (before the map).
pub fn act_right(x: &FtfTriple, w: &ShortForest) -> FtfTriple {
    FtfTriple::new(x.after.clone(), x.middle.clone(), w.concat(&x.before))
}

/// Counit: zero unless the middle tree is the unit, in which case the two
/// forests concatenate, `G`'s trees first.
pub fn counit_eps(x: &FtfTriple) -> Option<ShortForest> {
    x.middle.is_unit().then(|| x.before.concat(&x.after))
}

/// Basis element of `T ⊗ T` over the operad, in normal form: the outer
/// factor's right forest is absorbed into the inner factor's left forest,
/// leaving `(F1, T1) ⊗ (F2, T2, G2)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quint {
    pub f1: ShortForest,
    pub t1: MiddleTree,
    pub f2: ShortForest,
    pub t2: MiddleTree,
    pub g2: ShortForest,
}

impl Quint {
    pub fn new(f1: ShortForest, t1: MiddleTree, f2: ShortForest, t2: MiddleTree, g2: ShortForest) -> Self {
        Quint { f1, t1, f2, t2, g2 }
    }

    pub fn leaves(&self) -> u32 {
        self.f1.leaves() + self.t1.leaves() + self.f2.leaves() + self.t2.leaves() + self.g2.leaves()
    }

    pub fn dim(&self) -> usize {
        self.f1.dim() + self.t1.branch_count() + self.f2.dim() + self.t2.branch_count() + self.g2.dim()
    }

    fn outer(&self) -> FtfTriple {
        FtfTriple::new(self.f1.clone(), self.t1.clone(), ShortForest::empty())
    }

    fn inner(&self) -> FtfTriple {
        FtfTriple::new(self.f2.clone(), self.t2.clone(), self.g2.clone())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('|').collect();
        if parts.len() != 5 {
            return Err(Error::Parse(format!("a quintuple needs four '|' separators: `{s}`")));
        }
        Ok(Quint {
            f1: ShortForest::parse(parts[0])?,
            t1: MiddleTree::parse(parts[1].trim())?,
            f2: ShortForest::parse(parts[2])?,
            t2: MiddleTree::parse(parts[3].trim())?,
            g2: ShortForest::parse(parts[4])?,
        })
    }
}

impl fmt::Display for Quint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {} | {} | {}", self.f1, self.t1, self.f2, self.t2, self.g2)
    }
}

/// Comultiplication: split the middle tree in all b+1 ways; the upper part
/// (with `F`) goes to the outer factor, the lower part (with `G`) to the
/// inner one. The orientation is pinned by the counit laws and the chain-map
/// property.
pub fn comult_c(x: &FtfTriple) -> TTensorTElement {
    let mut out = Chain::zero();
    for p in 0..=x.middle.branch_count() {
        let (lo, hi) = x.middle.split(p);
        out.add(Quint::new(x.after.clone(), hi, ShortForest::empty(), lo, x.before.clone()));
    }
    out
}

/// Differential of the normal form, by the signless Leibniz rule; boundary
/// terms that give the outer factor a right forest are renormalized by
/// sliding it onto the inner factor's left forest.
pub fn d_quint(q: &Quint) -> TTensorTElement {
    let mut out = Chain::zero();
    for term in d_triple(&q.outer()).iter() {
        out.add(Quint::new(
            term.after.clone(),
            term.middle.clone(),
            q.f2.concat(&term.before),
            q.t2.clone(),
            q.g2.clone(),
        ));
    }
    for term in d_triple(&q.inner()).iter() {
        out.add(Quint::new(
            q.f1.clone(),
            q.t1.clone(),
            term.after.clone(),
            term.middle.clone(),
            term.before.clone(),
        ));
    }
    out
}

/// Counit applied to the outer factor of a quintuple, then folded into the
/// inner one by a left action.
pub fn eps_outer(q: &Quint) -> Option<FtfTriple> {
    q.t1.is_unit().then(|| FtfTriple::new(q.f2.concat(&q.f1), q.t2.clone(), q.g2.clone()))
}

/// Counit applied to the inner factor, then folded into the outer one by a
/// right action.
pub fn eps_inner(q: &Quint) -> Option<FtfTriple> {
    q.t2.is_unit().then(|| FtfTriple::new(q.f1.clone(), q.t1.clone(), q.g2.concat(&q.f2)))
}

/// Normal form for the triple tensor power: `(A1,M1) ⊗ (A2,M2) ⊗ (A3,M3,B3)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sept {
    pub a1: ShortForest,
    pub m1: MiddleTree,
    pub a2: ShortForest,
    pub m2: MiddleTree,
    pub a3: ShortForest,
    pub m3: MiddleTree,
    pub b3: ShortForest,
}

impl fmt::Display for Sept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | {} | {} | {} | {} | {} | {}",
            self.a1, self.m1, self.a2, self.m2, self.a3, self.m3, self.b3
        )
    }
}

/// `(c ⊗ id)` on a quintuple: comultiply the outer factor.
pub fn comult_outer(q: &Quint) -> Chain<Sept> {
    let mut out = Chain::zero();
    for p in 0..=q.t1.branch_count() {
        let (lo, hi) = q.t1.split(p);
        out.add(Sept {
            a1: q.f1.clone(),
            m1: hi,
            a2: ShortForest::empty(),
            m2: lo,
            a3: q.f2.clone(),
            m3: q.t2.clone(),
            b3: q.g2.clone(),
        });
    }
    out
}

/// `(id ⊗ c)` on a quintuple: comultiply the inner factor.
pub fn comult_inner(q: &Quint) -> Chain<Sept> {
    let mut out = Chain::zero();
    for p in 0..=q.t2.branch_count() {
        let (lo, hi) = q.t2.split(p);
        out.add(Sept {
            a1: q.f1.clone(),
            m1: q.t1.clone(),
            a2: q.f2.clone(),
            m2: hi,
            a3: ShortForest::empty(),
            m3: lo,
            b3: q.g2.clone(),
        });
    }
    out
}

/// Collapses a pure associative subtree of a painted tree to its leaf count:
/// single-input paint-boundary vertices are absorbed, every other vertex must
/// be binary, otherwise the subtree dies in the quotient.
fn collapse_a_subtree(t: &PaintedTree) -> Option<u32> {
    match t {
        PaintedTree::Leaf => Some(1),
        PaintedTree::Vertex { children, .. } => {
            if t.is_paint_boundary() {
                if children.len() != 1 {
                    return None;
                }
                return collapse_a_subtree(&children[0]);
            }
            if children.len() != 2 {
                return None;
            }
            Some(collapse_a_subtree(&children[0])? + collapse_a_subtree(&children[1])?)
        }
    }
}

fn collapse_planar_a_subtree(t: &PlanarTree) -> Option<u32> {
    match t {
        PlanarTree::Leaf => Some(1),
        PlanarTree::Vertex(children) => {
            if children.len() != 2 {
                return None;
            }
            Some(collapse_planar_a_subtree(&children[0])? + collapse_planar_a_subtree(&children[1])?)
        }
    }
}

/// Quotient of an associahedron face to the forest basis. The tree is read in
/// module colors: the rightmost leaf is the module input and the path to it is
/// the module strand. Returns `None` when a pure associative vertex has three
/// or more inputs.
///
/// Branches are read right to left and strand vertices bottom-up, matching the
/// innermost-first storage of forests.
pub fn quotient_assoc(t: &PlanarTree) -> Option<ShortForest> {
    fn go(t: &PlanarTree, acc: &mut Vec<Tree>) -> bool {
        match t {
            PlanarTree::Leaf => true,
            PlanarTree::Vertex(children) => {
                let (strand, a_children) = children.split_last().expect("vertices are nonempty");
                if !go(strand, acc) {
                    return false;
                }
                let mut branches = Vec::with_capacity(a_children.len());
                for c in a_children.iter().rev() {
                    match collapse_planar_a_subtree(c) {
                        Some(k) => branches.push(k),
                        None => return false,
                    }
                }
                acc.push(Tree::new(branches).expect("strand vertices have inputs"));
                true
            }
        }
    }
    let mut acc = Vec::new();
    go(t, &mut acc).then(|| ShortForest::new(acc))
}

/// Quotient of a multiplihedron face to the triple basis, in module colors
/// (rightmost leaf = module input). Returns `None` when a pure associative
/// vertex has three or more inputs or an off-strand paint-boundary vertex has
/// two or more.
pub fn quotient_multipl(t: &PaintedTree) -> Option<FtfTriple> {
    let mut painted: Vec<Tree> = Vec::new();
    let mut boundary: Option<Vec<u32>> = None;
    let mut unpainted: Vec<Tree> = Vec::new();
    let mut node = t;
    // Walk the strand from the root to the module leaf.
    while let PaintedTree::Vertex { children, .. } = node {
        let (strand, a_children) = children.split_last().expect("vertices are nonempty");
        let mut branches = Vec::with_capacity(a_children.len());
        for c in a_children.iter().rev() {
            branches.push(collapse_a_subtree(c)?);
        }
        if node.is_paint_boundary() {
            debug_assert!(boundary.is_none(), "one paint-boundary vertex per strand");
            boundary = Some(branches);
        } else if node.is_painted() {
            painted.push(Tree::new(branches).expect("non-boundary vertices have inputs"));
        } else {
            unpainted.push(Tree::new(branches).expect("non-boundary vertices have inputs"));
        }
        node = strand;
    }
    // Collected root-down; forests store innermost-first.
    painted.reverse();
    unpainted.reverse();
    let middle = MiddleTree::new(boundary.expect("painted roots put one boundary vertex on every strand")).ok()?;
    Some(FtfTriple::new(ShortForest::new(painted), middle, ShortForest::new(unpainted)))
}

fn compositions_into(n: u32, min_parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(left: u32, min_parts: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            if acc.len() >= min_parts {
                out.push(acc.clone());
            }
            return;
        }
        for first in 1..=left {
            acc.push(first);
            rec(left - first, min_parts, acc, out);
            acc.pop();
        }
    }
    rec(n, min_parts, &mut Vec::new(), &mut out);
    out
}

/// Differential of the arity-n generator of the homotopy-associative operad,
/// as the sum of all two-vertex planar trees.
pub fn d_mu(n: u32) -> Result<Chain<PlanarTree>> {
    if n < 2 {
        return Err(Error::OutOfRange(n, "generator arity"));
    }
    let mut out = Chain::zero();
    for j in 2..n {
        for i in 0..=(n - j) {
            let outer = PlanarTree::corolla(n - j + 1);
            out.add(outer.graft(i + 1, &PlanarTree::corolla(j))?);
        }
    }
    Ok(out)
}

/// Differential of the arity-n module generator, as a sum of two-vertex
/// painted trees: an associative corolla hanging under the paint boundary, or
/// a painted corolla over paint-boundary corollas.
pub fn d_f(n: u32) -> Result<Chain<PaintedTree>> {
    if n < 1 {
        return Err(Error::OutOfRange(n, "generator arity"));
    }
    let mut out = Chain::zero();
    for s in 2..=n {
        for r in 0..=(n - s) {
            let root = PaintedTree::corolla(n - s + 1);
            out.add(root.graft_right(r + 1, &PlanarTree::corolla(s))?);
        }
    }
    for parts in compositions_into(n, 2) {
        let children = parts.iter().map(|&k| PaintedTree::corolla(k)).collect();
        out.add(PaintedTree::Vertex { painted: true, children });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{forests_with_leaves, triples_with_leaves};

    fn forest(s: &str) -> ShortForest {
        ShortForest::parse(s).unwrap()
    }

    fn triple(s: &str) -> FtfTriple {
        FtfTriple::parse(s).unwrap()
    }

    fn strings<T: Ord + std::fmt::Display>(c: &Chain<T>) -> Vec<String> {
        c.iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn d_omega_small_cases() {
        assert!(d_omega(&forest("[1]")).is_zero());
        let d = d_omega(&forest("[1,1]"));
        assert_eq!(strings(&d), vec!["[1][1]", "[2]"]);
    }

    #[test]
    fn d_omega_squares_to_zero() {
        for n in 1..=6 {
            for f in forests_with_leaves(n) {
                let mut dd: Chain<ShortForest> = Chain::zero();
                for g in d_omega(&f).iter() {
                    dd.add_chain(d_omega(g));
                }
                assert!(dd.is_zero(), "d² ≠ 0 on {f}");
            }
        }
    }

    #[test]
    fn d_triple_on_unit_middle_generator() {
        let d = d_triple(&triple("- | [1] | -"));
        assert_eq!(strings(&d), vec!["- | [] | [1]", "[1] | [] | -"]);
    }

    #[test]
    fn d_triple_on_pentagon_top_cell() {
        let d = d_triple(&triple("- | [1,1] | -"));
        assert_eq!(
            strings(&d),
            vec!["- | [] | [1,1]", "- | [1] | [1]", "- | [2] | -", "[1] | [1] | -", "[1,1] | [] | -"]
        );
    }

    #[test]
    fn d_triple_squares_to_zero() {
        for n in 1..=6 {
            for x in triples_with_leaves(n) {
                let mut dd: Chain<FtfTriple> = Chain::zero();
                for y in d_triple(&x).iter() {
                    dd.add_chain(d_triple(y));
                }
                assert!(dd.is_zero(), "d² ≠ 0 on {x}");
            }
        }
    }

    #[test]
    fn compose_puts_inner_first() {
        assert_eq!(compose_m(&forest("[2]"), &forest("[1,1]")), forest("[1,1][2]"));
    }

    #[test]
    fn compose_is_associative() {
        // All decompositions with at most six leaves in total.
        for la in 0..=6u32 {
            for lb in 0..=6 - la {
                for lc in 0..=6 - la - lb {
                    for a in forests_with_leaves(la) {
                        for b in forests_with_leaves(lb) {
                            for c in forests_with_leaves(lc) {
                                assert_eq!(compose_m(&compose_m(&a, &b), &c), compose_m(&a, &compose_m(&b, &c)));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn identity_feed_is_neutral() {
        let f = forest("[1,2][3]");
        for leaf in 1..=f.leaves() {
            assert_eq!(f.feed_leaf(leaf, 1).unwrap(), f);
        }
    }

    #[test]
    fn counit_values() {
        assert_eq!(counit_eps(&triple("- | [] | [1,1]")), Some(forest("[1,1]")));
        assert_eq!(counit_eps(&triple("- | [1] | -")), None);
        assert_eq!(counit_eps(&triple("[2] | [] | [1]")), Some(forest("[1][2]")));
    }

    #[test]
    fn counit_is_a_chain_map() {
        for n in 1..=6 {
            for x in triples_with_leaves(n) {
                let mut lhs: Chain<ShortForest> = Chain::zero();
                for y in d_triple(&x).iter() {
                    if let Some(w) = counit_eps(y) {
                        lhs.add(w);
                    }
                }
                let rhs = match counit_eps(&x) {
                    Some(w) => d_omega(&w),
                    None => Chain::zero(),
                };
                assert_eq!(lhs, rhs, "counit fails to commute with d on {x}");
            }
        }
    }

    #[test]
    fn comult_counts_splittings() {
        assert_eq!(comult_c(&triple("- | [] | -")).len(), 1);
        assert_eq!(comult_c(&triple("- | [1,1] | -")).len(), 3);
    }

    #[test]
    fn comult_is_a_chain_map() {
        for n in 1..=5 {
            for x in triples_with_leaves(n) {
                let mut lhs: Chain<Quint> = Chain::zero();
                for y in d_triple(&x).iter() {
                    lhs.add_chain(comult_c(y));
                }
                let mut rhs: Chain<Quint> = Chain::zero();
                for q in comult_c(&x).iter() {
                    rhs.add_chain(d_quint(q));
                }
                assert_eq!(lhs, rhs, "comultiplication fails to commute with d on {x}");
            }
        }
    }

    #[test]
    fn tensor_square_differential_squares_to_zero() {
        for n in 1..=4 {
            for x in triples_with_leaves(n) {
                for q in comult_c(&x).iter() {
                    let mut dd: Chain<Quint> = Chain::zero();
                    for y in d_quint(q).iter() {
                        dd.add_chain(d_quint(y));
                    }
                    assert!(dd.is_zero(), "d² ≠ 0 on quintuple {q}");
                }
            }
        }
    }

    #[test]
    fn counit_laws() {
        for n in 1..=5 {
            for x in triples_with_leaves(n) {
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
                let id = Chain::singleton(x.clone());
                assert_eq!(left, id, "(ε⊗id)c ≠ id on {x}");
                assert_eq!(right, id, "(id⊗ε)c ≠ id on {x}");
            }
        }
    }

    #[test]
    fn comult_is_coassociative() {
        for n in 1..=5 {
            for x in triples_with_leaves(n) {
                let mut lhs: Chain<Sept> = Chain::zero();
                let mut rhs: Chain<Sept> = Chain::zero();
                for q in comult_c(&x).iter() {
                    lhs.add_chain(comult_outer(q));
                    rhs.add_chain(comult_inner(q));
                }
                assert_eq!(lhs, rhs, "coassociativity fails on {x}");
            }
        }
    }

    #[test]
    fn action_axioms() {
        let triples: Vec<FtfTriple> = (1..=2).flat_map(triples_with_leaves).collect();
        let forests: Vec<ShortForest> = (1..=2).flat_map(forests_with_leaves).collect();
        for x in &triples {
            for w1 in &forests {
                for w2 in &forests {
                    assert_eq!(act_left(&compose_m(w1, w2), x), act_left(w1, &act_left(w2, x)));
                    assert_eq!(act_right(&act_right(x, w1), w2), act_right(x, &compose_m(w1, w2)));
                    assert_eq!(act_left(w1, &act_right(x, w2)), act_right(&act_left(w1, x), w2));
                }
            }
        }
    }

    #[test]
    fn actions_satisfy_leibniz() {
        for x in triples_with_leaves(2) {
            for w in forests_with_leaves(2) {
                let mut lhs = d_triple(&act_left(&w, &x));
                for dw in d_omega(&w).iter() {
                    lhs.add(act_left(dw, &x));
                }
                for dx in d_triple(&x).iter() {
                    lhs.add(act_left(&w, dx));
                }
                assert!(lhs.is_zero(), "left action fails Leibniz on {w}, {x}");

                let mut rhs = d_triple(&act_right(&x, &w));
                for dw in d_omega(&w).iter() {
                    rhs.add(act_right(&x, dw));
                }
                for dx in d_triple(&x).iter() {
                    rhs.add(act_right(dx, &w));
                }
                assert!(rhs.is_zero(), "right action fails Leibniz on {x}, {w}");
            }
        }
    }

    #[test]
    fn quotient_assoc_values() {
        // Both binary brackets of three letters followed by the module input
        // collapse to the same forest.
        let left_comb = PlanarTree::parse("(((*,*),*),*)").unwrap();
        let right_comb = PlanarTree::parse("((*,(*,*)),*)").unwrap();
        assert_eq!(quotient_assoc(&left_comb), Some(forest("[3]")));
        assert_eq!(quotient_assoc(&right_comb), Some(forest("[3]")));
        // Nested module multiplications.
        let nested = PlanarTree::parse("(*,(*,(*,*)))").unwrap();
        assert_eq!(quotient_assoc(&nested), Some(forest("[1][1][1]")));
        // A ternary associative vertex dies.
        let ternary = PlanarTree::parse("((*,*,*),*)").unwrap();
        assert_eq!(quotient_assoc(&ternary), None);
    }

    #[test]
    fn quotient_multipl_values() {
        // The top cell collapses to the bare module generator.
        assert_eq!(quotient_multipl(&PaintedTree::corolla(4)), Some(triple("- | [1,1,1] | -")));
        // Both endpoints of the hexagon's contracted edge land on one vertex.
        let a = PaintedTree::parse("!(!(!(*),!(*)),!(*))").unwrap();
        let b = PaintedTree::parse("!(!((*,*)),!(*))").unwrap();
        assert_eq!(quotient_multipl(&a), Some(triple("[2] | [] | -")));
        assert_eq!(quotient_multipl(&b), Some(triple("[2] | [] | -")));
        // An off-strand paint-boundary vertex of arity two dies.
        let dies = PaintedTree::parse("!(!(*,*),!(*))").unwrap();
        assert_eq!(quotient_multipl(&dies), None);
    }

    #[test]
    fn generator_differential_formulas() {
        assert_eq!(d_mu(3).unwrap().len(), 2);
        assert_eq!(d_mu(4).unwrap().len(), 5);
        // Arity 2: one associative corolla under the boundary, one painted
        // vertex over two boundary caps.
        let d2 = d_f(2).unwrap();
        assert_eq!(strings(&d2), vec!["!((*,*))", "!(!(*),!(*))"]);
    }
}
