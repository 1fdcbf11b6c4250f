//! Maps between the families: the bijection between nice expressions and
//! triples, the forest-to-cube-word map, the multiplihedron-to-freehedron
//! projection, and the commuting square of projections.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use crate::chain::{ChainComplex, LinearMap, Report};
use crate::expression::NiceExpression;
use crate::families::{complex, Family};
use crate::forest::{forests_with_leaves, triples_with_leaves, FtfTriple, MiddleTree, ShortForest, Tree};
use crate::operad::{
    comult_c, counit_eps, d_omega, d_quint, d_triple, quotient_assoc, quotient_multipl, Quint,
};
use crate::tree::{PaintedTree, PlanarTree};
use crate::word::{CubeWord, Letter};
use crate::{Error, Result};

/// The chain complex of the operad piece in arity `n`: short forests with `n`
/// leaves under the unite/separate differential.
pub fn omega_complex(n: u32) -> Result<Arc<ChainComplex>> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, Arc<ChainComplex>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&n) {
        return Ok(c.clone());
    }
    let forests = forests_with_leaves(n);
    let top = forests.iter().map(|f| f.dim()).max().unwrap_or(0);
    let mut graded = vec![Vec::new(); top + 1];
    for f in &forests {
        graded[f.dim()].push(f.to_string());
    }
    let built = ChainComplex::build(format!("Omega({n})"), graded, |_d, enc| {
        let f = ShortForest::parse(enc).expect("basis encodings parse");
        d_omega(&f).iter().map(|g| g.to_string()).collect()
    })?;
    let arc = Arc::new(built);
    cache.lock().unwrap().insert(n, arc.clone());
    Ok(arc)
}

/// The chain complex of the bimodule piece in arity `n`: triples with `n`
/// leaves under the triple differential.
pub fn triple_complex(n: u32) -> Result<Arc<ChainComplex>> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, Arc<ChainComplex>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&n) {
        return Ok(c.clone());
    }
    let triples = triples_with_leaves(n);
    let top = triples.iter().map(|x| x.dim()).max().unwrap_or(0);
    let mut graded = vec![Vec::new(); top + 1];
    for x in &triples {
        graded[x.dim()].push(x.to_string());
    }
    let built = ChainComplex::build(format!("T({n})"), graded, |_d, enc| {
        let x = FtfTriple::parse(enc).expect("basis encodings parse");
        d_triple(&x).iter().map(|y| y.to_string()).collect()
    })?;
    let arc = Arc::new(built);
    cache.lock().unwrap().insert(n, arc.clone());
    Ok(arc)
}

/// The chain complex of quintuples (the normal form of T ⊗ T) in arity `n`.
pub fn quint_complex(n: u32) -> Result<Arc<ChainComplex>> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, Arc<ChainComplex>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&n) {
        return Ok(c.clone());
    }
    let mut quints = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            for c in 0..=n - a - b {
                for d in 0..=n - a - b - c {
                    let e = n - a - b - c - d;
                    for f1 in forests_with_leaves(a) {
                        for t1 in crate::forest::compositions(b) {
                            let t1 = MiddleTree::new(t1).expect("positive parts");
                            for f2 in forests_with_leaves(c) {
                                for t2 in crate::forest::compositions(d) {
                                    let t2 = MiddleTree::new(t2).expect("positive parts");
                                    for g2 in forests_with_leaves(e) {
                                        quints.push(Quint::new(
                                            f1.clone(),
                                            t1.clone(),
                                            f2.clone(),
                                            t2.clone(),
                                            g2.clone(),
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let top = quints.iter().map(|q| q.dim()).max().unwrap_or(0);
    let mut graded = vec![Vec::new(); top + 1];
    for q in &quints {
        graded[q.dim()].push(q.to_string());
    }
    let built = ChainComplex::build(format!("T⊗T({n})"), graded, |_d, enc| {
        let q = Quint::parse(enc).expect("basis encodings parse");
        d_quint(&q).iter().map(|y| y.to_string()).collect()
    })?;
    let arc = Arc::new(built);
    cache.lock().unwrap().insert(n, arc.clone());
    Ok(arc)
}

fn iota_branches(stretch: &[u32]) -> Vec<u32> {
    stretch.windows(2).map(|w| w[1] - w[0]).collect()
}

/// The bijection from nice expressions to triples: each stretch becomes one
/// tree whose branch leaf counts are the stretch's gaps; stretches after the
/// bar feed the right forest, the bar stretch the middle tree, the rest the
/// left forest.
pub fn bijection_i(e: &NiceExpression) -> FtfTriple {
    let l = e.bar();
    let st = e.stretches();
    let before = ShortForest::new(
        st[..l]
            .iter()
            .map(|s| Tree::new(iota_branches(s)).expect("non-bar stretches have a gap"))
            .collect(),
    );
    let middle = MiddleTree::new(iota_branches(&st[l])).expect("gaps are positive");
    let after = ShortForest::new(
        st[l + 1..]
            .iter()
            .map(|s| Tree::new(iota_branches(s)).expect("non-bar stretches have a gap"))
            .collect(),
    );
    FtfTriple::new(after, middle, before)
}

/// The inverse bijection: walk `G`, the middle tree, then `F`, accumulating
/// branch leaf counts into chained stretches.
pub fn inverse_i(x: &FtfTriple) -> NiceExpression {
    let mut stretches = Vec::new();
    let mut start = 0u32;
    let mut push = |branches: &[u32], start: &mut u32| {
        let mut stretch = vec![*start];
        for &b in branches {
            stretch.push(stretch.last().unwrap() + b);
        }
        *start = *stretch.last().unwrap();
        stretches.push(stretch);
    };
    for t in x.before.trees() {
        push(t.branches(), &mut start);
    }
    push(x.middle.branches(), &mut start);
    for t in x.after.trees() {
        push(t.branches(), &mut start);
    }
    NiceExpression::new(stretches, x.before.tree_count()).expect("triples produce valid expressions")
}

/// The word of a short forest: the i-th letter records whether leaves i and
/// i+1 share a branch (`a`), share only a tree (`b`), or lie in different
/// trees (`c`).
pub fn word_map(f: &ShortForest) -> CubeWord {
    let mut positions = Vec::new();
    for (ti, t) in f.trees().iter().enumerate() {
        for (bi, &count) in t.branches().iter().enumerate() {
            for _ in 0..count {
                positions.push((ti, bi));
            }
        }
    }
    let letters = positions
        .windows(2)
        .map(|w| {
            if w[0].0 != w[1].0 {
                Letter::C
            } else if w[0].1 != w[1].1 {
                Letter::B
            } else {
                Letter::A
            }
        })
        .collect();
    CubeWord::new(letters)
}

/// The bijection as a chain map from the freehedron complex to the triple
/// complex.
pub fn iso_map(n: u32) -> Result<LinearMap> {
    let src = complex(Family::Freehedron, n)?;
    let tgt = triple_complex(n)?;
    LinearMap::from_fn("I", src, tgt, 0, |_d, enc| {
        let e = NiceExpression::parse(enc).expect("basis encodings parse");
        vec![bijection_i(&e).to_string()]
    })
}

/// The word map as a chain map from the arity-n operad complex to the cube
/// complex.
pub fn word_map_linear(n: u32) -> Result<LinearMap> {
    if n == 0 {
        return Err(Error::OutOfRange(0, "word map arity"));
    }
    let src = omega_complex(n)?;
    let tgt = complex(Family::Cube, n - 1)?;
    LinearMap::from_fn("word", src, tgt, 0, |_d, enc| {
        let f = ShortForest::parse(enc).expect("basis encodings parse");
        vec![word_map(&f).to_string()]
    })
}

/// The counit as a chain map from triples to forests.
pub fn eps_map(n: u32) -> Result<LinearMap> {
    let src = triple_complex(n)?;
    let tgt = omega_complex(n)?;
    LinearMap::from_fn("ε", src, tgt, 0, |_d, enc| {
        let x = FtfTriple::parse(enc).expect("basis encodings parse");
        counit_eps(&x).map(|f| f.to_string()).into_iter().collect()
    })
}

/// The comultiplication as a chain map from triples to quintuples.
pub fn comult_map(n: u32) -> Result<LinearMap> {
    let src = triple_complex(n)?;
    let tgt = quint_complex(n)?;
    LinearMap::from_fn("c", src, tgt, 0, |_d, enc| {
        let x = FtfTriple::parse(enc).expect("basis encodings parse");
        comult_c(&x).iter().map(|q| q.to_string()).collect()
    })
}

/// The freehedron-to-cube collapse: counit transported through the bijection.
pub fn freehedron_to_cube(n: u32) -> Result<LinearMap> {
    if n == 0 {
        return Err(Error::OutOfRange(0, "collapse arity"));
    }
    let src = complex(Family::Freehedron, n)?;
    let tgt = complex(Family::Cube, n - 1)?;
    LinearMap::from_fn("F→I", src, tgt, 0, |_d, enc| {
        let e = NiceExpression::parse(enc).expect("basis encodings parse");
        counit_eps(&bijection_i(&e)).map(|f| word_map(&f).to_string()).into_iter().collect()
    })
}

/// The projection of a multiplihedron vertex: the unpainted subtree holding
/// the rightmost leaf becomes `G`, the painted remainder becomes `F`, each
/// converted branch by branch along the path to the root.
pub fn projection_pi_vertex(t: &PaintedTree) -> Result<FtfTriple> {
    if t.dim() != 0 {
        return Err(Error::Degree(format!("{t} is not a vertex")));
    }
    // Walk the rightmost path. Above the paint boundary every step is a
    // painted binary vertex or a single-input boundary cap; below it every
    // step is an unpainted binary vertex.
    let mut painted_part: Vec<Tree> = Vec::new();
    let mut unpainted_part: Vec<Tree> = Vec::new();
    let mut node = t;
    while let PaintedTree::Vertex { children, .. } = node {
        let (strand, rest) = children.split_last().expect("vertices are nonempty");
        match rest {
            [] => {} // single-input boundary cap
            [left] => {
                let tree = Tree::new(vec![left.leaves()]).expect("positive leaf count");
                if node.is_painted() {
                    painted_part.push(tree);
                } else {
                    unpainted_part.push(tree);
                }
            }
            _ => return Err(Error::Degree(format!("{t} is not binary"))),
        }
        node = strand;
    }
    painted_part.reverse();
    unpainted_part.reverse();
    Ok(FtfTriple::new(
        ShortForest::new(painted_part),
        MiddleTree::unit(),
        ShortForest::new(unpainted_part),
    ))
}

/// The projection from the multiplihedron complex to the triple complex,
/// defined on every face by the multiplihedron quotient.
pub fn pi_map(n: u32) -> Result<LinearMap> {
    if n == 0 {
        return Err(Error::OutOfRange(0, "projection arity"));
    }
    let src = complex(Family::J, n)?;
    let tgt = triple_complex(n - 1)?;
    LinearMap::from_fn("π", src, tgt, 0, |_d, enc| {
        let t = PaintedTree::parse(enc).expect("basis encodings parse");
        quotient_multipl(&t).map(|x| x.to_string()).into_iter().collect()
    })
}

/// Forgetting the painting: a multiplihedron face maps to its underlying
/// associahedron face when every paint-boundary vertex is a single-input cap,
/// and to zero otherwise (the dimension drops).
pub fn forget_paint(t: &PaintedTree) -> Option<PlanarTree> {
    fn all_boundary_unary(t: &PaintedTree) -> bool {
        match t {
            PaintedTree::Leaf => true,
            PaintedTree::Vertex { children, .. } => {
                (!t.is_paint_boundary() || children.len() == 1) && children.iter().all(all_boundary_unary)
            }
        }
    }
    all_boundary_unary(t).then(|| t.underlying())
}

/// Forgetting the painting, as a chain map between polytope complexes.
pub fn forget_map(n: u32) -> Result<LinearMap> {
    let src = complex(Family::J, n)?;
    let tgt = complex(Family::K, n)?;
    LinearMap::from_fn("forget", src, tgt, 0, |_d, enc| {
        let t = PaintedTree::parse(enc).expect("basis encodings parse");
        forget_paint(&t).map(|u| u.to_string()).into_iter().collect()
    })
}

/// The associahedron quotient as a chain map to the operad complex.
pub fn quotient_assoc_map(n: u32) -> Result<LinearMap> {
    if n == 0 {
        return Err(Error::OutOfRange(0, "quotient arity"));
    }
    let src = complex(Family::K, n)?;
    let tgt = omega_complex(n - 1)?;
    LinearMap::from_fn("K→Omega", src, tgt, 0, |_d, enc| {
        let t = PlanarTree::parse(enc).expect("basis encodings parse");
        quotient_assoc(&t).map(|f| f.to_string()).into_iter().collect()
    })
}

/// Verifies the square of projections for the multiplihedron on `n` leaves:
/// through the associahedron and through the freehedron, both ways into the
/// cube complex must agree. Returns one report per arrow and one for the
/// square.
pub fn check_projection_square(n: u32) -> Result<Vec<Report>> {
    let mut reports = Vec::new();
    let forget = forget_map(n)?;
    let qa = quotient_assoc_map(n)?;
    let pi = pi_map(n)?;
    let eps = eps_map(n - 1)?;
    let word = word_map_linear(n - 1)?;
    for m in [&forget, &qa, &pi, &eps, &word] {
        reports.push(m.check_chain_map());
    }
    let started = Instant::now();
    let route_k = LinearMap::compose("J→K→I", &LinearMap::compose("K→I", &word, &qa)?, &forget)?;
    let route_f = LinearMap::compose("J→T→I", &LinearMap::compose("T→I", &word, &eps)?, &pi)?;
    let instance = format!("square J({n}) → I^{}", n.saturating_sub(2));
    if route_k.equals(&route_f) {
        reports.push(Report::pass("diagram", &instance, started));
    } else {
        let witness = route_k.first_difference(&route_f).unwrap_or_default();
        reports.push(Report::fail("diagram", &instance, vec![witness], started));
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expression::nice_expressions;

    fn ne(s: &str) -> NiceExpression {
        NiceExpression::parse(s).unwrap()
    }

    fn triple(s: &str) -> FtfTriple {
        FtfTriple::parse(s).unwrap()
    }

    #[test]
    fn bijection_examples() {
        assert_eq!(bijection_i(&ne("012]|")), triple("- | [1,1] | -"));
        assert_eq!(bijection_i(&ne("2]|[012]")), triple("- | [] | [1,1]"));
        // Forests store innermost-first: the outermost one-branch tree of the
        // left forest is listed last.
        assert_eq!(bijection_i(&ne("0,2][2,4][4,5]|")), triple("[2][1] | [2] | -"));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse_i(&triple("- | [] | [1,1]")).to_string(), "2]|[0,1,2]");
        assert_eq!(inverse_i(&triple("[2][1] | [2] | -")).to_string(), "0,2][2,4][4,5]|");
    }

    #[test]
    fn roundtrip_both_ways() {
        for n in 0..=5 {
            for e in nice_expressions(n) {
                assert_eq!(inverse_i(&bijection_i(&e)), e);
            }
            for x in triples_with_leaves(n) {
                assert_eq!(bijection_i(&inverse_i(&x)), x);
            }
        }
    }

    #[test]
    fn bijection_preserves_dimension() {
        for n in 0..=5 {
            for e in nice_expressions(n) {
                assert_eq!(e.dim(), bijection_i(&e).dim(), "on {e}");
            }
        }
    }

    #[test]
    fn word_examples() {
        let f = ShortForest::parse("[1,2][1,1,1][4][1][1]").unwrap();
        assert_eq!(word_map(&f).to_string(), "bacbbcaaacc");
        assert_eq!(word_map(&ShortForest::parse("[4]").unwrap()).to_string(), "aaa");
        assert_eq!(word_map(&ShortForest::parse("[1][1][1][1]").unwrap()).to_string(), "ccc");
    }

    #[test]
    fn word_is_bijective_chain_map() {
        for n in 1..=5 {
            let m = word_map_linear(n).unwrap();
            assert!(m.is_basis_bijection(), "n={n}");
            assert!(m.check_chain_map().pass, "n={n}");
        }
    }

    #[test]
    fn iso_is_bijective_chain_map() {
        for n in 1..=5 {
            let m = iso_map(n).unwrap();
            assert!(m.is_basis_bijection(), "n={n}");
            assert!(m.check_chain_map().pass, "n={n}");
        }
    }

    #[test]
    fn projection_on_interval_vertices() {
        // Two vertices of the two-leaf multiplihedron.
        let map_then_multiply = PaintedTree::parse("!(!(*),!(*))").unwrap();
        let multiply_then_map = PaintedTree::parse("!((*,*))").unwrap();
        assert_eq!(projection_pi_vertex(&map_then_multiply).unwrap(), triple("[1] | [] | -"));
        assert_eq!(projection_pi_vertex(&multiply_then_map).unwrap(), triple("- | [] | [1]"));
        // They agree with the quotient and name the endpoints of the interval.
        assert_eq!(inverse_i(&projection_pi_vertex(&map_then_multiply).unwrap()).to_string(), "0][0,1]|");
        assert_eq!(inverse_i(&projection_pi_vertex(&multiply_then_map).unwrap()).to_string(), "1]|[0,1]");
    }

    #[test]
    fn projection_agrees_with_quotient_on_vertices() {
        for n in 2..=5 {
            for t in crate::tree::painted_trees(n) {
                if t.dim() == 0 {
                    assert_eq!(
                        projection_pi_vertex(&t).ok(),
                        quotient_multipl(&t),
                        "projection mismatch on {t}"
                    );
                }
            }
        }
    }

    #[test]
    fn red_edges_collapse_to_points() {
        // The contracted pentagon edge: both bracketings of three letters in
        // front of the module input map to the same forest.
        let left = PlanarTree::parse("(((*,*),*),*)").unwrap();
        let right = PlanarTree::parse("((*,(*,*)),*)").unwrap();
        assert_eq!(quotient_assoc(&left), quotient_assoc(&right));
        // The contracted hexagon edge: both endpoints map to one freehedron
        // vertex.
        let a = PaintedTree::parse("!(!(!(*),!(*)),!(*))").unwrap();
        let b = PaintedTree::parse("!(!((*,*)),!(*))").unwrap();
        let va = quotient_multipl(&a).unwrap();
        let vb = quotient_multipl(&b).unwrap();
        assert_eq!(va, vb);
        assert_eq!(inverse_i(&va).to_string(), "0][0,2]|");
    }

    #[test]
    fn square_commutes_small() {
        for n in 2..=4 {
            for r in check_projection_square(n).unwrap() {
                assert!(r.pass, "{r}");
            }
        }
    }

    #[test]
    fn projection_surjective_on_basis() {
        for n in 2..=4 {
            let pi = pi_map(n).unwrap();
            let tgt = triple_complex(n - 1).unwrap();
            let mut hit: std::collections::BTreeSet<String> = Default::default();
            let src = complex(Family::J, n).unwrap();
            for d in 0..src.degrees() {
                for enc in src.basis(d) {
                    for y in pi.apply_basis(enc).unwrap().iter() {
                        hit.insert(y.clone());
                    }
                }
            }
            for d in 0..tgt.degrees() {
                for enc in tgt.basis(d) {
                    assert!(hit.contains(enc), "triple {enc} not hit at n={n}");
                }
            }
        }
    }
}
