//! Short forests, middle trees and forest-tree-forest triples: the bases of
//! the operad `Omega` and its bimodule `T`, together with the local moves
//! (unite, separate) that generate their differentials.
//!
//! A depth-2 tree is stored as its list of branch leaf counts; a short forest
//! is a list of such trees. Forests are stored in application order: the first
//! tree is the innermost operation, the one adjacent to the module input. In a
//! triple `(F, T, G)` the right forest `G` happens before the map, the middle
//! tree `T` is the map, and the left forest `F` happens after; leaves are
//! numbered through `G`, then `T`, then `F`.

use std::fmt;

use crate::{Error, Result};

/// A planar tree of depth 2: ordered branches, one leaf count per branch.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree(Vec<u32>);

impl Tree {
    pub fn new(branches: Vec<u32>) -> Result<Self> {
        if branches.is_empty() {
            return Err(Error::Parse("a tree needs at least one branch".into()));
        }
        if branches.contains(&0) {
            return Err(Error::Parse("branch leaf counts must be positive".into()));
        }
        Ok(Tree(branches))
    }

    pub fn branches(&self) -> &[u32] {
        &self.0
    }

    pub fn branch_count(&self) -> usize {
        self.0.len()
    }

    pub fn leaves(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// An ordered sequence of depth-2 trees; the empty forest is the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ShortForest(Vec<Tree>);

impl ShortForest {
    pub fn empty() -> Self {
        ShortForest(Vec::new())
    }

    pub fn new(trees: Vec<Tree>) -> Self {
        ShortForest(trees)
    }

    pub fn trees(&self) -> &[Tree] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// l(F): total number of leaves.
    pub fn leaves(&self) -> u32 {
        self.0.iter().map(Tree::leaves).sum()
    }

    /// b(F): total number of branches.
    pub fn branch_count(&self) -> usize {
        self.0.iter().map(Tree::branch_count).sum()
    }

    /// t(F): number of trees.
    pub fn tree_count(&self) -> usize {
        self.0.len()
    }

    /// Dimension b(F) − t(F) of the corresponding cube face.
    pub fn dim(&self) -> usize {
        self.branch_count() - self.tree_count()
    }

    /// Concatenation, keeping each argument's internal order.
    pub fn concat(&self, other: &ShortForest) -> ShortForest {
        let mut trees = self.0.clone();
        trees.extend(other.0.iter().cloned());
        ShortForest(trees)
    }

    /// Merges neighbouring branches `left` and `left+1` of tree `tree`.
    pub fn unite(&self, tree: usize, left: usize) -> Result<ShortForest> {
        let t = self.0.get(tree).ok_or_else(|| Error::Address(format!("no tree {tree}")))?;
        if left + 1 >= t.branch_count() {
            return Err(Error::Address(format!("no branch pair ({left},{}) in tree {tree}", left + 1)));
        }
        let mut branches = t.branches().to_vec();
        let merged = branches[left] + branches[left + 1];
        branches.splice(left..=left + 1, [merged]);
        let mut trees = self.0.clone();
        trees[tree] = Tree::new(branches)?;
        Ok(ShortForest(trees))
    }

    /// Splits tree `tree` between branches `left` and `left+1` into two trees,
    /// in place.
    pub fn separate(&self, tree: usize, left: usize) -> Result<ShortForest> {
        let t = self.0.get(tree).ok_or_else(|| Error::Address(format!("no tree {tree}")))?;
        if left + 1 >= t.branch_count() {
            return Err(Error::Address(format!("no branch pair ({left},{}) in tree {tree}", left + 1)));
        }
        let (lo, hi) = (t.branches()[..=left].to_vec(), t.branches()[left + 1..].to_vec());
        let mut trees = self.0.clone();
        trees.splice(tree..=tree, [Tree::new(lo)?, Tree::new(hi)?]);
        Ok(ShortForest(trees))
    }

    /// All addresses of neighbouring branch pairs, as (tree, left-branch).
    pub fn branch_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, t) in self.0.iter().enumerate() {
            for j in 0..t.branch_count().saturating_sub(1) {
                out.push((i, j));
            }
        }
        out
    }

    /// Feeds a `k`-fold associative product into the 1-based `leaf`-th leaf:
    /// the branch holding that leaf gains `k − 1` leaves.
    pub fn feed_leaf(&self, leaf: u32, k: u32) -> Result<ShortForest> {
        if k == 0 {
            return Err(Error::Arity("cannot feed an arity-0 operation".into()));
        }
        if leaf == 0 || leaf > self.leaves() {
            return Err(Error::Address(format!("no leaf {leaf}")));
        }
        let mut seen = 0;
        let mut trees = self.0.clone();
        for t in trees.iter_mut() {
            let mut branches = t.branches().to_vec();
            for b in branches.iter_mut() {
                if leaf <= seen + *b {
                    *b += k - 1;
                    *t = Tree::new(branches)?;
                    return Ok(ShortForest(trees));
                }
                seen += *b;
            }
        }
        unreachable!("leaf bound was checked")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(ShortForest::empty());
        }
        let mut trees = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            if !rest.starts_with('[') {
                return Err(Error::Parse(format!("expected '[' in forest at `{rest}`")));
            }
            let close = rest.find(']').ok_or_else(|| Error::Parse(format!("unclosed '[' in `{s}`")))?;
            let body = &rest[1..close];
            if body.is_empty() {
                return Err(Error::Parse("empty tree in forest".into()));
            }
            let branches = body
                .split(',')
                .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad branch count `{p}`"))))
                .collect::<Result<Vec<_>>>()?;
            trees.push(Tree::new(branches)?);
            rest = rest[close + 1..].trim_start();
        }
        Ok(ShortForest(trees))
    }
}

impl fmt::Display for ShortForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        for t in &self.0 {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// The middle tree of a triple: a possibly empty branch list; the empty list
/// is the unit tree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MiddleTree(Vec<u32>);

impl MiddleTree {
    pub fn unit() -> Self {
        MiddleTree(Vec::new())
    }

    pub fn new(branches: Vec<u32>) -> Result<Self> {
        if branches.contains(&0) {
            return Err(Error::Parse("branch leaf counts must be positive".into()));
        }
        Ok(MiddleTree(branches))
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn branches(&self) -> &[u32] {
        &self.0
    }

    pub fn branch_count(&self) -> usize {
        self.0.len()
    }

    pub fn leaves(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The split `(lo, hi)` after the first `p` branches.
    pub fn split(&self, p: usize) -> (MiddleTree, MiddleTree) {
        (MiddleTree(self.0[..p].to_vec()), MiddleTree(self.0[p..].to_vec()))
    }

    /// The tree as a one-tree forest; the unit becomes the empty forest.
    pub fn as_forest(&self) -> ShortForest {
        if self.is_unit() {
            ShortForest::empty()
        } else {
            ShortForest(vec![Tree(self.0.clone())])
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "[]" {
            return Ok(MiddleTree::unit());
        }
        if !s.starts_with('[') || !s.ends_with(']') {
            return Err(Error::Parse(format!("bad middle tree `{s}`")));
        }
        let body = &s[1..s.len() - 1];
        let branches = body
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad branch count `{p}`"))))
            .collect::<Result<Vec<_>>>()?;
        MiddleTree::new(branches)
    }
}

impl fmt::Display for MiddleTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "[]")
        } else {
            write!(f, "[{}]", self.0.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(","))
        }
    }
}

/// Where a branch pair lives inside a triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleSpot {
    /// Inside the `i`-th tree of the left forest `F`.
    After(usize),
    /// Inside the middle tree.
    Middle,
    /// Inside the `i`-th tree of the right forest `G`.
    Before(usize),
}

/// Which way a middle-tree separation sends the detached part.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// The upper part of the middle tree joins the left forest `F`.
    Left,
    /// The lower part of the middle tree joins the right forest `G`.
    Right,
}

/// Basis element of `T(a^n, m; m)`: left forest (after the map), middle tree
/// (the map), right forest (before the map).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FtfTriple {
    pub after: ShortForest,
    pub middle: MiddleTree,
    pub before: ShortForest,
}

impl FtfTriple {
    pub fn new(after: ShortForest, middle: MiddleTree, before: ShortForest) -> Self {
        FtfTriple { after, middle, before }
    }

    pub fn leaves(&self) -> u32 {
        self.after.leaves() + self.middle.leaves() + self.before.leaves()
    }

    /// Dimension (b−t)(F) + b(T) + (b−t)(G).
    pub fn dim(&self) -> usize {
        self.after.dim() + self.middle.branch_count() + self.before.dim()
    }

    /// Merges neighbouring branches at the addressed pair.
    pub fn unite(&self, spot: TripleSpot, left: usize) -> Result<FtfTriple> {
        let mut out = self.clone();
        match spot {
            TripleSpot::After(i) => out.after = self.after.unite(i, left)?,
            TripleSpot::Before(i) => out.before = self.before.unite(i, left)?,
            TripleSpot::Middle => {
                if left + 1 >= self.middle.branch_count() {
                    return Err(Error::Address(format!("no branch pair ({left},{}) in middle tree", left + 1)));
                }
                let mut branches = self.middle.branches().to_vec();
                let merged = branches[left] + branches[left + 1];
                branches.splice(left..=left + 1, [merged]);
                out.middle = MiddleTree::new(branches)?;
            }
        }
        Ok(out)
    }

    /// In-place separation inside one of the two forests.
    pub fn separate(&self, spot: TripleSpot, left: usize) -> Result<FtfTriple> {
        let mut out = self.clone();
        match spot {
            TripleSpot::After(i) => out.after = self.after.separate(i, left)?,
            TripleSpot::Before(i) => out.before = self.before.separate(i, left)?,
            TripleSpot::Middle => {
                return Err(Error::Address("middle-tree separations need a side".into()));
            }
        }
        Ok(out)
    }

    /// Separates the middle tree between branches `left` and `left+1`.
    ///
    /// `Side::Left` keeps the lower part as the map and moves the upper part
    /// into `F`; `Side::Right` keeps the upper part and moves the lower part
    /// into `G`. Chain checks against freehedron boundaries fix this
    /// orientation.
    pub fn separate_middle(&self, left: usize, side: Side) -> Result<FtfTriple> {
        if left + 1 >= self.middle.branch_count() {
            return Err(Error::Address(format!("no branch pair ({left},{}) in middle tree", left + 1)));
        }
        Ok(self.split_middle(left + 1, side))
    }

    /// Splits the middle tree after `p` branches (0 ≤ p ≤ b) and moves the
    /// detached part per `side`. Both extremes produce a unit middle tree.
    pub fn split_middle(&self, p: usize, side: Side) -> FtfTriple {
        let (lo, hi) = self.middle.split(p);
        match side {
            Side::Left => FtfTriple {
                after: hi.as_forest().concat(&self.after),
                middle: lo,
                before: self.before.clone(),
            },
            Side::Right => FtfTriple {
                after: self.after.clone(),
                middle: hi,
                before: self.before.concat(&lo.as_forest()),
            },
        }
    }

    /// All branch-pair addresses across the triple.
    pub fn branch_pairs(&self) -> Vec<(TripleSpot, usize)> {
        let mut out = Vec::new();
        for (i, j) in self.before.branch_pairs() {
            out.push((TripleSpot::Before(i), j));
        }
        for j in 0..self.middle.branch_count().saturating_sub(1) {
            out.push((TripleSpot::Middle, j));
        }
        for (i, j) in self.after.branch_pairs() {
            out.push((TripleSpot::After(i), j));
        }
        out
    }

    /// Feeds a `k`-fold associative product into the 1-based `leaf`-th leaf;
    /// leaves run through `G`, then the middle tree, then `F`.
    pub fn feed_leaf(&self, leaf: u32, k: u32) -> Result<FtfTriple> {
        if leaf == 0 || leaf > self.leaves() {
            return Err(Error::Address(format!("no leaf {leaf}")));
        }
        let g = self.before.leaves();
        let t = self.middle.leaves();
        if leaf <= g {
            Ok(FtfTriple { before: self.before.feed_leaf(leaf, k)?, ..self.clone() })
        } else if leaf <= g + t {
            let mut pos = leaf - g;
            let mut branches = self.middle.branches().to_vec();
            for b in branches.iter_mut() {
                if pos <= *b {
                    *b += k - 1;
                    return Ok(FtfTriple { middle: MiddleTree::new(branches)?, ..self.clone() });
                }
                pos -= *b;
            }
            unreachable!()
        } else {
            Ok(FtfTriple { after: self.after.feed_leaf(leaf - g - t, k)?, ..self.clone() })
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('|').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("a triple needs two '|' separators: `{s}`")));
        }
        Ok(FtfTriple {
            after: ShortForest::parse(parts[0])?,
            middle: MiddleTree::parse(parts[1].trim())?,
            before: ShortForest::parse(parts[2])?,
        })
    }
}

impl fmt::Display for FtfTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {}", self.after, self.middle, self.before)
    }
}

/// All ordered compositions of `n` into positive parts; `n = 0` gives the
/// empty composition.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All short forests with exactly `n` leaves (3^(n−1) of them for n ≥ 1).
pub fn forests_with_leaves(n: u32) -> Vec<ShortForest> {
    if n == 0 {
        return vec![ShortForest::empty()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for branches in compositions(first) {
            let tree = Tree::new(branches).expect("positive parts");
            for rest in forests_with_leaves(n - first) {
                let mut trees = vec![tree.clone()];
                trees.extend(rest.trees().iter().cloned());
                out.push(ShortForest::new(trees));
            }
        }
    }
    out
}

/// All triples with exactly `n` leaves in total.
pub fn triples_with_leaves(n: u32) -> Vec<FtfTriple> {
    let mut out = Vec::new();
    for lg in 0..=n {
        for lt in 0..=n - lg {
            let lf = n - lg - lt;
            for g in forests_with_leaves(lg) {
                for t in compositions(lt) {
                    let middle = MiddleTree::new(t.clone()).expect("positive parts");
                    for f in forests_with_leaves(lf) {
                        out.push(FtfTriple::new(f.clone(), middle.clone(), g.clone()));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forest(s: &str) -> ShortForest {
        ShortForest::parse(s).unwrap()
    }

    fn triple(s: &str) -> FtfTriple {
        FtfTriple::parse(s).unwrap()
    }

    #[test]
    fn unite_merges_adjacent_branches() {
        // Merging adjacent branches adds leaf counts.
        assert_eq!(forest("[1,2][1,1,1]").unite(0, 0).unwrap(), forest("[3][1,1,1]"));
    }

    #[test]
    fn unite_on_highlighted_forest() {
        // Third tree, first branch pair: [2,3,1] becomes [5,1].
        let f = forest("[1,2][1,1][2,3,1]");
        assert_eq!(f.unite(2, 0).unwrap(), forest("[1,2][1,1][5,1]"));
    }

    #[test]
    fn unite_in_middle_tree() {
        let x = triple("[1] | [2,2] | -");
        assert_eq!(x.unite(TripleSpot::Middle, 0).unwrap(), triple("[1] | [4] | -"));
    }

    #[test]
    fn unite_bad_address() {
        assert!(forest("[1]").unite(0, 0).is_err());
        assert!(forest("[1]").unite(3, 0).is_err());
    }

    #[test]
    fn separate_splits_in_place() {
        assert_eq!(forest("[1,2]").separate(0, 0).unwrap(), forest("[1][2]"));
        let f = forest("[1,2][1,1][2,3,1]");
        assert_eq!(f.separate(2, 1).unwrap(), forest("[1,2][1,1][2,3][1]"));
        assert_eq!(forest("[1,1,1]").separate(0, 1).unwrap(), forest("[1,1][1]"));
    }

    #[test]
    fn separate_middle_both_sides() {
        let x = triple("- | [1,1] | -");
        assert_eq!(x.separate_middle(0, Side::Left).unwrap(), triple("[1] | [1] | -"));
        assert_eq!(x.separate_middle(0, Side::Right).unwrap(), triple("- | [1] | [1]"));
    }

    #[test]
    fn separate_middle_moves_detached_part() {
        // Splitting [1,2,1] after its first branch: the left variant keeps the
        // first branch as the map and sends [2,1] to F; the right variant keeps
        // [2,1] as the map and sends [1] to G.
        let x = triple("[2] | [1,2,1] | [1]");
        assert_eq!(x.separate_middle(0, Side::Left).unwrap(), triple("[2,1][2] | [1] | [1]"));
        assert_eq!(x.separate_middle(0, Side::Right).unwrap(), triple("[2] | [2,1] | [1][1]"));
    }

    #[test]
    fn moves_drop_dimension_by_one() {
        let x = triple("[1,2] | [2,1] | [1,1][3]");
        let d = x.dim();
        for (spot, j) in x.branch_pairs() {
            assert_eq!(x.unite(spot, j).unwrap().dim(), d - 1);
            match spot {
                TripleSpot::Middle => {
                    assert_eq!(x.separate_middle(j, Side::Left).unwrap().dim(), d - 1);
                    assert_eq!(x.separate_middle(j, Side::Right).unwrap().dim(), d - 1);
                }
                _ => assert_eq!(x.separate(spot, j).unwrap().dim(), d - 1),
            }
        }
    }

    #[test]
    fn counting_forests_and_triples() {
        assert_eq!(forests_with_leaves(1).len(), 1);
        assert_eq!(forests_with_leaves(2).len(), 3);
        assert_eq!(forests_with_leaves(5).len(), 81); // 3^(n-1)
        assert_eq!(triples_with_leaves(1).len(), 3);
        assert_eq!(triples_with_leaves(2).len(), 11);
        assert_eq!(triples_with_leaves(3).len(), 39);
    }

    #[test]
    fn roundtrip_encodings() {
        for n in 0..=4 {
            for f in forests_with_leaves(n) {
                assert_eq!(ShortForest::parse(&f.to_string()).unwrap(), f);
            }
            for x in triples_with_leaves(n) {
                assert_eq!(FtfTriple::parse(&x.to_string()).unwrap(), x);
            }
        }
    }

    #[test]
    fn feed_leaf_multiplies() {
        assert_eq!(forest("[1,2]").feed_leaf(1, 3).unwrap(), forest("[3,2]"));
        assert_eq!(forest("[1,2]").feed_leaf(3, 2).unwrap(), forest("[1,3]"));
        let x = triple("[1] | [2] | [1]");
        assert_eq!(x.feed_leaf(1, 2).unwrap(), triple("[1] | [2] | [2]"));
        assert_eq!(x.feed_leaf(2, 2).unwrap(), triple("[1] | [3] | [1]"));
        assert_eq!(x.feed_leaf(4, 2).unwrap(), triple("[2] | [2] | [1]"));
    }
}
