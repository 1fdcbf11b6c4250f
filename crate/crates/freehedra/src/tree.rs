//! Planar trees (faces of associahedra) and painted planar trees (faces of
//! multiplihedra), with contractions, expansions and grafting.
//!
//! Encodings: `*` is a leaf, `(x,y,…)` an unpainted vertex, `!(x,y,…)` a
//! painted vertex. A painted tree must have a painted root, unpainted leaves,
//! single-input vertices only at the paint boundary, and every painted vertex
//! has either all inputs painted or all inputs unpainted.

use std::fmt;

use crate::{Error, Result};

/// A planar tree; internal vertices have at least two inputs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlanarTree {
    Leaf,
    Vertex(Vec<PlanarTree>),
}

impl PlanarTree {
    pub fn corolla(n: u32) -> Self {
        PlanarTree::Vertex(vec![PlanarTree::Leaf; n as usize])
    }

    pub fn leaves(&self) -> u32 {
        match self {
            PlanarTree::Leaf => 1,
            PlanarTree::Vertex(children) => children.iter().map(PlanarTree::leaves).sum(),
        }
    }

    pub fn internal_vertices(&self) -> u32 {
        match self {
            PlanarTree::Leaf => 0,
            PlanarTree::Vertex(children) => 1 + children.iter().map(PlanarTree::internal_vertices).sum::<u32>(),
        }
    }

    /// Dimension of the face of K(n): n − 1 − #internal vertices.
    pub fn dim(&self) -> usize {
        (self.leaves() - 1 - self.internal_vertices()) as usize
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            PlanarTree::Leaf => Ok(()),
            PlanarTree::Vertex(children) => {
                if children.len() < 2 {
                    return Err(Error::Parse("planar trees have no single-input vertices".into()));
                }
                children.iter().try_for_each(PlanarTree::validate)
            }
        }
    }

    /// Codimension-one subfaces: split a contiguous proper segment of some
    /// vertex's inputs into a new vertex.
    pub fn expansions(&self) -> Vec<PlanarTree> {
        match self {
            PlanarTree::Leaf => Vec::new(),
            PlanarTree::Vertex(children) => {
                let r = children.len();
                let mut out = Vec::new();
                for start in 0..r {
                    for len in 2..r.max(2) {
                        if start + len > r {
                            break;
                        }
                        let mut new_children = children.clone();
                        let segment: Vec<PlanarTree> = new_children.splice(start..start + len, [PlanarTree::Leaf]).collect();
                        new_children[start] = PlanarTree::Vertex(segment);
                        out.push(PlanarTree::Vertex(new_children));
                    }
                }
                for (i, child) in children.iter().enumerate() {
                    for e in child.expansions() {
                        let mut new_children = children.clone();
                        new_children[i] = e;
                        out.push(PlanarTree::Vertex(new_children));
                    }
                }
                out
            }
        }
    }

    /// Grafts `inner` into the 1-based `pos`-th leaf.
    pub fn graft(&self, pos: u32, inner: &PlanarTree) -> Result<PlanarTree> {
        if pos == 0 || pos > self.leaves() {
            return Err(Error::Address(format!("no leaf {pos}")));
        }
        fn go(t: &PlanarTree, pos: u32, inner: &PlanarTree) -> PlanarTree {
            match t {
                PlanarTree::Leaf => inner.clone(),
                PlanarTree::Vertex(children) => {
                    let mut pos = pos;
                    let mut new_children = Vec::with_capacity(children.len());
                    let mut done = false;
                    for c in children {
                        let l = c.leaves();
                        if !done && pos <= l {
                            new_children.push(go(c, pos, inner));
                            done = true;
                        } else {
                            if !done {
                                pos -= l;
                            }
                            new_children.push(c.clone());
                        }
                    }
                    PlanarTree::Vertex(new_children)
                }
            }
        }
        Ok(go(self, pos, inner))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (t, rest) = parse_planar(s.trim())?;
        if !rest.trim().is_empty() {
            return Err(Error::Parse(format!("trailing input `{rest}`")));
        }
        t.validate()?;
        Ok(t)
    }
}

fn parse_planar(s: &str) -> Result<(PlanarTree, &str)> {
    let s = s.trim_start();
    if let Some(rest) = s.strip_prefix('*') {
        return Ok((PlanarTree::Leaf, rest));
    }
    let Some(mut rest) = s.strip_prefix('(') else {
        return Err(Error::Parse(format!("expected '*' or '(' at `{s}`")));
    };
    let mut children = Vec::new();
    loop {
        let (child, r) = parse_planar(rest)?;
        children.push(child);
        let r = r.trim_start();
        if let Some(r) = r.strip_prefix(',') {
            rest = r;
        } else if let Some(r) = r.strip_prefix(')') {
            return Ok((PlanarTree::Vertex(children), r));
        } else {
            return Err(Error::Parse(format!("expected ',' or ')' at `{r}`")));
        }
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarTree::Leaf => write!(f, "*"),
            PlanarTree::Vertex(children) => {
                write!(f, "(")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// All planar trees with `n` leaves and no single-input vertices.
pub fn planar_trees(n: u32) -> Vec<PlanarTree> {
    if n == 1 {
        return vec![PlanarTree::Leaf];
    }
    let mut out = Vec::new();
    // Split n into k ≥ 2 parts and recurse.
    fn splits(n: u32, min_parts: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            if acc.len() >= min_parts {
                out.push(acc.clone());
            }
            return;
        }
        for first in 1..=n {
            acc.push(first);
            splits(n - first, min_parts, acc, out);
            acc.pop();
        }
    }
    let mut parts = Vec::new();
    splits(n, 2, &mut Vec::new(), &mut parts);
    for p in parts {
        let choices: Vec<Vec<PlanarTree>> = p.iter().map(|&k| planar_trees(k)).collect();
        let mut stack: Vec<Vec<PlanarTree>> = vec![Vec::new()];
        for c in &choices {
            let mut next = Vec::new();
            for partial in &stack {
                for t in c {
                    let mut v = partial.clone();
                    v.push(t.clone());
                    next.push(v);
                }
            }
            stack = next;
        }
        for children in stack {
            out.push(PlanarTree::Vertex(children));
        }
    }
    out
}

/// A painted planar tree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PaintedTree {
    Leaf,
    Vertex { painted: bool, children: Vec<PaintedTree> },
}

impl PaintedTree {
    /// The paint-boundary corolla `C_n`: one painted vertex over `n` leaves.
    pub fn corolla(n: u32) -> Self {
        PaintedTree::Vertex { painted: true, children: vec![PaintedTree::Leaf; n as usize] }
    }

    pub fn is_painted(&self) -> bool {
        matches!(self, PaintedTree::Vertex { painted: true, .. })
    }

    /// A paint-boundary vertex: painted with no painted input.
    pub fn is_paint_boundary(&self) -> bool {
        match self {
            PaintedTree::Vertex { painted: true, children } => !children.iter().any(PaintedTree::is_painted),
            _ => false,
        }
    }

    pub fn leaves(&self) -> u32 {
        match self {
            PaintedTree::Leaf => 1,
            PaintedTree::Vertex { children, .. } => children.iter().map(PaintedTree::leaves).sum(),
        }
    }

    /// Dimension of the face of J(n): paint-boundary vertices contribute
    /// arity − 1, every other vertex arity − 2.
    pub fn dim(&self) -> usize {
        match self {
            PaintedTree::Leaf => 0,
            PaintedTree::Vertex { children, .. } => {
                let own = if self.is_paint_boundary() {
                    children.len() - 1
                } else {
                    children.len() - 2
                };
                own + children.iter().map(PaintedTree::dim).sum::<usize>()
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.is_painted() {
            return Err(Error::Parse("the root of a painted tree is painted".into()));
        }
        fn check(node: &PaintedTree) -> Result<()> {
            let PaintedTree::Vertex { painted, children } = node else { return Ok(()) };
            let painted_inputs = children.iter().filter(|c| c.is_painted()).count();
            if *painted {
                if painted_inputs != 0 && painted_inputs != children.len() {
                    return Err(Error::Parse("painted vertex with mixed inputs".into()));
                }
            } else if painted_inputs != 0 {
                return Err(Error::Parse("unpainted vertex with painted input".into()));
            }
            if children.len() == 1 && !(*painted && painted_inputs == 0) {
                return Err(Error::Parse("single-input vertices sit at the paint boundary".into()));
            }
            children.iter().try_for_each(check)
        }
        check(self)
    }

    /// The three admissible contraction moves, each raising dimension by one:
    /// contract an unpainted inner edge, contract an edge inside the painted
    /// region, or contract a painted vertex's corolla of paint-boundary inputs.
    pub fn admissible_contractions(&self) -> Vec<PaintedTree> {
        fn go(node: &PaintedTree, out: &mut Vec<PaintedTree>, rebuild: &dyn Fn(PaintedTree) -> PaintedTree) {
            let PaintedTree::Vertex { painted, children } = node else { return };
            // Contract child v into this vertex.
            for (i, child) in children.iter().enumerate() {
                if let PaintedTree::Vertex { painted: cp, children: grand } = child {
                    let contractible = if *cp {
                        // Edge inside the painted region; the input may not be
                        // a paint-boundary vertex.
                        *painted && !child.is_paint_boundary()
                    } else {
                        // Unpainted inner edge.
                        true
                    };
                    if contractible {
                        let mut new_children = children.clone();
                        new_children.splice(i..=i, grand.iter().cloned());
                        out.push(rebuild(PaintedTree::Vertex { painted: *painted, children: new_children }));
                    }
                }
            }
            // Contract the whole corolla of paint-boundary inputs.
            if *painted && !children.is_empty() && children.iter().all(PaintedTree::is_paint_boundary) {
                let mut grand = Vec::new();
                for c in children {
                    if let PaintedTree::Vertex { children: g, .. } = c {
                        grand.extend(g.iter().cloned());
                    }
                }
                out.push(rebuild(PaintedTree::Vertex { painted: true, children: grand }));
            }
            // Recurse.
            for (i, child) in children.iter().enumerate() {
                let painted = *painted;
                let children = children.clone();
                let rebuild2 = |t: PaintedTree| {
                    let mut cs = children.clone();
                    cs[i] = t;
                    rebuild(PaintedTree::Vertex { painted, children: cs })
                };
                go(child, out, &rebuild2);
            }
        }
        let mut out = Vec::new();
        go(self, &mut out, &|t| t);
        debug_assert!(out.iter().all(|t| t.validate().is_ok()));
        debug_assert!(out.iter().all(|t| t.dim() == self.dim() + 1));
        out
    }

    /// Codimension-one subfaces: the inverses of the three contraction moves.
    pub fn expansions(&self) -> Vec<PaintedTree> {
        fn go(node: &PaintedTree, out: &mut Vec<PaintedTree>, rebuild: &dyn Fn(PaintedTree) -> PaintedTree) {
            let PaintedTree::Vertex { painted, children } = node else { return };
            let r = children.len();
            let pb = node.is_paint_boundary();
            // Insert an unpainted vertex over a contiguous segment.
            if !*painted || pb {
                let max_len = if pb { r } else { r.saturating_sub(1) };
                for start in 0..r {
                    for len in 2..=max_len {
                        if start + len > r {
                            break;
                        }
                        let mut new_children = children.clone();
                        let segment: Vec<PaintedTree> =
                            new_children.splice(start..start + len, [PaintedTree::Leaf]).collect();
                        new_children[start] = PaintedTree::Vertex { painted: false, children: segment };
                        out.push(rebuild(PaintedTree::Vertex { painted: *painted, children: new_children }));
                    }
                }
            }
            // Insert a painted vertex over a proper segment of painted inputs.
            if *painted && !pb {
                for start in 0..r {
                    for len in 2..r {
                        if start + len > r {
                            break;
                        }
                        let mut new_children = children.clone();
                        let segment: Vec<PaintedTree> =
                            new_children.splice(start..start + len, [PaintedTree::Leaf]).collect();
                        new_children[start] = PaintedTree::Vertex { painted: true, children: segment };
                        out.push(rebuild(PaintedTree::Vertex { painted: *painted, children: new_children }));
                    }
                }
            }
            // Regroup a paint-boundary vertex's inputs under ≥ 2 new
            // paint-boundary vertices.
            if pb {
                fn groupings(r: usize) -> Vec<Vec<usize>> {
                    let mut out = Vec::new();
                    fn rec(left: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                        if left == 0 {
                            if acc.len() >= 2 {
                                out.push(acc.clone());
                            }
                            return;
                        }
                        for first in 1..=left {
                            acc.push(first);
                            rec(left - first, acc, out);
                            acc.pop();
                        }
                    }
                    rec(r, &mut Vec::new(), &mut out);
                    out
                }
                for sizes in groupings(r) {
                    let mut new_children = Vec::new();
                    let mut at = 0;
                    for sz in sizes {
                        let group = children[at..at + sz].to_vec();
                        at += sz;
                        new_children.push(PaintedTree::Vertex { painted: true, children: group });
                    }
                    out.push(rebuild(PaintedTree::Vertex { painted: true, children: new_children }));
                }
            }
            // Recurse.
            for (i, child) in children.iter().enumerate() {
                let painted = *painted;
                let children = children.clone();
                let rebuild2 = |t: PaintedTree| {
                    let mut cs = children.clone();
                    cs[i] = t;
                    rebuild(PaintedTree::Vertex { painted, children: cs })
                };
                go(child, out, &rebuild2);
            }
        }
        let mut out = Vec::new();
        go(self, &mut out, &|t| t);
        debug_assert!(out.iter().all(|t| t.validate().is_ok()));
        debug_assert!(out.iter().all(|t| t.dim() + 1 == self.dim()));
        out
    }

    /// The underlying planar tree: forget the painting and splice out
    /// single-input vertices.
    pub fn underlying(&self) -> PlanarTree {
        fn go(node: &PaintedTree) -> PlanarTree {
            match node {
                PaintedTree::Leaf => PlanarTree::Leaf,
                PaintedTree::Vertex { children, .. } => {
                    if children.len() == 1 {
                        go(&children[0])
                    } else {
                        PlanarTree::Vertex(children.iter().map(go).collect())
                    }
                }
            }
        }
        go(self)
    }

    /// Right grafting: substitute a planar tree at the 1-based `pos`-th leaf.
    /// The grafted tree remains unpainted.
    pub fn graft_right(&self, pos: u32, inner: &PlanarTree) -> Result<PaintedTree> {
        if pos == 0 || pos > self.leaves() {
            return Err(Error::Address(format!("no leaf {pos}")));
        }
        fn as_unpainted(t: &PlanarTree) -> PaintedTree {
            match t {
                PlanarTree::Leaf => PaintedTree::Leaf,
                PlanarTree::Vertex(children) => PaintedTree::Vertex {
                    painted: false,
                    children: children.iter().map(as_unpainted).collect(),
                },
            }
        }
        fn go(t: &PaintedTree, pos: u32, inner: &PlanarTree) -> PaintedTree {
            match t {
                PaintedTree::Leaf => as_unpainted(inner),
                PaintedTree::Vertex { painted, children } => {
                    let mut pos = pos;
                    let mut new_children = Vec::with_capacity(children.len());
                    let mut done = false;
                    for c in children {
                        let l = c.leaves();
                        if !done && pos <= l {
                            new_children.push(go(c, pos, inner));
                            done = true;
                        } else {
                            if !done {
                                pos -= l;
                            }
                            new_children.push(c.clone());
                        }
                    }
                    PaintedTree::Vertex { painted: *painted, children: new_children }
                }
            }
        }
        Ok(go(self, pos, inner))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (t, rest) = parse_painted(s.trim())?;
        if !rest.trim().is_empty() {
            return Err(Error::Parse(format!("trailing input `{rest}`")));
        }
        t.validate()?;
        Ok(t)
    }
}

/// Left grafting: a planar tree acts on painted trees from the output side,
/// so it admits the maximal painting. The grafted painted tree goes into the
/// 1-based `pos`-th input; every other input is capped with a single-input
/// paint-boundary vertex.
pub fn graft_left(outer: &PlanarTree, pos: u32, inner: &PaintedTree) -> Result<PaintedTree> {
    if pos == 0 || pos > outer.leaves() {
        return Err(Error::Address(format!("no leaf {pos}")));
    }
    // `pos = 0` means the target leaf is not in this subtree; such leaves are
    // capped with a single-input paint-boundary vertex.
    fn go(t: &PlanarTree, pos: u32, inner: &PaintedTree) -> PaintedTree {
        match t {
            PlanarTree::Leaf => {
                if pos == 1 {
                    inner.clone()
                } else {
                    PaintedTree::Vertex { painted: true, children: vec![PaintedTree::Leaf] }
                }
            }
            PlanarTree::Vertex(children) => {
                let mut pos = pos;
                let mut out = Vec::with_capacity(children.len());
                for c in children {
                    let l = c.leaves();
                    if pos >= 1 && pos <= l {
                        out.push(go(c, pos, inner));
                        pos = 0;
                    } else {
                        out.push(go(c, 0, inner));
                        if pos > l {
                            pos -= l;
                        }
                    }
                }
                PaintedTree::Vertex { painted: true, children: out }
            }
        }
    }
    let out = go(outer, pos, inner);
    out.validate()?;
    Ok(out)
}

fn parse_painted(s: &str) -> Result<(PaintedTree, &str)> {
    let s = s.trim_start();
    if let Some(rest) = s.strip_prefix('*') {
        return Ok((PaintedTree::Leaf, rest));
    }
    let (painted, body) = match s.strip_prefix('!') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let Some(mut rest) = body.strip_prefix('(') else {
        return Err(Error::Parse(format!("expected '*', '!' or '(' at `{s}`")));
    };
    let mut children = Vec::new();
    loop {
        let (child, r) = parse_painted(rest)?;
        children.push(child);
        let r = r.trim_start();
        if let Some(r) = r.strip_prefix(',') {
            rest = r;
        } else if let Some(r) = r.strip_prefix(')') {
            return Ok((PaintedTree::Vertex { painted, children }, r));
        } else {
            return Err(Error::Parse(format!("expected ',' or ')' at `{r}`")));
        }
    }
}

impl fmt::Display for PaintedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PaintedTree::Leaf => write!(f, "*"),
            PaintedTree::Vertex { painted, children } => {
                if *painted {
                    write!(f, "!")?;
                }
                write!(f, "(")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// All painted trees with `n` leaves, i.e. all faces of J(n).
pub fn painted_trees(n: u32) -> Vec<PaintedTree> {
    fn unpainted_subtrees(n: u32) -> Vec<PaintedTree> {
        planar_trees(n)
            .into_iter()
            .map(|t| {
                fn conv(t: &PlanarTree) -> PaintedTree {
                    match t {
                        PlanarTree::Leaf => PaintedTree::Leaf,
                        PlanarTree::Vertex(children) => PaintedTree::Vertex {
                            painted: false,
                            children: children.iter().map(conv).collect(),
                        },
                    }
                }
                conv(&t)
            })
            .collect()
    }
    fn products(choices: Vec<Vec<PaintedTree>>) -> Vec<Vec<PaintedTree>> {
        let mut stack: Vec<Vec<PaintedTree>> = vec![Vec::new()];
        for c in &choices {
            let mut next = Vec::new();
            for partial in &stack {
                for t in c {
                    let mut v = partial.clone();
                    v.push(t.clone());
                    next.push(v);
                }
            }
            stack = next;
        }
        stack
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
    fn painted(n: u32) -> Vec<PaintedTree> {
        let mut out = Vec::new();
        // Paint-boundary root of any arity.
        for parts in compositions_into(n, 1) {
            let choices: Vec<Vec<PaintedTree>> = parts.iter().map(|&k| unpainted_subtrees(k)).collect();
            for children in products(choices) {
                out.push(PaintedTree::Vertex { painted: true, children });
            }
        }
        // Painted root with ≥ 2 painted inputs.
        for parts in compositions_into(n, 2) {
            let choices: Vec<Vec<PaintedTree>> = parts.iter().map(|&k| painted(k)).collect();
            for children in products(choices) {
                out.push(PaintedTree::Vertex { painted: true, children });
            }
        }
        out
    }
    painted(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn pt(s: &str) -> PlanarTree {
        PlanarTree::parse(s).unwrap()
    }

    fn jt(s: &str) -> PaintedTree {
        PaintedTree::parse(s).unwrap()
    }

    #[test]
    fn planar_tree_counts() {
        // Super-Catalan: 1, 1, 3, 11, 45, 197, 903.
        let counts: Vec<usize> = (1..=7).map(|n| planar_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 11, 45, 197, 903]);
    }

    #[test]
    fn binary_trees_are_vertices() {
        let binary: Vec<PlanarTree> = planar_trees(4).into_iter().filter(|t| t.dim() == 0).collect();
        assert_eq!(binary.len(), 5); // Catalan(3)
    }

    #[test]
    fn corolla_boundary_of_k4() {
        let pentagon_edges = PlanarTree::corolla(4).expansions();
        assert_eq!(pentagon_edges.len(), 5);
        let set: BTreeSet<String> = pentagon_edges.iter().map(|t| t.to_string()).collect();
        assert!(set.contains("((*,*),*,*)"));
        assert!(set.contains("(*,(*,*),*)"));
        assert!(set.contains("(*,*,(*,*))"));
        assert!(set.contains("((*,*,*),*)"));
        assert!(set.contains("(*,(*,*,*))"));
    }

    #[test]
    fn painted_tree_counts() {
        assert_eq!(painted_trees(1).len(), 1);
        assert_eq!(painted_trees(2).len(), 3);
        assert_eq!(painted_trees(3).len(), 13); // hexagon: 6 + 6 + 1
    }

    #[test]
    fn hexagon_f_vector() {
        let faces = painted_trees(3);
        let mut by_dim = [0usize; 3];
        for f in &faces {
            by_dim[f.dim()] += 1;
        }
        assert_eq!(by_dim, [6, 6, 1]);
    }

    #[test]
    fn painted_validation_rejects_mixed_inputs() {
        assert!(PaintedTree::parse("!(!(*),*)").is_err()); // mixed inputs
        assert!(PaintedTree::parse("(*,*)").is_err()); // unpainted root
        assert!(PaintedTree::parse("!((*))").is_err()); // unpainted single-input vertex
        assert!(PaintedTree::parse("!(!(!(*)))").is_err()); // painted single-input over painted
    }

    #[test]
    fn contractions_of_painted_vertex_pair() {
        // The J(2) vertex with two paint-boundary caps contracts only to the
        // top cell C_2.
        let v = jt("!(!(*),!(*))");
        let cs = v.admissible_contractions();
        assert_eq!(cs, vec![PaintedTree::corolla(2)]);
        // The other endpoint contracts there too.
        let w = jt("!((*,*))");
        assert_eq!(w.admissible_contractions(), vec![PaintedTree::corolla(2)]);
    }

    #[test]
    fn top_cell_contracts_nowhere() {
        assert!(PaintedTree::corolla(4).admissible_contractions().is_empty());
    }

    #[test]
    fn hexagon_vertices_have_two_edges() {
        for v in painted_trees(3).into_iter().filter(|t| t.dim() == 0) {
            assert_eq!(v.admissible_contractions().len(), 2, "vertex {v}");
        }
    }

    #[test]
    fn expansions_invert_contractions() {
        for n in 2..=4 {
            let faces = painted_trees(n);
            for f in &faces {
                for e in f.expansions() {
                    assert!(
                        e.admissible_contractions().contains(f),
                        "expansion {e} of {f} does not contract back"
                    );
                }
                for c in f.admissible_contractions() {
                    assert!(c.expansions().contains(f), "contraction {c} of {f} does not expand back");
                }
            }
        }
    }

    #[test]
    fn boundary_of_top_cell_j2() {
        let b = PaintedTree::corolla(2).expansions();
        let set: BTreeSet<String> = b.iter().map(|t| t.to_string()).collect();
        let want: BTreeSet<String> = ["!((*,*))", "!(!(*),!(*))"].iter().map(|s| s.to_string()).collect();
        assert_eq!(set, want);
    }

    #[test]
    fn left_grafting_paints_the_outer_tree() {
        let outer = pt("(*,*)");
        let inner = jt("!(!(!(*),!(*)),!(*))");
        let got = graft_left(&outer, 1, &inner).unwrap();
        assert_eq!(got, jt("!(!(!(!(*),!(*)),!(*)),!(*))"));
    }

    #[test]
    fn right_grafting_keeps_the_grafted_tree_unpainted() {
        let outer = jt("!(!(!(*),!(*)),!(*))");
        let inner = pt("(*,*)");
        let got = outer.graft_right(3, &inner).unwrap();
        assert_eq!(got, jt("!(!(!(*),!(*)),!((*,*)))"));
    }

    #[test]
    fn grafting_one_leaf_tree_is_identity() {
        let outer = jt("!(!(*),!(*))");
        assert_eq!(outer.graft_right(2, &PlanarTree::Leaf).unwrap(), outer);
        let planar = pt("((*,*),*)");
        assert_eq!(planar.graft(1, &PlanarTree::Leaf).unwrap(), planar);
        // Grafting into a 1-leaf outer tree returns the grafted tree.
        assert_eq!(graft_left(&PlanarTree::Leaf, 1, &outer).unwrap(), outer);
    }

    #[test]
    fn grafting_preserves_validity_and_counts() {
        let outer = jt("!(!(*),!(*))");
        let k = pt("(*,(*,*))");
        for pos in 1..=2 {
            let g = outer.graft_right(pos, &k).unwrap();
            g.validate().unwrap();
            assert_eq!(g.leaves(), outer.leaves() + k.leaves() - 1);
        }
        for pos in 1..=3 {
            let g = graft_left(&k, pos, &outer).unwrap();
            g.validate().unwrap();
            assert_eq!(g.leaves(), outer.leaves() + k.leaves() - 1);
        }
    }

    #[test]
    fn graft_position_out_of_range() {
        assert!(pt("(*,*)").graft(3, &PlanarTree::Leaf).is_err());
        assert!(jt("!(*,*)").graft_right(0, &PlanarTree::Leaf).is_err());
        assert!(graft_left(&pt("(*,*)"), 5, &jt("!(*)")).is_err());
    }
}
