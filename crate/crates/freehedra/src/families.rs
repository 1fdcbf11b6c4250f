//! The four polytope families as graded face sets and chain complexes, plus
//! the box realization of freehedra inside the unit cube.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::chain::ChainComplex;
use crate::expression::{nice_expressions, NiceExpression};
use crate::tree::{painted_trees, planar_trees, PaintedTree, PlanarTree};
use crate::word::{all_words, CubeWord};
use crate::{Error, Result};

type PerInstanceCache<K, V> = OnceLock<Mutex<BTreeMap<K, Arc<V>>>>;

/// The four families: associahedra K(n), multiplihedra J(n), cubes I^n and
/// freehedra F_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    K,
    J,
    Cube,
    Freehedron,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::K, Family::J, Family::Cube, Family::Freehedron];

    /// Supported parameter range (enumeration stays desk-scale inside it).
    pub fn range(self) -> std::ops::RangeInclusive<u32> {
        match self {
            Family::K => 1..=8,
            Family::J => 1..=6,
            Family::Cube => 0..=8,
            Family::Freehedron => 0..=7,
        }
    }

    pub fn check_range(self, n: u32) -> Result<()> {
        if self.range().contains(&n) {
            Ok(())
        } else {
            Err(Error::OutOfRange(n, self.name()))
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::K => "K",
            Family::J => "J",
            Family::Cube => "Cube",
            Family::Freehedron => "Freehedron",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s.to_ascii_lowercase().as_str() {
            "k" => Ok(Family::K),
            "j" => Ok(Family::J),
            "cube" | "i" => Ok(Family::Cube),
            "freehedron" | "f" => Ok(Family::Freehedron),
            _ => Err(Error::Parse(format!("unknown family `{s}`"))),
        }
    }

    pub fn label(self, n: u32) -> String {
        match self {
            Family::Cube => format!("I^{n}"),
            _ => format!("{}({n})", self.name()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// All faces of the family's n-th polytope, graded by dimension and sorted
/// lexicographically inside each degree.
pub fn enumerate_faces(family: Family, n: u32) -> Result<Vec<Vec<String>>> {
    family.check_range(n)?;
    let dims_encs: Vec<(usize, String)> = match family {
        Family::K => planar_trees(n).into_iter().map(|t| (t.dim(), t.to_string())).collect(),
        Family::J => painted_trees(n).into_iter().map(|t| (t.dim(), t.to_string())).collect(),
        Family::Cube => all_words(n as usize).into_iter().map(|w| (w.dim(), w.to_string())).collect(),
        Family::Freehedron => nice_expressions(n).into_iter().map(|e| (e.dim(), e.to_string())).collect(),
    };
    let top = dims_encs.iter().map(|(d, _)| *d).max().unwrap_or(0);
    let mut graded = vec![Vec::new(); top + 1];
    for (d, enc) in dims_encs {
        graded[d].push(enc);
    }
    for degree in graded.iter_mut() {
        degree.sort();
    }
    Ok(graded)
}

/// GF(2) boundary of one face, as codimension-one face encodings.
pub fn boundary(family: Family, enc: &str) -> Result<Vec<String>> {
    Ok(match family {
        Family::K => PlanarTree::parse(enc)?.expansions().iter().map(|t| t.to_string()).collect(),
        Family::J => PaintedTree::parse(enc)?.expansions().iter().map(|t| t.to_string()).collect(),
        Family::Cube => CubeWord::parse(enc)?.boundary().iter().map(|w| w.to_string()).collect(),
        Family::Freehedron => NiceExpression::parse(enc)?
            .face_transformations()
            .iter()
            .map(|e| e.to_string())
            .collect(),
    })
}

/// The cellular chain complex of the family's n-th polytope. Complexes are
/// immutable and shared, so repeated requests hit a cache.
pub fn complex(family: Family, n: u32) -> Result<Arc<ChainComplex>> {
    static CACHE: PerInstanceCache<(Family, u32), ChainComplex> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&(family, n)) {
        return Ok(c.clone());
    }
    let graded = enumerate_faces(family, n)?;
    let built = ChainComplex::build(family.label(n), graded, |_d, enc| {
        boundary(family, enc).expect("enumerated faces parse back")
    })?;
    let arc = Arc::new(built);
    cache.lock().unwrap().insert((family, n), arc.clone());
    Ok(arc)
}

/// An axis-aligned box inside the unit cube with endpoints in {0, 1/2, 1},
/// stored in doubled coordinates 0, 1, 2.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeomBox(Vec<(u8, u8)>);

impl GeomBox {
    pub fn new(entries: Vec<(u8, u8)>) -> Result<Self> {
        for &(lo, hi) in &entries {
            if lo > hi || hi > 2 {
                return Err(Error::Parse(format!("bad box entry ({lo},{hi})")));
            }
        }
        Ok(GeomBox(entries))
    }

    pub fn entries(&self) -> &[(u8, u8)] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.iter().filter(|(lo, hi)| lo < hi).count()
    }

    pub fn contains(&self, other: &GeomBox) -> bool {
        self.0.len() == other.0.len()
            && self.0.iter().zip(other.0.iter()).all(|(&(a, b), &(c, d))| a <= c && d <= b)
    }

    pub fn min_corner(&self) -> Vec<u8> {
        self.0.iter().map(|&(lo, _)| lo).collect()
    }

    pub fn max_corner(&self) -> Vec<u8> {
        self.0.iter().map(|&(_, hi)| hi).collect()
    }

    fn extend(&self, entry: (u8, u8)) -> GeomBox {
        let mut v = self.0.clone();
        v.push(entry);
        GeomBox(v)
    }
}

impl fmt::Display for GeomBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let half = |x: u8| match x {
            0 => "0",
            1 => "1/2",
            _ => "1",
        };
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(lo, hi)| {
                if lo == hi {
                    format!("{{{}}}", half(lo))
                } else {
                    format!("[{},{}]", half(lo), half(hi))
                }
            })
            .collect();
        write!(f, "{}", parts.join("×"))
    }
}

/// Label of a freehedron hyperface: d0_i (1 ≤ i ≤ n), d1_i (2 ≤ i ≤ n) or
/// d2_i (1 ≤ i ≤ n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacetLabel {
    pub kind: u8,
    pub index: u32,
}

impl fmt::Display for FacetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}_{}", self.kind, self.index)
    }
}

/// The 3n−1 labelled hyperfaces of F_n, in both incarnations: as nice
/// expressions and as boxes.
pub fn facet_table(n: u32) -> Result<Vec<(FacetLabel, NiceExpression, GeomBox)>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let hyperplane = |lo: u8, hi: u8, at: u32| -> GeomBox {
        let mut v = vec![(0u8, 2u8); n as usize];
        v[at as usize - 1] = (lo, hi);
        GeomBox(v)
    };
    let mut out = Vec::new();
    for i in 1..=n {
        // d0_i: symbols 0…i−1, then i−1…n, bar on the first stretch.
        let s0: Vec<u32> = (0..i).collect();
        let s1: Vec<u32> = (i - 1..=n).collect();
        let expr = NiceExpression::new(vec![s0, s1], 0)?;
        out.push((FacetLabel { kind: 0, index: i }, expr, hyperplane(0, 0, i)));
    }
    for i in 2..=n {
        // d1_i: one stretch omitting i−1.
        let s: Vec<u32> = (0..=n).filter(|&x| x != i - 1).collect();
        let expr = NiceExpression::new(vec![s], 0)?;
        out.push((FacetLabel { kind: 1, index: i }, expr, hyperplane(2, 2, i)));
    }
    for i in 1..=n {
        // d2_i: i…n before the bar, 0…i after it.
        let s0: Vec<u32> = (0..=i).collect();
        let s1: Vec<u32> = (i..=n).collect();
        let expr = NiceExpression::new(vec![s0, s1], 1)?;
        let mut v = vec![(0u8, 2u8); n as usize];
        v[0] = (2, 2);
        for j in 2..=i {
            v[j as usize - 1] = (1, 2);
        }
        if i < n {
            v[i as usize] = (0, 1);
        }
        out.push((FacetLabel { kind: 2, index: i }, expr, GeomBox(v)));
    }
    Ok(out)
}

/// All boxes of the subdivision realizing F_n, built inductively: the prism
/// over F_{n−1} with every face inside the distinguished hyperface split at
/// one half.
pub fn boxes(n: u32) -> Result<Vec<GeomBox>> {
    Family::Freehedron.check_range(n)?;
    if n == 0 {
        return Ok(vec![GeomBox(Vec::new())]);
    }
    let mut current = vec![GeomBox(vec![(0, 0)]), GeomBox(vec![(2, 2)]), GeomBox(vec![(0, 2)])];
    for m in 2..=n {
        // The distinguished hyperface of F_{m−1} is {1} × [1/2,1]^(m−2).
        let mut x = vec![(2u8, 2u8)];
        x.extend(std::iter::repeat_n((1u8, 2u8), m as usize - 2));
        let x = GeomBox(x);
        let mut next = Vec::with_capacity(current.len() * 3);
        for b in &current {
            next.push(b.extend((0, 0)));
            next.push(b.extend((2, 2)));
            if x.contains(b) {
                next.push(b.extend((0, 1)));
                next.push(b.extend((1, 1)));
                next.push(b.extend((1, 2)));
            } else {
                next.push(b.extend((0, 2)));
            }
        }
        current = next;
    }
    current.sort();
    Ok(current)
}

/// Downward closure of every face of F_n under face transformations,
/// including the face itself.
pub fn downward_closures(n: u32) -> Result<Arc<BTreeMap<String, BTreeSet<String>>>> {
    static CACHE: PerInstanceCache<u32, BTreeMap<String, BTreeSet<String>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(m) = cache.lock().unwrap().get(&n) {
        return Ok(m.clone());
    }
    Family::Freehedron.check_range(n)?;
    let faces = nice_expressions(n);
    let mut by_dim: Vec<Vec<&NiceExpression>> = vec![Vec::new(); n as usize + 1];
    for f in &faces {
        by_dim[f.dim()].push(f);
    }
    let mut closures: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for level in &by_dim {
        for f in level {
            let enc = f.to_string();
            let mut set: BTreeSet<String> = BTreeSet::new();
            set.insert(enc.clone());
            for g in f.face_transformations() {
                set.extend(closures[&g.to_string()].iter().cloned());
            }
            closures.insert(enc, set);
        }
    }
    let arc = Arc::new(closures);
    cache.lock().unwrap().insert(n, arc.clone());
    Ok(arc)
}

/// The hyperfaces of F_n whose closure contains the given face.
pub fn facet_set(n: u32, face: &NiceExpression) -> Result<BTreeSet<FacetLabel>> {
    let closures = downward_closures(n)?;
    let enc = face.to_string();
    let mut out = BTreeSet::new();
    for (label, expr, _) in facet_table(n)? {
        if closures[&expr.to_string()].contains(&enc) {
            out.insert(label);
        }
    }
    Ok(out)
}

/// The box realization of F_n: a bijection from face encodings to boxes,
/// found by matching hyperface-membership sets on both sides. A matching
/// failure signals an implementation bug, not bad input.
pub fn box_realization(n: u32) -> Result<Arc<BTreeMap<String, GeomBox>>> {
    static CACHE: PerInstanceCache<u32, BTreeMap<String, GeomBox>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(m) = cache.lock().unwrap().get(&n) {
        return Ok(m.clone());
    }

    let faces = nice_expressions(n);
    let all_boxes = boxes(n)?;
    if faces.len() != all_boxes.len() {
        return Err(Error::Matching(format!(
            "F_{n}: {} faces but {} boxes",
            faces.len(),
            all_boxes.len()
        )));
    }
    let table = facet_table(n)?;
    let closures = downward_closures(n)?;

    let mut by_membership_expr: BTreeMap<Vec<FacetLabel>, NiceExpression> = BTreeMap::new();
    for f in faces {
        let enc = f.to_string();
        let key: Vec<FacetLabel> = table
            .iter()
            .filter(|(_, expr, _)| closures[&expr.to_string()].contains(&enc))
            .map(|(l, _, _)| *l)
            .collect();
        if by_membership_expr.insert(key, f).is_some() {
            return Err(Error::Matching(format!("two faces of F_{n} share a hyperface-membership set")));
        }
    }
    let mut by_membership_box: BTreeMap<Vec<FacetLabel>, GeomBox> = BTreeMap::new();
    for b in all_boxes {
        let key: Vec<FacetLabel> = table
            .iter()
            .filter(|(_, _, fb)| fb.contains(&b))
            .map(|(l, _, _)| *l)
            .collect();
        if by_membership_box.insert(key, b).is_some() {
            return Err(Error::Matching(format!("two boxes of F_{n} share a hyperface-membership set")));
        }
    }

    let mut out = BTreeMap::new();
    for (key, expr) in by_membership_expr {
        let Some(b) = by_membership_box.remove(&key) else {
            return Err(Error::Matching(format!("face {expr} of F_{n} has no box with matching hyperfaces")));
        };
        if expr.dim() != b.dim() {
            return Err(Error::Matching(format!("face {expr} matched box {b} of different dimension")));
        }
        out.insert(expr.to_string(), b);
    }
    if !by_membership_box.is_empty() {
        return Err(Error::Matching(format!("unmatched boxes remain for F_{n}")));
    }

    let arc = Arc::new(out);
    cache.lock().unwrap().insert(n, arc.clone());
    Ok(arc)
}
