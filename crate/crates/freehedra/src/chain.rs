//! Graded chain complexes over GF(2) with sparse differentials, linear maps
//! between them, tensor products, verification predicates and a null-homotopy
//! solver.
//!
//! Basis elements are canonical `String` encodings; each degree keeps its basis
//! sorted lexicographically so every construction is deterministic.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use crate::gf2;
use crate::{Error, Result};

/// Formal GF(2) sum of basis elements: a set with xor-insertion.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Chain<T: Ord>(BTreeSet<T>);

impl<T: Ord> Chain<T> {
    pub fn zero() -> Self {
        Chain(BTreeSet::new())
    }

    pub fn singleton(t: T) -> Self {
        let mut c = Chain::zero();
        c.add(t);
        c
    }

    /// Adds one term mod 2.
    pub fn add(&mut self, t: T) {
        if !self.0.remove(&t) {
            self.0.insert(t);
        }
    }

    pub fn add_chain(&mut self, other: Chain<T>) {
        for t in other.0 {
            self.add(t);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.0.iter()
    }

    pub fn contains(&self, t: &T) -> bool {
        self.0.contains(t)
    }

    pub fn map<U: Ord>(&self, f: impl Fn(&T) -> U) -> Chain<U> {
        let mut out = Chain::zero();
        for t in self.iter() {
            out.add(f(t));
        }
        out
    }
}

impl<T: Ord> FromIterator<T> for Chain<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut c = Chain::zero();
        for t in iter {
            c.add(t);
        }
        c
    }
}

impl<T: Ord> IntoIterator for Chain<T> {
    type Item = T;
    type IntoIter = std::collections::btree_set::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

/// Sparse GF(2) matrix, column-major: `col[j]` is the sorted list of nonzero
/// row indices of column `j`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseMat {
    pub rows: usize,
    pub cols: usize,
    pub col: Vec<Vec<usize>>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMat { rows, cols, col: vec![Vec::new(); cols] }
    }

    pub fn is_zero(&self) -> bool {
        self.col.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.col.iter().map(|c| c.len()).sum()
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = SparseMat::zero(self.rows, other.cols);
        for j in 0..other.cols {
            let mut acc: BTreeSet<usize> = BTreeSet::new();
            for &k in &other.col[j] {
                for &i in &self.col[k] {
                    if !acc.remove(&i) {
                        acc.insert(i);
                    }
                }
            }
            out.col[j] = acc.into_iter().collect();
        }
        out
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = SparseMat::zero(self.rows, self.cols);
        for j in 0..self.cols {
            let mut acc: BTreeSet<usize> = self.col[j].iter().copied().collect();
            for &i in &other.col[j] {
                if !acc.remove(&i) {
                    acc.insert(i);
                }
            }
            out.col[j] = acc.into_iter().collect();
        }
        out
    }
}

/// Outcome of one verification check.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub instance: String,
    pub pass: bool,
    pub counterexamples: Vec<String>,
    pub millis: u128,
}

impl Report {
    pub fn pass(suite: &str, instance: &str, started: Instant) -> Self {
        Report {
            suite: suite.into(),
            instance: instance.into(),
            pass: true,
            counterexamples: Vec::new(),
            millis: started.elapsed().as_millis(),
        }
    }

    pub fn fail(suite: &str, instance: &str, counterexamples: Vec<String>, started: Instant) -> Self {
        Report {
            suite: suite.into(),
            instance: instance.into(),
            pass: false,
            counterexamples,
            millis: started.elapsed().as_millis(),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} / {} ({} ms)",
            if self.pass { "PASS" } else { "FAIL" },
            self.suite,
            self.instance,
            self.millis
        )?;
        if !self.pass {
            let shown: Vec<&str> = self.counterexamples.iter().take(4).map(|s| s.as_str()).collect();
            write!(f, " counterexamples: {}", shown.join(" ; "))?;
            if self.counterexamples.len() > 4 {
                write!(f, " (+{} more)", self.counterexamples.len() - 4)?;
            }
        }
        Ok(())
    }
}

/// A free graded GF(2) chain complex with explicit ordered bases and a
/// differential lowering degree by one.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub label: String,
    pub ring: String,
    basis: Vec<Vec<String>>,
    index: Vec<BTreeMap<String, usize>>,
    /// `diff[d]` maps degree `d` to degree `d-1`; `diff[0]` is the zero map.
    diff: Vec<SparseMat>,
}

impl ChainComplex {
    /// Builds a complex from a graded basis and a boundary rule.
    ///
    /// Bases are sorted lexicographically per degree. `boundary(d, enc)` must
    /// return the GF(2) boundary of `enc` as a list of degree-`d-1` encodings
    /// (an even number of repeats cancels).
    pub fn build(
        label: impl Into<String>,
        graded_basis: Vec<Vec<String>>,
        boundary: impl Fn(usize, &str) -> Vec<String>,
    ) -> Result<Self> {
        let label = label.into();
        let mut basis = graded_basis;
        for degree in basis.iter_mut() {
            degree.sort();
            let before = degree.len();
            degree.dedup();
            if degree.len() != before {
                return Err(Error::Other(format!("{label}: duplicate basis encodings")));
            }
        }
        let index: Vec<BTreeMap<String, usize>> = basis
            .iter()
            .map(|degree| degree.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        let mut diff = Vec::with_capacity(basis.len());
        for d in 0..basis.len() {
            let rows = if d == 0 { 0 } else { basis[d - 1].len() };
            let mut mat = SparseMat::zero(rows, basis[d].len());
            for (j, enc) in basis[d].iter().enumerate() {
                let image = boundary(d, enc);
                if d == 0 {
                    if !image.is_empty() {
                        return Err(Error::Degree(format!("{label}: degree-0 element {enc} has nonzero boundary")));
                    }
                    continue;
                }
                let mut chain: Chain<usize> = Chain::zero();
                for target in image {
                    let Some(&i) = index[d - 1].get(&target) else {
                        return Err(Error::UnknownBasis(target, format!("{label} degree {}", d - 1)));
                    };
                    chain.add(i);
                }
                mat.col[j] = chain.into_iter().collect();
            }
            diff.push(mat);
        }
        Ok(ChainComplex { label, ring: "GF(2)".into(), basis, index, diff })
    }

    /// The zero complex.
    pub fn empty(label: impl Into<String>) -> Self {
        ChainComplex {
            label: label.into(),
            ring: "GF(2)".into(),
            basis: Vec::new(),
            index: Vec::new(),
            diff: Vec::new(),
        }
    }

    pub fn degrees(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self, d: usize) -> usize {
        self.basis.get(d).map_or(0, |b| b.len())
    }

    pub fn total_rank(&self) -> usize {
        self.basis.iter().map(|b| b.len()).sum()
    }

    pub fn basis(&self, d: usize) -> &[String] {
        self.basis.get(d).map_or(&[], |b| b.as_slice())
    }

    pub fn diff_mat(&self, d: usize) -> Option<&SparseMat> {
        self.diff.get(d)
    }

    pub fn index_of(&self, d: usize, enc: &str) -> Option<usize> {
        self.index.get(d)?.get(enc).copied()
    }

    /// Degree of a basis encoding, if present.
    pub fn degree_of(&self, enc: &str) -> Option<usize> {
        (0..self.basis.len()).find(|&d| self.index[d].contains_key(enc))
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b.len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.basis
            .iter()
            .enumerate()
            .map(|(d, b)| if d % 2 == 0 { b.len() as i64 } else { -(b.len() as i64) })
            .sum()
    }

    /// Boundary of a basis element as a chain of encodings.
    pub fn boundary_of(&self, enc: &str) -> Result<Chain<String>> {
        let d = self
            .degree_of(enc)
            .ok_or_else(|| Error::UnknownBasis(enc.into(), self.label.clone()))?;
        if d == 0 {
            return Ok(Chain::zero());
        }
        let j = self.index[d][enc];
        Ok(self.diff[d].col[j].iter().map(|&i| self.basis[d - 1][i].clone()).collect())
    }

    /// Checks `d ∘ d = 0`, naming the offending basis elements on failure.
    pub fn check_d_squared(&self) -> Report {
        let started = Instant::now();
        let mut bad = Vec::new();
        for d in 2..self.diff.len() {
            let dd = self.diff[d - 1].mul(&self.diff[d]);
            for (j, col) in dd.col.iter().enumerate() {
                if !col.is_empty() {
                    bad.push(format!("d²({}) ≠ 0", self.basis[d][j]));
                }
            }
        }
        let instance = format!("{} (ranks {:?})", self.label, self.f_vector());
        if bad.is_empty() {
            Report::pass("d2", &instance, started)
        } else {
            Report::fail("d2", &instance, bad, started)
        }
    }
}

/// A graded GF(2) linear map between complexes; `shift` is the degree shift
/// (0 for chain maps, +1 for homotopies).
#[derive(Clone, Debug)]
pub struct LinearMap {
    pub label: String,
    pub src: Arc<ChainComplex>,
    pub tgt: Arc<ChainComplex>,
    pub shift: i32,
    /// `mats[d]` maps source degree `d` to target degree `d + shift`.
    mats: Vec<SparseMat>,
}

impl LinearMap {
    /// Builds a map from a basis-level rule. `f(d, enc)` returns target
    /// encodings of degree `d + shift` (repeats cancel mod 2).
    pub fn from_fn(
        label: impl Into<String>,
        src: Arc<ChainComplex>,
        tgt: Arc<ChainComplex>,
        shift: i32,
        f: impl Fn(usize, &str) -> Vec<String>,
    ) -> Result<Self> {
        let label = label.into();
        let mut mats = Vec::new();
        for d in 0..src.degrees() {
            let td = d as i32 + shift;
            let rows = if td < 0 { 0 } else { tgt.rank(td as usize) };
            let mut mat = SparseMat::zero(rows, src.rank(d));
            for (j, enc) in src.basis(d).iter().enumerate() {
                let mut chain: Chain<usize> = Chain::zero();
                for target in f(d, enc) {
                    if td < 0 {
                        return Err(Error::Degree(format!(
                            "{label}: image of {enc} lands in negative degree"
                        )));
                    }
                    let Some(i) = tgt.index_of(td as usize, &target) else {
                        return Err(Error::UnknownBasis(
                            target,
                            format!("{} degree {}", tgt.label, td),
                        ));
                    };
                    chain.add(i);
                }
                mat.col[j] = chain.into_iter().collect();
            }
            mats.push(mat);
        }
        Ok(LinearMap { label, src, tgt, shift, mats })
    }

    pub fn mat(&self, d: usize) -> Option<&SparseMat> {
        self.mats.get(d)
    }

    /// Image of a source basis element as target encodings.
    pub fn apply_basis(&self, enc: &str) -> Result<Chain<String>> {
        let d = self
            .src
            .degree_of(enc)
            .ok_or_else(|| Error::UnknownBasis(enc.into(), self.src.label.clone()))?;
        let j = self.src.index_of(d, enc).unwrap();
        let td = (d as i32 + self.shift) as usize;
        Ok(self.mats[d].col[j].iter().map(|&i| self.tgt.basis(td)[i].clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(|m| m.is_zero())
    }

    /// Checks `d_tgt ∘ f = f ∘ d_src` degree by degree (shift must be 0).
    pub fn check_chain_map(&self) -> Report {
        let started = Instant::now();
        if self.shift != 0 {
            return Report::fail(
                "chain-map",
                &self.label,
                vec![format!("degree shift {} is not 0", self.shift)],
                started,
            );
        }
        let mut bad = Vec::new();
        for d in 1..self.src.degrees() {
            let lhs = match self.tgt.diff_mat(d) {
                Some(dt) => dt.mul(&self.mats[d]),
                None => SparseMat::zero(self.tgt.rank(d - 1), self.src.rank(d)),
            };
            let rhs = self.mats[d - 1].mul(self.src.diff_mat(d).unwrap());
            if lhs != rhs {
                for j in 0..self.src.rank(d) {
                    if lhs.col[j] != rhs.col[j] {
                        bad.push(format!("fails on {}", self.src.basis(d)[j]));
                    }
                }
            }
        }
        if bad.is_empty() {
            Report::pass("chain-map", &self.label, started)
        } else {
            Report::fail("chain-map", &self.label, bad, started)
        }
    }

    /// True when every matrix is a bijection on basis elements (a permutation
    /// matrix): exactly one entry per column and per row.
    pub fn is_basis_bijection(&self) -> bool {
        for d in 0..self.src.degrees().max(self.tgt.degrees()) {
            let sc = self.src.rank(d);
            let tc = self.tgt.rank((d as i32 + self.shift).max(0) as usize);
            if sc != tc {
                return false;
            }
            if let Some(m) = self.mats.get(d) {
                let mut hit = vec![false; m.rows];
                for col in &m.col {
                    if col.len() != 1 || hit[col[0]] {
                        return false;
                    }
                    hit[col[0]] = true;
                }
                if hit.iter().any(|h| !h) {
                    return false;
                }
            } else if sc != 0 {
                return false;
            }
        }
        true
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(label: impl Into<String>, f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
        if !Arc::ptr_eq(&f.src, &g.tgt) && f.src.label != g.tgt.label {
            return Err(Error::Degree(format!(
                "cannot compose {} after {}: middle complexes differ",
                f.label, g.label
            )));
        }
        let mut mats = Vec::new();
        for d in 0..g.src.degrees() {
            let md = d as i32 + g.shift;
            let gm = &g.mats[d];
            let composed = if md >= 0 && (md as usize) < f.mats.len() {
                f.mats[md as usize].mul(gm)
            } else {
                SparseMat::zero(0, gm.cols)
            };
            mats.push(composed);
        }
        Ok(LinearMap {
            label: label.into(),
            src: g.src.clone(),
            tgt: f.tgt.clone(),
            shift: f.shift + g.shift,
            mats,
        })
    }

    pub fn add(label: impl Into<String>, a: &LinearMap, b: &LinearMap) -> Result<LinearMap> {
        if a.shift != b.shift {
            return Err(Error::Degree("cannot add maps of different shifts".into()));
        }
        let mats = a
            .mats
            .iter()
            .zip(b.mats.iter())
            .map(|(x, y)| x.add(y))
            .collect();
        Ok(LinearMap {
            label: label.into(),
            src: a.src.clone(),
            tgt: a.tgt.clone(),
            shift: a.shift,
            mats,
        })
    }

    pub fn equals(&self, other: &LinearMap) -> bool {
        if self.shift != other.shift || self.mats.len() != other.mats.len() {
            return false;
        }
        self.mats.iter().zip(other.mats.iter()).all(|(a, b)| a == b)
    }

    /// First source basis element on which the two maps disagree.
    pub fn first_difference(&self, other: &LinearMap) -> Option<String> {
        for d in 0..self.mats.len().max(other.mats.len()) {
            let zero = SparseMat::zero(0, 0);
            let a = self.mats.get(d).unwrap_or(&zero);
            let b = other.mats.get(d).unwrap_or(&zero);
            for j in 0..a.col.len().max(b.col.len()) {
                let ca = a.col.get(j).map_or(&[][..], |c| c.as_slice());
                let cb = b.col.get(j).map_or(&[][..], |c| c.as_slice());
                if ca != cb {
                    return Some(self.src.basis(d)[j].clone());
                }
            }
        }
        None
    }
}

/// Tensor product of complexes: basis `x⊗y` in degree `|x| + |y|`, signless
/// Leibniz differential.
pub fn tensor(label: impl Into<String>, c: &ChainComplex, d: &ChainComplex) -> ChainComplex {
    let top = c.degrees().saturating_sub(1) + d.degrees().saturating_sub(1);
    let mut graded: Vec<Vec<String>> = vec![Vec::new(); if c.total_rank() * d.total_rank() == 0 { 0 } else { top + 1 }];
    for i in 0..c.degrees() {
        for j in 0..d.degrees() {
            for x in c.basis(i) {
                for y in d.basis(j) {
                    graded[i + j].push(format!("{x}⊗{y}"));
                }
            }
        }
    }
    let split = |enc: &str| -> (String, String) {
        // Splits at each ⊗ and keeps the split whose left part is a basis
        // element of `c`; factors of iterated tensors contain ⊗ themselves.
        let mut pos = 0;
        while let Some(k) = enc[pos..].find('⊗') {
            let at = pos + k;
            let left = &enc[..at];
            if c.degree_of(left).is_some() {
                return (left.to_string(), enc[at + '⊗'.len_utf8()..].to_string());
            }
            pos = at + '⊗'.len_utf8();
        }
        panic!("malformed tensor encoding {enc}");
    };
    ChainComplex::build(label, graded, |_d, enc| {
        let (x, y) = split(enc);
        let mut image = Vec::new();
        for t in c.boundary_of(&x).expect("left factor").iter() {
            image.push(format!("{t}⊗{y}"));
        }
        for t in d.boundary_of(&y).expect("right factor").iter() {
            image.push(format!("{x}⊗{t}"));
        }
        image
    })
    .expect("tensor differential is well-defined")
}

/// Finds `H` of degree +1 with `dH + Hd = defect`, or reports infeasibility.
///
/// Works degree by degree: in each source degree the columns of `H` solve
/// `d_tgt · h = defect(x) + H(d_src x)`, a GF(2) linear system.
pub fn solve_null_homotopy(defect: &LinearMap) -> Result<LinearMap> {
    if defect.shift != 0 {
        return Err(Error::Degree("null-homotopy input must have shift 0".into()));
    }
    let src = defect.src.clone();
    let tgt = defect.tgt.clone();
    let mut mats: Vec<SparseMat> = Vec::new();
    for d in 0..src.degrees() {
        let h_rows = tgt.rank(d + 1);
        let cols = src.rank(d);
        let mut rhs_cols: Vec<Vec<usize>> = Vec::with_capacity(cols);
        for j in 0..cols {
            // rhs = defect(x) + H_{d-1}(d_src x)
            let mut acc: Chain<usize> = defect.mats[d].col[j].iter().copied().collect();
            if d > 0 {
                let dx = &src.diff_mat(d).unwrap().col[j];
                for &k in dx {
                    for &i in &mats[d - 1].col[k] {
                        acc.add(i);
                    }
                }
            }
            rhs_cols.push(acc.into_iter().collect());
        }
        let a_cols: Vec<Vec<usize>> = if h_rows == 0 {
            Vec::new()
        } else {
            tgt.diff_mat(d + 1).map_or(Vec::new(), |m| m.col.clone())
        };
        let rows = tgt.rank(d);
        match gf2::solve_many(rows, h_rows, &a_cols, &rhs_cols) {
            Ok(solutions) => {
                let mut mat = SparseMat::zero(h_rows, cols);
                mat.col = solutions;
                mats.push(mat);
            }
            Err(k) => {
                return Err(Error::Infeasible(format!(
                    "no homotopy at degree {d}, basis element {}",
                    src.basis(d)[k]
                )));
            }
        }
    }
    Ok(LinearMap {
        label: format!("homotopy for {}", defect.label),
        src,
        tgt,
        shift: 1,
        mats,
    })
}

/// Verifies `dH + Hd = defect` exactly, by re-substitution.
pub fn check_homotopy(defect: &LinearMap, h: &LinearMap) -> Report {
    let started = Instant::now();
    let mut bad = Vec::new();
    let src = &defect.src;
    let tgt = &defect.tgt;
    for d in 0..src.degrees() {
        let dh = match tgt.diff_mat(d + 1) {
            Some(m) => m.mul(&h.mats[d]),
            None => SparseMat::zero(tgt.rank(d), src.rank(d)),
        };
        let hd = if d > 0 {
            h.mats[d - 1].mul(src.diff_mat(d).unwrap())
        } else {
            SparseMat::zero(dh.rows, dh.cols)
        };
        let sum = dh.add(&hd);
        if sum != defect.mats[d] {
            for j in 0..src.rank(d) {
                if sum.col[j] != defect.mats[d].col[j] {
                    bad.push(format!("dH+Hd ≠ defect on {}", src.basis(d)[j]));
                }
            }
        }
    }
    if bad.is_empty() {
        Report::pass("homotopy", &defect.label, started)
    } else {
        Report::fail("homotopy", &defect.label, bad, started)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interval() -> ChainComplex {
        // One 1-cell "b" with endpoints "a" and "c".
        ChainComplex::build(
            "interval",
            vec![vec!["a".into(), "c".into()], vec!["b".into()]],
            |_d, enc| match enc {
                "b" => vec!["a".into(), "c".into()],
                _ => vec![],
            },
        )
        .unwrap()
    }

    #[test]
    fn d_squared_on_interval() {
        assert!(interval().check_d_squared().pass);
    }

    #[test]
    fn d_squared_names_culprit() {
        // Square with one boundary term deleted from the top cell.
        let c = ChainComplex::build(
            "broken-square",
            vec![
                vec!["aa".into(), "ac".into(), "ca".into(), "cc".into()],
                vec!["ab".into(), "ba".into(), "bc".into(), "cb".into()],
                vec!["bb".into()],
            ],
            |d, enc| match (d, enc) {
                (2, "bb") => vec!["ab".into(), "ba".into(), "bc".into()], // "cb" dropped
                (1, "ab") => vec!["aa".into(), "ac".into()],
                (1, "ba") => vec!["aa".into(), "ca".into()],
                (1, "bc") => vec!["ac".into(), "cc".into()],
                (1, "cb") => vec!["ca".into(), "cc".into()],
                _ => vec![],
            },
        )
        .unwrap();
        let report = c.check_d_squared();
        assert!(!report.pass);
        assert!(report.counterexamples[0].contains("bb"));
    }

    #[test]
    fn zero_complex_passes() {
        let c = ChainComplex::empty("zero");
        assert!(c.check_d_squared().pass);
        assert_eq!(c.euler_characteristic(), 0);
    }

    #[test]
    fn identity_is_chain_map() {
        let c = Arc::new(interval());
        let id = LinearMap::from_fn("id", c.clone(), c.clone(), 0, |_d, enc| vec![enc.into()]).unwrap();
        assert!(id.check_chain_map().pass);
        assert!(id.is_basis_bijection());
    }

    #[test]
    fn wrong_degree_image_is_structural_error() {
        let c = Arc::new(interval());
        let res = LinearMap::from_fn("bad", c.clone(), c.clone(), 0, |_d, enc| {
            if enc == "b" { vec!["a".into()] } else { vec![enc.into()] }
        });
        assert!(res.is_err());
    }

    #[test]
    fn point_tensor_is_identity_on_ranks() {
        let point = ChainComplex::build("pt", vec![vec!["*".into()]], |_, _| vec![]).unwrap();
        let c = interval();
        let t = tensor("pt⊗c", &point, &c);
        assert_eq!(t.f_vector(), c.f_vector());
        assert!(t.check_d_squared().pass);
    }

    #[test]
    fn euler_characteristic_multiplicative() {
        let c = interval();
        let t = tensor("c⊗c", &c, &c);
        assert_eq!(t.euler_characteristic(), c.euler_characteristic() * c.euler_characteristic());
        assert!(t.check_d_squared().pass);
    }

    #[test]
    fn tensor_ranks_match_the_square() {
        use crate::families::{complex, Family};
        let interval = complex(Family::Cube, 1).unwrap();
        let square = complex(Family::Cube, 2).unwrap();
        let t = tensor("I⊗I", &interval, &interval);
        assert_eq!(t.f_vector(), square.f_vector());
        assert!(t.check_d_squared().pass);

        let pentagon = complex(Family::Freehedron, 2).unwrap();
        let pp = tensor("F2⊗F2", &pentagon, &pentagon);
        assert_eq!(pp.euler_characteristic(), 1);
        assert!(pp.check_d_squared().pass);
    }

    #[test]
    fn tensor_associative_up_to_reindexing() {
        let c = interval();
        let left = tensor("l", &tensor("cc", &c, &c), &c);
        let right = tensor("r", &c, &tensor("cc", &c, &c));
        assert_eq!(left.f_vector(), right.f_vector());
        for d in 0..left.degrees() {
            assert_eq!(left.basis(d), right.basis(d));
            assert_eq!(left.diff_mat(d), right.diff_mat(d));
        }
    }

    #[test]
    fn homotopy_zero_defect() {
        let c = Arc::new(interval());
        let zero = LinearMap::from_fn("0", c.clone(), c.clone(), 0, |_d, _| vec![]).unwrap();
        let h = solve_null_homotopy(&zero).unwrap();
        assert!(h.is_zero());
        assert!(check_homotopy(&zero, &h).pass);
    }

    #[test]
    fn homotopy_of_identity_on_contractible() {
        // The interval is contractible but has H_0 = GF(2), so the identity is
        // not null-homotopic; on the other hand id+projection is.
        let c = Arc::new(interval());
        let id = LinearMap::from_fn("id", c.clone(), c.clone(), 0, |_d, enc| vec![enc.into()]).unwrap();
        assert!(solve_null_homotopy(&id).is_err());

        let proj = LinearMap::from_fn("id+aug", c.clone(), c.clone(), 0, |d, enc| {
            let mut v = vec![enc.to_string()];
            if d == 0 {
                v.push("a".into()); // send every vertex also to the basepoint
            }
            v
        })
        .unwrap();
        let h = solve_null_homotopy(&proj).unwrap();
        assert!(check_homotopy(&proj, &h).pass);
    }

    #[test]
    fn homotopy_infeasible_on_circle() {
        // The circle has nonzero H_1; the identity cannot be null-homotopic.
        let circle = Arc::new(
            ChainComplex::build(
                "circle",
                vec![vec!["v".into(), "w".into()], vec!["e".into(), "f".into()]],
                |d, enc| match (d, enc) {
                    (1, _) => vec!["v".into(), "w".into()],
                    _ => vec![],
                },
            )
            .unwrap(),
        );
        let id = LinearMap::from_fn("id", circle.clone(), circle.clone(), 0, |_d, enc| vec![enc.into()]).unwrap();
        assert!(solve_null_homotopy(&id).is_err());
    }
}
