//! Nice expressions: the combinatorial faces of freehedra.
//!
//! A nice n-expression is a chain of stretches `s_0, …, s_k` (increasing
//! subsets of `{0, …, n}` with `max s_i = min s_{i+1}`, `min s_0 = 0`,
//! `max s_k = n`) plus a bar index `l`; every stretch except possibly `s_l`
//! has at least two elements. It prints as
//! `s_l][s_{l+1}]…[s_k]|[s_0]…[s_{l−1}]` with comma-separated numerals, the
//! bar stretch lacking its opening bracket. The codimension of the face is
//! `k + L`, with `L` the number of missing symbols.

use std::fmt;

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NiceExpression {
    stretches: Vec<Vec<u32>>,
    bar: usize,
}

impl NiceExpression {
    pub fn new(stretches: Vec<Vec<u32>>, bar: usize) -> Result<Self> {
        let e = NiceExpression { stretches, bar };
        e.validate()?;
        Ok(e)
    }

    fn validate(&self) -> Result<()> {
        let s = &self.stretches;
        if s.is_empty() {
            return Err(Error::Parse("an expression needs at least one stretch".into()));
        }
        if self.bar >= s.len() {
            return Err(Error::Parse(format!("bar index {} out of range", self.bar)));
        }
        for (i, st) in s.iter().enumerate() {
            if st.is_empty() {
                return Err(Error::Parse("empty stretch".into()));
            }
            if !st.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::Parse(format!("stretch {st:?} is not strictly increasing")));
            }
            if i != self.bar && st.len() < 2 {
                return Err(Error::Parse(format!("stretch {i} is a singleton away from the bar")));
            }
        }
        for w in s.windows(2) {
            if w[0].last() != Some(&w[1][0]) {
                return Err(Error::Parse(format!("stretches {:?} and {:?} do not chain", w[0], w[1])));
            }
        }
        if s[0][0] != 0 {
            return Err(Error::Parse("the first stretch must start at 0".into()));
        }
        Ok(())
    }

    pub fn stretches(&self) -> &[Vec<u32>] {
        &self.stretches
    }

    pub fn bar(&self) -> usize {
        self.bar
    }

    /// Ambient n: the largest symbol.
    pub fn ambient(&self) -> u32 {
        *self.stretches.last().unwrap().last().unwrap()
    }

    /// Number of symbols of `{0, …, n}` missing from the expression.
    pub fn missing(&self) -> u32 {
        let n = self.ambient();
        let mut present = vec![false; n as usize + 1];
        for st in &self.stretches {
            for &x in st {
                present[x as usize] = true;
            }
        }
        present.iter().filter(|p| !**p).count() as u32
    }

    /// Codimension k + L.
    pub fn codim(&self) -> usize {
        self.stretches.len() - 1 + self.missing() as usize
    }

    pub fn dim(&self) -> usize {
        self.ambient() as usize - self.codim()
    }

    /// All codimension-one subfaces: drops, inner breaks and the two outer
    /// breaks at the bar stretch.
    pub fn face_transformations(&self) -> Vec<NiceExpression> {
        let mut out = Vec::new();
        let l = self.bar;
        // Drop: remove an interior element of any stretch.
        for (j, st) in self.stretches.iter().enumerate() {
            for i in 1..st.len().saturating_sub(1) {
                let mut stretches = self.stretches.clone();
                stretches[j].remove(i);
                out.push(NiceExpression { stretches, bar: l });
            }
        }
        // Inner break: split a non-bar stretch at an interior element.
        for (j, st) in self.stretches.iter().enumerate() {
            if j == l {
                continue;
            }
            for i in 1..st.len() - 1 {
                let lo = st[..=i].to_vec();
                let hi = st[i..].to_vec();
                let mut stretches = self.stretches.clone();
                stretches.splice(j..=j, [lo, hi]);
                let bar = if j < l { l + 1 } else { l };
                out.push(NiceExpression { stretches, bar });
            }
        }
        // Outer breaks split the bar stretch; the bar stays on the lower part
        // for a right break and moves past the upper part for a left break.
        let st = &self.stretches[l];
        for i in 0..st.len() {
            let lo = st[..=i].to_vec();
            let hi = st[i..].to_vec();
            if i + 1 < st.len() {
                // Right outer break at x = st[i] (x < max).
                let mut stretches = self.stretches.clone();
                stretches.splice(l..=l, [lo.clone(), hi.clone()]);
                out.push(NiceExpression { stretches, bar: l });
            }
            if i > 0 {
                // Left outer break at x = st[i] (x > min).
                let mut stretches = self.stretches.clone();
                stretches.splice(l..=l, [lo, hi]);
                out.push(NiceExpression { stretches, bar: l + 1 });
            }
        }
        debug_assert!(out.iter().all(|e| e.validate().is_ok()));
        debug_assert!(out.iter().all(|e| e.codim() == self.codim() + 1));
        out
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bar_pos = s.find('|').ok_or_else(|| Error::Parse(format!("no bar in `{s}`")))?;
        if s[bar_pos + 1..].contains('|') {
            return Err(Error::Parse(format!("more than one bar in `{s}`")));
        }
        let (left, right) = (&s[..bar_pos], &s[bar_pos + 1..]);

        fn parse_stretch(body: &str) -> Result<Vec<u32>> {
            let body = body.trim();
            if body.is_empty() {
                return Err(Error::Parse("empty stretch".into()));
            }
            if body.contains(',') {
                body.split(',')
                    .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad symbol `{p}`"))))
                    .collect()
            } else if body.len() >= 2 && body.starts_with('0') {
                // A leading zero marks a compact digit run like `012`; a
                // canonical numeral never starts with 0, so this stays
                // unambiguous for singleton stretches such as `12]|…`.
                body.chars()
                    .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad symbol `{c}`"))))
                    .collect()
            } else {
                body.parse::<u32>()
                    .map(|x| vec![x])
                    .map_err(|_| Error::Parse(format!("bad stretch `{body}`")))
            }
        }

        fn parse_bracketed(mut rest: &str) -> Result<Vec<Vec<u32>>> {
            let mut out = Vec::new();
            rest = rest.trim();
            while !rest.is_empty() {
                if !rest.starts_with('[') {
                    return Err(Error::Parse(format!("expected '[' at `{rest}`")));
                }
                let close = rest.find(']').ok_or_else(|| Error::Parse("unclosed '['".into()))?;
                out.push(parse_stretch(&rest[1..close])?);
                rest = rest[close + 1..].trim_start();
            }
            Ok(out)
        }

        let close = left.find(']').ok_or_else(|| Error::Parse(format!("no ']' before the bar in `{s}`")))?;
        let bar_stretch = parse_stretch(&left[..close])?;
        let left_rest = parse_bracketed(&left[close + 1..])?;
        let right_groups = parse_bracketed(right)?;

        let mut stretches = right_groups;
        let bar = stretches.len();
        stretches.push(bar_stretch);
        stretches.extend(left_rest);
        NiceExpression::new(stretches, bar)
    }
}

impl fmt::Display for NiceExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |st: &[u32]| st.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{}]", render(&self.stretches[self.bar]))?;
        for st in &self.stretches[self.bar + 1..] {
            write!(f, "[{}]", render(st))?;
        }
        write!(f, "|")?;
        for st in &self.stretches[..self.bar] {
            write!(f, "[{}]", render(st))?;
        }
        Ok(())
    }
}

/// Every nice n-expression, i.e. every face of the freehedron F_n.
pub fn nice_expressions(n: u32) -> Vec<NiceExpression> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(NiceExpression::new(vec![vec![0]], 0).unwrap());
        return out;
    }
    let interior: Vec<u32> = (1..n).collect();
    for mask in 0..(1u64 << interior.len()) {
        let mut present = vec![0];
        for (i, &x) in interior.iter().enumerate() {
            if mask >> i & 1 == 1 {
                present.push(x);
            }
        }
        present.push(n);
        let m = present.len() - 1;
        // Strict interior breakpoints carve the chain into blocks of ≥ 2
        // symbols; the bar either sits on a block or on an inserted singleton.
        for bmask in 0..(1u64 << (m - 1)) {
            let mut cuts = vec![0];
            for i in 1..m {
                if bmask >> (i - 1) & 1 == 1 {
                    cuts.push(i);
                }
            }
            cuts.push(m);
            let blocks: Vec<Vec<u32>> = cuts.windows(2).map(|w| present[w[0]..=w[1]].to_vec()).collect();
            for l in 0..blocks.len() {
                out.push(NiceExpression::new(blocks.clone(), l).unwrap());
            }
            for (slot, &c) in cuts.iter().enumerate() {
                let mut stretches = blocks.clone();
                stretches.insert(slot, vec![present[c]]);
                out.push(NiceExpression::new(stretches, slot).unwrap());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn ne(s: &str) -> NiceExpression {
        NiceExpression::parse(s).unwrap()
    }

    fn outputs(e: &NiceExpression) -> BTreeSet<String> {
        e.face_transformations().iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in ["0,1,2]|", "2]|[0,1,2]", "0][0,1][1,2]|", "3]|[0,1][1,3]", "1,2,4,5][5,7]|[0,1]"] {
            assert_eq!(ne(s).to_string(), s);
        }
        // Compact digit runs (marked by the leading zero) parse to the same
        // faces; tokens without one are single numerals.
        assert_eq!(ne("012]|"), ne("0,1,2]|"));
        assert_eq!(ne("2]|[012]"), ne("2]|[0,1,2]"));
        assert_eq!(ne("12]|[0,1,2,12]").stretches()[1], vec![12]);
    }

    #[test]
    fn codim_counts_stretches_and_missing() {
        assert_eq!(ne("3]|[0,1][1,3]").codim(), 3); // k = 2, L = 1
        assert_eq!(ne("023]|").codim(), 1); // k = 0, L = 1
        assert_eq!(ne("0][0,1][1,2]|").codim(), 2); // vertex of F_2
        assert_eq!(ne("012]|").dim(), 2);
    }

    #[test]
    fn transformations_of_23_bar_012() {
        let got = outputs(&ne("2,3]|[0,1,2]"));
        let want: BTreeSet<String> = ["2,3]|[0,2]", "2,3]|[0,1][1,2]", "2][2,3]|[0,1,2]", "3]|[0,1,2][2,3]"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn transformations_of_top_cell_f2() {
        let got = outputs(&ne("012]|"));
        let want: BTreeSet<String> = ["0][0,1,2]|", "0,1][1,2]|", "0,2]|", "1,2]|[0,1]", "2]|[0,1,2]"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn two_element_bar_stretch_has_outer_breaks_only() {
        // No interior symbol: drops are impossible, each outer break fires once.
        let got = outputs(&ne("03]|"));
        let want: BTreeSet<String> = ["0][0,3]|", "3]|[0,3]"].iter().map(|s| s.to_string()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn f2_face_counts() {
        let faces = nice_expressions(2);
        assert_eq!(faces.len(), 11);
        let mut by_dim = [0usize; 3];
        for f in &faces {
            by_dim[f.dim()] += 1;
        }
        assert_eq!(by_dim, [5, 5, 1]);
    }

    #[test]
    fn f3_face_counts() {
        let faces = nice_expressions(3);
        assert_eq!(faces.len(), 39);
        let mut by_dim = [0usize; 4];
        for f in &faces {
            by_dim[f.dim()] += 1;
        }
        assert_eq!(by_dim, [12, 18, 8, 1]);
    }

    #[test]
    fn transformations_are_distinct_and_drop_dim() {
        for n in 1..=4 {
            for f in nice_expressions(n) {
                let ts = f.face_transformations();
                let set: BTreeSet<&NiceExpression> = ts.iter().collect();
                assert_eq!(set.len(), ts.len(), "duplicate transformation of {f}");
                for t in &ts {
                    assert_eq!(t.dim() + 1, f.dim());
                }
            }
        }
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        for n in 0..=5 {
            let faces = nice_expressions(n);
            let set: BTreeSet<String> = faces.iter().map(|f| f.to_string()).collect();
            assert_eq!(set.len(), faces.len());
        }
    }
}
