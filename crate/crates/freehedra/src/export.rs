//! Deterministic JSON and DOT exports of face lattices.
//!
//! The JSON document lists faces with stable ids (sorted by dimension, then
//! encoding), the GF(2) boundary by id, the hyperfaces containing each face,
//! and, for freehedra, the box realization. Re-importing a document rebuilds
//! the identical chain complex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chain::ChainComplex;
use crate::families::{box_realization, complex, Family};
use crate::Result;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExportFace {
    pub id: usize,
    pub dim: usize,
    pub encoding: String,
    /// Ids of the codimension-one faces whose closure contains this face.
    pub facets: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExportDoc {
    pub family: String,
    pub n: u32,
    pub ring: String,
    pub faces: Vec<ExportFace>,
    /// GF(2) boundary, face id to ids one dimension down.
    pub boundary: BTreeMap<String, Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub realization: Option<BTreeMap<String, Vec<[String; 2]>>>,
}

fn face_ids(c: &ChainComplex) -> (Vec<(usize, String)>, BTreeMap<String, usize>) {
    let mut list = Vec::new();
    let mut ids = BTreeMap::new();
    for d in 0..c.degrees() {
        for enc in c.basis(d) {
            ids.insert(enc.clone(), list.len());
            list.push((d, enc.clone()));
        }
    }
    (list, ids)
}

/// Builds the export document for one polytope.
pub fn export_doc(family: Family, n: u32) -> Result<ExportDoc> {
    let c = complex(family, n)?;
    let (list, ids) = face_ids(&c);

    // Downward closure from every hyperface, by breadth-first search along
    // boundaries.
    let top = c.degrees().saturating_sub(1);
    let mut facet_members: Vec<Vec<usize>> = vec![Vec::new(); list.len()];
    if top >= 1 {
        for facet in c.basis(top - 1) {
            let facet_id = ids[facet];
            let mut seen = vec![false; list.len()];
            let mut queue = vec![facet.clone()];
            seen[facet_id] = true;
            while let Some(enc) = queue.pop() {
                for sub in c.boundary_of(&enc)?.iter() {
                    let id = ids[sub];
                    if !seen[id] {
                        seen[id] = true;
                        queue.push(sub.clone());
                    }
                }
            }
            for (id, flag) in seen.iter().enumerate() {
                if *flag {
                    facet_members[id].push(facet_id);
                }
            }
        }
    }

    let faces = list
        .iter()
        .enumerate()
        .map(|(id, (dim, encoding))| ExportFace {
            id,
            dim: *dim,
            encoding: encoding.clone(),
            facets: facet_members[id].clone(),
        })
        .collect();

    let mut boundary = BTreeMap::new();
    for (id, (_, enc)) in list.iter().enumerate() {
        let image: Vec<usize> = c.boundary_of(enc)?.iter().map(|e| ids[e]).collect();
        if !image.is_empty() {
            boundary.insert(id.to_string(), image);
        }
    }

    let realization = if family == Family::Freehedron {
        let boxes = box_realization(n)?;
        let half = |x: u8| match x {
            0 => "0".to_string(),
            1 => "1/2".to_string(),
            _ => "1".to_string(),
        };
        let mut m = BTreeMap::new();
        for (enc, b) in boxes.iter() {
            let id = ids[enc];
            m.insert(id.to_string(), b.entries().iter().map(|&(lo, hi)| [half(lo), half(hi)]).collect());
        }
        Some(m)
    } else {
        None
    };

    Ok(ExportDoc {
        family: family.name().to_string(),
        n,
        ring: c.ring.clone(),
        faces,
        boundary,
        realization,
    })
}

pub fn to_json(doc: &ExportDoc) -> String {
    serde_json::to_string_pretty(doc).expect("export serializes")
}

/// Rebuilds the chain complex from an exported document.
pub fn complex_from_doc(doc: &ExportDoc) -> Result<ChainComplex> {
    let family = Family::parse(&doc.family)?;
    let top = doc.faces.iter().map(|f| f.dim).max().unwrap_or(0);
    let mut graded = vec![Vec::new(); top + 1];
    for f in &doc.faces {
        graded[f.dim].push(f.encoding.clone());
    }
    let by_id: BTreeMap<usize, &ExportFace> = doc.faces.iter().map(|f| (f.id, f)).collect();
    let by_enc: BTreeMap<&str, &ExportFace> = doc.faces.iter().map(|f| (f.encoding.as_str(), f)).collect();
    ChainComplex::build(family.label(doc.n), graded, |_d, enc| {
        let face = by_enc.get(enc).expect("face listed");
        match doc.boundary.get(&face.id.to_string()) {
            Some(ids) => ids
                .iter()
                .map(|id| by_id.get(id).expect("boundary id listed").encoding.clone())
                .collect(),
            None => Vec::new(),
        }
    })
}

/// Checks that an exported document reconstructs the complex it came from.
pub fn reimport_matches(doc: &ExportDoc) -> Result<bool> {
    let family = Family::parse(&doc.family)?;
    let original = complex(family, doc.n)?;
    let rebuilt = complex_from_doc(doc)?;
    if original.f_vector() != rebuilt.f_vector() {
        return Ok(false);
    }
    for d in 0..original.degrees() {
        if original.basis(d) != rebuilt.basis(d) || original.diff_mat(d) != rebuilt.diff_mat(d) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Hasse diagram in DOT, with one rank cluster per dimension.
pub fn export_dot(family: Family, n: u32) -> Result<String> {
    let c = complex(family, n)?;
    let mut out = String::new();
    out.push_str("graph hasse {\n  rankdir=BT;\n");
    for d in 0..c.degrees() {
        out.push_str(&format!("  subgraph cluster_dim_{d} {{\n    label=\"dim {d}\";\n    rank=same;\n"));
        for enc in c.basis(d) {
            out.push_str(&format!("    \"{enc}\";\n"));
        }
        out.push_str("  }\n");
    }
    for d in 1..c.degrees() {
        for enc in c.basis(d) {
            for sub in c.boundary_of(enc)?.iter() {
                out.push_str(&format!("  \"{enc}\" -- \"{sub}\";\n"));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
