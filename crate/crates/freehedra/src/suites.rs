//! Named verification batteries behind `freehedra verify <suite>`. Each suite
//! runs a family of checks up to per-suite default bounds (tight enough that
//! the full battery stays under a couple of minutes) and returns one report
//! per check; `--max-n` only ever lowers the bounds.

use std::time::Instant;

use crate::chain::{Chain, Report};
use crate::correspond::{
    bijection_i, check_projection_square, eps_map, forget_map, freehedron_to_cube, inverse_i, iso_map,
    omega_complex, pi_map, projection_pi_vertex, quint_complex, quotient_assoc_map, triple_complex,
    word_map_linear,
};
use crate::diagonal::{
    certify_homotopy_coassoc, check_coleibniz, check_counit, check_defect_chain_map, defect_summary,
    diagonal, serre_formula, transported_diagonal_checks, FaceOrder,
};
use crate::expression::nice_expressions;
use crate::families::{box_realization, complex, downward_closures, facet_table, Family, GeomBox};
use crate::forest::{forests_with_leaves, triples_with_leaves, FtfTriple};
use crate::operad::{
    act_left, act_right, compose_m, comult_c, comult_inner, comult_outer, d_f, d_mu, eps_inner, eps_outer,
    quotient_multipl, Sept,
};
use crate::tree::{painted_trees, PaintedTree, PlanarTree};
use crate::word::CubeWord;
use crate::Result;

pub const SUITES: [&str; 8] =
    ["d2", "iso", "chainmaps", "diagram", "pair-axioms", "diagonal", "homotopy", "posets"];

fn cap(default: u32, max_n: Option<u32>) -> u32 {
    max_n.map_or(default, |m| m.min(default))
}

fn report_on(suite: &str, instance: &str, bad: Vec<String>, started: Instant) -> Report {
    if bad.is_empty() {
        Report::pass(suite, instance, started)
    } else {
        Report::fail(suite, instance, bad, started)
    }
}

/// d² = 0 for the four polytope complexes and for the algebraic complexes on
/// forests, triples and quintuples.
pub fn suite_d2(max_n: Option<u32>) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for n in 1..=cap(7, max_n) {
        out.push(complex(Family::K, n)?.check_d_squared());
    }
    for n in 1..=cap(5, max_n) {
        out.push(complex(Family::J, n)?.check_d_squared());
    }
    for n in 0..=cap(6, max_n) {
        out.push(complex(Family::Freehedron, n)?.check_d_squared());
        out.push(complex(Family::Cube, n)?.check_d_squared());
    }
    for n in 0..=cap(6, max_n) {
        out.push(omega_complex(n)?.check_d_squared());
        out.push(triple_complex(n)?.check_d_squared());
    }
    for n in 0..=cap(5, max_n) {
        out.push(quint_complex(n)?.check_d_squared());
    }
    Ok(out)
}

/// The main isomorphism: the expression-to-triple bijection is a
/// degree-preserving, boundary-commuting bijection with exact round trips.
pub fn suite_iso(max_n: Option<u32>) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for n in 0..=cap(6, max_n) {
        let m = iso_map(n)?;
        out.push(m.check_chain_map());
        let started = Instant::now();
        let mut bad = Vec::new();
        if !m.is_basis_bijection() {
            bad.push("not a basis bijection".into());
        }
        for e in nice_expressions(n) {
            let x = bijection_i(&e);
            if x.dim() != e.dim() {
                bad.push(format!("dimension changes on {e}"));
            }
            if inverse_i(&x) != e {
                bad.push(format!("round trip fails on {e}"));
            }
        }
        for x in triples_with_leaves(n) {
            if bijection_i(&inverse_i(&x)) != x {
                bad.push(format!("round trip fails on {x}"));
            }
        }
        out.push(report_on("iso", &format!("F({n}) ↔ T({n}) bijection"), bad, started));
    }
    Ok(out)
}

/// The individual arrows: word map, projection, counit, paint-forgetting,
/// associahedron quotient and the transported freehedron-to-cube collapse.
pub fn suite_chainmaps(max_n: Option<u32>) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for n in 1..=cap(6, max_n) {
        let w = word_map_linear(n)?;
        let started = Instant::now();
        out.push(w.check_chain_map());
        let mut bad = Vec::new();
        if !w.is_basis_bijection() {
            bad.push("word map is not a basis bijection".into());
        }
        for f in forests_with_leaves(n) {
            let word = crate::correspond::word_map(&f);
            if word.dim() != f.dim() {
                bad.push(format!("degree of {f} differs from its word's b-count"));
            }
        }
        out.push(report_on("chain-maps", &format!("word map bijectivity, arity {n}"), bad, started));
    }
    for n in 2..=cap(5, max_n) {
        let p = pi_map(n)?;
        out.push(p.check_chain_map());
        let started = Instant::now();
        let mut bad = Vec::new();
        // Surjective on basis elements.
        let tgt = triple_complex(n - 1)?;
        let src = complex(Family::J, n)?;
        let mut hit: std::collections::BTreeSet<String> = Default::default();
        for d in 0..src.degrees() {
            for enc in src.basis(d) {
                for y in p.apply_basis(enc)?.iter() {
                    hit.insert(y.clone());
                }
            }
        }
        for d in 0..tgt.degrees() {
            for enc in tgt.basis(d) {
                if !hit.contains(enc) {
                    bad.push(format!("triple {enc} not in the image"));
                }
            }
        }
        // On vertices the projection agrees with the quotient.
        for t in painted_trees(n) {
            if t.dim() == 0 && projection_pi_vertex(&t).ok() != quotient_multipl(&t) {
                bad.push(format!("vertex rule disagrees with the quotient on {t}"));
            }
        }
        out.push(report_on("chain-maps", &format!("projection J({n}) → T({}) surjectivity", n - 1), bad, started));
    }
    for n in 0..=cap(5, max_n) {
        out.push(eps_map(n)?.check_chain_map());
    }
    for n in 1..=cap(5, max_n) {
        out.push(forget_map(n)?.check_chain_map());
    }
    for n in 2..=cap(6, max_n) {
        out.push(quotient_assoc_map(n)?.check_chain_map());
    }
    for n in 1..=cap(6, max_n) {
        out.push(freehedron_to_cube(n)?.check_chain_map());
    }
    // The contracted edges of the two-dimensional figures collapse to single
    // image vertices.
    let started = Instant::now();
    let mut bad = Vec::new();
    let pentagon_pair = [PlanarTree::parse("(((*,*),*),*)")?, PlanarTree::parse("((*,(*,*)),*)")?];
    let images: Vec<_> = pentagon_pair.iter().map(crate::operad::quotient_assoc).collect();
    if images[0] != images[1] || images[0].is_none() {
        bad.push("pentagon edge endpoints split".into());
    }
    let hexagon_pair = [PaintedTree::parse("!(!(!(*),!(*)),!(*))")?, PaintedTree::parse("!(!((*,*)),!(*))")?];
    let images: Vec<_> = hexagon_pair.iter().map(quotient_multipl).collect();
    if images[0] != images[1] || images[0].is_none() {
        bad.push("hexagon edge endpoints split".into());
    }
    out.push(report_on("chain-maps", "contracted edges collapse to one vertex", bad, started));
    Ok(out)
}

/// The square of projections through the associahedron and the freehedron.
pub fn suite_diagram(max_n: Option<u32>) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for n in 2..=cap(5, max_n) {
        out.extend(check_projection_square(n)?);
    }
    Ok(out)
}

/// Counit and comultiplication are chain maps, the counit laws hold, the
/// comultiplication is strictly coassociative, the bimodule actions are
/// associative, and the generator differentials match polytope boundaries.
pub fn suite_pair_axioms(max_n: Option<u32>) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for n in 0..=cap(5, max_n) {
        out.push(eps_map(n)?.check_chain_map());
        out.push(crate::correspond::comult_map(n)?.check_chain_map());

        let started = Instant::now();
        let mut bad = Vec::new();
        for x in triples_with_leaves(n) {
            let mut left: Chain<FtfTriple> = Chain::zero();
            let mut right: Chain<FtfTriple> = Chain::zero();
            let mut lhs: Chain<Sept> = Chain::zero();
            let mut rhs: Chain<Sept> = Chain::zero();
            for q in comult_c(&x).iter() {
                if let Some(y) = eps_outer(q) {
                    left.add(y);
                }
                if let Some(y) = eps_inner(q) {
                    right.add(y);
                }
                lhs.add_chain(comult_outer(q));
                rhs.add_chain(comult_inner(q));
            }
            let id = Chain::singleton(x.clone());
            if left != id {
                bad.push(format!("(ε⊗id)c ≠ id on {x}"));
            }
            if right != id {
                bad.push(format!("(id⊗ε)c ≠ id on {x}"));
            }
            if lhs != rhs {
                bad.push(format!("coassociativity fails on {x}"));
            }
        }
        out.push(report_on("pair-axioms", &format!("counit laws and coassociativity, arity {n}"), bad, started));
    }

    // Bimodule actions: associativity and compatibility, all splittings of at
    // most the bounded number of leaves.
    let leaf_bound = cap(5, max_n);
    let started = Instant::now();
    let mut bad = Vec::new();
    for total in 0..=leaf_bound {
        for a in 0..=total {
            for b in 0..=total - a {
                let c = total - a - b;
                for w1 in forests_with_leaves(a) {
                    for w2 in forests_with_leaves(b) {
                        for x in triples_with_leaves(c) {
                            if act_left(&compose_m(&w1, &w2), &x) != act_left(&w1, &act_left(&w2, &x)) {
                                bad.push(format!("left action breaks on {w1}, {w2}, {x}"));
                            }
                            if act_right(&act_right(&x, &w1), &w2) != act_right(&x, &compose_m(&w1, &w2)) {
                                bad.push(format!("right action breaks on {x}, {w1}, {w2}"));
                            }
                            if act_left(&w1, &act_right(&x, &w2)) != act_right(&act_left(&w1, &x), &w2) {
                                bad.push(format!("actions do not commute on {w1}, {x}, {w2}"));
                            }
                        }
                    }
                }
            }
        }
    }
    out.push(report_on(
        "pair-axioms",
        &format!("bimodule action associativity, ≤ {leaf_bound} leaves"),
        bad,
        started,
    ));

    // Generator differentials against polytope boundaries.
    for n in 2..=cap(6, max_n) {
        let started = Instant::now();
        let formula: Chain<String> = d_mu(n)?.iter().map(|t| t.to_string()).collect();
        let geometric: Chain<String> = complex(Family::K, n)?
            .boundary_of(&PlanarTree::corolla(n).to_string())?;
        let bad = if formula == geometric {
            Vec::new()
        } else {
            vec![format!("arity {n} generator differential differs from the corolla boundary")]
        };
        out.push(report_on("pair-axioms", &format!("μ_{n} differential vs K({n}) corolla"), bad, started));
    }
    for n in 1..=cap(5, max_n) {
        let started = Instant::now();
        let formula: Chain<String> = d_f(n)?.iter().map(|t| t.to_string()).collect();
        let geometric: Chain<String> = complex(Family::J, n)?
            .boundary_of(&PaintedTree::corolla(n).to_string())?;
        let bad = if formula == geometric {
            Vec::new()
        } else {
            vec![format!("arity {n} module generator differential differs from the top-cell boundary")]
        };
        out.push(report_on("pair-axioms", &format!("f_{n} differential vs J({n}) top cell"), bad, started));
    }
    Ok(out)
}

/// Diagonals: cube strict coassociativity with the letterwise oracle,
/// co-Leibniz and counit for both families, the freehedral defect measured per
/// n, and its chain-map property.
pub fn suite_diagonal(max_n: Option<u32>) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    // Cube diagonal against the independent letterwise formula, including the
    // 2^n term count on the top cell.
    for n in 0..=cap(4, max_n) {
        let started = Instant::now();
        let geom = FaceOrder::new(Family::Cube, n)?;
        let mut bad = Vec::new();
        for i in 0..geom.encs.len() {
            let got: Chain<(String, String)> = geom
                .diagonal(i)
                .into_iter()
                .map(|(x, y)| (geom.encs[x].clone(), geom.encs[y].clone()))
                .collect();
            let want = serre_formula(&CubeWord::parse(&geom.encs[i])?);
            if got != want {
                bad.push(format!("letterwise oracle disagrees on {}", geom.encs[i]));
            }
        }
        let top = "b".repeat(n as usize);
        let top_enc = if n == 0 { "e".to_string() } else { top };
        if diagonal(Family::Cube, n, &top_enc)?.len() != 1usize << n {
            bad.push(format!("top cell of I^{n} misses the 2^{n} term count"));
        }
        let (faces, _) = defect_summary(Family::Cube, n)?;
        if faces != 0 {
            bad.push(format!("cube diagonal not strictly coassociative at n = {n}"));
        }
        out.push(report_on("diagonal", &format!("cube diagonal strict, I^{n}"), bad, started));
    }
    for n in 0..=cap(5, max_n) {
        out.push(check_coleibniz(Family::Cube, n)?);
        out.push(check_counit(Family::Cube, n)?);
        out.push(check_coleibniz(Family::Freehedron, n)?);
        out.push(check_counit(Family::Freehedron, n)?);
    }
    // The freehedral defect, measured.
    let started = Instant::now();
    let mut smallest = None;
    for n in 0..=cap(4, max_n) {
        let (faces, terms) = defect_summary(Family::Freehedron, n)?;
        if faces > 0 && smallest.is_none() {
            smallest = Some(n);
        }
        out.push(Report::pass(
            "diagonal",
            &format!("freehedral defect at n = {n}: {faces} faces, {terms} terms"),
            started,
        ));
    }
    out.push(Report::pass(
        "diagonal",
        &format!(
            "smallest n with non-coassociative freehedral diagonal: {}",
            smallest.map_or("none in range".to_string(), |n| n.to_string())
        ),
        started,
    ));
    for n in 1..=cap(4, max_n) {
        out.push(check_defect_chain_map(Family::Freehedron, n)?);
    }
    for n in 1..=cap(4, max_n) {
        out.extend(transported_diagonal_checks(n)?);
    }
    Ok(out)
}

/// Explicit GF(2) homotopies certifying the freehedral defect null-homotopic.
pub fn suite_homotopy(max_n: Option<u32>) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for n in 1..=cap(3, max_n) {
        match certify_homotopy_coassoc(n) {
            Ok((_, h, report)) => {
                out.push(report);
                out.push(Report::pass(
                    "homotopy",
                    &format!("F_{n}: homotopy found ({})", if h.is_zero() { "zero" } else { "nonzero" }),
                    Instant::now(),
                ));
            }
            Err(e) => out.push(Report::fail(
                "homotopy",
                &format!("F_{n}"),
                vec![e.to_string()],
                Instant::now(),
            )),
        }
    }
    Ok(out)
}

/// Face-lattice checks: the box realization is a poset isomorphism, faces are
/// intersections of their hyperfaces, and the counting identities hold.
pub fn suite_posets(max_n: Option<u32>) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for n in 1..=cap(5, max_n) {
        let started = Instant::now();
        let mut bad = Vec::new();
        let realization = box_realization(n)?;
        let closures = downward_closures(n)?;
        let faces: Vec<&String> = realization.keys().collect();
        for x in &faces {
            for y in &faces {
                let contained = realization[*y].contains(&realization[*x]);
                let reachable = closures[*y].contains(*x);
                if contained != reachable {
                    bad.push(format!("order mismatch between {x} and {y}"));
                }
            }
        }
        out.push(report_on("posets", &format!("box/expression poset isomorphism, F_{n}"), bad, started));

        // Every face is the intersection of the hyperfaces containing it.
        let started = Instant::now();
        let mut bad = Vec::new();
        let table = facet_table(n)?;
        for enc in &faces {
            let mut entries = vec![(0u8, 2u8); n as usize];
            for (_, expr, fb) in &table {
                if closures[&expr.to_string()].contains(*enc) {
                    for (e, &(lo, hi)) in entries.iter_mut().zip(fb.entries()) {
                        e.0 = e.0.max(lo);
                        e.1 = e.1.min(hi);
                    }
                }
            }
            match GeomBox::new(entries.clone()) {
                Ok(b) if b == realization[*enc] => {}
                _ => bad.push(format!("{enc} is not the intersection of its hyperfaces")),
            }
        }
        out.push(report_on("posets", &format!("hyperface intersection property, F_{n}"), bad, started));
    }
    // Counting identities.
    let started = Instant::now();
    let mut bad = Vec::new();
    let expect = |cond: bool, msg: &str, bad: &mut Vec<String>| {
        if !cond {
            bad.push(msg.to_string());
        }
    };
    expect(complex(Family::K, 3)?.f_vector() == vec![2, 1], "K(3) f-vector", &mut bad);
    expect(complex(Family::K, 4)?.f_vector() == vec![5, 5, 1], "K(4) f-vector", &mut bad);
    expect(complex(Family::J, 2)?.f_vector() == vec![2, 1], "J(2) f-vector", &mut bad);
    expect(complex(Family::J, 3)?.f_vector() == vec![6, 6, 1], "J(3) f-vector", &mut bad);
    expect(complex(Family::Freehedron, 1)?.f_vector() == vec![2, 1], "F_1 f-vector", &mut bad);
    expect(complex(Family::Freehedron, 2)?.f_vector() == vec![5, 5, 1], "F_2 f-vector", &mut bad);
    expect(complex(Family::Freehedron, 3)?.f_vector() == vec![12, 18, 8, 1], "F_3 f-vector", &mut bad);
    out.push(report_on("posets", "figure-level f-vectors", bad, started));

    let started = Instant::now();
    let mut bad = Vec::new();
    for n in 1..=cap(6, max_n) {
        let facets = complex(Family::Freehedron, n)?.rank(n as usize - 1);
        expect(facets == (3 * n - 1) as usize, &format!("F_{n} facet count"), &mut bad);
        expect(facet_table(n)?.len() == (3 * n - 1) as usize, &format!("F_{n} facet table"), &mut bad);
    }
    out.push(report_on("posets", "freehedron facet counts 3n−1", bad, started));

    let started = Instant::now();
    let mut bad = Vec::new();
    fn catalan(k: u32) -> usize {
        (0..k).fold(1usize, |c, i| c * 2 * (2 * i as usize + 1) / (i as usize + 2))
    }
    for n in 1..=cap(7, max_n) {
        let vertices = complex(Family::K, n)?.rank(0);
        expect(vertices == catalan(n - 1), &format!("K({n}) vertex count"), &mut bad);
    }
    out.push(report_on("posets", "associahedron vertex counts are Catalan numbers", bad, started));

    let started = Instant::now();
    let mut bad = Vec::new();
    for (family, top) in [(Family::K, 7), (Family::J, 5), (Family::Freehedron, 6), (Family::Cube, 6)] {
        let lo = *family.range().start();
        for n in lo..=cap(top, max_n) {
            let chi = complex(family, n)?.euler_characteristic();
            expect(chi == 1, &format!("χ({}) = {chi}", family.label(n)), &mut bad);
        }
    }
    out.push(report_on("posets", "Euler characteristic one everywhere", bad, started));
    Ok(out)
}

/// Runs one named suite.
pub fn run_suite(name: &str, max_n: Option<u32>) -> Result<Vec<Report>> {
    match name {
        "d2" => suite_d2(max_n),
        "iso" => suite_iso(max_n),
        "chainmaps" => suite_chainmaps(max_n),
        "diagram" => suite_diagram(max_n),
        "pair-axioms" => suite_pair_axioms(max_n),
        "diagonal" => suite_diagonal(max_n),
        "homotopy" => suite_homotopy(max_n),
        "posets" => suite_posets(max_n),
        _ => Err(crate::Error::Parse(format!(
            "unknown suite `{name}` (expected one of {})",
            SUITES.join(", ")
        ))),
    }
}
