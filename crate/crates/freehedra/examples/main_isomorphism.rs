//! The main isomorphism: nice expressions label freehedron faces, and the
//! bijection onto forest-tree-forest triples commutes with differentials.
//!
//! Run with `cargo run --example main_isomorphism`.

use freehedra::correspond::{bijection_i, inverse_i, iso_map};
use freehedra::expression::nice_expressions;
use freehedra::forest::FtfTriple;
use freehedra::operad::d_triple;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("faces of F_2 and their triples:");
    for e in nice_expressions(2) {
        let x = bijection_i(&e);
        println!("  {:<16} ↦  {:<20} (dim {})", e.to_string(), x.to_string(), x.dim());
        assert_eq!(inverse_i(&x), e);
    }

    println!("\nboth differentials of the top cell agree under the bijection:");
    let top = nice_expressions(2).into_iter().find(|e| e.dim() == 2).unwrap();
    let mut via_faces: Vec<String> = top
        .face_transformations()
        .iter()
        .map(|f| bijection_i(f).to_string())
        .collect();
    via_faces.sort();
    let via_triples: Vec<String> = d_triple(&bijection_i(&top)).iter().map(FtfTriple::to_string).collect();
    for (a, b) in via_faces.iter().zip(via_triples.iter()) {
        println!("  {a}   =   {b}");
        assert_eq!(a, b);
    }

    println!("\nchain-map verification up to six leaves:");
    for n in 0..=6 {
        let report = iso_map(n)?.check_chain_map();
        println!("  {report}");
        assert!(report.pass);
    }
    Ok(())
}
