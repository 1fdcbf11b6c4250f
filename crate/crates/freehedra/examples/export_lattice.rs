//! Export face lattices: the pentagon incarnation of F_2 as JSON (with its
//! box realization) and the square as a DOT Hasse diagram.
//!
//! Run with `cargo run --example export_lattice`.

use freehedra::export::{export_doc, export_dot, reimport_matches, to_json};
use freehedra::families::Family;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let doc = export_doc(Family::Freehedron, 2)?;
    let json = to_json(&doc);
    let dir = std::env::temp_dir();
    let json_path = dir.join("freehedron_2.json");
    let dot_path = dir.join("cube_2.dot");
    std::fs::write(&json_path, &json)?;
    std::fs::write(&dot_path, export_dot(Family::Cube, 2)?)?;

    println!("wrote {} ({} faces)", json_path.display(), doc.faces.len());
    println!("wrote {}", dot_path.display());
    println!("re-import reproduces the complex: {}", reimport_matches(&doc)?);

    println!("\nfirst face records:");
    for f in doc.faces.iter().take(3) {
        println!("  id {} dim {} {}", f.id, f.dim, f.encoding);
    }
    Ok(())
}
