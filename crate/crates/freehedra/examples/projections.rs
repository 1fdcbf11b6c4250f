//! The projections between families: the hexagon (three-leaf multiplihedron)
//! contracts onto the pentagon incarnation of F_2, the contracted edge
//! collapsing to a single vertex, and the square of projections through the
//! associahedron and the freehedron commutes.
//!
//! Run with `cargo run --example projections`.

use freehedra::correspond::{check_projection_square, inverse_i};
use freehedra::operad::quotient_multipl;
use freehedra::tree::{painted_trees, PaintedTree};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("hexagon vertices and their images in F_2:");
    for t in painted_trees(3) {
        if t.dim() == 0 {
            let image = quotient_multipl(&t).expect("vertices survive the quotient");
            println!("  {:<24} ↦  {:<14} = {}", t.to_string(), image.to_string(), inverse_i(&image));
        }
    }

    let a = PaintedTree::parse("!(!(!(*),!(*)),!(*))")?;
    let b = PaintedTree::parse("!(!((*,*)),!(*))")?;
    println!("\nthe contracted hexagon edge has both endpoints at one vertex:");
    println!("  {} ↦ {}", a, quotient_multipl(&a).unwrap());
    println!("  {} ↦ {}", b, quotient_multipl(&b).unwrap());
    assert_eq!(quotient_multipl(&a), quotient_multipl(&b));

    println!("\nthe square of projections commutes:");
    for n in 2..=4 {
        for report in check_projection_square(n)? {
            println!("  {report}");
            assert!(report.pass);
        }
    }
    Ok(())
}
