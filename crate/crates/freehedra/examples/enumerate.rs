//! Enumerate the four families: f-vectors for small parameters and the full
//! face listing of the pentagon incarnation of the freehedron F_2.
//!
//! Run with `cargo run --example enumerate`.

use freehedra::families::{complex, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("f-vectors (faces per dimension):");
    for (family, range) in [
        (Family::K, 2..=6u32),
        (Family::J, 1..=4),
        (Family::Cube, 1..=4),
        (Family::Freehedron, 1..=4),
    ] {
        for n in range {
            let c = complex(family, n)?;
            println!("  {:<12} {:?}  (χ = {})", c.label, c.f_vector(), c.euler_characteristic());
        }
    }

    println!("\nfaces of F_2, by dimension:");
    let pentagon = complex(Family::Freehedron, 2)?;
    for d in 0..pentagon.degrees() {
        println!("  dim {d}:");
        for enc in pentagon.basis(d) {
            println!("    {enc}");
        }
    }

    println!("\nboundary of the top cell of F_2:");
    for sub in pentagon.boundary_of("0,1,2]|")?.iter() {
        println!("  {sub}");
    }
    Ok(())
}
