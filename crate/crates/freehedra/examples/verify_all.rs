//! Run every verification suite at its full default bounds and print the
//! reports; this is the programmatic twin of `freehedra verify <suite>`.
//!
//! Run with `cargo run --release --example verify_all`.

use freehedra::suites::{run_suite, SUITES};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut failures = 0;
    for suite in SUITES {
        println!("== {suite} ==");
        for report in run_suite(suite, None)? {
            println!("  {report}");
            if !report.pass {
                failures += 1;
            }
        }
    }
    println!("\ntotal failures: {failures}");
    if failures > 0 {
        std::process::exit(1);
    }
    Ok(())
}
