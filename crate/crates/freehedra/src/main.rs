//! Thin command-line front end over the library: face listings, f-vectors,
//! verification suites, diagonals and exports.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage
//! errors (including out-of-range parameters).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use freehedra::diagonal::{defect_summary, diagonal};
use freehedra::export::{export_doc, export_dot, to_json};
use freehedra::families::{complex, Family};
use freehedra::suites::run_suite;

#[derive(Parser)]
#[command(name = "freehedra", version, about = "Polytope families, their operad pair, and Saneblidze diagonals")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// List faces of K(n), J(n), I^n or F_n, sorted per dimension.
    Faces {
        family: String,
        n: u32,
        /// Restrict the listing to one dimension.
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Print the f-vector (face counts by dimension).
    Fvector { family: String, n: u32 },
    /// Write the face lattice as JSON or a DOT Hasse diagram.
    Export {
        family: String,
        n: u32,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a verification suite: d2, iso, chainmaps, diagram, pair-axioms,
    /// diagonal, homotopy or posets.
    Verify {
        suite: String,
        /// Lower the per-suite bounds.
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Print the diagonal of a face, or a JSON coassociativity report for the
    /// whole polytope when no face is given.
    Diagonal {
        family: String,
        n: u32,
        face: Option<String>,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run(cli: Cli) -> ExitCode {
    match cli.cmd {
        Cmd::Faces { family, n, dim } => {
            let family = match Family::parse(&family) {
                Ok(f) => f,
                Err(e) => return usage_error(&e.to_string()),
            };
            let c = match complex(family, n) {
                Ok(c) => c,
                Err(e) => return usage_error(&e.to_string()),
            };
            let mut listing = Vec::new();
            for d in 0..c.degrees() {
                if dim.is_some_and(|want| want != d) {
                    continue;
                }
                listing.extend(c.basis(d).iter().cloned());
            }
            listing.sort();
            for enc in listing {
                println!("{enc}");
            }
            ExitCode::SUCCESS
        }
        Cmd::Fvector { family, n } => {
            let family = match Family::parse(&family) {
                Ok(f) => f,
                Err(e) => return usage_error(&e.to_string()),
            };
            match complex(family, n) {
                Ok(c) => {
                    let parts: Vec<String> = c.f_vector().iter().map(|k| k.to_string()).collect();
                    println!("{}", parts.join(" "));
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Cmd::Export { family, n, format, out } => {
            let family = match Family::parse(&family) {
                Ok(f) => f,
                Err(e) => return usage_error(&e.to_string()),
            };
            let text = match format {
                Format::Json => match export_doc(family, n) {
                    Ok(doc) => to_json(&doc),
                    Err(e) => return usage_error(&e.to_string()),
                },
                Format::Dot => match export_dot(family, n) {
                    Ok(t) => t,
                    Err(e) => return usage_error(&e.to_string()),
                },
            };
            if let Err(e) = std::fs::write(&out, text) {
                eprintln!("error: cannot write {}: {e}", out.display());
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Cmd::Verify { suite, max_n } => match run_suite(&suite, max_n) {
            Ok(reports) => {
                let mut failures = 0;
                for r in &reports {
                    println!("{r}");
                    if !r.pass {
                        failures += 1;
                    }
                }
                println!("{}: {} checks, {} failures", suite, reports.len(), failures);
                if failures == 0 {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::FAILURE
                }
            }
            Err(e) => usage_error(&e.to_string()),
        },
        Cmd::Diagonal { family, n, face } => {
            let family = match Family::parse(&family) {
                Ok(f) => f,
                Err(e) => return usage_error(&e.to_string()),
            };
            match face {
                Some(enc) => match diagonal(family, n, &enc) {
                    Ok(terms) => {
                        for (x, y) in terms.iter() {
                            println!("{x} ⊗ {y}");
                        }
                        ExitCode::SUCCESS
                    }
                    Err(e) => usage_error(&e.to_string()),
                },
                None => match defect_summary(family, n) {
                    Ok((faces, terms)) => {
                        let report = serde_json::json!({
                            "family": family.name(),
                            "n": n,
                            "faces_with_nonzero_defect": faces,
                            "defect_terms": terms,
                            "strictly_coassociative": faces == 0,
                        });
                        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
                        ExitCode::SUCCESS
                    }
                    Err(e) => usage_error(&e.to_string()),
                },
            }
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
