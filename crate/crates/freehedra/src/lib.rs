//! Chain-level combinatorics of four polytope families — associahedra `K(n)`,
//! multiplihedra `J(n)`, cubes `I^n` and freehedra `F_n` — together with the
//! operad pair they compute: the two-colored operad `Omega` (short forests,
//! cube faces) and its bimodule `T` (forest-tree-forest triples, freehedron
//! faces).
//!
//! Everything is over GF(2). The main entry points:
//!
//! - [`families`]: enumerate faces, boundaries and chain complexes of the four
//!   families, plus the box realization of freehedra.
//! - [`operad`]: differentials, composition, bimodule actions, counit and
//!   comultiplication on the forest/triple bases.
//! - [`correspond`]: the bijection between nice expressions and triples, the
//!   forest-to-cube-word map, and the multiplihedron-to-freehedron projection.
//! - [`diagonal`]: Saneblidze diagonals for cubes and freehedra, coassociativity
//!   defects and explicit GF(2) null homotopies.
//! - [`suites`]: the verification batteries exposed by the `freehedra` binary.
//!
//! See the crate examples (`cargo run --example ...`) for guided tours.

pub mod chain;
pub mod correspond;
pub mod diagonal;
pub mod expression;
pub mod export;
pub mod families;
pub mod forest;
pub mod gf2;
pub mod operad;
pub mod suites;
pub mod tree;
pub mod word;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid branch-pair address: {0}")]
    Address(String),
    #[error("{0} is out of range for {1}")]
    OutOfRange(u32, &'static str),
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("degree/dimension mismatch: {0}")]
    Degree(String),
    #[error("unknown basis element `{0}` in {1}")]
    UnknownBasis(String, String),
    #[error("box/expression matching failed: {0}")]
    Matching(String),
    #[error("linear system infeasible: {0}")]
    Infeasible(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
