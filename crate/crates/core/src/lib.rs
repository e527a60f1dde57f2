//! Exact bounds on consecutive clique numbers of graphs.
//!
//! Given that a graph has `m` cliques on `k` vertices, how many cliques on
//! `k + 1` vertices can it have? This crate evaluates the classical
//! Kruskal-Katona bound together with the sharper large-clique and
//! small-clique bounds, builds the graphs and rev-lex complexes that attain
//! them, and checks every claim against exhaustive enumeration of small
//! graphs.
//!
//! All arithmetic is exact: counts are [`Nat`] (arbitrary precision) and
//! ratios are [`num_rational::BigRational`].
//!
//! Module map:
//!
//! * [`binomial`]: binomials, cascade sums and Turán binomials.
//! * [`representations`]: the cascade, two-term and colored representations.
//! * [`bounds`]: every bound function plus ratio and frequency statistics.
//! * [`complexes`]: rev-lex order, rev-lex and colored rev-lex complexes.
//! * [`graphs`]: graphs, clique vectors, Turán graphs, constructions, I/O.
//! * [`board`]: the two-row board rearrangement simulator.
//! * [`oracle`]: brute-force enumeration of small labeled graphs.
//! * [`cli`]: the `cliquebounds` command-line front end.

pub mod binomial;
pub mod board;
pub mod bounds;
pub mod cli;
pub mod complexes;
mod error;
pub mod graphs;
pub mod oracle;
pub mod representations;
pub mod serde_exact;

pub use binomial::Nat;
pub use error::{Error, Result};

/// Library version reported by the CLI and the C ABI.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
