#![forbid(unsafe_code)]

//! Interaction between a graph's automorphism group and the eigenspaces of
//! its adjacency matrix.
//!
//! The adjacency matrix of a graph commutes with every automorphism, so each
//! eigenspace carries a representation of the automorphism group. This crate
//! decomposes that representation into irreducible and isotypic components,
//! computes `dim span(G v)` for arbitrary vectors by two independent methods
//! (an intertwiner-rank formula and an orbit-closure oracle that must agree),
//! and constructs the vectors whose orbit span is extremal in each
//! eigenspace.
//!
//! Start with the runnable programs in `examples/`: each major capability has
//! one. The `autspec` binary exposes the same analyses as subcommands with
//! text and JSON output.
//!
//! Module map: [`graph`] holds graphs, parsers, and builtin families;
//! [`linalg`] the dense complex machinery (Jacobi eigensolvers, orthonormal
//! subspaces, nullspaces, the seeded generator); [`perm`] permutations,
//! automorphism search, and group bookkeeping; [`rep`] the representation
//! layer (invariance, decomposition, intertwiners); [`span`] the orbit span
//! analysis; [`commands`] and [`report`] back the binary.

pub mod commands;
pub mod graph;
pub mod linalg;
pub mod perm;
pub mod rep;
pub mod report;
pub mod span;
