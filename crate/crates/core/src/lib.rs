//! Core library for the `rsl` workbench: exact small-graph machinery for
//! Ramsey size-linearity experiments.
//!
//! The crate is organized around a handful of search kernels:
//!
//! * [`graph`] — immutable simple graphs with bitset adjacency, girth,
//!   distances, and exact rational average degree
//! * [`canon`] — canonical codes (isomorphism-class fingerprints)
//! * [`graph6`] — the standard graph6 text interchange format
//! * [`construct`] — seeded greedy / probabilistic-deletion builders for
//!   graphs of girth ≥ g and average degree ≥ 4, plus the named-graph catalog
//! * [`certify`] — three-valued size-linearity verdicts from a fixed fact base
//! * [`minsearch`] — inclusion-minimal density-critical subgraph extraction
//!   and the full construction-to-candidates pipeline
//! * [`ramsey`] — exact `r(G,H)` by branch-and-bound edge 2-coloring
//!
//! All search entry points take an [`exec::ExecConfig`]; with the `parallel`
//! feature (default) subtrees run on rayon, with results merged so that
//! values and node counts are identical to a sequential run.

pub mod brute;
pub mod canon;
pub mod catalog;
pub mod certify;
pub mod construct;
pub mod copies;
pub mod density;
pub mod embed;
pub mod exec;
pub mod flow;
pub mod graph;
pub mod graph6;
pub mod minsearch;
pub mod ramsey;
pub mod rational;
pub mod rng;

pub use canon::{canonical_code, CanonicalCode};
pub use exec::{Budget, ExecConfig, Parallelism};
pub use graph::{Distance, Girth, Graph, GraphError};
pub use rational::Rational;
