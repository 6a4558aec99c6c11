//! Disjoint uni-color st-paths in edge-colored graphs.
//!
//! Given an edge-colored graph and two terminals `s` and `t`, MaxCDP asks
//! for the largest set of internally disjoint st-paths, each using edges of
//! a single color. MaxCDDP also requires the paths to have pairwise
//! distinct colors. This crate provides an exact oracle, polynomial cases,
//! parameterized solvers, a color-coding dynamic program, an approximation,
//! and two reductions used for cross-validation.

pub mod bitset;
pub mod color_coding;
pub mod ecg;
pub mod error;
pub mod fixtures;
pub mod flow;
pub mod graph;
pub mod instance;
pub mod matching;
pub mod oracle;
pub mod poly;
pub mod reductions;
pub mod vc;
pub mod xp;

pub use error::{GraphError, ParseError, ReductionError, SolveError};
pub use graph::{Color, ColorSet, EdgeColoredGraph, SimpleGraph, Vertex};
pub use instance::{validate_instance, validate_solution, Mode, PathSolution, ProblemInstance, UniColorPath};
