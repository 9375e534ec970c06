//! Exact signed Roman domination numbers.
//!
//! A signed Roman dominating function labels every vertex with `-1`, `1` or
//! `2` so that each closed neighborhood sums to at least 1 and each `-1`
//! vertex has a `+2` neighbor. This crate builds the graphs of interest
//! (ladders, circular ladders, their complements, and paths, cycles and
//! complete graphs for reference), validates labelings, computes the minimum
//! weight with an exhaustive oracle, a branch-and-bound search and a linear
//! column-profile DP, and emits explicit labelings for every ladder family.

pub mod certificate;
pub mod constructions;
pub mod dot;
pub mod error;
pub mod figures;
pub mod formulas;
pub mod graph;
pub mod ladder_dp;
pub mod solver;
pub mod srdf;

pub use error::{Error, Result};
pub use formulas::{
    gamma_formula, lower_bound_degree, lower_bound_size, FormulaResult, Rational, SizeBound, Source,
};
pub use graph::{Family, FamilySpec, Graph, VertexCoord};
pub use ladder_dp::{solve_circular_ladder_dp, solve_ladder_dp};
pub use solver::{
    solve_branch_bound, solve_branch_bound_with, solve_exhaustive, solve_exhaustive_with,
    BranchBoundOptions, Certificate, GraphDescriptor, Method, SearchStats,
};
pub use srdf::{validate, Label, Labeling, PartitionCounts, ValidationReport};
