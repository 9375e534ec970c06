//! Exact solvers for the signed Roman domination number and the certificates
//! they return.

use std::fmt;
use std::time::Duration;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{self, FamilySpec, Graph};
use crate::srdf::{self, Labeling};

pub mod branch_bound;
pub mod exhaustive;

pub use branch_bound::{solve_branch_bound, solve_branch_bound_with, BranchBoundOptions};
pub use exhaustive::{solve_exhaustive, solve_exhaustive_with, EXHAUSTIVE_DEFAULT_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Exhaustive,
    BranchBound,
    LadderDp,
    Construction,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::BranchBound => "branch-bound",
            Method::LadderDp => "ladder-dp",
            Method::Construction => "construction",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// What graph a certificate talks about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphDescriptor {
    Family(FamilySpec),
    /// SHA-256 of the canonical edge list, for graphs without a family tag.
    Digest(String),
}

impl GraphDescriptor {
    pub fn of(g: &Graph) -> Self {
        match g.family() {
            Some(spec) => GraphDescriptor::Family(spec),
            None => {
                let untagged = Graph::from_edges(g.vertex_count(), &g.edges().collect::<Vec<_>>())
                    .expect("edges of a valid graph");
                let digest = Sha256::digest(graph::write_edge_list(&untagged).as_bytes());
                GraphDescriptor::Digest(hex::encode(digest))
            }
        }
    }
}

impl fmt::Display for GraphDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphDescriptor::Family(spec) => write!(f, "{spec}"),
            GraphDescriptor::Digest(hex) => write!(f, "sha256:{hex}"),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

/// A labeling together with its weight and how it was obtained. When
/// `claimed_optimal` is set the weight is the proven minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub graph: GraphDescriptor,
    pub labeling: Labeling,
    pub weight: i64,
    pub claimed_optimal: bool,
    pub method: Method,
    pub stats: SearchStats,
}

impl Certificate {
    /// Re-checks the labeling against `g` and the recorded weight.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let report = srdf::validate(g, &self.labeling)?;
        if !report.is_valid() {
            return Err(Error::InvalidInput(format!(
                "certificate labeling is not a valid signed Roman dominating function \
                 (sum violations {:?}, missing +2 neighbor {:?})",
                report.sum_violations, report.guard_violations
            )));
        }
        if self.labeling.weight() != self.weight {
            return Err(Error::InvalidInput(format!(
                "certificate weight {} disagrees with labeling weight {}",
                self.weight,
                self.labeling.weight()
            )));
        }
        Ok(())
    }
}

/// Label values in search order, matching `Label` ordering.
pub(crate) const VALUES: [i64; 3] = [-1, 1, 2];
