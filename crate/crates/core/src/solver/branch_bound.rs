//! Depth-first branch-and-bound over partial labelings.
//!
//! Vertices are branched in descending degree order (ties by index) with labels
//! tried as `-1, 1, 2`. After each assignment the closed neighborhood of the
//! assigned vertex is checked:
//!
//! * a closed neighborhood whose labeled sum plus `2` for every unlabeled member
//!   is below 1 can never be repaired;
//! * a `-1` vertex with no `+2` neighbor and no unlabeled neighbor is dead.
//!
//! A node is cut when its weight minus the number of unlabeled vertices (every
//! remaining vertex at `-1`) already reaches the incumbent. The size bound
//! `(3n - 4m) / 2` serves as a whole-graph floor: reaching it ends the search.
//!
//! With more than one worker the first levels of the tree are expanded into
//! independent subproblems that share the incumbent weight atomically. The
//! optimum weight does not depend on scheduling; the witness does, unless a
//! canonical witness is requested, in which case a second pass in vertex-index
//! order returns the lexicographically smallest optimum.

use std::sync::atomic::{AtomicI64, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use super::{Certificate, GraphDescriptor, Method, SearchStats, VALUES};
use crate::error::{Error, Result};
use crate::formulas::{self, SizeBound};
use crate::graph::Graph;
use crate::srdf::{Label, Labeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BranchBoundOptions {
    pub vertex_cap: usize,
    pub workers: usize,
    /// Return the lexicographically smallest optimal labeling.
    pub canonical_witness: bool,
}

impl Default for BranchBoundOptions {
    fn default() -> Self {
        BranchBoundOptions {
            vertex_cap: 40,
            workers: 1,
            canonical_witness: true,
        }
    }
}

impl BranchBoundOptions {
    /// Single worker with the canonical witness.
    pub fn deterministic() -> Self {
        BranchBoundOptions::default()
    }

    pub fn parallel(workers: usize) -> Self {
        BranchBoundOptions {
            workers: workers.max(1),
            canonical_witness: false,
            ..BranchBoundOptions::default()
        }
    }
}

pub fn solve_branch_bound(g: &Graph) -> Result<Certificate> {
    solve_branch_bound_with(g, &BranchBoundOptions::default())
}

const UNLABELED: i8 = 0;

/// Partial labeling plus the per-vertex counters the propagation rules read.
#[derive(Clone)]
struct Partial<'a> {
    g: &'a Graph,
    labels: Vec<i8>,
    labeled_sum: Vec<i64>,
    unlabeled_closed: Vec<u32>,
    unlabeled_open: Vec<u32>,
    two_neighbors: Vec<u32>,
    weight: i64,
    unlabeled: usize,
}

impl<'a> Partial<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        Partial {
            g,
            labels: vec![UNLABELED; n],
            labeled_sum: vec![0; n],
            unlabeled_closed: (0..n).map(|v| g.degree(v) as u32 + 1).collect(),
            unlabeled_open: (0..n).map(|v| g.degree(v) as u32).collect(),
            two_neighbors: vec![0; n],
            weight: 0,
            unlabeled: n,
        }
    }

    fn assign(&mut self, v: usize, value: i64) {
        self.labels[v] = value as i8;
        self.weight += value;
        self.unlabeled -= 1;
        self.labeled_sum[v] += value;
        self.unlabeled_closed[v] -= 1;
        for &u in self.g.neighbors(v) {
            self.labeled_sum[u] += value;
            self.unlabeled_closed[u] -= 1;
            self.unlabeled_open[u] -= 1;
            if value == 2 {
                self.two_neighbors[u] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let value = self.labels[v] as i64;
        self.labels[v] = UNLABELED;
        self.weight -= value;
        self.unlabeled += 1;
        self.labeled_sum[v] -= value;
        self.unlabeled_closed[v] += 1;
        for &u in self.g.neighbors(v) {
            self.labeled_sum[u] -= value;
            self.unlabeled_closed[u] += 1;
            self.unlabeled_open[u] += 1;
            if value == 2 {
                self.two_neighbors[u] -= 1;
            }
        }
    }

    fn locally_feasible(&self, u: usize) -> bool {
        if self.labeled_sum[u] + 2 * (self.unlabeled_closed[u] as i64) < 1 {
            return false;
        }
        !(self.labels[u] == -1 && self.two_neighbors[u] == 0 && self.unlabeled_open[u] == 0)
    }

    /// Propagation after assigning `v`: only its closed neighborhood changed.
    fn feasible_around(&self, v: usize) -> bool {
        self.locally_feasible(v)
            && self
                .g
                .neighbors(v)
                .iter()
                .all(|&u| self.locally_feasible(u))
    }

    /// Weight of the best conceivable completion.
    fn optimistic_weight(&self) -> i64 {
        self.weight - self.unlabeled as i64
    }

    fn labeling(&self) -> Labeling {
        Labeling::new(
            self.labels
                .iter()
                .map(|&x| Label::from_value(x as i64).expect("complete labeling"))
                .collect(),
        )
    }
}

/// Incumbent shared between workers.
struct Incumbent {
    weight: AtomicI64,
    floor: i64,
    nodes: AtomicU64,
}

impl Incumbent {
    fn weight(&self) -> i64 {
        self.weight.load(Ordering::Relaxed)
    }

    fn at_floor(&self) -> bool {
        self.weight() <= self.floor
    }
}

struct Worker<'a, 's> {
    partial: Partial<'a>,
    order: &'s [usize],
    incumbent: &'s Incumbent,
    best: Option<(i64, Labeling)>,
    nodes: u64,
}

impl Worker<'_, '_> {
    fn search(&mut self, depth: usize) {
        self.nodes += 1;
        if self.incumbent.at_floor() || self.partial.optimistic_weight() >= self.incumbent.weight()
        {
            return;
        }
        if depth == self.order.len() {
            let w = self.partial.weight;
            self.incumbent.weight.fetch_min(w, Ordering::Relaxed);
            if self.best.as_ref().is_none_or(|(b, _)| w < *b) {
                self.best = Some((w, self.partial.labeling()));
            }
            return;
        }
        let v = self.order[depth];
        for value in VALUES {
            self.partial.assign(v, value);
            if self.partial.feasible_around(v) {
                self.search(depth + 1);
            }
            self.partial.unassign(v);
        }
    }
}

fn branching_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Every feasible prefix assignment of the first `depth` vertices of `order`.
fn frontier<'a>(
    partial: &mut Partial<'a>,
    order: &[usize],
    depth: usize,
    out: &mut Vec<Partial<'a>>,
) {
    if depth == 0 {
        out.push(partial.clone());
        return;
    }
    let v = order[order.len() - depth];
    for value in VALUES {
        partial.assign(v, value);
        if partial.feasible_around(v) {
            frontier(partial, order, depth - 1, out);
        }
        partial.unassign(v);
    }
}

fn whole_graph_floor(g: &Graph) -> i64 {
    match formulas::lower_bound_size(g) {
        SizeBound::Value(bound) => bound.ceil().to_integer(),
        SizeBound::Inapplicable => i64::MIN,
    }
}

/// Finds the optimum weight and some optimal labeling.
fn optimize(g: &Graph, workers: usize) -> (i64, Labeling, u64) {
    let n = g.vertex_count();
    let order = branching_order(g);
    // all +1 is always valid
    let incumbent = Incumbent {
        weight: AtomicI64::new(n as i64),
        floor: whole_graph_floor(g),
        nodes: AtomicU64::new(0),
    };
    let fallback = Labeling::uniform(n, Label::One);

    let results: Vec<(i64, Labeling)> = if workers <= 1 || n < 4 {
        let mut worker = Worker {
            partial: Partial::new(g),
            order: &order,
            incumbent: &incumbent,
            best: None,
            nodes: 0,
        };
        worker.search(0);
        incumbent.nodes.fetch_add(worker.nodes, Ordering::Relaxed);
        worker.best.into_iter().collect()
    } else {
        let mut split = 0;
        while split < n && 3usize.pow(split as u32) < 8 * workers {
            split += 1;
        }
        let mut roots = Vec::new();
        frontier(&mut Partial::new(g), &order[..split], split, &mut roots);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        let collected = Mutex::new(Vec::new());
        pool.install(|| {
            roots.into_par_iter().for_each(|partial| {
                let mut worker = Worker {
                    partial,
                    order: &order,
                    incumbent: &incumbent,
                    best: None,
                    nodes: 0,
                };
                worker.search(split);
                incumbent.nodes.fetch_add(worker.nodes, Ordering::Relaxed);
                if let Some(found) = worker.best {
                    collected.lock().expect("results lock").push(found);
                }
            });
        });
        collected.into_inner().expect("results lock")
    };

    let nodes = incumbent.nodes.load(Ordering::Relaxed);
    // Merge by (weight, labeling) so equal-weight witnesses tie-break
    // lexicographically.
    match results.into_iter().min() {
        Some((w, l)) => (w, l, nodes),
        None => (n as i64, fallback, nodes),
    }
}

/// Lexicographically smallest valid labeling of weight at most `target`,
/// searching vertices in index order.
fn canonical_witness(g: &Graph, target: i64) -> (Option<Labeling>, u64) {
    fn descend(p: &mut Partial<'_>, v: usize, target: i64, nodes: &mut u64) -> bool {
        *nodes += 1;
        if p.optimistic_weight() > target {
            return false;
        }
        if v == p.labels.len() {
            return true;
        }
        for value in VALUES {
            p.assign(v, value);
            if p.feasible_around(v) && descend(p, v + 1, target, nodes) {
                return true;
            }
            p.unassign(v);
        }
        false
    }
    let mut partial = Partial::new(g);
    let mut nodes = 0;
    let found = descend(&mut partial, 0, target, &mut nodes);
    (found.then(|| partial.labeling()), nodes)
}

pub fn solve_branch_bound_with(g: &Graph, options: &BranchBoundOptions) -> Result<Certificate> {
    let n = g.vertex_count();
    if n > options.vertex_cap {
        return Err(Error::SizeLimit {
            method: Method::BranchBound.tag(),
            vertices: n,
            cap: options.vertex_cap,
        });
    }
    let start = Instant::now();
    let (weight, mut labeling, mut nodes) = optimize(g, options.workers);
    if options.canonical_witness {
        let (canonical, extra) = canonical_witness(g, weight);
        nodes += extra;
        labeling = canonical.ok_or(Error::Infeasible)?;
    }
    Ok(Certificate {
        graph: GraphDescriptor::of(g),
        labeling,
        weight,
        claimed_optimal: true,
        method: Method::BranchBound,
        stats: SearchStats {
            nodes,
            elapsed: start.elapsed(),
        },
    })
}
