//! Undirected simple graphs and the named families: paths, cycles, complete
//! graphs, ladders `P2 □ Pn`, circular ladders `Cn □ P2` and their complements.
//!
//! Vertices are `0..vertex_count`. Adjacency lists are sorted ascending and
//! free of duplicates and self-loops; every constructor upholds this, and
//! [`Graph::check_invariants`] re-verifies it.
//!
//! For the ladder families a vertex `(row, column)` (1-based) sits at linear
//! index `(column - 1) * 2 + (row - 1)`, so columns are laid out left to right
//! in index order.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid_parameter, parse_error, Error, Result};

/// The graph families with a dedicated factory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Ladder,
    CircularLadder,
    LadderComplement,
    CircularLadderComplement,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Ladder,
        Family::CircularLadder,
        Family::LadderComplement,
        Family::CircularLadderComplement,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Ladder => "ladder",
            Family::CircularLadder => "circular-ladder",
            Family::LadderComplement => "ladder-complement",
            Family::CircularLadderComplement => "circular-ladder-complement",
        }
    }

    /// Smallest admissible parameter.
    pub fn min_n(self) -> usize {
        match self {
            Family::Path | Family::Complete => 1,
            Family::Ladder | Family::LadderComplement => 2,
            Family::Cycle | Family::CircularLadder | Family::CircularLadderComplement => 3,
        }
    }

    /// Families whose vertices carry `(row, column)` coordinates.
    pub fn has_coordinates(self) -> bool {
        matches!(
            self,
            Family::Ladder
                | Family::CircularLadder
                | Family::LadderComplement
                | Family::CircularLadderComplement
        )
    }

    pub fn complement(self) -> Option<Family> {
        match self {
            Family::Ladder => Some(Family::LadderComplement),
            Family::LadderComplement => Some(Family::Ladder),
            Family::CircularLadder => Some(Family::CircularLadderComplement),
            Family::CircularLadderComplement => Some(Family::CircularLadder),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| invalid_parameter(format!("unknown family `{s}`")))
    }
}

/// A family tag plus its size parameter. Construct with [`FamilySpec::new`],
/// which enforces the family's minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n < family.min_n() {
            return Err(invalid_parameter(format!(
                "{family} requires n >= {}, got {n}",
                family.min_n()
            )));
        }
        Ok(FamilySpec { family, n })
    }

    /// Number of vertices of the graph this spec names.
    pub fn vertex_count(&self) -> usize {
        if self.family.has_coordinates() {
            2 * self.n
        } else {
            self.n
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.family, self.n)
    }
}

/// 1-based `(row, column)` position in a two-row ladder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexCoord {
    pub row: usize,
    pub column: usize,
}

impl VertexCoord {
    pub fn new(row: usize, column: usize) -> Self {
        VertexCoord { row, column }
    }

    pub fn index(self) -> usize {
        (self.column - 1) * 2 + (self.row - 1)
    }

    pub fn from_index(index: usize) -> Self {
        VertexCoord {
            row: index % 2 + 1,
            column: index / 2 + 1,
        }
    }
}

impl fmt::Display for VertexCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.column)
    }
}

/// Immutable undirected simple graph in adjacency-list form.
#[derive(Debug, Clone)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    family: Option<FamilySpec>,
}

/// Structural equality; the family tag is ignored.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops, duplicate edges and
    /// endpoints out of range.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!("duplicate edge at vertex {v}")));
            }
        }
        Ok(Graph {
            adjacency,
            family: None,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); vertex_count],
            family: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adjacency.iter().any(Vec::is_empty)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn family(&self) -> Option<FamilySpec> {
        self.family
    }

    pub fn with_family(mut self, spec: FamilySpec) -> Self {
        self.family = Some(spec);
        self
    }

    /// Coordinate of `v` when the graph belongs to a ladder family.
    pub fn coord(&self, v: usize) -> Option<VertexCoord> {
        match self.family {
            Some(spec) if spec.family.has_coordinates() && v < self.vertex_count() => {
                Some(VertexCoord::from_index(v))
            }
            _ => None,
        }
    }

    /// Verifies simplicity and symmetry, returning a description of the first
    /// violation.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let mut degree_sum = 0;
        for (v, list) in self.adjacency.iter().enumerate() {
            degree_sum += list.len();
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("adjacency of {v} not strictly ascending"));
            }
            for &u in list {
                if u == v {
                    return Err(format!("self-loop at {v}"));
                }
                if u >= self.vertex_count() {
                    return Err(format!("neighbor {u} of {v} out of range"));
                }
                if !self.has_edge(u, v) {
                    return Err(format!("edge {v}-{u} not symmetric"));
                }
            }
        }
        if degree_sum % 2 != 0 || degree_sum / 2 != self.edge_count() {
            return Err("degree sum is not twice the edge count".into());
        }
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid_parameter("path requires n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid_parameter(format!("cycle requires n >= 3, got {n}")));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid_parameter("complete requires n >= 1"));
    }
    let adjacency = (0..n)
        .map(|v| (0..n).filter(|&u| u != v).collect())
        .collect();
    Ok(Graph {
        adjacency,
        family: None,
    })
}

/// Cartesian product `g □ h`. Vertex `(a, b)` with `a` in `g` and `b` in `h`
/// gets index `b * |V(g)| + a`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let ng = g.vertex_count();
    let nh = h.vertex_count();
    let mut adjacency = vec![Vec::new(); ng * nh];
    for b in 0..nh {
        for a in 0..ng {
            let list = &mut adjacency[b * ng + a];
            list.extend(g.neighbors(a).iter().map(|&a2| b * ng + a2));
            list.extend(h.neighbors(b).iter().map(|&b2| b2 * ng + a));
            list.sort_unstable();
        }
    }
    Graph {
        adjacency,
        family: None,
    }
}

/// Complement within all unordered pairs. Ladder-family tags are mapped to
/// their complement family.
pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let adjacency = (0..n)
        .map(|v| {
            let mut present = g.neighbors(v).iter().peekable();
            (0..n)
                .filter(|&u| {
                    if present.peek() == Some(&&u) {
                        present.next();
                        false
                    } else {
                        u != v
                    }
                })
                .collect()
        })
        .collect();
    let family = g.family.and_then(|spec| {
        spec.family
            .complement()
            .map(|family| FamilySpec { family, n: spec.n })
    });
    Graph { adjacency, family }
}

/// Builds the graph a [`FamilySpec`] names, with the family tag attached.
pub fn family(spec: FamilySpec) -> Result<Graph> {
    let spec = FamilySpec::new(spec.family, spec.n)?;
    let n = spec.n;
    let g = match spec.family {
        Family::Path => path(n)?,
        Family::Cycle => cycle(n)?,
        Family::Complete => complete(n)?,
        Family::Ladder => cartesian_product(&path(2)?, &path(n)?),
        // P2 as the first factor keeps rows inside a column adjacent in index
        // order; the product is isomorphic to Cn □ P2.
        Family::CircularLadder => cartesian_product(&path(2)?, &cycle(n)?),
        Family::LadderComplement => complement(&cartesian_product(&path(2)?, &path(n)?)),
        Family::CircularLadderComplement => complement(&cartesian_product(&path(2)?, &cycle(n)?)),
    };
    Ok(g.with_family(spec))
}

/// Minimum degree, maximum degree and the full degree sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub degrees: Vec<usize>,
}

pub fn degree_stats(g: &Graph) -> Result<DegreeStats> {
    let degrees: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let (Some(&min), Some(&max)) = (degrees.iter().min(), degrees.iter().max()) else {
        return Err(invalid_parameter(
            "degree statistics of a graph with no vertices",
        ));
    };
    Ok(DegreeStats { min, max, degrees })
}

const FAMILY_COMMENT: &str = "# family:";

/// Writes the edge-list text format. Family graphs get a `# family:` comment
/// line so coordinates survive a round trip.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(spec) = g.family {
        out.push_str(&format!("{FAMILY_COMMENT} {spec}\n"));
    }
    out.push_str(&format!("{} {}\n", g.vertex_count(), g.edge_count()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_usize(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| {
        parse_error(
            line,
            format!("expected a non-negative integer, got `{token}`"),
        )
    })
}

/// Parses the edge-list text format. Edge lines may appear in any order; the
/// declared edge count must match.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut family_tag = None;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix(FAMILY_COMMENT) {
            let mut parts = rest.split_whitespace();
            if let (Some(tag), Some(n), None) = (parts.next(), parts.next(), parts.next()) {
                let family: Family = tag
                    .parse()
                    .map_err(|e: Error| parse_error(line_no, e.to_string()))?;
                family_tag = Some(
                    FamilySpec::new(family, parse_usize(n, line_no)?)
                        .map_err(|e| parse_error(line_no, e.to_string()))?,
                );
            }
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_error(line_no, "expected two integers"));
        }
        let a = parse_usize(tokens[0], line_no)?;
        let b = parse_usize(tokens[1], line_no)?;
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                if a >= n || b >= n {
                    return Err(parse_error(line_no, format!("vertex out of range 0..{n}")));
                }
                edges.push((a.min(b), a.max(b)));
            }
        }
    }

    let (n, m) =
        header.ok_or_else(|| parse_error(0, "missing `<vertex_count> <edge_count>` header"))?;
    if edges.len() != m {
        return Err(parse_error(
            0,
            format!("header declares {m} edges but {} were listed", edges.len()),
        ));
    }
    let mut g = Graph::from_edges(n, &edges)?;
    if let Some(spec) = family_tag {
        if spec.vertex_count() == n && family(spec)? == g {
            g = g.with_family(spec);
        }
    }
    Ok(g)
}
