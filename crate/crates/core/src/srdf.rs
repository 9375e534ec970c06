//! Labelings `V -> {-1, 1, 2}` and the two signed Roman domination conditions:
//! every closed neighborhood sums to at least 1, and every `-1` vertex has a
//! `+2` neighbor.

use std::fmt;
use std::str::FromStr;

use crate::error::{parse_error, Error, Result};
use crate::graph::{Graph, VertexCoord};

/// A single vertex label. Ordered `-1 < 1 < 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    MinusOne,
    One,
    Two,
}

impl Label {
    pub const ALL: [Label; 3] = [Label::MinusOne, Label::One, Label::Two];

    pub fn value(self) -> i64 {
        match self {
            Label::MinusOne => -1,
            Label::One => 1,
            Label::Two => 2,
        }
    }

    pub fn from_value(value: i64) -> Option<Label> {
        match value {
            -1 => Some(Label::MinusOne),
            1 => Some(Label::One),
            2 => Some(Label::Two),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // Accept the unicode minus some figures are typed with.
        let normalized = s.trim().replace('\u{2212}', "-");
        normalized
            .parse::<i64>()
            .ok()
            .and_then(Label::from_value)
            .ok_or_else(|| Error::InvalidInput(format!("label must be -1, 1 or 2, got `{s}`")))
    }
}

/// A total labeling, stored in vertex-index order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling(Vec<Label>);

impl Labeling {
    pub fn new(labels: Vec<Label>) -> Self {
        Labeling(labels)
    }

    pub fn uniform(len: usize, label: Label) -> Self {
        Labeling(vec![label; len])
    }

    /// Builds a labeling from integer values; `None` if any value is outside
    /// `{-1, 1, 2}`.
    pub fn from_values(values: &[i64]) -> Option<Self> {
        values
            .iter()
            .map(|&v| Label::from_value(v))
            .collect::<Option<Vec<_>>>()
            .map(Labeling)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn get(&self, v: usize) -> Label {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, label: Label) {
        self.0[v] = label;
    }

    pub fn values(&self) -> Vec<i64> {
        self.0.iter().map(|l| l.value()).collect()
    }

    /// Sum of all labels.
    pub fn weight(&self) -> i64 {
        self.0.iter().map(|l| l.value()).sum()
    }

    pub fn partition_counts(&self) -> PartitionCounts {
        let mut counts = PartitionCounts::default();
        for label in &self.0 {
            match label {
                Label::MinusOne => counts.minus_one += 1,
                Label::One => counts.one += 1,
                Label::Two => counts.two += 1,
            }
        }
        counts
    }
}

impl From<Vec<Label>> for Labeling {
    fn from(labels: Vec<Label>) -> Self {
        Labeling(labels)
    }
}

/// Sizes of the classes `V_-1`, `V_1`, `V_2`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PartitionCounts {
    pub minus_one: usize,
    pub one: usize,
    pub two: usize,
}

impl PartitionCounts {
    pub fn weight(&self) -> i64 {
        2 * self.two as i64 + self.one as i64 - self.minus_one as i64
    }

    pub fn total(&self) -> usize {
        self.minus_one + self.one + self.two
    }
}

pub fn weight(labeling: &Labeling) -> i64 {
    labeling.weight()
}

pub fn partition_counts(labeling: &Labeling) -> PartitionCounts {
    labeling.partition_counts()
}

/// Per-vertex diagnostics from [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Sum of labels over each closed neighborhood.
    pub closed_sums: Vec<i64>,
    /// Whether each vertex has a `+2` neighbor; only meaningful where the
    /// label is `-1`.
    pub has_two_neighbor: Vec<bool>,
    /// Vertices whose closed neighborhood sums below 1.
    pub sum_violations: Vec<usize>,
    /// `-1` vertices without a `+2` neighbor.
    pub guard_violations: Vec<usize>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.sum_violations.is_empty() && self.guard_violations.is_empty()
    }
}

/// Checks both conditions at every vertex and reports every violation.
pub fn validate(g: &Graph, labeling: &Labeling) -> Result<ValidationReport> {
    if labeling.len() != g.vertex_count() {
        return Err(Error::InvalidInput(format!(
            "labeling has {} entries but the graph has {} vertices",
            labeling.len(),
            g.vertex_count()
        )));
    }
    let n = g.vertex_count();
    let mut closed_sums = Vec::with_capacity(n);
    let mut has_two_neighbor = Vec::with_capacity(n);
    let mut sum_violations = Vec::new();
    let mut guard_violations = Vec::new();
    for v in 0..n {
        let neighbors = g.neighbors(v);
        let sum = labeling.get(v).value()
            + neighbors
                .iter()
                .map(|&u| labeling.get(u).value())
                .sum::<i64>();
        let guarded = neighbors.iter().any(|&u| labeling.get(u) == Label::Two);
        if sum < 1 {
            sum_violations.push(v);
        }
        if labeling.get(v) == Label::MinusOne && !guarded {
            guard_violations.push(v);
        }
        closed_sums.push(sum);
        has_two_neighbor.push(guarded);
    }
    Ok(ValidationReport {
        closed_sums,
        has_two_neighbor,
        sum_violations,
        guard_violations,
    })
}

pub fn is_valid(g: &Graph, labeling: &Labeling) -> bool {
    validate(g, labeling).map(|r| r.is_valid()).unwrap_or(false)
}

/// Writes the labeling text format: `<vertex_index> <label>` per line.
pub fn write_labeling(labeling: &Labeling) -> String {
    labeling
        .labels()
        .iter()
        .enumerate()
        .map(|(v, l)| format!("{v} {l}\n"))
        .collect()
}

/// Coordinate form `(row,col)=label`, one vertex per line.
pub fn write_labeling_coords(labeling: &Labeling) -> String {
    labeling
        .labels()
        .iter()
        .enumerate()
        .map(|(v, l)| format!("{}={l}\n", VertexCoord::from_index(v)))
        .collect()
}

fn parse_coord(s: &str, line: usize) -> Result<VertexCoord> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| parse_error(line, format!("expected `(row,col)`, got `{s}`")))?;
    let (row, col) = inner
        .split_once(',')
        .ok_or_else(|| parse_error(line, "expected `(row,col)`"))?;
    let row: usize = row
        .trim()
        .parse()
        .map_err(|_| parse_error(line, "bad row"))?;
    let column: usize = col
        .trim()
        .parse()
        .map_err(|_| parse_error(line, "bad column"))?;
    if !(1..=2).contains(&row) || column == 0 {
        return Err(parse_error(
            line,
            format!("coordinate ({row},{column}) out of range"),
        ));
    }
    Ok(VertexCoord::new(row, column))
}

/// Parses a labeling in either index form (`<index> <label>`) or coordinate
/// form (`(row,col)=label`). Every vertex `0..len` must appear exactly once.
pub fn parse_labeling(text: &str) -> Result<Labeling> {
    let mut entries: Vec<(usize, Label)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (index, label) = if let Some((coord, label)) = line.split_once('=') {
            (parse_coord(coord, line_no)?.index(), label)
        } else {
            let mut parts = line.split_whitespace();
            match (parts.next(), parts.next(), parts.next()) {
                (Some(idx), Some(label), None) => (
                    idx.parse::<usize>()
                        .map_err(|_| parse_error(line_no, format!("bad vertex index `{idx}`")))?,
                    label,
                ),
                _ => return Err(parse_error(line_no, "expected `<vertex_index> <label>`")),
            }
        };
        let label: Label = label
            .parse()
            .map_err(|e: Error| parse_error(line_no, e.to_string()))?;
        entries.push((index, label));
    }
    entries.sort_by_key(|&(v, _)| v);
    let mut labels = Vec::with_capacity(entries.len());
    for (expected, (v, label)) in entries.into_iter().enumerate() {
        if v != expected {
            return Err(parse_error(
                0,
                if v < expected {
                    format!("vertex {v} labeled twice")
                } else {
                    format!("vertex {expected} has no label")
                },
            ));
        }
        labels.push(label);
    }
    Ok(Labeling(labels))
}
