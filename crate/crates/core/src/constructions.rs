//! Explicit labelings for ladders, circular ladders and their complements.
//!
//! Each family is described by clauses grouped as `-1`, `+1`, `+2`. A vertex
//! takes the label of the first group with a matching clause. Instances the
//! clauses do not cover are served from the literal figure labelings.

use std::fmt;

use crate::error::{invalid_parameter, Error, Result};
use crate::figures::{self, FigureLabeling};
use crate::formulas;
use crate::graph::{self, Family, FamilySpec, VertexCoord};
use crate::solver::{Certificate, GraphDescriptor, Method, SearchStats};
use crate::srdf::{self, Label, Labeling};

/// Labels whose clauses match `v`, in clause-group order.
type ClauseMatches = Vec<Label>;

fn ladder_clauses(n: usize, v: VertexCoord) -> ClauseMatches {
    let (row, i) = (v.row, v.column);
    let odd = i % 2 == 1;
    let mut out = Vec::new();
    let minus = (row == 1 && odd && !(i == n && n % 4 == 1))
        || (row == 2 && i >= 3 && odd && !(i == n && n % 4 == 3));
    let one = (row == 2 && i == 1)
        || (row == 1 && i % 4 == 0)
        || (row == 1 && i == n && n % 4 == 1)
        || (row == 2 && i % 4 == 2)
        || (row == 2 && i == n && matches!(n % 4, 2 | 3));
    let two = (row == 1 && i % 4 == 2) || (row == 2 && i % 4 == 0);
    for (hit, label) in [
        (minus, Label::MinusOne),
        (one, Label::One),
        (two, Label::Two),
    ] {
        if hit {
            out.push(label);
        }
    }
    out
}

fn ladder_complement_clauses(n: usize, v: VertexCoord) -> ClauseMatches {
    let (row, i) = (v.row, v.column);
    let mut out = Vec::new();
    if (row == 1 && (2..n).contains(&i)) || (row == 2 && (i == 2 || i == n - 1)) {
        out.push(Label::MinusOne);
    }
    if row == 2 && i != 2 && i != n - 1 {
        out.push(Label::One);
    }
    if row == 1 && (i == 1 || i == n) {
        out.push(Label::Two);
    }
    out
}

fn circular_ladder_clauses(n: usize, v: VertexCoord) -> ClauseMatches {
    let (row, i) = (v.row, v.column);
    let odd = i % 2 == 1;
    let mut out = Vec::new();
    if (row == 1 && odd) || (row == 2 && i >= 3 && odd && i != n) {
        out.push(Label::MinusOne);
    }
    if (row == 2 && i == 1)
        || (row == 1 && i % 4 == 0)
        || (row == 2 && i % 4 == 2)
        || (row == 2 && i == n && n % 4 == 3)
    {
        out.push(Label::One);
    }
    if (row == 1 && i % 4 == 2)
        || (row == 2 && i % 4 == 0)
        || (row == 2 && i == n && matches!(n % 4, 0 | 1))
    {
        out.push(Label::Two);
    }
    out
}

fn circular_ladder_complement_clauses(n: usize, v: VertexCoord) -> ClauseMatches {
    let (row, i) = (v.row, v.column);
    let mut out = Vec::new();
    if (row == 1 && (i == 1 || i == 4)) || (row == 2 && i != 2 && i != 5) {
        out.push(Label::MinusOne);
    }
    if (row == 1 && (5..=n).contains(&i)) || (row == 2 && i == 2) {
        out.push(Label::One);
    }
    if (row == 1 && (i == 2 || i == 3)) || (row == 2 && i == 5) {
        out.push(Label::Two);
    }
    out
}

fn clauses_for(family: Family) -> Option<fn(usize, VertexCoord) -> ClauseMatches> {
    match family {
        Family::Ladder => Some(ladder_clauses),
        Family::LadderComplement => Some(ladder_complement_clauses),
        Family::CircularLadder => Some(circular_ladder_clauses),
        Family::CircularLadderComplement => Some(circular_ladder_complement_clauses),
        _ => None,
    }
}

/// A vertex matched by no clause, or by clauses of different labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseConflict {
    pub coord: VertexCoord,
    pub matches: Vec<Label>,
}

/// Vertices where the clause system is not a function: uncovered, or claimed
/// by two different labels.
pub fn clause_conflicts(spec: FamilySpec) -> Result<Vec<ClauseConflict>> {
    let clauses = clauses_for(spec.family).ok_or(Error::NotCovered(spec))?;
    Ok((0..2 * spec.n)
        .map(VertexCoord::from_index)
        .filter_map(|coord| {
            let matches = clauses(spec.n, coord);
            let distinct = matches.windows(2).any(|w| w[0] != w[1]);
            (matches.is_empty() || distinct).then_some(ClauseConflict { coord, matches })
        })
        .collect())
}

fn apply_clauses(spec: FamilySpec) -> Result<Labeling> {
    let clauses = clauses_for(spec.family).ok_or(Error::NotCovered(spec))?;
    (0..2 * spec.n)
        .map(|v| {
            let coord = VertexCoord::from_index(v);
            clauses(spec.n, coord).first().copied().ok_or_else(|| {
                Error::InvalidInput(format!("no clause labels vertex {coord} of {spec}"))
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(Labeling::new)
}

pub fn construct_lg(n: usize) -> Result<Labeling> {
    if n < 2 {
        return Err(invalid_parameter(format!(
            "ladder construction requires n >= 2, got {n}"
        )));
    }
    apply_clauses(FamilySpec {
        family: Family::Ladder,
        n,
    })
}

pub fn construct_lg_complement(n: usize) -> Result<Labeling> {
    if n < 4 {
        return Err(invalid_parameter(format!(
            "ladder complement construction requires n >= 4, got {n}; n = 2, 3 come from figures"
        )));
    }
    apply_clauses(FamilySpec {
        family: Family::LadderComplement,
        n,
    })
}

pub fn construct_lc(n: usize) -> Result<Labeling> {
    if n < 3 {
        return Err(invalid_parameter(format!(
            "circular ladder construction requires n >= 3, got {n}"
        )));
    }
    let spec = FamilySpec {
        family: Family::CircularLadder,
        n,
    };
    if n == 5 {
        return Err(Error::ExcludedCase {
            spec,
            reason: "use the exact solvers or the literal figure labeling".into(),
        });
    }
    apply_clauses(spec)
}

pub fn construct_lc_complement(n: usize) -> Result<Labeling> {
    if n < 5 {
        return Err(invalid_parameter(format!(
            "circular ladder complement construction requires n >= 5, got {n}; n = 3, 4 come from figures"
        )));
    }
    apply_clauses(FamilySpec {
        family: Family::CircularLadderComplement,
        n,
    })
}

/// How a constructed labeling was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    CaseFunction,
    Figure(&'static str),
    /// The figure as drawn is invalid; a corrected labeling is used.
    RepairedFigure(&'static str),
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::CaseFunction => f.write_str("case function"),
            Origin::Figure(name) => write!(f, "reference labeling {name}"),
            Origin::RepairedFigure(name) => write!(f, "reference labeling {name}, repaired"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiscrepancyKind {
    /// The labeling fails one of the two conditions.
    InvalidLabeling,
    /// Construction weight differs from the tabulated value.
    WeightMismatch,
    /// Tabulated value differs from the exact optimum.
    FormulaMismatch,
    /// Clauses leave a vertex unlabeled or label it twice.
    ClauseConflict,
    /// A published labeling differs from what the clauses produce.
    FigureMismatch,
}

impl fmt::Display for DiscrepancyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiscrepancyKind::InvalidLabeling => "invalid-labeling",
            DiscrepancyKind::WeightMismatch => "weight-mismatch",
            DiscrepancyKind::FormulaMismatch => "formula-mismatch",
            DiscrepancyKind::ClauseConflict => "clause-conflict",
            DiscrepancyKind::FigureMismatch => "figure-mismatch",
        })
    }
}

/// Structured record of a disagreement between construction, figures,
/// tabulated values and exact optima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub spec: FamilySpec,
    pub kind: DiscrepancyKind,
    pub detail: String,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.kind, self.spec, self.detail)
    }
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub spec: FamilySpec,
    pub labeling: Labeling,
    pub origin: Origin,
    /// Problems found while producing the labeling.
    pub notes: Vec<Discrepancy>,
}

fn coords(vertices: &[usize]) -> String {
    vertices
        .iter()
        .map(|&v| VertexCoord::from_index(v).to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn from_figure(fig: &FigureLabeling, repaired: Option<&FigureLabeling>) -> Result<Construction> {
    let spec = fig.spec();
    let g = graph::family(spec)?;
    let drawn = fig.labeling();
    let report = srdf::validate(&g, &drawn)?;
    if report.is_valid() {
        return Ok(Construction {
            spec,
            labeling: drawn,
            origin: Origin::Figure(fig.name),
            notes: Vec::new(),
        });
    }
    let note = Discrepancy {
        spec,
        kind: DiscrepancyKind::InvalidLabeling,
        detail: format!(
            "reference labeling {} as drawn violates the sum condition at [{}] and the +2 condition at [{}]",
            fig.name,
            coords(&report.sum_violations),
            coords(&report.guard_violations),
        ),
    };
    match repaired {
        Some(fix) => Ok(Construction {
            spec,
            labeling: fix.labeling(),
            origin: Origin::RepairedFigure(fig.name),
            notes: vec![note],
        }),
        None => Err(Error::InvalidInput(note.to_string())),
    }
}

/// Best available explicit labeling for a ladder-family instance.
pub fn construct(spec: FamilySpec) -> Result<Construction> {
    let spec = FamilySpec::new(spec.family, spec.n)?;
    let n = spec.n;
    let from_clauses = |labeling: Labeling| Construction {
        spec,
        labeling,
        origin: Origin::CaseFunction,
        notes: Vec::new(),
    };
    match spec.family {
        Family::Ladder => construct_lg(n).map(from_clauses),
        Family::LadderComplement => match n {
            2 => from_figure(&figures::LADDER_COMPLEMENT_2, None),
            3 => from_figure(
                &figures::LADDER_COMPLEMENT_3,
                Some(&figures::LADDER_COMPLEMENT_3_REPAIRED),
            ),
            _ => construct_lg_complement(n).map(from_clauses),
        },
        Family::CircularLadder => match n {
            5 => from_figure(&figures::CIRCULAR_LADDER_5, None),
            _ => construct_lc(n).map(from_clauses),
        },
        Family::CircularLadderComplement => match n {
            3 => from_figure(&figures::CIRCULAR_LADDER_COMPLEMENT_3, None),
            4 => from_figure(&figures::CIRCULAR_LADDER_COMPLEMENT_4, None),
            _ => construct_lc_complement(n).map(from_clauses),
        },
        Family::Path | Family::Cycle | Family::Complete => Err(Error::NotCovered(spec)),
    }
}

/// Outcome of checking a construction against its graph and the tabulated
/// value.
#[derive(Debug, Clone)]
pub struct ConstructionCheck {
    pub construction: Construction,
    pub weight: i64,
    pub valid: bool,
    pub formula: Option<i64>,
    pub discrepancies: Vec<Discrepancy>,
}

impl ConstructionCheck {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Builds the construction, validates it, and compares its weight with the
/// tabulated value. Every problem becomes a [`Discrepancy`].
pub fn check_construction(spec: FamilySpec) -> Result<ConstructionCheck> {
    let construction = construct(spec)?;
    let g = graph::family(spec)?;
    let report = srdf::validate(&g, &construction.labeling)?;
    let weight = construction.labeling.weight();
    let formula = formulas::gamma_formula(spec)?.value();
    let mut discrepancies = construction.notes.clone();
    if clauses_for(spec.family).is_some() && construction.origin == Origin::CaseFunction {
        for conflict in clause_conflicts(spec)? {
            discrepancies.push(Discrepancy {
                spec,
                kind: DiscrepancyKind::ClauseConflict,
                detail: format!("vertex {} matched {:?}", conflict.coord, conflict.matches),
            });
        }
    }
    if !report.is_valid() {
        discrepancies.push(Discrepancy {
            spec,
            kind: DiscrepancyKind::InvalidLabeling,
            detail: format!(
                "sum violations at [{}], missing +2 neighbor at [{}]",
                coords(&report.sum_violations),
                coords(&report.guard_violations)
            ),
        });
    }
    if let Some(value) = formula {
        if value != weight {
            discrepancies.push(Discrepancy {
                spec,
                kind: DiscrepancyKind::WeightMismatch,
                detail: format!("construction weight {weight}, tabulated value {value}"),
            });
        }
    }
    Ok(ConstructionCheck {
        construction,
        weight,
        valid: report.is_valid(),
        formula,
        discrepancies,
    })
}

/// Certificate for a constructed labeling. Not claimed optimal.
pub fn certificate(construction: &Construction) -> Certificate {
    Certificate {
        graph: GraphDescriptor::Family(construction.spec),
        labeling: construction.labeling.clone(),
        weight: construction.labeling.weight(),
        claimed_optimal: false,
        method: Method::Construction,
        stats: SearchStats::default(),
    }
}

/// Compares the ladder construction with a published ladder figure.
pub fn figure_mismatch(fig: &FigureLabeling) -> Result<Option<Discrepancy>> {
    let built = construct(fig.spec())?.labeling;
    let drawn = fig.labeling();
    if built == drawn {
        return Ok(None);
    }
    let differing: Vec<_> = (0..drawn.len())
        .filter(|&v| built.get(v) != drawn.get(v))
        .collect();
    Ok(Some(Discrepancy {
        spec: fig.spec(),
        kind: DiscrepancyKind::FigureMismatch,
        detail: format!(
            "construction differs from reference labeling {} at [{}]",
            fig.name,
            coords(&differing)
        ),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: Family, n: usize) -> FamilySpec {
        FamilySpec::new(family, n).unwrap()
    }

    #[test]
    fn ladder_reproduces_figures() {
        for fig in figures::LADDERS.iter().chain([&figures::LADDER_6]) {
            assert_eq!(
                construct_lg(fig.n).unwrap(),
                fig.labeling(),
                "figure {}",
                fig.name
            );
            assert_eq!(figure_mismatch(fig).unwrap(), None);
        }
        let lg2 = construct_lg(2).unwrap();
        assert_eq!(lg2.get(VertexCoord::new(1, 1).index()), Label::MinusOne);
        assert_eq!(lg2.get(VertexCoord::new(1, 2).index()), Label::Two);
        assert_eq!(lg2.weight(), 3);
        assert_eq!(construct_lg(4).unwrap().weight(), 4);
    }

    #[test]
    fn ladder_partition_tally() {
        for n in 2..60 {
            let counts = construct_lg(n).unwrap().partition_counts();
            assert_eq!(counts.minus_one, n - 1, "n = {n}");
            assert_eq!(counts.two, n / 2, "n = {n}");
            let ones = if n % 2 == 0 { n / 2 + 1 } else { n / 2 + 2 };
            assert_eq!(counts.one, ones, "n = {n}");
        }
    }

    #[test]
    fn complement_partitions() {
        for n in 4..30 {
            let c = construct_lg_complement(n).unwrap().partition_counts();
            assert_eq!((c.minus_one, c.one, c.two), (n, n - 2, 2));
        }
        for n in 5..30 {
            let c = construct_lc_complement(n).unwrap().partition_counts();
            assert_eq!((c.minus_one, c.one, c.two), (n, n - 3, 3));
        }
    }

    #[test]
    fn clause_systems_are_total() {
        for n in 2..=200 {
            assert!(
                clause_conflicts(spec(Family::Ladder, n))
                    .unwrap()
                    .is_empty(),
                "LG {n}"
            );
        }
        for n in 3..=200 {
            assert!(
                clause_conflicts(spec(Family::CircularLadder, n))
                    .unwrap()
                    .is_empty(),
                "LC {n}"
            );
        }
        for n in 4..=100 {
            assert!(clause_conflicts(spec(Family::LadderComplement, n))
                .unwrap()
                .is_empty());
        }
        for n in 5..=100 {
            assert!(clause_conflicts(spec(Family::CircularLadderComplement, n))
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(construct_lg(1), Err(Error::InvalidParameter(_))));
        assert!(matches!(
            construct_lg_complement(3),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(construct_lc(2), Err(Error::InvalidParameter(_))));
        assert!(matches!(construct_lc(5), Err(Error::ExcludedCase { .. })));
        assert!(matches!(
            construct_lc_complement(4),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            construct(spec(Family::Path, 4)),
            Err(Error::NotCovered(_))
        ));
    }

    #[test]
    fn small_cases_come_from_figures() {
        let c = construct(spec(Family::CircularLadder, 5)).unwrap();
        assert_eq!(c.origin, Origin::Figure("circular-ladder-5"));
        assert_eq!(c.labeling.weight(), 4);

        let c = construct(spec(Family::LadderComplement, 3)).unwrap();
        assert_eq!(c.origin, Origin::RepairedFigure("ladder-complement-3"));
        assert_eq!(c.notes.len(), 1);
        assert_eq!(c.notes[0].kind, DiscrepancyKind::InvalidLabeling);
        assert_eq!(c.labeling.weight(), 3);
        let check = check_construction(spec(Family::LadderComplement, 3)).unwrap();
        assert!(check.valid);
        assert!(!check.passed(), "the invalid drawing stays on record");
    }

    #[test]
    fn checks_pass_across_ranges() {
        for n in [2, 3, 7, 13, 50] {
            let check = check_construction(spec(Family::Ladder, n)).unwrap();
            assert!(check.passed(), "{:?}", check.discrepancies);
        }
        let check = check_construction(spec(Family::CircularLadder, 9)).unwrap();
        assert_eq!(check.weight, 7);
        assert!(check.passed());
    }
}
