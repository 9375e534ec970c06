//! Closed-form signed Roman domination numbers for the supported families and
//! the two general lower bounds, in exact rational arithmetic.

use std::fmt;

use num_rational::Ratio;

use crate::error::Result;
use crate::graph::{self, Family, FamilySpec, Graph};

pub type Rational = Ratio<i64>;

/// Where a closed-form value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    /// A general theorem for the family.
    Theorem,
    /// A value shown for a single small instance.
    Figure,
    /// A value known before the ladder results (paths, cycles, complete graphs).
    KnownPrior,
}

impl Source {
    pub fn tag(self) -> &'static str {
        match self {
            Source::Theorem => "theorem",
            Source::Figure => "figure",
            Source::KnownPrior => "known-prior",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaResult {
    Covered { value: i64, source: Source },
    NotCovered,
}

impl FormulaResult {
    pub fn value(self) -> Option<i64> {
        match self {
            FormulaResult::Covered { value, .. } => Some(value),
            FormulaResult::NotCovered => None,
        }
    }

    pub fn source(self) -> Option<Source> {
        match self {
            FormulaResult::Covered { source, .. } => Some(source),
            FormulaResult::NotCovered => None,
        }
    }
}

impl fmt::Display for FormulaResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaResult::Covered { value, source } => write!(f, "{value} ({source})"),
            FormulaResult::NotCovered => f.write_str("not-covered"),
        }
    }
}

fn theorem(value: i64) -> FormulaResult {
    FormulaResult::Covered {
        value,
        source: Source::Theorem,
    }
}

fn figure(value: i64) -> FormulaResult {
    FormulaResult::Covered {
        value,
        source: Source::Figure,
    }
}

fn known(value: i64) -> FormulaResult {
    FormulaResult::Covered {
        value,
        source: Source::KnownPrior,
    }
}

/// `floor((n + 2) / 2) + 1`.
pub fn ladder_closed_form(n: usize) -> i64 {
    ((n + 2) / 2) as i64 + 1
}

/// Piecewise circular-ladder value: `floor((n + 2) / 2) + 1` for `n = 0, 2, 3
/// (mod 4)` and `floor((n + 2) / 2) + 2` for `n = 1 (mod 4)`.
pub fn circular_ladder_closed_form(n: usize) -> i64 {
    let base = ((n + 2) / 2) as i64;
    if n % 4 == 1 {
        base + 2
    } else {
        base + 1
    }
}

/// The tabulated value of the signed Roman domination number for a family.
pub fn gamma_formula(spec: FamilySpec) -> Result<FormulaResult> {
    let spec = FamilySpec::new(spec.family, spec.n)?;
    let n = spec.n;
    Ok(match spec.family {
        Family::Path => known((2 * n / 3) as i64),
        Family::Cycle => known((2 * n).div_ceil(3) as i64),
        Family::Complete => known(if n == 3 { 2 } else { 1 }),
        Family::Ladder => theorem(ladder_closed_form(n)),
        Family::LadderComplement => match n {
            2 => figure(2),
            3 => figure(3),
            _ => theorem(2),
        },
        Family::CircularLadder => match n {
            5 => figure(4),
            _ => theorem(circular_ladder_closed_form(n)),
        },
        Family::CircularLadderComplement => match n {
            3 | 4 => figure(4),
            _ => theorem(3),
        },
    })
}

/// Degree bound
/// `((-2D^2 + 2Dd + D + 2d + 3) / ((D + 1)(2D + d + 3))) * N`
/// with `D` the maximum and `d` the minimum degree.
pub fn lower_bound_degree(g: &Graph) -> Result<Rational> {
    let stats = graph::degree_stats(g)?;
    let big = stats.max as i64;
    let small = stats.min as i64;
    let numerator = -2 * big * big + 2 * big * small + big + 2 * small + 3;
    let denominator = (big + 1) * (2 * big + small + 3);
    Ok(Rational::new(numerator, denominator) * g.vertex_count() as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeBound {
    Value(Rational),
    /// The graph has an isolated vertex, outside the bound's hypothesis.
    Inapplicable,
}

/// Size bound `(3N - 4M) / 2` for graphs without isolated vertices.
pub fn lower_bound_size(g: &Graph) -> SizeBound {
    if g.has_isolated_vertex() {
        return SizeBound::Inapplicable;
    }
    let n = g.vertex_count() as i64;
    let m = g.edge_count() as i64;
    SizeBound::Value(Rational::new(3 * n - 4 * m, 2))
}

/// Largest integer lower bound implied by both bounds.
pub fn integer_lower_bound(g: &Graph) -> Result<i64> {
    let degree = lower_bound_degree(g)?.ceil().to_integer();
    Ok(match lower_bound_size(g) {
        SizeBound::Value(b) => degree.max(b.ceil().to_integer()),
        SizeBound::Inapplicable => degree,
    })
}
