//! Closed form, construction and exact optimum side by side.

use std::fmt::Write;

use sroman_core::constructions;
use sroman_core::graph;
use sroman_core::{
    gamma_formula, solve_branch_bound, solve_circular_ladder_dp, solve_ladder_dp, Error, Family,
    FamilySpec, FormulaResult, Method,
};

use crate::commands::{CliError, CliResult};
use crate::EXIT_DISCREPANCY;

/// Largest graph the table solves by branch-and-bound.
pub const SEARCH_VERTEX_CAP: usize = 14;

#[derive(Debug, Clone)]
pub struct Row {
    pub spec: FamilySpec,
    pub formula: FormulaResult,
    /// Weight and validity of the explicit labeling, when the family has one.
    pub construction: Option<(i64, bool)>,
    pub exact: Option<(i64, Method)>,
    pub notes: Vec<String>,
}

impl Row {
    pub fn agrees(&self) -> bool {
        let formula = self.formula.value();
        let exact = self.exact.map(|(w, _)| w);
        if let (Some(f), Some(e)) = (formula, exact) {
            if f != e {
                return false;
            }
        }
        match self.construction {
            Some((w, valid)) => {
                valid && formula.is_none_or(|f| f == w) && exact.is_none_or(|e| e == w)
            }
            None => true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub family: Family,
    pub rows: Vec<Row>,
}

fn exact(spec: FamilySpec) -> CliResult<Option<(i64, Method)>> {
    let cert = match spec.family {
        Family::Ladder => solve_ladder_dp(spec.n)?,
        Family::CircularLadder => solve_circular_ladder_dp(spec.n)?,
        _ if spec.vertex_count() <= SEARCH_VERTEX_CAP => solve_branch_bound(&graph::family(spec)?)?,
        _ => return Ok(None),
    };
    Ok(Some((cert.weight, cert.method)))
}

pub fn build(family: Family, from: usize, to: usize) -> CliResult<Report> {
    if from > to {
        return Err(CliError::Usage(format!("empty range {from}..={to}")));
    }
    let mut rows = Vec::new();
    for n in from..=to {
        let spec = FamilySpec::new(family, n)?;
        let (construction, notes) = match constructions::check_construction(spec) {
            Ok(check) => (
                Some((check.weight, check.valid)),
                check.discrepancies.iter().map(|d| d.to_string()).collect(),
            ),
            Err(Error::NotCovered(_)) => (None, Vec::new()),
            Err(e) => return Err(e.into()),
        };
        rows.push(Row {
            spec,
            formula: gamma_formula(spec)?,
            construction,
            exact: exact(spec)?,
            notes,
        });
    }
    Ok(Report { family, rows })
}

pub fn exit_code(report: &Report, check: bool) -> u8 {
    if check && !report.rows.iter().all(Row::agrees) {
        EXIT_DISCREPANCY
    } else {
        0
    }
}

fn status(row: &Row) -> &'static str {
    if row.agrees() {
        "agree"
    } else {
        "DISAGREE"
    }
}

pub fn render(report: &Report, porcelain: bool) -> String {
    let mut out = String::new();
    if porcelain {
        for row in &report.rows {
            let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
            writeln!(
                out,
                "family={} n={} vertices={} formula={} source={} construction={} construction_valid={} exact={} exact_method={} status={}",
                report.family,
                row.spec.n,
                row.spec.vertex_count(),
                opt(row.formula.value().map(|v| v.to_string())),
                opt(row.formula.source().map(|s| s.to_string())),
                opt(row.construction.map(|(w, _)| w.to_string())),
                opt(row.construction.map(|(_, v)| v.to_string())),
                opt(row.exact.map(|(w, _)| w.to_string())),
                opt(row.exact.map(|(_, m)| m.to_string())),
                status(row),
            )
            .unwrap();
        }
        return out;
    }
    writeln!(out, "family: {}", report.family).unwrap();
    writeln!(
        out,
        "{:>6}  {:>8}  {:<18}  {:<18}  {:<18}  status",
        "n", "vertices", "formula", "construction", "exact"
    )
    .unwrap();
    for row in &report.rows {
        let formula = match row.formula {
            FormulaResult::Covered { value, source } => format!("{value} ({source})"),
            FormulaResult::NotCovered => "-".into(),
        };
        let construction = match row.construction {
            Some((w, true)) => format!("{w} valid"),
            Some((w, false)) => format!("{w} INVALID"),
            None => "-".into(),
        };
        let exact = match row.exact {
            Some((w, m)) => format!("{w} ({m})"),
            None => String::new(),
        };
        writeln!(
            out,
            "{:>6}  {:>8}  {formula:<18}  {construction:<18}  {exact:<18}  {}",
            row.spec.n,
            row.spec.vertex_count(),
            status(row)
        )
        .unwrap();
    }
    for row in &report.rows {
        for note in &row.notes {
            writeln!(out, "note: {note}").unwrap();
        }
    }
    let disagreements = report.rows.iter().filter(|r| !r.agrees()).count();
    writeln!(
        out,
        "rows: {}, disagreements: {disagreements}",
        report.rows.len()
    )
    .unwrap();
    out
}
