//! Plain-text certificate blocks.
//!
//! The readable form is `key: value` lines followed by a `labeling:` section
//! in the labeling text format. The porcelain form puts every field, the
//! labeling included, on its own `key=value` line.

use std::fmt::Write;

use crate::error::{parse_error, Result};
use crate::graph::VertexCoord;
use crate::solver::{Certificate, GraphDescriptor};
use crate::srdf::{parse_labeling, Label, Labeling};

fn coordinates_apply(cert: &Certificate) -> bool {
    matches!(&cert.graph, GraphDescriptor::Family(spec) if spec.family.has_coordinates())
}

pub fn to_text(cert: &Certificate) -> String {
    let mut out = String::new();
    writeln!(out, "graph: {}", cert.graph).unwrap();
    writeln!(out, "vertices: {}", cert.labeling.len()).unwrap();
    writeln!(out, "method: {}", cert.method).unwrap();
    writeln!(out, "weight: {}", cert.weight).unwrap();
    writeln!(out, "optimal: {}", cert.claimed_optimal).unwrap();
    writeln!(out, "nodes: {}", cert.stats.nodes).unwrap();
    writeln!(
        out,
        "elapsed_ms: {:.3}",
        cert.stats.elapsed.as_secs_f64() * 1e3
    )
    .unwrap();
    writeln!(out, "labeling:").unwrap();
    let coords = coordinates_apply(cert);
    for (v, label) in cert.labeling.labels().iter().enumerate() {
        if coords {
            writeln!(out, "{v} {label}  # {}", VertexCoord::from_index(v)).unwrap();
        } else {
            writeln!(out, "{v} {label}").unwrap();
        }
    }
    out
}

pub fn to_porcelain(cert: &Certificate) -> String {
    let labels: Vec<String> = cert
        .labeling
        .labels()
        .iter()
        .map(|l| l.to_string())
        .collect();
    format!(
        "graph={}\nvertices={}\nmethod={}\nweight={}\noptimal={}\nnodes={}\nelapsed_ms={:.3}\nlabeling={}\n",
        cert.graph,
        cert.labeling.len(),
        cert.method,
        cert.weight,
        cert.claimed_optimal,
        cert.stats.nodes,
        cert.stats.elapsed.as_secs_f64() * 1e3,
        labels.join(","),
    )
}

/// Extracts the labeling section of a readable certificate, stripping the
/// coordinate comments.
pub fn labeling_section(text: &str) -> Option<String> {
    let (_, rest) = text.split_once("labeling:\n")?;
    Some(
        rest.lines()
            .map(|l| l.split('#').next().unwrap_or("").trim_end())
            .filter(|l| !l.is_empty())
            .map(|l| format!("{l}\n"))
            .collect(),
    )
}

/// Reads a labeling from a plain labeling file, a readable certificate or a
/// porcelain certificate.
pub fn read_labeling(text: &str) -> Result<Labeling> {
    if let Some((i, line)) = text
        .lines()
        .enumerate()
        .find(|(_, l)| l.starts_with("labeling="))
    {
        let values = line.trim_start_matches("labeling=").trim();
        return values
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<Label>()
                    .map_err(|e| parse_error(i + 1, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Labeling::new);
    }
    match labeling_section(text) {
        Some(section) => parse_labeling(&section),
        None => parse_labeling(text),
    }
}
