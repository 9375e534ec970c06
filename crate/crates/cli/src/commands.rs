use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use sroman_core::certificate::{read_labeling, to_porcelain, to_text};
use sroman_core::constructions::{self, check_construction};
use sroman_core::graph::{self, degree_stats, parse_edge_list, write_edge_list};
use sroman_core::{
    dot, lower_bound_degree, lower_bound_size, solve_branch_bound_with, solve_circular_ladder_dp,
    solve_exhaustive, solve_ladder_dp, validate, BranchBoundOptions, Certificate, Family,
    FamilySpec, Graph, SizeBound,
};
use thiserror::Error;

use crate::{table, Command, GraphArgs, MethodArg, OutputArgs, EXIT_INVALID};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] sroman_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = Result<T, CliError>;

pub fn run(command: Command) -> CliResult<u8> {
    match command {
        Command::Gen { graph, output } => gen(&graph, &output),
        Command::Solve {
            graph,
            method,
            deterministic,
            output,
        } => solve(&graph, method, deterministic, &output),
        Command::Construct { graph, output } => construct(&graph, &output),
        Command::Verify {
            graph,
            labeling,
            output,
        } => verify(&graph, &labeling, &output),
        Command::Bounds { graph, output } => bounds(&graph, &output),
        Command::Table {
            family_pos,
            from_pos,
            to_pos,
            family,
            from,
            to,
            check,
            output,
        } => {
            let family = family
                .or(family_pos)
                .ok_or_else(|| usage("table needs a family"))?;
            let from = from
                .or(from_pos)
                .ok_or_else(|| usage("table needs a start value"))?;
            let to = to
                .or(to_pos)
                .ok_or_else(|| usage("table needs an end value"))?;
            let report = table::build(family, from, to)?;
            emit(&output, &table::render(&report, output.porcelain))?;
            Ok(table::exit_code(&report, check))
        }
        Command::Dot {
            graph,
            labeling,
            output,
        } => {
            let g = load_graph(&graph)?;
            let labeling = labeling
                .map(|p| read_labeling(&read_text(&p)?).map_err(CliError::from))
                .transpose()?;
            if let Some(l) = &labeling {
                validate(&g, l)?;
            }
            emit(&output, &dot::to_dot(&g, labeling.as_ref()))?;
            Ok(0)
        }
    }
}

fn usage(message: &str) -> CliError {
    CliError::Usage(message.to_string())
}

fn read_text(path: &Path) -> CliResult<String> {
    let mut text = String::new();
    let result = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(text)
}

fn emit(output: &OutputArgs, text: &str) -> CliResult<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

/// The family spec named on the command line, if any.
fn spec_of(args: &GraphArgs) -> CliResult<Option<FamilySpec>> {
    let family = args.family.or(args.family_pos);
    let n = args.n.or(args.n_pos);
    match (family, n) {
        (None, None) => Ok(None),
        (Some(family), Some(n)) => Ok(Some(FamilySpec::new(family, n)?)),
        (Some(_), None) => Err(usage("a family needs a size: give N or --n")),
        (None, Some(_)) => Err(usage("a size needs a family: give FAMILY or --family")),
    }
}

pub fn load_graph(args: &GraphArgs) -> CliResult<Graph> {
    if let Some(path) = &args.input {
        if args.n.is_some() || args.n_pos.is_some() {
            return Err(usage("--in cannot be combined with a size"));
        }
        return Ok(parse_edge_list(&read_text(path)?)?);
    }
    match spec_of(args)? {
        Some(spec) => Ok(graph::family(spec)?),
        None => Err(usage(
            "name a graph with FAMILY N, --family/--n, or --in PATH",
        )),
    }
}

fn gen(args: &GraphArgs, output: &OutputArgs) -> CliResult<u8> {
    let spec = spec_of(args)?.ok_or_else(|| usage("gen needs FAMILY N or --family/--n"))?;
    emit(output, &write_edge_list(&graph::family(spec)?))?;
    Ok(0)
}

fn ladder_spec(g: &Graph) -> Option<FamilySpec> {
    g.family()
        .filter(|s| matches!(s.family, Family::Ladder | Family::CircularLadder))
}

fn solve(
    args: &GraphArgs,
    method: MethodArg,
    deterministic: bool,
    output: &OutputArgs,
) -> CliResult<u8> {
    let g = load_graph(args)?;
    let bb_options = if deterministic {
        BranchBoundOptions::deterministic()
    } else {
        let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
        BranchBoundOptions::parallel(workers)
    };
    let dp = |spec: FamilySpec| match spec.family {
        Family::Ladder => solve_ladder_dp(spec.n),
        _ => solve_circular_ladder_dp(spec.n),
    };
    let cert = match (method, ladder_spec(&g)) {
        (MethodArg::Auto | MethodArg::Dp, Some(spec)) => dp(spec)?,
        (MethodArg::Dp, None) => {
            return Err(usage(
                "--method dp needs a ladder or circular-ladder graph; use bb or exhaustive",
            ))
        }
        (MethodArg::Auto | MethodArg::Bb, _) => solve_branch_bound_with(&g, &bb_options)
            .map_err(|e| with_guidance(e, "try --method dp for ladder families"))?,
        (MethodArg::Exhaustive, _) => {
            solve_exhaustive(&g).map_err(|e| with_guidance(e, "try --method bb"))?
        }
    };
    finish_certificate(&g, &cert, output)
}

fn with_guidance(e: sroman_core::Error, hint: &str) -> CliError {
    match e {
        sroman_core::Error::SizeLimit { .. } => CliError::Usage(format!("{e}; {hint}")),
        other => other.into(),
    }
}

fn finish_certificate(g: &Graph, cert: &Certificate, output: &OutputArgs) -> CliResult<u8> {
    let text = if output.porcelain {
        to_porcelain(cert)
    } else {
        to_text(cert)
    };
    emit(output, &text)?;
    match cert.verify(g) {
        Ok(()) => Ok(0),
        Err(e) => {
            eprintln!("verification failed: {e}");
            Ok(EXIT_INVALID)
        }
    }
}

fn construct(args: &GraphArgs, output: &OutputArgs) -> CliResult<u8> {
    let spec = spec_of(args)?.ok_or_else(|| usage("construct needs FAMILY N or --family/--n"))?;
    let check = check_construction(spec)?;
    for d in &check.discrepancies {
        eprintln!("discrepancy: {d}");
    }
    let cert = constructions::certificate(&check.construction);
    let mut text = if output.porcelain {
        to_porcelain(&cert)
    } else {
        to_text(&cert)
    };
    let origin = check.construction.origin.to_string();
    if output.porcelain {
        text.push_str(&format!("origin={origin}\n"));
    } else {
        let (head, tail) = text.split_at(text.find("labeling:\n").unwrap_or(text.len()));
        text = format!("{head}origin: {origin}\n{tail}");
    }
    emit(output, &text)?;
    Ok(if check.valid { 0 } else { EXIT_INVALID })
}

fn vertex_name(g: &Graph, v: usize) -> String {
    match g.coord(v) {
        Some(c) => format!("{v} {c}"),
        None => v.to_string(),
    }
}

fn verify(args: &GraphArgs, labeling: &Path, output: &OutputArgs) -> CliResult<u8> {
    let g = load_graph(args)?;
    let l = read_labeling(&read_text(labeling)?)?;
    let report = validate(&g, &l)?;
    let mut text = String::new();
    if output.porcelain {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        writeln!(text, "valid={}", report.is_valid()).unwrap();
        writeln!(text, "weight={}", l.weight()).unwrap();
        writeln!(text, "sum_violations={}", join(&report.sum_violations)).unwrap();
        writeln!(text, "guard_violations={}", join(&report.guard_violations)).unwrap();
    } else {
        writeln!(text, "valid: {}", report.is_valid()).unwrap();
        writeln!(text, "weight: {}", l.weight()).unwrap();
        for &v in &report.sum_violations {
            writeln!(
                text,
                "condition (i) violated at vertex {}: closed neighborhood sum {}",
                vertex_name(&g, v),
                report.closed_sums[v]
            )
            .unwrap();
        }
        for &v in &report.guard_violations {
            writeln!(
                text,
                "condition (ii) violated at vertex {}: label -1 without a +2 neighbor",
                vertex_name(&g, v)
            )
            .unwrap();
        }
    }
    emit(output, &text)?;
    Ok(if report.is_valid() { 0 } else { EXIT_INVALID })
}

fn bounds(args: &GraphArgs, output: &OutputArgs) -> CliResult<u8> {
    let g = load_graph(args)?;
    let stats = degree_stats(&g)?;
    let degree = lower_bound_degree(&g)?;
    let size = lower_bound_size(&g);
    let (size_text, size_ceiling) = match size {
        SizeBound::Value(b) => (b.to_string(), b.ceil().to_integer().to_string()),
        SizeBound::Inapplicable => ("inapplicable".to_string(), "inapplicable".to_string()),
    };
    let mut fields = vec![
        ("vertices", g.vertex_count().to_string()),
        ("edges", g.edge_count().to_string()),
        ("min_degree", stats.min.to_string()),
        ("max_degree", stats.max.to_string()),
        ("degree_bound", degree.to_string()),
        (
            "degree_bound_ceiling",
            degree.ceil().to_integer().to_string(),
        ),
        ("size_bound", size_text),
        ("size_bound_ceiling", size_ceiling),
    ];
    if let Some(spec) = g.family() {
        fields.insert(0, ("graph", spec.to_string()));
    }
    let sep = if output.porcelain { "=" } else { ": " };
    let text: String = fields
        .iter()
        .map(|(k, v)| format!("{k}{sep}{v}\n"))
        .collect();
    emit(output, &text)?;
    Ok(0)
}
