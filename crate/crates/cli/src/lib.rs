//! Command-line front end: compute indices on CSV data, audit index
//! properties, score dendrograms, and export the probe datasets.

pub mod io;
pub mod report;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use cvi_core::{
    audit_many, evaluate, si_curve, si_hierarchical, single_linkage, synthetic_dataset, IndexId,
    SyntheticId, Variant,
};
use thiserror::Error;

use crate::report::{CurveReport, CurveRow, IndexEntry, InputDigest, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cvi",
    version,
    about = "Cluster validity indices and property audits"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// JSON document
    Structured,
    /// Aligned plain text
    Table,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Structured)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score a labeled dataset with one or more indices.
    Compute {
        /// Headerless CSV, one point per row.
        #[arg(long)]
        data: PathBuf,
        /// One integer cluster label per line, in point order.
        #[arg(long)]
        labels: PathBuf,
        /// Index id; repeat for several. Defaults to si_centroid.
        #[arg(long = "index", value_parser = parse_index)]
        indices: Vec<IndexId>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Audit indices for transform invariance, optimality and baseline.
    Properties {
        /// Index id; repeat for several. Defaults to every partition index.
        #[arg(long = "index", value_parser = parse_index)]
        indices: Vec<IndexId>,
        #[arg(long, default_value = "short", value_parser = parse_variant)]
        variant: Variant,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// SI curve over a dendrogram and its hierarchical score.
    Hierarchical {
        /// Headerless CSV, one point per row.
        #[arg(long)]
        data: PathBuf,
        /// Linkage file, or `auto` for single linkage.
        #[arg(long, default_value = "auto")]
        linkage: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Write one of the probe datasets as points and labels CSV files.
    Synth {
        #[arg(value_parser = parse_synthetic)]
        id: SyntheticId,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Structured)]
        format: Format,
    },
}

fn parse_index(s: &str) -> Result<IndexId, String> {
    s.parse().map_err(|e: cvi_core::Error| e.to_string())
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse()
}

fn parse_synthetic(s: &str) -> Result<SyntheticId, String> {
    s.parse().map_err(|e: cvi_core::Error| e.to_string())
}

/// Output of a successful invocation, ready to print or write.
pub struct Rendered {
    pub text: String,
    pub out: Option<PathBuf>,
}

fn render(report: &Report, output: &OutputArgs) -> Rendered {
    render_as(report, output.format, output.out.clone())
}

fn render_as(report: &Report, format: Format, out: Option<PathBuf>) -> Rendered {
    let text = match format {
        Format::Structured => report.to_json(),
        Format::Table => report.to_table(),
    };
    Rendered { text, out }
}

fn echo(args: &[String]) -> String {
    args.iter().skip(1).cloned().collect::<Vec<_>>().join(" ")
}

pub fn compute(
    data: &Path,
    labels: &Path,
    indices: &[IndexId],
    command: String,
) -> Result<Report, CliError> {
    if let Some(id) = indices.iter().find(|id| !id.scores_partitions()) {
        return Err(CliError::Usage(format!(
            "index `{id}` scores a dendrogram; use the `hierarchical` subcommand"
        )));
    }
    let dataset = io::read_points(data)?;
    let partition = io::read_partition(labels, dataset.len())?;
    let default = [IndexId::SiCentroid];
    let indices = if indices.is_empty() {
        &default[..]
    } else {
        indices
    };
    let results = indices
        .iter()
        .map(|&index| {
            evaluate(index, &dataset, &partition)
                .map(|value| IndexEntry { index, value })
                .map_err(|e| CliError::Input(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = Report::new(command);
    report.input = Some(InputDigest {
        n: dataset.len(),
        dim: dataset.dim(),
        k: Some(partition.k()),
    });
    report.results = results;
    Ok(report)
}

pub fn properties(
    indices: &[IndexId],
    variant: Variant,
    command: String,
) -> Result<Report, CliError> {
    if let Some(id) = indices.iter().find(|id| !id.scores_partitions()) {
        return Err(CliError::Usage(format!(
            "index `{id}` scores a dendrogram and has no flat-partition audit"
        )));
    }
    let indices = if indices.is_empty() {
        &IndexId::PARTITION[..]
    } else {
        indices
    };
    let rows = audit_many(indices, variant).map_err(|e| CliError::Input(e.to_string()))?;
    let mut report = Report::new(command);
    report.flags = Some(rows);
    Ok(report)
}

pub fn hierarchical(data: &Path, linkage: &str, command: String) -> Result<Report, CliError> {
    let dataset = io::read_points(data)?;
    if dataset.len() < 2 {
        return Err(CliError::Input(format!(
            "{}: a hierarchy needs at least 2 points",
            data.display()
        )));
    }
    let dendrogram = if linkage == "auto" {
        single_linkage(&dataset).map_err(|e| CliError::Input(e.to_string()))?
    } else {
        io::read_linkage(Path::new(linkage), dataset.len())?
    };
    let curve = si_curve(&dataset, &dendrogram).map_err(|e| CliError::Input(e.to_string()))?;
    let score = si_hierarchical(&curve).map_err(|e| CliError::Input(e.to_string()))?;
    let samples = curve
        .samples()
        .iter()
        .zip(dendrogram.levels())
        .enumerate()
        .map(|(i, (s, level))| CurveRow {
            level: i + 1,
            distance: s.distance,
            clusters: level.partition.k(),
            si: s.si,
        })
        .collect();
    let mut report = Report::new(command);
    report.input = Some(InputDigest {
        n: dataset.len(),
        dim: dataset.dim(),
        k: None,
    });
    report.curve = Some(CurveReport {
        samples,
        si_hierarchical: score,
        minimum_level: curve.minimum().map_or(1, |(level, _)| level),
    });
    Ok(report)
}

pub fn synth(id: SyntheticId, out_dir: &Path, command: String) -> Result<Report, CliError> {
    let (data, partition) = synthetic_dataset(id);
    let write_err = |p: &Path, e: std::io::Error| CliError::Input(format!("{}: {e}", p.display()));
    fs::create_dir_all(out_dir).map_err(|e| write_err(out_dir, e))?;
    let points_path = out_dir.join(format!("{id}_points.csv"));
    let labels_path = out_dir.join(format!("{id}_labels.csv"));
    fs::write(&points_path, io::format_points(&data)).map_err(|e| write_err(&points_path, e))?;
    fs::write(&labels_path, io::format_labels(&partition))
        .map_err(|e| write_err(&labels_path, e))?;
    let mut report = Report::new(command);
    report.input = Some(InputDigest {
        n: data.len(),
        dim: data.dim(),
        k: Some(partition.k()),
    });
    report.files = vec![
        points_path.display().to_string(),
        labels_path.display().to_string(),
    ];
    Ok(report)
}

/// Runs one parsed invocation. `args` is the raw argument vector, echoed
/// into the report.
pub fn execute(cli: Cli, args: &[String]) -> Result<Rendered, CliError> {
    let command = echo(args);
    match cli.command {
        Command::Compute {
            data,
            labels,
            indices,
            output,
        } => Ok(render(
            &compute(&data, &labels, &indices, command)?,
            &output,
        )),
        Command::Properties {
            indices,
            variant,
            output,
        } => Ok(render(&properties(&indices, variant, command)?, &output)),
        Command::Hierarchical {
            data,
            linkage,
            output,
        } => Ok(render(&hierarchical(&data, &linkage, command)?, &output)),
        Command::Synth { id, out, format } => {
            Ok(render_as(&synth(id, &out, command)?, format, None))
        }
    }
}
