//! File formats: headerless points CSV, one-label-per-line labels file, and
//! linkage files in the `left right distance [size]` convention.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use cvi_core::{Dataset, Dendrogram, Merge, Partition};

use crate::CliError;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Parses a headerless CSV of reals, one point per row.
pub fn parse_points(text: &str, origin: &str) -> Result<Dataset, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut points: Vec<Vec<f64>> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::Input(format!("{origin}: {e}")))?;
        let row = record
            .position()
            .map_or(points.len() + 1, |p| p.line() as usize);
        let point = record
            .iter()
            .enumerate()
            .map(|(col, field)| {
                field
                    .parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| {
                        CliError::Input(format!(
                            "{origin}: row {row}, column {}: `{field}` is not a finite real",
                            col + 1
                        ))
                    })
            })
            .collect::<Result<Vec<f64>, _>>()?;
        if let Some(first) = points.first() {
            if first.len() != point.len() {
                return Err(CliError::Input(format!(
                    "{origin}: row {row} has {} coordinates, expected {}",
                    point.len(),
                    first.len()
                )));
            }
        }
        points.push(point);
    }
    if points.is_empty() {
        return Err(CliError::Input(format!("{origin}: no points")));
    }
    Dataset::new(points).map_err(|e| CliError::Input(format!("{origin}: {e}")))
}

pub fn read_points(path: &Path) -> Result<Dataset, CliError> {
    parse_points(&read(path)?, &path.display().to_string())
}

/// Parses one nonnegative integer label per line. Blank lines are skipped.
pub fn parse_labels(text: &str, origin: &str) -> Result<Vec<usize>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            line.trim().parse::<usize>().map_err(|_| {
                CliError::Input(format!(
                    "{origin}: row {}: `{}` is not a nonnegative integer label",
                    i + 1,
                    line.trim()
                ))
            })
        })
        .collect()
}

/// Reads labels and checks them against the dataset size.
pub fn read_partition(path: &Path, points: usize) -> Result<Partition, CliError> {
    let origin = path.display().to_string();
    let labels = parse_labels(&read(path)?, &origin)?;
    if labels.len() != points {
        return Err(CliError::Input(format!(
            "{origin}: {} labels for {points} points",
            labels.len()
        )));
    }
    Partition::new(labels).map_err(|e| CliError::Input(format!("{origin}: {e}")))
}

fn parse_id(field: &str) -> Option<usize> {
    if let Ok(id) = field.parse::<usize>() {
        return Some(id);
    }
    // float-typed ids as written by common linkage tooling, e.g. `3.0`
    let v = field.parse::<f64>().ok()?;
    (v >= 0.0 && v.fract() == 0.0 && v < usize::MAX as f64).then_some(v as usize)
}

/// Parses a linkage over `n` leaves: `n − 1` rows of `left right distance`,
/// separated by whitespace or commas. An optional fourth column must equal the
/// merged cluster's size.
pub fn parse_linkage(text: &str, n: usize, origin: &str) -> Result<Dendrogram, CliError> {
    let rows: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut merges = Vec::with_capacity(rows.len());
    let mut sizes: Vec<usize> = vec![1; n];
    let mut lines = Vec::with_capacity(rows.len());
    for (row_idx, &(line, content)) in rows.iter().enumerate() {
        let bad = |why: String| CliError::Input(format!("{origin}: line {line}: {why}"));
        let fields: Vec<&str> = content
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        if fields.len() != 3 && fields.len() != 4 {
            return Err(bad(format!(
                "expected `left right distance`, found {} fields",
                fields.len()
            )));
        }
        let left =
            parse_id(fields[0]).ok_or_else(|| bad(format!("bad cluster id `{}`", fields[0])))?;
        let right =
            parse_id(fields[1]).ok_or_else(|| bad(format!("bad cluster id `{}`", fields[1])))?;
        let distance: f64 = fields[2]
            .parse()
            .map_err(|_| bad(format!("bad distance `{}`", fields[2])))?;
        if let Some(size_field) = fields.get(3) {
            let declared = parse_id(size_field)
                .ok_or_else(|| bad(format!("bad cluster size `{size_field}`")))?;
            let limit = n + row_idx;
            if left < limit && right < limit {
                let actual = sizes[left] + sizes[right];
                if declared != actual {
                    return Err(bad(format!(
                        "declared size {declared}, merged clusters hold {actual}"
                    )));
                }
            }
        }
        let merged = sizes.get(left).copied().unwrap_or(0) + sizes.get(right).copied().unwrap_or(0);
        sizes.push(merged);
        merges.push(Merge {
            left,
            right,
            distance,
        });
        lines.push(line);
    }
    if n >= 1 && merges.len() != n - 1 {
        return Err(CliError::Input(format!(
            "{origin}: {n} points need {} linkage rows, found {}",
            n - 1,
            merges.len()
        )));
    }
    Dendrogram::from_merges(n, merges).map_err(|e| match e {
        cvi_core::Error::InvalidLinkage { row, reason } => {
            CliError::Input(format!("{origin}: line {}: {reason}", lines[row]))
        }
        other => CliError::Input(format!("{origin}: {other}")),
    })
}

pub fn read_linkage(path: &Path, n: usize) -> Result<Dendrogram, CliError> {
    parse_linkage(&read(path)?, n, &path.display().to_string())
}

/// Points CSV text: one row per point, shortest round-trip decimal form.
pub fn format_points(data: &Dataset) -> String {
    let mut out = String::new();
    for p in data.points() {
        let row: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

pub fn format_labels(partition: &Partition) -> String {
    let mut out = String::new();
    for l in partition.labels() {
        let _ = writeln!(out, "{l}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_round_trip() {
        let d = Dataset::new(vec![vec![0.1, -2.0], vec![1e-7, 3.25]]).unwrap();
        let text = format_points(&d);
        assert_eq!(text, "0.1,-2\n0.0000001,3.25\n");
        assert_eq!(parse_points(&text, "t").unwrap(), d);
    }

    #[test]
    fn bad_points_name_the_row() {
        let err = parse_points("0,1\n2,x\n", "pts.csv")
            .unwrap_err()
            .to_string();
        assert!(err.contains("row 2") && err.contains("`x`"), "{err}");
        let err = parse_points("0,1\n2\n", "pts.csv").unwrap_err().to_string();
        assert!(err.contains("row 2"), "{err}");
        let err = parse_points("0,nan\n", "pts.csv").unwrap_err().to_string();
        assert!(err.contains("row 1"), "{err}");
        assert!(parse_points("", "pts.csv").is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(parse_labels("0\n1\n\n1\n", "l").unwrap(), vec![0, 1, 1]);
        let err = parse_labels("0\n-1\n", "l").unwrap_err().to_string();
        assert!(err.contains("row 2"), "{err}");
    }

    #[test]
    fn linkage_formats() {
        let dg = parse_linkage("0 1 1.0\n2 3 2\n", 3, "lk").unwrap();
        assert_eq!(dg.levels()[2].distance, 2.0);
        let dg = parse_linkage("0.0,1.0,1.0,2.0\n2.0,3.0,2.0,3.0\n", 3, "lk").unwrap();
        assert_eq!(dg.levels().len(), 3);
    }

    #[test]
    fn linkage_errors_name_the_line() {
        let err = parse_linkage("0 1 2\n2 3 1\n", 3, "lk")
            .unwrap_err()
            .to_string();
        assert!(err.contains("line 2") && err.contains("smaller"), "{err}");
        let err = parse_linkage("0 9 1\n2 3 1\n", 3, "lk")
            .unwrap_err()
            .to_string();
        assert!(
            err.contains("line 1") && err.contains("out of range"),
            "{err}"
        );
        let err = parse_linkage("0 1\n", 3, "lk").unwrap_err().to_string();
        assert!(err.contains("line 1"), "{err}");
        let err = parse_linkage("0 1 1 5\n2 3 2\n", 3, "lk")
            .unwrap_err()
            .to_string();
        assert!(err.contains("declared size"), "{err}");
        let err = parse_linkage("0 1 1\n", 3, "lk").unwrap_err().to_string();
        assert!(err.contains("need 2"), "{err}");
    }
}
