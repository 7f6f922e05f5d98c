//! Text formats for matrices and clusterings. All indices in files are 1-based.
//!
//! Matrix, dense form: a header line `m n`, then `m` lines of `n`
//! whitespace-separated `0`/`1` tokens.
//!
//! Matrix, sparse form: a header line `m n nnz`, then `nnz` lines `row col`
//! naming the 1-entries. Duplicates are rejected.
//!
//! Clustering: `{"clusters":[{"rows":[...],"cols":[...]}, ...]}`.
//!
//! Blank lines are ignored in both matrix forms.

use std::collections::BTreeSet;
use std::path::Path;

use biclayout::{BinaryMatrix, Bicluster, Biclustering, Suggestions};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Parse failure inside a text buffer: optional 1-based line and message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextError {
    pub line: Option<usize>,
    pub message: String,
}

fn at(line: usize, message: impl Into<String>) -> TextError {
    TextError {
        line: Some(line),
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn number(token: &str, line: usize, what: &str) -> std::result::Result<usize, TextError> {
    token
        .parse::<usize>()
        .map_err(|_| at(line, format!("{what}: expected a non-negative integer, found `{token}`")))
}

pub fn parse_matrix_str(text: &str) -> std::result::Result<BinaryMatrix, TextError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or(TextError {
        line: None,
        message: "empty file".into(),
    })?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let (m, n) = match head.as_slice() {
        [m, n] | [m, n, _] => (number(m, hl, "row count")?, number(n, hl, "column count")?),
        _ => return Err(at(hl, "header must be `m n` (dense) or `m n nnz` (sparse)")),
    };
    if m == 0 || n == 0 {
        return Err(at(hl, format!("dimensions must be positive, got {m}x{n}")));
    }
    let mut ones = Vec::new();
    if let [_, _, nnz] = head.as_slice() {
        let nnz = number(nnz, hl, "entry count")?;
        let mut seen = BTreeSet::new();
        for _ in 0..nnz {
            let (ln, l) = lines
                .next()
                .ok_or_else(|| at(hl, format!("header announces {nnz} entries, file ends early")))?;
            let t: Vec<&str> = l.split_whitespace().collect();
            let [r, c] = t.as_slice() else {
                return Err(at(ln, "expected `row col`"));
            };
            let (r, c) = (number(r, ln, "row")?, number(c, ln, "column")?);
            if r == 0 || r > m {
                return Err(at(ln, format!("row {r} out of range 1..={m}")));
            }
            if c == 0 || c > n {
                return Err(at(ln, format!("column {c} out of range 1..={n}")));
            }
            if !seen.insert((r, c)) {
                return Err(at(ln, format!("duplicate entry ({r}, {c})")));
            }
            ones.push((r - 1, c - 1));
        }
    } else {
        for r in 0..m {
            let (ln, l) = lines
                .next()
                .ok_or_else(|| at(hl, format!("header announces {m} rows, file has {r}")))?;
            let t: Vec<&str> = l.split_whitespace().collect();
            if t.len() != n {
                return Err(at(ln, format!("expected {n} entries, found {}", t.len())));
            }
            for (c, tok) in t.iter().enumerate() {
                match *tok {
                    "1" => ones.push((r, c)),
                    "0" => {}
                    _ => return Err(at(ln, format!("entry {}: expected 0 or 1, found `{tok}`", c + 1))),
                }
            }
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(at(ln, "unexpected content after the last matrix line"));
    }
    BinaryMatrix::new(m, n, ones).map_err(|e| TextError {
        line: None,
        message: e.to_string(),
    })
}

pub fn parse_matrix(path: &Path) -> Result<BinaryMatrix> {
    parse_matrix_str(&read(path)?).map_err(|e| CliError::parse(path, e.line, e.message))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClusteringFile {
    pub clusters: Vec<ClusterEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClusterEntry {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// Parses a clustering for an `m x n` matrix, checking every index.
pub fn parse_clustering_str(text: &str, m: usize, n: usize) -> std::result::Result<Biclustering, TextError> {
    let file: ClusteringFile = serde_json::from_str(text).map_err(|e| TextError {
        line: (e.line() > 0).then_some(e.line()),
        message: e.to_string(),
    })?;
    let mut clusters = Vec::with_capacity(file.clusters.len());
    for (i, cl) in file.clusters.iter().enumerate() {
        let k = i + 1;
        for (name, set, bound) in [("rows", &cl.rows, m), ("cols", &cl.cols, n)] {
            if set.is_empty() {
                return Err(TextError {
                    line: None,
                    message: format!("cluster {k}: empty {name}"),
                });
            }
            if let Some(&bad) = set.iter().find(|&&x| x == 0 || x > bound) {
                return Err(TextError {
                    line: None,
                    message: format!("cluster {k}: {name} index {bad} out of range 1..={bound}"),
                });
            }
        }
        clusters.push(Bicluster::new(
            cl.rows.iter().map(|x| x - 1),
            cl.cols.iter().map(|x| x - 1),
        ));
    }
    Ok(Biclustering::new(clusters))
}

pub fn parse_clustering(path: &Path, m: usize, n: usize) -> Result<Biclustering> {
    parse_clustering_str(&read(path)?, m, n).map_err(|e| CliError::parse(path, e.line, e.message))
}

/// Dense text form of a matrix, the inverse of [`parse_matrix_str`].
pub fn write_matrix_dense(a: &BinaryMatrix) -> String {
    let mut s = format!("{} {}\n", a.rows(), a.cols());
    for r in 0..a.rows() {
        let line: Vec<&str> = (0..a.cols()).map(|c| if a.get(r, c) { "1" } else { "0" }).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

/// JSON form of a clustering with 1-based indices.
pub fn write_clustering(bc: &Biclustering) -> String {
    let file = ClusteringFile {
        clusters: bc
            .clusters()
            .iter()
            .map(|cl| ClusterEntry {
                rows: one_based(cl.rows()),
                cols: one_based(cl.cols()),
            })
            .collect(),
    };
    serde_json::to_string(&file).expect("plain data serializes")
}

pub(crate) fn one_based(xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|x| x + 1).collect()
}

/// Suggestions with 1-based indices, as written to reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuggestionsOut {
    /// `rows[i]` lists the rows suggested for cluster `i + 1`.
    pub rows: Vec<Vec<usize>>,
    pub cols: Vec<Vec<usize>>,
    pub leftover_rows: Vec<usize>,
    pub leftover_cols: Vec<usize>,
}

impl From<&Suggestions> for SuggestionsOut {
    fn from(s: &Suggestions) -> Self {
        Self {
            rows: s.suggested_rows.iter().map(|v| one_based(v)).collect(),
            cols: s.suggested_cols.iter().map(|v| one_based(v)).collect(),
            leftover_rows: one_based(&s.leftover_rows),
            leftover_cols: one_based(&s.leftover_cols),
        }
    }
}
