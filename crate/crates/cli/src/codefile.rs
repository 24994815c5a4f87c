//! Text format for codes.
//!
//! ```text
//! # comment
//! alpha=2
//! beta=2
//! 10|11
//! 11|31
//! ```
//!
//! `alpha` and `beta` must both appear before the first generator row.
//! Blank lines and `#` comments (whole-line or trailing) are ignored.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use thiserror::Error;
use z2z4::{AdditiveCode, MixedWord};

#[derive(Debug, Error)]
pub enum CodeFileError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {message}")]
    Shape { line: usize, message: String },
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> CodeFileError {
    CodeFileError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_code_file(path: &Path) -> Result<AdditiveCode, CodeFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| CodeFileError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_code_str(&text)
}

pub fn parse_code_str(text: &str) -> Result<AdditiveCode, CodeFileError> {
    let mut alpha: Option<usize> = None;
    let mut beta: Option<usize> = None;
    let mut rows: Vec<MixedWord> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let indent = content.len() - content.trim_start().len();
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        if let Some((key, value)) = content.split_once('=') {
            let key = key.trim();
            let slot = match key {
                "alpha" => &mut alpha,
                "beta" => &mut beta,
                _ => return Err(syntax(line, indent + 1, format!("unknown key '{key}'"))),
            };
            if !rows.is_empty() {
                return Err(syntax(
                    line,
                    indent + 1,
                    format!("'{key}' after generator rows"),
                ));
            }
            if slot.is_some() {
                return Err(syntax(line, indent + 1, format!("duplicate '{key}'")));
            }
            let value_col = indent + content.find('=').unwrap_or(0) + 2;
            *slot = Some(value.trim().parse().map_err(|_| {
                syntax(
                    line,
                    value_col,
                    format!("'{}' is not a nonnegative integer", value.trim()),
                )
            })?);
            continue;
        }
        let (Some(a), Some(b)) = (alpha, beta) else {
            return Err(syntax(
                line,
                indent + 1,
                "generator row before alpha and beta",
            ));
        };
        let row: MixedWord = content.parse().map_err(|e| match e {
            z2z4::Error::Literal { column, reason } => syntax(line, indent + column, reason),
            other => syntax(line, indent + 1, other.to_string()),
        })?;
        if row.shape() != (a, b) {
            return Err(CodeFileError::Shape {
                line,
                message: format!(
                    "row {row} has shape ({}, {}) but the file declares ({a}, {b})",
                    row.alpha(),
                    row.beta()
                ),
            });
        }
        rows.push(row);
    }

    let line = last_line.max(1);
    let alpha = alpha.ok_or_else(|| syntax(line, 1, "missing alpha"))?;
    let beta = beta.ok_or_else(|| syntax(line, 1, "missing beta"))?;
    AdditiveCode::new(alpha, beta, rows).map_err(|e| CodeFileError::Shape {
        line,
        message: e.to_string(),
    })
}

fn header(alpha: usize, beta: usize) -> String {
    format!("alpha={alpha}\nbeta={beta}\n")
}

/// The code's generators in code-file syntax.
pub fn export_generators(code: &AdditiveCode) -> String {
    let mut out = header(code.alpha(), code.beta());
    for g in code.generators() {
        let _ = writeln!(out, "{g}");
    }
    out
}

/// Canonical listing: header, then every codeword in lexicographic order.
/// The listing is itself a valid code file for the same code.
pub fn export_codewords<'a>(
    alpha: usize,
    beta: usize,
    words: impl IntoIterator<Item = &'a MixedWord>,
) -> String {
    let mut out = header(alpha, beta);
    for w in words {
        let _ = writeln!(out, "{w}");
    }
    out
}
