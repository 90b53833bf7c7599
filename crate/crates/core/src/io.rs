//! Text file formats.
//!
//! Seifert matrices:
//!
//! ```text
//! # comments run to end of line
//! seifert 2
//! 0 1
//! 0 1
//! ```
//!
//! Leaf linking matrices, one row of comma-separated Laurent expressions per
//! line:
//!
//! ```text
//! linking 3
//! t + t^-1 - 2, 0, 0
//! 0, 1, 0
//! 0, 0, 1
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::contraction::LinkingMatrix;
use crate::parse::{parse_laurent, ParseError};
use crate::poly::LaurentPoly;
use crate::seifert::{SeifertError, SeifertMatrix};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Laurent { line: usize, source: ParseError },
    #[error("invalid Seifert matrix: {0}")]
    Invalid(#[from] SeifertError),
}

fn syntax(line: usize, message: impl Into<String>) -> LoadError {
    LoadError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-blank lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn header(line: Option<(usize, &str)>, keyword: &str) -> Result<(usize, usize), LoadError> {
    let (no, text) = line.ok_or_else(|| syntax(1, format!("missing `{keyword} <n>` header")))?;
    let mut words = text.split_whitespace();
    if words.next() != Some(keyword) {
        return Err(syntax(no, format!("expected `{keyword} <n>` header")));
    }
    let size = words
        .next()
        .and_then(|w| w.parse::<usize>().ok())
        .ok_or_else(|| syntax(no, format!("expected a size after `{keyword}`")))?;
    if words.next().is_some() {
        return Err(syntax(no, "trailing text after header"));
    }
    Ok((no, size))
}

pub fn parse_seifert(text: &str) -> Result<SeifertMatrix, LoadError> {
    let mut lines = content_lines(text);
    let (header_line, n) = header(lines.next(), "seifert")?;
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (no, line) = lines
            .next()
            .ok_or_else(|| syntax(header_line, format!("expected {n} rows, found {r}")))?;
        let row = line
            .split_whitespace()
            .map(|w| w.parse::<i64>().map_err(|_| syntax(no, format!("`{w}` is not an integer"))))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(syntax(no, format!("row has {} entries, expected {n}", row.len())));
        }
        rows.push(row);
    }
    if let Some((no, _)) = lines.next() {
        return Err(syntax(no, format!("unexpected extra row, expected {n}")));
    }
    Ok(SeifertMatrix::new(rows)?)
}

pub fn parse_linking(text: &str) -> Result<LinkingMatrix, LoadError> {
    let mut lines = content_lines(text);
    let (header_line, n) = header(lines.next(), "linking")?;
    if n != 3 {
        return Err(syntax(header_line, format!("linking matrices are 3x3, got size {n}")));
    }
    let mut m = LinkingMatrix::default();
    for i in 0..3 {
        let (no, line) = lines
            .next()
            .ok_or_else(|| syntax(header_line, format!("expected 3 rows, found {i}")))?;
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 3 {
            return Err(syntax(no, format!("row has {} entries, expected 3", cells.len())));
        }
        for (j, cell) in cells.iter().enumerate() {
            let p: LaurentPoly =
                parse_laurent(cell).map_err(|source| LoadError::Laurent { line: no, source })?;
            m.set(i, j, p);
        }
    }
    if let Some((no, _)) = lines.next() {
        return Err(syntax(no, "unexpected extra row, expected 3"));
    }
    Ok(m)
}

fn read(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn load_seifert(path: impl AsRef<Path>) -> Result<SeifertMatrix, LoadError> {
    parse_seifert(&read(path.as_ref())?)
}

pub fn load_linking(path: impl AsRef<Path>) -> Result<LinkingMatrix, LoadError> {
    parse_linking(&read(path.as_ref())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contraction::ClaspSign;

    #[test]
    fn seifert_files() {
        let a = parse_seifert("seifert 2\n0 1\n0 1\n").unwrap();
        assert_eq!(a, SeifertMatrix::whitehead_surface(1));
        assert_eq!(parse_seifert("seifert 0").unwrap(), SeifertMatrix::unknot());
        let commented = "# trefoil\n\nseifert 2 # genus one\n-1 1\n 0 -1  # last\n";
        assert_eq!(parse_seifert(commented).unwrap().rows(), vec![vec![-1, 1], vec![0, -1]]);
    }

    #[test]
    fn seifert_errors_name_the_line() {
        let e = parse_seifert("seifert 2\n0 1\n0\n").unwrap_err();
        assert!(matches!(e, LoadError::Syntax { line: 3, .. }), "{e}");
        assert_eq!(e.to_string(), "line 3: row has 1 entries, expected 2");
        assert!(matches!(parse_seifert("matrix 2").unwrap_err(), LoadError::Syntax { line: 1, .. }));
        assert!(matches!(parse_seifert("").unwrap_err(), LoadError::Syntax { .. }));
        assert!(matches!(parse_seifert("seifert 2\n0 x\n0 1").unwrap_err(), LoadError::Syntax { line: 2, .. }));
        assert!(matches!(parse_seifert("seifert 2\n0 1").unwrap_err(), LoadError::Syntax { line: 1, .. }));
        assert!(matches!(parse_seifert("seifert 0\n1").unwrap_err(), LoadError::Syntax { line: 2, .. }));
        assert!(matches!(
            parse_seifert("seifert 2\n0 0\n0 0").unwrap_err(),
            LoadError::Invalid(SeifertError::NotUnimodular(_))
        ));
        assert!(matches!(
            parse_seifert("seifert 1\n0").unwrap_err(),
            LoadError::Invalid(SeifertError::OddSize(1))
        ));
    }

    #[test]
    fn linking_files() {
        let text = LinkingMatrix::whitehead(ClaspSign::Minus).to_string();
        assert_eq!(text, "linking 3\n-t - t^-1 + 2, 0, 0\n0, 1, 0\n0, 0, 1\n");
        assert_eq!(parse_linking(&text).unwrap(), LinkingMatrix::whitehead(ClaspSign::Minus));
        let e = parse_linking("linking 3\n1, 0, 0\n0, 1\n0, 0, 1").unwrap_err();
        assert!(matches!(e, LoadError::Syntax { line: 3, .. }));
        let e = parse_linking("linking 3\n1, 0, 0\n0, t^1/2, 0\n0, 0, 1").unwrap_err();
        assert!(matches!(e, LoadError::Laurent { line: 3, .. }));
        assert!(parse_linking("linking 2\n1, 0\n0, 1").is_err());
    }

    #[test]
    fn missing_file() {
        let e = load_seifert("/nonexistent/knot.txt").unwrap_err();
        assert!(matches!(e, LoadError::Io { .. }));
    }
}
