//! The plain-text brace format:
//!
//! ```text
//! # comment
//! order 2
//! add
//! 0 1
//! 1 0
//! mul
//! 0 1
//! 1 0
//! ```
//!
//! Entry `j` of row `i` is `i * j`. Blank lines and lines starting with `#`
//! are ignored. Element 0 is the identity of both tables.

use std::fmt::Write;

use thiserror::Error;

use crate::skew_brace::{BraceError, SkewBrace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraceFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of file: {0}")]
    Truncated(String),
    #[error(transparent)]
    Invalid(#[from] BraceError),
}

fn syntax(line: usize, message: impl Into<String>) -> BraceFileError {
    BraceFileError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses and validates a brace file.
pub fn parse(text: &str) -> Result<SkewBrace, BraceFileError> {
    let (add, mul) = parse_tables(text)?;
    Ok(SkewBrace::from_rows(&add, &mul)?)
}

/// Parses the two tables without checking any axioms.
pub fn parse_tables(text: &str) -> Result<(Vec<Vec<usize>>, Vec<Vec<usize>>), BraceFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (no, first) = lines
        .next()
        .ok_or_else(|| BraceFileError::Truncated("expected `order <n>`".into()))?;
    let n: usize = match first.split_whitespace().collect::<Vec<_>>()[..] {
        ["order", n] => n
            .parse()
            .map_err(|_| syntax(no, format!("bad order `{n}`")))?,
        _ => return Err(syntax(no, "expected `order <n>`")),
    };
    if n == 0 {
        return Err(syntax(no, "order must be positive"));
    }
    let mut table = |name: &str| -> Result<Vec<Vec<usize>>, BraceFileError> {
        let (no, header) = lines
            .next()
            .ok_or_else(|| BraceFileError::Truncated(format!("expected `{name}`")))?;
        if header != name {
            return Err(syntax(no, format!("expected `{name}`, found `{header}`")));
        }
        (0..n)
            .map(|i| {
                let (no, row) = lines.next().ok_or_else(|| {
                    BraceFileError::Truncated(format!("{name} table has only {i} of {n} rows"))
                })?;
                let row: Vec<usize> = row
                    .split_whitespace()
                    .map(|t| {
                        t.parse()
                            .map_err(|_| syntax(no, format!("bad entry `{t}`")))
                    })
                    .collect::<Result<_, _>>()?;
                if row.len() != n {
                    return Err(syntax(
                        no,
                        format!("expected {n} entries, found {}", row.len()),
                    ));
                }
                Ok(row)
            })
            .collect()
    };
    let add = table("add")?;
    let mul = table("mul")?;
    if let Some((no, extra)) = lines.next() {
        return Err(syntax(no, format!("trailing content `{extra}`")));
    }
    Ok((add, mul))
}

/// Canonical text form: no comments, single spaces, trailing newline.
pub fn format(b: &SkewBrace) -> String {
    let mut out = String::new();
    writeln!(out, "order {}", b.order()).unwrap();
    for (name, rows) in [("add", b.add_rows()), ("mul", b.mul_rows())] {
        writeln!(out, "{name}").unwrap();
        for row in rows {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}", cells.join(" ")).unwrap();
        }
    }
    out
}
