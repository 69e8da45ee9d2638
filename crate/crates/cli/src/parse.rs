//! Matrix text format: one row per line, whitespace-separated entries,
//! `#` starts a comment running to end of line, blank lines are skipped.
//! Entries are integers, fractions `p/q` with a plain positive digit
//! string as denominator, or finite decimals, all converted exactly.

use gjx_core::{Error, Matrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty matrix: no rows found")]
    Empty,
    #[error("line {line}: row has {got} entries, expected {expected}")]
    RaggedRows {
        line: usize,
        got: usize,
        expected: usize,
    },
    #[error("line {line}, column {col}: bad number {token:?}")]
    BadToken {
        line: usize,
        col: usize,
        token: String,
    },
    #[error("line {line}, column {col}: zero denominator in {token:?}")]
    ZeroDenominator {
        line: usize,
        col: usize,
        token: String,
    },
}

/// Tokens of one line with their 1-based byte columns, comments removed.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let body = match line.find('#') {
        Some(p) => &line[..p],
        None => line,
    };
    let mut out = Vec::new();
    let mut rest = body;
    let mut offset = 0;
    while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
        let after = &rest[start..];
        let end = after.find(char::is_whitespace).unwrap_or(after.len());
        out.push((offset + start + 1, &after[..end]));
        offset += start + end;
        rest = &after[end..];
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<Matrix, ParseError> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut expected = 0;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let toks = tokens(line);
        if toks.is_empty() {
            continue;
        }
        if !rows.is_empty() && toks.len() != expected {
            return Err(ParseError::RaggedRows {
                line: line_no,
                got: toks.len(),
                expected,
            });
        }
        expected = toks.len();
        let mut row = Vec::with_capacity(toks.len());
        for (col, tok) in toks {
            let value = tok.parse::<Rational>().map_err(|e| match e {
                Error::ZeroDenominator => ParseError::ZeroDenominator {
                    line: line_no,
                    col,
                    token: tok.to_string(),
                },
                _ => ParseError::BadToken {
                    line: line_no,
                    col,
                    token: tok.to_string(),
                },
            })?;
            row.push(value);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(Matrix::from_rows(rows).expect("rows are non-empty and equal length"))
}

/// Plain matrix text: single-space-separated entries, one row per line.
/// Parses back to an equal matrix.
pub fn render_matrix(m: &Matrix) -> String {
    m.to_string()
}

/// Right-aligned rendering for step-by-step listings; every line gets
/// the given indent. Not intended to be parsed back.
pub fn render_matrix_aligned(m: &Matrix, indent: &str) -> String {
    let mut widths = vec![0usize; m.cols()];
    for j in 1..=m.cols() {
        widths[j - 1] = (1..=m.rows())
            .map(|i| m[(i, j)].to_string().len())
            .max()
            .unwrap_or(0);
    }
    let mut out = String::new();
    for i in 1..=m.rows() {
        out.push_str(indent);
        for j in 1..=m.cols() {
            if j > 1 {
                out.push(' ');
            }
            let s = m[(i, j)].to_string();
            for _ in s.len()..widths[j - 1] {
                out.push(' ');
            }
            out.push_str(&s);
        }
        out.push('\n');
    }
    out
}
