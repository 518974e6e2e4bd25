//! Text and JSON serialisation of digraphs.
//!
//! The text format is a decimal vertex count on the first line followed by
//! `v` rows of exactly `v` characters from `{0,1}`; character `j` of row `i`
//! is `adj[i][j]`. Each line ends with a single `\n`.
//!
//! ```text
//! 3
//! 010
//! 001
//! 100
//! ```
//!
//! The JSON form is `{"v": 3, "edges": [[0,1],[1,2],[2,0]]}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::{validate_digraph, Digraph, DigraphError};

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("line {line}, column {column}: invalid header: {reason}")]
    Header { line: usize, column: usize, reason: String },
    #[error("line {line}: row has {found} characters, expected {expected}")]
    RowLength { line: usize, found: usize, expected: usize },
    #[error("line {line}, column {column}: unexpected character {found:?}, expected '0' or '1'")]
    BadChar { line: usize, column: usize, found: char },
    #[error("line {line}: expected {expected} rows, input ended after {found}")]
    MissingRows { line: usize, expected: usize, found: usize },
    #[error("line {line}: unexpected data after the last row")]
    TrailingData { line: usize },
    #[error("invalid JSON digraph: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] DigraphError),
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonDigraph {
    v: usize,
    edges: Vec<[usize; 2]>,
}

/// Parses either format; input whose first non-blank character is `{` is
/// read as JSON.
pub fn read_digraph(text: &str) -> Result<Digraph, ReadError> {
    if text.trim_start().starts_with('{') {
        read_json(text)
    } else {
        read_text(text)
    }
}

pub fn read_text(text: &str) -> Result<Digraph, ReadError> {
    let mut lines = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l));
    let header = lines.next().unwrap_or("");
    if header.is_empty() {
        return Err(ReadError::Header {
            line: 1,
            column: 1,
            reason: "missing vertex count".into(),
        });
    }
    if let Some((i, c)) = header.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
        return Err(ReadError::Header {
            line: 1,
            column: i + 1,
            reason: format!("unexpected character {c:?} in vertex count"),
        });
    }
    let v: usize = header.parse().map_err(|e| ReadError::Header {
        line: 1,
        column: 1,
        reason: format!("{e}"),
    })?;
    if v == 0 {
        return Err(ReadError::Header {
            line: 1,
            column: 1,
            reason: "vertex count must be positive".into(),
        });
    }

    let mut adj = Vec::with_capacity(v);
    for i in 0..v {
        let line = i + 2;
        let row = match lines.next() {
            Some(r) if !r.is_empty() => r,
            _ => {
                return Err(ReadError::MissingRows {
                    line,
                    expected: v,
                    found: i,
                })
            }
        };
        let mut bits = Vec::with_capacity(v);
        for (col, ch) in row.chars().enumerate() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                found => {
                    return Err(ReadError::BadChar {
                        line,
                        column: col + 1,
                        found,
                    })
                }
            }
        }
        if bits.len() != v {
            return Err(ReadError::RowLength {
                line,
                found: bits.len(),
                expected: v,
            });
        }
        adj.push(bits);
    }
    for (offset, rest) in lines.enumerate() {
        if !rest.trim().is_empty() {
            return Err(ReadError::TrailingData { line: v + 2 + offset });
        }
    }
    Ok(validate_digraph(&adj)?)
}

pub fn read_json(text: &str) -> Result<Digraph, ReadError> {
    let parsed: JsonDigraph = serde_json::from_str(text)?;
    Ok(Digraph::from_edges(
        parsed.v,
        parsed.edges.into_iter().map(|[x, y]| (x, y)),
    )?)
}

pub fn write_digraph(g: &Digraph) -> String {
    let v = g.v();
    let mut out = String::with_capacity((v + 1) * (v + 1) + 8);
    out.push_str(&v.to_string());
    out.push('\n');
    for x in 0..v {
        for y in 0..v {
            out.push(if g.has_edge(x, y) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

pub fn write_json(g: &Digraph) -> String {
    let doc = JsonDigraph {
        v: g.v(),
        edges: g.edges().map(|(x, y)| [x, y]).collect(),
    };
    serde_json::to_string(&doc).expect("digraph serialises")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::paley_tournament;

    #[test]
    fn reads_three_cycle() {
        let g = read_digraph("3\n010\n001\n100\n").unwrap();
        assert_eq!(g, Digraph::cycle(3).unwrap());
        // final newline optional
        assert_eq!(read_digraph("3\n010\n001\n100").unwrap(), g);
    }

    #[test]
    fn writes_bit_exact() {
        let g = Digraph::cycle(3).unwrap();
        assert_eq!(write_digraph(&g), "3\n010\n001\n100\n");
        assert_eq!(write_json(&g), r#"{"v":3,"edges":[[0,1],[1,2],[2,0]]}"#);
    }

    #[test]
    fn paley_round_trip() {
        let g = paley_tournament(7, 1).unwrap();
        assert_eq!(read_digraph(&write_digraph(&g)).unwrap(), g);
        assert_eq!(read_digraph(&write_json(&g)).unwrap(), g);
    }

    #[test]
    fn validation_errors_propagate() {
        // row 1 sets adj[1][1]
        let err = read_digraph("2\n01\n01\n").unwrap_err();
        assert!(
            matches!(err, ReadError::Invalid(DigraphError::Loop { vertex: 1 })),
            "{err}"
        );
        let err = read_digraph("2\n01\n10\n").unwrap_err();
        assert_eq!(err.to_string(), "2-cycle at (0,1)");
    }

    #[test]
    fn positional_errors() {
        match read_digraph("3x\n").unwrap_err() {
            ReadError::Header { line: 1, column: 2, .. } => {}
            e => panic!("{e}"),
        }
        match read_digraph("2\n01\n0a\n").unwrap_err() {
            ReadError::BadChar {
                line: 3,
                column: 2,
                found: 'a',
            } => {}
            e => panic!("{e}"),
        }
        match read_digraph("2\n010\n00\n").unwrap_err() {
            ReadError::RowLength {
                line: 2,
                found: 3,
                expected: 2,
            } => {}
            e => panic!("{e}"),
        }
        match read_digraph("3\n010\n").unwrap_err() {
            ReadError::MissingRows {
                expected: 3, found: 1, ..
            } => {}
            e => panic!("{e}"),
        }
        match read_digraph("1\n0\n1\n").unwrap_err() {
            ReadError::TrailingData { line: 3 } => {}
            e => panic!("{e}"),
        }
        assert!(matches!(read_digraph(""), Err(ReadError::Header { .. })));
        assert!(matches!(read_digraph("0\n"), Err(ReadError::Header { .. })));
        assert!(matches!(
            read_digraph(r#"{"v":2,"edges":[[0,5]]}"#),
            Err(ReadError::Invalid(_))
        ));
        assert!(matches!(read_digraph(r#"{"v":2"#), Err(ReadError::Json(_))));
    }
}
