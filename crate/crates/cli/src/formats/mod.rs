//! Text formats read and written by the command-line tool.

mod cnf;
mod edgelist;
mod graph6;
mod pattern;
mod roles;
mod set;

pub use cnf::{parse_cnf, write_cnf};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{decode_graph6, encode_graph6, parse_graph6_corpus};
pub use pattern::{parse_pattern, write_pattern, PatternFile};
pub use roles::{parse_role_map, write_role_map, RoleMap};
pub use set::{parse_set, write_set};

use detold_core::Graph;

/// A parse failure with a 1-based position in the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl FormatError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> FormatError {
        FormatError { line, column, message: message.into() }
    }
}

/// Meaningful lines with their 1-based numbers, `#` comments removed.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim_end();
        (!l.trim().is_empty()).then_some((i + 1, l))
    })
}

/// Column (1-based) of the `k`-th whitespace-separated token of `line`.
pub(crate) fn token_column(line: &str, k: usize) -> usize {
    let mut seen = 0;
    let mut in_token = false;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() || c == ',' {
            in_token = false;
        } else if !in_token {
            if seen == k {
                return i + 1;
            }
            seen += 1;
            in_token = true;
        }
    }
    line.len() + 1
}

/// Reads an edge list when the first meaningful line holds two integers,
/// graph6 otherwise.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let first = content_lines(text).next();
    match first {
        Some((_, l)) if l.split_whitespace().count() >= 2 && l.split_whitespace().all(|t| t.parse::<u64>().is_ok()) => {
            parse_edge_list(text)
        }
        Some((line, l)) => decode_graph6(l.trim()).map_err(|e| FormatError { line, ..e }),
        None => Err(FormatError::new(1, 1, "empty graph file")),
    }
}
