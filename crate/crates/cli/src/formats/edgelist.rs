use detold_core::Graph;

use super::{content_lines, token_column, FormatError};

/// Parses `n m` followed by `m` lines `u v` (0-based). `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| FormatError::new(1, 1, "missing `n m` header"))?;
    let nums = parse_row(hline, header, 2, "header")?;
    let (n, m) = (nums[0], nums[1]);
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (line, l) in lines {
        let uv = parse_row(line, l, 2, "edge")?;
        let (u, v) = (uv[0], uv[1]);
        for (k, x) in [(0, u), (1, v)] {
            if x >= n {
                return Err(FormatError::new(line, token_column(l, k), format!("endpoint {x} out of range for {n} vertices")));
            }
        }
        if u == v {
            return Err(FormatError::new(line, 1, format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(FormatError::new(line, 1, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::new(hline, token_column(header, 1), format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges).map_err(|e| FormatError::new(hline, 1, e.to_string()))
}

fn parse_row(line: usize, l: &str, want: usize, what: &str) -> Result<Vec<usize>, FormatError> {
    let tokens: Vec<&str> = l.split_whitespace().collect();
    if tokens.len() != want {
        return Err(FormatError::new(line, 1, format!("{what} needs {want} integers, found {}", tokens.len())));
    }
    tokens
        .iter()
        .enumerate()
        .map(|(k, t)| {
            t.parse::<usize>()
                .map_err(|_| FormatError::new(line, token_column(l, k), format!("{t:?} is not a vertex index")))
        })
        .collect()
}

/// Header line, then edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use detold_core::graph::named::path;

    #[test]
    fn path_on_three() {
        assert_eq!(parse_edge_list("3 2\n0 1\n1 2").unwrap(), path(3));
        assert_eq!(parse_edge_list("# comment\n3 2\n0 1 # first\n\n1 2\n").unwrap(), path(3));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_edge_list("2 1\n0 0").unwrap_err();
        assert_eq!((e.line, e.message.as_str()), (2, "self-loop at 0"));
        let e = parse_edge_list("3 1\n0  7").unwrap_err();
        assert_eq!((e.line, e.column), (2, 4));
        assert!(parse_edge_list("3\n0 1").is_err());
        assert!(parse_edge_list("3 2\n0 1").is_err());
        assert!(parse_edge_list("3 2\n0 1\n1 0").is_err());
        assert!(parse_edge_list("3 1\nx 1").is_err());
    }
}
