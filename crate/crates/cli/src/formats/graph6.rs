use detold_core::Graph;

use super::FormatError;

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// The graph6 string of `g` (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string. Errors carry line 1 and the byte column.
pub fn decode_graph6(s: &str) -> Result<Graph, FormatError> {
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let err = |pos: usize, msg: &str| FormatError::new(1, pos + 1, msg);
    if let Some(p) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(p, "byte outside the graph6 range 63..=126"));
    }
    let value = |from: usize, len: usize| -> Result<usize, FormatError> {
        if bytes.len() < from + len {
            return Err(err(bytes.len(), "truncated size field"));
        }
        Ok(bytes[from..from + len].iter().fold(0, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    let (n, start) = match bytes {
        [] => return Err(err(0, "empty graph6 string")),
        [126, 126, ..] => (value(2, 6)?, 8),
        [126, ..] => (value(1, 3)?, 4),
        [b, ..] => ((b - 63) as usize, 1),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    let body = &bytes[start..];
    if body.len() != need {
        return Err(err(start + body.len().min(need), &format!("expected {need} data bytes for {n} vertices, found {}", body.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if let Some(last) = body.last() {
        let pad = need * 6 - pairs;
        if (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(err(bytes.len() - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges).map_err(|e| err(0, &e.to_string()))
}

/// One graph per meaningful line, `#` comments allowed.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>, FormatError> {
    super::content_lines(text)
        .map(|(line, l)| decode_graph6(l.trim()).map_err(|e| FormatError { line, ..e }))
        .collect()
}
