use detold_core::VertexSet;

use super::{content_lines, FormatError};

/// Vertex indices separated by whitespace or commas; `#` starts a comment.
pub fn parse_set(text: &str, n: usize) -> Result<VertexSet, FormatError> {
    let mut s = VertexSet::new(n);
    for (line, l) in content_lines(text) {
        let mut col = 0;
        for piece in l.split(|c: char| c.is_whitespace() || c == ',') {
            let here = col + 1;
            col += piece.len() + 1;
            if piece.is_empty() {
                continue;
            }
            let v: usize = piece.parse().map_err(|_| FormatError::new(line, here, format!("{piece:?} is not a vertex index")))?;
            if v >= n {
                return Err(FormatError::new(line, here, format!("vertex {v} out of range for {n} vertices")));
            }
            if !s.insert(v) {
                return Err(FormatError::new(line, here, format!("vertex {v} listed twice")));
            }
        }
    }
    Ok(s)
}

pub fn write_set(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    items.join(" ") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let s = parse_set("0, 2 5\n# note\n7", 8).unwrap();
        assert_eq!(s.to_vec(), [0, 2, 5, 7]);
        assert_eq!(parse_set(&write_set(&s), 8).unwrap(), s);
        assert_eq!(parse_set("1 9", 8).unwrap_err().column, 3);
        assert!(parse_set("1 1", 8).is_err());
        assert!(parse_set("", 3).unwrap().is_empty());
    }
}
