use detold_core::reduction::{Literal, SatInstance};

use super::{content_lines, token_column, FormatError};

/// DIMACS CNF restricted to 3-SAT: every clause has exactly three literals
/// on distinct variables. Clauses may span lines; `c` lines are comments.
pub fn parse_cnf(text: &str) -> Result<SatInstance, FormatError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<(Literal, usize, usize)> = Vec::new();
    for (line, l) in content_lines(text) {
        let t = l.trim_start();
        if t.starts_with('c') || t.starts_with('%') {
            continue;
        }
        if t.starts_with('p') {
            let f: Vec<&str> = t.split_whitespace().collect();
            if header.is_some() {
                return Err(FormatError::new(line, 1, "second problem line"));
            }
            let parse = |s: &str| s.parse::<usize>().ok();
            match (f.as_slice(), f.get(2).and_then(|s| parse(s)), f.get(3).and_then(|s| parse(s))) {
                (["p", "cnf", _, _], Some(n), Some(m)) => header = Some((n, m, line)),
                _ => return Err(FormatError::new(line, 1, "expected `p cnf <vars> <clauses>`")),
            }
            continue;
        }
        let Some((n, _, _)) = header else {
            return Err(FormatError::new(line, 1, "clause before the `p cnf` line"));
        };
        for (k, tok) in t.split_whitespace().enumerate() {
            let col = token_column(l, k);
            let x: i64 = tok.parse().map_err(|_| FormatError::new(line, col, format!("{tok:?} is not a literal")))?;
            if x == 0 {
                let idx = clauses.len() + 1;
                clauses.push(finish_clause(&current, idx, line, col)?);
                current.clear();
                continue;
            }
            let var = x.unsigned_abs() as usize;
            if var > n {
                return Err(FormatError::new(line, col, format!("clause {}: variable {var} exceeds {n}", clauses.len() + 1)));
            }
            current.push((Literal { var: var - 1, positive: x > 0 }, line, col));
        }
    }
    let Some((n, m, hline)) = header else {
        return Err(FormatError::new(1, 1, "missing `p cnf` line"));
    };
    if let Some(&(_, line, col)) = current.first() {
        return Err(FormatError::new(line, col, format!("clause {} is not terminated by 0", clauses.len() + 1)));
    }
    if clauses.len() != m {
        return Err(FormatError::new(hline, 1, format!("header declares {m} clauses, found {}", clauses.len())));
    }
    if m == 0 {
        return Err(FormatError::new(hline, 1, "formula has no clauses"));
    }
    SatInstance::new(n, clauses).map_err(|e| FormatError::new(hline, 1, e.to_string()))
}

fn finish_clause(lits: &[(Literal, usize, usize)], idx: usize, line: usize, col: usize) -> Result<[Literal; 3], FormatError> {
    if lits.len() != 3 {
        return Err(FormatError::new(line, col, format!("clause {idx} has {} literals, 3-SAT needs 3", lits.len())));
    }
    for a in 0..3 {
        for b in (a + 1)..3 {
            if lits[a].0.var == lits[b].0.var {
                let (_, l, c) = lits[b];
                return Err(FormatError::new(l, c, format!("clause {idx} repeats variable {}", lits[a].0.var + 1)));
            }
        }
    }
    Ok([lits[0].0, lits[1].0, lits[2].0])
}

pub fn write_cnf(phi: &SatInstance) -> String {
    let mut out = format!("p cnf {} {}\n", phi.num_vars(), phi.clauses().len());
    for c in phi.clauses() {
        out.push_str(&format!("{} {} {} 0\n", c[0].to_dimacs(), c[1].to_dimacs(), c[2].to_dimacs()));
    }
    out
}
