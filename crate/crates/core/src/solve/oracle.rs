use alloc::vec::Vec;

use super::SolveResult;
use crate::graph::{Graph, VertexSet};
use crate::verify::{admits, satisfies, Level};
use crate::{Error, Result};

/// Hard cap for the exhaustive solver.
pub const ORACLE_MAX_N: usize = 22;

/// Tries every subset in order of size, and within a size in lexicographic
/// order of sorted vertex lists. The first hit is optimal and canonical.
pub fn solve_oracle(g: &Graph, level: Level) -> Result<SolveResult> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(Error::TooLarge { what: "exhaustive solver", n, cap: ORACLE_MAX_N });
    }
    let mut nodes = 1;
    if !admits(g, level) {
        return Ok(SolveResult::infeasible(nodes));
    }
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            nodes += 1;
            let s = VertexSet::from_elements(n, combo.iter().copied());
            if satisfies(g, &s, level) {
                return Ok(SolveResult { witness: Some(s), nodes_explored: nodes });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set qualifies")
}

/// Advances `combo` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in (i + 1)..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}
