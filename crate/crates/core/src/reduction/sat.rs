use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A variable (0-based) with a polarity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Literal {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Literal {
        Literal { var, positive: false }
    }

    /// DIMACS convention: `var + 1`, negated for negative literals.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var + 1)
        } else {
            write!(f, "~x{}", self.var + 1)
        }
    }
}

pub type Clause = [Literal; 3];

/// A 3-CNF formula whose clauses each use three distinct variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatInstance {
    num_vars: usize,
    clauses: Vec<Clause>,
}

/// Largest variable count for which [`SatInstance::is_satisfiable`] runs its truth table.
pub const TRUTH_TABLE_MAX_VARS: usize = 24;

impl SatInstance {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<SatInstance> {
        if num_vars == 0 {
            return Err(Error::Formula("at least one variable is required".into()));
        }
        if clauses.is_empty() {
            return Err(Error::Formula("at least one clause is required".into()));
        }
        for (j, clause) in clauses.iter().enumerate() {
            if let Some(l) = clause.iter().find(|l| l.var >= num_vars) {
                return Err(Error::Formula(format!("clause {j}: literal {l} exceeds {num_vars} variables")));
            }
            let [a, b, c] = clause.map(|l| l.var);
            if a == b || b == c || a == c {
                return Err(Error::Formula(format!("clause {j}: literals must come from distinct variables")));
            }
        }
        Ok(SatInstance { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn first_unsatisfied(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses.iter().position(|c| !c.iter().any(|l| l.holds(assignment)))
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars && self.first_unsatisfied(assignment).is_none()
    }

    /// Satisfying assignments in binary-counting order (variable 0 is the low bit).
    pub fn satisfying_assignments(&self) -> Result<Vec<Vec<bool>>> {
        if self.num_vars > TRUTH_TABLE_MAX_VARS {
            return Err(Error::TooLarge { what: "truth-table satisfiability", n: self.num_vars, cap: TRUTH_TABLE_MAX_VARS });
        }
        Ok((0u64..1 << self.num_vars)
            .map(|bits| (0..self.num_vars).map(|i| bits >> i & 1 == 1).collect::<Vec<bool>>())
            .filter(|a| self.satisfied_by(a))
            .collect())
    }

    pub fn is_satisfiable(&self) -> Result<bool> {
        Ok(!self.satisfying_assignments()?.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn validation() {
        assert!(SatInstance::new(1, vec![[Literal::pos(0); 3]]).is_err());
        assert!(SatInstance::new(3, vec![]).is_err());
        assert!(SatInstance::new(2, vec![[Literal::pos(0), Literal::pos(1), Literal::pos(2)]]).is_err());
        assert!(SatInstance::new(3, vec![[Literal::pos(0), Literal::neg(1), Literal::pos(2)]]).is_ok());
    }

    #[test]
    fn truth_table() {
        let all: Vec<Clause> = (0..8)
            .map(|m| [0, 1, 2].map(|v| Literal { var: v, positive: m >> v & 1 == 1 }))
            .collect();
        let phi = SatInstance::new(3, all.clone()).unwrap();
        assert!(!phi.is_satisfiable().unwrap());
        let seven = SatInstance::new(3, all[1..].to_vec()).unwrap();
        // only the all-negative clause was dropped, so only all-true survives
        assert_eq!(seven.satisfying_assignments().unwrap(), [vec![true, true, true]]);
    }
}
