use detold_core::reduction::{Label, Owner, ReductionArtifact, Role};
use serde::{Deserialize, Serialize};

use super::FormatError;

/// Sidecar describing every vertex of a reduction instance. Variable and
/// clause numbers are 1-based, as in DIMACS.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoleMap {
    pub num_vars: usize,
    pub num_clauses: usize,
    pub k: usize,
    pub roles: Vec<RoleEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum RoleEntry {
    Literal { vertex: usize, var: usize, positive: bool },
    Gadget { vertex: usize, block: String, label: String },
    Clause { vertex: usize, clause: usize },
}

impl RoleMap {
    pub fn from_artifact(art: &ReductionArtifact) -> RoleMap {
        let roles = art
            .roles
            .iter()
            .enumerate()
            .map(|(vertex, r)| match *r {
                Role::Literal { var, positive } => RoleEntry::Literal { vertex, var: var + 1, positive },
                Role::Gadget { owner, label } => {
                    let block = match owner {
                        Owner::Variable(i) => format!("F{}", i + 1),
                        Owner::Clause(j) => format!("H{}", j + 1),
                    };
                    RoleEntry::Gadget { vertex, block, label: label.to_string() }
                }
                Role::Clause(j) => RoleEntry::Clause { vertex, clause: j + 1 },
            })
            .collect();
        RoleMap { num_vars: art.instance.num_vars(), num_clauses: art.instance.clauses().len(), k: art.k, roles }
    }

    /// Roles indexed by vertex. Entries must list vertices `0..n` in order.
    pub fn to_roles(&self) -> Result<Vec<Role>, String> {
        self.roles
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let (vertex, role) = match e {
                    RoleEntry::Literal { vertex, var, positive } => {
                        (*vertex, Role::Literal { var: one_based(*var, "var")?, positive: *positive })
                    }
                    RoleEntry::Gadget { vertex, block, label } => {
                        let mut chars = label.chars();
                        let label = match (chars.next().and_then(Label::from_char), chars.next()) {
                            (Some(l), None) => l,
                            _ => return Err(format!("vertex {vertex}: bad gadget label {label:?}")),
                        };
                        let idx = |s: &str| s.parse::<usize>().map_err(|_| format!("bad block {block:?}")).and_then(|k| one_based(k, "block"));
                        let owner = match block.split_at(block.len().min(1)) {
                            ("F", rest) => Owner::Variable(idx(rest)?),
                            ("H", rest) => Owner::Clause(idx(rest)?),
                            _ => return Err(format!("vertex {vertex}: bad block {block:?}")),
                        };
                        (*vertex, Role::Gadget { owner, label })
                    }
                    RoleEntry::Clause { vertex, clause } => (*vertex, Role::Clause(one_based(*clause, "clause")?)),
                };
                if vertex != i {
                    return Err(format!("entry {i} describes vertex {vertex}"));
                }
                Ok(role)
            })
            .collect()
    }
}

fn one_based(k: usize, what: &str) -> Result<usize, String> {
    k.checked_sub(1).ok_or_else(|| format!("{what} numbers start at 1"))
}

pub fn parse_role_map(text: &str) -> Result<RoleMap, FormatError> {
    let map: RoleMap = serde_json::from_str(text).map_err(|e| FormatError::new(e.line(), e.column(), e.to_string()))?;
    map.to_roles().map_err(|e| FormatError::new(1, 1, e))?;
    Ok(map)
}

pub fn write_role_map(map: &RoleMap) -> String {
    let mut s = serde_json::to_string_pretty(map).expect("role map serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use detold_core::reduction::{build_instance, Literal, SatInstance};

    #[test]
    fn round_trip() {
        let phi = SatInstance::new(3, vec![[Literal::pos(0), Literal::neg(1), Literal::pos(2)]]).unwrap();
        let art = build_instance(&phi).unwrap();
        let map = RoleMap::from_artifact(&art);
        let back = parse_role_map(&write_role_map(&map)).unwrap();
        assert_eq!(back, map);
        assert_eq!(back.to_roles().unwrap(), art.roles);
        assert_eq!(map.roles[25], RoleEntry::Clause { vertex: 25, clause: 1 });
    }
}
