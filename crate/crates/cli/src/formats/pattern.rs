use detold_core::grids::{GridFamily, PeriodicPattern};
use serde::{Deserialize, Serialize};

use super::FormatError;

/// On-disk form of a periodic pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternFile {
    pub family: String,
    pub p1: [i64; 2],
    pub p2: [i64; 2],
    pub detectors: Vec<[i64; 2]>,
}

impl PatternFile {
    pub fn from_pattern(p: &PeriodicPattern) -> PatternFile {
        let (p1, p2) = p.periods();
        PatternFile {
            family: p.family().name().to_string(),
            p1: [p1.0, p1.1],
            p2: [p2.0, p2.1],
            detectors: p.detectors().iter().map(|&(x, y)| [x, y]).collect(),
        }
    }

    pub fn to_pattern(&self) -> Result<PeriodicPattern, detold_core::Error> {
        let family: GridFamily = self.family.parse()?;
        let cells = self.detectors.iter().map(|&[x, y]| (x, y));
        PeriodicPattern::new(family, (self.p1[0], self.p1[1]), (self.p2[0], self.p2[1]), cells)
    }
}

pub fn parse_pattern(text: &str) -> Result<PeriodicPattern, FormatError> {
    let file: PatternFile =
        serde_json::from_str(text).map_err(|e| FormatError::new(e.line(), e.column(), e.to_string()))?;
    file.to_pattern().map_err(|e| FormatError::new(1, 1, e.to_string()))
}

pub fn write_pattern(p: &PeriodicPattern) -> String {
    let mut s = serde_json::to_string(&PatternFile::from_pattern(p)).expect("pattern serializes");
    s.push('\n');
    s
}
