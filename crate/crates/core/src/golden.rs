//! Expected variable sets stored as one expression per line.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Parses a golden file: blank lines and `#` comments are skipped, every
/// other line is an expression in `y1..yn`.
pub fn parse(text: &str, n: usize) -> Result<Vec<LaurentPoly>> {
    text.lines()
        .enumerate()
        .map(|(no, l)| (no + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(line, l)| LaurentPoly::parse(l, n).map_err(|e| Error::Parse { line, msg: e.to_string() }))
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GoldenDiff {
    pub missing: Vec<String>,
    pub unexpected: Vec<String>,
}

impl GoldenDiff {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

/// Set comparison on canonical strings.  With `exact` false only missing
/// entries count (the found set may be larger).
pub fn compare(expected: &[LaurentPoly], found: &[LaurentPoly], exact: bool) -> GoldenDiff {
    let want: BTreeSet<String> = expected.iter().map(ToString::to_string).collect();
    let have: BTreeSet<String> = found.iter().map(ToString::to_string).collect();
    GoldenDiff {
        missing: want.difference(&have).cloned().collect(),
        unexpected: if exact { have.difference(&want).cloned().collect() } else { Vec::new() },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_compare() {
        let g = parse("# header\ny1\n\n(y1 + y2)/y3  # trailing\n", 3).unwrap();
        assert_eq!(g.len(), 2);
        let found =
            vec![LaurentPoly::var(3, 0), LaurentPoly::parse("y2/y3 + y1/y3", 3).unwrap(), LaurentPoly::var(3, 2)];
        assert!(compare(&g, &found, false).is_empty());
        let d = compare(&g, &found, true);
        assert_eq!(d.unexpected, vec!["y3".to_string()]);
        assert!(matches!(parse("y1 +", 3), Err(Error::Parse { line: 1, .. })));
    }
}
