//! Tuple files: four naturals per line, `#` starts a comment.

use std::fmt;
use std::path::Path;

pub type Tuple = [u64; 4];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FixtureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for FixtureError {}

pub fn parse_tuples(text: &str) -> Result<Vec<Tuple>, FixtureError> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fail = |message: String| FixtureError { line: k + 1, message };
        let values = line
            .split_whitespace()
            .map(|w| w.parse::<u64>().map_err(|e| fail(format!("{w:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let tuple: Tuple = values
            .try_into()
            .map_err(|v: Vec<u64>| fail(format!("expected 4 naturals, found {}", v.len())))?;
        out.push(tuple);
    }
    Ok(out)
}

pub fn read_tuples(path: impl AsRef<Path>) -> std::io::Result<Vec<Tuple>> {
    let text = std::fs::read_to_string(path)?;
    parse_tuples(&text).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))
}

pub fn format_tuple(t: &Tuple) -> String {
    format!("{} {} {} {}", t[0], t[1], t[2], t[3])
}
