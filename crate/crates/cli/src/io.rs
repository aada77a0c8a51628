//! graph6 files: one graph per line, blank lines ignored, an optional
//! `>>graph6<<` header on any line.

use std::fmt;
use std::fs;
use std::io::{self, Read};
use std::path::Path;

use pathpower_core::{graph6, Error, Graph};

/// A graph6 line that failed to parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    /// 1-based line number.
    pub line: usize,
    pub error: Error,
}

impl fmt::Display for LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.error)
    }
}

impl std::error::Error for LineError {}

pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, LineError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| graph6::decode(l.trim_end()).map_err(|error| LineError { line: i + 1, error }))
        .collect()
}

/// Reads a whole file, or stdin for `-`.
pub fn read_text(path: &Path) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

pub fn write_graph6_lines(path: &Path, graphs: &[Graph]) -> io::Result<()> {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&graph6::encode(g));
        out.push('\n');
    }
    fs::write(path, out)
}
