use std::path::Path;

use super::enumerate::enumerate_connected_graphs;
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};

/// A named list of graphs to sweep, plus the lines that failed to parse.
#[derive(Debug, Clone, PartialEq)]
pub struct Corpus {
    /// Single token (no whitespace), used in report headers.
    pub description: String,
    pub graphs: Vec<Graph>,
    /// `(1-based line number, error)` for every rejected input line.
    pub malformed: Vec<(usize, Error)>,
}

impl Corpus {
    pub fn from_graphs(description: &str, graphs: Vec<Graph>) -> Self {
        Corpus {
            description: token(description),
            graphs,
            malformed: Vec::new(),
        }
    }

    /// Connected graphs of order exactly `n` (1 ≤ n ≤ 7), one per class.
    pub fn builtin(n: usize, workers: usize) -> Result<Self> {
        let graphs = enumerate_connected_graphs(n, workers)?;
        Ok(Corpus::from_graphs(&format!("connected-n{n}"), graphs))
    }

    /// Connected graphs of every order `1..=n`.
    pub fn builtin_up_to(n: usize, workers: usize) -> Result<Self> {
        let mut graphs = Vec::new();
        for k in 1..=n {
            graphs.extend(enumerate_connected_graphs(k, workers)?);
        }
        Ok(Corpus::from_graphs(&format!("connected-n1..{n}"), graphs))
    }

    /// Parses graph6 text, one graph per line. Blank lines are skipped; bad
    /// lines are recorded and do not stop the scan.
    pub fn from_graph6_text(description: &str, text: &str) -> Self {
        let mut graphs = Vec::new();
        let mut malformed = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            match parse_graph6(line) {
                Ok(g) => graphs.push(g),
                Err(e) => malformed.push((i + 1, e)),
            }
        }
        Corpus {
            description: token(description),
            graphs,
            malformed,
        }
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

/// Reads a graph6 file into a corpus named after the path.
pub fn ingest_graph6(path: impl AsRef<Path>) -> Result<Corpus> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    Ok(Corpus::from_graph6_text(&path.display().to_string(), &text))
}

fn token(s: &str) -> String {
    let t: String = s.chars().map(|c| if c.is_whitespace() { '_' } else { c }).collect();
    if t.is_empty() {
        "-".to_string()
    } else {
        t
    }
}
