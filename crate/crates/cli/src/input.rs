use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use tough_core::generators::enumerate_connected;
use tough_core::graph6::{parse_graph6, write_graph6, HEADER};
use tough_core::Graph;

use crate::error::CliError;

/// One graph from the input, with its 1-based position.
#[derive(Debug, Clone)]
pub struct InputGraph {
    pub line: usize,
    pub graph6: String,
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct MalformedLine {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Stdin,
    File(PathBuf),
    /// All connected graphs on `1..=n` vertices.
    Enumerate(usize),
}

impl Source {
    pub fn describe(&self) -> String {
        match self {
            Source::Stdin => "stdin".into(),
            Source::File(p) => p.display().to_string(),
            Source::Enumerate(n) => format!("enumerate:1..={n}"),
        }
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn read_stdin() -> Result<String, CliError> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io {
        path: "stdin".into(),
        source,
    })?;
    Ok(s)
}

/// Parses graph6 text line by line. Blank lines and a bare header line are
/// skipped; graphs with no vertices count as malformed.
pub fn parse_lines(text: &str) -> (Vec<InputGraph>, Vec<MalformedLine>) {
    let mut graphs = Vec::new();
    let mut bad = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body == HEADER {
            continue;
        }
        match parse_graph6(body) {
            Ok(g) if g.n() == 0 => bad.push(MalformedLine {
                line,
                message: "graph has no vertices".into(),
            }),
            Ok(g) => graphs.push(InputGraph {
                line,
                graph6: body.strip_prefix(HEADER).unwrap_or(body).to_string(),
                graph: g,
            }),
            Err(e) => bad.push(MalformedLine {
                line,
                message: e.to_string(),
            }),
        }
    }
    (graphs, bad)
}

pub fn load(source: &Source) -> Result<(Vec<InputGraph>, Vec<MalformedLine>), CliError> {
    match source {
        Source::Stdin => Ok(parse_lines(&read_stdin()?)),
        Source::File(p) => Ok(parse_lines(&read_text(p)?)),
        Source::Enumerate(max) => {
            let mut out = Vec::new();
            for n in 1..=*max {
                for g in enumerate_connected(n)? {
                    out.push(InputGraph {
                        line: out.len() + 1,
                        graph6: write_graph6(&g)?,
                        graph: g,
                    });
                }
            }
            Ok((out, Vec::new()))
        }
    }
}
