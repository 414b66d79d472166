//! Graph streams: graph6 or edge-list input, and the bundled corpora.

use std::fmt;
use std::io::{self, BufRead};
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

use crate::canon::enumerate_graphs;
use crate::generators::{complete_multipartite, cycle, path, star, three_stars_triangle};
use crate::graph::Graph;
use crate::io::{parse_edge_list, parse_graph6, to_graph6, EdgeListError, Graph6Error};

/// Environment variable naming a directory that replaces the embedded
/// enumerated corpora (`n7c.g6`, `n6.g6`).
pub const CORPUS_DIR_ENV: &str = "DOMLAB_CORPUS_DIR";

const N7C: &str = include_str!("../../corpus/n7c.g6");
const N6: &str = include_str!("../../corpus/n6.g6");

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("line {line}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
    #[error("reading corpus")]
    Io(#[from] io::Error),
    #[error("unknown bundled corpus {0:?} (expected one of {list})", list = Bundled::NAMES.join(", "))]
    UnknownBundled(String),
    #[error("{path}", path = path.display())]
    File { path: PathBuf, source: io::Error },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusFormat {
    /// One graph per line; blank lines are skipped.
    Graph6,
    /// The whole source is a single graph.
    EdgeList,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    /// 1-based source line (for edge lists, the first line).
    pub line: usize,
    pub graph: Graph,
}

/// Lazy reader over a graph source. With `skip_bad`, malformed lines are
/// recorded in [`Ingest::warnings`] instead of being yielded as errors.
pub struct Ingest<R> {
    lines: io::Lines<R>,
    format: CorpusFormat,
    skip_bad: bool,
    line: usize,
    done: bool,
    warnings: Vec<String>,
}

impl<R> Ingest<R> {
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

pub fn ingest_corpus<R: BufRead>(reader: R, format: CorpusFormat, skip_bad: bool) -> Ingest<R> {
    Ingest { lines: reader.lines(), format, skip_bad, line: 0, done: false, warnings: Vec::new() }
}

impl<R: BufRead> Ingest<R> {
    fn next_graph6(&mut self) -> Option<Result<CorpusEntry, CorpusError>> {
        loop {
            let text = match self.lines.next()? {
                Ok(text) => text,
                Err(e) => return Some(Err(e.into())),
            };
            self.line += 1;
            let trimmed = text.trim();
            if trimmed.is_empty() {
                continue;
            }
            match parse_graph6(trimmed) {
                Ok(g) => return Some(Ok(CorpusEntry { line: self.line, graph: g.with_label(trimmed) })),
                Err(source) => {
                    if self.skip_bad {
                        self.warnings.push(format!("line {}: {source}", self.line));
                        continue;
                    }
                    return Some(Err(CorpusError::Graph6 { line: self.line, source }));
                }
            }
        }
    }

    fn next_edge_list(&mut self) -> Option<Result<CorpusEntry, CorpusError>> {
        if self.done {
            return None;
        }
        self.done = true;
        let mut text = String::new();
        for line in self.lines.by_ref() {
            match line {
                Ok(l) => {
                    text.push_str(&l);
                    text.push('\n');
                }
                Err(e) => return Some(Err(e.into())),
            }
        }
        if text.trim().is_empty() {
            return None;
        }
        match parse_edge_list(&text) {
            Ok(g) => Some(Ok(CorpusEntry { line: 1, graph: g })),
            Err(e) if self.skip_bad => {
                self.warnings.push(e.to_string());
                None
            }
            Err(e) => Some(Err(e.into())),
        }
    }
}

impl<R: BufRead> Iterator for Ingest<R> {
    type Item = Result<CorpusEntry, CorpusError>;

    fn next(&mut self) -> Option<Self::Item> {
        match self.format {
            CorpusFormat::Graph6 => self.next_graph6(),
            CorpusFormat::EdgeList => self.next_edge_list(),
        }
    }
}

/// The corpora shipped with the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bundled {
    /// Connected graphs on 1..=7 vertices, one per isomorphism class (996).
    N7c,
    /// Connected graphs on 1..=6 vertices (143).
    N6c,
    /// All graphs on 1..=6 vertices (208).
    N6,
    /// All graphs on 1..=5 vertices (52).
    N5,
    /// `P1 ..= P14`.
    Paths,
    /// `C3 ..= C14`.
    Cycles,
    /// Stars `K1,2 ..= K1,6`, `three_stars_triangle(2..=4)` and `K3,3,3`.
    Named,
}

impl Bundled {
    pub const ALL: [Bundled; 7] =
        [Bundled::N7c, Bundled::N6c, Bundled::N6, Bundled::N5, Bundled::Paths, Bundled::Cycles, Bundled::Named];
    pub const NAMES: [&'static str; 7] = ["n7c", "n6c", "n6", "n5", "paths", "cycles", "named"];

    pub fn name(self) -> &'static str {
        Self::NAMES[Self::ALL.iter().position(|&b| b == self).expect("listed")]
    }

    /// Loads the corpus, reading the enumerated ones from
    /// `$DOMLAB_CORPUS_DIR` when that variable is set.
    pub fn load(self) -> Result<Vec<Graph>, CorpusError> {
        Ok(match self {
            Bundled::N7c => parse_embedded("n7c", N7C)?,
            Bundled::N6 => parse_embedded("n6", N6)?,
            Bundled::N6c => Bundled::N6.load()?.into_iter().filter(Graph::is_connected).collect(),
            Bundled::N5 => Bundled::N6.load()?.into_iter().filter(|g| g.n() <= 5).collect(),
            Bundled::Paths => (1..=14).map(|n| path(n).expect("valid order")).collect(),
            Bundled::Cycles => (3..=14).map(|n| cycle(n).expect("valid order")).collect(),
            Bundled::Named => (2..=6)
                .map(|p| star(p).expect("valid order"))
                .chain((2..=4).map(|p| three_stars_triangle(p).expect("valid order")))
                .chain(std::iter::once(complete_multipartite(&[3, 3, 3]).expect("valid parts")))
                .collect(),
        })
    }
}

impl fmt::Display for Bundled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Bundled {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::NAMES
            .iter()
            .position(|&n| n == s)
            .map(|i| Self::ALL[i])
            .ok_or_else(|| CorpusError::UnknownBundled(s.to_string()))
    }
}

fn parse_embedded(name: &str, embedded: &str) -> Result<Vec<Graph>, CorpusError> {
    let text = match std::env::var_os(CORPUS_DIR_ENV) {
        Some(dir) => {
            let path = PathBuf::from(dir).join(format!("{name}.g6"));
            std::fs::read_to_string(&path).map_err(|source| CorpusError::File { path, source })?
        }
        None => embedded.to_string(),
    };
    ingest_corpus(text.as_bytes(), CorpusFormat::Graph6, false).map(|entry| entry.map(|e| e.graph)).collect()
}

/// graph6 lines of one representative per isomorphism class on
/// `min_n..=max_n` vertices, connected ones only if asked, in order of
/// order and canonical code. This is how the embedded corpora were made.
pub fn enumerated_corpus_text(min_n: usize, max_n: usize, connected_only: bool) -> String {
    enumerate_graphs(max_n)
        .into_iter()
        .skip(min_n)
        .flatten()
        .filter(|g| !connected_only || g.is_connected())
        .map(|g| to_graph6(&g).expect("small graph") + "\n")
        .collect()
}
