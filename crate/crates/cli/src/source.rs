use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::str::FromStr;

use anyhow::{anyhow, bail, Context};
use domlab_core::verifier::corpus::{ingest_corpus, Bundled, CorpusFormat};
use domlab_core::Graph;

/// Where graphs come from: `g6:<file>`, `edges:<file>` or `bundled:<name>`.
/// A bare path is read as graph6 and `-` as a file name means stdin.
#[derive(Clone, Debug)]
pub enum Source {
    File { format: CorpusFormat, path: String },
    Bundled(Bundled),
}

impl FromStr for Source {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, rest) = s.split_once(':').unwrap_or(("g6", s));
        if rest.is_empty() {
            bail!("empty source in {s:?}");
        }
        Ok(match kind {
            "g6" | "graph6" => Source::File { format: CorpusFormat::Graph6, path: rest.into() },
            "edges" => Source::File { format: CorpusFormat::EdgeList, path: rest.into() },
            "bundled" => Source::Bundled(rest.parse().map_err(|e| anyhow!("{e}"))?),
            other => bail!("unknown source kind {other:?} (expected g6, edges or bundled)"),
        })
    }
}

impl Source {
    /// Reads every graph. Graph6 lines carry their text as label; edge-list
    /// graphs are labelled with the path.
    pub fn load(&self, skip_bad: bool) -> anyhow::Result<Vec<Graph>> {
        match self {
            Source::Bundled(b) => Ok(b.load()?),
            Source::File { format, path } => {
                let reader: Box<dyn BufRead> = if path == "-" {
                    Box::new(BufReader::new(io::stdin()))
                } else {
                    Box::new(BufReader::new(File::open(path).with_context(|| format!("opening {path}"))?))
                };
                let mut ingest = ingest_corpus(reader, *format, skip_bad);
                let mut graphs = Vec::new();
                for entry in ingest.by_ref() {
                    let entry = entry.with_context(|| format!("reading {path}"))?;
                    graphs.push(match format {
                        CorpusFormat::EdgeList => entry.graph.with_label(path.clone()),
                        CorpusFormat::Graph6 => entry.graph,
                    });
                }
                for warning in ingest.warnings() {
                    eprintln!("domlab: warning: {path}: skipped {warning}");
                }
                Ok(graphs)
            }
        }
    }
}
