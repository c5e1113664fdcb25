//! Plain-text interchange format for coloured graphs.
//!
//! ```text
//! gem 8
//! c0: 1 0 3 2 5 4 7 6
//! c1: 3 2 1 0 7 6 5 4
//! c2: 7 6 5 4 3 2 1 0
//! c3: 5 4 7 6 1 0 3 2
//! label 0 1 1
//! label 1 1 2
//! ...
//! ```
//!
//! The header carries the order, the four `c<k>:` lines the involution
//! tables (0-based, single spaces), and optional `label <vertex> <j> <i>`
//! lines attach crossing-corner labels `v_{j,i}`.  Labels are all or
//! nothing: when present, every vertex must be labelled exactly once.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::ColouredGraph;
use crate::lens::VertexLabel;

/// A parsed gem file: the graph plus its optional complete labelling.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GemFile {
    pub graph: ColouredGraph,
    pub labels: Option<Vec<VertexLabel>>,
}

/// Renders a graph (and optional labels, one per vertex) in the gem text
/// format.  The output always ends with a newline.
pub fn render(graph: &ColouredGraph, labels: Option<&[VertexLabel]>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "gem {}", graph.order());
    for (k, table) in graph.tables().iter().enumerate() {
        let _ = write!(out, "c{k}:");
        for &w in table {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    if let Some(labels) = labels {
        assert_eq!(labels.len(), graph.order(), "one label per vertex");
        for (v, label) in labels.iter().enumerate() {
            let _ = writeln!(out, "label {v} {} {}", label.crossing, label.position);
        }
    }
    out
}

/// Parses the gem text format.  Trailing blank lines are tolerated; any
/// other deviation is reported with its line number.
pub fn parse(text: &str) -> Result<GemFile> {
    let mut lines = text.lines().enumerate();

    let (lineno, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let order: usize = header
        .strip_prefix("gem ")
        .and_then(|rest| rest.parse().ok())
        .ok_or_else(|| Error::Parse {
            line: lineno + 1,
            msg: format!("expected 'gem <order>', got {header:?}"),
        })?;

    let mut tables: [Vec<u32>; 4] = std::array::from_fn(|_| Vec::with_capacity(order));
    for (k, table) in tables.iter_mut().enumerate() {
        let (lineno, line) = lines.next().ok_or(Error::Parse {
            line: k + 2,
            msg: format!("missing involution line c{k}"),
        })?;
        let prefix = format!("c{k}:");
        let body = line.strip_prefix(&prefix).ok_or_else(|| Error::Parse {
            line: lineno + 1,
            msg: format!("expected {prefix:?} line, got {line:?}"),
        })?;
        for field in body.split_whitespace() {
            table.push(field.parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                msg: format!("bad vertex {field:?}"),
            })?);
        }
        if table.len() != order {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: format!(
                    "colour {k} lists {} vertices, header says {order}",
                    table.len()
                ),
            });
        }
    }
    let graph = ColouredGraph::from_involutions(tables)?;

    let mut labels: Vec<Option<VertexLabel>> = vec![None; order];
    let mut label_count = 0usize;
    for (lineno, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed = (fields.len() == 4 && fields[0] == "label")
            .then(|| {
                let v: usize = fields[1].parse().ok()?;
                let j: u32 = fields[2].parse().ok()?;
                let i: u8 = fields[3].parse().ok()?;
                Some((v, j, i))
            })
            .flatten();
        let Some((v, j, i)) = parsed else {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: format!("expected 'label <vertex> <j> <i>', got {line:?}"),
            });
        };
        if v >= order || !(1..=4).contains(&i) || j == 0 {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: format!("label out of range: {line:?}"),
            });
        }
        if labels[v].replace(VertexLabel::new(j, i)).is_some() {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: format!("vertex {v} labelled twice"),
            });
        }
        label_count += 1;
    }

    let labels = if label_count == 0 {
        None
    } else if label_count == order {
        Some(labels.into_iter().map(|l| l.expect("counted")).collect())
    } else {
        return Err(Error::BadLabels(format!(
            "{label_count} labels for {order} vertices"
        )));
    };
    Ok(GemFile { graph, labels })
}
