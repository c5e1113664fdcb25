//! A canonical code for connected 4-coloured graphs.
//!
//! Two graphs receive the same code exactly when one can be carried to the
//! other by relabelling vertices and permuting colours.  The code is the
//! lexicographically smallest rendering of the involution tables over all
//! `24` colour permutations and all breadth-first vertex numberings (one per
//! start vertex), so it doubles as a total order on isomorphism classes.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{ColouredGraph, COLOURS};

/// Canonical code string of a graph: `"<n>|<t0>|<t1>|<t2>|<t3>"` where `n`
/// is the order and `tk` is the comma-separated involution table of the
/// `k`-th colour after canonical renumbering.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GemCode(String);

impl GemCode {
    /// Parses and validates a code string (any valid rendering of a
    /// connected coloured graph is accepted, canonical or not).
    pub fn parse(text: &str) -> Result<Self> {
        let g = parse_tables(text)?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(Self(text.to_owned()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Rebuilds the graph the code describes.
    pub fn to_graph(&self) -> ColouredGraph {
        parse_tables(&self.0).expect("codes are validated on construction")
    }
}

impl std::fmt::Display for GemCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn parse_tables(text: &str) -> Result<ColouredGraph> {
    let fields: Vec<&str> = text.split('|').collect();
    if fields.len() != 5 {
        return Err(Error::Parse {
            line: 1,
            msg: format!("code has {} '|'-fields, expected 5", fields.len()),
        });
    }
    let n: usize = fields[0].parse().map_err(|_| Error::Parse {
        line: 1,
        msg: format!("bad order {:?}", fields[0]),
    })?;
    let mut tables: [Vec<u32>; 4] = std::array::from_fn(|_| Vec::with_capacity(n));
    for (k, field) in fields[1..].iter().enumerate() {
        for part in field.split(',') {
            tables[k].push(part.parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("bad table entry {part:?} in colour {k}"),
            })?);
        }
    }
    ColouredGraph::from_involutions(tables)
}

/// Computes the canonical code of a connected graph.
pub fn canonical_code(g: &ColouredGraph) -> Result<GemCode> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let mut best: Option<String> = None;
    let mut number = vec![u32::MAX; n];
    let mut sequence: Vec<u32> = Vec::with_capacity(n);
    let mut candidate = String::new();

    for perm in colour_permutations() {
        for start in 0..n as u32 {
            number.fill(u32::MAX);
            sequence.clear();
            number[start as usize] = 0;
            sequence.push(start);
            let mut head = 0;
            while head < sequence.len() {
                let u = sequence[head];
                head += 1;
                for &c in &perm {
                    let w = g.neighbour(u, c);
                    if number[w as usize] == u32::MAX {
                        number[w as usize] = sequence.len() as u32;
                        sequence.push(w);
                    }
                }
            }
            debug_assert_eq!(sequence.len(), n, "connected graphs are fully numbered");

            candidate.clear();
            let _ = write!(candidate, "{n}");
            for &c in &perm {
                candidate.push('|');
                for (i, &old) in sequence.iter().enumerate() {
                    if i > 0 {
                        candidate.push(',');
                    }
                    let image = number[g.neighbour(old, c) as usize];
                    let _ = write!(candidate, "{image}");
                }
            }
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate.clone());
            }
        }
    }
    Ok(GemCode(best.expect("at least one candidate rendered")))
}

/// All 24 permutations of the colours, in lexicographic order.
fn colour_permutations() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in COLOURS {
        for b in COLOURS {
            if b == a {
                continue;
            }
            for c in COLOURS {
                if c == a || c == b {
                    continue;
                }
                let d = 6 - a - b - c;
                out.push([a, b, c, d]);
            }
        }
    }
    out
}
