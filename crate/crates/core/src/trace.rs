//! The log of contractions performed by the kernelizer.
//!
//! Each step keeps enough to move a cover in either direction: `preimage`
//! sends an edge of the new hypergraph to the edge it came from, `image`
//! sends an old edge to the (possibly merged) new edge.
//!
//! Text form, one line per step, all indices 1-based:
//!
//! ```text
//! g <|S|> <fresh> : <S members> ; <post>:<pre> <post>:<pre> ...
//! r <|X|> : <X members>
//! ```

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Cover, Hypergraph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupStep {
    /// `S`, in the identifiers of the hypergraph before the step.
    pub grouped: VertexSet,
    /// Identifier of the contracted vertex after compaction.
    pub fresh: u32,
    /// Pre-step identifier of each post-step vertex (`n + 1` for the fresh one).
    pub renaming: Vec<u32>,
    pub preimage: Vec<usize>,
    pub image: Vec<usize>,
}

/// Removal of the common intersection; edge indices are unchanged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReduceStep {
    pub removed: VertexSet,
    pub renaming: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TraceStep {
    Group(GroupStep),
    Reduce(ReduceStep),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GroupTrace {
    pub steps: Vec<TraceStep>,
}

impl GroupTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push_step(&mut self, step: TraceStep) {
        self.steps.push(step);
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Re-applies every step to `original`.
    pub fn replay(&self, original: &Hypergraph) -> Result<Hypergraph> {
        let mut h = original.clone();
        for step in &self.steps {
            h = match step {
                TraceStep::Group(g) => h.group(&g.grouped)?.hypergraph,
                TraceStep::Reduce(_) => h.reduce()?.hypergraph,
            };
        }
        Ok(h)
    }

    /// Maps a cover of the final hypergraph back to the original, edge by
    /// edge through the recorded preimages. Cardinality is preserved.
    pub fn lift(&self, cover: &Cover) -> Cover {
        let mut idx = cover.indices().to_vec();
        for step in self.steps.iter().rev() {
            if let TraceStep::Group(g) = step {
                for i in &mut idx {
                    *i = g.preimage[*i];
                }
            }
        }
        Cover::from_iter_dedup(idx)
    }

    /// Maps a cover of the original forward. Merged edges can only shrink it.
    pub fn push(&self, cover: &Cover) -> Cover {
        let mut idx = cover.indices().to_vec();
        for step in &self.steps {
            if let TraceStep::Group(g) = step {
                for i in &mut idx {
                    *i = g.image[*i];
                }
            }
        }
        Cover::from_iter_dedup(idx)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            match step {
                TraceStep::Group(g) => {
                    write!(out, "g {} {} :", g.grouped.len(), g.fresh).unwrap();
                    for v in g.grouped.iter() {
                        write!(out, " {v}").unwrap();
                    }
                    out.push_str(" ;");
                    for (post, pre) in g.preimage.iter().enumerate() {
                        write!(out, " {}:{}", post + 1, pre + 1).unwrap();
                    }
                }
                TraceStep::Reduce(r) => {
                    write!(out, "r {} :", r.removed.len()).unwrap();
                    for v in r.removed.iter() {
                        write!(out, " {v}").unwrap();
                    }
                }
            }
            out.push('\n');
        }
        out
    }

    /// Parses a trace and replays it on `original`, rejecting any line whose
    /// recorded fresh vertex or preimage pairs disagree with the replay.
    /// Returns the trace and the final hypergraph.
    pub fn parse(text: &str, original: &Hypergraph) -> Result<(GroupTrace, Hypergraph)> {
        let mut h = original.clone();
        let mut trace = GroupTrace::new();
        for (lineno, line) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let bad = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
            let line = line.trim();
            if line.is_empty() || line == "c" || line.starts_with("c ") {
                continue;
            }
            let (head, rest) = line.split_once(':').ok_or_else(|| bad("missing ':'"))?;
            let head: Vec<&str> = head.split_whitespace().collect();
            match head.as_slice() {
                ["g", count, fresh] => {
                    let (members, pairs) = rest.split_once(';').ok_or_else(|| bad("missing ';'"))?;
                    let set = parse_members(members, count).ok_or_else(|| bad("bad grouped set"))?;
                    let fresh: u32 = fresh.parse().map_err(|_| bad("bad fresh vertex"))?;
                    let mut preimage = Vec::new();
                    for pair in pairs.split_whitespace() {
                        let (post, pre) = pair.split_once(':').ok_or_else(|| bad("bad preimage pair"))?;
                        let post: usize = post.parse().map_err(|_| bad("bad preimage pair"))?;
                        let pre: usize = pre.parse().map_err(|_| bad("bad preimage pair"))?;
                        if post != preimage.len() + 1 || pre == 0 {
                            return Err(bad("preimage pairs out of order"));
                        }
                        preimage.push(pre - 1);
                    }
                    let grouped = h.group(&set)?;
                    if grouped.step.fresh != fresh || grouped.step.preimage != preimage {
                        return Err(bad("step disagrees with replay"));
                    }
                    h = grouped.hypergraph;
                    trace.push_step(TraceStep::Group(grouped.step));
                }
                ["r", count] => {
                    let set = parse_members(rest, count).ok_or_else(|| bad("bad removed set"))?;
                    let reduced = h.reduce()?;
                    if reduced.removed != set {
                        return Err(bad("step disagrees with replay"));
                    }
                    h = reduced.hypergraph;
                    trace.push_step(TraceStep::Reduce(ReduceStep {
                        removed: reduced.removed,
                        renaming: reduced.renaming,
                    }));
                }
                _ => return Err(bad("expected 'g' or 'r' step")),
            }
        }
        Ok((trace, h))
    }
}

fn parse_members(text: &str, count: &str) -> Option<VertexSet> {
    let count: usize = count.parse().ok()?;
    let members: Vec<u32> = text.split_whitespace().map(|t| t.parse().ok()).collect::<Option<_>>()?;
    (members.len() == count).then_some(())?;
    VertexSet::from_ascending(members)
}
