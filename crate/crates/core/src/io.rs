//! Line-oriented text formats and their JSON mirrors.
//!
//! Hypergraph (`.hg`):
//!
//! ```text
//! c optional comment
//! p hg <n> <m>
//! e <v1> <v2> ...        (exactly m lines, ascending, 1-based; bare "e" is the empty edge)
//! ```
//!
//! Cover certificate:
//!
//! ```text
//! s cover <count>
//! i <edge-index>         (one per chosen edge, 1-based)
//! ```
//!
//! or `s no-cover`, optionally followed by `c k=<k>` naming the budget that
//! was refuted.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Cover, Hypergraph, VertexSet};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn is_comment(line: &str) -> bool {
    line == "c" || line.starts_with("c ")
}

/// Comment bodies of a text file, in order.
pub fn comments(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| is_comment(l)).map(|l| l.get(2..).unwrap_or(""))
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || is_comment(line) {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(lineno, "duplicate header"));
                }
                let fields: Vec<&str> = tokens.collect();
                let [kind, n, m] = fields.as_slice() else {
                    return Err(parse_err(lineno, "malformed header, expected 'p hg <n> <m>'"));
                };
                if *kind != "hg" {
                    return Err(parse_err(lineno, format!("expected format 'hg', found '{kind}'")));
                }
                let n = n.parse().map_err(|_| parse_err(lineno, "malformed vertex count"))?;
                let m = m.parse().map_err(|_| parse_err(lineno, "malformed edge count"))?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, m) = header.ok_or_else(|| parse_err(lineno, "edge before header"))?;
                if edges.len() == m {
                    return Err(parse_err(lineno, format!("more than {m} edges")));
                }
                let mut edge: Vec<u32> = Vec::new();
                for tok in tokens {
                    let v: u32 = tok.parse().map_err(|_| parse_err(lineno, format!("bad vertex '{tok}'")))?;
                    if v == 0 || v as usize > n {
                        return Err(parse_err(lineno, format!("vertex {v} out of range 1..={n}")));
                    }
                    if edge.last().is_some_and(|&last| last >= v) {
                        return Err(parse_err(lineno, "vertices must be strictly ascending"));
                    }
                    edge.push(v);
                }
                edges.push(VertexSet::from_ascending(edge).expect("checked ascending"));
            }
            Some(other) => return Err(parse_err(lineno, format!("unexpected line type '{other}'"))),
            None => unreachable!(),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing header"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    Hypergraph::from_sets(n, edges)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::with_capacity(16 + 4 * h.size() + 3 * h.m());
    writeln!(out, "p hg {} {}", h.n(), h.m()).unwrap();
    for e in h.edges() {
        out.push('e');
        for v in e.iter() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Cover(Cover),
    NoCover { k: Option<usize> },
}

pub fn write_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    match cert {
        Certificate::Cover(c) => {
            writeln!(out, "s cover {}", c.len()).unwrap();
            for i in c.indices() {
                writeln!(out, "i {}", i + 1).unwrap();
            }
        }
        Certificate::NoCover { k } => {
            out.push_str("s no-cover\n");
            if let Some(k) = k {
                writeln!(out, "c k={k}").unwrap();
            }
        }
    }
    out
}

pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let mut status: Option<Option<usize>> = None; // Some(Some(count)) = cover, Some(None) = no-cover
    let mut indices = Vec::new();
    let mut k = None;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if is_comment(line) {
            if let Some(v) = line[1..].trim().strip_prefix("k=") {
                k = Some(v.parse().map_err(|_| parse_err(lineno, "bad k comment"))?);
            }
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["s", "cover", count] if status.is_none() => {
                let count = count.parse().map_err(|_| parse_err(lineno, "bad count"))?;
                status = Some(Some(count));
            }
            ["s", "no-cover"] if status.is_none() => status = Some(None),
            ["i", idx] if matches!(status, Some(Some(_))) => {
                let idx: usize = idx.parse().map_err(|_| parse_err(lineno, "bad edge index"))?;
                if idx == 0 {
                    return Err(parse_err(lineno, "edge indices are 1-based"));
                }
                indices.push(idx - 1);
            }
            _ => return Err(parse_err(lineno, format!("unexpected line '{line}'"))),
        }
    }
    match status {
        None => Err(parse_err(0, "missing 's' status line")),
        Some(None) => Ok(Certificate::NoCover { k }),
        Some(Some(count)) => {
            if count != indices.len() {
                return Err(parse_err(0, format!("status declares {count} edges, found {}", indices.len())));
            }
            Ok(Certificate::Cover(Cover::new(indices)?))
        }
    }
}

#[derive(Debug, Serialize)]
pub struct HypergraphJson<'a> {
    pub p: &'static str,
    pub n: usize,
    pub m: usize,
    pub e: &'a [VertexSet],
}

impl<'a> From<&'a Hypergraph> for HypergraphJson<'a> {
    fn from(h: &'a Hypergraph) -> Self {
        Self { p: "hg", n: h.n(), m: h.m(), e: h.edges() }
    }
}

#[derive(Debug, Serialize)]
pub struct CertificateJson {
    pub s: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        match c {
            Certificate::Cover(c) => {
                Self { s: "cover", count: Some(c.len()), i: Some(c.indices().iter().map(|i| i + 1).collect()), k: None }
            }
            Certificate::NoCover { k } => Self { s: "no-cover", count: None, i: None, k: *k },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const RUNNING: &str = "p hg 4 3\ne 1 2\ne 2 3\ne 3 4\n";

    #[test]
    fn parses_running_example() {
        let h = parse_hypergraph(&format!("c the running example\n{RUNNING}")).unwrap();
        assert_eq!(h, Hypergraph::new(4, vec![vec![1, 2], vec![2, 3], vec![3, 4]]).unwrap());
    }

    #[test]
    fn empty_edge_line() {
        let h = parse_hypergraph("p hg 1 1\ne\n").unwrap();
        assert_eq!(h.n(), 1);
        assert_eq!(h.m(), 1);
        assert!(h.edge(0).is_empty());
        assert_eq!(write_hypergraph(&h), "p hg 1 1\ne\n");
    }

    #[test]
    fn canonical_round_trip() {
        assert_eq!(write_hypergraph(&parse_hypergraph(RUNNING).unwrap()), RUNNING);
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "p hg 4\ne 1\n",
            "p cnf 4 1\ne 1\n",
            "p hg 4 1\ne 5\n",
            "p hg 4 1\ne 2 1\n",
            "p hg 4 1\ne 2 2\n",
            "p hg 4 2\ne 1\n",
            "e 1\np hg 4 1\n",
            "p hg 4 1\ne 1\ne 2\n",
            "p hg 4 1\nx 1\n",
            "",
        ] {
            assert!(parse_hypergraph(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn certificate_round_trip() {
        let cert = Certificate::Cover(Cover::new(vec![0, 2]).unwrap());
        let text = write_certificate(&cert);
        assert_eq!(text, "s cover 2\ni 1\ni 3\n");
        assert_eq!(parse_certificate(&text).unwrap(), cert);

        let no = Certificate::NoCover { k: Some(1) };
        assert_eq!(write_certificate(&no), "s no-cover\nc k=1\n");
        assert_eq!(parse_certificate(&write_certificate(&no)).unwrap(), no);
    }

    #[test]
    fn certificate_rejects_mismatch() {
        assert!(parse_certificate("s cover 2\ni 1\n").is_err());
        assert!(parse_certificate("i 1\n").is_err());
        assert!(parse_certificate("s cover 1\ni 0\n").is_err());
        assert!(parse_certificate("s cover 2\ni 1\ni 1\n").is_err());
    }

    #[test]
    fn json_mirrors_text_fields() {
        let h = parse_hypergraph(RUNNING).unwrap();
        let json = serde_json::to_string(&HypergraphJson::from(&h)).unwrap();
        assert_eq!(json, r#"{"p":"hg","n":4,"m":3,"e":[[1,2],[2,3],[3,4]]}"#);
        let c = Certificate::Cover(Cover::new(vec![0, 2]).unwrap());
        let json = serde_json::to_string(&CertificateJson::from(&c)).unwrap();
        assert_eq!(json, r#"{"s":"cover","count":2,"i":[1,3]}"#);
    }
}
