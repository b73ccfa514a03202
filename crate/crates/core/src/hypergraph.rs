//! Value-semantics hypergraphs over vertices `1..=n`.
//!
//! Edges are strictly ascending identifier lists, so every set operation is a
//! linear merge. Empty edges and repeated edges are legal values; `dedupe`
//! removes repeats when a caller needs set semantics.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trace::GroupStep;

/// A strictly ascending list of vertex identifiers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<u32>);

impl VertexSet {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Sorts and removes repeats.
    pub fn new(mut vertices: Vec<u32>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Self(vertices)
    }

    /// `1..=n`.
    pub fn full(n: usize) -> Self {
        Self((1..=n as u32).collect())
    }

    /// Accepts the list only if it is already strictly ascending.
    pub fn from_ascending(vertices: Vec<u32>) -> Option<Self> {
        vertices.windows(2).all(|w| w[0] < w[1]).then_some(Self(vertices))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for &x in &self.0 {
            for &y in it.by_ref() {
                match y.cmp(&x) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn is_proper_subset(&self, other: &VertexSet) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(self.len().min(other.len()));
        while i < self.len() && j < other.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        VertexSet(out)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(self.len() + other.len());
        while i < self.len() && j < other.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        VertexSet(out)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut j = 0;
        let mut out = Vec::with_capacity(self.len());
        for &x in &self.0 {
            while j < other.len() && other.0[j] < x {
                j += 1;
            }
            if j >= other.len() || other.0[j] != x {
                out.push(x);
            }
        }
        VertexSet(out)
    }

    pub fn with(&self, v: u32) -> VertexSet {
        match self.0.binary_search(&v) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut out = self.0.clone();
                out.insert(pos, v);
                VertexSet(out)
            }
        }
    }

    pub(crate) fn to_bits(&self, n: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(n + 1);
        for v in self.iter() {
            bits.insert(v as usize);
        }
        bits
    }

    pub(crate) fn from_bits(bits: &FixedBitSet) -> VertexSet {
        VertexSet(bits.ones().map(|v| v as u32).collect())
    }
}

impl From<Vec<u32>> for VertexSet {
    fn from(v: Vec<u32>) -> Self {
        VertexSet::new(v)
    }
}

impl<const N: usize> From<[u32; N]> for VertexSet {
    fn from(v: [u32; N]) -> Self {
        VertexSet::new(v.to_vec())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// `H = (V, E)` with `V = {1, ..., n}` and an ordered edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

/// Output of [`Hypergraph::reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    pub hypergraph: Hypergraph,
    /// `X`, the common intersection of all edges, in the input's identifiers.
    pub removed: VertexSet,
    /// Original identifier of every surviving vertex; entry `i` is new vertex `i + 1`.
    pub renaming: Vec<u32>,
}

/// Output of [`Hypergraph::group`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grouped {
    pub hypergraph: Hypergraph,
    pub step: GroupStep,
}

impl Hypergraph {
    /// Validates ranges and normalizes each edge to ascending order.
    pub fn new(n: usize, edges: Vec<Vec<u32>>) -> Result<Self> {
        let edges = edges.into_iter().map(VertexSet::new).collect();
        Self::from_sets(n, edges)
    }

    pub fn from_sets(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        for e in &edges {
            if let Some(&v) = e.as_slice().iter().find(|&&v| v == 0 || v as usize > n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(Self { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &VertexSet {
        &self.edges[i]
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `||H||`, the summed edge cardinalities (repeats counted).
    pub fn size(&self) -> usize {
        self.edges.iter().map(VertexSet::len).sum()
    }

    /// Index of the first edge equal to `V`, if any.
    pub fn full_edge(&self) -> Option<usize> {
        self.edges.iter().position(|e| e.len() == self.n)
    }

    pub fn common_intersection(&self) -> Option<VertexSet> {
        let (first, rest) = self.edges.split_first()?;
        Some(rest.iter().fold(first.clone(), |acc, e| acc.intersection(e)))
    }

    pub fn is_reduced(&self) -> bool {
        self.common_intersection().is_some_and(|x| x.is_empty())
    }

    /// Removes `X = ∩E` from every edge and compacts the surviving
    /// identifiers to `1..=n - |X|`. Edge order and count are unchanged.
    pub fn reduce(&self) -> Result<Reduced> {
        let removed = self.common_intersection().ok_or(Error::EdgelessReduce)?;
        let renaming: Vec<u32> = self.vertex_set().difference(&removed).into_vec();
        let mut new_id = vec![0u32; self.n + 1];
        for (i, &old) in renaming.iter().enumerate() {
            new_id[old as usize] = i as u32 + 1;
        }
        let edges = self
            .edges
            .iter()
            .map(|e| VertexSet(e.difference(&removed).iter().map(|v| new_id[v as usize]).collect()))
            .collect();
        Ok(Reduced { hypergraph: Hypergraph { n: renaming.len(), edges }, removed, renaming })
    }

    /// Vertex `i` of the dual is edge `i` of `self`; dual edge `j` lists
    /// the edges containing vertex `j`.
    pub fn dual(&self) -> Hypergraph {
        let mut stars = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for v in e.iter() {
                stars[v as usize - 1].push(i as u32 + 1);
            }
        }
        Hypergraph { n: self.m(), edges: stars.into_iter().map(VertexSet).collect() }
    }

    /// Drops repeated edges, keeping first occurrences. Returns the map from
    /// old edge index to new edge index.
    pub fn dedupe(&self) -> (Hypergraph, Vec<usize>) {
        let mut seen = std::collections::HashMap::new();
        let mut edges = Vec::new();
        let mut image = Vec::with_capacity(self.m());
        for e in &self.edges {
            let idx = *seen.entry(e.clone()).or_insert_with(|| {
                edges.push(e.clone());
                edges.len() - 1
            });
            image.push(idx);
        }
        (Hypergraph { n: self.n, edges }, image)
    }

    /// Contracts `S` into one fresh vertex.
    ///
    /// Edges missing part of `S` lose `S`; edges containing `S` lose it and
    /// gain the fresh vertex. The fresh vertex is `n + 1` before the
    /// surviving identifiers are compacted, so it always ends up as the
    /// largest identifier. Repeated result edges are merged, keeping the
    /// smallest preimage.
    pub fn group(&self, set: &VertexSet) -> Result<Grouped> {
        if set.is_empty() || set.iter().any(|v| v == 0 || v as usize > self.n) {
            return Err(Error::InvalidGroupSet);
        }
        let fresh_old = self.n as u32 + 1;
        let mut renaming: Vec<u32> = self.vertex_set().difference(set).into_vec();
        renaming.push(fresh_old);
        let mut new_id = vec![0u32; self.n + 2];
        for (i, &old) in renaming.iter().enumerate() {
            new_id[old as usize] = i as u32 + 1;
        }
        let fresh = renaming.len() as u32;

        let mut seen = std::collections::HashMap::new();
        let mut edges = Vec::new();
        let mut preimage = Vec::new();
        let mut image = Vec::with_capacity(self.m());
        for (i, e) in self.edges.iter().enumerate() {
            let mut out: Vec<u32> = e.difference(set).iter().map(|v| new_id[v as usize]).collect();
            if set.is_subset(e) {
                out.push(fresh);
            }
            let out = VertexSet(out);
            let idx = *seen.entry(out.clone()).or_insert_with(|| {
                edges.push(out);
                preimage.push(i);
                edges.len() - 1
            });
            image.push(idx);
        }
        Ok(Grouped {
            hypergraph: Hypergraph { n: renaming.len(), edges },
            step: GroupStep { grouped: set.clone(), fresh, renaming, preimage, image },
        })
    }

    /// True iff the union of the chosen edges is `V`.
    pub fn verify_cover(&self, cover: &Cover) -> Result<bool> {
        let mut covered = FixedBitSet::with_capacity(self.n + 1);
        for &i in cover.indices() {
            let e = self.edges.get(i).ok_or(Error::EdgeOutOfRange { index: i, m: self.m() })?;
            for v in e.iter() {
                covered.insert(v as usize);
            }
        }
        Ok(covered.count_ones(1..) == self.n)
    }

    /// Edges as bitsets of capacity `n + 1` (bit 0 unused).
    pub(crate) fn edge_bits(&self) -> Vec<FixedBitSet> {
        self.edges.iter().map(|e| e.to_bits(self.n)).collect()
    }

    /// Vertices in no edge.
    pub fn uncovered_vertices(&self) -> Vec<u32> {
        let all = self.edges.iter().fold(VertexSet::empty(), |acc, e| acc.union(e));
        self.vertex_set().difference(&all).into_vec()
    }
}

/// A set of edge indices. Indices are 0-based in memory; the text
/// certificate format prints them 1-based.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cover(Vec<usize>);

impl Cover {
    /// Sorts; rejects repeated indices.
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        if let Some(w) = indices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateIndex(w[0]));
        }
        Ok(Self(indices))
    }

    /// Sorts and silently merges repeats.
    pub fn from_iter_dedup(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}
