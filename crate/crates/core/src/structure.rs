//! Intersection-closure, chain lengths, and witness search.
//!
//! `H` is `d`-flat when it has no `(d+1)`-semi-ladder. The cheap test is the
//! longest strict inclusion chain `L` in the intersection-closure of `H`:
//! `H` is `d`-flat iff `L <= d + 1`. The direct witness searches below are
//! exponential and exist to cross-check that characterization on small
//! inputs.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::par::Exec;

pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

/// `K_H(S)`: indices of the edges containing `S`, in input order.
pub fn members_k(h: &Hypergraph, set: &VertexSet) -> Vec<usize> {
    h.edges().iter().enumerate().filter(|(_, e)| set.is_subset(e)).map(|(i, _)| i).collect()
}

/// Result of `M_H(S)`. `Top` stands for "no edge contains `S`" and is kept
/// apart from any concrete set, even one equal to `V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClosureMin {
    Top,
    Set(VertexSet),
}

impl ClosureMin {
    pub fn is_top(&self) -> bool {
        matches!(self, ClosureMin::Top)
    }

    /// The set this value denotes; `Top` is `V`.
    pub fn into_set(self, n: usize) -> VertexSet {
        match self {
            ClosureMin::Top => VertexSet::full(n),
            ClosureMin::Set(s) => s,
        }
    }
}

/// `M_H(S)`: the intersection of the edges containing `S`.
pub fn closure_min(h: &Hypergraph, set: &VertexSet) -> ClosureMin {
    let mut acc: Option<VertexSet> = None;
    for e in h.edges() {
        if set.is_subset(e) {
            acc = Some(match acc {
                None => e.clone(),
                Some(a) => a.intersection(e),
            });
        }
    }
    acc.map_or(ClosureMin::Top, ClosureMin::Set)
}

/// Bitset variant used on the solver's hot path. Returns `None` for `Top`.
pub(crate) fn closure_min_bits(edges: &[FixedBitSet], set: &FixedBitSet) -> Option<FixedBitSet> {
    let mut acc: Option<FixedBitSet> = None;
    for e in edges {
        if set.is_subset(e) {
            match acc.as_mut() {
                None => acc = Some(e.clone()),
                Some(a) => a.intersect_with(e),
            }
        }
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    /// First index of this edge in the input.
    Original(usize),
    DerivedIntersection,
}

/// The intersection-closure `H'` of a hypergraph together with the chain
/// length `l_{H'}(e)` of every closure edge.
#[derive(Debug, Clone)]
pub struct ClosureResult {
    pub closure: Hypergraph,
    pub origin: Vec<Origin>,
    pub chain_len: Vec<usize>,
    /// `L(H')`.
    pub longest: usize,
    pred: Vec<Option<usize>>,
    index: HashMap<VertexSet, usize>,
}

impl ClosureResult {
    pub fn len(&self) -> usize {
        self.closure.m()
    }

    pub fn is_empty(&self) -> bool {
        self.closure.m() == 0
    }

    pub fn index_of(&self, e: &VertexSet) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn chain_length(&self, e: &VertexSet) -> Option<usize> {
        self.index_of(e).map(|i| self.chain_len[i])
    }

    pub fn full_index(&self) -> usize {
        self.index_of(&self.closure.vertex_set()).expect("closure contains V")
    }

    /// A longest chain ending at closure edge `idx`, smallest edge first.
    pub fn chain_to(&self, idx: usize) -> Vec<usize> {
        let mut chain = vec![idx];
        let mut cur = idx;
        while let Some(p) = self.pred[cur] {
            chain.push(p);
            cur = p;
        }
        chain.reverse();
        chain
    }

    /// A chain of length `L(H')`, as vertex sets.
    pub fn longest_chain(&self) -> Vec<VertexSet> {
        let top = (0..self.len()).max_by_key(|&i| (self.chain_len[i], std::cmp::Reverse(i)));
        top.map(|i| self.chain_to(i).into_iter().map(|j| self.closure.edge(j).clone()).collect()).unwrap_or_default()
    }
}

pub fn intersection_closure(h: &Hypergraph) -> Result<ClosureResult> {
    intersection_closure_capped(h, DEFAULT_CLOSURE_CAP)
}

/// Worklist fixed point over `E ∪ {V}`.
///
/// Original edges come first (repeats dropped), then `V` if it is not an
/// edge, then derived intersections in discovery order: edge `i` is
/// intersected with every `j < i` when it is popped.
pub fn intersection_closure_capped(h: &Hypergraph, cap: usize) -> Result<ClosureResult> {
    let n = h.n();
    let mut bits: Vec<FixedBitSet> = Vec::new();
    let mut origin = Vec::new();
    let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();

    let mut add = |b: FixedBitSet, o: Origin, bits: &mut Vec<FixedBitSet>, origin: &mut Vec<Origin>| -> Result<()> {
        if seen.contains_key(&b) {
            return Ok(());
        }
        if bits.len() == cap {
            return Err(Error::ClosureBlowUp { cap });
        }
        seen.insert(b.clone(), bits.len());
        bits.push(b);
        origin.push(o);
        Ok(())
    };

    for (i, e) in h.edges().iter().enumerate() {
        add(e.to_bits(n), Origin::Original(i), &mut bits, &mut origin)?;
    }
    add(VertexSet::full(n).to_bits(n), Origin::DerivedIntersection, &mut bits, &mut origin)?;

    let mut i = 0;
    while i < bits.len() {
        for j in 0..i {
            let mut x = bits[i].clone();
            x.intersect_with(&bits[j]);
            add(x, Origin::DerivedIntersection, &mut bits, &mut origin)?;
        }
        i += 1;
    }

    let (chain_len, pred) = chain_lengths(&bits);
    let longest = chain_len.iter().copied().max().unwrap_or(0);
    let edges: Vec<VertexSet> = bits.iter().map(VertexSet::from_bits).collect();
    let index = edges.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    Ok(ClosureResult { closure: Hypergraph::from_sets(n, edges)?, origin, chain_len, longest, pred, index })
}

/// Longest strict inclusion chain ending at each set, by DP in order of
/// increasing cardinality. Ties on the predecessor go to the lowest index.
fn chain_lengths(bits: &[FixedBitSet]) -> (Vec<usize>, Vec<Option<usize>>) {
    let counts: Vec<usize> = bits.iter().map(|b| b.count_ones(..)).collect();
    let mut order: Vec<usize> = (0..bits.len()).collect();
    order.sort_by_key(|&i| (counts[i], i));
    let mut len = vec![0usize; bits.len()];
    let mut pred = vec![None; bits.len()];
    for (pos, &e) in order.iter().enumerate() {
        let mut best: Option<(usize, usize)> = None;
        for &f in &order[..pos] {
            if counts[f] < counts[e] && bits[f].is_subset(&bits[e]) {
                let cand = len[f] + 1;
                if best.is_none_or(|(l, p)| cand > l || (cand == l && f < p)) {
                    best = Some((cand, f));
                }
            }
        }
        if let Some((l, p)) = best {
            len[e] = l;
            pred[e] = Some(p);
        }
    }
    (len, pred)
}

/// `Σ |e|` over closure edges other than `V`.
pub fn closure_weight_below_top(c: &ClosureResult) -> usize {
    let n = c.closure.n();
    c.closure.edges().iter().filter(|e| e.len() != n).map(VertexSet::len).sum()
}

/// `1 + Σ_{i=0}^{d} C(n, i)`, saturating.
pub fn flat_edge_bound(n: usize, d: usize) -> u128 {
    let mut total: u128 = 1;
    let mut binom: u128 = 1;
    for i in 0..=d.min(n) {
        if i > 0 {
            binom = binom * (n - i + 1) as u128 / i as u128;
        }
        total = total.saturating_add(binom);
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    SemiLadder,
    Ladder,
    Square,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessKind::SemiLadder => "semi-ladder",
            WitnessKind::Ladder => "ladder",
            WitnessKind::Square => "square",
        })
    }
}

/// Vertices `W` and edges `F` exhibiting one of the forbidden patterns.
/// Semi-ladders and ladders of order `d` have `d + 1` pairs indexed from 0;
/// squares of order `d` have `d` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessPair {
    pub kind: WitnessKind,
    pub order: usize,
    pub vertices: Vec<u32>,
    pub edges: Vec<VertexSet>,
    /// Position of each edge of `F` in the searched hypergraph.
    pub edge_indices: Vec<usize>,
}

impl WitnessPair {
    /// Re-evaluates the defining incidence pattern directly.
    pub fn verify(&self) -> bool {
        let (w, f) = (&self.vertices, &self.edges);
        let d = self.order;
        match self.kind {
            WitnessKind::SemiLadder | WitnessKind::Ladder => {
                if w.len() != d + 1 || f.len() != d + 1 {
                    return false;
                }
                let ladder = self.kind == WitnessKind::Ladder;
                (0..=d).all(|i| {
                    (0..=d).all(|j| {
                        let inc = f[j].contains(w[i]);
                        if i < j {
                            inc
                        } else if i == j || ladder {
                            !inc
                        } else {
                            true
                        }
                    })
                })
            }
            WitnessKind::Square => {
                if w.len() != d || f.len() != d {
                    return false;
                }
                let mut ws = w.clone();
                ws.sort_unstable();
                ws.dedup();
                let mut fs = f.clone();
                fs.sort();
                fs.dedup();
                ws.len() == d
                    && fs.len() == d
                    && (0..d).all(|i| (0..d).all(|j| (i >= 2 && j >= 2) || f[j].contains(w[i])))
            }
        }
    }
}

impl fmt::Display for WitnessPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "w {} {}", self.kind, self.order)?;
        f.write_str("W:")?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        f.write_str("\nF:")?;
        for e in &self.edges {
            write!(f, " {e}")?;
        }
        writeln!(f)
    }
}

struct LadderSearch<'a> {
    edges: &'a [FixedBitSet],
    n: usize,
    d: usize,
    strict: bool,
    ws: Vec<usize>,
    fs: Vec<usize>,
}

impl LadderSearch<'_> {
    fn edges_containing(&self, extra: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(extra) && self.ws.iter().all(|&w| e.contains(w))).count()
    }

    /// Extends the partial witness with pair `i`, trying edges from `first`.
    fn extend(&mut self, i: usize, only: Option<usize>) -> bool {
        if i == self.d + 1 {
            return true;
        }
        let range = match only {
            Some(f) => f..f + 1,
            None => 0..self.edges.len(),
        };
        for f in range {
            let edge = &self.edges[f];
            if !self.ws.iter().all(|&w| edge.contains(w)) {
                continue;
            }
            for w in 1..=self.n {
                if edge.contains(w) {
                    continue;
                }
                if self.strict && self.fs.iter().any(|&g| self.edges[g].contains(w)) {
                    continue;
                }
                // f_{i+1}, ..., f_d must all contain w_0..w_i.
                if self.d > i && self.edges_containing(w) < self.d - i {
                    continue;
                }
                self.ws.push(w);
                self.fs.push(f);
                if self.extend(i + 1, None) {
                    return true;
                }
                self.ws.pop();
                self.fs.pop();
            }
        }
        false
    }
}

fn ladder_search(h: &Hypergraph, d: usize, strict: bool, exec: Exec) -> Option<WitnessPair> {
    let (distinct, _) = h.dedupe();
    let first_index: Vec<usize> =
        distinct.edges().iter().map(|e| h.edges().iter().position(|x| x == e).unwrap()).collect();
    let bits = distinct.edge_bits();
    let found = exec.find_first(0..bits.len(), |f0| {
        let mut s = LadderSearch { edges: &bits, n: h.n(), d, strict, ws: Vec::new(), fs: Vec::new() };
        s.extend(0, Some(f0)).then_some((s.ws, s.fs))
    })?;
    let (ws, fs) = found;
    Some(WitnessPair {
        kind: if strict { WitnessKind::Ladder } else { WitnessKind::SemiLadder },
        order: d,
        vertices: ws.iter().map(|&w| w as u32).collect(),
        edges: fs.iter().map(|&f| distinct.edge(f).clone()).collect(),
        edge_indices: fs.iter().map(|&f| first_index[f]).collect(),
    })
}

/// Exhaustive search for a `d`-semi-ladder: `w_i ∉ f_i` and `w_i ∈ f_j`
/// whenever `i < j`, for `i, j` in `0..=d`.
pub fn find_semi_ladder(h: &Hypergraph, d: usize) -> Option<WitnessPair> {
    find_semi_ladder_with(h, d, Exec::default())
}

pub fn find_semi_ladder_with(h: &Hypergraph, d: usize, exec: Exec) -> Option<WitnessPair> {
    ladder_search(h, d, false, exec)
}

/// Exhaustive search for a `d`-ladder: `w_i ∈ f_j` iff `i < j`.
pub fn find_ladder(h: &Hypergraph, d: usize) -> Option<WitnessPair> {
    find_ladder_with(h, d, Exec::default())
}

pub fn find_ladder_with(h: &Hypergraph, d: usize, exec: Exec) -> Option<WitnessPair> {
    ladder_search(h, d, true, exec)
}

/// Search for a `d`-square: distinct `w_1..w_d`, distinct `f_1..f_d`, with
/// `w_i ∈ f_j` whenever `i <= 2` or `j <= 2`.
///
/// Such a pattern exists iff two distinct edges share at least `d`
/// vertices, two of which lie together in at least `d` edges; the search
/// enumerates exactly that. `d = 0` yields the empty witness.
pub fn find_square(h: &Hypergraph, d: usize) -> Option<WitnessPair> {
    let (distinct, _) = h.dedupe();
    let edges = distinct.edges();
    let original = |e: &VertexSet| h.edges().iter().position(|x| x == e).unwrap();
    let build = |ws: Vec<u32>, fs: Vec<usize>| WitnessPair {
        kind: WitnessKind::Square,
        order: d,
        vertices: ws,
        edges: fs.iter().map(|&f| edges[f].clone()).collect(),
        edge_indices: fs.iter().map(|&f| original(&edges[f])).collect(),
    };
    match d {
        0 => return Some(build(Vec::new(), Vec::new())),
        1 => {
            return edges.iter().position(|e| !e.is_empty()).map(|f| build(vec![edges[f].as_slice()[0]], vec![f]));
        }
        _ => {}
    }
    for f1 in 0..edges.len() {
        for f2 in f1 + 1..edges.len() {
            let common = edges[f1].intersection(&edges[f2]);
            if common.len() < d {
                continue;
            }
            let c = common.as_slice();
            for a in 0..c.len() {
                for b in a + 1..c.len() {
                    let pair = VertexSet::from([c[a], c[b]]);
                    let others: Vec<usize> = (0..edges.len())
                        .filter(|&g| g != f1 && g != f2 && pair.is_subset(&edges[g]))
                        .take(d - 2)
                        .collect();
                    if others.len() < d - 2 {
                        continue;
                    }
                    let mut ws = vec![c[a], c[b]];
                    ws.extend(c.iter().copied().filter(|&v| v != c[a] && v != c[b]).take(d - 2));
                    let mut fs = vec![f1, f2];
                    fs.extend(others);
                    return Some(build(ws, fs));
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone)]
pub enum FlatCertificate {
    /// Positive answer: the closure itself, whose longest chain is short.
    Closure(Box<ClosureResult>),
    /// Negative answer: a closure chain longer than `d + 1`.
    Chain(Vec<VertexSet>),
    /// Closure was too large; answered by direct search, which found this.
    Witness(WitnessPair),
    /// Closure was too large; direct search found no `(d+1)`-semi-ladder.
    NoWitness,
}

#[derive(Debug, Clone)]
pub struct FlatReport {
    pub d: usize,
    pub flat: bool,
    /// `L(H')`, when the closure was computed.
    pub longest: Option<usize>,
    pub certificate: FlatCertificate,
}

/// Decides `d`-flatness as `L(H') <= d + 1`.
pub fn is_flat(h: &Hypergraph, d: usize) -> FlatReport {
    is_flat_capped(h, d, DEFAULT_CLOSURE_CAP)
}

/// Like [`is_flat`], falling back to `find_semi_ladder(h, d + 1)` when the
/// closure exceeds `cap` edges.
pub fn is_flat_capped(h: &Hypergraph, d: usize, cap: usize) -> FlatReport {
    match intersection_closure_capped(h, cap) {
        Ok(c) => {
            let longest = c.longest;
            if longest <= d + 1 {
                FlatReport { d, flat: true, longest: Some(longest), certificate: FlatCertificate::Closure(Box::new(c)) }
            } else {
                FlatReport {
                    d,
                    flat: false,
                    longest: Some(longest),
                    certificate: FlatCertificate::Chain(c.longest_chain()),
                }
            }
        }
        Err(_) => match find_semi_ladder(h, d + 1) {
            Some(w) => FlatReport { d, flat: false, longest: None, certificate: FlatCertificate::Witness(w) },
            None => FlatReport { d, flat: true, longest: None, certificate: FlatCertificate::NoWitness },
        },
    }
}

/// Least `s` such that `H` has no `s`-semi-ladder, read off as `L(H')`.
pub fn semi_ladder_index(h: &Hypergraph) -> Result<usize> {
    Ok(intersection_closure(h)?.longest)
}

/// Smallest `d >= 1` for which a hypergraph with closure chain length
/// `longest` is `d`-flat.
pub fn minimal_flat_d(longest: usize) -> usize {
    longest.saturating_sub(1).max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running() -> Hypergraph {
        Hypergraph::new(4, vec![vec![1, 2], vec![2, 3], vec![3, 4]]).unwrap()
    }

    fn vs(v: &[u32]) -> VertexSet {
        VertexSet::from(v.to_vec())
    }

    #[test]
    fn members_k_examples() {
        let h = running();
        assert_eq!(members_k(&h, &vs(&[2])), vec![0, 1]);
        assert_eq!(members_k(&h, &VertexSet::empty()), vec![0, 1, 2]);
        assert!(members_k(&h, &vs(&[1, 3])).is_empty());
    }

    #[test]
    fn closure_min_examples() {
        let h = running();
        assert_eq!(closure_min(&h, &vs(&[2])), ClosureMin::Set(vs(&[2])));
        assert_eq!(closure_min(&h, &vs(&[1, 3])), ClosureMin::Top);
        assert_eq!(closure_min(&h, &VertexSet::empty()), ClosureMin::Set(VertexSet::empty()));
    }

    #[test]
    fn top_is_distinct_from_full_set() {
        // {1,2} is V here, and also the intersection of K({1}).
        let h = Hypergraph::new(2, vec![vec![1, 2]]).unwrap();
        assert_eq!(closure_min(&h, &vs(&[1])), ClosureMin::Set(vs(&[1, 2])));
        let h = Hypergraph::new(2, vec![vec![1]]).unwrap();
        assert!(closure_min(&h, &vs(&[2])).is_top());
    }

    #[test]
    fn running_closure() {
        let c = intersection_closure(&running()).unwrap();
        let mut got: Vec<Vec<u32>> = c.closure.edges().iter().map(|e| e.as_slice().to_vec()).collect();
        got.sort();
        let mut want = vec![vec![], vec![2], vec![3], vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 2, 3, 4]];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(c.longest, 3);
        // originals first, then V, then derived
        assert_eq!(&c.origin[..3], &[Origin::Original(0), Origin::Original(1), Origin::Original(2)]);
        assert_eq!(c.closure.edge(3), &vs(&[1, 2, 3, 4]));
        assert_eq!(c.chain_length(&vs(&[1, 2])), Some(2));
        assert_eq!(c.chain_length(&VertexSet::empty()), Some(0));
        assert_eq!(c.chain_length(&vs(&[2])), Some(1));
        assert_eq!(c.longest_chain().len(), 4);
    }

    #[test]
    fn closure_of_closed_hypergraph_is_itself() {
        let h = Hypergraph::new(2, vec![vec![], vec![1], vec![1, 2]]).unwrap();
        let c = intersection_closure(&h).unwrap();
        assert_eq!(c.closure, h);
        assert!(c.origin.iter().all(|o| matches!(o, Origin::Original(_))));
    }

    #[test]
    fn disjoint_edges_gain_empty_and_full() {
        let c = intersection_closure(&Hypergraph::new(2, vec![vec![1], vec![2]]).unwrap()).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.longest, 2);
        assert_eq!(c.closure.edge(2), &vs(&[1, 2]));
        assert_eq!(c.closure.edge(3), &VertexSet::empty());
    }

    #[test]
    fn closure_cap_rejects() {
        let err = intersection_closure_capped(&running(), 5).unwrap_err();
        assert_eq!(err, Error::ClosureBlowUp { cap: 5 });
    }

    #[test]
    fn running_semi_ladders() {
        let h = running();
        let w = find_semi_ladder(&h, 2).expect("running example has a 2-semi-ladder");
        assert!(w.verify());
        assert!(find_semi_ladder(&h, 3).is_none());
        let listed = WitnessPair {
            kind: WitnessKind::SemiLadder,
            order: 2,
            vertices: vec![2, 3, 1],
            edges: vec![vs(&[3, 4]), vs(&[1, 2]), vs(&[2, 3])],
            edge_indices: vec![2, 0, 1],
        };
        assert!(listed.verify());
        let single = Hypergraph::new(1, vec![vec![1]]).unwrap();
        for d in 1..4 {
            assert!(find_semi_ladder(&single, d).is_none());
        }
    }

    #[test]
    fn ladder_is_stricter_than_semi_ladder() {
        // Nested chain {1} ⊂ {1,2} ⊂ {1,2,3}: semi-ladder needs w_i ∉ f_i only.
        let h = Hypergraph::new(3, vec![vec![], vec![1], vec![1, 2]]).unwrap();
        let w = find_ladder(&h, 2).unwrap();
        assert!(w.verify());
        let mut broken = w.clone();
        broken.kind = WitnessKind::Ladder;
        broken.vertices.swap(0, 1);
        assert!(!broken.verify());
    }

    #[test]
    fn square_examples() {
        let h = Hypergraph::new(3, vec![vec![1, 2], vec![1, 2, 3]]).unwrap();
        let w = find_square(&h, 2).unwrap();
        assert!(w.verify());
        assert_eq!(w.vertices, vec![1, 2]);
        assert!(find_square(&Hypergraph::new(3, vec![]).unwrap(), 2).is_none());
        assert!(find_square(&running(), 2).is_none());
        assert!(find_square(&running(), 1).unwrap().verify());
    }

    #[test]
    fn flatness_examples() {
        let h = running();
        let r = is_flat(&h, 2);
        assert!(r.flat);
        assert_eq!(r.longest, Some(3));
        let r = is_flat(&h, 1);
        assert!(!r.flat);
        let FlatCertificate::Chain(chain) = r.certificate else { panic!() };
        assert_eq!(chain.len(), 4);
        assert_eq!(chain[0], VertexSet::empty());
        assert_eq!(chain[3], vs(&[1, 2, 3, 4]));
        assert!(chain.windows(2).all(|w| w[0].is_proper_subset(&w[1])));
    }

    #[test]
    fn flatness_falls_back_to_search() {
        let r = is_flat_capped(&running(), 1, 3);
        assert!(!r.flat);
        assert!(matches!(r.certificate, FlatCertificate::Witness(ref w) if w.verify() && w.order == 2));
        let r = is_flat_capped(&running(), 2, 3);
        assert!(r.flat);
        assert!(matches!(r.certificate, FlatCertificate::NoWitness));
    }

    #[test]
    fn index_of_two_singletons() {
        let h = Hypergraph::new(2, vec![vec![1], vec![2]]).unwrap();
        assert_eq!(semi_ladder_index(&h).unwrap(), 2);
        assert!(find_semi_ladder(&h, 1).is_some());
        assert!(find_semi_ladder(&h, 2).is_none());
        assert_eq!(minimal_flat_d(2), 1);
        let single = Hypergraph::new(1, vec![vec![1]]).unwrap();
        assert_eq!(semi_ladder_index(&single).unwrap(), 0);
        assert_eq!(minimal_flat_d(0), 1);
    }

    #[test]
    fn witness_display() {
        let w = WitnessPair {
            kind: WitnessKind::SemiLadder,
            order: 1,
            vertices: vec![1, 2],
            edges: vec![vs(&[2]), vs(&[1])],
            edge_indices: vec![1, 0],
        };
        assert_eq!(w.to_string(), "w semi-ladder 1\nW: 1 2\nF: (2) (1)\n");
    }

    #[test]
    fn edge_bound_values() {
        assert_eq!(flat_edge_bound(4, 2), 1 + 1 + 4 + 6);
        assert_eq!(flat_edge_bound(3, 5), 1 + 8);
    }
}
