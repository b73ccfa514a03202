//! Bounded search tree over `k`-edge-tuples.
//!
//! Each slot of the tuple is a closure edge (or the initial empty set). A
//! node picks an uncovered vertex `v` and branches on every slot `i`,
//! replacing `e_i` with `M_H(e_i + v)` when some edge contains `e_i + v`.
//! On `d`-flat inputs every slot can grow at most `d` times, so the tree has
//! depth at most `dk`.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Cover, Hypergraph};
use crate::structure::{closure_min_bits, intersection_closure};

/// How line "choose `v ∈ V − C`" is resolved.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Pick {
    /// Smallest uncovered identifier.
    #[default]
    Smallest,
    /// Uncovered vertex lying in the fewest edges, ties to the smallest.
    Rare,
}

#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    /// Claimed flatness; enables the measure instrumentation.
    pub hint: Option<usize>,
    /// Abort after this many search nodes.
    pub budget: Option<u64>,
    pub pick: Pick,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes_visited: u64,
    pub max_depth: usize,
    /// `dk - Σ l(e_i)` at the root; present only with a flatness hint.
    pub measure_at_root: Option<i64>,
    /// Tree edges along which the measure failed to drop. Zero on inputs
    /// that really are `d`-flat.
    pub measure_violations: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// `None` means no cover of size at most `k` exists.
    pub cover: Option<Cover>,
    pub stats: SearchStats,
}

/// `Σ_{j=0}^{dk} k^j`, the node count of a full `k`-ary tree of depth `dk`.
pub fn node_bound(k: usize, d: usize) -> u128 {
    let mut total: u128 = 0;
    let mut term: u128 = 1;
    for _ in 0..=d * k {
        total = total.saturating_add(term);
        term = term.saturating_mul(k as u128);
    }
    total
}

/// Decides whether `h` has a cover of at most `k` edges, returning one if so.
/// Cover indices refer to `h`'s edge list.
pub fn solve(h: &Hypergraph, k: usize, opts: &SolveOptions) -> Result<Solution> {
    let mut stats = SearchStats::default();
    if let Some(i) = h.full_edge() {
        let cover = if k >= 1 {
            Some(Cover::from_iter_dedup([i]))
        } else if h.n() == 0 {
            Some(Cover::default())
        } else {
            None
        };
        return Ok(Solution { cover, stats });
    }
    if k == 0 || h.m() == 0 {
        let cover = (h.n() == 0).then(Cover::default);
        return Ok(Solution { cover, stats });
    }

    // V ∉ E, so V ≠ ∅ and removing X = ∩E leaves a reduced instance with
    // the same edge indices.
    let reduced = h.reduce()?.hypergraph;
    let measure = opts.hint.and_then(|d| Measure::new(&reduced, d, k));
    let n = reduced.n();
    let edges = reduced.edge_bits();
    let mut degree = vec![0usize; n + 1];
    for e in reduced.edges() {
        for v in e.iter() {
            degree[v as usize] += 1;
        }
    }
    let mut search = Search {
        n,
        edges: &edges,
        degree: &degree,
        pick: opts.pick,
        budget: opts.budget,
        measure: measure.as_ref(),
        stats: &mut stats,
    };
    let root: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n + 1); k];
    if let Some(m) = &measure {
        search.stats.measure_at_root = Some(m.of(&root));
    }
    let cover = search.run(root, 0)?;
    Ok(Solution { cover, stats })
}

struct Measure {
    dk: i64,
    chain: HashMap<FixedBitSet, usize>,
}

impl Measure {
    fn new(h: &Hypergraph, d: usize, k: usize) -> Option<Self> {
        let c = match intersection_closure(h) {
            Ok(c) => c,
            Err(e) => {
                log::warn!("measure disabled: {e}");
                return None;
            }
        };
        let n = h.n();
        let chain = c.closure.edges().iter().zip(&c.chain_len).map(|(e, &l)| (e.to_bits(n), l)).collect();
        Some(Self { dk: (d * k) as i64, chain })
    }

    fn of(&self, slots: &[FixedBitSet]) -> i64 {
        // An initial empty slot that is not a closure edge counts as 0.
        let sum: usize = slots.iter().map(|s| self.chain.get(s).copied().unwrap_or(0)).sum();
        self.dk - sum as i64
    }
}

struct Search<'a> {
    n: usize,
    edges: &'a [FixedBitSet],
    degree: &'a [usize],
    pick: Pick,
    budget: Option<u64>,
    measure: Option<&'a Measure>,
    stats: &'a mut SearchStats,
}

impl Search<'_> {
    fn run(&mut self, slots: Vec<FixedBitSet>, depth: usize) -> Result<Option<Cover>> {
        self.stats.nodes_visited += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        if let Some(b) = self.budget {
            if self.stats.nodes_visited > b {
                return Err(Error::BudgetExceeded(b));
            }
        }

        let mut covered = FixedBitSet::with_capacity(self.n + 1);
        for s in &slots {
            covered.union_with(s);
        }
        if covered.count_ones(1..) == self.n {
            return Ok(Some(self.extract(&slots)));
        }

        let v = self.choose(&covered);
        let parent = self.measure.map(|m| m.of(&slots));
        for i in 0..slots.len() {
            let mut grown = slots[i].clone();
            grown.insert(v);
            let Some(f) = closure_min_bits(self.edges, &grown) else {
                continue;
            };
            let mut child = slots.clone();
            child[i] = f;
            if let (Some(m), Some(p)) = (self.measure, parent) {
                if m.of(&child) >= p {
                    self.stats.measure_violations += 1;
                }
            }
            if let Some(c) = self.run(child, depth + 1)? {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }

    fn choose(&self, covered: &FixedBitSet) -> usize {
        let uncovered = (1..=self.n).filter(|&v| !covered.contains(v));
        match self.pick {
            Pick::Smallest => uncovered.min(),
            Pick::Rare => uncovered.min_by_key(|&v| (self.degree[v], v)),
        }
        .expect("called with an uncovered vertex")
    }

    /// Smallest-index edge containing each nonempty slot. Empty slots add
    /// nothing to the union and are skipped.
    fn extract(&self, slots: &[FixedBitSet]) -> Cover {
        Cover::from_iter_dedup(
            slots.iter().filter(|s| !s.is_clear()).map(|s| {
                self.edges.iter().position(|e| s.is_subset(e)).expect("every slot is an intersection of edges")
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running() -> Hypergraph {
        Hypergraph::new(4, vec![vec![1, 2], vec![2, 3], vec![3, 4]]).unwrap()
    }

    fn hinted(d: usize) -> SolveOptions {
        SolveOptions { hint: Some(d), ..Default::default() }
    }

    #[test]
    fn running_k2_finds_cover() {
        let h = running();
        let s = solve(&h, 2, &hinted(2)).unwrap();
        let c = s.cover.unwrap();
        assert!(c.len() <= 2);
        assert!(h.verify_cover(&c).unwrap());
        assert_eq!(c.indices(), &[0, 2]);
        assert_eq!(s.stats.measure_at_root, Some(4));
        assert_eq!(s.stats.measure_violations, 0);
        assert!(s.stats.max_depth <= 4);
    }

    #[test]
    fn running_k1_is_no() {
        let s = solve(&running(), 1, &hinted(2)).unwrap();
        assert!(s.cover.is_none());
        assert!(u128::from(s.stats.nodes_visited) <= node_bound(1, 2));
        assert_eq!(s.stats.measure_violations, 0);
    }

    #[test]
    fn driver_edge_cases() {
        let opts = SolveOptions::default();
        let empty = Hypergraph::new(0, vec![]).unwrap();
        assert_eq!(solve(&empty, 0, &opts).unwrap().cover, Some(Cover::default()));
        assert_eq!(solve(&empty, 3, &opts).unwrap().cover, Some(Cover::default()));

        let full = Hypergraph::new(2, vec![vec![1], vec![1, 2]]).unwrap();
        assert_eq!(solve(&full, 1, &opts).unwrap().cover.unwrap().indices(), &[1]);
        assert!(solve(&full, 0, &opts).unwrap().cover.is_none());

        let edgeless = Hypergraph::new(2, vec![]).unwrap();
        assert!(solve(&edgeless, 2, &opts).unwrap().cover.is_none());

        let empty_edge = Hypergraph::new(0, vec![vec![]]).unwrap();
        assert_eq!(solve(&empty_edge, 0, &opts).unwrap().cover, Some(Cover::default()));
    }

    #[test]
    fn common_vertex_is_handled_by_reduction() {
        // 1 lies in every edge; the cover must still report original indices.
        let h = Hypergraph::new(4, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![1, 3, 4]]).unwrap();
        let c = solve(&h, 2, &SolveOptions::default()).unwrap().cover.unwrap();
        assert!(h.verify_cover(&c).unwrap());
        assert!(solve(&h, 1, &SolveOptions::default()).unwrap().cover.is_none());
    }

    #[test]
    fn uncoverable_vertex_gives_no() {
        let h = Hypergraph::new(3, vec![vec![1], vec![2]]).unwrap();
        assert!(solve(&h, 3, &SolveOptions::default()).unwrap().cover.is_none());
    }

    #[test]
    fn rare_pick_agrees() {
        let h = running();
        let opts = SolveOptions { pick: Pick::Rare, ..hinted(2) };
        for k in 0..4 {
            let a = solve(&h, k, &opts).unwrap().cover.is_some();
            let b = solve(&h, k, &SolveOptions::default()).unwrap().cover.is_some();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn budget_aborts() {
        let err = solve(&running(), 1, &SolveOptions { budget: Some(1), ..Default::default() }).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded(1));
    }

    #[test]
    fn node_bound_values() {
        assert_eq!(node_bound(2, 2), 1 + 2 + 4 + 8 + 16);
        assert_eq!(node_bound(1, 3), 4);
        assert_eq!(node_bound(0, 3), 1);
    }
}
