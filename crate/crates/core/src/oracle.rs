//! Ground truth and baselines: exhaustive minimum cover, greedy cover, and
//! seeded instance generators.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::hypergraph::{Cover, Hypergraph, VertexSet};
use crate::io::write_hypergraph;
use crate::par::Exec;
use crate::rng::SplitMix64;
use crate::structure::is_flat;

pub const BRUTE_FORCE_MAX_EDGES: usize = 25;
pub const DEFAULT_REJECTION_BUDGET: usize = 10_000;

/// Minimum cover by enumerating edge subsets in order of increasing size.
/// Among covers of minimum size, the lexicographically first index list is
/// returned. `None` means some vertex lies in no edge.
pub fn brute_force_min_cover(h: &Hypergraph) -> Result<Option<Cover>> {
    brute_force_min_cover_with(h, Exec::default())
}

pub fn brute_force_min_cover_with(h: &Hypergraph, exec: Exec) -> Result<Option<Cover>> {
    let m = h.m();
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::GuardExceeded { what: "edges", got: m, max: BRUTE_FORCE_MAX_EDGES });
    }
    if h.n() == 0 {
        return Ok(Some(Cover::default()));
    }
    if !h.uncovered_vertices().is_empty() {
        return Ok(None);
    }
    let edges = h.edge_bits();
    let n = h.n();
    for size in 1..=m {
        let hit = exec.find_first(0..m, |first| {
            let mut chosen = vec![first];
            let mut acc = edges[first].clone();
            extend_combination(&edges, n, size, &mut chosen, &mut acc).then_some(chosen)
        });
        if let Some(c) = hit {
            return Ok(Some(Cover::from_iter_dedup(c)));
        }
    }
    unreachable!("the full edge set covers V")
}

fn covers(acc: &FixedBitSet, n: usize) -> bool {
    acc.count_ones(1..) == n
}

fn extend_combination(
    edges: &[FixedBitSet],
    n: usize,
    size: usize,
    chosen: &mut Vec<usize>,
    acc: &mut FixedBitSet,
) -> bool {
    if chosen.len() == size {
        return covers(acc, n);
    }
    let start = chosen.last().unwrap() + 1;
    let need = size - chosen.len();
    if edges.len() < start + need {
        return false;
    }
    for next in start..=edges.len() - need {
        let mut grown = acc.clone();
        grown.union_with(&edges[next]);
        chosen.push(next);
        if extend_combination(edges, n, size, chosen, &mut grown) {
            *acc = grown;
            return true;
        }
        chosen.pop();
    }
    false
}

/// Repeatedly takes the edge covering the most uncovered vertices, ties to
/// the smallest index.
pub fn greedy_cover(h: &Hypergraph) -> Result<Cover> {
    if let Some(&v) = h.uncovered_vertices().first() {
        return Err(Error::Uncoverable(v));
    }
    let n = h.n();
    let edges = h.edge_bits();
    let mut covered = FixedBitSet::with_capacity(n + 1);
    let mut chosen = Vec::new();
    while covered.count_ones(1..) < n {
        let (best, _) = edges
            .iter()
            .enumerate()
            .map(|(i, e)| (i, e.difference(&covered).count()))
            .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
        covered.union_with(&edges[best]);
        chosen.push(best);
    }
    Ok(Cover::from_iter_dedup(chosen))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GenMode {
    /// Distinct edges, kept `d`-flat edge by edge; the result is reduced.
    RandomFlat,
    /// A random partition of `V` plus `d`-flat noise edges.
    PlantedCover,
    /// Independent random edges, possibly empty or repeated.
    Unconstrained,
}

impl fmt::Display for GenMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenMode::RandomFlat => "random-flat",
            GenMode::PlantedCover => "planted-cover",
            GenMode::Unconstrained => "unconstrained",
        })
    }
}

impl FromStr for GenMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random-flat" => Ok(GenMode::RandomFlat),
            "planted-cover" => Ok(GenMode::PlantedCover),
            "unconstrained" => Ok(GenMode::Unconstrained),
            _ => Err(Error::BadParameter { name: "mode", msg: format!("unknown mode '{s}'") }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub mode: GenMode,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub hypergraph: Hypergraph,
    pub planted: Option<Cover>,
}

impl Generated {
    /// `.hg` text with the generating spec as a leading comment.
    pub fn to_text(&self, spec: &GenSpec) -> String {
        let mut out = format!("c seed={} mode={} n={} m={} d={}\n", spec.seed, spec.mode, spec.n, spec.m, spec.d);
        if let Some(c) = &self.planted {
            out.push_str("c planted");
            for i in c.indices() {
                out.push_str(&format!(" {}", i + 1));
            }
            out.push('\n');
        }
        out.push_str(&write_hypergraph(&self.hypergraph));
        out
    }
}

pub fn gen(spec: &GenSpec) -> Result<Generated> {
    gen_with_budget(spec, DEFAULT_REJECTION_BUDGET)
}

/// `budget` bounds the total number of rejected draws.
pub fn gen_with_budget(spec: &GenSpec, budget: usize) -> Result<Generated> {
    if spec.n == 0 {
        return Err(Error::BadParameter { name: "n", msg: "must be at least 1".into() });
    }
    if spec.d == 0 && spec.mode != GenMode::Unconstrained {
        return Err(Error::BadParameter { name: "d", msg: "must be at least 1".into() });
    }
    let mut rng = SplitMix64::new(spec.seed);
    match spec.mode {
        GenMode::Unconstrained => {
            let edges = (0..spec.m)
                .map(|_| {
                    let size = rng.between(0, spec.n);
                    VertexSet::from_ascending(rng.subset(spec.n, size)).unwrap()
                })
                .collect();
            Ok(Generated { hypergraph: Hypergraph::from_sets(spec.n, edges)?, planted: None })
        }
        GenMode::RandomFlat => {
            let mut rejected = 0;
            loop {
                let mut edges = Vec::new();
                grow_flat(&mut rng, spec, &mut edges, &mut rejected, budget)?;
                let h = Hypergraph::from_sets(spec.n, edges)?;
                if h.is_reduced() {
                    return Ok(Generated { hypergraph: h, planted: None });
                }
                rejected += 1;
                if rejected > budget {
                    return Err(Error::RejectionBudget(budget));
                }
            }
        }
        GenMode::PlantedCover => {
            let blocks = (2 + rng.index(2)).min(spec.n).min(spec.m).max(1);
            let mut order: Vec<u32> = (1..=spec.n as u32).collect();
            rng.shuffle(&mut order);
            let mut cuts: Vec<usize> = rng.subset(spec.n - 1, blocks - 1).into_iter().map(|c| c as usize).collect();
            cuts.insert(0, 0);
            cuts.push(spec.n);
            let mut edges: Vec<VertexSet> =
                cuts.windows(2).map(|w| VertexSet::new(order[w[0]..w[1]].to_vec())).collect();
            let mut rejected = 0;
            grow_flat(&mut rng, spec, &mut edges, &mut rejected, budget)?;
            // Scatter the planted blocks among the noise.
            let mut perm: Vec<usize> = (0..edges.len()).collect();
            rng.shuffle(&mut perm);
            let shuffled = perm.iter().map(|&i| edges[i].clone()).collect();
            let planted =
                Cover::from_iter_dedup(perm.iter().enumerate().filter(|(_, &i)| i < blocks).map(|(pos, _)| pos));
            Ok(Generated { hypergraph: Hypergraph::from_sets(spec.n, shuffled)?, planted: Some(planted) })
        }
    }
}

/// Adds distinct random edges until there are `spec.m`, rejecting any edge
/// that would break `d`-flatness. Sub-hypergraphs of a flat hypergraph are
/// flat, so the prefix never needs rechecking.
fn grow_flat(
    rng: &mut SplitMix64,
    spec: &GenSpec,
    edges: &mut Vec<VertexSet>,
    rejected: &mut usize,
    budget: usize,
) -> Result<()> {
    let mut seen: HashSet<VertexSet> = edges.iter().cloned().collect();
    while edges.len() < spec.m {
        let size = rng.between(1, spec.n);
        let e = VertexSet::from_ascending(rng.subset(spec.n, size)).unwrap();
        let accept = !seen.contains(&e) && {
            edges.push(e.clone());
            let ok = is_flat(&Hypergraph::from_sets(spec.n, edges.clone())?, spec.d).flat;
            edges.pop();
            ok
        };
        if accept {
            seen.insert(e.clone());
            edges.push(e);
        } else {
            *rejected += 1;
            if *rejected > budget {
                return Err(Error::RejectionBudget(budget));
            }
        }
    }
    Ok(())
}
