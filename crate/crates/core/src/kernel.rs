//! Kernelization by repeated grouping.
//!
//! Each round builds the intersection-closure and looks for a closure edge
//! `e` with chain length `i > 0` and `|e| > k^(i-1)`. The one with the
//! smallest `i` (ties: lexicographically smallest vertex list) is contracted
//! into a single vertex. When no such edge remains, `|V| <= k^d`.

use crate::error::{Error, Result};
use crate::hypergraph::{Cover, Hypergraph, VertexSet};
use crate::structure::{intersection_closure_capped, is_flat_capped, DEFAULT_CLOSURE_CAP};
use crate::trace::{GroupTrace, ReduceStep, TraceStep};

#[derive(Debug, Clone)]
pub struct KernelOptions {
    /// Reject inputs that are not `d`-flat.
    pub check_input: bool,
    /// Re-check `d`-flatness after every round.
    pub check_rounds: bool,
    pub closure_cap: usize,
}

impl Default for KernelOptions {
    fn default() -> Self {
        Self { check_input: false, check_rounds: false, closure_cap: DEFAULT_CLOSURE_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    pub kernel: Hypergraph,
    pub trace: GroupTrace,
    /// Number of groupings performed.
    pub rounds: usize,
}

fn threshold(k: usize, exp: usize) -> u128 {
    (k as u128).checked_pow(exp as u32).unwrap_or(u128::MAX)
}

/// The closure edge to contract next, if any.
fn pick_candidate(h: &Hypergraph, k: usize, cap: usize) -> Result<Option<VertexSet>> {
    let c = intersection_closure_capped(h, cap)?;
    let best = c
        .closure
        .edges()
        .iter()
        .zip(&c.chain_len)
        .filter(|&(e, &i)| i > 0 && e.len() as u128 > threshold(k, i - 1))
        .min_by(|(a, i), (b, j)| i.cmp(j).then_with(|| a.cmp(b)));
    Ok(best.map(|(e, _)| e.clone()))
}

pub fn kernelize(h: &Hypergraph, k: usize, d: usize, opts: &KernelOptions) -> Result<KernelResult> {
    if k == 0 {
        return Err(Error::BadParameter { name: "k", msg: "must be at least 1".into() });
    }
    if d == 0 {
        return Err(Error::BadParameter { name: "d", msg: "must be at least 1".into() });
    }
    if !h.is_reduced() {
        return Err(Error::NotReduced);
    }
    if opts.check_input && !is_flat_capped(h, d, opts.closure_cap).flat {
        return Err(Error::NotFlat(d));
    }

    let mut cur = h.clone();
    let mut trace = GroupTrace::new();
    let mut rounds = 0;
    while let Some(set) = pick_candidate(&cur, k, opts.closure_cap)? {
        let grouped = cur.group(&set)?;
        log::debug!("round {}: grouping {} of {} vertices", rounds + 1, set.len(), cur.n());
        cur = grouped.hypergraph;
        trace.push_step(TraceStep::Group(grouped.step));
        rounds += 1;
        if !cur.is_reduced() {
            log::warn!("grouping left a common vertex; reducing");
            let r = cur.reduce()?;
            cur = r.hypergraph;
            trace.push_step(TraceStep::Reduce(ReduceStep { removed: r.removed, renaming: r.renaming }));
        }
        if opts.check_rounds && !is_flat_capped(&cur, d, opts.closure_cap).flat {
            return Err(Error::NotFlat(d));
        }
    }
    Ok(KernelResult { kernel: cur, trace, rounds })
}

/// Maps a cover of the kernel back to the original instance.
pub fn lift_cover(trace: &GroupTrace, original: &Hypergraph, kernel: &Hypergraph, cover: &Cover) -> Result<Cover> {
    if !kernel.verify_cover(cover)? {
        return Err(Error::InvalidCover("kernel"));
    }
    let lifted = trace.lift(cover);
    if lifted.len() != cover.len() || !original.verify_cover(&lifted)? {
        return Err(Error::EquivalenceViolation(format!(
            "kernel cover {:?} lifts to {:?}, which does not cover the original",
            cover.indices(),
            lifted.indices()
        )));
    }
    Ok(lifted)
}

/// Maps a cover of the original, of size at most `k`, forward to the kernel.
pub fn push_cover(
    trace: &GroupTrace,
    original: &Hypergraph,
    kernel: &Hypergraph,
    cover: &Cover,
    k: usize,
) -> Result<Cover> {
    if cover.len() > k {
        return Err(Error::BadParameter { name: "cover", msg: format!("size {} exceeds k = {k}", cover.len()) });
    }
    if !original.verify_cover(cover)? {
        return Err(Error::InvalidCover("original"));
    }
    let pushed = trace.push(cover);
    if !kernel.verify_cover(&pushed)? {
        return Err(Error::EquivalenceViolation(format!(
            "cover {:?} pushes to {:?}, which does not cover the kernel",
            cover.indices(),
            pushed.indices()
        )));
    }
    Ok(pushed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{solve, SolveOptions};

    fn running() -> Hypergraph {
        Hypergraph::new(4, vec![vec![1, 2], vec![2, 3], vec![3, 4]]).unwrap()
    }

    #[test]
    fn running_k2_is_already_a_kernel() {
        let r = kernelize(&running(), 2, 2, &KernelOptions::default()).unwrap();
        assert_eq!(r.rounds, 0);
        assert_eq!(r.kernel, running());
        assert!(r.trace.is_empty());
    }

    #[test]
    fn running_k1_collapses() {
        let h = running();
        let opts = KernelOptions { check_input: true, check_rounds: true, ..Default::default() };
        let r = kernelize(&h, 1, 2, &opts).unwrap();
        let TraceStep::Group(first) = &r.trace.steps[0] else { panic!() };
        assert_eq!(first.grouped.as_slice(), &[1, 2]);
        assert_eq!(r.kernel.n(), 1);
        assert_eq!(r.kernel.edges(), &[VertexSet::empty()]);
        assert!(r.kernel.n() <= 1);
        let none = SolveOptions::default();
        assert!(solve(&r.kernel, 1, &none).unwrap().cover.is_none());
        assert!(solve(&h, 1, &none).unwrap().cover.is_none());
        assert_eq!(r.trace.replay(&h).unwrap(), r.kernel);
    }

    #[test]
    fn single_empty_edge_is_trivial() {
        let h = Hypergraph::new(0, vec![vec![]]).unwrap();
        let r = kernelize(&h, 1, 1, &KernelOptions::default()).unwrap();
        assert_eq!(r.rounds, 0);
        assert_eq!(r.kernel, h);
    }

    #[test]
    fn preconditions() {
        let not_reduced = Hypergraph::new(2, vec![vec![1], vec![1, 2]]).unwrap();
        let opts = KernelOptions::default();
        assert_eq!(kernelize(&not_reduced, 1, 1, &opts).unwrap_err(), Error::NotReduced);
        assert!(kernelize(&running(), 0, 2, &opts).is_err());
        let strict = KernelOptions { check_input: true, ..Default::default() };
        assert_eq!(kernelize(&running(), 2, 1, &strict).unwrap_err(), Error::NotFlat(1));
    }

    #[test]
    fn covers_move_both_ways() {
        // Grouping {3,4} by hand, then moving covers across.
        let h = running();
        let g = h.group(&VertexSet::from([3, 4])).unwrap();
        let mut trace = GroupTrace::new();
        trace.push_step(TraceStep::Group(g.step));
        let k = g.hypergraph;
        let pushed = push_cover(&trace, &h, &k, &Cover::new(vec![0, 2]).unwrap(), 2).unwrap();
        assert_eq!(pushed.indices(), &[0, 2]);
        assert_eq!(k.edge(2).as_slice(), &[3]);
        let lifted = lift_cover(&trace, &h, &k, &pushed).unwrap();
        assert_eq!(lifted.indices(), &[0, 2]);
        assert!(lift_cover(&trace, &h, &k, &Cover::new(vec![0]).unwrap()).is_err());
        assert!(push_cover(&trace, &h, &k, &Cover::new(vec![0, 1, 2]).unwrap(), 2).is_err());
    }
}
