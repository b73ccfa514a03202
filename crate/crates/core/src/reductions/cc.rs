//! `d`-Constraint-Cover and its reduction to `d`-flat set cover.
//!
//! An instance has `d²k` boolean variables, 1-constraints (sets of at most
//! `d` literals over distinct variables) and 2-constraints (sets of exactly
//! `d` 1-constraints over pairwise disjoint variables). A solution is an
//! assignment `K0`, `dk` 1-constraints `K1` partitioning `K0`, and `k`
//! 2-constraints `K2` partitioning `K1`, such that no 1-constraint outside
//! `K1` is satisfied by `K0`.
//!
//! Text format (variables and constraint indices 1-based):
//!
//! ```text
//! p cc <d> <k> <|X|> <|C1|> <|C2|>
//! c1 <var>:<bit> ...
//! c2 <c1-index> ...
//! ```

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use super::{Check, Violation};
use crate::error::{Error, Result};
use crate::hypergraph::{Cover, Hypergraph, VertexSet};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Literal {
    /// 0-based variable.
    pub var: u32,
    pub bit: bool,
}

impl Literal {
    pub fn new(var: u32, bit: bool) -> Self {
        Self { var, bit }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcInstance {
    pub d: usize,
    pub k: usize,
    pub num_vars: usize,
    /// Each entry sorted by variable.
    pub c1: Vec<Vec<Literal>>,
    /// Each entry sorted ascending.
    pub c2: Vec<Vec<usize>>,
}

impl CcInstance {
    /// Sorts every constraint and checks the structural invariants.
    pub fn new(d: usize, k: usize, mut c1: Vec<Vec<Literal>>, mut c2: Vec<Vec<usize>>) -> Result<Self> {
        c1.iter_mut().for_each(|c| c.sort_unstable());
        c2.iter_mut().for_each(|c| c.sort_unstable());
        let inst = Self { d, k, num_vars: d * d * k, c1, c2 };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidInstance(msg));
        if self.d == 0 {
            return bad("d must be positive".into());
        }
        if self.num_vars != self.d * self.d * self.k {
            return bad(format!("|X| = {} but d²k = {}", self.num_vars, self.d * self.d * self.k));
        }
        let mut seen = HashSet::new();
        for (i, c) in self.c1.iter().enumerate() {
            if c.is_empty() || c.len() > self.d {
                return bad(format!("1-constraint {} has arity {}", i + 1, c.len()));
            }
            if c.iter().any(|l| l.var as usize >= self.num_vars) {
                return bad(format!("1-constraint {} names an unknown variable", i + 1));
            }
            if c.windows(2).any(|w| w[0].var >= w[1].var) {
                return bad(format!("1-constraint {} repeats a variable", i + 1));
            }
            if !seen.insert(c) {
                return bad(format!("1-constraint {} is listed twice", i + 1));
            }
        }
        let mut seen = HashSet::new();
        for (i, c) in self.c2.iter().enumerate() {
            if c.len() != self.d {
                return bad(format!("2-constraint {} has arity {}, expected {}", i + 1, c.len(), self.d));
            }
            if c.iter().any(|&j| j >= self.c1.len()) || c.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("2-constraint {} has bad or repeated members", i + 1));
            }
            let mut vars = HashSet::new();
            if !c.iter().flat_map(|&j| &self.c1[j]).all(|l| vars.insert(l.var)) {
                return bad(format!("2-constraint {} members share a variable", i + 1));
            }
            if !seen.insert(c) {
                return bad(format!("2-constraint {} is listed twice", i + 1));
            }
        }
        Ok(())
    }

    fn satisfied(&self, c: usize, k0: &[bool]) -> bool {
        self.c1[c].iter().all(|l| k0[l.var as usize] == l.bit)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CcSolution {
    /// Value of every variable.
    pub k0: Vec<bool>,
    /// Indices into `c1`, ascending.
    pub k1: Vec<usize>,
    /// Indices into `c2`, ascending.
    pub k2: Vec<usize>,
}

impl CcSolution {
    pub fn new(k0: Vec<bool>, mut k1: Vec<usize>, mut k2: Vec<usize>) -> Self {
        k1.sort_unstable();
        k2.sort_unstable();
        Self { k0, k1, k2 }
    }
}

fn index_set(what: &str, idx: &[usize], bound: usize) -> Result<HashSet<usize>, Violation> {
    let mut set = HashSet::new();
    for &i in idx {
        if i >= bound || !set.insert(i) {
            return Err(Violation::new(Check::Shape, format!("{what} index {} out of range or repeated", i + 1)));
        }
    }
    Ok(set)
}

/// Checks the three solution conditions, reporting the first one violated.
pub fn cc_verify(inst: &CcInstance, sol: &CcSolution) -> Result<(), Violation> {
    if sol.k0.len() != inst.num_vars {
        return Err(Violation::new(
            Check::Shape,
            format!("assignment has {} values for {} variables", sol.k0.len(), inst.num_vars),
        ));
    }
    let k1 = index_set("K1", &sol.k1, inst.c1.len())?;
    index_set("K2", &sol.k2, inst.c2.len())?;

    let (d, k) = (inst.d, inst.k);
    if sol.k1.len() != d * k {
        return Err(Violation::new(Check::PointI, format!("|K1| = {}, expected dk = {}", sol.k1.len(), d * k)));
    }
    let mut hit = vec![false; inst.num_vars];
    for &c in &sol.k1 {
        for l in &inst.c1[c] {
            if sol.k0[l.var as usize] != l.bit {
                return Err(Violation::new(
                    Check::PointI,
                    format!("1-constraint {} contains x{}={} outside K0", c + 1, l.var + 1, l.bit as u8),
                ));
            }
            hit[l.var as usize] = true;
        }
    }
    if let Some(x) = hit.iter().position(|&h| !h) {
        return Err(Violation::new(Check::PointI, format!("literal of x{} in K0 is not covered by K1", x + 1)));
    }

    if sol.k2.len() != k {
        return Err(Violation::new(Check::PointII, format!("|K2| = {}, expected k = {k}", sol.k2.len())));
    }
    let mut members = HashSet::new();
    for &c in &sol.k2 {
        for &m in &inst.c2[c] {
            if !k1.contains(&m) {
                return Err(Violation::new(
                    Check::PointII,
                    format!("2-constraint {} contains 1-constraint {} outside K1", c + 1, m + 1),
                ));
            }
            members.insert(m);
        }
    }
    if let Some(m) = sol.k1.iter().find(|m| !members.contains(m)) {
        return Err(Violation::new(Check::PointII, format!("1-constraint {} of K1 is not covered by K2", m + 1)));
    }

    if let Some(c) = (0..inst.c1.len()).find(|&c| !k1.contains(&c) && inst.satisfied(c, &sol.k0)) {
        return Err(Violation::new(Check::PointIII, format!("1-constraint {} is satisfied but not in K1", c + 1)));
    }
    Ok(())
}

/// Vertex and edge numbering of the set cover instance built from `I`.
///
/// Vertices (1-based): `v1_x`, then `v2_{x,a}`, then `v3_C`. Edges
/// (0-based): `e1_{x,a}`, then `e2_C` for `C ∈ C1`, then `e3_D` for `D ∈ C2`.
#[derive(Debug, Clone, Copy)]
pub struct CoverNumbering {
    pub num_vars: usize,
    pub num_c1: usize,
    pub num_c2: usize,
}

/// Class of an edge of the reduced instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    Literal { var: usize, bit: bool },
    One(usize),
    Two(usize),
}

impl CoverNumbering {
    pub fn of(inst: &CcInstance) -> Self {
        Self { num_vars: inst.num_vars, num_c1: inst.c1.len(), num_c2: inst.c2.len() }
    }

    pub fn v1(&self, x: usize) -> u32 {
        (x + 1) as u32
    }

    pub fn v2(&self, x: usize, a: bool) -> u32 {
        (self.num_vars + 2 * x + a as usize + 1) as u32
    }

    pub fn v3(&self, c: usize) -> u32 {
        (3 * self.num_vars + c + 1) as u32
    }

    pub fn e1(&self, x: usize, a: bool) -> usize {
        2 * x + a as usize
    }

    pub fn e2(&self, c: usize) -> usize {
        2 * self.num_vars + c
    }

    pub fn e3(&self, d: usize) -> usize {
        2 * self.num_vars + self.num_c1 + d
    }

    pub fn vertices(&self) -> usize {
        3 * self.num_vars + self.num_c1
    }

    pub fn classify(&self, edge: usize) -> EdgeClass {
        let lit = 2 * self.num_vars;
        if edge < lit {
            EdgeClass::Literal { var: edge / 2, bit: edge % 2 == 1 }
        } else if edge < lit + self.num_c1 {
            EdgeClass::One(edge - lit)
        } else {
            EdgeClass::Two(edge - lit - self.num_c1)
        }
    }
}

/// `k' = (d² + d + 1) k`.
pub fn reduced_parameter(d: usize, k: usize) -> usize {
    (d * d + d + 1) * k
}

/// Builds `(H', k')`.
pub fn cc_to_setcover(inst: &CcInstance) -> (Hypergraph, usize) {
    let num = CoverNumbering::of(inst);
    let mut holders: HashMap<Literal, Vec<usize>> = HashMap::new();
    for (c, lits) in inst.c1.iter().enumerate() {
        for &l in lits {
            holders.entry(l).or_default().push(c);
        }
    }
    let mut edges = Vec::with_capacity(2 * inst.num_vars + inst.c1.len() + inst.c2.len());
    for x in 0..inst.num_vars {
        for a in [false, true] {
            let mut e = vec![num.v1(x), num.v2(x, a)];
            if let Some(cs) = holders.get(&Literal::new(x as u32, a)) {
                e.extend(cs.iter().map(|&c| num.v3(c)));
            }
            edges.push(VertexSet::new(e));
        }
    }
    for lits in &inst.c1 {
        edges.push(VertexSet::new(lits.iter().map(|l| num.v2(l.var as usize, l.bit)).collect()));
    }
    for members in &inst.c2 {
        edges.push(VertexSet::new(members.iter().map(|&c| num.v3(c)).collect()));
    }
    let h = Hypergraph::from_sets(num.vertices(), edges).expect("vertex ids in range by construction");
    (h, reduced_parameter(inst.d, inst.k))
}

/// The cover `S1 ∪ S2 ∪ S3`: the literal edges of the values *not* chosen,
/// plus one edge per member of `K1` and of `K2`.
pub fn cc_solution_to_cover(inst: &CcInstance, sol: &CcSolution) -> Result<Cover> {
    cc_verify(inst, sol).map_err(Error::Rejected)?;
    let num = CoverNumbering::of(inst);
    let s1 = sol.k0.iter().enumerate().map(|(x, &a)| num.e1(x, !a));
    let s2 = sol.k1.iter().map(|&c| num.e2(c));
    let s3 = sol.k2.iter().map(|&c| num.e3(c));
    Cover::new(s1.chain(s2).chain(s3).collect())
}

/// Reads a solution back off a cover of size at most `k'`.
///
/// Any such cover takes exactly one literal edge per variable, `dk`
/// 1-constraint edges and `k` 2-constraint edges; a cover that does not is
/// reported as a shape counterexample, as is one whose decoded solution
/// fails verification.
pub fn cover_to_cc_solution(inst: &CcInstance, cover: &Cover) -> Result<CcSolution> {
    let (h, k_prime) = cc_to_setcover(inst);
    if !h.verify_cover(cover)? {
        return Err(Error::InvalidCover("the reduced instance"));
    }
    if cover.len() > k_prime {
        return Err(Error::BadParameter { name: "cover", msg: format!("size {} exceeds k' = {k_prime}", cover.len()) });
    }
    let num = CoverNumbering::of(inst);
    let mut taken: Vec<Vec<bool>> = vec![Vec::new(); inst.num_vars];
    let (mut k1, mut k2) = (Vec::new(), Vec::new());
    for &e in cover.indices() {
        match num.classify(e) {
            EdgeClass::Literal { var, bit } => taken[var].push(bit),
            EdgeClass::One(c) => k1.push(c),
            EdgeClass::Two(c) => k2.push(c),
        }
    }
    let mut k0 = Vec::with_capacity(inst.num_vars);
    for (x, bits) in taken.iter().enumerate() {
        match bits.as_slice() {
            [a] => k0.push(!a),
            _ => {
                return Err(Error::CoverShape(format!(
                    "variable x{} has {} literal edges in the cover, expected 1",
                    x + 1,
                    bits.len()
                )))
            }
        }
    }
    let sol = CcSolution::new(k0, k1, k2);
    cc_verify(inst, &sol).map_err(|v| Error::CoverShape(format!("decoded solution fails {v}")))?;
    Ok(sol)
}

/// A random instance with a planted solution. Extra 1-constraints are never
/// satisfied by the planted assignment, so the planted solution stays valid.
pub fn planted_cc(seed: u64, d: usize, k: usize) -> Result<(CcInstance, CcSolution)> {
    if d == 0 || k == 0 {
        return Err(Error::BadParameter { name: "d, k", msg: "must be positive".into() });
    }
    let mut rng = SplitMix64::new(seed);
    let nv = d * d * k;
    let k0: Vec<bool> = (0..nv).map(|_| rng.coin()).collect();

    let mut vars: Vec<u32> = (0..nv as u32).collect();
    rng.shuffle(&mut vars);
    let mut c1: Vec<Vec<Literal>> = vars
        .chunks(d)
        .map(|chunk| {
            let mut c: Vec<Literal> = chunk.iter().map(|&x| Literal::new(x, k0[x as usize])).collect();
            c.sort_unstable();
            c
        })
        .collect();
    let mut groups: Vec<usize> = (0..d * k).collect();
    rng.shuffle(&mut groups);
    let mut c2: Vec<Vec<usize>> = groups.chunks(d).map(|g| g.to_vec()).collect();
    let planted_c2 = c2.len();

    let mut seen: HashSet<Vec<Literal>> = c1.iter().cloned().collect();
    for _ in 0..rng.between(0, 2 * d * k) {
        let arity = rng.between(1, d);
        let mut c: Vec<Literal> = rng.subset(nv, arity).into_iter().map(|x| Literal::new(x - 1, rng.coin())).collect();
        if c.iter().all(|l| l.bit == k0[l.var as usize]) {
            let i = rng.index(c.len());
            c[i].bit = !c[i].bit;
        }
        if seen.insert(c.clone()) {
            c1.push(c);
        }
    }
    let mut seen2: HashSet<Vec<usize>> = c2.iter().map(|g| sorted(g.clone())).collect();
    let extra = rng.between(0, k + 1);
    for _ in 0..extra * 20 {
        if c2.len() == planted_c2 + extra {
            break;
        }
        let pick: Vec<usize> = rng.subset(c1.len(), d).into_iter().map(|i| i as usize - 1).collect();
        if pick.len() < d {
            break;
        }
        let mut used = HashSet::new();
        if pick.iter().flat_map(|&i| &c1[i]).all(|l| used.insert(l.var)) && seen2.insert(pick.clone()) {
            c2.push(pick);
        }
    }

    // Hide the planted structure behind random orderings.
    let mut p1: Vec<usize> = (0..c1.len()).collect();
    rng.shuffle(&mut p1);
    let mut where1 = vec![0; c1.len()];
    for (new, &old) in p1.iter().enumerate() {
        where1[old] = new;
    }
    let c1: Vec<Vec<Literal>> = p1.iter().map(|&old| c1[old].clone()).collect();
    let mut p2: Vec<usize> = (0..c2.len()).collect();
    rng.shuffle(&mut p2);
    let mut where2 = vec![0; c2.len()];
    for (new, &old) in p2.iter().enumerate() {
        where2[old] = new;
    }
    let c2: Vec<Vec<usize>> = p2.iter().map(|&old| c2[old].iter().map(|&m| where1[m]).collect()).collect();

    let inst = CcInstance::new(d, k, c1, c2)?;
    let sol =
        CcSolution::new(k0, (0..d * k).map(|c| where1[c]).collect(), (0..planted_c2).map(|c| where2[c]).collect());
    Ok((inst, sol))
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

pub fn write_cc(inst: &CcInstance) -> String {
    let mut out = String::new();
    writeln!(out, "p cc {} {} {} {} {}", inst.d, inst.k, inst.num_vars, inst.c1.len(), inst.c2.len()).unwrap();
    for c in &inst.c1 {
        out.push_str("c1");
        for l in c {
            write!(out, " {}:{}", l.var + 1, l.bit as u8).unwrap();
        }
        out.push('\n');
    }
    for c in &inst.c2 {
        out.push_str("c2");
        for m in c {
            write!(out, " {}", m + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_cc(text: &str) -> Result<CcInstance> {
    let perr = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
    let mut header: Option<[usize; 5]> = None;
    let (mut c1, mut c2) = (Vec::new(), Vec::new());
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.trim();
        if line.is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        let mut tok = line.split_whitespace();
        let kind = tok.next().unwrap();
        if kind != "p" && header.is_none() {
            return Err(perr(ln, "constraint before header"));
        }
        match kind {
            "p" => {
                if header.is_some() {
                    return Err(perr(ln, "duplicate header"));
                }
                if tok.next() != Some("cc") {
                    return Err(perr(ln, "expected 'p cc'"));
                }
                let nums: Vec<usize> = tok
                    .map(str::parse)
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| perr(ln, "malformed header"))?;
                header = Some(nums.try_into().map_err(|_| perr(ln, "header needs d k |X| |C1| |C2|"))?);
            }
            "c1" => {
                let mut c = Vec::new();
                for t in tok {
                    let (v, b) = t.split_once(':').ok_or_else(|| perr(ln, "literal must be var:bit"))?;
                    let v: u32 = v.parse().map_err(|_| perr(ln, "bad variable"))?;
                    let bit = match b {
                        "0" => false,
                        "1" => true,
                        _ => return Err(perr(ln, "bit must be 0 or 1")),
                    };
                    if v == 0 {
                        return Err(perr(ln, "variables are 1-based"));
                    }
                    c.push(Literal::new(v - 1, bit));
                }
                c1.push(c);
            }
            "c2" => {
                let mut c = Vec::new();
                for t in tok {
                    let m: usize = t.parse().map_err(|_| perr(ln, "bad constraint index"))?;
                    if m == 0 {
                        return Err(perr(ln, "constraint indices are 1-based"));
                    }
                    c.push(m - 1);
                }
                c2.push(c);
            }
            other => return Err(perr(ln, &format!("unexpected line type '{other}'"))),
        }
    }
    let [d, k, nx, n1, n2] = header.ok_or_else(|| perr(0, "missing header"))?;
    if c1.len() != n1 || c2.len() != n2 {
        return Err(perr(0, "constraint counts disagree with header"));
    }
    if d == 0 || nx != d * d * k {
        return Err(perr(0, "|X| must equal d²k"));
    }
    CcInstance::new(d, k, c1, c2)
}

#[derive(Debug, Serialize)]
pub struct CcJson {
    pub p: &'static str,
    pub d: usize,
    pub k: usize,
    pub x: usize,
    /// `[var, bit]` pairs, 1-based variables.
    pub c1: Vec<Vec<[usize; 2]>>,
    pub c2: Vec<Vec<usize>>,
}

impl From<&CcInstance> for CcJson {
    fn from(i: &CcInstance) -> Self {
        Self {
            p: "cc",
            d: i.d,
            k: i.k,
            x: i.num_vars,
            c1: i.c1.iter().map(|c| c.iter().map(|l| [l.var as usize + 1, l.bit as usize]).collect()).collect(),
            c2: i.c2.iter().map(|c| c.iter().map(|m| m + 1).collect()).collect(),
        }
    }
}
