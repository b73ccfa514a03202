//! `s`-dimensional matching to `d`-Constraint-Cover, with `s = c d²`.
//!
//! Variables `x_{p,q,r,i,j}` for `p < l`, `q, r < d`, `i < m = n^c`,
//! `j < d`. Block `(p,q,r)` has one all-ones row `i` in a solution, and row
//! `i` names the `c`-tuple `Φ(i)`; the `d²` blocks of `p` spell out tuple
//! `t_p`. Incompatibility constraints keep each block to one row and keep
//! tuples orthogonal, local constraints let zero rows be covered, and global
//! constraints tie the decoded tuple of `p` to a member of `S`.
//!
//! Text format:
//!
//! ```text
//! p mdm <n> <s> <|S|> <l>
//! t <v1> ... <vs>        (values in 1..=n)
//! ```

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use super::cc::{cc_verify, CcInstance, CcSolution, Literal};
use super::{Check, Violation};
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

pub const MDM_BRUTE_FORCE_MAX_TUPLES: usize = 20;
/// Upper bound on the number of generated constraints.
pub const MAX_CONSTRAINTS: u128 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdmInstance {
    pub n: usize,
    pub s: usize,
    pub tuples: Vec<Vec<u32>>,
    pub l: usize,
}

impl MdmInstance {
    pub fn new(n: usize, s: usize, tuples: Vec<Vec<u32>>, l: usize) -> Result<Self> {
        for (i, t) in tuples.iter().enumerate() {
            if t.len() != s {
                return Err(Error::InvalidInstance(format!("tuple {} has arity {}, expected {s}", i + 1, t.len())));
            }
            if t.iter().any(|&v| v == 0 || v as usize > n) {
                return Err(Error::InvalidInstance(format!("tuple {} has a value outside 1..={n}", i + 1)));
            }
        }
        Ok(Self { n, s, tuples, l })
    }
}

/// Tuples differing in every coordinate.
pub fn orthogonal(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x != y)
}

/// Parameters and constraint index tables of one reduction run.
#[derive(Debug, Clone)]
pub struct MdmLayout {
    pub d: usize,
    pub c: usize,
    pub s: usize,
    pub n_original: usize,
    /// Ground set size after padding: `n ≡ 1 (mod d)` and `n > d`.
    pub n: usize,
    pub padding: usize,
    pub m: usize,
    pub l: usize,
    pub k: usize,
    pub num_vars: usize,
    m_pow_d: usize,
    c3: Vec<usize>,
    c4: Vec<usize>,
    c5: Vec<usize>,
    c6: HashMap<(usize, Vec<u32>, usize), usize>,
    c6_keys: HashMap<usize, (usize, Vec<u32>)>,
}

impl MdmLayout {
    pub fn var(&self, p: usize, q: usize, r: usize, i: usize, j: usize) -> usize {
        (((p * self.d + q) * self.d + r) * self.m + i) * self.d + j
    }

    /// `Φ(i)`: base-`n` digits of `i`, most significant first, as values `1..=n`.
    pub fn phi(&self, i: usize) -> Vec<u32> {
        let mut out = vec![0u32; self.c];
        let mut rest = i;
        for slot in out.iter_mut().rev() {
            *slot = (rest % self.n) as u32 + 1;
            rest /= self.n;
        }
        out
    }

    /// Inverse of `Φ`, extended to concatenations: a `cd`-tuple maps to its
    /// code in `0..m^d`.
    pub fn phi_inv(&self, t: &[u32]) -> usize {
        t.iter().fold(0, |acc, &v| acc * self.n + (v as usize - 1))
    }

    /// Row of block `(q, r)` in tuple `t_p`.
    pub fn row_of(&self, t: &[u32], q: usize, r: usize) -> usize {
        let start = (q * self.d + r) * self.c;
        self.phi_inv(&t[start..start + self.c])
    }

    /// Code of `t_{p,q}`, the `q`-th `cd`-slice of `t`.
    pub fn slice_code(&self, t: &[u32], q: usize) -> usize {
        let w = self.c * self.d;
        self.phi_inv(&t[q * w..(q + 1) * w])
    }

    fn block(&self, p: usize, q: usize, r: usize) -> usize {
        (p * self.d + q) * self.d + r
    }

    /// The all-zeros 1-constraint of row `i` in block `(p,q,r)`.
    pub fn c3(&self, p: usize, q: usize, r: usize, i: usize) -> usize {
        self.c3[self.block(p, q, r) * self.m + i]
    }

    /// The 2-constraint grouping rows `i, i+1, ..., i+d-1 (mod m)`.
    pub fn c4(&self, p: usize, q: usize, r: usize, i: usize) -> usize {
        self.c4[self.block(p, q, r) * self.m + i]
    }

    /// The 1-constraint setting column `j` of row `i_r` in every block
    /// `(p,q,r)`, where `code` encodes `(i_1, ..., i_d)`.
    pub fn c5(&self, p: usize, q: usize, code: usize, j: usize) -> usize {
        self.c5[((p * self.d + q) * self.m_pow_d + code) * self.d + j]
    }

    /// The 2-constraint joining the `C5` constraints of `t`'s slices, if
    /// `t ∈ S`.
    pub fn c6(&self, p: usize, t: &[u32], j: usize) -> Option<usize> {
        self.c6.get(&(p, t.to_vec(), j)).copied()
    }

    /// `(p, t)` of a 2-constraint built as a `C6`.
    pub fn c6_owner(&self, idx: usize) -> Option<&(usize, Vec<u32>)> {
        self.c6_keys.get(&idx)
    }

    pub fn comment(&self) -> String {
        format!(
            "c layout d={} c={} s={} n={} padding={} m={} l={} k={} vars={}\n",
            self.d, self.c, self.s, self.n, self.padding, self.m, self.l, self.k, self.num_vars
        )
    }
}

struct Builder {
    c1: Vec<Vec<Literal>>,
    c1_index: HashMap<Vec<Literal>, usize>,
    c2: Vec<Vec<usize>>,
    c2_index: HashMap<Vec<usize>, usize>,
}

impl Builder {
    fn add1(&mut self, mut lits: Vec<Literal>) -> usize {
        lits.sort_unstable();
        if let Some(&i) = self.c1_index.get(&lits) {
            return i;
        }
        self.c1.push(lits.clone());
        self.c1_index.insert(lits, self.c1.len() - 1);
        self.c1.len() - 1
    }

    fn add2(&mut self, mut members: Vec<usize>) -> usize {
        members.sort_unstable();
        if let Some(&i) = self.c2_index.get(&members) {
            return i;
        }
        self.c2.push(members.clone());
        self.c2_index.insert(members, self.c2.len() - 1);
        self.c2.len() - 1
    }
}

fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    base.checked_pow(exp.try_into().ok()?)
}

pub fn mdm_to_cc(inst: &MdmInstance, d: usize, c: usize) -> Result<(CcInstance, MdmLayout)> {
    if d < 2 {
        return Err(Error::BadParameter { name: "d", msg: "must be at least 2".into() });
    }
    if c < 1 {
        return Err(Error::BadParameter { name: "c", msg: "must be at least 1".into() });
    }
    if inst.s != c * d * d {
        return Err(Error::BadParameter {
            name: "s",
            msg: format!("arity {} differs from c·d² = {}", inst.s, c * d * d),
        });
    }
    let mut n = inst.n.max(d + 1);
    while n % d != 1 {
        n += 1;
    }
    let too_big = || Error::GuardExceeded { what: "constraints", got: usize::MAX, max: MAX_CONSTRAINTS as usize };
    let m = checked_pow(n, c).ok_or_else(too_big)?;
    assert_eq!(m % d, 1, "n ≡ 1 (mod d) forces m ≡ 1 (mod d)");
    let m_pow_d = checked_pow(m, d).ok_or_else(too_big)?;
    let l = inst.l;
    let (du, mu, lu) = (d as u128, m as u128, l as u128);
    let estimate = lu * du * du * mu * mu * du * du
        + lu * lu * du * du * mu * mu * du * du
        + 2 * lu * du * du * mu
        + lu * du * (m_pow_d as u128) * du
        + lu * (inst.tuples.len() as u128) * du;
    if estimate > MAX_CONSTRAINTS {
        return Err(Error::GuardExceeded {
            what: "constraints",
            got: estimate.min(usize::MAX as u128) as usize,
            max: MAX_CONSTRAINTS as usize,
        });
    }

    let mut layout = MdmLayout {
        d,
        c,
        s: inst.s,
        n_original: inst.n,
        n,
        padding: n - inst.n,
        m,
        l,
        k: d * l * m,
        num_vars: d * d * d * l * m,
        m_pow_d,
        c3: Vec::new(),
        c4: Vec::new(),
        c5: Vec::new(),
        c6: HashMap::new(),
        c6_keys: HashMap::new(),
    };
    let lit = |layout: &MdmLayout, p, q, r, i, j, bit| Literal::new(layout.var(p, q, r, i, j) as u32, bit);
    let mut b = Builder { c1: Vec::new(), c1_index: HashMap::new(), c2: Vec::new(), c2_index: HashMap::new() };

    // Incompatibility: two 1-rows in one block, or non-orthogonal rows in
    // the same block position of two different tuples.
    let phis: Vec<Vec<u32>> = (0..m).map(|i| layout.phi(i)).collect();
    for q in 0..d {
        for r in 0..d {
            for p in 0..l {
                for i in 0..m {
                    for i2 in (0..m).filter(|&i2| i2 != i) {
                        for j in 0..d {
                            for j2 in 0..d {
                                b.add1(vec![lit(&layout, p, q, r, i, j, true), lit(&layout, p, q, r, i2, j2, true)]);
                            }
                        }
                    }
                }
            }
            for p in 0..l {
                for p2 in (0..l).filter(|&p2| p2 != p) {
                    for i in 0..m {
                        for i2 in (0..m).filter(|&i2| !orthogonal(&phis[i], &phis[i2])) {
                            for j in 0..d {
                                for j2 in 0..d {
                                    b.add1(vec![
                                        lit(&layout, p, q, r, i, j, true),
                                        lit(&layout, p2, q, r, i2, j2, true),
                                    ]);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // Local: zero rows and their cyclic windows of d.
    let mut c3 = Vec::with_capacity(l * d * d * m);
    let mut c4 = Vec::with_capacity(l * d * d * m);
    for p in 0..l {
        for q in 0..d {
            for r in 0..d {
                let rows: Vec<usize> =
                    (0..m).map(|i| b.add1((0..d).map(|j| lit(&layout, p, q, r, i, j, false)).collect())).collect();
                for i in 0..m {
                    c4.push(b.add2((0..d).map(|z| rows[(i + z) % m]).collect()));
                }
                c3.extend(rows);
            }
        }
    }
    layout.c3 = c3;
    layout.c4 = c4;

    // Global: one column of the chosen rows across a block row, and the
    // join of those over a tuple of S.
    let mut c5 = Vec::with_capacity(l * d * m_pow_d * d);
    for p in 0..l {
        for q in 0..d {
            for code in 0..m_pow_d {
                let mut rows = vec![0; d];
                let mut rest = code;
                for row in rows.iter_mut().rev() {
                    *row = rest % m;
                    rest /= m;
                }
                for j in 0..d {
                    c5.push(b.add1((0..d).map(|r| lit(&layout, p, q, r, rows[r], j, true)).collect()));
                }
            }
        }
    }
    layout.c5 = c5;
    let mut members_seen = HashSet::new();
    for t in &inst.tuples {
        if !members_seen.insert(t.clone()) {
            continue;
        }
        for p in 0..l {
            for j in 0..d {
                let members = (0..d).map(|q| layout.c5(p, q, layout.slice_code(t, q), j)).collect();
                let idx = b.add2(members);
                layout.c6.insert((p, t.clone(), j), idx);
                layout.c6_keys.insert(idx, (p, t.clone()));
            }
        }
    }

    let cc = CcInstance::new(d, d * l * m, b.c1, b.c2)?;
    debug_assert_eq!(cc.num_vars, layout.num_vars);
    Ok((cc, layout))
}

fn check_matching(inst: &MdmInstance, matching: &[Vec<u32>]) -> Result<()> {
    let bad = |msg: String| Err(Error::BadParameter { name: "matching", msg });
    if matching.len() != inst.l {
        return bad(format!("has {} tuples, expected {}", matching.len(), inst.l));
    }
    for (a, t) in matching.iter().enumerate() {
        if !inst.tuples.contains(t) {
            return bad(format!("tuple {} is not in S", a + 1));
        }
        if let Some(b) = matching[..a].iter().position(|u| !orthogonal(t, u)) {
            return bad(format!("tuples {} and {} are not orthogonal", b + 1, a + 1));
        }
    }
    Ok(())
}

/// Builds the solution of the constraint-cover instance encoding `matching`.
pub fn matching_to_cc_solution(inst: &MdmInstance, layout: &MdmLayout, matching: &[Vec<u32>]) -> Result<CcSolution> {
    check_matching(inst, matching)?;
    let (d, m) = (layout.d, layout.m);
    let mut k0 = vec![false; layout.num_vars];
    let (mut k1, mut k2) = (Vec::new(), Vec::new());
    for (p, t) in matching.iter().enumerate() {
        for q in 0..d {
            for r in 0..d {
                let i = layout.row_of(t, q, r);
                for j in 0..d {
                    k0[layout.var(p, q, r, i, j)] = true;
                }
                k1.extend((0..m).filter(|&i2| i2 != i).map(|i2| layout.c3(p, q, r, i2)));
                // Windows starting just after i up to the wrap, then from
                // the residue of i before it, tile every row but i.
                k2.extend(
                    (0..m)
                        .filter(|&i2| (i2 > i && i2 % d == (i + 1) % d) || (i2 < i && i2 % d == i % d))
                        .map(|i2| layout.c4(p, q, r, i2)),
                );
            }
            let code = layout.slice_code(t, q);
            k1.extend((0..d).map(|j| layout.c5(p, q, code, j)));
        }
        k2.extend((0..d).map(|j| layout.c6(p, t, j).expect("matching tuples are in S")));
    }
    Ok(CcSolution::new(k0, k1, k2))
}

/// Decodes a matching from a solution, checking the row, `K1` and `K2`
/// shapes before the general solution conditions so that a failure names
/// the structural property that broke.
pub fn cc_solution_to_matching(
    cc: &CcInstance,
    layout: &MdmLayout,
    inst: &MdmInstance,
    sol: &CcSolution,
) -> Result<Vec<Vec<u32>>, Violation> {
    let (d, m, l) = (layout.d, layout.m, layout.l);
    if sol.k0.len() != layout.num_vars {
        return Err(Violation::new(Check::Shape, "assignment length differs from |X|"));
    }
    let k1: HashSet<usize> = sol.k1.iter().copied().collect();
    let k2: HashSet<usize> = sol.k2.iter().copied().collect();
    if k1.len() != sol.k1.len() || k2.len() != sol.k2.len() {
        return Err(Violation::new(Check::Shape, "repeated constraint index"));
    }
    if sol.k1.iter().any(|&i| i >= cc.c1.len()) || sol.k2.iter().any(|&i| i >= cc.c2.len()) {
        return Err(Violation::new(Check::Shape, "constraint index out of range"));
    }

    let mut rows = vec![0usize; l * d * d];
    for p in 0..l {
        for q in 0..d {
            for r in 0..d {
                let ones: Vec<(usize, usize)> = (0..m)
                    .flat_map(|i| (0..d).map(move |j| (i, j)))
                    .filter(|&(i, j)| sol.k0[layout.var(p, q, r, i, j)])
                    .collect();
                let block = format!("block ({},{},{})", p + 1, q + 1, r + 1);
                let Some(&(i, _)) = ones.first() else {
                    return Err(Violation::new(Check::Claim1, format!("{block} has no 1")));
                };
                if ones.iter().any(|&(i2, _)| i2 != i) {
                    return Err(Violation::new(Check::Claim1, format!("{block} has 1s in two rows")));
                }
                if ones.len() != d {
                    return Err(Violation::new(Check::Claim1, format!("{block} row {} is only partly 1", i + 1)));
                }
                rows[layout.block(p, q, r)] = i;
            }
        }
    }
    let decoded: Vec<Vec<u32>> =
        (0..l).map(|p| (0..d * d).flat_map(|qr| layout.phi(rows[p * d * d + qr])).collect()).collect();

    let mut expected = HashSet::new();
    for (p, t) in decoded.iter().enumerate() {
        for q in 0..d {
            for r in 0..d {
                let i = rows[layout.block(p, q, r)];
                expected.extend((0..m).filter(|&i2| i2 != i).map(|i2| layout.c3(p, q, r, i2)));
            }
            let code = layout.slice_code(t, q);
            expected.extend((0..d).map(|j| layout.c5(p, q, code, j)));
        }
    }
    if let Some(c) = expected.iter().find(|c| !k1.contains(c)) {
        return Err(Violation::new(Check::Claim2, format!("K1 lacks forced 1-constraint {}", c + 1)));
    }
    if let Some(c) = sol.k1.iter().find(|c| !expected.contains(c)) {
        return Err(Violation::new(Check::Claim2, format!("K1 has unexpected 1-constraint {}", c + 1)));
    }

    for (p, t) in decoded.iter().enumerate() {
        if !inst.tuples.contains(t) {
            return Err(Violation::new(Check::Claim3, format!("decoded tuple {} is not in S", p + 1)));
        }
        if let Some(j) = (0..d).find(|&j| !layout.c6(p, t, j).is_some_and(|c| k2.contains(&c))) {
            return Err(Violation::new(
                Check::Claim3,
                format!("K2 lacks the join of tuple {} in column {}", p + 1, j + 1),
            ));
        }
        if let Some(p2) = decoded[..p].iter().position(|u| !orthogonal(t, u)) {
            return Err(Violation::new(
                Check::Claim3,
                format!("decoded tuples {} and {} are not orthogonal", p2 + 1, p + 1),
            ));
        }
    }
    for &c in &sol.k2 {
        if let Some((p, t)) = layout.c6_owner(c) {
            if decoded[*p] != *t {
                return Err(Violation::new(
                    Check::Claim3,
                    format!("K2 joins a tuple other than decoded tuple {}", p + 1),
                ));
            }
        }
    }

    cc_verify(cc, sol)?;
    Ok(decoded)
}

/// Size of a largest matching, by depth-first search over `S`.
pub fn mdm_brute_force(inst: &MdmInstance) -> Result<usize> {
    let t = &inst.tuples;
    if t.len() > MDM_BRUTE_FORCE_MAX_TUPLES {
        return Err(Error::GuardExceeded { what: "tuples", got: t.len(), max: MDM_BRUTE_FORCE_MAX_TUPLES });
    }
    fn go(t: &[Vec<u32>], from: usize, chosen: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(chosen.len());
        if chosen.len() + (t.len() - from) <= *best {
            return;
        }
        for i in from..t.len() {
            if chosen.iter().all(|&c| orthogonal(&t[c], &t[i])) {
                chosen.push(i);
                go(t, i + 1, chosen, best);
                chosen.pop();
            }
        }
    }
    let mut best = 0;
    go(t, 0, &mut Vec::new(), &mut best);
    Ok(best)
}

/// An instance over `1..=n` containing a planted matching of size `l`
/// (returned in order) plus up to `noise` random tuples.
pub fn planted_mdm(seed: u64, n: usize, s: usize, l: usize, noise: usize) -> Result<(MdmInstance, Vec<Vec<u32>>)> {
    if l > n {
        return Err(Error::BadParameter { name: "l", msg: format!("a matching of size {l} needs n >= {l}") });
    }
    let mut rng = SplitMix64::new(seed);
    let mut matching = vec![vec![0u32; s]; l];
    for coord in 0..s {
        let mut values: Vec<u32> = (1..=n as u32).collect();
        rng.shuffle(&mut values);
        for (p, t) in matching.iter_mut().enumerate() {
            t[coord] = values[p];
        }
    }
    let mut tuples = matching.clone();
    for _ in 0..rng.between(0, noise) {
        let t: Vec<u32> = (0..s).map(|_| rng.between(1, n) as u32).collect();
        if !tuples.contains(&t) {
            tuples.push(t);
        }
    }
    rng.shuffle(&mut tuples);
    Ok((MdmInstance::new(n, s, tuples, l)?, matching))
}

pub fn write_mdm(inst: &MdmInstance) -> String {
    let mut out = String::new();
    writeln!(out, "p mdm {} {} {} {}", inst.n, inst.s, inst.tuples.len(), inst.l).unwrap();
    for t in &inst.tuples {
        out.push('t');
        for v in t {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_mdm(text: &str) -> Result<MdmInstance> {
    let perr = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
    let mut header: Option<[usize; 4]> = None;
    let mut tuples = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.trim();
        if line.is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next().unwrap() {
            "p" => {
                if header.is_some() {
                    return Err(perr(ln, "duplicate header"));
                }
                if tok.next() != Some("mdm") {
                    return Err(perr(ln, "expected 'p mdm'"));
                }
                let nums: Vec<usize> = tok
                    .map(str::parse)
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| perr(ln, "malformed header"))?;
                header = Some(nums.try_into().map_err(|_| perr(ln, "header needs n s |S| l"))?);
            }
            "t" => {
                let [n, s, _, _] = header.ok_or_else(|| perr(ln, "tuple before header"))?;
                let t: Vec<u32> =
                    tok.map(str::parse).collect::<std::result::Result<_, _>>().map_err(|_| perr(ln, "bad value"))?;
                if t.len() != s {
                    return Err(perr(ln, "tuple arity differs from header"));
                }
                if t.iter().any(|&v| v == 0 || v as usize > n) {
                    return Err(perr(ln, "value out of range"));
                }
                tuples.push(t);
            }
            other => return Err(perr(ln, &format!("unexpected line type '{other}'"))),
        }
    }
    let [n, s, count, l] = header.ok_or_else(|| perr(0, "missing header"))?;
    if tuples.len() != count {
        return Err(perr(0, "tuple count differs from header"));
    }
    MdmInstance::new(n, s, tuples, l)
}

#[derive(Debug, Serialize)]
pub struct MdmJson<'a> {
    pub p: &'static str,
    pub n: usize,
    pub s: usize,
    pub l: usize,
    pub t: &'a [Vec<u32>],
}

impl<'a> From<&'a MdmInstance> for MdmJson<'a> {
    fn from(i: &'a MdmInstance) -> Self {
        Self { p: "mdm", n: i.n, s: i.s, l: i.l, t: &i.tuples }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_examples() {
        let two = MdmInstance::new(2, 3, vec![vec![1, 1, 1], vec![2, 2, 2]], 2).unwrap();
        assert_eq!(mdm_brute_force(&two).unwrap(), 2);
        let clash = MdmInstance::new(2, 3, vec![vec![1, 1, 1], vec![1, 2, 2]], 1).unwrap();
        assert_eq!(mdm_brute_force(&clash).unwrap(), 1);
        assert_eq!(mdm_brute_force(&MdmInstance::new(2, 3, vec![], 0).unwrap()).unwrap(), 0);
    }

    #[test]
    fn phi_is_lexicographic() {
        let (m, _) = planted_mdm(0, 3, 8, 1, 0).unwrap();
        let (_, layout) = mdm_to_cc(&m, 2, 2).unwrap();
        assert_eq!(layout.m, 9);
        assert_eq!(layout.phi(0), vec![1, 1]);
        assert_eq!(layout.phi(1), vec![1, 2]);
        assert_eq!(layout.phi(5), vec![2, 3]);
        for i in 0..9 {
            assert_eq!(layout.phi_inv(&layout.phi(i)), i);
        }
    }

    #[test]
    fn tiny_layout_counts() {
        let m = MdmInstance::new(3, 4, vec![vec![1, 2, 3, 1]], 1).unwrap();
        let (cc, layout) = mdm_to_cc(&m, 2, 1).unwrap();
        assert_eq!((layout.n, layout.m, layout.k, layout.padding), (3, 3, 6, 0));
        assert_eq!(cc.num_vars, 24);
        assert_eq!(cc.k, 6);
        let sol = matching_to_cc_solution(&m, &layout, &m.tuples).unwrap();
        assert_eq!(sol.k1.len(), 2 * 2 * 3);
        assert_eq!(sol.k2.len(), 6);
        assert_eq!(cc_verify(&cc, &sol), Ok(()));
        assert_eq!(cc_solution_to_matching(&cc, &layout, &m, &sol).unwrap(), m.tuples);
    }

    #[test]
    fn padding_reaches_residue_one() {
        let m = MdmInstance::new(4, 4, vec![], 0).unwrap();
        let (_, layout) = mdm_to_cc(&m, 2, 1).unwrap();
        assert_eq!((layout.n, layout.padding), (5, 1));
        let m = MdmInstance::new(1, 9, vec![], 0).unwrap();
        let (_, layout) = mdm_to_cc(&m, 3, 1).unwrap();
        assert_eq!(layout.n, 4);
    }

    #[test]
    fn arity_mismatch_rejected() {
        let m = MdmInstance::new(3, 3, vec![], 1).unwrap();
        assert!(matches!(mdm_to_cc(&m, 2, 1), Err(Error::BadParameter { name: "s", .. })));
    }

    #[test]
    fn extra_one_is_a_row_violation() {
        let m = MdmInstance::new(3, 4, vec![vec![1, 2, 3, 1]], 1).unwrap();
        let (cc, layout) = mdm_to_cc(&m, 2, 1).unwrap();
        let mut sol = matching_to_cc_solution(&m, &layout, &m.tuples).unwrap();
        let i = layout.row_of(&m.tuples[0], 0, 0);
        sol.k0[layout.var(0, 0, 0, (i + 1) % 3, 0)] = true;
        assert_eq!(cc_solution_to_matching(&cc, &layout, &m, &sol).unwrap_err().check, Check::Claim1);
    }

    #[test]
    fn non_matching_rejected() {
        let m = MdmInstance::new(3, 4, vec![vec![1, 2, 3, 1], vec![1, 3, 2, 2]], 2).unwrap();
        let (_, layout) = mdm_to_cc(&m, 2, 1).unwrap();
        assert!(matching_to_cc_solution(&m, &layout, &m.tuples).is_err());
        assert!(matching_to_cc_solution(&m, &layout, &m.tuples[..1]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let m = MdmInstance::new(3, 4, vec![vec![1, 2, 3, 1]], 1).unwrap();
        let text = write_mdm(&m);
        assert_eq!(text, "p mdm 3 4 1 1\nt 1 2 3 1\n");
        assert_eq!(parse_mdm(&text).unwrap(), m);
        assert!(parse_mdm("p mdm 3 4 1 1\nt 1 2 3\n").is_err());
        assert!(parse_mdm("p mdm 3 4 1 1\nt 1 2 3 4\n").is_err());
    }
}
