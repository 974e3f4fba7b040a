//! Brute-force ground truth: completion enumeration, automorphisms, the
//! optimality/parity clauses and the property suites built on them.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::completion::{
    antipodal_complete, dispatch_complete, is_member_fast, pode_independent, CompletionError, CompletionResult,
    Completer, DispatchOptions,
};
use crate::graph::{
    antipodal_partners, henson_violation, EdgeLabelledGraph, GraphError, PodedGraph, TriangleTable,
};
use crate::params::{admissibility_verdict, Case, Ext, Kind, ParamError, ParameterSet};

pub const DEFAULT_MAX_NON_EDGES: usize = 12;
pub const DEFAULT_MAX_AUT_VERTICES: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} too large: {size} exceeds the bound {bound}")]
    TooLarge { what: &'static str, size: usize, bound: usize },
    #[error("the oracle needs a finite diameter")]
    InfiniteDiameter,
    #[error("empty base unsupported: {0}")]
    EmptyBaseUnsupported(String),
    #[error("no canonical amalgamation for this class: {0}")]
    Unsupported(String),
    #[error("invalid amalgamation configuration: {0}")]
    BadConfiguration(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Completion(#[from] CompletionError),
    #[error(transparent)]
    Params(#[from] ParamError),
}

/// Index of the pair `u < v` among the pairs of `0..n` in lexicographic order.
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Visit every completion of `g` in the class, in lexicographic order of
/// the distance vector over the non-edges (sorted by `(u, v)`).
pub fn for_each_completion<F>(
    g: &EdgeLabelledGraph,
    p: &ParameterSet,
    max_non_edges: usize,
    mut f: F,
) -> Result<(), OracleError>
where
    F: FnMut(&EdgeLabelledGraph) -> ControlFlow<()>,
{
    let delta = p.delta_fin().ok_or(OracleError::InfiniteDiameter)?;
    if g.max_label() > delta {
        return Err(GraphError::OutOfRange(g.max_label()).into());
    }
    let ne = g.non_edges();
    if ne.len() > max_non_edges {
        return Err(OracleError::TooLarge { what: "non-edge count", size: ne.len(), bound: max_non_edges });
    }
    let table = TriangleTable::new(p);
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                let (a, b, c) = (g.raw(u, v), g.raw(v, w), g.raw(u, w));
                if a != 0 && b != 0 && c != 0 && !table.allowed(a, b, c) {
                    return Ok(());
                }
            }
        }
    }

    struct Search<'a> {
        ne: &'a [(usize, usize)],
        table: &'a TriangleTable,
        p: &'a ParameterSet,
        delta: u32,
    }

    fn rec(
        s: &Search,
        work: &mut EdgeLabelledGraph,
        i: usize,
        f: &mut dyn FnMut(&EdgeLabelledGraph) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if i == s.ne.len() {
            if s.p.henson.is_empty() || henson_violation(work, s.p).is_none() {
                return f(work);
            }
            return ControlFlow::Continue(());
        }
        let (u, v) = s.ne[i];
        for x in 1..=s.delta {
            let ok = (0..work.n()).all(|w| {
                let (a, b) = (work.raw(u, w), work.raw(v, w));
                a == 0 || b == 0 || s.table.allowed(x, a, b)
            });
            if ok {
                work.set(u, v, x);
                let flow = rec(s, work, i + 1, f);
                work.unset(u, v);
                flow?;
            }
        }
        ControlFlow::Continue(())
    }

    let s = Search { ne: &ne, table: &table, p, delta };
    let mut work = g.clone();
    let _ = rec(&s, &mut work, 0, &mut f);
    Ok(())
}

/// All completions of a partial graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletionEnumeration {
    pub input: EdgeLabelledGraph,
    pub completions: Vec<EdgeLabelledGraph>,
}

impl CompletionEnumeration {
    pub fn is_empty(&self) -> bool {
        self.completions.is_empty()
    }

    pub fn len(&self) -> usize {
        self.completions.len()
    }

    /// Distances taken by `(u, v)` across all completions.
    pub fn values(&self, u: usize, v: usize) -> BTreeSet<u32> {
        self.completions.iter().map(|c| c.raw(u, v)).collect()
    }

    pub fn profile(&self) -> PairProfile {
        let n = self.input.n();
        let mut masks = vec![0u32; n * n.saturating_sub(1) / 2];
        for c in &self.completions {
            for (u, v) in all_pairs(n) {
                masks[pair_index(n, u, v)] |= 1 << c.raw(u, v);
            }
        }
        PairProfile { n, completable: !self.completions.is_empty(), masks }
    }
}

pub fn enumerate_completions(g: &EdgeLabelledGraph, p: &ParameterSet) -> Result<CompletionEnumeration, OracleError> {
    enumerate_completions_bounded(g, p, DEFAULT_MAX_NON_EDGES)
}

pub fn enumerate_completions_bounded(
    g: &EdgeLabelledGraph,
    p: &ParameterSet,
    max_non_edges: usize,
) -> Result<CompletionEnumeration, OracleError> {
    let mut completions = Vec::new();
    for_each_completion(g, p, max_non_edges, |c| {
        completions.push(c.clone());
        ControlFlow::Continue(())
    })?;
    Ok(CompletionEnumeration { input: g.clone(), completions })
}

pub fn is_completable(g: &EdgeLabelledGraph, p: &ParameterSet) -> Result<bool, OracleError> {
    let mut found = false;
    for_each_completion(g, p, DEFAULT_MAX_NON_EDGES, |_| {
        found = true;
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Every complete member of the class on `n` vertices.
pub fn enumerate_members(p: &ParameterSet, n: usize) -> Result<Vec<EdgeLabelledGraph>, OracleError> {
    let pairs = n * n.saturating_sub(1) / 2;
    Ok(enumerate_completions_bounded(&EdgeLabelledGraph::new(n), p, pairs)?.completions)
}

/// Permutations preserving the partial distance map, in lexicographic order.
pub fn automorphisms(g: &EdgeLabelledGraph) -> Result<Vec<Vec<usize>>, OracleError> {
    automorphisms_bounded(g, DEFAULT_MAX_AUT_VERTICES)
}

pub fn automorphisms_bounded(g: &EdgeLabelledGraph, max_vertices: usize) -> Result<Vec<Vec<usize>>, OracleError> {
    let n = g.n();
    if n > max_vertices {
        return Err(OracleError::TooLarge { what: "vertex count", size: n, bound: max_vertices });
    }
    // Label histogram of each vertex; an automorphism preserves it.
    let width = g.max_label() as usize + 1;
    let mut hist = vec![0u8; n * width];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                hist[u * width + g.raw(u, v) as usize] += 1;
            }
        }
    }
    let signature: Vec<&[u8]> = hist.chunks(width).collect();
    if (0..n).all(|u| (u + 1..n).all(|v| signature[u] != signature[v])) {
        return Ok(vec![(0..n).collect()]);
    }

    fn rec(
        g: &EdgeLabelledGraph,
        sig: &[&[u8]],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = perm.len();
        if i == g.n() {
            out.push(perm.clone());
            return;
        }
        for j in 0..g.n() {
            if used[j] || sig[i] != sig[j] {
                continue;
            }
            if perm.iter().enumerate().all(|(k, &pk)| g.raw(k, i) == g.raw(pk, j)) {
                used[j] = true;
                perm.push(j);
                rec(g, sig, perm, used, out);
                perm.pop();
                used[j] = false;
            }
        }
    }

    let mut out = Vec::new();
    rec(g, &signature, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    Ok(out)
}

/// Whether renaming `u` to `perm[u]` maps every distance of `g` onto itself.
pub fn preserves(g: &EdgeLabelledGraph, perm: &[usize]) -> bool {
    let n = g.n();
    (0..n).all(|u| (u + 1..n).all(|v| g.raw(u, v) == g.raw(perm[u], perm[v])))
}

/// Distances each pair takes over all completions of one input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairProfile {
    pub n: usize,
    pub completable: bool,
    /// Bit `x` of `masks[pair_index(n, u, v)]` is set iff some completion
    /// has `d(u, v) = x`.
    pub masks: Vec<u32>,
}

impl PairProfile {
    pub fn values(&self, u: usize, v: usize) -> impl Iterator<Item = u32> + '_ {
        let mask = self.masks[pair_index(self.n, u, v)];
        (1..32).filter(move |x| mask >> x & 1 == 1)
    }
}

/// Completion profiles of every partial graph on `n` vertices at once.
///
/// A state assigns each pair a digit in `0..=δ` (`0` unknown). The profile
/// of an incomplete state is the union of the profiles of its one-step
/// refinements at the first unknown pair, so one pass from the largest
/// state down fills the whole table.
pub struct ProfileTable {
    n: usize,
    delta: u32,
    pairs: Vec<(usize, usize)>,
    pow: Vec<usize>,
    table: Vec<u64>,
}

impl ProfileTable {
    pub fn build(p: &ParameterSet, n: usize) -> Result<Self, OracleError> {
        let delta = p.delta_fin().ok_or(OracleError::InfiniteDiameter)?;
        let pairs = all_pairs(n);
        let k = pairs.len();
        if k * delta as usize > 64 {
            return Err(OracleError::TooLarge { what: "pairs x diameter", size: k * delta as usize, bound: 64 });
        }
        let base = delta as usize + 1;
        let mut pow = Vec::with_capacity(k + 1);
        let mut acc = 1usize;
        for _ in 0..=k {
            pow.push(acc);
            acc = acc.checked_mul(base).ok_or(OracleError::TooLarge { what: "state count", size: usize::MAX, bound: 0 })?;
        }
        let size = pow[k];
        if size > 200_000_000 {
            return Err(OracleError::TooLarge { what: "state count", size, bound: 200_000_000 });
        }
        let triples: Vec<[usize; 3]> = (0..n)
            .flat_map(|u| {
                (u + 1..n).flat_map(move |v| {
                    (v + 1..n).map(move |w| [pair_index(n, u, v), pair_index(n, v, w), pair_index(n, u, w)])
                })
            })
            .collect();
        let tri = TriangleTable::new(p);
        let mut table = vec![0u64; size];
        let mut digits = vec![0u32; k];
        for s in (0..size).rev() {
            let mut rest = s;
            let mut first_zero = None;
            for (i, d) in digits.iter_mut().enumerate() {
                *d = (rest % base) as u32;
                rest /= base;
                if *d == 0 && first_zero.is_none() {
                    first_zero = Some(i);
                }
            }
            table[s] = match first_zero {
                Some(i) => (1..base).fold(0, |m, x| m | table[s + x * pow[i]]),
                None => {
                    let metric = triples.iter().all(|t| tri.allowed(digits[t[0]], digits[t[1]], digits[t[2]]));
                    let member = metric && {
                        p.henson.is_empty() || {
                            let mut g = EdgeLabelledGraph::new(n);
                            for (i, &(u, v)) in pairs.iter().enumerate() {
                                g.set(u, v, digits[i]);
                            }
                            henson_violation(&g, p).is_none()
                        }
                    };
                    if member {
                        digits.iter().enumerate().fold(0, |m, (i, &d)| m | 1 << (i * delta as usize + d as usize - 1))
                    } else {
                        0
                    }
                }
            };
        }
        Ok(ProfileTable { n, delta, pairs, pow, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn state_of(&self, g: &EdgeLabelledGraph) -> usize {
        self.pairs.iter().enumerate().map(|(i, &(u, v))| g.raw(u, v) as usize * self.pow[i]).sum()
    }

    pub fn graph_of(&self, s: usize) -> EdgeLabelledGraph {
        let base = self.delta as usize + 1;
        let mut g = EdgeLabelledGraph::new(self.n);
        let mut rest = s;
        for &(u, v) in &self.pairs {
            let d = (rest % base) as u32;
            rest /= base;
            if d != 0 {
                g.set(u, v, d);
            }
        }
        g
    }

    pub fn completable(&self, s: usize) -> bool {
        self.pairs.is_empty() || self.table[s] != 0
    }

    pub fn profile(&self, s: usize) -> PairProfile {
        let d = self.delta as usize;
        let bits = self.table[s];
        let masks = (0..self.pairs.len()).map(|i| (((bits >> (i * d)) & ((1 << d) - 1)) as u32) << 1).collect();
        PairProfile { n: self.n, completable: self.completable(s), masks }
    }
}

/// The optimality and parity clauses relating the engine output `d̄` to an
/// arbitrary completion `d'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Clauses {
    m: u32,
    bipartite: bool,
    iib: bool,
    parity_lo: u32,
    parity_hi: u32,
    exception: Option<u32>,
}

impl Clauses {
    pub fn new(p: &ParameterSet, m: u32) -> Self {
        let v = admissibility_verdict(p);
        let bipartite = v.kind == Kind::Bipartite;
        let fin = |e: Ext| e.finite().unwrap_or(u32::MAX);
        let (k1, k2) = (fin(p.k1), fin(p.k2));
        let c = fin(p.c());
        let delta = fin(p.delta);
        let exception = (v.case == Case::III
            && c == 2 * delta + k1 + 1
            && c != 2 * k1 + 2 * k2 + 1
            && m > k1
            && k1 > 1)
            .then_some(k1);
        Clauses {
            m,
            bipartite,
            iib: v.case == Case::IIB,
            parity_lo: k1.min(m.saturating_sub(1)),
            parity_hi: k2.max(m + 1),
            exception,
        }
    }

    pub fn optimality_ok(&self, dbar: u32, dp: u32) -> bool {
        let m = self.m;
        if self.bipartite {
            return (dp >= dbar && dbar > m) || (dp <= dbar && dbar <= m) || (m..=m + 1).contains(&dbar);
        }
        (dp >= dbar && dbar >= m)
            || (dp <= dbar && dbar <= m)
            || (self.iib && dbar + 1 == m && dp > m && dp % 2 == dbar % 2)
    }

    pub fn parity_applies(&self, dbar: u32) -> bool {
        if self.bipartite {
            return true;
        }
        (dbar <= self.parity_lo || dbar >= self.parity_hi) && self.exception != Some(dbar)
    }

    pub fn parity_ok(&self, dbar: u32, dp: u32) -> bool {
        !self.parity_applies(dbar) || dbar % 2 == dp % 2
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportViolation {
    pub instance: serde_json::Value,
    pub clause: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub checked: usize,
    pub violations: Vec<ReportViolation>,
    pub skipped: Vec<String>,
}

const MAX_RECORDED: usize = 1000;

impl Report {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violation(&mut self, instance: serde_json::Value, clause: impl Into<String>) {
        if self.violations.len() < MAX_RECORDED {
            self.violations.push(ReportViolation { instance, clause: clause.into() });
        } else if self.violations.len() == MAX_RECORDED {
            self.violations.push(ReportViolation { instance: json!(null), clause: "truncated".into() });
        }
    }

    pub fn skip(&mut self, reason: impl Into<String>) {
        self.skipped.push(reason.into());
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        for v in other.violations {
            self.violation(v.instance, v.clause);
        }
        self.skipped.extend(other.skipped);
    }
}

fn instance(g: &EdgeLabelledGraph, p: &ParameterSet, pair: Option<(usize, usize)>) -> serde_json::Value {
    match pair {
        Some((u, v)) => json!({"params": p.to_string(), "graph": g, "pair": [u, v]}),
        None => json!({"params": p.to_string(), "graph": g}),
    }
}

/// Compare one engine run with the completion profile of its input.
/// `clauses` is `None` when only completability is compared.
pub fn audit(
    g: &EdgeLabelledGraph,
    result: &CompletionResult,
    profile: &PairProfile,
    clauses: Option<&Clauses>,
    p: &ParameterSet,
    report: &mut Report,
) {
    report.checked += 1;
    if result.is_success() != profile.completable {
        report.violation(instance(g, p, None), "equivalence");
        return;
    }
    if !result.is_success() {
        return;
    }
    let Some(cl) = clauses else { return };
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let dbar = result.graph.raw(u, v);
            for dp in profile.values(u, v) {
                if !cl.optimality_ok(dbar, dp) {
                    report.violation(instance(g, p, Some((u, v))), format!("optimality: engine {dbar}, completion {dp}"));
                }
                if !cl.parity_ok(dbar, dp) {
                    report.violation(instance(g, p, Some((u, v))), format!("parity: engine {dbar}, completion {dp}"));
                }
            }
        }
    }
}

/// Check that every automorphism of `g` is one of `out`.
pub fn audit_automorphisms(
    g: &EdgeLabelledGraph,
    out: &EdgeLabelledGraph,
    p: &ParameterSet,
    report: &mut Report,
) -> Result<(), OracleError> {
    for perm in automorphisms(g)? {
        if !preserves(out, &perm) {
            report.violation(json!({"params": p.to_string(), "graph": g, "permutation": perm}), "automorphism");
        }
    }
    Ok(())
}

fn clause_run(
    g: &EdgeLabelledGraph,
    p: &ParameterSet,
    m: u32,
    use_optimality: bool,
    use_parity: bool,
) -> Result<Report, OracleError> {
    let completer = Completer::new(p, m)?;
    let result = completer.complete(g)?;
    let all = enumerate_completions(g, p)?;
    let cl = Clauses::new(p, m);
    let mut report = Report { checked: 1, ..Report::default() };
    if result.is_success() == all.is_empty() {
        report.violation(instance(g, p, None), "equivalence");
        return Ok(report);
    }
    if !result.is_success() {
        report.skip("no completion exists");
        return Ok(report);
    }
    for c in &all.completions {
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let (dbar, dp) = (result.graph.raw(u, v), c.raw(u, v));
                if use_optimality && !cl.optimality_ok(dbar, dp) {
                    report.violation(instance(c, p, Some((u, v))), format!("optimality: engine {dbar}, completion {dp}"));
                }
                if use_parity && !cl.parity_ok(dbar, dp) {
                    report.violation(instance(c, p, Some((u, v))), format!("parity: engine {dbar}, completion {dp}"));
                }
            }
        }
    }
    Ok(report)
}

/// Check the engine output against every oracle completion per the
/// optimality clauses.
pub fn verify_optimality(g: &EdgeLabelledGraph, p: &ParameterSet, m: u32) -> Result<Report, OracleError> {
    clause_run(g, p, m, true, false)
}

/// Check parity agreement where the parity clause applies.
pub fn verify_parity(g: &EdgeLabelledGraph, p: &ParameterSet, m: u32) -> Result<Report, OracleError> {
    clause_run(g, p, m, false, true)
}

/// Check that the dispatcher's output is invariant under the input's
/// automorphisms, where that is claimed.
pub fn verify_automorphism_preservation(g: &EdgeLabelledGraph, p: &ParameterSet) -> Result<Report, OracleError> {
    let mut report = Report::default();
    let kind = admissibility_verdict(p).kind;
    if kind == Kind::Bipartite && !g.is_connected() {
        report.skip("disconnected bipartite input: automorphism preservation is not claimed");
        return Ok(report);
    }
    if kind.is_antipodal() && !pode_independent(p, g) {
        report.skip("pode-dependent antipodal input: use a poded input");
        return Ok(report);
    }
    let r = dispatch_complete(g, p, &DispatchOptions::default())?;
    if !r.is_success() {
        report.skip("no completion exists");
        return Ok(report);
    }
    report.checked += 1;
    audit_automorphisms(g, &r.graph, p, &mut report)?;
    Ok(report)
}

/// Automorphisms of a poded antipodal input that fix the pode setwise must
/// preserve its completion.
pub fn verify_automorphism_preservation_poded(pg: &PodedGraph, p: &ParameterSet) -> Result<Report, OracleError> {
    let mut report = Report::default();
    let r = antipodal_complete(pg, p)?;
    if !r.is_success() {
        report.skip("no completion exists");
        return Ok(report);
    }
    report.checked += 1;
    for perm in automorphisms(&pg.graph)? {
        if (0..perm.len()).all(|x| pg.pode[perm[x]] == pg.pode[x]) && !preserves(&r.graph, &perm) {
            report.violation(json!({"params": p.to_string(), "graph": pg.graph, "permutation": perm}), "automorphism");
        }
    }
    Ok(report)
}

/// Base `C` on vertices `0..c`, with `A` and `B` extending it; the shared
/// vertices come first in both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmalgamTriple {
    pub base: EdgeLabelledGraph,
    pub left: EdgeLabelledGraph,
    pub right: EdgeLabelledGraph,
}

impl AmalgamTriple {
    pub fn new(
        base: EdgeLabelledGraph,
        left: EdgeLabelledGraph,
        right: EdgeLabelledGraph,
    ) -> Result<Self, OracleError> {
        let c: Vec<usize> = (0..base.n()).collect();
        if left.n() < c.len() || right.n() < c.len() || left.induced(&c) != base || right.induced(&c) != base {
            return Err(OracleError::BadConfiguration("base is not a common prefix".into()));
        }
        Ok(AmalgamTriple { base, left, right })
    }

    /// Vertices: `left` in place, then the vertices of `right` outside the
    /// base; no distances between the two sides.
    pub fn free_amalgam(&self) -> EdgeLabelledGraph {
        let c: Vec<usize> = (0..self.base.n()).collect();
        free_amalgam_over(&self.left, &c, &self.right, &c).expect("validated").0
    }
}

/// Free amalgam identifying `x_base[i]` with `y_base[i]`. Keeps `x` in place
/// and appends the rest of `y`; returns where each `y` vertex went.
pub fn free_amalgam_over(
    x: &EdgeLabelledGraph,
    x_base: &[usize],
    y: &EdgeLabelledGraph,
    y_base: &[usize],
) -> Result<(EdgeLabelledGraph, Vec<usize>), OracleError> {
    if x_base.len() != y_base.len() {
        return Err(OracleError::BadConfiguration("base sizes differ".into()));
    }
    for i in 0..x_base.len() {
        for j in i + 1..x_base.len() {
            if x.raw(x_base[i], x_base[j]) != y.raw(y_base[i], y_base[j]) {
                return Err(OracleError::BadConfiguration("bases are not isomorphic".into()));
            }
        }
    }
    let mut map = vec![usize::MAX; y.n()];
    for (i, &yb) in y_base.iter().enumerate() {
        map[yb] = x_base[i];
    }
    let mut next = x.n();
    for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut g = EdgeLabelledGraph::new(next);
    for (u, v, d) in x.edges() {
        g.set(u, v, d);
    }
    for (u, v, d) in y.edges() {
        g.set(map[u], map[v], d);
    }
    Ok((g, map))
}

fn check_amalgam_kind(p: &ParameterSet, empty_base: bool) -> Result<(), OracleError> {
    let v = admissibility_verdict(p);
    if !v.admissible {
        return Err(ParamError::NotAdmissible(p.to_string()).into());
    }
    let delta_odd = p.delta_fin().is_some_and(|d| d % 2 == 1);
    match v.kind {
        Kind::Primitive => Ok(()),
        Kind::Bipartite | Kind::AntipodalBipartite if v.kind == Kind::Bipartite || delta_odd => {
            if empty_base {
                Err(OracleError::EmptyBaseUnsupported(format!(
                    "{p} has only a local independence relation; the base must be non-empty"
                )))
            } else {
                Ok(())
            }
        }
        Kind::AntipodalNonbipartite if !delta_odd => Ok(()),
        kind => Err(OracleError::Unsupported(format!("{p} of kind {kind:?}"))),
    }
}

fn complete_amalgam(free: &EdgeLabelledGraph, p: &ParameterSet, m: u32) -> Result<EdgeLabelledGraph, OracleError> {
    let kind = admissibility_verdict(p).kind;
    let opts = DispatchOptions { pode: None, magic: (!kind.is_antipodal() && !p.delta.is_inf()).then_some(m) };
    let r = dispatch_complete(free, p, &opts)?;
    if !r.is_success() {
        return Err(OracleError::BadConfiguration(format!("free amalgam has no completion: {:?}", r.certificate)));
    }
    Ok(r.graph)
}

/// Amalgam of `x` and `y` over the identified bases, completed with magic
/// parameter `m`. Returns the amalgam and where each `y` vertex went.
pub fn amalgam_over(
    x: &EdgeLabelledGraph,
    x_base: &[usize],
    y: &EdgeLabelledGraph,
    y_base: &[usize],
    p: &ParameterSet,
    m: u32,
) -> Result<(EdgeLabelledGraph, Vec<usize>), OracleError> {
    check_amalgam_kind(p, x_base.is_empty())?;
    let (free, map) = free_amalgam_over(x, x_base, y, y_base)?;
    Ok((complete_amalgam(&free, p, m)?, map))
}

/// `A ⊕_C B`: the completion with magic parameter `m` of the free amalgam.
pub fn canonical_amalgam(t: &AmalgamTriple, p: &ParameterSet, m: u32) -> Result<EdgeLabelledGraph, OracleError> {
    check_amalgam_kind(p, t.base.n() == 0)?;
    complete_amalgam(&t.free_amalgam(), p, m)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(k, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn agree_under(a: &EdgeLabelledGraph, b: &EdgeLabelledGraph, map: &[usize]) -> bool {
    a.n() == b.n() && (0..a.n()).all(|u| (u + 1..a.n()).all(|v| a.raw(u, v) == b.raw(map[u], map[v])))
}

/// Exhaustive check of the amalgamation axioms over members with at most
/// `size_bound` vertices in total: symmetry, monotonicity, stationarity,
/// associativity, plus existence and preservation of both sides.
pub fn sir_property_suite(p: &ParameterSet, m: u32, size_bound: usize) -> Result<Report, OracleError> {
    check_amalgam_kind(p, false)?;
    let local = check_amalgam_kind(p, true).is_err();
    let members: Vec<Vec<EdgeLabelledGraph>> =
        (0..=size_bound).map(|k| enumerate_members(p, k)).collect::<Result<_, _>>()?;
    let mut report = Report::default();
    let min_base = usize::from(local);
    let prefix = |k: usize| (0..k).collect::<Vec<usize>>();

    for c in min_base..=size_bound {
        let cv = prefix(c);
        for x in 0..=size_bound - c {
            for y in 0..=size_bound - c - x {
                for a in &members[c + x] {
                    let base = a.induced(&cv);
                    for b in members[c + y].iter().filter(|b| b.induced(&cv) == base) {
                        sir_triple(p, m, a, b, c, &mut report)?;
                    }
                }
            }
        }
    }

    // Associativity: B in the middle, A over C1 ⊆ B on the left, D over
    // C2 ⊆ B on the right.
    for nb in 1..=size_bound {
        for b in &members[nb] {
            for c1 in subsets(nb) {
                for c2 in subsets(nb) {
                    if local && (c1.is_empty() || c2.is_empty()) {
                        continue;
                    }
                    let spare = size_bound - nb;
                    for xa in 0..=spare {
                        for xd in 0..=spare - xa {
                            let la = members[c1.len() + xa].iter().filter(|a| a.induced(&prefix(c1.len())) == b.induced(&c1));
                            for a in la {
                                let ld = members[c2.len() + xd]
                                    .iter()
                                    .filter(|d| d.induced(&prefix(c2.len())) == b.induced(&c2));
                                for d in ld {
                                    associativity(p, m, a, b, d, &c1, &c2, &mut report)?;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0..1usize << n).map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect()).collect()
}

fn sir_triple(
    p: &ParameterSet,
    m: u32,
    a: &EdgeLabelledGraph,
    b: &EdgeLabelledGraph,
    c: usize,
    report: &mut Report,
) -> Result<(), OracleError> {
    let cv: Vec<usize> = (0..c).collect();
    let (na, nb) = (a.n(), b.n());
    let inst = || json!({"params": p.to_string(), "left": a, "right": b, "base_size": c});
    report.checked += 1;
    let (am, bmap) = match amalgam_over(a, &cv, b, &cv, p, m) {
        Ok(r) => r,
        Err(OracleError::BadConfiguration(_)) => {
            report.violation(inst(), "existence");
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    let av: Vec<usize> = (0..na).collect();
    if am.induced(&av) != *a || am.induced(&bmap) != *b {
        report.violation(inst(), "embedding");
    }

    // Symmetry: B ⊕ A is A ⊕ B with the sides swapped.
    let (am2, amap2) = amalgam_over(b, &cv, a, &cv, p, m)?;
    let mut to2 = vec![0; am.n()];
    for (i, &t) in amap2.iter().enumerate() {
        to2[i] = t;
    }
    for (j, &t) in bmap.iter().enumerate() {
        to2[t] = j;
    }
    if !agree_under(&am, &am2, &to2) {
        report.violation(inst(), "symmetry");
    }

    // Monotonicity: restricting either side commutes with amalgamation.
    for s in subsets(nb - c) {
        let keep: Vec<usize> = cv.iter().copied().chain(s.iter().map(|i| c + i)).collect();
        let b2 = b.induced(&keep);
        let (am_s, bmap_s) = amalgam_over(a, &cv, &b2, &cv, p, m)?;
        let mut verts: Vec<usize> = (0..na).collect();
        verts.extend(keep[c..].iter().map(|&j| bmap[j]));
        let restricted = am.induced(&verts);
        let mut expect: Vec<usize> = (0..na).collect();
        expect.extend((c..keep.len()).map(|j| bmap_s[j]));
        if restricted != am_s.induced(&expect) {
            report.violation(inst(), "monotonicity");
        }
    }
    for s in subsets(na - c) {
        let keep: Vec<usize> = cv.iter().copied().chain(s.iter().map(|i| c + i)).collect();
        let a2 = a.induced(&keep);
        let (am_s, bmap_s) = amalgam_over(&a2, &cv, b, &cv, p, m)?;
        let mut verts = keep.clone();
        verts.extend((c..nb).map(|j| bmap[j]));
        let mut expect: Vec<usize> = (0..keep.len()).collect();
        expect.extend((c..nb).map(|j| bmap_s[j]));
        if am.induced(&verts) != am_s.induced(&expect) {
            report.violation(inst(), "monotonicity");
        }
    }

    // Stationarity: relabelling the configuration relabels the amalgam.
    let (xa, xb) = (na - c, nb - c);
    for pc in permutations(c) {
        for pa in permutations(xa) {
            for pb in permutations(xb) {
                let sa: Vec<usize> = pc.iter().copied().chain(pa.iter().map(|i| c + i)).collect();
                let sb: Vec<usize> = pc.iter().copied().chain(pb.iter().map(|i| c + i)).collect();
                let (am_p, bmap_p) = amalgam_over(&a.permuted(&sa), &cv, &b.permuted(&sb), &cv, p, m)?;
                let mut total = vec![0; am.n()];
                total[..na].copy_from_slice(&sa);
                for j in c..nb {
                    total[bmap[j]] = bmap_p[sb[j]];
                }
                if !agree_under(&am, &am_p, &total) {
                    report.violation(inst(), "stationarity");
                }
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn associativity(
    p: &ParameterSet,
    m: u32,
    a: &EdgeLabelledGraph,
    b: &EdgeLabelledGraph,
    d: &EdgeLabelledGraph,
    c1: &[usize],
    c2: &[usize],
    report: &mut Report,
) -> Result<(), OracleError> {
    report.checked += 1;
    let p1: Vec<usize> = (0..c1.len()).collect();
    let p2: Vec<usize> = (0..c2.len()).collect();
    // (A ⊕_{C1} B) ⊕_{C2} D
    let (l1, bmap) = amalgam_over(a, &p1, b, c1, p, m)?;
    let c2_in_l1: Vec<usize> = c2.iter().map(|&j| bmap[j]).collect();
    let (l2, dmap) = amalgam_over(&l1, &c2_in_l1, d, &p2, p, m)?;
    // A ⊕_{C1} (B ⊕_{C2} D)
    let (r1, dmap1) = amalgam_over(b, c2, d, &p2, p, m)?;
    let (r2, r1map) = amalgam_over(a, &p1, &r1, c1, p, m)?;
    let mut to_r = vec![usize::MAX; l2.n()];
    for i in 0..a.n() {
        to_r[i] = i;
    }
    for j in 0..b.n() {
        to_r[bmap[j]] = r1map[j];
    }
    for k in 0..d.n() {
        to_r[dmap[k]] = r1map[dmap1[k]];
    }
    if to_r.contains(&usize::MAX) || !agree_under(&l2, &r2, &to_r) {
        report.violation(
            json!({"params": p.to_string(), "a": a, "b": b, "d": d, "c1": c1, "c2": c2}),
            "associativity",
        );
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub connected_only: bool,
    pub check_automorphisms: bool,
    pub check_clauses: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { connected_only: false, check_automorphisms: true, check_clauses: true }
    }
}

/// Engine against oracle on every partial graph with `2..=max_vertices`
/// vertices: completability, the clauses and automorphism preservation.
pub fn exhaustive_suite(completer: &Completer, max_vertices: usize, opts: SuiteOptions) -> Result<Report, OracleError> {
    let p = completer.params();
    let cl = Clauses::new(p, completer.magic());
    let mut report = Report::default();
    for n in 2..=max_vertices {
        let table = ProfileTable::build(p, n)?;
        for s in 0..table.len() {
            let g = table.graph_of(s);
            if opts.connected_only && !g.is_connected() {
                continue;
            }
            let r = completer.complete(&g)?;
            audit(&g, &r, &table.profile(s), opts.check_clauses.then_some(&cl), p, &mut report);
            let claimed = !completer.is_bipartite() || g.is_connected();
            if opts.check_automorphisms && claimed && r.is_success() {
                audit_automorphisms(&g, &r.graph, p, &mut report)?;
            }
        }
    }
    Ok(report)
}

/// A uniformly random partial graph on `n` vertices with at most
/// `max_unknown` missing pairs.
pub fn random_partial_graph(rng: &mut ChaCha8Rng, n: usize, delta: u32, max_unknown: usize) -> EdgeLabelledGraph {
    loop {
        let mut g = EdgeLabelledGraph::new(n);
        for (u, v) in all_pairs(n) {
            let d = rng.gen_range(0..=delta);
            if d != 0 {
                g.set(u, v, d);
            }
        }
        if g.non_edges().len() <= max_unknown {
            return g;
        }
    }
}

/// Engine against oracle on `samples` seeded random partial graphs on `n`
/// vertices.
pub fn sampled_suite(
    completer: &Completer,
    n: usize,
    samples: usize,
    seed: u64,
    opts: SuiteOptions,
) -> Result<Report, OracleError> {
    let p = completer.params();
    let cl = Clauses::new(p, completer.magic());
    let delta = p.delta_fin().ok_or(OracleError::InfiniteDiameter)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::default();
    let mut done = 0;
    while done < samples {
        let g = random_partial_graph(&mut rng, n, delta, DEFAULT_MAX_NON_EDGES);
        if opts.connected_only && !g.is_connected() {
            continue;
        }
        done += 1;
        let r = completer.complete(&g)?;
        let profile = enumerate_completions(&g, p)?.profile();
        audit(&g, &r, &profile, opts.check_clauses.then_some(&cl), p, &mut report);
        let claimed = !completer.is_bipartite() || g.is_connected();
        if opts.check_automorphisms && claimed && r.is_success() {
            audit_automorphisms(&g, &r.graph, p, &mut report)?;
        }
    }
    Ok(report)
}

/// Antipodal engine against oracle on every symmetric input made of
/// `1..=max_pairs` δ-pairs, under every pode; plus pode-independence where
/// it is claimed and pode-preserving automorphisms.
pub fn antipodal_suite(p: &ParameterSet, max_pairs: usize) -> Result<Report, OracleError> {
    let v = admissibility_verdict(p);
    if !v.kind.is_antipodal() {
        return Err(CompletionError::WrongKind { engine: "antipodal", kind: v.kind }.into());
    }
    let delta = p.delta_fin().ok_or(OracleError::InfiniteDiameter)?;
    let mut report = Report::default();
    for k in 1..=max_pairs {
        let quads: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
        let choices = (delta as usize).pow(quads.len() as u32);
        for code in 0..choices {
            let mut g = EdgeLabelledGraph::new(2 * k);
            for i in 0..k {
                g.set(2 * i, 2 * i + 1, delta);
            }
            let mut rest = code;
            for &(i, j) in &quads {
                let a = (rest % delta as usize) as u32;
                rest /= delta as usize;
                if a != 0 {
                    g.set(2 * i, 2 * j, a);
                    g.set(2 * i + 1, 2 * j + 1, a);
                    g.set(2 * i, 2 * j + 1, delta - a);
                    g.set(2 * i + 1, 2 * j, delta - a);
                }
            }
            antipodal_instance(&g, p, &mut report)?;
        }
    }
    Ok(report)
}

fn antipodal_instance(g: &EdgeLabelledGraph, p: &ParameterSet, report: &mut Report) -> Result<(), OracleError> {
    let delta = p.delta_fin().unwrap();
    let completable = is_completable(g, p)?;
    let partner: Vec<usize> = antipodal_partners(g, delta)?.into_iter().map(Option::unwrap).collect();
    let reps: Vec<usize> = (0..g.n()).filter(|&x| x < partner[x]).collect();
    let independent = pode_independent(p, g);
    let mut outputs = Vec::new();
    for mask in 0..1usize << reps.len() {
        let mut pode = vec![false; g.n()];
        for (i, &x) in reps.iter().enumerate() {
            let flip = mask >> i & 1 == 1;
            pode[x] = !flip;
            pode[partner[x]] = flip;
        }
        let pg = PodedGraph::new(g.clone(), pode);
        let r = antipodal_complete(&pg, p)?;
        report.checked += 1;
        if r.is_success() != completable {
            report.violation(json!({"params": p.to_string(), "graph": g, "pode": pg.pode}), "equivalence");
            continue;
        }
        if r.is_success() {
            let sub = verify_automorphism_preservation_poded(&pg, p)?;
            report.merge(Report { checked: 0, ..sub });
        }
        outputs.push(r.graph);
    }
    if independent && outputs.windows(2).any(|w| w[0] != w[1]) {
        report.violation(json!({"params": p.to_string(), "graph": g}), "pode-independence");
    }
    Ok(())
}

/// Dispatcher against oracle on every partial graph with `2..=max_vertices`
/// vertices (any kind; antipodal inputs go through symmetrization).
pub fn dispatch_exhaustive_suite(p: &ParameterSet, max_vertices: usize) -> Result<Report, OracleError> {
    let mut report = Report::default();
    for n in 2..=max_vertices {
        let table = ProfileTable::build(p, n)?;
        for s in 0..table.len() {
            let g = table.graph_of(s);
            let r = dispatch_complete(&g, p, &DispatchOptions::default())?;
            audit(&g, &r, &table.profile(s), None, p, &mut report);
        }
    }
    Ok(report)
}

/// Henson completion on `samples` seeded completable inputs: success, no
/// introduced distance `1` or `δ`, and a Henson-free output.
pub fn henson_suite(p: &ParameterSet, samples: usize, seed: u64) -> Result<Report, OracleError> {
    let delta = p.delta_fin().ok_or(OracleError::InfiniteDiameter)?;
    let tri = TriangleTable::new(p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::default();
    let mut attempts = 0usize;
    while report.checked < samples {
        attempts += 1;
        if attempts > 1000 * samples.max(1) {
            report.skip(format!("only {} completable inputs found", report.checked));
            break;
        }
        let n = rng.gen_range(3..=6);
        let g = random_partial_graph(&mut rng, n, delta, DEFAULT_MAX_NON_EDGES);
        if !is_completable(&g, p)? {
            continue;
        }
        report.checked += 1;
        let r = dispatch_complete(&g, p, &DispatchOptions::default())?;
        if !r.is_success() {
            report.violation(instance(&g, p, None), "equivalence");
            continue;
        }
        for e in r.trace.iter().filter(|e| e.dist == 1 || e.dist == delta) {
            report.violation(json!({"params": p.to_string(), "graph": g, "entry": e}), "introduced distance");
        }
        if !is_member_fast(&r.graph, &tri, p) || henson_violation(&r.graph, p).is_some() {
            report.violation(instance(&g, p, None), "henson");
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::HensonConstraint;

    fn iib() -> ParameterSet {
        ParameterSet::finite(5, 3, 3, 16, 13)
    }

    fn fork(a: u32, b: u32) -> EdgeLabelledGraph {
        EdgeLabelledGraph::from_edges(3, &[(0, 2, a), (1, 2, b)])
    }

    #[test]
    fn fork_examples() {
        let p = iib();
        assert_eq!(enumerate_completions(&fork(5, 5), &p).unwrap().values(0, 1), BTreeSet::from([2, 4]));
        assert_eq!(enumerate_completions(&fork(3, 3), &p).unwrap().values(0, 1), (1..=5).collect());
        assert!(enumerate_completions(&EdgeLabelledGraph::cycle(&[1, 1, 5, 5, 5]), &p).unwrap().is_empty());
    }

    #[test]
    fn enumeration_is_ordered_and_bounded() {
        let p = iib();
        let e = enumerate_completions(&EdgeLabelledGraph::cycle(&[1, 5, 5, 5]), &p).unwrap();
        let keys: Vec<Vec<u32>> = e.completions.iter().map(|c| vec![c.raw(0, 2), c.raw(1, 3)]).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(!e.is_empty());
        let big = EdgeLabelledGraph::new(6);
        assert!(matches!(enumerate_completions(&big, &p), Err(OracleError::TooLarge { .. })));
        let inf = ParameterSet::new(Ext::Inf, Ext::Fin(1), Ext::Inf, Ext::Inf, Ext::Inf);
        assert_eq!(enumerate_completions(&fork(1, 1), &inf), Err(OracleError::InfiniteDiameter));
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(automorphisms(&EdgeLabelledGraph::cycle(&[5, 5, 5, 5])).unwrap().len(), 8);
        let path = EdgeLabelledGraph::from_edges(3, &[(0, 1, 1), (1, 2, 2)]);
        assert_eq!(automorphisms(&path).unwrap(), vec![vec![0, 1, 2]]);
        assert_eq!(automorphisms(&EdgeLabelledGraph::new(3)).unwrap().len(), 6);
        assert!(automorphisms(&EdgeLabelledGraph::new(10)).is_err());
    }

    #[test]
    fn profile_table_matches_enumeration() {
        let p = ParameterSet::finite(3, 1, 3, 10, 11);
        let t = ProfileTable::build(&p, 4).unwrap();
        for s in (0..t.len()).step_by(37) {
            let g = t.graph_of(s);
            assert_eq!(t.state_of(&g), s);
            assert_eq!(t.profile(s), enumerate_completions(&g, &p).unwrap().profile(), "{g:?}");
        }
    }

    #[test]
    fn clause_examples() {
        let p = iib();
        let c = EdgeLabelledGraph::cycle(&[1, 5, 5, 5]);
        assert!(verify_optimality(&c, &p, 3).unwrap().is_clean());
        assert!(verify_parity(&c, &p, 3).unwrap().is_clean());
        assert!(verify_optimality(&EdgeLabelledGraph::new(4), &p, 3).unwrap().is_clean());
        for a in 1..=5 {
            for b in a..=5 {
                assert!(verify_optimality(&fork(a, b), &p, 3).unwrap().is_clean());
                assert!(verify_parity(&fork(a, b), &p, 3).unwrap().is_clean());
            }
        }
        let cl = Clauses::new(&p, 3);
        assert!(cl.optimality_ok(2, 4));
        assert!(!cl.optimality_ok(2, 3));
        assert!(cl.parity_applies(5) && !cl.parity_applies(3));
    }

    #[test]
    fn automorphism_preservation_examples() {
        let p = iib();
        assert!(verify_automorphism_preservation(&EdgeLabelledGraph::cycle(&[5, 5, 5, 5]), &p).unwrap().is_clean());
        let q = ParameterSet::finite(4, 1, 3, 10, 9);
        let r = verify_automorphism_preservation(&EdgeLabelledGraph::from_edges(4, &[(0, 1, 4), (2, 3, 4)]), &q)
            .unwrap();
        assert!(r.is_clean() && r.checked == 1);
        let b = ParameterSet::bipartite(4, 12);
        let r = verify_automorphism_preservation(&EdgeLabelledGraph::from_edges(3, &[(0, 1, 1)]), &b).unwrap();
        assert_eq!(r.checked, 0);
        assert_eq!(r.skipped.len(), 1);
    }

    #[test]
    fn amalgam_examples() {
        let p = iib();
        let one = EdgeLabelledGraph::new(1);
        let edge = EdgeLabelledGraph::from_edges(2, &[(0, 1, 1)]);
        let t = AmalgamTriple::new(one.clone(), edge.clone(), edge.clone()).unwrap();
        assert_eq!(canonical_amalgam(&t, &p, 3).unwrap().raw(1, 2), 2);
        let t = AmalgamTriple::new(edge.clone(), edge.clone(), edge.clone()).unwrap();
        assert_eq!(canonical_amalgam(&t, &p, 3).unwrap(), edge);
        let b = ParameterSet::bipartite(4, 12);
        let t = AmalgamTriple::new(EdgeLabelledGraph::new(0), edge.clone(), one.clone()).unwrap();
        assert!(matches!(canonical_amalgam(&t, &b, 2), Err(OracleError::EmptyBaseUnsupported(_))));
        let odd = ParameterSet::finite(3, 1, 2, 8, 7);
        assert!(matches!(canonical_amalgam(&t, &odd, 1), Err(OracleError::Unsupported(_))));
    }

    #[test]
    fn small_suites() {
        let p = ParameterSet::finite(3, 1, 3, 10, 11);
        assert!(sir_property_suite(&p, 2, 3).unwrap().is_clean());
        let engine = Completer::new(&p, 2).unwrap();
        assert!(exhaustive_suite(&engine, 3, SuiteOptions::default()).unwrap().is_clean());
        let r = sampled_suite(&engine, 5, 20, 7, SuiteOptions::default()).unwrap();
        assert!(r.is_clean() && r.checked == 20);
        assert!(!exhaustive_suite(&engine.with_fault(), 3, SuiteOptions::default()).unwrap().is_clean());
        let h = p.clone().with_henson(vec![HensonConstraint::clique(4)]);
        assert!(henson_suite(&h, 20, 1).unwrap().is_clean());
        assert!(antipodal_suite(&ParameterSet::finite(4, 1, 3, 10, 9), 2).unwrap().is_clean());
    }
}
