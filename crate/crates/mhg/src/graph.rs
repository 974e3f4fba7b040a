//! Edge-labelled graphs, triangle classification, membership testing and the
//! antipodal constructions (companions, extensions, symmetrization).

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::params::{Ext, Fin, ParameterSet};

/// A finite set `0..n` with a symmetric partial distance function.
/// Label `0` in the backing matrix means "no edge".
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeLabelledGraph {
    n: usize,
    d: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("distance {0} out of range")]
    OutOfRange(u32),
    #[error("graph is not complete: pair ({0},{1}) has no distance")]
    IncompleteGraph(usize, usize),
    #[error("no completion exists: {0}")]
    NoCompletion(String),
    #[error("malformed graph: {0}")]
    Malformed(String),
}

impl EdgeLabelledGraph {
    pub fn new(n: usize) -> Self {
        EdgeLabelledGraph { n, d: vec![0; n * n] }
    }

    /// Build from `(u, v, d)` triples. Panics on loops, zero labels or
    /// conflicting duplicates; use [`EdgeLabelledGraph::try_from_edges`] for
    /// untrusted input.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u32)]) -> Self {
        Self::try_from_edges(n, edges).expect("valid edge list")
    }

    pub fn try_from_edges(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self, GraphError> {
        let mut g = Self::new(n);
        for &(u, v, d) in edges {
            if u >= n || v >= n || u == v {
                return Err(GraphError::Malformed(format!("bad pair ({u},{v})")));
            }
            if d == 0 {
                return Err(GraphError::Malformed(format!("zero label on ({u},{v})")));
            }
            if g.get(u, v).is_some() {
                return Err(GraphError::Malformed(format!("duplicate pair ({u},{v})")));
            }
            g.set(u, v, d);
        }
        Ok(g)
    }

    /// The cycle `0-1-...-(k-1)-0` with the given labels in order.
    pub fn cycle(labels: &[u32]) -> Self {
        let k = labels.len();
        let mut g = Self::new(k);
        for (i, &l) in labels.iter().enumerate() {
            g.set(i, (i + 1) % k, l);
        }
        g
    }

    /// A complete graph from a row-major distance matrix.
    pub fn from_matrix(n: usize, m: &[u32]) -> Self {
        assert_eq!(m.len(), n * n);
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if m[u * n + v] != 0 {
                    g.set(u, v, m[u * n + v]);
                }
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.d[u * self.n + v] {
            0 => None,
            x => Some(x),
        }
    }

    /// Raw label, `0` for a non-edge or `u == v`.
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn set(&mut self, u: usize, v: usize, d: u32) {
        assert!(u != v, "loops are not edges");
        self.d[u * self.n + v] = d;
        self.d[v * self.n + u] = d;
    }

    pub fn unset(&mut self, u: usize, v: usize) {
        self.d[u * self.n + v] = 0;
        self.d[v * self.n + u] = 0;
    }

    pub fn add_vertex(&mut self) -> usize {
        let n = self.n + 1;
        let mut d = vec![0; n * n];
        for u in 0..self.n {
            d[u * n..u * n + self.n].copy_from_slice(&self.d[u * self.n..(u + 1) * self.n]);
        }
        self.n = n;
        self.d = d;
        n - 1
    }

    /// Edges `(u, v, d)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if let Some(d) = self.get(u, v) {
                    out.push((u, v, d));
                }
            }
        }
        out
    }

    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.get(u, v).is_none() {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.d.iter().filter(|&&x| x != 0).count() / 2
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n.saturating_sub(1)) / 2
    }

    pub fn max_label(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Induced subgraph on `vs`, relabelled `0..vs.len()` in the given order.
    pub fn induced(&self, vs: &[usize]) -> Self {
        let mut g = Self::new(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if let Some(d) = self.get(u, v) {
                    g.set(i, j, d);
                }
            }
        }
        g
    }

    /// The graph with vertex `u` renamed to `perm[u]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut g = Self::new(self.n);
        for (u, v, d) in self.edges() {
            g.set(perm[u], perm[v], d);
        }
        g
    }

    /// Connected components (by edges of any label), each sorted, ordered by
    /// their minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in 0..self.n {
                    if !seen[v] && self.raw(u, v) != 0 {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        if self.n > 64 {
            return self.n <= 1 || self.components().len() == 1;
        }
        if self.n <= 1 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            for v in 0..self.n {
                if seen >> v & 1 == 0 && self.raw(u, v) != 0 {
                    seen |= 1 << v;
                    frontier |= 1 << v;
                }
            }
        }
        seen.count_ones() as usize == self.n
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<(usize, usize, u32)>,
}

impl Serialize for EdgeLabelledGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphJson { vertices: self.n, edges: self.edges() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeLabelledGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        for &(u, v, _) in &raw.edges {
            if u >= v {
                return Err(serde::de::Error::custom(format!("edge ({u},{v}) must satisfy u < v")));
            }
        }
        EdgeLabelledGraph::try_from_edges(raw.vertices, &raw.edges).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TriangleStatus {
    Allowed,
    Forbidden,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ForbiddenReason {
    None,
    NonMetric,
    K1Bound,
    K2Bound,
    C0Bound,
    C1Bound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriangleVerdict {
    pub status: TriangleStatus,
    pub reason: ForbiddenReason,
}

impl TriangleVerdict {
    pub fn is_allowed(&self) -> bool {
        self.status == TriangleStatus::Allowed
    }
}

fn classify_triangle(a: u32, b: u32, c: u32, p: &ParameterSet) -> ForbiddenReason {
    let mut t = [a, b, c];
    t.sort_unstable();
    let [a, b, c] = t;
    let per = Fin(a + b + c);
    let odd = (a + b + c) % 2 == 1;
    if a + b < c {
        ForbiddenReason::NonMetric
    } else if odd && per < p.k1.mul(2).add(Fin(1)) {
        ForbiddenReason::K1Bound
    } else if odd && Fin(b + c) >= p.k2.mul(2).add(Fin(a)) {
        ForbiddenReason::K2Bound
    } else if odd && per >= p.c1 {
        ForbiddenReason::C1Bound
    } else if !odd && per >= p.c0 {
        ForbiddenReason::C0Bound
    } else {
        ForbiddenReason::None
    }
}

/// Classify the triangle with side lengths `a, b, c`.
pub fn triangle_verdict(a: u32, b: u32, c: u32, p: &ParameterSet) -> Result<TriangleVerdict, GraphError> {
    for x in [a, b, c] {
        if x == 0 || Ext::Fin(x) > p.delta {
            return Err(GraphError::OutOfRange(x));
        }
    }
    let reason = classify_triangle(a, b, c, p);
    let status = if reason == ForbiddenReason::None {
        TriangleStatus::Allowed
    } else {
        TriangleStatus::Forbidden
    };
    Ok(TriangleVerdict { status, reason })
}

/// Whether `abc` is allowed; out-of-range labels count as forbidden.
pub fn triangle_allowed(a: u32, b: u32, c: u32, p: &ParameterSet) -> bool {
    triangle_verdict(a, b, c, p).map(|v| v.is_allowed()).unwrap_or(false)
}

/// Precomputed triangle table for a finite diameter.
#[derive(Clone, Debug)]
pub struct TriangleTable {
    delta: u32,
    side: usize,
    allowed: Vec<bool>,
}

impl TriangleTable {
    pub fn new(p: &ParameterSet) -> Self {
        let delta = p.delta_fin().expect("triangle table needs finite diameter");
        let side = delta as usize + 1;
        let mut allowed = vec![false; side * side * side];
        for a in 1..=delta {
            for b in 1..=delta {
                for c in 1..=delta {
                    allowed[(a as usize * side + b as usize) * side + c as usize] = triangle_allowed(a, b, c, p);
                }
            }
        }
        TriangleTable { delta, side, allowed }
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    /// Labels must lie in `0..=δ`; any zero label reads as forbidden.
    #[inline]
    pub fn allowed(&self, a: u32, b: u32, c: u32) -> bool {
        self.allowed[(a as usize * self.side + b as usize) * self.side + c as usize]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Violation {
    Triangle {
        vertices: [usize; 3],
        lengths: [u32; 3],
        verdict: TriangleVerdict,
    },
    Henson {
        constraint: usize,
        vertices: Vec<usize>,
    },
    OutOfRange {
        edge: [usize; 2],
        length: u32,
    },
    /// The input cannot be extended to an antipodally symmetric graph.
    Antipodal {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Membership {
    Pass,
    Fail(Violation),
}

impl Membership {
    pub fn is_pass(&self) -> bool {
        matches!(self, Membership::Pass)
    }
}

fn first_triangle_violation(g: &EdgeLabelledGraph, p: &ParameterSet) -> Option<Violation> {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let a = g.raw(u, v);
            if Ext::Fin(a) > p.delta {
                return Some(Violation::OutOfRange { edge: [u, v], length: a });
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                let (a, b, c) = (g.raw(u, v), g.raw(v, w), g.raw(u, w));
                let verdict = triangle_verdict(a, b, c, p).expect("labels checked above");
                if !verdict.is_allowed() {
                    return Some(Violation::Triangle { vertices: [u, v, w], lengths: [a, b, c], verdict });
                }
            }
        }
    }
    None
}

/// Find an isometric copy of the complete space `(k, m)` inside the complete
/// graph `g`; returns the host vertices in pattern order.
pub fn find_embedding(g: &EdgeLabelledGraph, k: usize, m: &[u32]) -> Option<Vec<usize>> {
    fn extend(g: &EdgeLabelledGraph, k: usize, m: &[u32], chosen: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = chosen.len();
        if i == k {
            return true;
        }
        for h in 0..g.n() {
            if used[h] {
                continue;
            }
            if chosen.iter().enumerate().all(|(j, &hj)| g.raw(hj, h) == m[j * k + i]) {
                chosen.push(h);
                used[h] = true;
                if extend(g, k, m, chosen, used) {
                    return true;
                }
                used[h] = false;
                chosen.pop();
            }
        }
        false
    }
    if k > g.n() {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    let mut used = vec![false; g.n()];
    extend(g, k, m, &mut chosen, &mut used).then_some(chosen)
}

/// The first Henson constraint of `p` embedding into the complete graph `g`.
pub fn henson_violation(g: &EdgeLabelledGraph, p: &ParameterSet) -> Option<Violation> {
    let delta = p.delta_fin()?;
    for (i, h) in p.henson.iter().enumerate() {
        for (k, m) in h.realizations(delta) {
            if let Some(vertices) = find_embedding(g, k, &m) {
                return Some(Violation::Henson { constraint: i, vertices });
            }
        }
    }
    None
}

/// Whether the complete graph `g` lies in the class given by `p`.
pub fn membership_check(g: &EdgeLabelledGraph, p: &ParameterSet) -> Result<Membership, GraphError> {
    if let Some(&(u, v)) = g.non_edges().first() {
        return Err(GraphError::IncompleteGraph(u, v));
    }
    if let Some(v) = first_triangle_violation(g, p) {
        return Ok(Membership::Fail(v));
    }
    if let Some(v) = henson_violation(g, p) {
        return Ok(Membership::Fail(v));
    }
    Ok(Membership::Pass)
}

/// Length of a shortest labelled path, `None` when unreachable.
pub fn path_distance(g: &EdgeLabelledGraph, u: usize, v: usize) -> Option<u64> {
    all_path_distances(g)[u][v]
}

/// All-pairs path distances (Floyd-Warshall).
pub fn all_path_distances(g: &EdgeLabelledGraph) -> Vec<Vec<Option<u64>>> {
    let n = g.n();
    let mut dist = vec![vec![None; n]; n];
    for u in 0..n {
        dist[u][u] = Some(0);
        for v in 0..n {
            if let Some(d) = g.get(u, v) {
                dist[u][v] = Some(d as u64);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            let Some(ik) = dist[i][k] else { continue };
            for j in 0..n {
                if let Some(kj) = dist[k][j] {
                    let via = ik + kj;
                    if dist[i][j].is_none_or(|cur| via < cur) {
                        dist[i][j] = Some(via);
                    }
                }
            }
        }
    }
    dist
}

/// Flip every distance crossing the boundary of `flip` to `δ - d`.
pub fn antipodal_companion(
    g: &EdgeLabelledGraph,
    flip: &[usize],
    delta: u32,
) -> Result<EdgeLabelledGraph, GraphError> {
    let mut inside = vec![false; g.n()];
    for &f in flip {
        inside[f] = true;
    }
    let mut out = g.clone();
    for (u, v, d) in g.edges() {
        if d >= delta {
            return Err(GraphError::OutOfRange(d));
        }
        if inside[u] != inside[v] {
            out.set(u, v, delta - d);
        }
    }
    Ok(out)
}

/// Vertex `(u, i)` of the extension is `u + i * n`.
pub fn antipodal_extension(g: &EdgeLabelledGraph, delta: u32) -> EdgeLabelledGraph {
    let n = g.n();
    let mut out = EdgeLabelledGraph::new(2 * n);
    for u in 0..n {
        out.set(u, u + n, delta);
        for v in u + 1..n {
            if let Some(d) = g.get(u, v) {
                out.set(u, v, d);
                out.set(u + n, v + n, d);
                out.set(u, v + n, delta - d);
                out.set(u + n, v, delta - d);
            }
        }
    }
    out
}

/// A graph together with a pode: one endpoint of every δ-edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PodedGraph {
    pub graph: EdgeLabelledGraph,
    pub pode: Vec<bool>,
}

impl PodedGraph {
    pub fn new(graph: EdgeLabelledGraph, pode: Vec<bool>) -> Self {
        assert_eq!(graph.n(), pode.len());
        PodedGraph { graph, pode }
    }

    /// Every δ-edge has exactly one endpoint in the pode.
    pub fn is_valid(&self, delta: u32) -> bool {
        self.graph.edges().iter().all(|&(u, v, d)| d != delta || self.pode[u] != self.pode[v])
    }
}

/// The unique δ-neighbour of each vertex, or an error on a (δ,δ)-fork.
pub fn antipodal_partners(g: &EdgeLabelledGraph, delta: u32) -> Result<Vec<Option<usize>>, GraphError> {
    let mut partner = vec![None; g.n()];
    for (u, v, d) in g.edges() {
        if d == delta {
            for (x, y) in [(u, v), (v, u)] {
                if partner[x].is_some() {
                    return Err(GraphError::NoCompletion(format!("({delta},{delta})-fork at vertex {x}")));
                }
                partner[x] = Some(y);
            }
        }
    }
    Ok(partner)
}

/// Every vertex has a δ-partner and every shorter edge lies in a complete
/// antipodal quadruple.
pub fn is_antipodally_symmetric(g: &EdgeLabelledGraph, delta: u32) -> bool {
    let Ok(partner) = antipodal_partners(g, delta) else {
        return false;
    };
    if partner.iter().any(Option::is_none) {
        return false;
    }
    let s = |x: usize| partner[x].unwrap();
    g.edges().into_iter().all(|(u, v, d)| {
        d == delta
            || (g.raw(s(u), s(v)) == d && g.raw(u, s(v)) == delta - d && g.raw(s(u), v) == delta - d)
    })
}

/// Add a δ-partner for each unpaired vertex (appended in vertex order) and
/// close every antipodal quadruple with a known distance.
pub fn antipodal_symmetrize(g: &EdgeLabelledGraph, p: &ParameterSet) -> Result<EdgeLabelledGraph, GraphError> {
    let delta = p.delta_fin().ok_or_else(|| GraphError::Malformed("infinite diameter".into()))?;
    let mut out = g.clone();
    let mut partner = antipodal_partners(g, delta)?;
    for u in 0..g.n() {
        if partner[u].is_none() {
            let w = out.add_vertex();
            out.set(u, w, delta);
            partner[u] = Some(w);
            partner.push(Some(u));
        }
    }
    let s: Vec<usize> = partner.into_iter().map(Option::unwrap).collect();
    let n = out.n();
    for x in 0..n {
        for y in x + 1..n {
            if s[x] == y || s[x] < x || s[y] < y {
                continue;
            }
            let (xs, ys) = (s[x], s[y]);
            let quad = [(x, y, false), (xs, ys, false), (x, ys, true), (xs, y, true)];
            let mut value: Option<u32> = None;
            for &(a, b, flip) in &quad {
                if let Some(d) = out.get(a, b) {
                    if d == 0 || d >= delta {
                        return Err(GraphError::NoCompletion(format!("({delta},{delta})-fork via ({a},{b})")));
                    }
                    let base = if flip { delta - d } else { d };
                    match value {
                        Some(v) if v != base => {
                            return Err(GraphError::NoCompletion(format!(
                                "antipodal quadruple ({x},{y},{xs},{ys}) is inconsistent"
                            )))
                        }
                        _ => value = Some(base),
                    }
                }
            }
            if let Some(v) = value {
                for &(a, b, flip) in &quad {
                    out.set(a, b, if flip { delta - v } else { v });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::HensonConstraint;

    fn iib() -> ParameterSet {
        ParameterSet::finite(5, 3, 3, 16, 13)
    }

    #[test]
    fn verdict_examples() {
        let p = iib();
        assert_eq!(triangle_verdict(1, 2, 4, &p).unwrap().reason, ForbiddenReason::NonMetric);
        assert_eq!(triangle_verdict(1, 4, 4, &p).unwrap().reason, ForbiddenReason::K2Bound);
        assert_eq!(triangle_verdict(5, 5, 5, &p).unwrap().reason, ForbiddenReason::C1Bound);
        for b in 1..=5 {
            assert!(triangle_verdict(3, 3, b, &p).unwrap().is_allowed());
        }
        assert_eq!(triangle_verdict(0, 1, 1, &p), Err(GraphError::OutOfRange(0)));
        assert_eq!(triangle_verdict(6, 1, 1, &p), Err(GraphError::OutOfRange(6)));
    }

    #[test]
    fn membership_examples() {
        let p = iib();
        let k4 = EdgeLabelledGraph::from_matrix(4, &[0, 3, 3, 3, 3, 0, 3, 3, 3, 3, 0, 3, 3, 3, 3, 0]);
        assert_eq!(membership_check(&k4, &p).unwrap(), Membership::Pass);
        let t = EdgeLabelledGraph::cycle(&[5, 5, 5]);
        match membership_check(&t, &p).unwrap() {
            Membership::Fail(Violation::Triangle { verdict, .. }) => {
                assert_eq!(verdict.reason, ForbiddenReason::C1Bound)
            }
            other => panic!("{other:?}"),
        }
        let q = ParameterSet::finite(3, 1, 2, 10, 11).with_henson(vec![HensonConstraint::anticlique(3)]);
        let i3 = EdgeLabelledGraph::cycle(&[3, 3, 3]);
        assert!(matches!(membership_check(&i3, &q).unwrap(), Membership::Fail(Violation::Henson { .. })));
        let path = EdgeLabelledGraph::from_edges(3, &[(0, 1, 1)]);
        assert_eq!(membership_check(&path, &p), Err(GraphError::IncompleteGraph(0, 2)));
    }

    #[test]
    fn path_distance_examples() {
        let g = EdgeLabelledGraph::from_edges(3, &[(0, 1, 1), (1, 2, 1)]);
        assert_eq!(path_distance(&g, 0, 2), Some(2));
        let g = EdgeLabelledGraph::from_edges(2, &[(0, 1, 5)]);
        assert_eq!(path_distance(&g, 0, 1), Some(5));
        assert_eq!(path_distance(&EdgeLabelledGraph::new(2), 0, 1), None);
    }

    #[test]
    fn companion_examples() {
        let t = EdgeLabelledGraph::cycle(&[1, 1, 1]);
        assert_eq!(antipodal_companion(&t, &[], 3).unwrap(), t);
        let c = antipodal_companion(&t, &[0], 3).unwrap();
        let mut ls: Vec<u32> = c.edges().iter().map(|e| e.2).collect();
        ls.sort();
        assert_eq!(ls, vec![1, 2, 2]);
        let c = antipodal_companion(&EdgeLabelledGraph::cycle(&[3, 3, 3]), &[2], 4).unwrap();
        let mut ls: Vec<u32> = c.edges().iter().map(|e| e.2).collect();
        ls.sort();
        assert_eq!(ls, vec![1, 1, 3]);
        assert!(antipodal_companion(&EdgeLabelledGraph::cycle(&[3, 3, 3]), &[0], 3).is_err());
    }

    #[test]
    fn extension_of_122() {
        let t = EdgeLabelledGraph::from_edges(3, &[(0, 1, 1), (1, 2, 2), (0, 2, 2)]);
        let e = antipodal_extension(&t, 3);
        assert_eq!(e.n(), 6);
        assert!(e.is_complete());
        assert!(is_antipodally_symmetric(&e, 3));
        assert!(membership_check(&e, &ParameterSet::finite(3, 1, 2, 8, 7)).unwrap().is_pass());
        let single = antipodal_extension(&EdgeLabelledGraph::new(1), 4);
        assert_eq!(single.edges(), vec![(0, 1, 4)]);
    }

    #[test]
    fn symmetrize_examples() {
        let p = ParameterSet::finite(4, 1, 3, 10, 9);
        let g = EdgeLabelledGraph::from_edges(4, &[(0, 1, 4), (2, 3, 4), (0, 2, 1)]);
        let s = antipodal_symmetrize(&g, &p).unwrap();
        assert_eq!(s.raw(0, 2), 1);
        assert_eq!(s.raw(1, 3), 1);
        assert_eq!(s.raw(0, 3), 3);
        assert_eq!(s.raw(1, 2), 3);
        assert_eq!(antipodal_symmetrize(&s, &p).unwrap(), s);
        let fork = EdgeLabelledGraph::from_edges(3, &[(0, 1, 4), (0, 2, 4)]);
        assert!(matches!(antipodal_symmetrize(&fork, &p), Err(GraphError::NoCompletion(_))));
        let lone = antipodal_symmetrize(&EdgeLabelledGraph::new(2), &p).unwrap();
        assert_eq!(lone.n(), 4);
        assert!(is_antipodally_symmetric(&lone, 4));
    }

    #[test]
    fn json_round_trip() {
        let g = EdgeLabelledGraph::from_edges(4, &[(0, 1, 1), (1, 2, 5), (2, 3, 5), (0, 3, 5)]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"vertices":4,"edges":[[0,1,1],[0,3,5],[1,2,5],[2,3,5]]}"#);
        assert_eq!(serde_json::from_str::<EdgeLabelledGraph>(&s).unwrap(), g);
        assert!(serde_json::from_str::<EdgeLabelledGraph>(r#"{"vertices":2,"edges":[[1,0,1]]}"#).is_err());
        assert!(serde_json::from_str::<EdgeLabelledGraph>(r#"{"vertices":2,"edges":[[0,1,1],[0,1,2]]}"#).is_err());
    }
}
