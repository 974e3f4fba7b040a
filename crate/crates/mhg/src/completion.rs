//! The completion engines: primitive magic-parameter, bipartite, antipodal
//! and shortest-path, plus a dispatcher choosing between them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    all_path_distances, antipodal_partners, antipodal_symmetrize, henson_violation, is_antipodally_symmetric,
    membership_check, triangle_verdict, EdgeLabelledGraph, GraphError, Membership, PodedGraph, TriangleTable, Violation,
};
use crate::params::{
    admissibility_verdict, completion_parameter, completion_parameters, henson_parameter, magic_set, Ext, Kind,
    ParamError, ParameterSet,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ForkSet {
    /// `a + b = x`
    Plus,
    /// `|a - b| = x`
    Minus,
    /// `C - 1 - a - b = x`
    C(u32),
    /// `C0 - 2 - a - b = x`
    C0(u32),
}

impl ForkSet {
    #[inline]
    pub fn contains(self, a: u32, b: u32, x: u32) -> bool {
        let (a, b, x) = (a as i64, b as i64, x as i64);
        match self {
            ForkSet::Plus => a + b == x,
            ForkSet::Minus => (a - b).abs() == x,
            ForkSet::C(c) => c as i64 - 1 - a - b == x,
            ForkSet::C0(c0) => c0 as i64 - 2 - a - b == x,
        }
    }
}

/// Forks closed to `target` at step `time`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForkRule {
    pub target: u32,
    pub fork_sets: Vec<ForkSet>,
    pub time: u32,
}

impl ForkRule {
    pub fn matches(&self, a: u32, b: u32) -> bool {
        self.fork_sets.iter().any(|s| s.contains(a, b, self.target))
    }
}

/// `t_M(x)`: `2x - 1` below `M`, `2(δ - x)` above the fill band. The band is
/// `{M}` for the primitive engine and `{M, M+1}` for the bipartite one.
pub fn time_of(x: u32, delta: u32, m: u32, bipartite: bool) -> Option<u32> {
    let top = if bipartite { m + 1 } else { m };
    if x < m {
        Some(2 * x - 1)
    } else if x > top && x <= delta {
        Some(2 * (delta - x))
    } else {
        None
    }
}

/// The primitive schedule for diameter `delta`, `C` and magic `m`, by time.
pub fn primitive_rules(delta: u32, c: u32, m: u32) -> Vec<ForkRule> {
    let mut rules: Vec<ForkRule> = (1..=delta)
        .filter_map(|x| {
            let time = time_of(x, delta, m, false)?;
            let fork_sets = if x < m { vec![ForkSet::Plus, ForkSet::C(c)] } else { vec![ForkSet::Minus] };
            Some(ForkRule { target: x, fork_sets, time })
        })
        .collect();
    rules.sort_by_key(|r| r.time);
    rules
}

/// The bipartite schedule for diameter `delta`, `C0` and magic `m`, by time.
pub fn bipartite_rules(delta: u32, c0: u32, m: u32) -> Vec<ForkRule> {
    let mut rules: Vec<ForkRule> = (1..=delta)
        .filter_map(|x| {
            let time = time_of(x, delta, m, true)?;
            let fork_sets = if x < m { vec![ForkSet::Plus, ForkSet::C0(c0)] } else { vec![ForkSet::Minus] };
            Some(ForkRule { target: x, fork_sets, time })
        })
        .collect();
    rules.sort_by_key(|r| r.time);
    rules
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TraceEntry {
    pub time: u32,
    pub edge: [usize; 2],
    pub dist: u32,
    /// `None` marks a final-fill edge.
    pub witness: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CompletionStatus {
    Success,
    NoCompletion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletionResult {
    pub graph: EdgeLabelledGraph,
    pub trace: Vec<TraceEntry>,
    pub status: CompletionStatus,
    /// Why the output is not a member, for `NoCompletion`.
    pub certificate: Option<Violation>,
    /// Whether the result depends on a non-canonical choice (pode or the
    /// joining of components); `None` when not applicable.
    pub pode_dependent: Option<bool>,
    /// The engine's output is determined by the isomorphism type of the
    /// input (false when components had to be joined arbitrarily).
    pub canonical: bool,
}

impl CompletionResult {
    pub fn is_success(&self) -> bool {
        self.status == CompletionStatus::Success
    }

    fn judged(graph: EdgeLabelledGraph, trace: Vec<TraceEntry>, p: &ParameterSet) -> Result<Self, CompletionError> {
        let verdict = membership_check(&graph, p)?;
        let (status, certificate) = match verdict {
            Membership::Pass => (CompletionStatus::Success, None),
            Membership::Fail(v) => (CompletionStatus::NoCompletion, Some(v)),
        };
        Ok(CompletionResult { graph, trace, status, certificate, pode_dependent: None, canonical: true })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("engine {engine} does not apply to parameters of kind {kind:?}")]
    WrongKind { engine: &'static str, kind: Kind },
    #[error("magic parameter {0} is not valid for these parameters")]
    BadMagic(u32),
    #[error("input is not antipodally symmetric")]
    NotSymmetric,
    #[error("invalid pode: {0}")]
    BadPode(String),
    #[error("unsupported Henson set: {0}")]
    UnsupportedHenson(String),
}

fn check_labels(g: &EdgeLabelledGraph, delta: u32) -> Result<(), CompletionError> {
    match g.max_label() {
        l if l > delta => Err(GraphError::OutOfRange(l).into()),
        _ => Ok(()),
    }
}

/// Fork rules with their `(a, b)` lookup tables built.
#[derive(Clone, Debug)]
pub struct Schedule {
    side: usize,
    steps: Vec<(ForkRule, Vec<bool>)>,
}

impl Schedule {
    pub fn new(delta: u32, rules: Vec<ForkRule>) -> Self {
        let side = delta as usize + 1;
        let steps = rules
            .into_iter()
            .map(|rule| {
                let mut table = vec![false; side * side];
                for a in 1..=delta {
                    for b in 1..=delta {
                        table[a as usize * side + b as usize] = rule.matches(a, b);
                    }
                }
                (rule, table)
            })
            .collect();
        Schedule { side, steps }
    }

    pub fn rules(&self) -> impl Iterator<Item = &ForkRule> {
        self.steps.iter().map(|(r, _)| r)
    }

    /// Run the timed fork steps in place, appending to `trace`.
    ///
    /// All closures of one step are computed against the graph as it was at
    /// the start of the step, then applied together; each gets its smallest
    /// witness.
    pub fn run(&self, g: &mut EdgeLabelledGraph, trace: &mut Vec<TraceEntry>) {
        let n = g.n();
        let side = self.side;
        let mut open = g.non_edges();
        let mut adds: Vec<(usize, usize, usize)> = Vec::new();
        for (rule, table) in &self.steps {
            if open.is_empty() {
                break;
            }
            adds.clear();
            for &(u, v) in &open {
                let w = (0..n).find(|&w| {
                    let (a, b) = (g.raw(u, w), g.raw(v, w));
                    a != 0 && b != 0 && table[a as usize * side + b as usize]
                });
                if let Some(w) = w {
                    adds.push((u, v, w));
                }
            }
            if adds.is_empty() {
                continue;
            }
            for &(u, v, w) in &adds {
                g.set(u, v, rule.target);
                trace.push(TraceEntry { time: rule.time, edge: [u, v], dist: rule.target, witness: Some(w) });
            }
            open.retain(|&(u, v)| g.raw(u, v) == 0);
        }
    }
}

pub fn run_rules(g: &mut EdgeLabelledGraph, rules: &[ForkRule], delta: u32, trace: &mut Vec<TraceEntry>) {
    Schedule::new(delta, rules.to_vec()).run(g, trace)
}

fn magic_fill(out: &mut EdgeLabelledGraph, delta: u32, m: u32, trace: &mut Vec<TraceEntry>) {
    for (u, v) in out.non_edges() {
        out.set(u, v, m);
        trace.push(TraceEntry { time: 2 * delta + 1, edge: [u, v], dist: m, witness: None });
    }
}

/// The primitive engine without parameter validation: fork steps, then
/// every remaining pair gets `m`. Returns the output and its trace.
pub fn magic_engine(g: &EdgeLabelledGraph, delta: u32, c: u32, m: u32) -> (EdgeLabelledGraph, Vec<TraceEntry>) {
    let mut out = g.clone();
    let mut trace = Vec::new();
    Schedule::new(delta, primitive_rules(delta, c, m)).run(&mut out, &mut trace);
    magic_fill(&mut out, delta, m, &mut trace);
    (out, trace)
}

/// Pairs left after the bipartite fork steps get `m` or `m + 1` by the
/// parity of their path distance in `g`; separate components are joined
/// through their minimum vertices. Returns whether `g` was connected.
fn bipartite_fill(g: &EdgeLabelledGraph, out: &mut EdgeLabelledGraph, delta: u32, m: u32, trace: &mut Vec<TraceEntry>) -> bool {
    let fill = 2 * delta + 1;
    let n = g.n();
    if out.is_complete() {
        return g.is_connected();
    }
    // Components in order of their minimum vertex, which is the anchor.
    let mut comp_of = vec![usize::MAX; n];
    let mut anchors = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if comp_of[s] != usize::MAX {
            continue;
        }
        comp_of[s] = anchors.len();
        stack.push(s);
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if comp_of[v] == usize::MAX && g.raw(u, v) != 0 {
                    comp_of[v] = anchors.len();
                    stack.push(v);
                }
            }
        }
        anchors.push(s);
    }
    // Shortest labelled path lengths inside components (Floyd-Warshall).
    const FAR: u64 = u64::MAX / 4;
    let mut pd = vec![FAR; n * n];
    for u in 0..n {
        pd[u * n + u] = 0;
        for v in 0..n {
            let d = g.raw(u, v);
            if d != 0 {
                pd[u * n + v] = d as u64;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            let ik = pd[i * n + k];
            if ik == FAR {
                continue;
            }
            for j in 0..n {
                let via = ik + pd[k * n + j];
                if via < pd[i * n + j] {
                    pd[i * n + j] = via;
                }
            }
        }
    }
    let pick = |parity: u64| if (m as u64 + parity).is_multiple_of(2) { m } else { m + 1 };
    for u in 0..n {
        for v in u + 1..n {
            if out.raw(u, v) == 0 && comp_of[u] == comp_of[v] {
                let d = pick(pd[u * n + v]);
                out.set(u, v, d);
                trace.push(TraceEntry { time: fill, edge: [u, v], dist: d, witness: None });
            }
        }
    }
    if anchors.len() == 1 {
        return true;
    }
    // Bipartition side of each vertex; the first component is the reference
    // and every other anchor sits at distance M from its anchor.
    let side: Vec<u64> = (0..n)
        .map(|x| {
            let i = comp_of[x];
            let anchor = anchors[i];
            let own = if x == anchor { 0 } else { out.raw(anchor, x) as u64 };
            let shift = if i == 0 { 0 } else { m as u64 };
            (own + shift) % 2
        })
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            if out.raw(u, v) == 0 {
                let d = pick(side[u] + side[v]);
                out.set(u, v, d);
                trace.push(TraceEntry { time: fill, edge: [u, v], dist: d, witness: None });
            }
        }
    }
    false
}

/// The bipartite engine without parameter validation. The flag tells
/// whether the input was connected.
pub fn bipartite_engine(
    g: &EdgeLabelledGraph,
    delta: u32,
    c0: u32,
    m: u32,
) -> (EdgeLabelledGraph, Vec<TraceEntry>, bool) {
    let mut out = g.clone();
    let mut trace = Vec::new();
    Schedule::new(delta, bipartite_rules(delta, c0, m)).run(&mut out, &mut trace);
    let connected = bipartite_fill(g, &mut out, delta, m, &mut trace);
    (out, trace, connected)
}

/// A validated primitive or bipartite engine with its schedule and
/// triangle table precomputed, for running on many inputs.
#[derive(Clone, Debug)]
pub struct Completer {
    p: ParameterSet,
    delta: u32,
    m: u32,
    fill: u32,
    bipartite: bool,
    schedule: Schedule,
    triangles: TriangleTable,
}

impl Completer {
    pub fn new(p: &ParameterSet, m: u32) -> Result<Self, CompletionError> {
        let kind = require_kind(p, "magic", &[Kind::Primitive, Kind::Bipartite])?;
        let delta = p.delta_fin().ok_or(CompletionError::WrongKind { engine: "magic", kind })?;
        let bipartite = kind == Kind::Bipartite;
        let valid = if bipartite { magic_set(p)? } else { completion_parameters(p)? };
        if !valid.contains(&m) {
            return Err(CompletionError::BadMagic(m));
        }
        let rules = if bipartite {
            bipartite_rules(delta, p.c0.finite().unwrap(), m)
        } else {
            primitive_rules(delta, p.c().finite().unwrap(), m)
        };
        Ok(Completer {
            p: p.clone(),
            delta,
            m,
            fill: m,
            bipartite,
            schedule: Schedule::new(delta, rules),
            triangles: TriangleTable::new(p),
        })
    }

    pub fn magic(&self) -> u32 {
        self.m
    }

    pub fn params(&self) -> &ParameterSet {
        &self.p
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite
    }

    /// A deliberately broken copy: the first fork rule that can fire closes
    /// to a neighbouring distance, or the fill moves off `M` if no rule can
    /// fire. For checking that the suites notice.
    pub fn with_fault(mut self) -> Self {
        let delta = self.delta;
        let shift = |x: u32| if x > 1 { x - 1 } else { (x + 1).min(delta) };
        match self.schedule.steps.iter_mut().find(|(_, t)| t.iter().any(|&b| b)) {
            Some((rule, _)) => rule.target = shift(rule.target),
            None => self.fill = if self.m < delta { self.m + 1 } else { self.m - 1 },
        }
        self
    }

    pub fn complete(&self, g: &EdgeLabelledGraph) -> Result<CompletionResult, CompletionError> {
        check_labels(g, self.delta)?;
        let mut out = g.clone();
        let mut trace = Vec::new();
        self.schedule.run(&mut out, &mut trace);
        let connected = if self.bipartite {
            bipartite_fill(g, &mut out, self.delta, self.fill, &mut trace)
        } else {
            magic_fill(&mut out, self.delta, self.fill, &mut trace);
            true
        };
        let certificate = first_violation_fast(&out, &self.triangles, &self.p);
        let status = if certificate.is_none() { CompletionStatus::Success } else { CompletionStatus::NoCompletion };
        let mut r =
            CompletionResult { graph: out, trace, status, certificate, pode_dependent: None, canonical: true };
        r.canonical = connected;
        Ok(r)
    }
}

/// The first forbidden triangle or Henson copy of a complete graph with
/// labels in `1..=δ`, in the order `membership_check` reports them.
fn first_violation_fast(g: &EdgeLabelledGraph, t: &TriangleTable, p: &ParameterSet) -> Option<Violation> {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let a = g.raw(u, v);
            for w in v + 1..n {
                let (b, c) = (g.raw(v, w), g.raw(u, w));
                if !t.allowed(a, b, c) {
                    let verdict = triangle_verdict(a, b, c, p).expect("labels in range");
                    return Some(Violation::Triangle { vertices: [u, v, w], lengths: [a, b, c], verdict });
                }
            }
        }
    }
    if p.henson.is_empty() {
        None
    } else {
        henson_violation(g, p)
    }
}

/// Membership of a complete graph with labels in `1..=δ`.
pub fn is_member_fast(g: &EdgeLabelledGraph, t: &TriangleTable, p: &ParameterSet) -> bool {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let a = g.raw(u, v);
            for w in v + 1..n {
                if !t.allowed(a, g.raw(v, w), g.raw(u, w)) {
                    return false;
                }
            }
        }
    }
    p.henson.is_empty() || henson_violation(g, p).is_none()
}

/// The distance the primitive engine gives to an isolated fork `(a, b)`.
pub fn fork_value(a: u32, b: u32, p: &ParameterSet, m: u32) -> u32 {
    let delta = p.delta_fin().expect("finite diameter");
    let c = p.c().finite().expect("finite C");
    let g = EdgeLabelledGraph::from_edges(3, &[(0, 2, a), (1, 2, b)]);
    magic_engine(&g, delta, c, m).0.raw(0, 1)
}

fn require_kind(p: &ParameterSet, engine: &'static str, ok: &[Kind]) -> Result<Kind, CompletionError> {
    let v = admissibility_verdict(p);
    if !v.admissible {
        return Err(ParamError::NotAdmissible(p.to_string()).into());
    }
    if !ok.contains(&v.kind) {
        return Err(CompletionError::WrongKind { engine, kind: v.kind });
    }
    Ok(v.kind)
}

/// Completion with magic parameter `m` for a primitive class.
pub fn magic_complete(g: &EdgeLabelledGraph, p: &ParameterSet, m: u32) -> Result<CompletionResult, CompletionError> {
    require_kind(p, "magic", &[Kind::Primitive])?;
    Completer::new(p, m)?.complete(g)
}

/// Bipartite completion with magic parameter `m`.
pub fn bipartite_complete(
    g: &EdgeLabelledGraph,
    p: &ParameterSet,
    m: u32,
) -> Result<CompletionResult, CompletionError> {
    require_kind(p, "bipartite", &[Kind::Bipartite])?;
    Completer::new(p, m)?.complete(g)
}

fn partner_map(g: &EdgeLabelledGraph, delta: u32) -> Result<Vec<usize>, CompletionError> {
    if !is_antipodally_symmetric(g, delta) {
        return Err(CompletionError::NotSymmetric);
    }
    Ok(antipodal_partners(g, delta)?.into_iter().map(Option::unwrap).collect())
}

/// Complete the pode in the class of diameter `δ - 1`, then extend
/// antipodally. The input must be antipodally symmetric.
pub fn antipodal_complete(pg: &PodedGraph, p: &ParameterSet) -> Result<CompletionResult, CompletionError> {
    let kind = require_kind(p, "antipodal", &[Kind::AntipodalNonbipartite, Kind::AntipodalBipartite])?;
    let delta = p.delta_fin().unwrap();
    let g = &pg.graph;
    check_labels(g, delta)?;
    let partner = partner_map(g, delta)?;
    if pg.pode.len() != g.n() {
        return Err(CompletionError::BadPode("length differs from vertex count".into()));
    }
    for x in 0..g.n() {
        if pg.pode[x] == pg.pode[partner[x]] {
            return Err(CompletionError::BadPode(format!("vertex {x} and its partner are on the same side")));
        }
    }
    let pode: Vec<usize> = (0..g.n()).filter(|&x| pg.pode[x]).collect();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &x) in pode.iter().enumerate() {
        index[x] = i;
    }
    let pg_graph = g.induced(&pode);
    let m = delta / 2;
    let (completed, pode_trace, connected) = match kind {
        Kind::AntipodalNonbipartite => {
            let (c, t) = magic_engine(&pg_graph, delta - 1, p.c().finite().unwrap(), m);
            (c, t, true)
        }
        _ => bipartite_engine(&pg_graph, delta - 1, 2 * delta + 2, m),
    };
    let rep = |x: usize| if pg.pode[x] { (index[x], false) } else { (index[partner[x]], true) };
    let mut out = g.clone();
    for (u, v) in g.non_edges() {
        let ((iu, fu), (iv, fv)) = (rep(u), rep(v));
        let d = completed.raw(iu, iv);
        out.set(u, v, if fu == fv { d } else { delta - d });
    }
    let mut trace = Vec::new();
    for e in &pode_trace {
        let (u, v) = (pode[e.edge[0]], pode[e.edge[1]]);
        let w = e.witness.map(|w| pode[w]);
        let (us, vs) = (partner[u], partner[v]);
        let ws = w.map(|w| partner[w]);
        for (a, b, d, wit) in
            [(u, v, e.dist, w), (us, vs, e.dist, ws), (u, vs, delta - e.dist, w), (us, v, delta - e.dist, ws)]
        {
            trace.push(TraceEntry { time: e.time, edge: [a.min(b), a.max(b)], dist: d, witness: wit });
        }
    }
    trace.sort_by_key(|e| (e.time, e.edge));
    let mut r = CompletionResult::judged(out, trace, p)?;
    r.canonical = connected;
    Ok(r)
}

/// Whether the antipodal completion is independent of the pode for this
/// kind and input.
pub fn pode_independent(p: &ParameterSet, g: &EdgeLabelledGraph) -> bool {
    let delta = p.delta_fin().unwrap_or(0);
    match admissibility_verdict(p).kind {
        Kind::AntipodalNonbipartite => delta.is_multiple_of(2),
        Kind::AntipodalBipartite => delta % 2 == 1 && g.is_connected(),
        _ => false,
    }
}

/// The canonical pode: the smaller vertex of each δ-pair.
pub fn canonical_pode(g: &EdgeLabelledGraph, delta: u32) -> Result<Vec<bool>, CompletionError> {
    let partner = partner_map(g, delta)?;
    Ok((0..g.n()).map(|x| x < partner[x]).collect())
}

/// Antipodal completion without a given pode.
pub fn antipodal_complete_podefree(g: &EdgeLabelledGraph, p: &ParameterSet) -> Result<CompletionResult, CompletionError> {
    require_kind(p, "antipodal", &[Kind::AntipodalNonbipartite, Kind::AntipodalBipartite])?;
    let delta = p.delta_fin().unwrap();
    let pode = canonical_pode(g, delta)?;
    let mut r = antipodal_complete(&PodedGraph::new(g.clone(), pode), p)?;
    r.pode_dependent = Some(!pode_independent(p, g));
    Ok(r)
}

/// Shortest-path completion for infinite diameter.
pub fn shortest_path_complete(g: &EdgeLabelledGraph, p: &ParameterSet) -> Result<CompletionResult, CompletionError> {
    let kind = require_kind(p, "shortest-path", &[Kind::Primitive, Kind::Bipartite])?;
    if !p.delta.is_inf() {
        return Err(CompletionError::WrongKind { engine: "shortest-path", kind });
    }
    let pd = all_path_distances(g);
    let comps = g.components();
    let mut comp_of = vec![0; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut out = g.clone();
    let mut trace = Vec::new();
    let mut longest = 1u64;
    for (u, v) in g.non_edges() {
        if let Some(d) = pd[u][v] {
            let d = u32::try_from(d).map_err(|_| GraphError::OutOfRange(u32::MAX))?;
            longest = longest.max(d as u64);
            out.set(u, v, d);
            trace.push(TraceEntry { time: 1, edge: [u, v], dist: d, witness: None });
        }
    }
    longest = longest.max(g.max_label() as u64);
    let join = |u: usize, v: usize| -> u64 {
        match p.k1 {
            Ext::Fin(k1) => longest.max(k1 as u64),
            Ext::Inf => {
                let level = longest + longest % 2;
                let parity = |x: usize| pd[comps[comp_of[x]][0]][x].unwrap_or(0) % 2;
                level + (parity(u) + parity(v)) % 2
            }
        }
    };
    for (u, v) in out.non_edges() {
        let d = u32::try_from(join(u, v)).map_err(|_| GraphError::OutOfRange(u32::MAX))?;
        out.set(u, v, d);
        trace.push(TraceEntry { time: 2, edge: [u, v], dist: d, witness: None });
    }
    let mut r = CompletionResult::judged(out, trace, p)?;
    r.canonical = comps.len() <= 1;
    Ok(r)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DispatchOptions {
    /// Pode over the input vertices (antipodal classes only).
    pub pode: Option<Vec<bool>>,
    /// Override the magic parameter.
    pub magic: Option<u32>,
}

/// Complete `g` with the engine matching the kind of `p`.
pub fn dispatch_complete(
    g: &EdgeLabelledGraph,
    p: &ParameterSet,
    opts: &DispatchOptions,
) -> Result<CompletionResult, CompletionError> {
    let v = admissibility_verdict(p);
    if !v.admissible {
        return Err(ParamError::NotAdmissible(p.to_string()).into());
    }
    if p.delta.is_inf() {
        return shortest_path_complete(g, p);
    }
    let delta = p.delta_fin().unwrap();
    check_labels(g, delta)?;
    match v.kind {
        Kind::Primitive => {
            let m = match opts.magic {
                Some(m) => m,
                None if p.henson.is_empty() => completion_parameter(p)?,
                None => henson_parameter(p)?,
            };
            magic_complete(g, p, m)
        }
        Kind::Bipartite => {
            if !p.henson.is_empty() && !(p.henson.len() == 1 && p.henson[0].is_anticlique()) {
                return Err(CompletionError::UnsupportedHenson(
                    "bipartite classes only support a single anticlique".into(),
                ));
            }
            let m = match opts.magic {
                Some(m) => m,
                None if p.henson.is_empty() => completion_parameter(p)?,
                None => henson_parameter(p)?,
            };
            bipartite_complete(g, p, m)
        }
        Kind::AntipodalNonbipartite | Kind::AntipodalBipartite => {
            let n = g.n();
            let sym = match antipodal_symmetrize(g, p) {
                Ok(s) => s,
                Err(GraphError::NoCompletion(reason)) => {
                    return Ok(CompletionResult {
                        graph: g.clone(),
                        trace: Vec::new(),
                        status: CompletionStatus::NoCompletion,
                        certificate: Some(Violation::Antipodal { reason }),
                        pode_dependent: None,
                        canonical: true,
                    })
                }
                Err(e) => return Err(e.into()),
            };
            let mut r = match &opts.pode {
                Some(pode) => {
                    if pode.len() != n {
                        return Err(CompletionError::BadPode("length differs from vertex count".into()));
                    }
                    let partner = antipodal_partners(&sym, delta)?;
                    let mut full = pode.clone();
                    for x in n..sym.n() {
                        full.push(!pode[partner[x].unwrap()]);
                    }
                    antipodal_complete(&PodedGraph::new(sym, full), p)?
                }
                None => antipodal_complete_podefree(&sym, p)?,
            };
            let keep: Vec<usize> = (0..n).collect();
            r.graph = r.graph.induced(&keep);
            r.trace.retain(|e| e.edge[1] < n);
            if r.is_success() {
                // A subspace of a member is a member.
                debug_assert!(membership_check(&r.graph, p).unwrap().is_pass());
            }
            Ok(r)
        }
        Kind::None => unreachable!(),
    }
}
