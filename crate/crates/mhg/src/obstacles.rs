//! Labelled cycles that admit no completion, their enumeration, the
//! backward fork expansion and a sampled check that they characterise
//! completability.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::completion::{fork_value, CompletionError, Completer};
use crate::graph::EdgeLabelledGraph;
use crate::oracle::{for_each_completion, random_partial_graph, OracleError, Report, DEFAULT_MAX_NON_EDGES};
use crate::params::{admissibility_verdict, completion_parameter, Kind, ParamError, ParameterSet};

pub const DEFAULT_MAX_LEN: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ObstacleError {
    #[error("cycle length {0} is below 3")]
    TooShort(usize),
    #[error("cycle length {len} exceeds the bound {bound}")]
    TooLarge { len: usize, bound: usize },
    #[error("bad cycle: {0}")]
    Malformed(String),
    #[error("obstacle enumeration needs a primitive class of finite diameter")]
    NotPrimitive,
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Completion(#[from] CompletionError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Lexicographic minimum over all rotations and reflections.
pub fn canonical(labels: &[u32]) -> Vec<u32> {
    let k = labels.len();
    let mut best = labels.to_vec();
    let rev: Vec<u32> = labels.iter().rev().copied().collect();
    for seq in [labels, &rev[..]] {
        for r in 0..k {
            let cand: Vec<u32> = seq[r..].iter().chain(&seq[..r]).copied().collect();
            if cand < best {
                best = cand;
            }
        }
    }
    best
}

/// A cycle `d1 d2 ... dk`, stored in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledCycle(Vec<u32>);

impl LabelledCycle {
    pub fn new(labels: &[u32]) -> Result<Self, ObstacleError> {
        if labels.len() < 3 {
            return Err(ObstacleError::TooShort(labels.len()));
        }
        if labels.contains(&0) {
            return Err(ObstacleError::Malformed("zero label".into()));
        }
        Ok(LabelledCycle(canonical(labels)))
    }

    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn graph(&self) -> EdgeLabelledGraph {
        EdgeLabelledGraph::cycle(&self.0)
    }
}

impl fmt::Display for LabelledCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Accepts `"1 2 4"` or, for single-digit labels, `"124"`.
impl FromStr for LabelledCycle {
    type Err = ObstacleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let labels: Option<Vec<u32>> = if s.contains(char::is_whitespace) {
            s.split_whitespace().map(|t| t.parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10)).collect()
        };
        LabelledCycle::new(&labels.ok_or_else(|| ObstacleError::Malformed(format!("{s:?}")))?)
    }
}

impl Serialize for LabelledCycle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LabelledCycle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Decider {
    Engine,
    Oracle,
}

impl FromStr for Decider {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "engine" => Ok(Decider::Engine),
            "oracle" => Ok(Decider::Oracle),
            _ => Err(format!("unknown decider {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstacleCatalogue {
    pub params: ParameterSet,
    pub bound_theoretical: u64,
    pub max_length: usize,
    pub decider: Decider,
    /// Keyed by cycle length; every length in `3..=max_length` is present.
    pub cycles: BTreeMap<usize, BTreeSet<LabelledCycle>>,
}

impl ObstacleCatalogue {
    pub fn of_length(&self, k: usize) -> Option<&BTreeSet<LabelledCycle>> {
        self.cycles.get(&k)
    }

    pub fn iter(&self) -> impl Iterator<Item = &LabelledCycle> {
        self.cycles.values().flatten()
    }

    pub fn contains(&self, c: &LabelledCycle) -> bool {
        self.cycles.get(&c.len()).is_some_and(|s| s.contains(c))
    }
}

/// `2^δ · 3`, the length beyond which no cycle is needed.
pub fn theoretical_bound(delta: u32) -> u64 {
    1u64.checked_shl(delta).map_or(u64::MAX, |x| x.saturating_mul(3))
}

/// Decides completability of cycles by the chosen method.
pub struct CycleDecider {
    kind: Decider,
    p: ParameterSet,
    engine: Completer,
}

impl CycleDecider {
    pub fn new(p: &ParameterSet, kind: Decider) -> Result<Self, ObstacleError> {
        let v = admissibility_verdict(p);
        if !v.admissible || v.kind != Kind::Primitive || p.delta.is_inf() {
            return Err(ObstacleError::NotPrimitive);
        }
        let engine = Completer::new(p, completion_parameter(p)?)?;
        Ok(CycleDecider { kind, p: p.clone(), engine })
    }

    pub fn completable(&self, labels: &[u32]) -> Result<bool, ObstacleError> {
        let g = EdgeLabelledGraph::cycle(labels);
        match self.kind {
            Decider::Engine => Ok(self.engine.complete(&g)?.is_success()),
            Decider::Oracle => {
                let mut found = false;
                let bound = DEFAULT_MAX_NON_EDGES.max(3);
                for_each_completion(&g, &self.p, bound, |_| {
                    found = true;
                    std::ops::ControlFlow::Break(())
                })?;
                Ok(found)
            }
        }
    }
}

/// Every canonical sequence of length `k` over `1..=delta`, ascending.
pub fn canonical_sequences(k: usize, delta: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![1u32; k];
    loop {
        if canonical(&cur) == cur {
            out.push(cur.clone());
        }
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < delta {
                cur[i] += 1;
                for c in &mut cur[i + 1..] {
                    *c = 1;
                }
                break;
            }
        }
    }
}

/// All non-completable cycles of lengths `3..=max_len`.
pub fn enumerate_obstacles(p: &ParameterSet, max_len: usize, decider: Decider) -> Result<ObstacleCatalogue, ObstacleError> {
    let d = CycleDecider::new(p, decider)?;
    let delta = p.delta_fin().ok_or(ObstacleError::NotPrimitive)?;
    let bound = theoretical_bound(delta);
    let cap = (bound.min(DEFAULT_MAX_LEN as u64)) as usize;
    if max_len > cap {
        return Err(ObstacleError::TooLarge { len: max_len, bound: cap });
    }
    let mut cycles = BTreeMap::new();
    for k in 3..=max_len {
        let mut bucket = BTreeSet::new();
        for seq in canonical_sequences(k, delta) {
            if !d.completable(&seq)? {
                bucket.insert(LabelledCycle(seq));
            }
        }
        cycles.insert(k, bucket);
    }
    Ok(ObstacleCatalogue { params: p.clone(), bound_theoretical: bound, max_length: max_len, decider, cycles })
}

/// Replace one label `x ≠ m` of a triangle by each ordered fork `(a, b)` the
/// engine closes to `x`. The results are candidates and need re-checking.
pub fn backward_expand(triangle: &LabelledCycle, p: &ParameterSet, m: u32) -> BTreeSet<LabelledCycle> {
    let delta = p.delta_fin().expect("finite diameter");
    let labels = triangle.labels();
    let mut out = BTreeSet::new();
    for i in 0..labels.len() {
        let x = labels[i];
        if x == m {
            continue;
        }
        for a in 1..=delta {
            for b in 1..=delta {
                if fork_value(a, b, p, m) == x {
                    let mut seq = labels[..i].to_vec();
                    seq.extend([a, b]);
                    seq.extend(&labels[i + 1..]);
                    out.insert(LabelledCycle(canonical(&seq)));
                }
            }
        }
    }
    out
}

/// Whether `g` contains a closed walk whose labels read `labels`, i.e. a
/// homomorphic image of the cycle.
pub fn has_homomorphic_image(g: &EdgeLabelledGraph, labels: &[u32]) -> bool {
    let n = g.n();
    assert!(n <= 64, "walk test supports at most 64 vertices");
    (0..n).any(|s| {
        let mut cur: u64 = 1 << s;
        for &l in labels {
            let mut next = 0u64;
            for u in (0..n).filter(|&u| cur >> u & 1 == 1) {
                for w in 0..n {
                    if g.raw(u, w) == l {
                        next |= 1 << w;
                    }
                }
            }
            cur = next;
            if cur == 0 {
                return false;
            }
        }
        cur >> s & 1 == 1
    })
}

/// The first catalogue cycle with a homomorphic image in `g`.
pub fn find_obstacle<'a>(g: &EdgeLabelledGraph, catalogue: &'a ObstacleCatalogue) -> Option<&'a LabelledCycle> {
    catalogue.iter().find(|c| has_homomorphic_image(g, c.labels()))
}

/// On seeded random partial graphs with 3 to 6 vertices: whenever no
/// catalogue cycle maps in, the engine must succeed.
pub fn verify_obstacle_closure(
    p: &ParameterSet,
    catalogue: &ObstacleCatalogue,
    samples: usize,
    seed: u64,
) -> Result<Report, ObstacleError> {
    let engine = Completer::new(p, completion_parameter(p)?)?;
    let delta = p.delta_fin().ok_or(ObstacleError::NotPrimitive)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::default();
    let mut obstructed = 0;
    for _ in 0..samples {
        let n = rng.gen_range(3..=6);
        let g = random_partial_graph(&mut rng, n, delta, n * (n - 1) / 2);
        report.checked += 1;
        if find_obstacle(&g, catalogue).is_some() {
            obstructed += 1;
            continue;
        }
        if !engine.complete(&g)?.is_success() {
            report.violation(json!({"params": p.to_string(), "graph": g}), "unobstructed but not completable");
        }
    }
    report.skip(format!("{obstructed} of {samples} samples contain an obstacle image; no claim made"));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iib() -> ParameterSet {
        ParameterSet::finite(5, 3, 3, 16, 13)
    }

    fn set(items: &[&str]) -> BTreeSet<LabelledCycle> {
        items.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical(&[2, 1, 4]), vec![1, 2, 4]);
        assert_eq!(canonical(&[1, 5, 5, 4]), vec![1, 4, 5, 5]);
        assert_eq!(canonical(&[5, 1, 4, 1]), vec![1, 4, 1, 5]);
        let c: LabelledCycle = "4 1 5 5".parse().unwrap();
        assert_eq!(c.to_string(), "1 4 5 5");
        assert!(LabelledCycle::new(&[1, 1]).is_err());
        assert!("1x2".parse::<LabelledCycle>().is_err());
    }

    #[test]
    fn canonical_sequences_count() {
        // Necklaces up to reflection (bracelets) of length 4 over 2 colours.
        assert_eq!(canonical_sequences(4, 2).len(), 6);
        assert_eq!(canonical_sequences(3, 5).len(), 35);
    }

    #[test]
    fn backward_expand_examples() {
        let p = iib();
        let t: LabelledCycle = "124".parse().unwrap();
        assert_eq!(backward_expand(&t, &p, 3), set(&["1114", "1554", "1215", "1251"]));
        assert_eq!(backward_expand(&"122".parse().unwrap(), &p, 3), set(&["1112", "1552"]));
        assert_eq!(backward_expand(&"445".parse().unwrap(), &p, 3), set(&["1545", "5145", "4155"]));
    }

    #[test]
    fn walk_test() {
        let g = EdgeLabelledGraph::cycle(&[5, 5, 5]);
        assert!(has_homomorphic_image(&g, &[5, 5, 5]));
        assert!(!has_homomorphic_image(&g, &[5, 5, 4]));
        // The edge 1 traversed back and forth is an image of 1111.
        let e = EdgeLabelledGraph::from_edges(2, &[(0, 1, 1)]);
        assert!(has_homomorphic_image(&e, &[1, 1, 1, 1]));
        assert!(!has_homomorphic_image(&e, &[1, 1, 1]));
    }

    #[test]
    fn short_catalogue() {
        let cat = enumerate_obstacles(&iib(), 4, Decider::Engine).unwrap();
        assert_eq!(cat.of_length(3).unwrap().len(), 15);
        assert!(cat.contains(&"1114".parse().unwrap()));
        assert!(!cat.contains(&"1555".parse().unwrap()));
        assert!(enumerate_obstacles(&iib(), 9, Decider::Engine).is_err());
        assert!(enumerate_obstacles(&ParameterSet::bipartite(4, 12), 4, Decider::Engine).is_err());
    }
}
