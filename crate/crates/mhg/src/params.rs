//! Parameter tuples `(δ, K1, K2, C0, C1, S)`, their acceptability and
//! admissibility, magic distances and the enumeration of admissible tuples.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

/// A non-negative integer or infinity. Infinity compares above every finite
/// value and absorbs addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ext {
    Fin(u32),
    Inf,
}

pub use Ext::{Fin, Inf};

impl Ext {
    pub fn is_inf(self) -> bool {
        matches!(self, Inf)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Fin(v) => Some(v),
            Inf => None,
        }
    }

    pub fn add(self, other: Ext) -> Ext {
        match (self, other) {
            (Fin(a), Fin(b)) => Fin(a.saturating_add(b)),
            _ => Inf,
        }
    }

    pub fn mul(self, k: u32) -> Ext {
        match self {
            Fin(a) => Fin(a.saturating_mul(k)),
            Inf => Inf,
        }
    }
}

impl PartialOrd for Ext {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ext {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Fin(a), Fin(b)) => a.cmp(b),
            (Fin(_), Inf) => Ordering::Less,
            (Inf, Fin(_)) => Ordering::Greater,
            (Inf, Inf) => Ordering::Equal,
        }
    }
}

impl PartialEq<u32> for Ext {
    fn eq(&self, other: &u32) -> bool {
        *self == Fin(*other)
    }
}

impl PartialOrd<u32> for Ext {
    fn partial_cmp(&self, other: &u32) -> Option<Ordering> {
        Some(self.cmp(&Fin(*other)))
    }
}

impl From<u32> for Ext {
    fn from(v: u32) -> Self {
        Fin(v)
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fin(v) => write!(f, "{v}"),
            Inf => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for Ext {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "oo" | "∞" => Ok(Inf),
            t => t.parse::<u32>().map(Fin).map_err(|e| format!("bad value {t:?}: {e}")),
        }
    }
}

impl Serialize for Ext {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Fin(v) => s.serialize_u32(*v),
            Inf => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Ext {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct ExtVisitor;

        impl Visitor<'_> for ExtVisitor {
            type Value = Ext;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a non-negative integer or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Ext, E> {
                u32::try_from(v).map(Fin).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Ext, E> {
                u32::try_from(v).map(Fin).map_err(E::custom)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Ext, E> {
                match v {
                    "inf" | "infinity" => Ok(Inf),
                    _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
                }
            }
        }

        d.deserialize_any(ExtVisitor)
    }
}

/// A forbidden `(1,δ)`-space, given by the sizes of its cliques (classes of
/// the distance-1 relation, at mutual distance δ).
///
/// With `antipodal` set the constraint instead stands for a clique of size
/// `clique_sizes[0]` together with all of its antipodal companions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HensonConstraint {
    pub clique_sizes: Vec<u32>,
    pub antipodal: bool,
}

impl HensonConstraint {
    pub fn new(mut clique_sizes: Vec<u32>) -> Self {
        clique_sizes.retain(|&s| s > 0);
        clique_sizes.sort_unstable_by(|a, b| b.cmp(a));
        HensonConstraint { clique_sizes, antipodal: false }
    }

    pub fn clique(n: u32) -> Self {
        Self::new(vec![n])
    }

    pub fn anticlique(n: u32) -> Self {
        Self::new(vec![1; n as usize])
    }

    /// A clique of size `n` together with all its antipodal companions.
    pub fn antipodal_clique(n: u32) -> Self {
        HensonConstraint { clique_sizes: vec![n], antipodal: true }
    }

    pub fn vertex_count(&self) -> usize {
        self.clique_sizes.iter().map(|&s| s as usize).sum()
    }

    pub fn is_anticlique(&self) -> bool {
        !self.antipodal && self.clique_sizes.iter().all(|&s| s == 1)
    }

    /// Concrete distance matrices (row-major, `n*n`) of every space this
    /// constraint forbids.
    pub fn realizations(&self, delta: u32) -> Vec<(usize, Vec<u32>)> {
        let n = self.vertex_count();
        if self.antipodal {
            // Companion flipping the first `k` vertices; k and n-k give the same space.
            (0..=n / 2)
                .map(|k| {
                    let mut d = vec![0; n * n];
                    for u in 0..n {
                        for v in 0..n {
                            if u != v {
                                d[u * n + v] = if (u < k) == (v < k) { 1 } else { delta - 1 };
                            }
                        }
                    }
                    (n, d)
                })
                .collect()
        } else {
            let mut class = Vec::with_capacity(n);
            for (i, &s) in self.clique_sizes.iter().enumerate() {
                class.extend(std::iter::repeat_n(i, s as usize));
            }
            let mut d = vec![0; n * n];
            for u in 0..n {
                for v in 0..n {
                    if u != v {
                        d[u * n + v] = if class[u] == class[v] { 1 } else { delta };
                    }
                }
            }
            vec![(n, d)]
        }
    }
}

impl Serialize for HensonConstraint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.antipodal {
            #[derive(Serialize)]
            struct Tagged<'a> {
                antipodal_clique: &'a u32,
            }
            Tagged { antipodal_clique: &self.clique_sizes[0] }.serialize(s)
        } else {
            self.clique_sizes.serialize(s)
        }
    }
}

impl<'de> Deserialize<'de> for HensonConstraint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Sizes(Vec<u32>),
            Antipodal { antipodal_clique: u32 },
        }
        Ok(match Raw::deserialize(d)? {
            Raw::Sizes(s) => HensonConstraint::new(s),
            Raw::Antipodal { antipodal_clique } => HensonConstraint::antipodal_clique(antipodal_clique),
        })
    }
}

/// The tuple `(δ, K1, K2, C0, C1, S)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParameterSet {
    pub delta: Ext,
    pub k1: Ext,
    pub k2: Ext,
    pub c0: Ext,
    pub c1: Ext,
    #[serde(default)]
    pub henson: Vec<HensonConstraint>,
}

impl ParameterSet {
    pub fn new(delta: Ext, k1: Ext, k2: Ext, c0: Ext, c1: Ext) -> Self {
        ParameterSet { delta, k1, k2, c0, c1, henson: Vec::new() }
    }

    /// Finite diameter and finite K1.
    pub fn finite(delta: u32, k1: u32, k2: u32, c0: u32, c1: u32) -> Self {
        Self::new(Fin(delta), Fin(k1), Fin(k2), Fin(c0), Fin(c1))
    }

    /// `(δ, ∞, 0, C0, 2δ+1)`.
    pub fn bipartite(delta: u32, c0: u32) -> Self {
        Self::new(Fin(delta), Inf, Fin(0), Fin(c0), Fin(2 * delta + 1))
    }

    pub fn with_henson(mut self, henson: Vec<HensonConstraint>) -> Self {
        self.henson = henson;
        self
    }

    pub fn c(&self) -> Ext {
        self.c0.min(self.c1)
    }

    pub fn c_prime(&self) -> Ext {
        self.c0.max(self.c1)
    }

    /// Finite diameter, if any.
    pub fn delta_fin(&self) -> Option<u32> {
        self.delta.finite()
    }

    pub fn numeric(&self) -> ParameterSet {
        ParameterSet { henson: Vec::new(), ..self.clone() }
    }
}

impl fmt::Display for ParameterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{}", self.delta, self.k1, self.k2, self.c0, self.c1)?;
        for h in &self.henson {
            if h.antipodal {
                write!(f, ",K{}*", h.clique_sizes[0])?;
            } else {
                write!(f, ",{:?}", h.clique_sizes)?;
            }
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case {
    I,
    /// Only used for infinite diameter with finite K1.
    II,
    IIA,
    IIB,
    III,
    None,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::I => "I",
            Case::II => "II",
            Case::IIA => "IIA",
            Case::IIB => "IIB",
            Case::III => "III",
            Case::None => "NONE",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Kind {
    Primitive,
    Bipartite,
    AntipodalNonbipartite,
    AntipodalBipartite,
    None,
}

impl Kind {
    pub fn is_antipodal(self) -> bool {
        matches!(self, Kind::AntipodalNonbipartite | Kind::AntipodalBipartite)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityVerdict {
    pub acceptable: bool,
    pub admissible: bool,
    pub case: Case,
    pub kind: Kind,
    pub failed_conditions: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("malformed parameters: {0}")]
    Malformed(String),
    #[error("parameters {0} are not admissible")]
    NotAdmissible(String),
}

fn parity_check(p: &ParameterSet) -> Result<(), ParamError> {
    if let Fin(c0) = p.c0 {
        if c0 % 2 == 1 {
            return Err(ParamError::Malformed(format!("C0 = {c0} is odd")));
        }
    }
    if let Fin(c1) = p.c1 {
        if c1 % 2 == 0 {
            return Err(ParamError::Malformed(format!("C1 = {c1} is even")));
        }
    }
    Ok(())
}

fn numeric_failures(p: &ParameterSet) -> Vec<String> {
    let mut failed = Vec::new();
    match p.delta {
        Inf => {
            let generic = p.k1 >= 1 && !p.k1.is_inf() && p.k2.is_inf();
            let bipartite = p.k1.is_inf() && p.k2 == 0;
            if !(generic || bipartite) {
                failed.push("infinite diameter needs (K1 finite, K2 = inf) or (K1 = inf, K2 = 0)".into());
            }
            if !p.c0.is_inf() || !p.c1.is_inf() {
                failed.push("infinite diameter needs C0 = C1 = inf".into());
            }
        }
        Fin(d) => {
            if d < 3 {
                failed.push("delta >= 3".into());
            }
            let k_ok = (p.k1 >= 1 && p.k1 <= p.k2 && p.k2 <= 2 * d) || (p.k1.is_inf() && p.k2 == 0);
            if !k_ok {
                failed.push("1 <= K1 <= K2 <= 2 delta, or K1 = inf and K2 = 0".into());
            }
            for (name, c) in [("C0", p.c0), ("C1", p.c1)] {
                if !(c > 2 * d && c <= 3 * d + 2) {
                    failed.push(format!("2 delta < {name} <= 3 delta + 2"));
                }
            }
            if p.k1.is_inf() && p.c1 != 2 * d + 1 {
                failed.push("K1 = inf implies C1 = 2 delta + 1".into());
            }
        }
    }
    failed
}

/// Acceptability of the numerical part together with the Henson set.
pub fn is_acceptable(p: &ParameterSet) -> Result<bool, ParamError> {
    parity_check(p)?;
    Ok(numeric_failures(p).is_empty() && henson_failures(p).is_empty())
}

fn henson_failures(p: &ParameterSet) -> Vec<String> {
    let mut failed = Vec::new();
    if p.henson.is_empty() {
        return failed;
    }
    let Some(d) = p.delta_fin() else {
        failed.push("Henson constraints need finite diameter".into());
        return failed;
    };
    let antipodal_shape = p.c1 == 2 * d + 1 && p.c0 == 2 * d + 2;
    for h in &p.henson {
        if h.antipodal != antipodal_shape {
            failed.push(if antipodal_shape {
                "Henson constraints must be antipodal cliques when C1 = 2 delta + 1 and C0 = 2 delta + 2".into()
            } else {
                "antipodal Henson constraints need C1 = 2 delta + 1 and C0 = 2 delta + 2".into()
            });
        }
        // Three-vertex constraints are accepted (they occur among the standard
        // examples); fewer are meaningless.
        if h.vertex_count() < 3 {
            failed.push(format!("Henson constraint {:?} has fewer than 3 vertices", h.clique_sizes));
        }
        let redundant = h.realizations(d).iter().any(|(n, m)| {
            let n = *n;
            (0..n).any(|u| {
                (u + 1..n).any(|v| {
                    (v + 1..n).any(|w| {
                        !crate::graph::triangle_allowed(m[u * n + v], m[v * n + w], m[u * n + w], p)
                    })
                })
            })
        });
        if redundant {
            failed.push(format!("Henson constraint {:?} contains a forbidden triangle", h.clique_sizes));
        }
    }
    failed
}

fn numeric_case(p: &ParameterSet, failed: &mut Vec<String>) -> Case {
    let Fin(d) = p.delta else {
        return if p.k1.is_inf() { Case::I } else { Case::II };
    };
    let Fin(k1) = p.k1 else {
        return Case::I;
    };
    let k2 = p.k2.finite().unwrap_or(u32::MAX);
    let c = p.c().finite().unwrap_or(u32::MAX);
    let cp = p.c_prime().finite().unwrap_or(u32::MAX);
    if c <= 2 * d + k1 {
        let mut ok = true;
        if c != 2 * k1 + 2 * k2 + 1 {
            failed.push("II: C = 2 K1 + 2 K2 + 1".into());
            ok = false;
        }
        if k1 + k2 < d {
            failed.push("II: K1 + K2 >= delta".into());
            ok = false;
        }
        if k1 + 2 * k2 > 2 * d - 1 {
            failed.push("II: K1 + 2 K2 <= 2 delta - 1".into());
            ok = false;
        }
        if !ok {
            return Case::None;
        }
        if cp == c + 1 {
            return Case::IIA;
        }
        if k1 == k2 && 3 * k2 == 2 * d - 1 {
            return Case::IIB;
        }
        failed.push("IIA: C' = C + 1, or IIB: K1 = K2 and 3 K2 = 2 delta - 1".into());
        Case::None
    } else {
        let mut ok = true;
        if k1 + 2 * k2 < 2 * d - 1 {
            failed.push("III: K1 + 2 K2 >= 2 delta - 1".into());
            ok = false;
        }
        if 3 * k2 < 2 * d {
            failed.push("III: 3 K2 >= 2 delta".into());
            ok = false;
        }
        if k1 + 2 * k2 == 2 * d - 1 && c < 2 * d + k1 + 2 {
            failed.push("III: K1 + 2 K2 = 2 delta - 1 implies C >= 2 delta + K1 + 2".into());
            ok = false;
        }
        if cp > c + 1 && c < 2 * d + k2 {
            failed.push("III: C' > C + 1 implies C >= 2 delta + K2".into());
            ok = false;
        }
        if ok {
            Case::III
        } else {
            Case::None
        }
    }
}

fn classify(p: &ParameterSet, case: Case) -> Kind {
    let Fin(d) = p.delta else {
        return if p.k1.is_inf() { Kind::Bipartite } else { Kind::Primitive };
    };
    if p.k1.is_inf() {
        if p.c0 == 2 * d + 2 {
            Kind::AntipodalBipartite
        } else {
            Kind::Bipartite
        }
    } else if p.c() == 2 * d + 1 {
        debug_assert!(case != Case::III);
        Kind::AntipodalNonbipartite
    } else {
        Kind::Primitive
    }
}

/// Acceptability, the admissibility case and the structural kind of `p`.
pub fn admissibility_verdict(p: &ParameterSet) -> AdmissibilityVerdict {
    let mut failed = Vec::new();
    if let Err(e) = parity_check(p) {
        failed.push(e.to_string());
    }
    failed.extend(numeric_failures(p));
    failed.extend(henson_failures(p));
    let acceptable = failed.is_empty();
    if !acceptable {
        return AdmissibilityVerdict {
            acceptable,
            admissible: false,
            case: Case::None,
            kind: Kind::None,
            failed_conditions: failed,
        };
    }
    let case = numeric_case(p, &mut failed);
    if case != Case::None && !p.henson.is_empty() {
        let d = p.delta_fin().expect("Henson constraints imply finite diameter");
        let c = p.c();
        if c == 2 * d + 1 && !p.k1.is_inf() {
            if d < 4 {
                failed.push("Henson constraints in the antipodal case need delta >= 4".into());
            }
            if !(p.henson.len() == 1 && p.henson[0].antipodal) {
                failed.push("antipodal Henson set must be one clique with all its companions".into());
            }
        }
        if case == Case::III {
            if p.k1 == d {
                failed.push("K1 = delta implies S empty".into());
            }
            if c == 2 * d + 2 {
                failed.push("C = 2 delta + 2 implies S empty".into());
            }
        }
    }
    let admissible = case != Case::None && failed.is_empty();
    AdmissibilityVerdict {
        acceptable,
        admissible,
        case: if admissible { case } else { Case::None },
        kind: if admissible { classify(p, case) } else { Kind::None },
        failed_conditions: failed,
    }
}

fn require_finite_admissible(p: &ParameterSet) -> Result<(u32, AdmissibilityVerdict), ParamError> {
    let v = admissibility_verdict(p);
    match (v.admissible, p.delta) {
        (true, Fin(d)) => Ok((d, v)),
        _ => Err(ParamError::NotAdmissible(p.to_string())),
    }
}

/// The raw primitive magic range `(max(K1, ⌈δ/2⌉), min(K2, ⌊(C-δ-1)/2⌋))`;
/// it may be empty (first component larger).
pub fn magic_bounds(p: &ParameterSet) -> Option<(u32, u32)> {
    let d = p.delta_fin()?;
    let k1 = p.k1.finite()?;
    let k2 = p.k2.finite()?;
    let c = p.c().finite()?;
    let lo = k1.max(d.div_ceil(2));
    let hi = k2.min((c.saturating_sub(d + 1)) / 2);
    Some((lo, hi))
}

/// Magic distances for the kind of `p`.
pub fn magic_set(p: &ParameterSet) -> Result<Vec<u32>, ParamError> {
    let (d, v) = require_finite_admissible(p)?;
    Ok(match v.kind {
        Kind::Primitive => {
            let (lo, hi) = magic_bounds(p).expect("primitive has finite parameters");
            (lo..=hi).collect()
        }
        Kind::Bipartite => {
            let c0 = p.c0.finite().expect("finite C0");
            let top = (c0 - d - 1) / 2;
            (d / 2..=d).filter(|&m| m < top).collect()
        }
        Kind::AntipodalNonbipartite | Kind::AntipodalBipartite => vec![d / 2],
        Kind::None => unreachable!(),
    })
}

/// Magic distances that also satisfy the extra conditions required for
/// the completion with magic parameter.
pub fn completion_parameters(p: &ParameterSet) -> Result<Vec<u32>, ParamError> {
    let (d, v) = require_finite_admissible(p)?;
    let magic = magic_set(p)?;
    if v.kind != Kind::Primitive || v.case != Case::III {
        return Ok(magic);
    }
    let k1 = p.k1.finite().unwrap();
    let k2 = p.k2.finite().unwrap();
    let c = p.c().finite().unwrap();
    let cp = p.c_prime().finite().unwrap();
    Ok(magic
        .into_iter()
        .filter(|&m| !(k1 + 2 * k2 == 2 * d - 1 && m <= k1))
        .filter(|&m| !(cp > c + 1 && c == 2 * d + k2 && m >= k2))
        .collect())
}

/// The smallest admissible choice of magic parameter.
pub fn completion_parameter(p: &ParameterSet) -> Result<u32, ParamError> {
    completion_parameters(p)?
        .first()
        .copied()
        .ok_or_else(|| ParamError::NotAdmissible(format!("{p}: no magic parameter")))
}

/// Magic parameter that never introduces distances 1 or δ, used when `p`
/// carries Henson constraints.
pub fn henson_parameter(p: &ParameterSet) -> Result<u32, ParamError> {
    let (d, v) = require_finite_admissible(p)?;
    let candidates = completion_parameters(p)?;
    let pick = match v.kind {
        Kind::Primitive => candidates.into_iter().find(|&m| m > 1 && m < d),
        Kind::Bipartite => candidates.into_iter().find(|&m| m + 2 <= d),
        _ => candidates.into_iter().next(),
    };
    pick.ok_or_else(|| ParamError::NotAdmissible(format!("{p}: no Henson-safe magic parameter")))
}

pub const DEFAULT_DELTA_BOUND: u32 = 16;

/// All admissible numerical tuples of diameter `delta`, ordered by K1, K2,
/// C0, C1 ascending with K1 = ∞ last.
pub fn enumerate_admissible(delta: u32, include_bipartite: bool) -> Vec<(ParameterSet, AdmissibilityVerdict)> {
    let mut out = Vec::new();
    if !(3..=DEFAULT_DELTA_BOUND).contains(&delta) {
        return out;
    }
    let d = delta;
    // Enumeration uses the conventional range K1 <= K2 <= delta.
    let mut ks: Vec<(Ext, Ext)> = Vec::new();
    for k1 in 1..=d {
        for k2 in k1..=d {
            ks.push((Fin(k1), Fin(k2)));
        }
    }
    if include_bipartite {
        ks.push((Inf, Fin(0)));
    }
    for (k1, k2) in ks {
        for c0 in (2 * d + 1..=3 * d + 2).filter(|c| c % 2 == 0) {
            for c1 in (2 * d + 1..=3 * d + 2).filter(|c| c % 2 == 1) {
                let p = ParameterSet::new(Fin(d), k1, k2, Fin(c0), Fin(c1));
                let v = admissibility_verdict(&p);
                if v.admissible {
                    out.push((p, v));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_ordering_and_saturation() {
        assert!(Fin(u32::MAX) < Inf);
        assert_eq!(Fin(3).add(Inf), Inf);
        assert_eq!(Fin(u32::MAX).add(Fin(1)), Fin(u32::MAX));
        assert_eq!("inf".parse::<Ext>().unwrap(), Inf);
        assert_eq!(serde_json::to_string(&Inf).unwrap(), "\"inf\"");
        assert_eq!(serde_json::from_str::<Ext>("7").unwrap(), Fin(7));
    }

    #[test]
    fn acceptable_examples() {
        assert!(is_acceptable(&ParameterSet::finite(3, 1, 2, 10, 9)).unwrap());
        assert!(is_acceptable(&ParameterSet::bipartite(3, 8)).unwrap());
        assert!(!is_acceptable(&ParameterSet::finite(3, 2, 1, 10, 9)).unwrap());
        assert!(!is_acceptable(&ParameterSet::finite(3, 1, 2, 6, 7)).unwrap());
        assert!(matches!(
            is_acceptable(&ParameterSet::finite(3, 1, 2, 9, 9)),
            Err(ParamError::Malformed(_))
        ));
        assert!(matches!(
            is_acceptable(&ParameterSet::finite(3, 1, 2, 10, 10)),
            Err(ParamError::Malformed(_))
        ));
    }

    #[test]
    fn infinite_diameter_forms() {
        let generic = ParameterSet::new(Inf, Fin(2), Inf, Inf, Inf);
        let bip = ParameterSet::new(Inf, Inf, Fin(0), Inf, Inf);
        for p in [&generic, &bip] {
            assert!(is_acceptable(p).unwrap());
            assert!(admissibility_verdict(p).admissible);
        }
        assert_eq!(admissibility_verdict(&generic).kind, Kind::Primitive);
        assert_eq!(admissibility_verdict(&bip).kind, Kind::Bipartite);
        assert!(!is_acceptable(&ParameterSet::new(Inf, Fin(2), Fin(3), Inf, Inf)).unwrap());
    }

    #[test]
    fn verdict_examples() {
        let v = admissibility_verdict(&ParameterSet::finite(5, 3, 3, 16, 13));
        assert!(v.admissible);
        assert_eq!(v.case, Case::IIB);
        let v = admissibility_verdict(&ParameterSet::finite(3, 1, 2, 8, 7));
        assert_eq!((v.case, v.kind), (Case::IIA, Kind::AntipodalNonbipartite));
        let v = admissibility_verdict(&ParameterSet::finite(3, 1, 1, 10, 9));
        assert!(v.acceptable && !v.admissible);
        assert!(!v.failed_conditions.is_empty());
        let v = admissibility_verdict(&ParameterSet::finite(3, 3, 3, 10, 11));
        assert_eq!(v.case, Case::III);
        let v = admissibility_verdict(&ParameterSet::bipartite(3, 8));
        assert_eq!((v.case, v.kind), (Case::I, Kind::AntipodalBipartite));
        let v = admissibility_verdict(&ParameterSet::bipartite(3, 10));
        assert_eq!((v.case, v.kind), (Case::I, Kind::Bipartite));
    }

    #[test]
    fn magic_examples() {
        assert_eq!(magic_set(&ParameterSet::finite(5, 3, 3, 16, 13)).unwrap(), vec![3]);
        assert_eq!(magic_set(&ParameterSet::finite(3, 1, 3, 10, 11)).unwrap(), vec![2, 3]);
        assert_eq!(magic_set(&ParameterSet::bipartite(4, 12)).unwrap(), vec![2]);
        assert_eq!(completion_parameter(&ParameterSet::finite(5, 3, 3, 16, 13)).unwrap(), 3);
        assert_eq!(completion_parameter(&ParameterSet::finite(3, 1, 2, 10, 9)).unwrap(), 2);
        assert_eq!(completion_parameter(&ParameterSet::finite(4, 1, 3, 10, 9)).unwrap(), 2);
        assert!(matches!(
            magic_set(&ParameterSet::finite(3, 1, 1, 10, 9)),
            Err(ParamError::NotAdmissible(_))
        ));
    }

    #[test]
    fn henson_rules() {
        let k4 = ParameterSet::finite(3, 1, 3, 10, 11).with_henson(vec![HensonConstraint::clique(4)]);
        assert!(admissibility_verdict(&k4).admissible);
        assert_eq!(henson_parameter(&k4).unwrap(), 2);
        let i3 = ParameterSet::finite(3, 2, 3, 10, 11).with_henson(vec![HensonConstraint::anticlique(3)]);
        assert!(admissibility_verdict(&i3).admissible);
        // K1 = δ forbids Henson constraints.
        let bad = ParameterSet::finite(3, 3, 3, 10, 11).with_henson(vec![HensonConstraint::anticlique(4)]);
        assert!(!admissibility_verdict(&bad).admissible);
        // K3 contains 111, forbidden when K1 = 2.
        let redundant = ParameterSet::finite(3, 2, 3, 10, 11).with_henson(vec![HensonConstraint::clique(4)]);
        assert!(!admissibility_verdict(&redundant).acceptable);
        // Antipodal classes need δ >= 4 and the antipodal flavor.
        let anti = ParameterSet::finite(4, 1, 3, 10, 9).with_henson(vec![HensonConstraint::antipodal_clique(4)]);
        assert!(admissibility_verdict(&anti).admissible);
        let anti_plain = ParameterSet::finite(4, 1, 3, 10, 9).with_henson(vec![HensonConstraint::clique(4)]);
        assert!(!admissibility_verdict(&anti_plain).acceptable);
    }

    #[test]
    fn json_round_trip() {
        let p = ParameterSet::bipartite(4, 12).with_henson(vec![HensonConstraint::anticlique(4)]);
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.contains("\"k1\":\"inf\""));
        let q: ParameterSet = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
        let q: ParameterSet =
            serde_json::from_str(r#"{"delta":3,"k1":1,"k2":3,"c0":10,"c1":11,"henson":[[1,3]]}"#).unwrap();
        assert_eq!(q.henson[0].clique_sizes, vec![3, 1]);
    }
}
