//! Domination predicates and minimality certificates.
//!
//! A dominating set `D` is minimal exactly when every member is either
//! `D`-isolated (no neighbor inside `D`) or has a private `D`-neighbor (a
//! vertex outside `D` adjacent to it and to no other member). Certificates
//! record which of the two holds for each member so that a minimality claim
//! can be re-checked without search.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::DomsetError;
use crate::graph::Graph;

/// Vertices with at least one, and at least two, open neighbors in `d`.
struct Coverage {
    once: VertexSet,
    twice: VertexSet,
}

impl Coverage {
    fn of(g: &Graph, d: &VertexSet) -> Self {
        let mut once = VertexSet::new();
        let mut twice = VertexSet::new();
        for v in d {
            let nv = g.neighbors(v);
            twice |= once & nv;
            once |= nv;
        }
        Coverage { once, twice }
    }

    fn is_isolated(&self, v: usize) -> bool {
        !self.once.contains(v)
    }

    /// Private neighbors of `v ∈ d`.
    fn private_neighbors(&self, g: &Graph, d: &VertexSet, v: usize) -> VertexSet {
        g.neighbors(v) - *d - self.twice
    }
}

pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    g.closed_neighborhood(d) == g.vertices()
}

fn first_undominated(g: &Graph, d: &VertexSet) -> Option<usize> {
    (g.vertices() - g.closed_neighborhood(d)).first()
}

/// Private neighbors of `v` with respect to `d` (empty if `v ∉ d`).
pub fn private_neighbors(g: &Graph, d: &VertexSet, v: usize) -> VertexSet {
    if !d.contains(v) {
        return VertexSet::new();
    }
    Coverage::of(g, d).private_neighbors(g, d, v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Justification {
    Isolated,
    Private(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationCertificate {
    pub set: VertexSet,
    pub justification: BTreeMap<usize, Justification>,
}

impl DominationCertificate {
    pub fn size(&self) -> usize {
        self.set.len()
    }

    /// Re-checks every certificate invariant against `g` using only the
    /// recorded justifications.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        if self.set.last().is_some_and(|v| v >= g.n()) {
            return Err("set has a vertex outside the graph".into());
        }
        if let Some(v) = first_undominated(g, &self.set) {
            return Err(format!("vertex {v} is not dominated"));
        }
        let keys: VertexSet = self.justification.keys().copied().collect();
        if keys != self.set || self.justification.len() != self.set.len() {
            return Err("justification keys differ from the set".into());
        }
        for (&v, j) in &self.justification {
            match *j {
                Justification::Isolated => {
                    if g.neighbors(v).intersects(&self.set) {
                        return Err(format!("{v} is tagged isolated but has a neighbor in the set"));
                    }
                }
                Justification::Private(w) => {
                    if w >= g.n() || self.set.contains(w) || !g.has_edge(v, w) {
                        return Err(format!("{w} cannot be a private neighbor of {v}"));
                    }
                    let mut others = g.neighbors(w) & self.set;
                    others.remove(v);
                    if !others.is_empty() {
                        return Err(format!("{w} is also adjacent to {:?}", others.to_vec()));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Proves `d` is a minimal dominating set, tagging each member `Isolated`
/// when it is, otherwise with its lowest private neighbor.
pub fn certify_minimal(g: &Graph, d: &VertexSet) -> Result<DominationCertificate, DomsetError> {
    if let Some(v) = first_undominated(g, d) {
        return Err(DomsetError::NotDominating(v));
    }
    let cov = Coverage::of(g, d);
    let mut justification = BTreeMap::new();
    for v in d {
        let j = if cov.is_isolated(v) {
            Justification::Isolated
        } else {
            match cov.private_neighbors(g, d, v).first() {
                Some(w) => Justification::Private(w),
                None => return Err(DomsetError::NotMinimal(v)),
            }
        };
        justification.insert(v, j);
    }
    Ok(DominationCertificate { set: *d, justification })
}

pub fn is_minimal_dominating(g: &Graph, d: &VertexSet) -> bool {
    certify_minimal(g, d).is_ok()
}

/// Shrinks the dominating set `d` to a minimal dominating subset that keeps
/// every vertex of `forced`.
///
/// Removal is lowest-index-first, rescanning from the start after each
/// removal. A vertex that is not removable never becomes removable later,
/// so a single ascending pass realizes that rule.
pub fn minimalize(g: &Graph, d: &VertexSet, forced: &VertexSet) -> Result<VertexSet, DomsetError> {
    if let Some(v) = (*forced - *d).first() {
        return Err(DomsetError::ForcedOutsideSet(v));
    }
    if let Some(v) = first_undominated(g, d) {
        return Err(DomsetError::NotDominating(v));
    }
    let cov = Coverage::of(g, d);
    for v in forced {
        if !cov.is_isolated(v) && cov.private_neighbors(g, d, v).is_empty() {
            return Err(DomsetError::ForcedNotProtected(v));
        }
    }

    // count[x] = |N[x] ∩ current|
    let mut count = vec![0u32; g.n()];
    for v in d {
        for x in &g.closed(v) {
            count[x] += 1;
        }
    }
    let mut current = *d;
    for v in &(*d - *forced) {
        let closed = g.closed(v);
        if closed.iter().all(|x| count[x] >= 2) {
            current.remove(v);
            for x in &closed {
                count[x] -= 1;
            }
        }
    }
    Ok(current)
}

/// `D^P` (members with a private neighbor) and `D^I` (the rest) of a minimal
/// dominating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomSplit {
    pub d_p: VertexSet,
    pub d_i: VertexSet,
    /// Lowest private neighbor of each member of `d_p`.
    pub chosen_private: BTreeMap<usize, usize>,
}

/// Splits by private-neighbor existence, independent of certificate tags:
/// a member can be isolated and still have a private neighbor, and then it
/// belongs to `d_p`.
pub fn split_dp_di(g: &Graph, cert: &DominationCertificate) -> DomSplit {
    split_set(g, &cert.set)
}

pub(crate) fn split_set(g: &Graph, d: &VertexSet) -> DomSplit {
    let cov = Coverage::of(g, d);
    let mut split = DomSplit { d_p: VertexSet::new(), d_i: VertexSet::new(), chosen_private: BTreeMap::new() };
    for v in d {
        match cov.private_neighbors(g, d, v).first() {
            Some(w) => {
                split.d_p.insert(v);
                split.chosen_private.insert(v, w);
            }
            None => split.d_i.insert(v),
        }
    }
    split
}
