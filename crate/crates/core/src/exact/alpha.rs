use crate::bitset::VertexSet;
use crate::error::ExactError;
use crate::exact::{Meter, SearchBudget, SolveResult, SolveStatus};
use crate::graph::Graph;

/// Grows `must_include` to a maximal independent set, scanning vertices in
/// increasing order.
pub fn greedy_maximal_independent(g: &Graph, must_include: &VertexSet) -> Result<VertexSet, ExactError> {
    for u in must_include {
        if let Some(v) = (g.neighbors(u) & *must_include).first() {
            return Err(ExactError::NotIndependent(u.min(v), u.max(v)));
        }
    }
    let mut set = *must_include;
    let mut blocked = g.closed_neighborhood(must_include);
    for v in 0..g.n() {
        if !blocked.contains(v) {
            set.insert(v);
            blocked |= g.closed(v);
        }
    }
    Ok(set)
}

struct AlphaSearch<'a> {
    g: &'a Graph,
    best: VertexSet,
    meter: Meter,
}

impl AlphaSearch<'_> {
    fn go(&mut self, chosen: VertexSet, candidates: VertexSet) {
        if !self.meter.tick() {
            return;
        }
        if chosen.len() + candidates.len() <= self.best.len() {
            return;
        }
        // Branch on the candidate of largest degree inside the candidate set.
        let pivot = candidates
            .iter()
            .map(|v| ((self.g.neighbors(v) & candidates).len(), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        match pivot {
            None => self.best = chosen,
            Some((0, _)) => self.best = chosen | candidates,
            Some((_, v)) => {
                let mut with = chosen;
                with.insert(v);
                self.go(with, candidates - self.g.closed(v));
                if self.meter.exhausted() {
                    return;
                }
                let mut without = candidates;
                without.remove(v);
                self.go(chosen, without);
            }
        }
    }
}

/// α(g) with a maximum independent set. On budget exhaustion the best set
/// found is returned as a lower bound.
pub fn alpha_exact(g: &Graph, budget: &SearchBudget) -> SolveResult {
    let initial = greedy_maximal_independent(g, &VertexSet::new()).expect("empty set is independent");
    let mut search = AlphaSearch { g, best: initial, meter: budget.start() };
    search.go(VertexSet::new(), g.vertices());
    let status = if search.meter.exhausted() { SolveStatus::LowerBoundOnly } else { SolveStatus::Exact };
    SolveResult {
        value: search.best.len(),
        witness: search.best,
        certificate: None,
        status,
        stats: search.meter.stats(),
    }
}
