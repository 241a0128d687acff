use crate::bitset::VertexSet;
use crate::domset::{certify_minimal, minimalize};
use crate::exact::{Meter, SearchBudget, SolveResult, SolveStatus};
use crate::graph::Graph;

struct GammaSearch<'a> {
    g: &'a Graph,
    all: VertexSet,
    max_closed: usize,
    best: VertexSet,
    meter: Meter,
}

impl GammaSearch<'_> {
    fn go(&mut self, chosen: VertexSet, dominated: VertexSet) {
        if !self.meter.tick() {
            return;
        }
        let open = self.all - dominated;
        let Some(x) = open.first() else {
            if chosen.len() < self.best.len() {
                self.best = chosen;
            }
            return;
        };
        // Each further pick dominates at most `max_closed` new vertices.
        let needed = open.len().div_ceil(self.max_closed);
        if chosen.len() + needed >= self.best.len() {
            return;
        }
        // Dominators of x, largest gain first; ties by index.
        let mut options: Vec<(usize, usize)> =
            self.g.closed(x).iter().map(|c| ((self.g.closed(c) & open).len(), c)).collect();
        options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, c) in options {
            let mut next = chosen;
            next.insert(c);
            self.go(next, dominated | self.g.closed(c));
            if self.meter.exhausted() {
                return;
            }
        }
    }
}

/// Greedy dominating set: repeatedly take the vertex covering the most
/// undominated vertices (lowest index on ties).
fn greedy_dominating(g: &Graph) -> VertexSet {
    let all = g.vertices();
    let mut chosen = VertexSet::new();
    let mut dominated = VertexSet::new();
    while dominated != all {
        let open = all - dominated;
        let pick = (0..g.n()).max_by_key(|&v| ((g.closed(v) & open).len(), std::cmp::Reverse(v))).unwrap();
        chosen.insert(pick);
        dominated |= g.closed(pick);
    }
    chosen
}

/// γ(g) by branching on the lowest undominated vertex over its possible
/// dominators. On budget exhaustion the best set found is returned as an
/// upper bound.
pub fn gamma_exact(g: &Graph, budget: &SearchBudget) -> SolveResult {
    let initial = greedy_dominating(g);
    let mut search = GammaSearch {
        g,
        all: g.vertices(),
        max_closed: (0..g.n()).map(|v| g.degree(v) + 1).max().unwrap_or(1),
        best: initial,
        meter: budget.start(),
    };
    // The greedy set is only an incumbent; search for anything strictly smaller.
    search.go(VertexSet::new(), VertexSet::new());
    let status = if search.meter.exhausted() { SolveStatus::UpperBoundOnly } else { SolveStatus::Exact };
    // A minimum dominating set is minimal; a greedy one may need trimming.
    let witness = minimalize(g, &search.best, &VertexSet::new()).expect("search result dominates");
    let certificate = certify_minimal(g, &witness).expect("minimalized set is minimal");
    SolveResult { value: witness.len(), witness, certificate: Some(certificate), status, stats: search.meter.stats() }
}
