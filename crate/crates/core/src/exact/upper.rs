//! Branch-and-bound for the upper domination number.
//!
//! Vertices are decided in index order, "in" before "out". A partial set
//! `D` stays alive only while
//!
//! * every member can still end up isolated or privately served: it has no
//!   neighbor in `D`, or some neighbor outside `D` has no other
//!   `D`-neighbor (adding vertices can only destroy both properties), and
//! * every vertex whose closed neighborhood is fully decided is dominated.
//!
//! Leaves that survive are exactly the minimal dominating sets. The
//! optimistic completion is `|D|` plus the undecided vertices, or with
//! [`BnbConfig::tight_bound`] only those undecided vertices whose addition
//! would keep `D` alive right now; by the monotonicity above such a vertex
//! stays unaddable in every descendant.
//!
//! In "in"-first order, equal-size leaves are met in lexicographic order
//! of their sorted vertex lists, so an exact run returns the same witness
//! as the subset-scan oracle.

use crate::bitset::VertexSet;
use crate::domset::certify_minimal;
use crate::exact::{
    alpha::greedy_maximal_independent, gamma_exact, Meter, SearchBudget, SolveResult, SolveStats, SolveStatus,
};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BnbConfig {
    /// Count only individually addable undecided vertices in the bound.
    pub tight_bound: bool,
    /// Node limit for computing γ used in `Γ <= n - γ` (isolate-free
    /// components only). Zero disables the bound.
    pub gamma_node_limit: u64,
}

impl Default for BnbConfig {
    fn default() -> Self {
        BnbConfig { tight_bound: true, gamma_node_limit: 200_000 }
    }
}

#[derive(Clone, Copy)]
struct State {
    set: VertexSet,
    /// At least one open neighbor in `set`.
    once: VertexSet,
    /// At least two open neighbors in `set`.
    twice: VertexSet,
}

impl State {
    fn with(&self, g: &Graph, v: usize) -> State {
        let nv = g.neighbors(v);
        let mut set = self.set;
        set.insert(v);
        State { set, once: self.once | nv, twice: self.twice | (self.once & nv) }
    }

    #[inline]
    fn dominated(&self) -> VertexSet {
        self.set | self.once
    }

    #[inline]
    fn member_alive(&self, g: &Graph, v: usize) -> bool {
        !self.once.contains(v) || !(g.neighbors(v) - self.set - self.twice).is_empty()
    }

    fn all_alive(&self, g: &Graph) -> bool {
        self.set.iter().all(|v| self.member_alive(g, v))
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// `closes[i]`: vertices whose closed neighborhood has maximum index `i`.
    closes: Vec<VertexSet>,
    tight: bool,
    /// Best leaf so far; leaves must be strictly larger than `threshold`.
    best: Option<VertexSet>,
    threshold: usize,
    ceiling: usize,
    meter: Meter,
}

impl Search<'_> {
    fn optimistic(&self, i: usize, state: &State) -> usize {
        if !self.tight {
            return self.n - i;
        }
        (i..self.n).filter(|&u| state.with(self.g, u).all_alive(self.g)).count()
    }

    fn go(&mut self, i: usize, state: State) {
        if !self.meter.tick() || (self.best.is_some() && self.threshold >= self.ceiling) {
            return;
        }
        if i == self.n {
            if state.set.len() > self.threshold {
                self.threshold = state.set.len();
                self.best = Some(state.set);
            }
            return;
        }
        if state.set.len() + self.optimistic(i, &state) <= self.threshold {
            return;
        }

        let added = state.with(self.g, i);
        if added.all_alive(self.g) && self.closes[i].is_subset(&added.dominated()) {
            self.go(i + 1, added);
        }
        if self.closes[i].is_subset(&state.dominated()) {
            self.go(i + 1, state);
        }
    }
}

/// Exact Γ by branch-and-bound (tight bound, `Γ <= n - γ` enabled).
pub fn upper_gamma_bnb(g: &Graph, budget: &SearchBudget) -> SolveResult {
    upper_gamma_bnb_with(g, budget, &BnbConfig::default())
}

/// Γ is additive over components, so each component is searched on its
/// own (sharing one budget) and the witnesses are united.
pub fn upper_gamma_bnb_with(g: &Graph, budget: &SearchBudget, config: &BnbConfig) -> SolveResult {
    let mut witness = VertexSet::new();
    let mut stats = SolveStats::default();
    let mut exact = true;
    for comp in g.components() {
        let (sub, old_of_new) = g.induced_subgraph(&comp);
        let remaining = SearchBudget {
            node_limit: budget.node_limit.map(|l| l.saturating_sub(stats.nodes)),
            time_limit: budget.time_limit.map(|t| t.saturating_sub(stats.elapsed)),
        };
        let (best, sub_stats, sub_exact) = solve_connected(&sub, &remaining, config);
        stats.merge(sub_stats);
        exact &= sub_exact;
        witness |= best.iter().map(|v| old_of_new[v]).collect();
    }
    let certificate = certify_minimal(g, &witness).expect("branch-and-bound witness is minimal dominating");
    SolveResult {
        value: witness.len(),
        witness,
        certificate: Some(certificate),
        status: if exact { SolveStatus::Exact } else { SolveStatus::LowerBoundOnly },
        stats,
    }
}

fn solve_connected(g: &Graph, budget: &SearchBudget, config: &BnbConfig) -> (VertexSet, SolveStats, bool) {
    let n = g.n();
    if n <= 1 {
        return (g.vertices(), SolveStats { nodes: 1, ..Default::default() }, true);
    }
    let mut closes = vec![VertexSet::new(); n];
    for v in 0..n {
        closes[g.closed(v).last().expect("closed neighborhood is nonempty")].insert(v);
    }

    let mut ceiling = n;
    let mut extra = SolveStats::default();
    if config.gamma_node_limit > 0 && g.is_isolate_free() {
        let gamma =
            gamma_exact(g, &SearchBudget { node_limit: Some(config.gamma_node_limit), time_limit: budget.time_limit });
        extra = gamma.stats;
        if gamma.status.is_exact() {
            ceiling = n - gamma.value;
        }
    }

    // The greedy independent set only sets the bar: sets of its size are
    // still searched, so the first maximizer found in "in"-first order is
    // the lexicographically smallest one.
    let fallback = greedy_maximal_independent(g, &VertexSet::new()).expect("empty set is independent");
    let mut search = Search {
        g,
        n,
        closes,
        tight: config.tight_bound,
        best: None,
        threshold: fallback.len() - 1,
        ceiling,
        meter: budget.start(),
    };
    let root = State { set: VertexSet::new(), once: VertexSet::new(), twice: VertexSet::new() };
    search.go(0, root);
    let mut stats = search.meter.stats();
    stats.merge(extra);
    (search.best.unwrap_or(fallback), stats, !search.meter.exhausted())
}
