//! Exact computation of γ, Γ and α.
//!
//! Γ has two independent routes: [`upper_gamma_oracle`] scans every subset
//! (small graphs only) and [`upper_gamma_bnb`] is a pruned in/out search.
//! The oracle exists to check the search; the two never share code beyond
//! the certificate checker.

mod alpha;
mod gamma;
mod oracle;
mod registry;
mod upper;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::domset::DominationCertificate;

pub use alpha::{alpha_exact, greedy_maximal_independent};
pub use gamma::gamma_exact;
pub use oracle::{enumerate_minimal_dominating, upper_gamma_oracle, Enumeration, ENUMERATION_LIMIT, ORACLE_LIMIT};
pub use registry::{AutoSolver, BnbSolver, OracleSolver, SolverRegistry, UpperGammaSolver};
pub use upper::{upper_gamma_bnb, upper_gamma_bnb_with, BnbConfig};

/// Limits on a single search. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub node_limit: Option<u64>,
    #[serde(with = "opt_millis")]
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(limit: u64) -> Self {
        SearchBudget { node_limit: Some(limit), time_limit: None }
    }

    pub(crate) fn start(&self) -> Meter {
        Meter { budget: *self, nodes: 0, started: Instant::now(), exhausted: false }
    }
}

mod opt_millis {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Option<Duration>, s: S) -> Result<S::Ok, S::Error> {
        match d {
            Some(d) => s.serialize_some(&(d.as_millis() as u64)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Duration>, D::Error> {
        Ok(Option::<u64>::deserialize(d)?.map(Duration::from_millis))
    }
}

/// Node and clock accounting for one search.
pub(crate) struct Meter {
    budget: SearchBudget,
    nodes: u64,
    started: Instant,
    exhausted: bool,
}

impl Meter {
    /// Counts a node; returns false once the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.budget.node_limit.is_some_and(|limit| self.nodes > limit) {
            self.exhausted = true;
        } else if self.nodes.is_multiple_of(1024) {
            if let Some(limit) = self.budget.time_limit {
                self.exhausted = self.started.elapsed() > limit;
            }
        }
        !self.exhausted
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub(crate) fn stats(&self) -> SolveStats {
        SolveStats { nodes: self.nodes, elapsed: self.started.elapsed() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Exact,
    /// Budget exhausted; the value is attained by the witness, so it bounds
    /// a maximization problem from below.
    LowerBoundOnly,
    /// Budget exhausted on a minimization problem; the witness is feasible.
    UpperBoundOnly,
}

impl SolveStatus {
    pub fn is_exact(self) -> bool {
        self == SolveStatus::Exact
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SolveStats {
    pub(crate) fn merge(&mut self, other: SolveStats) {
        self.nodes += other.nodes;
        self.elapsed += other.elapsed;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    /// Present for γ and Γ.
    pub certificate: Option<DominationCertificate>,
    pub status: SolveStatus,
    pub stats: SolveStats,
}
