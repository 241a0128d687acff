//! Γ solvers behind a common trait, looked up by name.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::ExactError;
use crate::exact::{upper_gamma_bnb_with, upper_gamma_oracle, BnbConfig, SearchBudget, SolveResult, ORACLE_LIMIT};
use crate::graph::Graph;

pub trait UpperGammaSolver: Send + Sync {
    fn name(&self) -> &str;

    fn description(&self) -> &str;

    fn solve(&self, g: &Graph, budget: &SearchBudget) -> Result<SolveResult, ExactError>;
}

/// Subset scan; refuses graphs above [`ORACLE_LIMIT`] vertices.
pub struct OracleSolver;

impl UpperGammaSolver for OracleSolver {
    fn name(&self) -> &str {
        "oracle"
    }

    fn description(&self) -> &str {
        "exhaustive subset scan (n <= 22)"
    }

    fn solve(&self, g: &Graph, _budget: &SearchBudget) -> Result<SolveResult, ExactError> {
        upper_gamma_oracle(g)
    }
}

pub struct BnbSolver {
    name: &'static str,
    description: &'static str,
    config: BnbConfig,
}

impl BnbSolver {
    pub fn new(name: &'static str, description: &'static str, config: BnbConfig) -> Self {
        BnbSolver { name, description, config }
    }

    pub fn config(&self) -> &BnbConfig {
        &self.config
    }
}

impl UpperGammaSolver for BnbSolver {
    fn name(&self) -> &str {
        self.name
    }

    fn description(&self) -> &str {
        self.description
    }

    fn solve(&self, g: &Graph, budget: &SearchBudget) -> Result<SolveResult, ExactError> {
        Ok(upper_gamma_bnb_with(g, budget, &self.config))
    }
}

/// Oracle up to a size threshold, branch-and-bound above it.
pub struct AutoSolver {
    pub oracle_max: usize,
    pub bnb: BnbConfig,
}

impl UpperGammaSolver for AutoSolver {
    fn name(&self) -> &str {
        "auto"
    }

    fn description(&self) -> &str {
        "oracle for n <= 16, branch-and-bound otherwise"
    }

    fn solve(&self, g: &Graph, budget: &SearchBudget) -> Result<SolveResult, ExactError> {
        if g.n() <= self.oracle_max.min(ORACLE_LIMIT) {
            upper_gamma_oracle(g)
        } else {
            Ok(upper_gamma_bnb_with(g, budget, &self.bnb))
        }
    }
}

#[derive(Clone)]
pub struct SolverRegistry {
    solvers: BTreeMap<String, Arc<dyn UpperGammaSolver>>,
}

impl SolverRegistry {
    pub fn empty() -> Self {
        SolverRegistry { solvers: BTreeMap::new() }
    }

    /// `oracle`, `bnb` (tight bound), `bnb-simple` (undecided-count bound)
    /// and `auto`.
    pub fn with_defaults() -> Self {
        let mut r = Self::empty();
        r.register(OracleSolver);
        r.register(BnbSolver::new("bnb", "branch-and-bound, addable-vertex bound", BnbConfig::default()));
        r.register(BnbSolver::new(
            "bnb-simple",
            "branch-and-bound, undecided-vertex bound",
            BnbConfig { tight_bound: false, ..BnbConfig::default() },
        ));
        r.register(AutoSolver { oracle_max: 16, bnb: BnbConfig::default() });
        r
    }

    /// Registers a solver under its own name, replacing any previous one.
    pub fn register(&mut self, solver: impl UpperGammaSolver + 'static) {
        self.solvers.insert(solver.name().to_string(), Arc::new(solver));
    }

    pub fn get(&self, name: &str) -> Option<Arc<dyn UpperGammaSolver>> {
        self.solvers.get(name).cloned()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.solvers.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<dyn UpperGammaSolver>> {
        self.solvers.values()
    }
}

impl Default for SolverRegistry {
    fn default() -> Self {
        Self::with_defaults()
    }
}
