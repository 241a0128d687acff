//! Batches of instances run across a worker pool, reported in input order.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use updom_core::{FamilySpec, GraphError};

use crate::analysis::{analyze_graph, analyze_pair, analyze_separation, Options};
use crate::pool::NamedGraph;
use crate::report::Report;

/// One unit of work.
#[derive(Clone, Debug)]
pub enum Job {
    Pair(NamedGraph, NamedGraph),
    Graph(NamedGraph, Option<usize>),
    Separation { n: usize, solve_unprimed: bool },
}

impl Job {
    fn run(&self, opts: &Options) -> Result<Report, GraphError> {
        Ok(match self {
            Job::Pair(g, h) => Report::Bound(analyze_pair(g, h, opts)?),
            Job::Graph(g, expected) => Report::Graph(analyze_graph(&g.name, &g.graph, *expected, opts)),
            Job::Separation { n, solve_unprimed } => Report::Separation(analyze_separation(*n, *solve_unprimed, opts)?),
        })
    }
}

/// Runs `jobs` on `workers` threads. Output order is input order, so the
/// result does not depend on the worker count.
pub fn run_jobs(jobs: &[Job], opts: &Options, workers: usize) -> Result<Vec<Report>, GraphError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| GraphError::InvalidParameter(format!("worker pool: {e}")))?;
    pool.install(|| jobs.par_iter().map(|job| job.run(opts)).collect())
}

fn spec(s: FamilySpec) -> Result<NamedGraph, GraphError> {
    Ok(NamedGraph::new(s.to_string(), s.generate()?))
}

/// Families with a known Γ for their products or for themselves.
#[derive(Clone, Debug)]
pub enum FamilyCheck {
    /// `K_m □ K_n`.
    CompleteComplete { m: RangeInclusive<usize>, n: RangeInclusive<usize> },
    /// `K_2 □ G` for each `G` in the pool.
    K2Any { pool: Vec<NamedGraph> },
    /// `K_m □ K_{1,n}`.
    CompleteStar { m: RangeInclusive<usize>, n: RangeInclusive<usize> },
    /// `K_l □ K_{m,n}`.
    CompleteBipartite { l: RangeInclusive<usize>, m: RangeInclusive<usize>, n: RangeInclusive<usize> },
    /// Γ(X_n) = 2.
    XValues { n: RangeInclusive<usize> },
    /// Γ(X_n') = n.
    XPrimeValues { n: RangeInclusive<usize> },
    /// Γ of X_n with a pendant path is n + 1.
    Pendant { n: RangeInclusive<usize> },
    /// Γ of X_n plus the edge u_0 v_0 is n + 1.
    XEdge { n: RangeInclusive<usize> },
    /// Column witness in `X_n' □ K_3` against Γ(X_n □ K_3), solved up to
    /// `solve_max`.
    Separation { n: RangeInclusive<usize>, solve_max: usize },
}

impl FamilyCheck {
    pub fn jobs(&self) -> Result<Vec<Job>, GraphError> {
        use FamilySpec as F;
        let pair = |a: FamilySpec, b: FamilySpec| -> Result<Job, GraphError> { Ok(Job::Pair(spec(a)?, spec(b)?)) };
        let graph = |a: FamilySpec, v: usize| -> Result<Job, GraphError> { Ok(Job::Graph(spec(a)?, Some(v))) };
        let mut jobs = Vec::new();
        match self {
            FamilyCheck::CompleteComplete { m, n } => {
                for a in m.clone() {
                    for b in n.clone() {
                        jobs.push(pair(F::Complete(a), F::Complete(b))?);
                    }
                }
            }
            FamilyCheck::K2Any { pool } => {
                for g in pool {
                    jobs.push(Job::Pair(spec(F::Complete(2))?, g.clone()));
                }
            }
            FamilyCheck::CompleteStar { m, n } => {
                for a in m.clone() {
                    for b in n.clone() {
                        jobs.push(pair(F::Complete(a), F::Star(b))?);
                    }
                }
            }
            FamilyCheck::CompleteBipartite { l, m, n } => {
                for a in l.clone() {
                    for b in m.clone() {
                        for c in n.clone() {
                            jobs.push(pair(F::Complete(a), F::CompleteBipartite(b, c))?);
                        }
                    }
                }
            }
            FamilyCheck::XValues { n } => {
                for k in n.clone() {
                    jobs.push(graph(F::XGraph(k), 2)?);
                }
            }
            FamilyCheck::XPrimeValues { n } => {
                for k in n.clone() {
                    jobs.push(graph(F::XPrimeGraph(k), k)?);
                }
            }
            FamilyCheck::Pendant { n } => {
                for k in n.clone() {
                    jobs.push(graph(F::PendantX(k), k + 1)?);
                }
            }
            FamilyCheck::XEdge { n } => {
                for k in n.clone() {
                    jobs.push(graph(F::XPlusEdge(k), k + 1)?);
                }
            }
            FamilyCheck::Separation { n, solve_max } => {
                for k in n.clone() {
                    jobs.push(Job::Separation { n: k, solve_unprimed: k <= *solve_max });
                }
            }
        }
        Ok(jobs)
    }
}

/// Paths, cycles and stars with at most `max_n` vertices, and X_2.
pub fn standard_families(max_n: usize) -> Result<Vec<NamedGraph>, GraphError> {
    let mut specs: Vec<FamilySpec> = (1..=max_n).map(FamilySpec::Path).collect();
    specs.extend((3..=max_n).map(FamilySpec::Cycle));
    specs.extend((1..max_n).map(FamilySpec::Star));
    if max_n >= 6 {
        specs.push(FamilySpec::XGraph(2));
    }
    specs.into_iter().map(spec).collect()
}

/// Every ordered pair from the two pools.
pub fn exhaustive_jobs(pool_g: &[NamedGraph], pool_h: &[NamedGraph]) -> Vec<Job> {
    pool_g.iter().flat_map(|g| pool_h.iter().map(move |h| Job::Pair(g.clone(), h.clone()))).collect()
}

#[derive(Clone, Debug)]
pub struct RandomSweep {
    pub count: usize,
    pub n: RangeInclusive<usize>,
    pub p: Vec<f64>,
    pub seed: u64,
    /// Resample until both factors have no isolated vertex.
    pub isolate_free: bool,
}

const RESAMPLE_LIMIT: usize = 10_000;

impl RandomSweep {
    fn factor(&self, rng: &mut ChaCha8Rng) -> Result<NamedGraph, GraphError> {
        for _ in 0..RESAMPLE_LIMIT {
            let n = rng.gen_range(self.n.clone());
            let p = self.p[rng.gen_range(0..self.p.len())];
            let g = spec(FamilySpec::ErdosRenyi { n, p, seed: rng.gen() })?;
            if !self.isolate_free || (g.graph.n() > 0 && g.graph.is_isolate_free()) {
                return Ok(g);
            }
        }
        Err(GraphError::InvalidParameter("could not sample an isolate-free graph".into()))
    }

    /// Pairs named by their generator specs, so each is reproducible alone.
    pub fn jobs(&self) -> Result<Vec<Job>, GraphError> {
        if self.p.is_empty() || self.n.is_empty() {
            return Err(GraphError::InvalidParameter(
                "random sweep needs a vertex range and edge probabilities".into(),
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.count)
            .map(|_| {
                let g = self.factor(&mut rng)?;
                let h = self.factor(&mut rng)?;
                Ok(Job::Pair(g, h))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{ReportSet, Verdict};

    #[test]
    fn complete_complete_small() {
        let jobs = FamilyCheck::CompleteComplete { m: 2..=3, n: 2..=3 }.jobs().unwrap();
        assert_eq!(jobs.len(), 4);
        let reports = run_jobs(&jobs, &Options::default(), 2).unwrap();
        assert_eq!(ReportSet::new("t", reports).exit_code(), 0);
    }

    #[test]
    fn random_jobs_are_seeded() {
        let sweep = RandomSweep { count: 5, n: 3..=6, p: vec![0.3, 0.6], seed: 42, isolate_free: true };
        let names = |jobs: Vec<Job>| -> Vec<String> {
            jobs.into_iter()
                .map(|j| match j {
                    Job::Pair(g, h) => {
                        assert!(g.graph.is_isolate_free() && h.graph.is_isolate_free());
                        format!("{} {}", g.name, h.name)
                    }
                    _ => unreachable!(),
                })
                .collect()
        };
        let a = names(sweep.jobs().unwrap());
        assert_eq!(a, names(sweep.jobs().unwrap()));
        assert!(a[0].starts_with("er:"));
        let other = RandomSweep { seed: 43, ..sweep };
        assert_ne!(a, names(other.jobs().unwrap()));
    }

    #[test]
    fn order_independent_of_workers() {
        let jobs = FamilyCheck::XValues { n: 1..=4 }.jobs().unwrap();
        let one = ReportSet::new("t", run_jobs(&jobs, &Options::default(), 1).unwrap());
        let four = ReportSet::new("t", run_jobs(&jobs, &Options::default(), 4).unwrap());
        assert_eq!(one.digest(), four.digest());
        assert!(one.reports.iter().all(|r| r.verdict() == Verdict::Pass));
    }

    #[test]
    fn standard_family_sizes() {
        let fams = standard_families(9).unwrap();
        assert!(fams.iter().all(|g| g.graph.n() <= 9));
        assert!(fams.iter().any(|g| g.name == "x:2"));
    }
}
