//! Command-line interface. [`run`] returns the process exit code:
//! 0 all checks pass, 1 some check fails, 2 usage or input error,
//! 3 some check undecided within budget.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use updom_core::exact::{SearchBudget, SolverRegistry};
use updom_core::io::{parse_graph6, Format};
use updom_core::witness::ConstructionRegistry;
use updom_core::FamilySpec;

use crate::analysis::{analyze_pair, analyze_product, analyze_witness, Options};
use crate::pool::{builtin_pool, read_pool, NamedGraph, BUILTIN_LIMIT};
use crate::report::{Report, ReportSet};
use crate::sweep::{exhaustive_jobs, run_jobs, standard_families, FamilyCheck, Job, RandomSweep};

pub const EXIT_USAGE: i32 = 2;

/// Inclusive integer range written `a..b` or `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<usize>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad range bound {t:?} in {s:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Span(lo..=hi))
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Graph6,
    Edges,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Graph6 => Format::Graph6,
            FormatArg::Edges => Format::EdgeList,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "updom", version, about = "Upper domination of graphs and Cartesian products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Write the full report set as JSON to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Node limit per search.
    #[arg(long, global = true)]
    node_limit: Option<u64>,
    /// Wall-clock limit per search, in milliseconds.
    #[arg(long, global = true)]
    time_limit_ms: Option<u64>,
    /// Γ solver: auto, bnb, bnb-simple or oracle.
    #[arg(long, global = true, default_value = "auto")]
    solver: String,
    /// Largest product solved exactly; larger ones get witnesses only.
    #[arg(long, global = true, default_value_t = 40)]
    max_exact: usize,
    /// Only print the summary line.
    #[arg(long, short, global = true)]
    quiet: bool,
}

#[derive(Args, Debug)]
struct PairArgs {
    /// First factor: a family spec such as `k:3`, or `g6:<graph6>`.
    #[arg(long)]
    g: String,
    /// Second factor.
    #[arg(long)]
    h: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// γ, Γ and α of graphs.
    Invariants {
        /// Family spec or `g6:<graph6>`; repeatable.
        #[arg(long = "family", alias = "g")]
        family: Vec<String>,
        /// Read graphs from a file instead.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: FormatArg,
        /// Fail unless every graph has this Γ.
        #[arg(long)]
        expect_upper_gamma: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Invariants of G □ H, compared with the closed form when one applies.
    Product {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        common: Common,
    },
    /// All bound checks for the pair (G, H).
    Bound {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Build and certify witness constructions for (G, H).
    Witness {
        #[command(flatten)]
        pair: PairArgs,
        /// Construction name; all registered ones when omitted.
        #[arg(long)]
        construction: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Closed-form family checks.
    Families {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        l: Option<Span>,
        #[arg(long)]
        m: Option<Span>,
        #[arg(long)]
        n: Option<Span>,
        /// k2-any: largest pool graph and largest standard family member.
        #[arg(long, default_value_t = 5)]
        pool_max: usize,
        #[arg(long, default_value_t = 9)]
        family_max: usize,
        /// separation: largest n for which Γ(X_n □ K_3) is attempted.
        #[arg(long, default_value_t = 3)]
        solve_max: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Every ordered pair of small graphs.
    Sweep {
        #[arg(long, default_value_t = 4)]
        max_n_g: usize,
        #[arg(long, default_value_t = 4)]
        max_n_h: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Use the graphs in this file for both factors.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: FormatArg,
        #[command(flatten)]
        common: Common,
    },
    /// Seeded random pairs.
    RandomSweep {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value = "3..6")]
        n: Span,
        /// Comma-separated edge probabilities.
        #[arg(long, value_delimiter = ',', default_value = "0.3,0.6")]
        p: Vec<f64>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Resample factors with isolated vertices.
        #[arg(long)]
        isolate_free: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    /// Γ(K_m □ K_n); ranges --m, --n (default 2..6).
    CompleteComplete,
    /// Γ(K_2 □ G) over small graphs and standard families.
    K2Any,
    /// Γ(K_m □ K_{1,n}); --m (default 3..5), --n (default 2..4).
    CompleteStar,
    /// Γ(K_l □ K_{m,n}); --l, --m, --n (default 2..3).
    CompleteBipartite,
    /// Γ(X_n) = 2; --n (default 1..6).
    X,
    /// Γ(X_n') = n; --n (default 2..6).
    XPrime,
    /// Pendant path on X_n; --n (default 2..5).
    Pendant,
    /// X_n plus u_0 v_0; --n (default 2..5).
    XEdge,
    /// Column witness in X_n' □ K_3 against Γ(X_n □ K_3); --n (default 1..10).
    Separation,
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Parses `g6:<graph6>` or a family spec.
pub fn parse_input(s: &str) -> Result<NamedGraph, String> {
    if let Some(text) = s.strip_prefix("g6:") {
        let g = parse_graph6(text.as_bytes()).map_err(|e| format!("{s}: {e}"))?;
        return Ok(NamedGraph::new(s, g));
    }
    let spec: FamilySpec = s.parse().map_err(|e| format!("{s}: {e}"))?;
    let g = spec.generate().map_err(|e| format!("{s}: {e}"))?;
    Ok(NamedGraph::new(spec.to_string(), g))
}

fn options(common: &Common, column_split: bool) -> Result<Options, UsageError> {
    let solver = SolverRegistry::with_defaults().get(&common.solver).ok_or_else(|| {
        let names: Vec<_> = SolverRegistry::with_defaults().names().map(str::to_string).collect();
        UsageError(format!("unknown solver {:?}; known: {}", common.solver, names.join(", ")))
    })?;
    Ok(Options {
        budget: SearchBudget {
            node_limit: common.node_limit,
            time_limit: common.time_limit_ms.map(Duration::from_millis),
        },
        solver,
        max_exact_product: common.max_exact,
        column_split,
    })
}

fn span(arg: &Option<Span>, default: RangeInclusive<usize>) -> RangeInclusive<usize> {
    arg.as_ref().map(|s| s.0.clone()).unwrap_or(default)
}

fn pool(file: &Option<PathBuf>, format: FormatArg, min_n: usize, max_n: usize) -> Result<Vec<NamedGraph>, UsageError> {
    match file {
        Some(path) => {
            Ok(read_pool(path, format.into())?.into_iter().filter(|g| (min_n..=max_n).contains(&g.graph.n())).collect())
        }
        None if max_n > BUILTIN_LIMIT => {
            Err(UsageError(format!("built-in graphs go up to {BUILTIN_LIMIT} vertices; pass --file for larger ones")))
        }
        None => Ok(builtin_pool(min_n, max_n)?),
    }
}

fn execute(command: Command) -> Result<(String, Common, Vec<Report>), UsageError> {
    Ok(match command {
        Command::Invariants { family, file, format, expect_upper_gamma, common } => {
            let opts = options(&common, false)?;
            let mut graphs: Vec<NamedGraph> = family.iter().map(|s| parse_input(s)).collect::<Result<_, _>>()?;
            if let Some(path) = &file {
                graphs.extend(read_pool(path, format.into())?);
            }
            if graphs.is_empty() {
                return Err(UsageError("give --family or --file".into()));
            }
            let jobs: Vec<_> = graphs.into_iter().map(|g| Job::Graph(g, expect_upper_gamma)).collect();
            ("invariants".into(), common.clone(), run_jobs(&jobs, &opts, common.workers)?)
        }
        Command::Product { pair, common } => {
            let opts = options(&common, false)?;
            let (g, h) = (parse_input(&pair.g)?, parse_input(&pair.h)?);
            ("product".into(), common, vec![Report::Graph(analyze_product(&g, &h, &opts)?)])
        }
        Command::Bound { pair, common } => {
            let opts = options(&common, true)?;
            let (g, h) = (parse_input(&pair.g)?, parse_input(&pair.h)?);
            ("bound".into(), common, vec![Report::Bound(analyze_pair(&g, &h, &opts)?)])
        }
        Command::Witness { pair, construction, common } => {
            let opts = options(&common, false)?;
            let (g, h) = (parse_input(&pair.g)?, parse_input(&pair.h)?);
            let registry = ConstructionRegistry::with_defaults();
            let chosen = match &construction {
                Some(name) => vec![registry.get(name).map_err(|_| {
                    let names: Vec<_> = registry.names().collect();
                    UsageError(format!("unknown construction {name:?}; known: {}", names.join(", ")))
                })?],
                None => registry.iter().cloned().collect(),
            };
            let reports = chosen.iter().map(|c| Report::Witness(analyze_witness(&g, &h, c.as_ref(), &opts))).collect();
            ("witness".into(), common, reports)
        }
        Command::Families { family, l, m, n, pool_max, family_max, solve_max, common } => {
            let opts = options(&common, false)?;
            let check = match family {
                FamilyArg::CompleteComplete => FamilyCheck::CompleteComplete { m: span(&m, 2..=6), n: span(&n, 2..=6) },
                FamilyArg::K2Any => {
                    let mut pool = builtin_pool(1, pool_max.min(BUILTIN_LIMIT))?;
                    pool.extend(standard_families(family_max)?);
                    FamilyCheck::K2Any { pool }
                }
                FamilyArg::CompleteStar => FamilyCheck::CompleteStar { m: span(&m, 3..=5), n: span(&n, 2..=4) },
                FamilyArg::CompleteBipartite => {
                    FamilyCheck::CompleteBipartite { l: span(&l, 2..=3), m: span(&m, 2..=3), n: span(&n, 2..=3) }
                }
                FamilyArg::X => FamilyCheck::XValues { n: span(&n, 1..=6) },
                FamilyArg::XPrime => FamilyCheck::XPrimeValues { n: span(&n, 2..=6) },
                FamilyArg::Pendant => FamilyCheck::Pendant { n: span(&n, 2..=5) },
                FamilyArg::XEdge => FamilyCheck::XEdge { n: span(&n, 2..=5) },
                FamilyArg::Separation => FamilyCheck::Separation { n: span(&n, 1..=10), solve_max },
            };
            let name = format!("families {}", family.to_possible_value().expect("no skipped variants").get_name());
            (name, common.clone(), run_jobs(&check.jobs()?, &opts, common.workers)?)
        }
        Command::Sweep { max_n_g, max_n_h, min_n, file, format, common } => {
            let opts = options(&common, false)?;
            let pool_g = pool(&file, format, min_n, max_n_g)?;
            let pool_h = pool(&file, format, min_n, max_n_h)?;
            ("sweep".into(), common.clone(), run_jobs(&exhaustive_jobs(&pool_g, &pool_h), &opts, common.workers)?)
        }
        Command::RandomSweep { count, n, p, seed, isolate_free, common } => {
            let opts = options(&common, true)?;
            let sweep = RandomSweep { count, n: n.0, p, seed, isolate_free };
            ("random-sweep".into(), common.clone(), run_jobs(&sweep.jobs()?, &opts, common.workers)?)
        }
    })
}

/// Runs the CLI on `args` (including the program name), writing the table
/// to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let (command, common, reports) = match execute(cli.command) {
        Ok(x) => x,
        Err(UsageError(m)) => {
            let _ = writeln!(err, "updom: {m}");
            return EXIT_USAGE;
        }
    };
    let set = ReportSet::new(command, reports);
    let table = set.render_table();
    let shown = if common.quiet { table.lines().last().unwrap_or("").to_string() + "\n" } else { table };
    let _ = write!(out, "{shown}");
    if let Some(path) = &common.json {
        if let Err(e) = std::fs::write(path, set.to_json()) {
            let _ = writeln!(err, "updom: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    set.exit_code()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("2..3".parse::<Span>().unwrap(), Span(2..=3));
        assert_eq!("2..=3".parse::<Span>().unwrap(), Span(2..=3));
        assert_eq!("4".parse::<Span>().unwrap(), Span(4..=4));
        assert!("3..2".parse::<Span>().is_err());
        assert!("a..2".parse::<Span>().is_err());
    }

    #[test]
    fn inputs() {
        assert_eq!(parse_input("k:3").unwrap().graph.n(), 3);
        assert_eq!(parse_input("g6:C~").unwrap().graph.edge_count(), 6);
        assert!(parse_input("nope:3").is_err());
        assert!(parse_input("g6:").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
