//! Per-instance computations that produce reports.

use std::sync::Arc;
use std::time::Instant;

use updom_core::domset::certify_minimal;
use updom_core::exact::{
    alpha_exact, gamma_exact, AutoSolver, BnbConfig, SearchBudget, SolveResult, SolveStatus, UpperGammaSolver,
};
use updom_core::witness::{
    column_split_witness, product_bound_witness_general, row_cover_witness, BuildContext, ColumnVariant, Construction,
    WitnessOutcome,
};
use updom_core::{cartesian_product, disjoint_union, FamilySpec, Graph, GraphError, VertexSet, WitnessError};

use crate::closed_form::{closed_form, shape, Shape};
use crate::pool::NamedGraph;
use crate::report::{
    BoundReport, Check, GraphInvariants, GraphReport, SeparationReport, SolvedValue, Verdict, WitnessReport,
    WitnessSummary,
};

/// Limits and solver choice shared by every instance of a run.
#[derive(Clone)]
pub struct Options {
    pub budget: SearchBudget,
    /// Γ solver for factors and products.
    pub solver: Arc<dyn UpperGammaSolver>,
    /// Products with more vertices get witnesses only.
    pub max_exact_product: usize,
    /// Also build the column-split witnesses for every pair.
    pub column_split: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            budget: SearchBudget::unlimited(),
            solver: Arc::new(AutoSolver { oracle_max: 16, bnb: BnbConfig::default() }),
            max_exact_product: 40,
            column_split: false,
        }
    }
}

impl Options {
    fn upper(&self, g: &Graph) -> Option<SolveResult> {
        self.solver.solve(g, &self.budget).ok()
    }
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn unsolved() -> SolvedValue {
    SolvedValue { value: 0, status: SolveStatus::LowerBoundOnly, nodes: 0 }
}

pub fn invariants(g: &Graph, opts: &Options) -> GraphInvariants {
    let upper = opts.upper(g);
    GraphInvariants {
        n: g.n(),
        edges: g.edge_count(),
        gamma: (&gamma_exact(g, &opts.budget)).into(),
        upper_gamma: upper.as_ref().map(SolvedValue::from).unwrap_or_else(unsolved),
        alpha: (&alpha_exact(g, &opts.budget)).into(),
        upper_witness: upper.map(|r| r.witness).unwrap_or_default(),
    }
}

/// `γ <= α <= Γ <= n`, and `Γ <= n - γ` without isolated vertices.
fn chain_check(name: &str, g: &Graph, inv: &GraphInvariants) -> Check {
    let (Some(gamma), Some(upper), Some(alpha)) = (inv.gamma.exact(), inv.upper_gamma.exact(), inv.alpha.exact())
    else {
        return Check::new(name, Verdict::Inconclusive, "some invariant not solved within budget");
    };
    let mut ok = gamma <= alpha && alpha <= upper && upper <= inv.n;
    let mut detail = format!("γ={gamma} α={alpha} Γ={upper} n={}", inv.n);
    if g.is_isolate_free() && g.n() > 0 {
        ok &= upper + gamma <= inv.n;
        detail.push_str(", isolate-free");
    }
    Check::expect(name, ok, detail)
}

pub fn analyze_graph(name: &str, g: &Graph, expected: Option<usize>, opts: &Options) -> GraphReport {
    let start = Instant::now();
    let inv = invariants(g, opts);
    let mut checks = vec![chain_check("invariant-chain", g, &inv)];
    if let Some(want) = expected {
        checks.push(match inv.upper_gamma.exact() {
            Some(got) => Check::expect("expected-upper-gamma", got == want, format!("Γ={got}, expected {want}")),
            None if inv.upper_gamma.value > want => Check::new(
                "expected-upper-gamma",
                Verdict::Fail,
                format!("Γ>={} exceeds expected {want}", inv.upper_gamma.value),
            ),
            None => Check::new("expected-upper-gamma", Verdict::Inconclusive, "Γ not solved within budget"),
        });
    }
    GraphReport {
        spec: name.to_string(),
        invariants: inv,
        expected_upper_gamma: expected,
        checks,
        elapsed_ms: elapsed_ms(start),
    }
}

/// Invariants of `G □ H` checked against the closed form when one applies.
pub fn analyze_product(g: &NamedGraph, h: &NamedGraph, opts: &Options) -> Result<GraphReport, GraphError> {
    let product = cartesian_product(&g.graph, &h.graph)?;
    let expected = closed_form(&g.graph, &h.graph).map(|c| c.value);
    Ok(analyze_graph(&format!("{} x {}", g.name, h.name), product.graph(), expected, opts))
}

fn witness_check(name: &str, result: &Result<WitnessOutcome, WitnessError>) -> Check {
    match result {
        Ok(out) => match out.verify() {
            Ok(()) => Check::new(
                name,
                Verdict::Pass,
                format!(
                    "{} ({}): size {} >= claimed {}",
                    out.construction, out.case, out.certified_lower_bound, out.claimed_bound
                ),
            ),
            Err(e) => Check::new(name, Verdict::Fail, e),
        },
        Err(WitnessError::CoverConditionFailed) => Check::new(name, Verdict::Observation, "cover condition fails"),
        Err(WitnessError::PreconditionFailed(m)) if m.contains("budget") => {
            Check::new(name, Verdict::Inconclusive, m.clone())
        }
        Err(e) => Check::new(name, Verdict::Fail, e.to_string()),
    }
}

fn is_complete_or_p3(g: &Graph) -> bool {
    matches!(shape(g), Shape::Complete(_) | Shape::CompleteBipartite(1, 2))
}

pub fn analyze_pair(g: &NamedGraph, h: &NamedGraph, opts: &Options) -> Result<BoundReport, GraphError> {
    let start = Instant::now();
    let (gg, hh) = (&g.graph, &h.graph);
    let product = cartesian_product(gg, hh)?;
    let (gi, hi) = (invariants(gg, opts), invariants(hh, opts));
    let factors_exact = gi.upper_gamma.status.is_exact() && hi.upper_gamma.status.is_exact();
    let (ug, uh) = (gi.upper_gamma.value, hi.upper_gamma.value);
    let base = ug * uh;
    let (slack_g, slack_h) = (gg.n() - ug, hh.n() - uh);
    let rhs_min = base + slack_g.min(slack_h);
    let rhs_max = base + slack_g.max(slack_h);

    let exact_size = product.graph().n() <= opts.max_exact_product;
    let product_upper = exact_size.then(|| opts.upper(product.graph())).flatten();
    let product_upper_gamma = product_upper.as_ref().map(SolvedValue::from);
    let product_gamma: Option<SolvedValue> = exact_size.then(|| (&gamma_exact(product.graph(), &opts.budget)).into());
    let exact_upper = product_upper_gamma.and_then(|v| v.exact());

    let main = product_bound_witness_general(gg, hh, &gi.upper_witness, &hi.upper_witness);
    let row = gg.is_nontrivial().then(|| row_cover_witness(gg, hh, &opts.budget));
    let columns: Vec<(&str, Result<WitnessOutcome, WitnessError>)> = if opts.column_split {
        [("column-split-gamma", ColumnVariant::GammaLower), ("column-split-full", ColumnVariant::FullCover)]
            .into_iter()
            .map(|(name, v)| (name, column_split_witness(gg, hh, &hi.upper_witness, v, &opts.budget)))
            .collect()
    } else {
        Vec::new()
    };
    let outcomes: Vec<&WitnessOutcome> =
        main.iter().chain(row.iter().flatten()).chain(columns.iter().filter_map(|(_, r)| r.as_ref().ok())).collect();
    let best_witness = outcomes.iter().map(|o| o.certified_lower_bound).max().unwrap_or(0);

    let mut checks = vec![chain_check("factor-invariants-g", gg, &gi), chain_check("factor-invariants-h", hh, &hi)];

    checks.push(witness_check("product-bound-witness", &main));
    if let Ok(out) = &main {
        if factors_exact {
            checks.push(Check::expect(
                "product-bound-witness-size",
                out.certified_lower_bound >= rhs_min,
                format!("witness {} vs rhs_min {rhs_min}", out.certified_lower_bound),
            ));
        }
    }

    checks.push(if !factors_exact {
        Check::new("main-bound", Verdict::Inconclusive, "factor Γ not solved within budget")
    } else if let Some(exact) = exact_upper {
        Check::expect("main-bound", exact >= rhs_min, format!("Γ(G□H)={exact} >= rhs_min={rhs_min}"))
    } else if best_witness >= rhs_min {
        Check::new("main-bound", Verdict::Pass, format!("certified witness {best_witness} >= rhs_min={rhs_min}"))
    } else {
        Check::new(
            "main-bound",
            Verdict::Inconclusive,
            format!("witness {best_witness} < rhs_min={rhs_min}, product unsolved"),
        )
    });

    if factors_exact {
        let (value, how) = match exact_upper {
            Some(v) => (v, "Γ(G□H)"),
            None => (best_witness, "witness"),
        };
        let holds = if value >= rhs_max { "holds" } else { "fails" };
        checks.push(Check::new(
            "max-form",
            Verdict::Observation,
            format!("{how}={value} vs rhs_max={rhs_max}: {holds}"),
        ));
    }

    if let Some(row) = &row {
        checks.push(witness_check("row-cover-witness", row));
        if let Some(exact) = exact_upper {
            checks.push(Check::expect(
                "row-cover-bound",
                exact >= hh.n(),
                format!("Γ(G□H)={exact} >= |V(H)|={}", hh.n()),
            ));
            let detail = if exact == hh.n() {
                format!("equality; G complete or K_1,2: {}", is_complete_or_p3(gg))
            } else {
                "strict".to_string()
            };
            // With no vertices in H both sides are 0 and the characterization says nothing.
            if hh.n() > 0 {
                checks.push(Check::expect("row-cover-equality", exact != hh.n() || is_complete_or_p3(gg), detail));
            }
        }
    }

    for (name, result) in &columns {
        checks.push(witness_check(name, result));
    }

    if let Some(exact) = exact_upper {
        let worst = outcomes.iter().map(|o| o.certified_lower_bound).max().unwrap_or(0);
        checks.push(Check::expect(
            "witness-consistency",
            worst <= exact,
            format!("largest witness {worst} <= Γ(G□H)={exact}"),
        ));
    }

    if let (Some(pg), Some(g1), Some(g2)) = (product_gamma.and_then(|v| v.exact()), gi.gamma.exact(), hi.gamma.exact())
    {
        checks.push(Check::expect("product-domination", pg >= g1 * g2, format!("γ(G□H)={pg} >= γ(G)γ(H)={}", g1 * g2)));
    }

    let closed = closed_form(gg, hh);
    if let Some(c) = &closed {
        checks.push(match exact_upper {
            Some(exact) => Check::expect(
                "closed-form",
                exact == c.value,
                format!("{}: Γ(G□H)={exact}, formula {}", c.rule, c.value),
            ),
            None if best_witness > c.value => Check::new(
                "closed-form",
                Verdict::Fail,
                format!("{}: witness {best_witness} exceeds formula {}", c.rule, c.value),
            ),
            None if best_witness == c.value => Check::new(
                "closed-form",
                Verdict::Observation,
                format!("{}: certified lower bound {best_witness} equals formula; product not solved", c.rule),
            ),
            None => Check::new(
                "closed-form",
                Verdict::Inconclusive,
                format!("{}: witness {best_witness} < formula {}", c.rule, c.value),
            ),
        });
    }

    if factors_exact {
        let attained = exact_upper.or(closed.as_ref().map(|c| c.value));
        if attained == Some(rhs_min) {
            checks.push(Check::new("sharpness", Verdict::Observation, format!("bound rhs_min={rhs_min} is attained")));
        }
    }

    if gg.n() + hh.n() <= opts.max_exact_product {
        let union = disjoint_union(&[gg.clone(), hh.clone()])?;
        if let (Some(u), true) = (opts.upper(&union).filter(|r| r.status.is_exact()), factors_exact) {
            checks.push(Check::expect("disjoint-union", u.value == ug + uh, format!("Γ(G⊔H)={} = {ug}+{uh}", u.value)));
        }
    }

    Ok(BoundReport {
        g_spec: g.name.clone(),
        h_spec: h.name.clone(),
        g: gi,
        h: hi,
        product_n: product.graph().n(),
        product_upper_gamma,
        product_gamma,
        rhs_min,
        rhs_max,
        closed_form: closed,
        witnesses: outcomes.into_iter().map(WitnessSummary::from).collect(),
        checks,
        elapsed_ms: elapsed_ms(start),
    })
}

/// Builds one registered construction and certifies the result.
pub fn analyze_witness(
    g: &NamedGraph,
    h: &NamedGraph,
    construction: &dyn Construction,
    opts: &Options,
) -> WitnessReport {
    let start = Instant::now();
    let result = construction.build(&g.graph, &h.graph, &BuildContext { budget: opts.budget });
    let check = match &result {
        Err(WitnessError::PreconditionFailed(m)) if !m.contains("budget") => {
            Check::new("certificate", Verdict::Observation, format!("not applicable: {m}"))
        }
        Err(WitnessError::Trivial) => Check::new("certificate", Verdict::Observation, "not applicable: G has no edge"),
        _ => witness_check("certificate", &result),
    };
    let (outcome, certificate) = match result {
        Ok(out) => (Some(WitnessSummary::from(&out)), Some(out.certificate)),
        Err(_) => (None, None),
    };
    WitnessReport {
        g_spec: g.name.clone(),
        h_spec: h.name.clone(),
        construction: construction.name().to_string(),
        outcome,
        certificate,
        checks: vec![check],
        elapsed_ms: elapsed_ms(start),
    }
}

/// The `{v_1..v_n} × V(K_3)` witness in `X_n' □ K_3`, against Γ(X_n □ K_3)
/// when `solve_unprimed` is set.
pub fn analyze_separation(n: usize, solve_unprimed: bool, opts: &Options) -> Result<SeparationReport, GraphError> {
    let start = Instant::now();
    let (primed_spec, unprimed_spec, k3) = (FamilySpec::XPrimeGraph(n), FamilySpec::XGraph(n), FamilySpec::Complete(3));
    let k3g = k3.generate()?;
    let primed = cartesian_product(&primed_spec.generate()?, &k3g)?;
    // v_j is vertex n + j in X_n'.
    let vs: VertexSet = (n + 1..=2 * n).collect();
    let witness = primed.block(&vs, &k3g.vertices());
    let mut checks = vec![match certify_minimal(primed.graph(), &witness) {
        Ok(_) => Check::expect("primed-witness", witness.len() == 3 * n, format!("size {} = 3n", witness.len())),
        Err(e) => Check::new("primed-witness", Verdict::Fail, e.to_string()),
    }];

    let unprimed_upper_gamma = if solve_unprimed {
        let product = cartesian_product(&unprimed_spec.generate()?, &k3g)?;
        opts.upper(product.graph()).as_ref().map(SolvedValue::from)
    } else {
        None
    };
    let comparison = match unprimed_upper_gamma.and_then(|v| v.exact()) {
        Some(v) if v < 3 * n => format!("Γ(X□K_3)={v} < {}: strict at this size", 3 * n),
        Some(v) => format!("Γ(X□K_3)={v} >= {}: no separation at this size", 3 * n),
        None => "inconclusive: unprimed product not solved".to_string(),
    };
    checks.push(Check::new("comparison", Verdict::Observation, comparison));

    Ok(SeparationReport {
        n,
        primed_spec: format!("{primed_spec} x {k3}"),
        unprimed_spec: format!("{unprimed_spec} x {k3}"),
        primed_lower_bound: witness.len(),
        primed_witness: witness,
        unprimed_upper_gamma,
        checks,
        elapsed_ms: elapsed_ms(start),
    })
}
