use crate::bitset::VertexSet;
use crate::domset::is_dominating;
use crate::error::WitnessError;
use crate::exact::greedy_maximal_independent;
use crate::graph::{cartesian_product, Graph};
use crate::witness::{embed, require_minimal_dominating, WitnessOutcome};

/// `{(i, i) : i < min(n_G, n_H)}`: distinct rows and columns, hence
/// independent in `G □ H`.
pub fn diagonal_independent_set(g: &Graph, h: &Graph) -> VertexSet {
    (0..g.n().min(h.n())).map(|i| i * h.n() + i).collect()
}

/// The diagonal grown greedily to a maximal independent set, which is a
/// minimal dominating set of size at least `min(n_G, n_H)`.
pub fn diagonal_maximal_witness(g: &Graph, h: &Graph) -> Result<WitnessOutcome, WitnessError> {
    let product = cartesian_product(g, h)?;
    let diagonal = diagonal_independent_set(g, h);
    let witness = greedy_maximal_independent(product.graph(), &diagonal)?;
    WitnessOutcome::finish(product, witness, "diagonal", "maximal-independent", g.n().min(h.n()))
}

fn require_maximal_independent(g: &Graph, s: &VertexSet, what: &str) -> Result<(), WitnessError> {
    if !g.is_independent(s) {
        return Err(WitnessError::PreconditionFailed(format!("{what} is not independent")));
    }
    if !is_dominating(g, s) {
        return Err(WitnessError::PreconditionFailed(format!("{what} is not maximal")));
    }
    Ok(())
}

/// `(I_G × I_H) ∪ D₂` for maximal independent sets `I_G`, `I_H` and a
/// minimal dominating set `D₂` of `G[V∖I_G] □ H[V∖I_H]` (given in that
/// product's own coordinates, remaining vertices relabelled in increasing
/// order). Members of `I_G × I_H` are isolated in the union and private
/// neighbors inside the remainder survive, so the union is minimal.
pub fn independent_block_witness(
    g: &Graph,
    h: &Graph,
    i_g: &VertexSet,
    i_h: &VertexSet,
    d2: &VertexSet,
) -> Result<WitnessOutcome, WitnessError> {
    require_maximal_independent(g, i_g, "I_G")?;
    require_maximal_independent(h, i_h, "I_H")?;
    let (g_rest, g_old) = g.induced_subgraph(&(g.vertices() - *i_g));
    let (h_rest, h_old) = h.induced_subgraph(&(h.vertices() - *i_h));
    let remainder = cartesian_product(&g_rest, &h_rest)?;
    require_minimal_dominating(remainder.graph(), d2, "D2")?;

    let product = cartesian_product(g, h)?;
    let block = product.block(i_g, i_h);
    let witness = block | embed(&remainder, d2, &product, &g_old, &h_old);
    debug_assert_eq!(witness.len(), block.len() + d2.len());
    let claimed = i_g.len() * i_h.len() + d2.len();
    WitnessOutcome::finish(product, witness, "independent-block", "", claimed)
}
