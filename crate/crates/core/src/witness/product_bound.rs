//! Witnesses for `Γ(G □ H) >= Γ(G)Γ(H) + min{|V(G)| - Γ(G), |V(H)| - Γ(H)}`.
//!
//! Given minimal dominating sets `D_G`, `D_H` of isolate-free factors with
//! remainders `R_G`, `R_H`:
//!
//! * if neither set has a member with a private neighbor, both are maximal
//!   independent sets and the witness is `(D_G × D_H)` plus the diagonal of
//!   `G[R_G] □ H[R_H]` grown to a maximal independent set;
//! * otherwise (orienting so that `D_G^P ≠ ∅`) let `u'` / `v''` be the
//!   lowest private neighbors and minimalize
//!   `D₁ ∪ D₂ ∪ (D_G^I × D_H^I) ∪ (R_G × R_H)` with
//!   `D₁ = {(u', v) : u ∈ D_G^P, v ∈ D_H}`,
//!   `D₂ = {(u, v'') : u ∈ D_G^I, v ∈ D_H^P}` kept. Every column `v ∈ R_H`
//!   retains a vertex of `R_G × {v}`, giving `|D_G||D_H| + |R_H|`.

use crate::bitset::VertexSet;
use crate::domset::{minimalize, split_set, DomSplit};
use crate::error::WitnessError;
use crate::exact::greedy_maximal_independent;
use crate::graph::{cartesian_product, Graph, ProductGraph};
use crate::witness::independent::{diagonal_independent_set, independent_block_witness};
use crate::witness::{embed, require_isolate_free, require_minimal_dominating, WitnessOutcome};

const NAME: &str = "product-bound";

fn min_bound(n_g: usize, n_h: usize, d_g: usize, d_h: usize) -> usize {
    d_g * d_h + (n_g - d_g).min(n_h - d_h)
}

/// Witness for isolate-free factors. When `d_g` and `d_h` are maximum
/// minimal dominating sets the certified size meets the full bound.
pub fn product_bound_witness(
    g: &Graph,
    h: &Graph,
    d_g: &VertexSet,
    d_h: &VertexSet,
) -> Result<WitnessOutcome, WitnessError> {
    require_isolate_free(g, "G")?;
    require_isolate_free(h, "H")?;
    require_minimal_dominating(g, d_g, "D_G")?;
    require_minimal_dominating(h, d_h, "D_H")?;
    let claimed_min = min_bound(g.n(), h.n(), d_g.len(), d_h.len());
    let (split_g, split_h) = (split_set(g, d_g), split_set(h, d_h));

    if split_g.d_p.is_empty() && split_h.d_p.is_empty() {
        let (g_rest, _) = g.induced_subgraph(&(g.vertices() - *d_g));
        let (h_rest, _) = h.induced_subgraph(&(h.vertices() - *d_h));
        let remainder = cartesian_product(&g_rest, &h_rest)?;
        let diagonal = diagonal_independent_set(&g_rest, &h_rest);
        let d2 = greedy_maximal_independent(remainder.graph(), &diagonal)?;
        let inner = independent_block_witness(g, h, d_g, d_h, &d2)?;
        return WitnessOutcome::finish(inner.product, inner.witness, NAME, "both-independent", claimed_min);
    }

    if !split_g.d_p.is_empty() {
        let product = cartesian_product(g, h)?;
        let witness = private_rows(&product, g, h, d_g, d_h, &split_g, &split_h)?;
        let claimed = d_g.len() * d_h.len() + (h.n() - d_h.len());
        WitnessOutcome::finish(product, witness, NAME, "private-rows", claimed.max(claimed_min))
    } else {
        let swapped = cartesian_product(h, g)?;
        let witness = private_rows(&swapped, h, g, d_h, d_g, &split_h, &split_g)?;
        let product = cartesian_product(g, h)?;
        let witness = swapped.transpose_set(&witness);
        let claimed = d_g.len() * d_h.len() + (g.n() - d_g.len());
        WitnessOutcome::finish(product, witness, NAME, "private-rows-swapped", claimed.max(claimed_min))
    }
}

/// The `D_G^P ≠ ∅` branch, in `product = G □ H` coordinates.
fn private_rows(
    product: &ProductGraph,
    g: &Graph,
    h: &Graph,
    d_g: &VertexSet,
    d_h: &VertexSet,
    split_g: &DomSplit,
    split_h: &DomSplit,
) -> Result<VertexSet, WitnessError> {
    let r_g = g.vertices() - *d_g;
    let r_h = h.vertices() - *d_h;
    if r_h.is_empty() {
        return Err(WitnessError::PreconditionFailed("empty remainder in the second factor".into()));
    }
    let mut forced = VertexSet::new();
    for &u_private in split_g.chosen_private.values() {
        for v in d_h {
            forced.insert(product.index(u_private, v));
        }
    }
    for u in &split_g.d_i {
        for &v_private in split_h.chosen_private.values() {
            forced.insert(product.index(u, v_private));
        }
    }
    forced |= product.block(&split_g.d_i, &split_h.d_i);
    let start = forced | product.block(&r_g, &r_h);
    Ok(minimalize(product.graph(), &start, &forced)?)
}

/// Witness for arbitrary factors. Isolated vertices are split off: for
/// isolated `u` of `G` row `u` is a copy of `H` and takes `{u} × D_H`; for
/// isolated `v` of `H` column `v` takes `(D_G ∖ iso(G)) × {v}`; the
/// isolate-free parts use [`product_bound_witness`]. The pieces lie in
/// distinct components of the product, so their union stays minimal.
///
/// `d_g` and `d_h` must be minimal dominating sets (they contain every
/// isolated vertex).
pub fn product_bound_witness_general(
    g: &Graph,
    h: &Graph,
    d_g: &VertexSet,
    d_h: &VertexSet,
) -> Result<WitnessOutcome, WitnessError> {
    if g.is_isolate_free() && h.is_isolate_free() && g.n() > 0 && h.n() > 0 {
        return product_bound_witness(g, h, d_g, d_h);
    }
    require_minimal_dominating(g, d_g, "D_G")?;
    require_minimal_dominating(h, d_h, "D_H")?;
    let product = cartesian_product(g, h)?;
    let (iso_g, iso_h) = (g.isolated_vertices(), h.isolated_vertices());
    let (rest_g, rest_h) = (g.vertices() - iso_g, h.vertices() - iso_h);

    let mut witness = product.block(&iso_g, d_h) | product.block(&(*d_g & rest_g), &iso_h);
    let mut case = String::from("decomposed");
    if !rest_g.is_empty() && !rest_h.is_empty() {
        let (sub_g, g_old) = g.induced_subgraph(&rest_g);
        let (sub_h, h_old) = h.induced_subgraph(&rest_h);
        let relabel = |d: &VertexSet, old: &[usize]| -> VertexSet {
            old.iter().enumerate().filter(|(_, &o)| d.contains(o)).map(|(i, _)| i).collect()
        };
        let inner = product_bound_witness(&sub_g, &sub_h, &relabel(d_g, &g_old), &relabel(d_h, &h_old))?;
        witness |= embed(&inner.product, &inner.witness, &product, &g_old, &h_old);
        case = format!("decomposed+{}", inner.case);
    }
    let claimed = min_bound(g.n(), h.n(), d_g.len(), d_h.len());
    WitnessOutcome::finish(product, witness, NAME, case, claimed)
}
