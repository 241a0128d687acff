//! Explicit minimal dominating sets of Cartesian products that certify lower
//! bounds on Γ(G □ H).
//!
//! Every construction returns a [`WitnessOutcome`]: the set, a minimality
//! certificate checked against the product, and the bound the construction
//! promises for its inputs. An outcome is only produced when the certificate
//! is valid and the witness is at least as large as the promised bound.

mod column_split;
mod independent;
mod product_bound;
mod registry;
mod row_cover;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::domset::{certify_minimal, DominationCertificate};
use crate::error::WitnessError;
use crate::exact::{upper_gamma_bnb, SearchBudget, SolveResult};
use crate::graph::{Graph, ProductGraph};

pub use column_split::{column_split_witness, ColumnVariant};
pub use independent::{diagonal_independent_set, diagonal_maximal_witness, independent_block_witness};
pub use product_bound::{product_bound_witness, product_bound_witness_general};
pub use registry::{BuildContext, Construction, ConstructionRegistry};
pub use row_cover::{row_cover_witness, star_product_witness};

#[derive(Clone, Debug, Serialize)]
pub struct WitnessOutcome {
    #[serde(skip)]
    pub product: ProductGraph,
    pub construction: String,
    pub case: String,
    pub claimed_bound: usize,
    pub certified_lower_bound: usize,
    pub witness: VertexSet,
    pub certificate: DominationCertificate,
}

impl WitnessOutcome {
    /// Certifies `witness` in `product` and checks it meets `claimed_bound`.
    pub(crate) fn finish(
        product: ProductGraph,
        witness: VertexSet,
        construction: &str,
        case: impl Into<String>,
        claimed_bound: usize,
    ) -> Result<Self, WitnessError> {
        let certificate = certify_minimal(product.graph(), &witness)?;
        let size = witness.len();
        if size < claimed_bound {
            return Err(WitnessError::BoundNotMet { size, claimed: claimed_bound });
        }
        Ok(WitnessOutcome {
            product,
            construction: construction.to_string(),
            case: case.into(),
            claimed_bound,
            certified_lower_bound: size,
            witness,
            certificate,
        })
    }

    /// Re-verifies the certificate against the product.
    pub fn verify(&self) -> Result<(), String> {
        if self.certificate.set != self.witness {
            return Err("certificate set differs from the witness".into());
        }
        self.certificate.verify(self.product.graph())?;
        if self.certified_lower_bound != self.witness.len() || self.certified_lower_bound < self.claimed_bound {
            return Err(format!(
                "witness of size {} does not certify the claimed bound {}",
                self.witness.len(),
                self.claimed_bound
            ));
        }
        Ok(())
    }
}

/// A maximum minimal dominating set (lexicographically smallest among
/// maximizers when the search completes).
pub fn max_minimal_dominating(g: &Graph, budget: &SearchBudget) -> SolveResult {
    upper_gamma_bnb(g, budget)
}

fn require_minimal_dominating(g: &Graph, d: &VertexSet, what: &str) -> Result<(), WitnessError> {
    certify_minimal(g, d)
        .map(drop)
        .map_err(|e| WitnessError::PreconditionFailed(format!("{what} is not a minimal dominating set: {e}")))
}

fn require_isolate_free(g: &Graph, what: &str) -> Result<(), WitnessError> {
    match g.isolated_vertices().first() {
        Some(v) => Err(WitnessError::PreconditionFailed(format!("{what} has isolated vertex {v}"))),
        None => Ok(()),
    }
}

/// Maps a set of `sub_g □ sub_h` into `product`, given the old index of
/// every vertex of each sub-factor.
fn embed(sub: &ProductGraph, set: &VertexSet, product: &ProductGraph, g_old: &[usize], h_old: &[usize]) -> VertexSet {
    set.iter()
        .map(|i| {
            let (a, b) = sub.coords(i);
            product.index(g_old[a], h_old[b])
        })
        .collect()
}
