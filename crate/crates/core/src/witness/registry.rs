//! Witness constructions behind a common trait, looked up by name. Each
//! construction derives whatever auxiliary sets it needs from the factors.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::bitset::VertexSet;
use crate::error::WitnessError;
use crate::exact::{greedy_maximal_independent, SearchBudget};
use crate::graph::{cartesian_product, Graph};
use crate::witness::{
    column_split_witness, diagonal_maximal_witness, independent_block_witness, max_minimal_dominating,
    product_bound_witness_general, row_cover_witness, star_product_witness, ColumnVariant, WitnessOutcome,
};

#[derive(Clone, Copy, Debug, Default)]
pub struct BuildContext {
    /// Budget for every inner search (maximum minimal dominating sets, γ).
    pub budget: SearchBudget,
}

pub trait Construction: Send + Sync {
    fn name(&self) -> &str;

    fn description(&self) -> &str;

    fn build(&self, g: &Graph, h: &Graph, ctx: &BuildContext) -> Result<WitnessOutcome, WitnessError>;
}

struct Diagonal;

impl Construction for Diagonal {
    fn name(&self) -> &str {
        "diagonal"
    }
    fn description(&self) -> &str {
        "diagonal grown to a maximal independent set; >= min(|V(G)|, |V(H)|)"
    }
    fn build(&self, g: &Graph, h: &Graph, _ctx: &BuildContext) -> Result<WitnessOutcome, WitnessError> {
        diagonal_maximal_witness(g, h)
    }
}

struct IndependentBlock;

impl Construction for IndependentBlock {
    fn name(&self) -> &str {
        "independent-block"
    }
    fn description(&self) -> &str {
        "greedy maximal independent sets I_G x I_H plus a maximum minimal dominating set of the remainder"
    }
    fn build(&self, g: &Graph, h: &Graph, ctx: &BuildContext) -> Result<WitnessOutcome, WitnessError> {
        let i_g = greedy_maximal_independent(g, &VertexSet::new())?;
        let i_h = greedy_maximal_independent(h, &VertexSet::new())?;
        let (g_rest, _) = g.induced_subgraph(&(g.vertices() - i_g));
        let (h_rest, _) = h.induced_subgraph(&(h.vertices() - i_h));
        let remainder = cartesian_product(&g_rest, &h_rest)?;
        let d2 = max_minimal_dominating(remainder.graph(), &ctx.budget).witness;
        independent_block_witness(g, h, &i_g, &i_h, &d2)
    }
}

struct RowCover;

impl Construction for RowCover {
    fn name(&self) -> &str {
        "row-cover"
    }
    fn description(&self) -> &str {
        "row or minimalized complement of an open neighborhood; >= |V(H)| for nontrivial G"
    }
    fn build(&self, g: &Graph, h: &Graph, ctx: &BuildContext) -> Result<WitnessOutcome, WitnessError> {
        row_cover_witness(g, h, &ctx.budget)
    }
}

struct StarProduct;

impl Construction for StarProduct {
    fn name(&self) -> &str {
        "star-product"
    }
    fn description(&self) -> &str {
        "G = K_{1,m} (m >= 3, center 0): last leaf on R_H, other leaves on D_H; > |V(H)|"
    }
    fn build(&self, g: &Graph, h: &Graph, ctx: &BuildContext) -> Result<WitnessOutcome, WitnessError> {
        let m = g.n().saturating_sub(1);
        let is_star = g.n() >= 2 && g.degree(0) == m && (1..g.n()).all(|v| g.degree(v) == 1);
        if !is_star {
            return Err(WitnessError::PreconditionFailed("G is not a star centered at vertex 0".into()));
        }
        let d_h = max_minimal_dominating(h, &ctx.budget).witness;
        star_product_witness(m, h, &d_h)
    }
}

struct ProductBound;

impl Construction for ProductBound {
    fn name(&self) -> &str {
        "product-bound"
    }
    fn description(&self) -> &str {
        ">= Γ(G)Γ(H) + min(|V(G)| - Γ(G), |V(H)| - Γ(H)) from maximum minimal dominating sets of both factors"
    }
    fn build(&self, g: &Graph, h: &Graph, ctx: &BuildContext) -> Result<WitnessOutcome, WitnessError> {
        let d_g = max_minimal_dominating(g, &ctx.budget).witness;
        let d_h = max_minimal_dominating(h, &ctx.budget).witness;
        product_bound_witness_general(g, h, &d_g, &d_h)
    }
}

struct ColumnSplit {
    name: &'static str,
    description: &'static str,
    variant: ColumnVariant,
}

impl Construction for ColumnSplit {
    fn name(&self) -> &str {
        self.name
    }
    fn description(&self) -> &str {
        self.description
    }
    fn build(&self, g: &Graph, h: &Graph, ctx: &BuildContext) -> Result<WitnessOutcome, WitnessError> {
        let d_h = max_minimal_dominating(h, &ctx.budget).witness;
        column_split_witness(g, h, &d_h, self.variant, &ctx.budget)
    }
}

pub struct ConstructionRegistry {
    entries: BTreeMap<String, Arc<dyn Construction>>,
}

impl ConstructionRegistry {
    pub fn empty() -> Self {
        ConstructionRegistry { entries: BTreeMap::new() }
    }

    pub fn with_defaults() -> Self {
        let mut r = Self::empty();
        r.register(Diagonal);
        r.register(IndependentBlock);
        r.register(RowCover);
        r.register(StarProduct);
        r.register(ProductBound);
        r.register(ColumnSplit {
            name: "column-split-gamma",
            description: "minimalize V(G) x D_H keeping V(G) x D^P; >= |V(G)||D^P| + γ(G)|D^I|",
            variant: ColumnVariant::GammaLower,
        });
        r.register(ColumnSplit {
            name: "column-split-full",
            description: "V(G) x D^P plus D' x D^I; needs N[D^P] ∪ D^I = V(H)",
            variant: ColumnVariant::FullCover,
        });
        r
    }

    pub fn register(&mut self, c: impl Construction + 'static) {
        self.entries.insert(c.name().to_string(), Arc::new(c));
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn Construction>, WitnessError> {
        self.entries.get(name).cloned().ok_or_else(|| WitnessError::UnknownConstruction(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<dyn Construction>> {
        self.entries.values()
    }
}

impl Default for ConstructionRegistry {
    fn default() -> Self {
        Self::with_defaults()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn names_and_lookup() {
        let r = ConstructionRegistry::with_defaults();
        let names: Vec<_> = r.names().collect();
        assert_eq!(
            names,
            [
                "column-split-full",
                "column-split-gamma",
                "diagonal",
                "independent-block",
                "product-bound",
                "row-cover",
                "star-product"
            ]
        );
        assert!(matches!(r.get("nope"), Err(WitnessError::UnknownConstruction(_))));
    }

    #[test]
    fn every_construction_verifies_on_star_c4() {
        let (g, h) = (gen("star:3"), gen("cycle:4"));
        let r = ConstructionRegistry::with_defaults();
        for c in r.iter() {
            match c.build(&g, &h, &BuildContext::default()) {
                Ok(out) => out.verify().unwrap(),
                Err(WitnessError::CoverConditionFailed) => assert_eq!(c.name(), "column-split-full"),
                Err(e) => panic!("{}: {e}", c.name()),
            }
        }
    }

    #[test]
    fn star_product_rejects_non_star() {
        let r = ConstructionRegistry::with_defaults();
        let err = r.get("star-product").unwrap().build(&gen("path:4"), &gen("k:2"), &BuildContext::default());
        assert!(matches!(err, Err(WitnessError::PreconditionFailed(_))));
    }
}
