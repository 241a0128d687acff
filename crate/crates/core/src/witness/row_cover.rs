use crate::bitset::VertexSet;
use crate::domset::minimalize;
use crate::error::WitnessError;
use crate::exact::{upper_gamma_bnb, SearchBudget};
use crate::family::FamilySpec;
use crate::graph::{cartesian_product, Graph};
use crate::witness::{embed, require_isolate_free, require_minimal_dominating, WitnessOutcome};

/// A minimal dominating set of `G □ H` with at least `|V(H)|` vertices for
/// nontrivial `G`.
///
/// In the largest nontrivial component `G₀` (lowest smallest member on
/// ties) take its lowest vertex `u`. If `N[u] = V(G₀)` row `u` is used;
/// otherwise `(V(G₀)∖N(u)) × V(H)` is minimalized, which keeps a vertex in
/// every column to dominate `N(u) × {v}`. Every other component `C`
/// contributes a maximum minimal dominating set of `C □ H` (the best one
/// found within `budget`).
pub fn row_cover_witness(g: &Graph, h: &Graph, budget: &SearchBudget) -> Result<WitnessOutcome, WitnessError> {
    if !g.is_nontrivial() {
        return Err(WitnessError::Trivial);
    }
    let product = cartesian_product(g, h)?;
    let components = g.components();
    let main = components
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() >= 2)
        .max_by(|(i, a), (j, b)| a.len().cmp(&b.len()).then(j.cmp(i)))
        .map(|(i, _)| i)
        .expect("a nontrivial graph has a component with an edge");

    let mut witness = VertexSet::new();
    let mut case = "";
    for (index, comp) in components.iter().enumerate() {
        let (sub, g_old) = g.induced_subgraph(comp);
        let sub_product = cartesian_product(&sub, h)?;
        let h_old: Vec<usize> = (0..h.n()).collect();
        let part = if index == main {
            // Relabelling keeps order, so local vertex 0 is the lowest of G₀.
            let u = 0;
            if sub.closed(u) == sub.vertices() {
                case = "row";
                sub_product.row(u)
            } else {
                case = "minimalized-complement";
                let cover = sub_product.block(&(sub.vertices() - sub.neighbors(u)), &h.vertices());
                minimalize(sub_product.graph(), &cover, &VertexSet::new())?
            }
        } else {
            upper_gamma_bnb(sub_product.graph(), budget).witness
        };
        witness |= embed(&sub_product, &part, &product, &g_old, &h_old);
    }
    WitnessOutcome::finish(product, witness, "row-cover", case, h.n())
}

/// `({u_m} × R_H) ∪ ({u_1..u_{m-1}} × D_H)` in `K_{1,m} □ H` (center
/// `u_0 = 0`, leaves `u_i = i`), where `R_H = V(H)∖D_H`. For `m >= 3` and
/// isolate-free `H` this has `|R_H| + (m-1)|D_H| > |V(H)|` vertices.
pub fn star_product_witness(m: usize, h: &Graph, d_h: &VertexSet) -> Result<WitnessOutcome, WitnessError> {
    if m < 3 {
        return Err(WitnessError::PreconditionFailed(format!("star needs at least 3 leaves, got {m}")));
    }
    require_isolate_free(h, "H")?;
    require_minimal_dominating(h, d_h, "D_H")?;
    let star = FamilySpec::Star(m).generate()?;
    let product = cartesian_product(&star, h)?;
    let rest = h.vertices() - *d_h;
    let leaves: VertexSet = (1..m).collect();
    let witness = product.block(&VertexSet::singleton(m), &rest) | product.block(&leaves, d_h);
    debug_assert_eq!(witness.len(), rest.len() + (m - 1) * d_h.len());
    WitnessOutcome::finish(product, witness, "star-product", "", h.n() + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::upper_gamma_oracle;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn row_cover_k2_p3_uses_row() {
        let out = row_cover_witness(&gen("k:2"), &gen("path:3"), &SearchBudget::unlimited()).unwrap();
        assert_eq!(out.case, "row");
        assert_eq!(out.witness, set(&[0, 1, 2]));
        assert_eq!(out.certified_lower_bound, 3);
    }

    #[test]
    fn row_cover_star_k2_is_strict() {
        let (g, h) = (gen("star:3"), gen("k:2"));
        let out = row_cover_witness(&g, &h, &SearchBudget::unlimited()).unwrap();
        assert_eq!(out.case, "row");
        assert!(out.certified_lower_bound >= 2);
        // K_{1,3} is neither complete nor K_{1,2}: Γ exceeds |V(H)|.
        let exact = upper_gamma_oracle(out.product.graph()).unwrap().value;
        assert_eq!(exact, 4);
    }

    #[test]
    fn row_cover_p3_k3_equality_case() {
        let (g, h) = (gen("path:3"), gen("k:3"));
        let out = row_cover_witness(&g, &h, &SearchBudget::unlimited()).unwrap();
        // Vertex 0 of P_3 does not see 2, so the complement route is taken.
        assert_eq!(out.case, "minimalized-complement");
        assert!(out.certified_lower_bound >= 3);
        assert_eq!(upper_gamma_oracle(out.product.graph()).unwrap().value, 3);
    }

    #[test]
    fn row_cover_with_extra_components() {
        let g = crate::graph::disjoint_union(&[gen("k:1"), gen("path:4"), gen("k:2")]).unwrap();
        let h = gen("cycle:4");
        let out = row_cover_witness(&g, &h, &SearchBudget::unlimited()).unwrap();
        out.verify().unwrap();
        assert!(out.certified_lower_bound > h.n());
        assert!(matches!(
            row_cover_witness(&gen("empty:3"), &h, &SearchBudget::unlimited()),
            Err(WitnessError::Trivial)
        ));
    }

    #[test]
    fn star_examples() {
        let out = star_product_witness(3, &gen("k:2"), &set(&[0])).unwrap();
        // (leaf 3, 1), (leaf 1, 0), (leaf 2, 0) with index u * 2 + v.
        assert_eq!(out.witness, set(&[7, 2, 4]));
        assert_eq!(out.certified_lower_bound, 3);

        let out = star_product_witness(3, &gen("path:3"), &set(&[1])).unwrap();
        assert_eq!(out.certified_lower_bound, 4);

        let out = star_product_witness(4, &gen("cycle:4"), &set(&[0, 2])).unwrap();
        assert_eq!(out.certified_lower_bound, 8);
        out.verify().unwrap();
    }

    #[test]
    fn star_preconditions() {
        assert!(star_product_witness(2, &gen("k:2"), &set(&[0])).is_err());
        assert!(star_product_witness(3, &gen("empty:2"), &set(&[0, 1])).is_err());
        assert!(star_product_witness(3, &gen("path:3"), &set(&[0, 1])).is_err());
    }
}
