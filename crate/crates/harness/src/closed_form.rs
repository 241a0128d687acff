//! Known values of Γ(G □ H) for products of complete, star and complete
//! bipartite graphs, recognized from the graphs themselves.

use serde::Serialize;
use updom_core::{FamilySpec, Graph, GraphError};

/// Structural class of a factor, as far as the closed forms care.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Complete(usize),
    /// `K_{a,b}` with `1 <= a <= b`, not complete.
    CompleteBipartite(usize, usize),
    Other,
}

pub fn shape(g: &Graph) -> Shape {
    if g.n() > 0 && g.is_complete() {
        return Shape::Complete(g.n());
    }
    if g.n() < 3 || !g.is_connected() {
        return Shape::Other;
    }
    // Connected complete bipartite: the non-neighbors of vertex 0 (with 0)
    // form one side, and every cross pair is an edge.
    let side = g.vertices() - g.neighbors(0);
    let other = g.neighbors(0);
    let complete = side.iter().all(|u| g.neighbors(u) == other) && other.iter().all(|v| g.neighbors(v) == side);
    if complete {
        let (a, b) = (side.len(), other.len());
        Shape::CompleteBipartite(a.min(b), a.max(b))
    } else {
        Shape::Other
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub value: usize,
    /// Which formula applied: `complete-complete`, `k2-any`,
    /// `complete-star` or `complete-bipartite`.
    pub rule: &'static str,
}

/// Γ(G □ H) when the pair (in either order) is `K_m □ K_n` (m, n >= 2),
/// `K_2 □ G`, `K_m □ K_{1,n}` (m >= 3, n >= 2) or `K_l □ K_{m,n}`
/// (l, m, n >= 2).
pub fn closed_form(g: &Graph, h: &Graph) -> Option<ClosedForm> {
    one_way(shape(g), h).or_else(|| one_way(shape(h), g))
}

fn one_way(first: Shape, other: &Graph) -> Option<ClosedForm> {
    let Shape::Complete(l) = first else { return None };
    if l == 2 {
        return Some(ClosedForm { value: other.n(), rule: "k2-any" });
    }
    match (l, shape(other)) {
        (l, Shape::Complete(n)) if l >= 2 && n >= 2 => Some(ClosedForm { value: l.max(n), rule: "complete-complete" }),
        (l, Shape::CompleteBipartite(1, n)) if l >= 3 && n >= 2 => {
            Some(ClosedForm { value: l + n - 2, rule: "complete-star" })
        }
        (l, Shape::CompleteBipartite(m, n)) if l >= 2 && m >= 2 => {
            Some(ClosedForm { value: (m + n).max(2 * l).max(m + l - 2).max(n + l - 2), rule: "complete-bipartite" })
        }
        _ => None,
    }
}

/// [`closed_form`] on generated family members.
pub fn closed_form_specs(g: &FamilySpec, h: &FamilySpec) -> Result<Option<ClosedForm>, GraphError> {
    Ok(closed_form(&g.generate()?, &h.generate()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    fn value(a: &str, b: &str) -> Option<usize> {
        closed_form_specs(&spec(a), &spec(b)).unwrap().map(|c| c.value)
    }

    #[test]
    fn shapes() {
        let shape_of = |s: &str| shape(&spec(s).generate().unwrap());
        assert_eq!(shape_of("k:4"), Shape::Complete(4));
        assert_eq!(shape_of("star:1"), Shape::Complete(2));
        assert_eq!(shape_of("star:3"), Shape::CompleteBipartite(1, 3));
        assert_eq!(shape_of("kmn:5,2"), Shape::CompleteBipartite(2, 5));
        assert_eq!(shape_of("cycle:4"), Shape::CompleteBipartite(2, 2));
        assert_eq!(shape_of("path:4"), Shape::Other);
        assert_eq!(shape_of("empty:2"), Shape::Other);
        assert_eq!(shape_of("cycle:5"), Shape::Other);
    }

    #[test]
    fn examples() {
        assert_eq!(value("k:4", "k:7"), Some(7));
        assert_eq!(value("k:3", "star:2"), Some(3));
        assert_eq!(value("star:2", "k:3"), Some(3));
        assert_eq!(value("k:6", "kmn:4,8"), Some(12));
        assert_eq!(value("k:3", "kmn:3,3"), Some(6));
        assert_eq!(value("k:2", "path:5"), Some(5));
        assert_eq!(value("cycle:5", "k:2"), Some(5));
        assert_eq!(value("k:3", "path:4"), None);
        assert_eq!(value("k:1", "k:4"), None);
        assert_eq!(value("path:3", "path:3"), None);
    }

    #[test]
    fn overlapping_rules_agree() {
        // K_2 □ K_n and K_2 □ K_{m,n} are covered by two formulas.
        for n in 2..7 {
            let k2 = spec("k:2");
            let via_k2 = closed_form(&k2.generate().unwrap(), &spec(&format!("k:{n}")).generate().unwrap());
            assert_eq!(via_k2.unwrap().value, 2usize.max(n));
            for m in 2..5 {
                let h = spec(&format!("kmn:{m},{n}")).generate().unwrap();
                let l = 2;
                let formula = (m + n).max(2 * l).max(m + l - 2).max(n + l - 2);
                assert_eq!(closed_form(&k2.generate().unwrap(), &h).unwrap().value, formula);
            }
        }
    }
}
