//! Named graph families with pinned vertex numbering.
//!
//! | spec            | graph                         | numbering                                   |
//! |-----------------|-------------------------------|---------------------------------------------|
//! | `k:n`           | complete `K_n`                |                                             |
//! | `star:n`        | `K_{1,n}`                     | center 0, leaves `1..=n`                    |
//! | `kmn:m,n`       | complete bipartite `K_{m,n}`  | sides `0..m` and `m..m+n`                   |
//! | `empty:n`       | edgeless                      |                                             |
//! | `path:n`        | `P_n`                         | `0-1-..-(n-1)`                              |
//! | `cycle:n`       | `C_n`, `n >= 3`               | `0-1-..-(n-1)-0`                            |
//! | `x:n`           | `X_n`                         | `u_0..u_n = 0..=n`, `v_0..v_n = n+1..=2n+1` |
//! | `xp:n`          | `X_n'` (drop `u_0`)           | `u_1..u_n = 0..n`, `v_0..v_n = n..=2n`      |
//! | `pendant:n`     | `X_n` plus `x - y - u_0`      | `X_n` as above, `x = 2n+2`, `y = 2n+3`      |
//! | `xe:n`          | `X_n` plus the edge `u_0 v_0` | as `x:n`                                    |
//! | `er:n,p,seed`   | seeded `G(n, p)`              |                                             |

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    Edgeless(usize),
    Path(usize),
    Cycle(usize),
    XGraph(usize),
    XPrimeGraph(usize),
    PendantX(usize),
    XPlusEdge(usize),
    ErdosRenyi { n: usize, p: f64, seed: u64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph, GraphError> {
        use FamilySpec::*;
        let g = match *self {
            Complete(n) => {
                let mut g = Graph::edgeless(n)?;
                for u in 0..n {
                    for v in 0..u {
                        g.add_edge(u, v);
                    }
                }
                g
            }
            Star(n) => Graph::from_edges(n + 1, (1..=n).map(|v| (0, v)))?,
            CompleteBipartite(m, n) => Graph::from_edges(m + n, (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b))))?,
            Edgeless(n) => Graph::edgeless(n)?,
            Path(n) => Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))?,
            Cycle(n) => {
                if n < 3 {
                    return Err(GraphError::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
                }
                Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))?
            }
            XGraph(n) => x_graph(n)?,
            XPrimeGraph(n) => {
                let x = x_graph(n)?;
                let mut keep = x.vertices();
                keep.remove(0);
                x.induced_subgraph(&keep).0
            }
            PendantX(n) => {
                let x = x_graph(n)?;
                let base = x.n();
                Graph::from_edges(base + 2, x.edges().chain([(base, base + 1), (base + 1, 0)]))?
            }
            XPlusEdge(n) => {
                let mut g = x_graph(n)?;
                g.add_edge(0, n + 1);
                g
            }
            ErdosRenyi { n, p, seed } => {
                if !(0.0..=1.0).contains(&p) {
                    return Err(GraphError::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
                }
                let mut g = Graph::edgeless(n)?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen::<f64>() < p {
                            g.add_edge(u, v);
                        }
                    }
                }
                g
            }
        };
        Ok(g.with_label(self.to_string()))
    }
}

fn x_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("X_n needs n >= 1".into()));
    }
    let v0 = n + 1;
    let mut g = Graph::edgeless(2 * n + 2)?;
    for i in 0..=n {
        for j in 0..i {
            g.add_edge(i, j);
            g.add_edge(v0 + i, v0 + j);
        }
    }
    for i in 1..=n {
        g.add_edge(i, v0 + i);
    }
    Ok(g)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Complete(n) => write!(f, "k:{n}"),
            Star(n) => write!(f, "star:{n}"),
            CompleteBipartite(m, n) => write!(f, "kmn:{m},{n}"),
            Edgeless(n) => write!(f, "empty:{n}"),
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            XGraph(n) => write!(f, "x:{n}"),
            XPrimeGraph(n) => write!(f, "xp:{n}"),
            PendantX(n) => write!(f, "pendant:{n}"),
            XPlusEdge(n) => write!(f, "xe:{n}"),
            ErdosRenyi { n, p, seed } => write!(f, "er:{n},{p},{seed}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        let bad = |why: &str| GraphError::InvalidParameter(format!("family spec '{s}': {why}"));
        let (name, args) = s.trim().split_once(':').ok_or_else(|| bad("expected NAME:ARGS"))?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let int = |i: usize| -> Result<usize, GraphError> {
            args.get(i).and_then(|a| a.parse().ok()).ok_or_else(|| bad("expected integer argument"))
        };
        let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad(&format!("expected {k} argument(s)"))) };
        use FamilySpec::*;
        let spec = match name.to_ascii_lowercase().as_str() {
            "k" | "complete" => arity(1).and(int(0).map(Complete))?,
            "star" => arity(1).and(int(0).map(Star))?,
            "kmn" | "bipartite" => {
                arity(2)?;
                CompleteBipartite(int(0)?, int(1)?)
            }
            "empty" | "edgeless" => arity(1).and(int(0).map(Edgeless))?,
            "path" | "p" => arity(1).and(int(0).map(Path))?,
            "cycle" | "c" => arity(1).and(int(0).map(Cycle))?,
            "x" => arity(1).and(int(0).map(XGraph))?,
            "xp" => arity(1).and(int(0).map(XPrimeGraph))?,
            "pendant" => arity(1).and(int(0).map(PendantX))?,
            "xe" => arity(1).and(int(0).map(XPlusEdge))?,
            "er" => {
                arity(3)?;
                let p: f64 = args[1].parse().map_err(|_| bad("expected probability"))?;
                let seed: u64 = args[2].parse().map_err(|_| bad("expected seed"))?;
                ErdosRenyi { n: int(0)?, p, seed }
            }
            _ => return Err(bad("unknown family")),
        };
        Ok(spec)
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::VertexSet;
    use crate::graph::cartesian_product;

    fn gen(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    /// Brute-force isomorphism test for tiny graphs.
    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        fn permute(k: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, a: &Graph, b: &Graph) -> bool {
            let n = a.n();
            if k == n {
                return a.edges().all(|(u, v)| b.has_edge(perm[u], perm[v]));
            }
            for t in 0..n {
                if !used[t] && a.degree(k) == b.degree(t) {
                    used[t] = true;
                    perm.push(t);
                    if permute(k + 1, perm, used, a, b) {
                        return true;
                    }
                    perm.pop();
                    used[t] = false;
                }
            }
            false
        }
        a.n() == b.n() && a.edge_count() == b.edge_count() && permute(0, &mut Vec::new(), &mut vec![false; a.n()], a, b)
    }

    #[test]
    fn x2_edges() {
        let g = gen(FamilySpec::XGraph(2));
        assert_eq!(g.n(), 6);
        let mut edges: Vec<_> = g.edges().collect();
        edges.sort();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)]);
    }

    #[test]
    fn x_plus_edge_is_k2_square_k_n_plus_1() {
        for n in 1..=5 {
            let g = gen(FamilySpec::XPlusEdge(n));
            let p = cartesian_product(&gen(FamilySpec::Complete(2)), &gen(FamilySpec::Complete(n + 1))).unwrap();
            assert!(isomorphic(&g, p.graph()), "n = {n}");
        }
    }

    #[test]
    fn x_prime_is_induced_subgraph_of_x() {
        for n in 1..=6 {
            let x = gen(FamilySpec::XGraph(n));
            let xp = gen(FamilySpec::XPrimeGraph(n));
            assert_eq!(xp.n(), 2 * n + 1);
            let old_of_new: Vec<usize> = (1..=n).chain(n + 1..=2 * n + 1).collect();
            for a in 0..xp.n() {
                for b in 0..xp.n() {
                    assert_eq!(xp.has_edge(a, b), x.has_edge(old_of_new[a], old_of_new[b]));
                }
            }
        }
    }

    #[test]
    fn pendant_numbering() {
        let g = gen(FamilySpec::PendantX(3));
        assert_eq!(g.n(), 10);
        assert_eq!(g.neighbors(8), VertexSet::singleton(9));
        assert_eq!(g.neighbors(9), [0, 8].into_iter().collect());
        assert_eq!(g.edge_count(), gen(FamilySpec::XGraph(3)).edge_count() + 2);
    }

    #[test]
    fn simple_families() {
        let g = gen(FamilySpec::Edgeless(5));
        assert_eq!((g.n(), g.edge_count()), (5, 0));
        let g = gen(FamilySpec::Star(4));
        assert_eq!(g.degree(0), 4);
        let g = gen(FamilySpec::CompleteBipartite(3, 5));
        assert_eq!(g.edge_count(), 15);
        assert!(!g.has_edge(0, 1) && g.has_edge(0, 3));
        assert!(FamilySpec::Cycle(2).generate().is_err());
        assert!(FamilySpec::ErdosRenyi { n: 4, p: 1.5, seed: 0 }.generate().is_err());
    }

    #[test]
    fn erdos_renyi_is_seeded() {
        let a = gen(FamilySpec::ErdosRenyi { n: 12, p: 0.5, seed: 7 });
        let b = gen(FamilySpec::ErdosRenyi { n: 12, p: 0.5, seed: 7 });
        let c = gen(FamilySpec::ErdosRenyi { n: 12, p: 0.5, seed: 8 });
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(gen(FamilySpec::ErdosRenyi { n: 6, p: 1.0, seed: 1 }).edge_count(), 15);
    }

    #[test]
    fn spec_text_round_trips() {
        for s in [
            "k:5",
            "star:2",
            "kmn:4,8",
            "empty:3",
            "path:4",
            "cycle:5",
            "x:3",
            "xp:4",
            "pendant:2",
            "xe:3",
            "er:6,0.3,42",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("k:".parse::<FamilySpec>().is_err());
        assert!("kmn:3".parse::<FamilySpec>().is_err());
        assert!("wheel:5".parse::<FamilySpec>().is_err());
    }
}
