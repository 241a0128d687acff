//! Small-graph sources for sweeps: every graph on `n` vertices up to
//! isomorphism, or graphs read from a file.

use std::collections::BTreeSet;
use std::path::Path;

use updom_core::io::{parse_graph, parse_graph6_list, to_graph6, Format};
use updom_core::{Graph, GraphError};

/// Largest `n` for the built-in enumeration (2^15 edge subsets, 720
/// permutations each).
pub const BUILTIN_LIMIT: usize = 6;

/// A graph with the name it is reported under.
#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

impl NamedGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        NamedGraph { name: name.into(), graph }
    }

    /// Named by its graph6 string.
    pub fn from_graph(graph: Graph) -> Self {
        NamedGraph { name: format!("g6:{}", to_graph6(&graph)), graph }
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Upper-triangle adjacency bits of `g` after relabelling by `perm`.
fn code(g: &Graph, perm: &[usize], pairs: &[(usize, usize)]) -> u64 {
    pairs.iter().enumerate().filter(|(_, &(u, v))| g.has_edge(perm[u], perm[v])).fold(0, |acc, (i, _)| acc | 1 << i)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest adjacency code over all relabellings; equal exactly for
/// isomorphic graphs on the same vertex count.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(g.n() <= 11, "canonical code needs at most 55 vertex pairs");
    let pairs = pairs(g.n());
    permutations(g.n()).iter().map(|p| code(g, p, &pairs)).min().unwrap_or(0)
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// ordered by edge count and then by canonical code.
pub fn nonisomorphic(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > BUILTIN_LIMIT {
        return Err(GraphError::InvalidParameter(format!(
            "built-in enumeration covers n <= {BUILTIN_LIMIT}; supply a graph6 list instead"
        )));
    }
    let pairs = pairs(n);
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let g = Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))?;
        let canon = perms.iter().map(|p| code(&g, p, &pairs)).min().unwrap_or(0);
        seen.insert((mask.count_ones(), canon));
    }
    seen.into_iter()
        .map(|(_, canon)| {
            Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| canon >> i & 1 == 1).map(|(_, &e)| e))
        })
        .collect()
}

/// All graphs with `min_n <= n <= max_n` vertices up to isomorphism.
pub fn builtin_pool(min_n: usize, max_n: usize) -> Result<Vec<NamedGraph>, GraphError> {
    let mut out = Vec::new();
    for n in min_n..=max_n {
        out.extend(nonisomorphic(n)?.into_iter().map(NamedGraph::from_graph));
    }
    Ok(out)
}

#[derive(Debug, thiserror::Error)]
pub enum PoolError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: GraphError },
}

/// Graphs from a file: one graph6 string per line, or a single edge list.
pub fn read_pool(path: &Path, format: Format) -> Result<Vec<NamedGraph>, PoolError> {
    let shown = path.display().to_string();
    let bytes = std::fs::read(path).map_err(|source| PoolError::Io { path: shown.clone(), source })?;
    let graphs = match format {
        Format::Graph6 => parse_graph6_list(&bytes),
        Format::EdgeList => parse_graph(&bytes, format).map(|g| vec![g]),
    }
    .map_err(|source| PoolError::Parse { path: shown, source })?;
    Ok(graphs.into_iter().map(NamedGraph::from_graph).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| nonisomorphic(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn canonical_code_is_invariant() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let relabelled = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(canonical_code(&p4), canonical_code(&relabelled));
        assert_ne!(canonical_code(&p4), canonical_code(&star));
    }

    #[test]
    fn pool_names_round_trip() {
        for ng in builtin_pool(1, 4).unwrap() {
            let text = ng.name.strip_prefix("g6:").unwrap();
            assert_eq!(updom_core::io::parse_graph6(text.as_bytes()).unwrap(), ng.graph);
        }
    }

    #[test]
    fn too_large_is_rejected() {
        assert!(nonisomorphic(BUILTIN_LIMIT + 1).is_err());
    }
}
