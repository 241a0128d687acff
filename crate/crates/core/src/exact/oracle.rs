use std::cmp::Ordering;
use std::time::Instant;

use crate::bitset::VertexSet;
use crate::domset::certify_minimal;
use crate::error::ExactError;
use crate::exact::{SolveResult, SolveStats, SolveStatus};
use crate::graph::Graph;

/// Largest graph the subset-scan Γ oracle accepts.
pub const ORACLE_LIMIT: usize = 22;
/// Largest graph [`enumerate_minimal_dominating`] accepts.
pub const ENUMERATION_LIMIT: usize = 18;

/// Walks every subset in increasing mask order, reporting each minimal
/// dominating set. `dom[s]` holds the closed neighborhood of `s`, built
/// from the mask with its lowest bit cleared.
fn scan_minimal(g: &Graph, mut visit: impl FnMut(u32)) {
    let n = g.n();
    let closed: Vec<u32> = (0..n).map(|v| g.closed(v).iter().fold(0u32, |m, w| m | 1 << w)).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let total = 1usize << n;
    let mut dom = vec![0u32; total];
    for s in 1..total {
        let low = s.trailing_zeros() as usize;
        dom[s] = dom[s & (s - 1)] | closed[low];
    }
    if n == 0 {
        visit(0);
        return;
    }
    for s in 1..total {
        if dom[s] != full {
            continue;
        }
        let mut rest = s;
        let mut minimal = true;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if dom[s ^ bit] == full {
                minimal = false;
                break;
            }
            rest ^= bit;
        }
        if minimal {
            visit(s as u32);
        }
    }
}

fn mask_to_set(mask: u32) -> VertexSet {
    (0..32).filter(|b| mask >> b & 1 == 1).collect()
}

/// Γ by exhaustive subset scan. The witness is the lexicographically
/// smallest maximizer, comparing sets as sorted vertex lists.
pub fn upper_gamma_oracle(g: &Graph) -> Result<SolveResult, ExactError> {
    if g.n() > ORACLE_LIMIT {
        return Err(ExactError::TooLarge { n: g.n(), limit: ORACLE_LIMIT });
    }
    let started = Instant::now();
    let mut best: Option<VertexSet> = None;
    scan_minimal(g, |mask| {
        let candidate = mask_to_set(mask);
        let better = match &best {
            None => true,
            Some(b) => match candidate.len().cmp(&b.len()) {
                Ordering::Greater => true,
                Ordering::Equal => candidate.lex_cmp(b) == Ordering::Less,
                Ordering::Less => false,
            },
        };
        if better {
            best = Some(candidate);
        }
    });
    let witness = best.expect("every graph has a minimal dominating set");
    let certificate = certify_minimal(g, &witness).expect("oracle witness is minimal dominating");
    Ok(SolveResult {
        value: witness.len(),
        witness,
        certificate: Some(certificate),
        status: SolveStatus::Exact,
        stats: SolveStats { nodes: 1u64 << g.n(), elapsed: started.elapsed() },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub sets: Vec<VertexSet>,
    pub truncated: bool,
}

/// All minimal dominating sets in lexicographic order (as sorted vertex
/// lists), keeping the first `cap`.
pub fn enumerate_minimal_dominating(g: &Graph, cap: usize) -> Result<Enumeration, ExactError> {
    if g.n() > ENUMERATION_LIMIT {
        return Err(ExactError::TooLarge { n: g.n(), limit: ENUMERATION_LIMIT });
    }
    let mut sets = Vec::new();
    scan_minimal(g, |mask| sets.push(mask_to_set(mask)));
    sets.sort_by(VertexSet::lex_cmp);
    let truncated = sets.len() > cap;
    sets.truncate(cap);
    Ok(Enumeration { sets, truncated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn lists(e: &Enumeration) -> Vec<Vec<usize>> {
        e.sets.iter().map(VertexSet::to_vec).collect()
    }

    #[test]
    fn enumeration_examples() {
        let all = |s: &str| enumerate_minimal_dominating(&gen(s), usize::MAX).unwrap();
        assert_eq!(lists(&all("k:2")), vec![vec![0], vec![1]]);
        assert_eq!(lists(&all("path:3")), vec![vec![0, 2], vec![1]]);
        assert_eq!(
            lists(&all("cycle:4")),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        let e = enumerate_minimal_dominating(&gen("cycle:4"), 2).unwrap();
        assert!(e.truncated);
        assert_eq!(lists(&e), vec![vec![0, 1], vec![0, 2]]);
        assert_eq!(lists(&all("empty:0")), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn oracle_examples() {
        for n in 0..=6 {
            assert_eq!(upper_gamma_oracle(&gen(&format!("empty:{n}"))).unwrap().value, n);
        }
        assert_eq!(upper_gamma_oracle(&gen("x:4")).unwrap().value, 2);
        let r = upper_gamma_oracle(&gen("xp:4")).unwrap();
        assert_eq!(r.value, 4);
        // {v_1..v_4} in X_4' numbering.
        assert_eq!(r.witness.to_vec(), vec![5, 6, 7, 8]);
    }

    #[test]
    fn oracle_witness_is_lex_smallest() {
        // C_4 maximizers: {0,1} < {0,2} < ...
        let r = upper_gamma_oracle(&gen("cycle:4")).unwrap();
        assert_eq!(r.witness.to_vec(), vec![0, 1]);
    }

    #[test]
    fn oracle_refuses_large_graphs() {
        assert!(matches!(upper_gamma_oracle(&gen("empty:23")), Err(ExactError::TooLarge { n: 23, .. })));
        assert!(enumerate_minimal_dominating(&gen("empty:19"), 1).is_err());
    }
}
