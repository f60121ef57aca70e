//! Exhaustive enumerators for the verification sweeps: every labeled
//! bipartite quiver on `n` vertices and every labeled tree via Prüfer
//! sequences. Both are deterministic and their cardinalities have closed
//! forms that the tests use as oracles.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::Error;
use crate::graph::Graph;
use crate::quiver::Quiver;

/// Largest `n` accepted by [`bipartite_quivers`] (330k instances).
pub const MAX_BIPARTITE_N: usize = 7;
/// Largest `n` accepted by [`labeled_trees`] (262k instances).
pub const MAX_TREE_N: usize = 8;
/// Largest `n` accepted by [`all_graphs`] (32k instances).
pub const MAX_GRAPH_N: usize = 6;

/// Every labeled bipartite quiver on vertices `1..=n`, in deterministic
/// order.
///
/// The enumeration runs over each source subset `S ⊆ {1..n}` and, for each
/// source, each out-neighborhood inside the complement; arrows go from
/// sources to sinks, so every vertex of every yielded quiver is a sink or a
/// source. Quivers whose isolated vertices could sit on either side appear
/// once per admissible source set, which is exactly the parametrization the
/// count formula [`bipartite_quiver_count`] predicts.
pub fn bipartite_quivers(n: usize) -> Result<Vec<Quiver>, Error> {
    if !(1..=MAX_BIPARTITE_N).contains(&n) {
        return Err(Error::BoundExceeded(format!(
            "bipartite enumeration supports 1..={MAX_BIPARTITE_N} vertices; \
             n = {n} would yield about {:.2e} instances",
            bipartite_quiver_count_estimate(n)
        )));
    }
    let mut out = Vec::with_capacity(bipartite_quiver_count(n) as usize);
    for source_mask in 0u32..(1 << n) {
        let sources: Vec<usize> = (1..=n).filter(|v| source_mask >> (v - 1) & 1 == 1).collect();
        let sinks: Vec<usize> = (1..=n).filter(|v| source_mask >> (v - 1) & 1 == 0).collect();
        let (m, s) = (sources.len(), sinks.len());
        let configs: u64 = 1 << (m * s);
        for assign in 0..configs {
            let mut arrows = Vec::new();
            for (i, &src) in sources.iter().enumerate() {
                let hood = (assign >> (i * s)) & ((1u64 << s) - 1);
                for (j, &snk) in sinks.iter().enumerate() {
                    if hood >> j & 1 == 1 {
                        arrows.push((src, snk));
                    }
                }
            }
            out.push(Quiver::new(n, arrows).expect("enumerated arrows are in range"));
        }
    }
    Ok(out)
}

/// `Σ_m binom(n, m) · 2^(m(n-m))`: one instance per source subset and
/// arrow assignment. The independent oracle for [`bipartite_quivers`].
pub fn bipartite_quiver_count(n: usize) -> u64 {
    (0..=n as u64)
        .map(|m| {
            let nn = n as u64;
            binom_u64(nn, m) * (1u64 << (m * (nn - m)))
        })
        .sum()
}

fn bipartite_quiver_count_estimate(n: usize) -> f64 {
    (0..=n).map(|m| binom_f64(n, m) * 2f64.powi((m * (n - m)) as i32)).sum()
}

fn binom_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn binom_f64(n: usize, k: usize) -> f64 {
    binom_u64(n as u64, k as u64) as f64
}

/// Every labeled tree on vertices `1..=n`, one per Prüfer sequence, in
/// lexicographic sequence order. There are exactly `n^(n-2)` of them.
pub fn labeled_trees(n: usize) -> Result<Vec<Graph>, Error> {
    if !(2..=MAX_TREE_N).contains(&n) {
        return Err(Error::BoundExceeded(format!(
            "tree enumeration supports 2..={MAX_TREE_N} vertices; \
             n = {n} would yield about {:.2e} instances",
            (n as f64).powi(n as i32 - 2)
        )));
    }
    let mut out = Vec::with_capacity(labeled_tree_count(n) as usize);
    let mut seq = vec![1usize; n.saturating_sub(2)];
    loop {
        out.push(tree_from_prufer(n, &seq));
        // odometer over {1..n}^(n-2)
        let Some(pos) = seq.iter().rposition(|&x| x < n) else {
            break;
        };
        seq[pos] += 1;
        for x in seq[pos + 1..].iter_mut() {
            *x = 1;
        }
    }
    Ok(out)
}

/// Cayley's formula `n^(n-2)`.
pub fn labeled_tree_count(n: usize) -> u64 {
    (n as u64).pow(n as u32 - 2)
}

/// Every simple graph on vertices `1..=n`, one per subset of the
/// `binom(n, 2)` possible edges, in mask order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, Error> {
    if !(1..=MAX_GRAPH_N).contains(&n) {
        return Err(Error::BoundExceeded(format!(
            "graph enumeration supports 1..={MAX_GRAPH_N} vertices; \
             n = {n} would yield about {:.2e} instances",
            2f64.powi((n * n.saturating_sub(1) / 2) as i32)
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::with_capacity(1 << pairs.len());
    for mask in 0u32..(1 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        out.push(Graph::new(n, edges).expect("enumerated edges are simple"));
    }
    Ok(out)
}

/// Standard Prüfer decoding: repeatedly join the smallest current leaf to
/// the next sequence entry, then join the last two leaves.
fn tree_from_prufer(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n + 1];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (1..=n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always remains");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    debug_assert!(leaves.is_empty());
    Graph::new(n, edges).expect("Prüfer decoding yields a simple graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn bipartite_counts_match_formula() {
        assert_eq!(bipartite_quiver_count(1), 2);
        assert_eq!(bipartite_quiver_count(2), 6);
        assert_eq!(bipartite_quiver_count(3), 26);
        assert_eq!(bipartite_quiver_count(4), 162);
        assert_eq!(bipartite_quiver_count(5), 1442);
        assert_eq!(bipartite_quiver_count(6), 18306);
        for n in 1..=6 {
            assert_eq!(
                bipartite_quivers(n).unwrap().len() as u64,
                bipartite_quiver_count(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn enumerated_quivers_are_bipartite() {
        for q in bipartite_quivers(4).unwrap() {
            assert!(q.is_bipartite(), "{q}");
            assert!(q.parallel_arrows().is_none());
        }
    }

    #[test]
    fn bipartite_enumeration_is_deterministic() {
        assert_eq!(bipartite_quivers(4).unwrap(), bipartite_quivers(4).unwrap());
    }

    #[test]
    fn bipartite_bound_is_enforced() {
        let err = bipartite_quivers(8).unwrap_err();
        let Error::BoundExceeded(msg) = err else {
            panic!("expected BoundExceeded");
        };
        assert!(msg.contains("instances"), "{msg}");
    }

    #[test]
    fn tree_counts_match_cayley() {
        assert_eq!(labeled_tree_count(2), 1);
        assert_eq!(labeled_tree_count(3), 3);
        assert_eq!(labeled_tree_count(5), 125);
        for n in 2..=6 {
            assert_eq!(
                labeled_trees(n).unwrap().len() as u64,
                labeled_tree_count(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn trees_are_distinct_valid_trees() {
        for n in 2..=6 {
            let trees = labeled_trees(n).unwrap();
            let distinct: HashSet<_> = trees.iter().map(|t| t.edges().to_vec()).collect();
            assert_eq!(distinct.len(), trees.len(), "duplicate tree at n = {n}");
            assert!(trees.iter().all(Graph::is_tree));
        }
    }

    #[test]
    fn tree_bounds_are_enforced() {
        assert!(matches!(labeled_trees(1), Err(Error::BoundExceeded(_))));
        assert!(matches!(labeled_trees(9), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn graph_enumeration_counts() {
        for n in 1..=5 {
            let expect = 1u64 << (n * (n - 1) / 2);
            assert_eq!(all_graphs(n).unwrap().len() as u64, expect, "n = {n}");
        }
        assert!(matches!(all_graphs(7), Err(Error::BoundExceeded(_))));
    }
}
