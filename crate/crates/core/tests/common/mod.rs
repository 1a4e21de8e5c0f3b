#![allow(dead_code)]

use proptest::prelude::*;
use turanlab::extremal::{enumerate_free_graphs, EnumerationSpec};
use turanlab::{Graph, GraphFamily};

/// Graphs on `lo..=hi` vertices, each pair an edge with probability 1/2.
pub fn graph_strategy(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut k = 0;
            let mut edges = Vec::new();
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// One representative per isomorphism class on exactly `n` vertices.
pub fn classes(n: usize, forbidden: &GraphFamily) -> Vec<Graph> {
    enumerate_free_graphs(&EnumerationSpec::exhaustive(n, forbidden.clone())).unwrap().graphs
}

/// Every labeled graph on `n` vertices.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// All permutations of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(a: &Graph, b: &Graph, perms: &[Vec<usize>]) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && perms.iter().any(|p| a.edges().all(|(x, y)| b.has_edge(p[x], p[y])))
}
