mod common;

use std::collections::BTreeSet;

use common::{classes, graph_strategy};
use proptest::prelude::*;
use turanlab::counting::*;
use turanlab::extremal::partitions_at_most;
use turanlab::graph::complete_multipartite;
use turanlab::{Graph, GraphFamily};

type Images = BTreeSet<(Vec<usize>, Vec<(usize, usize)>)>;

/// Copies as distinct (vertex set, edge set) images of injective maps.
fn brute_copies(h: &Graph, g: &Graph) -> (u128, u128) {
    fn go(h: &Graph, g: &Graph, map: &mut Vec<usize>, seen: &mut Images, maps: &mut u128) {
        let x = map.len();
        if x == h.n() {
            *maps += 1;
            let mut vs = map.clone();
            vs.sort_unstable();
            let mut es: Vec<_> = h.edges().map(|(a, b)| (map[a].min(map[b]), map[a].max(map[b]))).collect();
            es.sort_unstable();
            seen.insert((vs, es));
            return;
        }
        for v in 0..g.n() {
            if !map.contains(&v) && (0..x).all(|y| !h.has_edge(x, y) || g.has_edge(v, map[y])) {
                map.push(v);
                go(h, g, map, seen, maps);
                map.pop();
            }
        }
    }
    let mut seen = BTreeSet::new();
    let mut maps = 0;
    go(h, g, &mut Vec::new(), &mut seen, &mut maps);
    (seen.len() as u128, maps)
}

#[test]
fn multipartite_shortcut_matches_generic_count() {
    let none = GraphFamily::default();
    let patterns: Vec<Graph> = (1..=5).flat_map(|n| classes(n, &none)).collect();
    for n in 1..=10 {
        for p in partitions_at_most(n, n) {
            let k = complete_multipartite(&p).unwrap();
            for h in &patterns {
                assert_eq!(count_copies_multipartite(h, &p), count_copies(h, &k), "{h:?} in {p}");
            }
        }
    }
}

#[test]
fn identity_exhaustive_on_six_vertex_hosts() {
    let none = GraphFamily::default();
    let patterns: Vec<Graph> = (1..=5).flat_map(|n| classes(n, &none)).collect();
    let hosts: Vec<Graph> = (1..=6).flat_map(|n| classes(n, &none)).collect();
    for h in &patterns {
        let a = automorphism_count(h);
        for g in &hosts {
            let (copies, maps) = brute_copies(h, g);
            assert_eq!(count_injective(h, g), maps);
            assert_eq!(maps, a * copies);
        }
    }
}

fn pattern_without_isolated() -> impl Strategy<Value = Graph> {
    graph_strategy(2, 4).prop_filter("no isolated vertex", |h| h.min_degree().is_some_and(|d| d > 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn injective_equals_automorphisms_times_copies(h in graph_strategy(1, 5), g in graph_strategy(0, 8)) {
        let (copies, maps) = brute_copies(&h, &g);
        prop_assert_eq!(count_injective(&h, &g), maps);
        prop_assert_eq!(count_copies(&h, &g), copies);
        prop_assert_eq!(maps, automorphism_count(&h) * copies);
    }

    #[test]
    fn vertex_counts_sum_to_h_times_total(h in graph_strategy(1, 4), g in graph_strategy(1, 8)) {
        let total: u128 = (0..g.n()).map(|v| inj_through_vertex(&h, &g, v).unwrap()).sum();
        prop_assert_eq!(total, h.n() as u128 * count_injective(&h, &g));
    }

    #[test]
    fn edge_counts_sum_to_edges_times_copies(h in graph_strategy(2, 4), g in graph_strategy(2, 8)) {
        let total: u128 = g.edges().map(|e| copies_through_edge(&h, &g, e).unwrap()).sum();
        prop_assert_eq!(total, h.edge_count() as u128 * count_copies(&h, &g));
    }

    #[test]
    fn vertex_count_upper_bound(h in pattern_without_isolated(), g in graph_strategy(1, 8)) {
        let (n, hv) = (g.n() as i128, h.n() as i128);
        for v in 0..g.n() {
            let bound = hv * n.pow(h.n() as u32 - 1) - (n - g.degree(v) as i128) * n.pow(h.n() as u32 - 2);
            prop_assert!((inj_through_vertex(&h, &g, v).unwrap() as i128) <= bound);
        }
    }

    #[test]
    fn pair_counts_are_symmetric(h in graph_strategy(2, 4), g in graph_strategy(2, 7)) {
        let (u, v) = (0, g.n() - 1);
        prop_assert_eq!(inj_through_pair(&h, &g, u, v).unwrap(), inj_through_pair(&h, &g, v, u).unwrap());
        prop_assert!(copies_through_pair(&h, &g, u, v).unwrap() <= copies_through_vertex(&h, &g, u).unwrap());
    }
}
