mod common;

use common::{classes, graph_strategy};
use proptest::prelude::*;
use turanlab::counting::{copies_through_pair, copies_through_vertex, count_copies};
use turanlab::graph::{complete, complete_multipartite, cycle, odd_girth};
use turanlab::symmetrization::*;
use turanlab::{Graph, GraphFamily, PartComposition};

fn multipartite_pattern() -> impl Strategy<Value = Graph> {
    proptest::collection::vec(1usize..3, 1..4)
        .prop_filter("at most 7 vertices", |p| p.iter().sum::<usize>() <= 7)
        .prop_map(|p| complete_multipartite(&PartComposition::new(p).unwrap()).unwrap())
}

/// Copies through both `u` and `v` after `u` takes the neighbourhood of `v`.
fn copies_through_twins(h: &Graph, g: &Graph, u: usize, v: usize) -> u128 {
    let next = symmetrize_nonadjacent(g, u, v).unwrap();
    copies_through_pair(h, &next, u, v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn symmetrize_makes_twins(g in graph_strategy(2, 9), a in 0usize..9, b in 0usize..9) {
        let (u, v) = (a % g.n(), b % g.n());
        prop_assume!(u != v);
        let next = symmetrize(&g, u, v).unwrap();
        prop_assert!(!next.has_edge(u, v));
        prop_assert_eq!(next.neighbors_mask(u), next.neighbors_mask(v));
        for x in 0..g.n() {
            for y in 0..g.n() {
                if x != u && y != u {
                    prop_assert_eq!(next.has_edge(x, y), g.has_edge(x, y) && !(x == v && y == u));
                }
            }
        }
        prop_assert_eq!(symmetrize(&next, u, v).unwrap(), next);
    }

    #[test]
    fn nonadjacent_step_rejects_edges(g in graph_strategy(2, 8)) {
        for (u, v) in g.edges() {
            prop_assert!(symmetrize_nonadjacent(&g, u, v).is_err());
        }
    }

    /// The total moves by copies through `v` minus copies through `u`, with
    /// the pair's joint copies swapped for those of the new twin pair.
    #[test]
    fn count_change_for_multipartite_pattern(h in multipartite_pattern(), g in graph_strategy(2, 8)) {
        for (u, v) in g.non_edges() {
            let cu = copies_through_vertex(&h, &g, u).unwrap();
            let cv = copies_through_vertex(&h, &g, v).unwrap();
            let cuv = copies_through_pair(&h, &g, u, v).unwrap();
            let next = symmetrize_nonadjacent(&g, u, v).unwrap();
            let (removed, added) = (cu - cuv, cv - cuv);
            prop_assert_eq!(
                count_copies(&h, &next) + removed + cuv,
                count_copies(&h, &g) + added + copies_through_twins(&h, &g, u, v),
                "pair ({}, {})", u, v
            );
        }
    }

    /// For cliques no copy holds both non-adjacent vertices, so the step
    /// removes exactly the copies through `u` and adds those through `v`.
    #[test]
    fn count_change_for_clique_pattern(k in 1usize..5, g in graph_strategy(2, 8)) {
        let h = complete(k).unwrap();
        for (u, v) in g.non_edges() {
            let cu = copies_through_vertex(&h, &g, u).unwrap();
            let cv = copies_through_vertex(&h, &g, v).unwrap();
            let next = symmetrize_nonadjacent(&g, u, v).unwrap();
            prop_assert_eq!(count_copies(&h, &next) + cu, count_copies(&h, &g) + cv);
        }
    }

    /// Some direction of every non-adjacent step keeps the count.
    #[test]
    fn one_direction_never_loses_copies(h in multipartite_pattern(), g in graph_strategy(2, 8)) {
        let before = count_copies(&h, &g);
        for (u, v) in g.non_edges() {
            let forward = count_copies(&h, &symmetrize_nonadjacent(&g, u, v).unwrap());
            let backward = count_copies(&h, &symmetrize_nonadjacent(&g, v, u).unwrap());
            prop_assert!(forward.max(backward) >= before, "pair ({}, {})", u, v);
        }
    }

    #[test]
    fn zykov_trace_is_consistent(g in graph_strategy(1, 8), r in 2usize..4, k in 2usize..4) {
        let clique = complete(r + 1).unwrap();
        prop_assume!(!turanlab::graph::contains_subgraph(&g, &clique));
        let h = complete(k.min(r)).unwrap();
        let trace = zykov_run(&g, &h, r, default_max_steps(g.n())).unwrap();
        prop_assert_eq!(trace.status, Termination::Reached);
        prop_assert!(trace.terminated_multipartite());
        let parts = is_complete_multipartite(&trace.result).unwrap();
        prop_assert!(parts.len() <= r);
        prop_assert_eq!(trace.replay().unwrap(), trace.result.clone());
        let graphs = trace.graphs().unwrap();
        for (step, pair) in trace.steps.iter().zip(graphs.windows(2)) {
            prop_assert_eq!(step.copies_before, count_copies(&h, &pair[0]));
            prop_assert_eq!(step.copies_after, count_copies(&h, &pair[1]));
            prop_assert!(step.copies_after >= step.copies_before);
            prop_assert!(step.edges_changed > 0);
            prop_assert!(!turanlab::graph::contains_subgraph(&pair[1], &clique));
        }
    }

    #[test]
    fn short_odd_cycles_are_removed(g in graph_strategy(1, 10), k in 1usize..4) {
        let (out, removed) = remove_short_odd_cycles(&g, k).unwrap();
        prop_assert_eq!(out.edge_count() + removed.len(), g.edge_count());
        for &(a, b) in &removed {
            prop_assert!(g.has_edge(a, b) && !out.has_edge(a, b));
        }
        if let Some(girth) = odd_girth(&out) {
            prop_assert!(girth > 2 * k - 1);
        }
    }
}

#[test]
fn nice_families_preserve_freeness_exhaustively() {
    let cases = [
        (GraphFamily::new(vec![cycle(3).unwrap(), cycle(5).unwrap()]), 8),
        (GraphFamily::new(vec![complete(4).unwrap()]), 7),
    ];
    for (family, max_n) in cases {
        assert!(nice_check(&family).is_nice());
        for n in 2..=max_n {
            for g in classes(n, &family) {
                assert_eq!(nice_preservation_counterexample(&family, &g, PairSelection::All).unwrap(), None, "{g:?}");
            }
        }
    }
}

#[test]
fn odd_cycle_families_are_nice() {
    for k in 1..=4 {
        assert!(nice_check(&GraphFamily::odd_cycles(k)).is_nice(), "k={k}");
    }
}
