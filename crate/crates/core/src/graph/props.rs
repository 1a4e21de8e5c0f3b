use std::collections::VecDeque;

use super::{bit, Bits, Graph};
use crate::kernel::Embedder;

/// True iff some (not necessarily injective) edge-preserving map `source -> target`
/// exists, i.e. `source` is contained in a blowup of `target`.
pub fn has_homomorphism(source: &Graph, target: &Graph) -> bool {
    if source.n() == 0 {
        return true;
    }
    if target.n() == 0 {
        return false;
    }
    // Same greedy order as the embedding kernel: grow along edges.
    let n = source.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&x| placed & bit(x) == 0)
            .max_by_key(|&x| {
                let back = (source.neighbors_mask(x) & placed).count_ones();
                (back, source.degree(x), std::cmp::Reverse(x))
            })
            .expect("unplaced vertex");
        placed |= bit(next);
        order.push(next);
    }
    let mut position = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        position[x] = i;
    }
    let back: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &x)| source.neighbors(x).map(|y| position[y]).filter(|&j| j < i).collect())
        .collect();

    fn extend(pos: usize, back: &[Vec<usize>], target: &Graph, images: &mut Vec<usize>) -> bool {
        if pos == back.len() {
            return true;
        }
        let mut cand = target.vertex_mask();
        for &j in &back[pos] {
            cand &= target.neighbors_mask(images[j]);
        }
        for c in Bits(cand) {
            images[pos] = c;
            if extend(pos + 1, back, target, images) {
                return true;
            }
        }
        false
    }

    let mut images = vec![0; n];
    extend(0, &back, target, &mut images)
}

/// True iff `host` has a (not necessarily induced) subgraph isomorphic to `pattern`.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return false;
    }
    Embedder::new(pattern, host, &[]).exists()
}

/// True iff some copy of `pattern` in `host` uses vertex `v`.
pub(crate) fn contains_subgraph_through(host: &Graph, pattern: &Graph, v: usize) -> bool {
    if pattern.n() > host.n() {
        return false;
    }
    (0..pattern.n()).any(|x| Embedder::new(pattern, host, &[(x, v)]).exists())
}

/// Size of a largest clique.
pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, mut cand: u64, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            expand(g, cand & g.neighbors_mask(v), size + 1, best);
            cand &= !bit(v);
        }
    }
    let mut best = 0;
    expand(g, g.vertex_mask(), 0, &mut best);
    best
}

/// Exact chromatic number (0 for the graph on no vertices).
///
/// Branch-and-bound between the clique number and a DSATUR greedy colouring.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let lower = clique_number(g).max(1);
    let upper = dsatur_greedy(g);
    (lower..upper).find(|&k| colorable(g, k)).unwrap_or(upper)
}

fn saturation(g: &Graph, classes: &[u64], v: usize) -> usize {
    classes.iter().filter(|&&c| c & g.neighbors_mask(v) != 0).count()
}

fn pick_dsatur(g: &Graph, uncolored: u64, classes: &[u64]) -> usize {
    Bits(uncolored)
        .max_by_key(|&v| (saturation(g, classes, v), g.degree(v), std::cmp::Reverse(v)))
        .expect("uncoloured vertex")
}

fn dsatur_greedy(g: &Graph) -> usize {
    let mut classes: Vec<u64> = Vec::new();
    let mut uncolored = g.vertex_mask();
    while uncolored != 0 {
        let v = pick_dsatur(g, uncolored, &classes);
        match classes.iter().position(|&c| c & g.neighbors_mask(v) == 0) {
            Some(c) => classes[c] |= bit(v),
            None => classes.push(bit(v)),
        }
        uncolored &= !bit(v);
    }
    classes.len()
}

fn colorable(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, k: usize, uncolored: u64, classes: &mut Vec<u64>) -> bool {
        if uncolored == 0 {
            return true;
        }
        let v = pick_dsatur(g, uncolored, classes);
        for c in 0..classes.len() {
            if classes[c] & g.neighbors_mask(v) == 0 {
                classes[c] |= bit(v);
                if go(g, k, uncolored & !bit(v), classes) {
                    return true;
                }
                classes[c] &= !bit(v);
            }
        }
        // Opening a new colour class: all unused colours are interchangeable.
        if classes.len() < k {
            classes.push(bit(v));
            if go(g, k, uncolored & !bit(v), classes) {
                return true;
            }
            classes.pop();
        }
        false
    }
    go(g, k, g.vertex_mask(), &mut Vec::with_capacity(k))
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                    queue.push_back(y);
                } else if side[y] == side[x] {
                    return false;
                }
            }
        }
    }
    true
}

/// A shortest odd cycle as a vertex sequence, or `None` for bipartite graphs.
///
/// For each root a BFS is run; an edge between two vertices on the same layer
/// `d` closes an odd walk of length `2d + 1`. At the global minimum the two
/// tree paths are internally disjoint, so the walk is a cycle.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut found: Option<(usize, usize)> = None;
        'bfs: while let Some(x) = queue.pop_front() {
            if let Some((len, _)) = &best {
                if 2 * dist[x] + 1 >= *len {
                    break;
                }
            }
            for y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if dist[y] == dist[x] {
                    found = Some((x, y));
                    break 'bfs;
                }
            }
        }
        if let Some((x, y)) = found {
            let len = 2 * dist[x] + 1;
            if best.as_ref().is_none_or(|(b, _)| len < *b) {
                let mut left = vec![x];
                while *left.last().unwrap() != root {
                    left.push(parent[*left.last().unwrap()]);
                }
                let mut right = vec![y];
                while *right.last().unwrap() != root {
                    right.push(parent[*right.last().unwrap()]);
                }
                right.pop();
                left.reverse();
                // root ... x, then y ... back towards root
                let mut cyc = left;
                cyc.extend(right);
                best = Some((len, cyc));
            }
        }
    }
    best.map(|(_, c)| c)
}

/// Length of a shortest odd cycle; `None` iff the graph is bipartite.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    shortest_odd_cycle(g).map(|c| c.len())
}
