use super::{Edge, Graph, PartComposition};
use crate::error::{Error, Result};

pub fn make_graph(n: usize, edges: &[Edge]) -> Result<Graph> {
    Graph::from_edges(n, edges.iter().copied())
}

pub fn empty(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.set_edge(u, v);
        }
    }
    Ok(g)
}

/// The cycle `0-1-...-(n-1)-0`. Requires `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The path `0-1-...-(n-1)` on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Result<Graph> {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    complete_multipartite(&PartComposition::new(
        [a, b].into_iter().filter(|&p| p > 0).collect(),
    )?)
}

/// Complete multipartite graph; part `i` occupies a consecutive block of labels.
pub fn complete_multipartite(parts: &PartComposition) -> Result<Graph> {
    let n = parts.n();
    let mut g = Graph::empty(n)?;
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.parts().iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// The Turán graph `T(n, r)`: `n mod r` parts of size `ceil(n/r)` first, then the
/// parts of size `floor(n/r)`.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph> {
    complete_multipartite(&PartComposition::turan(n, r)?)
}

/// Replaces vertex `v` of `f` by an independent set of `multiplicities[v]`
/// vertices (consecutive labels) and every edge by a complete bipartite graph.
pub fn blowup(f: &Graph, multiplicities: &[usize]) -> Result<Graph> {
    if multiplicities.len() != f.n() {
        return Err(Error::LengthMismatch { expected: f.n(), got: multiplicities.len() });
    }
    if let Some(index) = multiplicities.iter().position(|&m| m == 0) {
        return Err(Error::ZeroEntry { index });
    }
    let total: usize = multiplicities.iter().sum();
    let mut g = Graph::empty(total)?;
    let mut start = Vec::with_capacity(f.n());
    let mut acc = 0;
    for &m in multiplicities {
        start.push(acc);
        acc += m;
    }
    for (u, v) in f.edges() {
        for a in start[u]..start[u] + multiplicities[u] {
            for b in start[v]..start[v] + multiplicities[v] {
                g.set_edge(a, b);
            }
        }
    }
    Ok(g)
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(p: &[usize]) -> PartComposition {
        PartComposition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn turan_examples() {
        assert_eq!(turan_graph(6, 3).unwrap().edge_count(), 12);
        assert_eq!(turan_graph(5, 3).unwrap().edge_count(), 8);
        assert_eq!(turan_graph(4, 1).unwrap().edge_count(), 0);
        assert_eq!(turan_graph(9, 3).unwrap().edge_count(), 27);
        assert_eq!(turan_graph(3, 0), Err(Error::ZeroParts));
    }

    #[test]
    fn multipartite_examples() {
        assert_eq!(complete_multipartite(&comp(&[2, 2])).unwrap(), cycle(4).unwrap().relabel(&[0, 2, 1, 3]).unwrap());
        assert_eq!(complete_multipartite(&comp(&[3, 2, 2])).unwrap().edge_count(), 16);
        assert_eq!(complete_multipartite(&comp(&[5])).unwrap().edge_count(), 0);
    }

    #[test]
    fn blowup_examples() {
        let k2 = complete(2).unwrap();
        assert_eq!(blowup(&k2, &[2, 2]).unwrap(), complete_multipartite(&comp(&[2, 2])).unwrap());
        let c5 = cycle(5).unwrap();
        assert_eq!(blowup(&c5, &[1; 5]).unwrap(), c5);
        assert!(matches!(blowup(&c5, &[1, 1, 0, 1, 1]), Err(Error::ZeroEntry { index: 2 })));
        assert!(matches!(blowup(&c5, &[1, 1]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn blowup_k3_by_brute_force_edge_listing() {
        // K3 with vertex 0 doubled: labels {0,1} <- 0, {2} <- 1, {3} <- 2.
        let g = blowup(&complete(3).unwrap(), &[2, 1, 1]).unwrap();
        let origin = [0, 0, 1, 2];
        let mut expected = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                if origin[a] != origin[b] {
                    expected.push((a, b));
                }
            }
        }
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), expected);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn petersen_is_cubic() {
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
    }
}
