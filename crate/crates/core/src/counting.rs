//! Exact counts of copies and injective homomorphisms of a pattern `H` in a
//! host `G`, globally and localized at a vertex, a vertex pair or an edge.
//!
//! Everything goes through one embedding kernel: copies are injective
//! homomorphisms divided by `|Aut(H)|`, which is exact by orbit-stabilizer.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, PartComposition};
use crate::kernel::{falling, Embedder};

/// `copies = N(H, G)`, `injective = inj(H, G)`, `automorphisms = a(H)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub copies: u128,
    pub injective: u128,
    pub automorphisms: u128,
}

impl std::fmt::Display for CountReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "copies={} inj={} aut={}", self.copies, self.injective, self.automorphisms)
    }
}

pub fn count_report(h: &Graph, g: &Graph) -> CountReport {
    let injective = count_injective(h, g);
    let automorphisms = automorphism_count(h);
    CountReport { copies: injective / automorphisms, injective, automorphisms }
}

/// Number of injective edge-preserving maps `V(H) -> V(G)`.
pub fn count_injective(h: &Graph, g: &Graph) -> u128 {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return 0;
    }
    Embedder::new(h, g, &[]).count()
}

/// `|Aut(H)|`, counted as the injective homomorphisms of `H` into itself.
pub fn automorphism_count(h: &Graph) -> u128 {
    Embedder::new(h, h, &[]).count()
}

/// Number of subgraphs of `G` isomorphic to `H`.
pub fn count_copies(h: &Graph, g: &Graph) -> u128 {
    let inj = count_injective(h, g);
    if inj == 0 {
        0
    } else {
        inj / automorphism_count(h)
    }
}

/// Injective homomorphisms `H -> G` whose image contains `v`.
pub fn inj_through_vertex(h: &Graph, g: &Graph, v: usize) -> Result<u128> {
    g.check_vertex(v)?;
    Ok((0..h.n()).map(|x| Embedder::new(h, g, &[(x, v)]).count()).sum())
}

/// Copies of `H` in `G` that use vertex `v`.
pub fn copies_through_vertex(h: &Graph, g: &Graph, v: usize) -> Result<u128> {
    Ok(inj_through_vertex(h, g, v)? / automorphism_count(h))
}

/// Injective homomorphisms whose image contains both `u` and `v`.
pub fn inj_through_pair(h: &Graph, g: &Graph, u: usize, v: usize) -> Result<u128> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let mut total = 0;
    for x in 0..h.n() {
        for y in 0..h.n() {
            if x != y {
                total += Embedder::new(h, g, &[(x, u), (y, v)]).count();
            }
        }
    }
    Ok(total)
}

/// Copies of `H` in `G` that use both `u` and `v`.
pub fn copies_through_pair(h: &Graph, g: &Graph, u: usize, v: usize) -> Result<u128> {
    Ok(inj_through_pair(h, g, u, v)? / automorphism_count(h))
}

/// Copies of `H` in `G` that contain the edge `e` of `G`.
pub fn copies_through_edge(h: &Graph, g: &Graph, e: Edge) -> Result<u128> {
    let (a, b) = e;
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if !g.has_edge(a, b) {
        return Err(Error::NotAnEdge(a, b));
    }
    // An injective map sends at most one pattern edge onto {a, b}.
    let mut inj = 0;
    for (x, y) in h.edges() {
        inj += Embedder::new(h, g, &[(x, a), (y, b)]).count();
        inj += Embedder::new(h, g, &[(y, a), (x, b)]).count();
    }
    Ok(inj / automorphism_count(h))
}

/// `inj(H, K)` for the complete multipartite `K` with the given part sizes:
/// a sum over proper colourings of `H` by parts of the product of falling
/// factorials of the part sizes.
pub fn inj_multipartite(h: &Graph, parts: &PartComposition) -> u128 {
    fn assign(h: &Graph, x: usize, colour: &mut [usize], used: &mut [usize], sizes: &[usize]) -> u128 {
        if x == h.n() {
            return sizes
                .iter()
                .zip(used.iter())
                .map(|(&s, &k)| falling(s, k))
                .product();
        }
        let mut total = 0;
        for c in 0..sizes.len() {
            if used[c] == sizes[c] {
                continue;
            }
            if h.neighbors(x).any(|y| y < x && colour[y] == c) {
                continue;
            }
            colour[x] = c;
            used[c] += 1;
            total += assign(h, x + 1, colour, used, sizes);
            used[c] -= 1;
        }
        total
    }
    let sizes = parts.parts();
    let mut colour = vec![usize::MAX; h.n()];
    let mut used = vec![0; sizes.len()];
    assign(h, 0, &mut colour, &mut used, sizes)
}

/// `N(H, K)` for the complete multipartite `K` with the given part sizes,
/// without building `K`.
pub fn count_copies_multipartite(h: &Graph, parts: &PartComposition) -> u128 {
    let inj = inj_multipartite(h, parts);
    if inj == 0 {
        0
    } else {
        inj / automorphism_count(h)
    }
}
