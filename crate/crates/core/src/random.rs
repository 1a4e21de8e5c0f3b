//! Seeded random graph generators. Every generator takes the RNG explicitly so
//! runs are reproducible from a single `u64` seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{contains_subgraph_through, Graph, GraphFamily};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform labeled graph when `p = 0.5`: each pair is an edge independently.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Random family-free process: pairs are visited in random order and an edge
/// is kept unless it creates a member of `family`. Stops after `max_edges`.
pub fn random_free_graph<R: Rng>(
    n: usize,
    family: &GraphFamily,
    max_edges: usize,
    rng: &mut R,
) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    let mut pairs: Vec<(usize, usize)> = g.non_edges().collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if g.edge_count() >= max_edges {
            break;
        }
        g.set_edge(u, v);
        // Any new copy uses both u and v; checking through u is enough.
        if family.members().iter().any(|f| contains_subgraph_through(&g, f, u)) {
            g.clear_edge(u, v);
        }
    }
    Ok(g)
}
