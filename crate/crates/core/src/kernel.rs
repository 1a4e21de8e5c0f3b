//! Backtracking search for injective homomorphisms (embeddings) of a pattern
//! into a host, with candidate sets computed as intersections of host
//! adjacency bitsets.

use crate::graph::{bit, Bits, Graph};

/// `m * (m-1) * ... * (m-k+1)`, zero when `k > m`.
pub(crate) fn falling(m: usize, k: usize) -> u128 {
    if k > m {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (m - i) as u128)
}

/// A compiled search plan for one (pattern, host, pins) triple.
pub(crate) struct Embedder<'a> {
    host: &'a Graph,
    /// Pattern vertices in search order; unpinned isolated vertices are excluded.
    order: Vec<usize>,
    /// For each position, the earlier positions joined to it in the pattern.
    back: Vec<Vec<usize>>,
    /// Host vertices allowed at each position (pin and degree filters).
    allowed: Vec<u64>,
    /// Unpinned isolated pattern vertices, placed by a falling factorial.
    tail: usize,
    /// Set when the pins are contradictory.
    infeasible: bool,
}

impl<'a> Embedder<'a> {
    /// `pins` fixes pattern vertex `x` to host vertex `y` for each `(x, y)`.
    pub(crate) fn new(pattern: &Graph, host: &'a Graph, pins: &[(usize, usize)]) -> Self {
        let h = pattern.n();
        let mut infeasible = pattern.n() > host.n();
        let mut pin_of = vec![None; h];
        let mut pinned_hosts = 0u64;
        for &(x, y) in pins {
            debug_assert!(x < h && y < host.n());
            if pin_of[x].is_some() || pinned_hosts & bit(y) != 0 {
                infeasible = true;
            }
            pin_of[x] = Some(y);
            pinned_hosts |= bit(y);
        }

        let mut placed = vec![false; h];
        let mut order = Vec::with_capacity(h);
        for &(x, _) in pins {
            if !placed[x] {
                placed[x] = true;
                order.push(x);
            }
        }
        // Connectivity-favouring greedy order: most already-placed neighbours,
        // then highest degree, then lowest label.
        let mut placed_mask: u64 = order.iter().fold(0, |m, &x| m | bit(x));
        loop {
            let next = (0..h)
                .filter(|&x| !placed[x] && pattern.degree(x) > 0)
                .max_by_key(|&x| {
                    let back = (pattern.neighbors_mask(x) & placed_mask).count_ones();
                    (back, pattern.degree(x), std::cmp::Reverse(x))
                });
            match next {
                Some(x) => {
                    placed[x] = true;
                    placed_mask |= bit(x);
                    order.push(x);
                }
                None => break,
            }
        }
        let tail = placed.iter().filter(|&&p| !p).count();

        let mut position = vec![usize::MAX; h];
        for (i, &x) in order.iter().enumerate() {
            position[x] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                pattern.neighbors(x).map(|y| position[y]).filter(|&j| j < i).collect()
            })
            .collect();

        let host_degrees = host.degrees();
        let allowed = order
            .iter()
            .map(|&x| {
                let need = pattern.degree(x);
                let by_degree = (0..host.n())
                    .filter(|&v| host_degrees[v] >= need)
                    .fold(0u64, |m, v| m | bit(v));
                match pin_of[x] {
                    Some(y) => by_degree & bit(y),
                    None => by_degree & !pinned_hosts,
                }
            })
            .collect();

        Embedder { host, order, back, allowed, tail, infeasible }
    }

    /// Number of injective homomorphisms honouring the pins.
    pub(crate) fn count(&self) -> u128 {
        self.count_up_to(u128::MAX)
    }

    /// True iff at least one embedding exists.
    pub(crate) fn exists(&self) -> bool {
        self.count_up_to(1) > 0
    }

    /// Counts embeddings, stopping early once `limit` is reached.
    pub(crate) fn count_up_to(&self, limit: u128) -> u128 {
        if self.infeasible {
            return 0;
        }
        let mut images = [0usize; 64];
        let mut acc = 0u128;
        self.step(0, &mut images, 0, limit, &mut acc);
        acc
    }

    fn candidates(&self, pos: usize, images: &[usize; 64], used: u64) -> u64 {
        let mut cand = self.allowed[pos] & !used;
        for &j in &self.back[pos] {
            cand &= self.host.neighbors_mask(images[j]);
        }
        cand
    }

    fn step(&self, pos: usize, images: &mut [usize; 64], used: u64, limit: u128, acc: &mut u128) {
        let free = self.host.n() - used.count_ones() as usize;
        if pos == self.order.len() {
            *acc = acc.saturating_add(falling(free, self.tail));
            return;
        }
        let cand = self.candidates(pos, images, used);
        if cand == 0 {
            return;
        }
        if pos + 1 == self.order.len() {
            let per = falling(free - 1, self.tail);
            *acc = acc.saturating_add(cand.count_ones() as u128 * per);
            return;
        }
        for c in Bits(cand) {
            images[pos] = c;
            self.step(pos + 1, images, used | bit(c), limit, acc);
            if *acc >= limit {
                return;
            }
        }
    }
}
