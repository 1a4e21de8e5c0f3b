//! Edit distance to complete multipartite graphs, maximum `r`-partite
//! subgraphs, and density measures.
//!
//! Exact searches enumerate set partitions as restricted growth strings
//! (vertex 0 in part 0, each later vertex in a used part or the next new one)
//! with a branch-and-bound cut. Among optimal partitions the lexicographically
//! smallest string is returned.

use num_rational::Ratio;

use crate::counting::{count_injective, inj_multipartite};
use crate::error::{Error, Result};
use crate::graph::{bit, chromatic_number, complete, contains_subgraph, low_mask, Graph, PartComposition};

/// Largest vertex count searched exactly unless configured otherwise.
pub const DEFAULT_EXACT_CEILING: usize = 12;

const RGS_DIGITS: &[u8; 64] = b"0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ+/";

/// A map from vertices to parts `0..r`. Parts may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionAssignment {
    part_of: Vec<usize>,
    r: usize,
}

impl PartitionAssignment {
    pub fn new(part_of: Vec<usize>, r: usize) -> Result<Self> {
        if r == 0 && !part_of.is_empty() {
            return Err(Error::ZeroParts);
        }
        if let Some(&p) = part_of.iter().find(|&&p| p >= r) {
            return Err(Error::Precondition(format!("part index {p} not below r = {r}")));
        }
        Ok(PartitionAssignment { part_of, r })
    }

    pub fn part_of(&self) -> &[usize] {
        &self.part_of
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.part_of.len()
    }

    /// Vertex sets of the parts as bitmasks, indexed by part.
    pub fn part_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.r];
        for (v, &p) in self.part_of.iter().enumerate() {
            masks[p] |= bit(v);
        }
        masks
    }

    /// Sizes of the non-empty parts, in order of first vertex.
    pub fn composition(&self) -> PartComposition {
        let rgs = self.normalized();
        let used = rgs.part_of.iter().max().map_or(0, |&m| m + 1);
        let mut sizes = vec![0; used];
        for &p in &rgs.part_of {
            sizes[p] += 1;
        }
        PartComposition::new(sizes).expect("used parts are non-empty")
    }

    /// Relabels parts by first occurrence, giving a restricted growth string.
    pub fn normalized(&self) -> PartitionAssignment {
        let mut relabel = vec![usize::MAX; self.r];
        let mut next = 0;
        let part_of = self
            .part_of
            .iter()
            .map(|&p| {
                if relabel[p] == usize::MAX {
                    relabel[p] = next;
                    next += 1;
                }
                relabel[p]
            })
            .collect();
        PartitionAssignment { part_of, r: self.r }
    }

    /// The restricted growth string, one character per vertex.
    pub fn rgs_string(&self) -> String {
        self.normalized().part_of.iter().map(|&p| RGS_DIGITS[p] as char).collect()
    }
}

/// Whether a result was proven optimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exact,
    Heuristic,
}

impl SearchMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchMode::Exact => "exact",
            SearchMode::Heuristic => "heuristic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    pub distance: usize,
    pub deletions: usize,
    pub additions: usize,
    pub assignment: PartitionAssignment,
    pub mode: SearchMode,
}

/// Exact search limit and what to do above it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub exact_ceiling: usize,
    /// Above the ceiling: local search when true, an error when false.
    pub allow_heuristic: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { exact_ceiling: DEFAULT_EXACT_CEILING, allow_heuristic: false }
    }
}

/// `|E(G1) Δ E(G2)|` under the identity labeling.
pub fn edit_distance_labeled(g1: &Graph, g2: &Graph) -> Result<usize> {
    if g1.n() != g2.n() {
        return Err(Error::OrderMismatch { left: g1.n(), right: g2.n() });
    }
    Ok((0..g1.n()).map(|v| (g1.neighbors_mask(v) ^ g2.neighbors_mask(v)).count_ones() as usize).sum::<usize>() / 2)
}

/// Cost of turning `g` into the complete multipartite graph with parts `p`.
pub fn partition_cost(g: &Graph, p: &PartitionAssignment) -> Result<DistanceResult> {
    if p.n() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), got: p.n() });
    }
    let masks = p.part_masks();
    let mut within = 0;
    let mut cross_non_edges = 0;
    for v in 0..g.n() {
        let same = masks[p.part_of[v]];
        let later = !low_mask(v + 1) & g.vertex_mask();
        within += (g.neighbors_mask(v) & same & later).count_ones() as usize;
        cross_non_edges += (!g.neighbors_mask(v) & !same & later).count_ones() as usize;
    }
    Ok(DistanceResult {
        distance: within + cross_non_edges,
        deletions: within,
        additions: cross_non_edges,
        assignment: p.clone(),
        mode: SearchMode::Exact,
    })
}

/// Branch-and-bound over restricted growth strings.
struct PartitionSearch<'a> {
    g: &'a Graph,
    r: usize,
    /// Count cross-part non-edges (edit distance) or only within-part edges (cut).
    count_additions: bool,
    /// Required multiset of part sizes, largest first.
    sizes: Option<Vec<usize>>,
    part_of: Vec<usize>,
    masks: Vec<u64>,
    best_cost: usize,
    best: Option<Vec<usize>>,
}

impl PartitionSearch<'_> {
    fn place_cost(&self, v: usize, part: u64, assigned: u64) -> usize {
        let nb = self.g.neighbors_mask(v);
        let mut c = (nb & part).count_ones() as usize;
        if self.count_additions {
            c += (!nb & assigned & !part).count_ones() as usize;
        }
        c
    }

    fn fits(&self, size_after: usize) -> bool {
        match &self.sizes {
            None => true,
            Some(s) => size_after <= s[0],
        }
    }

    fn lower_bound(&self, next: usize, used: usize, assigned: u64) -> usize {
        let open_new = used < self.max_parts();
        (next..self.g.n())
            .map(|w| {
                let existing = self.masks[..used].iter().map(|&m| self.place_cost(w, m, assigned)).min();
                let fresh = open_new.then(|| self.place_cost(w, 0, assigned));
                existing.into_iter().chain(fresh).min().unwrap_or(0)
            })
            .sum()
    }

    fn max_parts(&self) -> usize {
        match &self.sizes {
            Some(s) => s.len(),
            None => self.r,
        }
    }

    fn sizes_match(&self, used: usize) -> bool {
        let Some(target) = &self.sizes else { return true };
        let mut got: Vec<usize> = self.masks[..used].iter().map(|m| m.count_ones() as usize).collect();
        got.sort_unstable_by(|a, b| b.cmp(a));
        &got == target
    }

    fn dfs(&mut self, v: usize, used: usize, cost: usize) {
        let n = self.g.n();
        if v == n {
            if cost < self.best_cost && self.sizes_match(used) {
                self.best_cost = cost;
                self.best = Some(self.part_of.clone());
            }
            return;
        }
        let assigned = low_mask(v);
        if cost + self.lower_bound(v, used, assigned) >= self.best_cost {
            return;
        }
        let top = if used < self.max_parts() { used + 1 } else { used };
        for p in 0..top {
            let size_after = self.masks[p].count_ones() as usize + 1;
            if !self.fits(size_after) {
                continue;
            }
            let add = self.place_cost(v, self.masks[p], assigned);
            if cost + add >= self.best_cost {
                continue;
            }
            self.part_of[v] = p;
            self.masks[p] |= bit(v);
            self.dfs(v + 1, used.max(p + 1), cost + add);
            self.masks[p] &= !bit(v);
        }
    }
}

/// Runs the exact search with `upper` as a known achievable cost.
fn exact_search(
    g: &Graph,
    r: usize,
    count_additions: bool,
    sizes: Option<Vec<usize>>,
    upper: usize,
) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let max_parts = sizes.as_ref().map_or(r, |s| s.len());
    let mut search = PartitionSearch {
        g,
        r,
        count_additions,
        sizes,
        part_of: vec![0; n],
        masks: vec![0; max_parts.max(1)],
        best_cost: upper + 1,
        best: None,
    };
    search.dfs(0, 0, 0);
    search.best.expect("upper bound is achievable")
}

/// Cost change score of putting `v` into `part` (smaller is better).
fn move_score(g: &Graph, v: usize, part: u64) -> i64 {
    let others = part & !bit(v);
    2 * (g.neighbors_mask(v) & others).count_ones() as i64 - others.count_ones() as i64
}

/// First-fit proper colouring with at most `r` colours, falling back to the
/// part with fewest neighbours, then single-vertex moves until no move
/// lowers the cost.
fn heuristic_multipartite(g: &Graph, r: usize) -> Vec<usize> {
    let n = g.n();
    let mut masks = vec![0u64; r];
    let mut part_of = vec![0; n];
    for v in 0..n {
        let nb = g.neighbors_mask(v);
        let p = (0..r)
            .find(|&p| masks[p] & nb == 0)
            .unwrap_or_else(|| (0..r).min_by_key(|&p| ((masks[p] & nb).count_ones(), p)).expect("r >= 1"));
        part_of[v] = p;
        masks[p] |= bit(v);
    }
    loop {
        let mut moved = false;
        for v in 0..n {
            let here = part_of[v];
            let current = move_score(g, v, masks[here]);
            let (score, p) = (0..r).map(|p| (move_score(g, v, masks[p]), p)).min().expect("r >= 1");
            if score < current {
                masks[here] &= !bit(v);
                masks[p] |= bit(v);
                part_of[v] = p;
                moved = true;
            }
        }
        if !moved {
            return part_of;
        }
    }
}

fn assignment_cost(g: &Graph, part_of: &[usize], r: usize) -> usize {
    let p = PartitionAssignment::new(part_of.to_vec(), r).expect("valid parts");
    partition_cost(g, &p).expect("same order").distance
}

/// Fills parts of the prescribed sizes greedily, then swaps vertex pairs
/// between parts until no swap lowers the cost.
fn heuristic_sized(g: &Graph, sizes: &[usize]) -> Vec<usize> {
    let n = g.n();
    let r = sizes.len();
    let mut masks = vec![0u64; r];
    let mut part_of = vec![0; n];
    for v in 0..n {
        let nb = g.neighbors_mask(v);
        let p = (0..r)
            .filter(|&p| (masks[p].count_ones() as usize) < sizes[p])
            .min_by_key(|&p| ((masks[p] & nb).count_ones(), p))
            .expect("sizes sum to n");
        part_of[v] = p;
        masks[p] |= bit(v);
    }
    let mut cost = assignment_cost(g, &part_of, r);
    loop {
        let mut improved = false;
        for a in 0..n {
            for b in a + 1..n {
                if part_of[a] == part_of[b] {
                    continue;
                }
                part_of.swap(a, b);
                let c = assignment_cost(g, &part_of, r);
                if c < cost {
                    cost = c;
                    improved = true;
                } else {
                    part_of.swap(a, b);
                }
            }
        }
        if !improved {
            return part_of;
        }
    }
}

fn finish(g: &Graph, part_of: Vec<usize>, r: usize, mode: SearchMode) -> DistanceResult {
    let assignment = PartitionAssignment::new(part_of, r).expect("valid parts").normalized();
    let mut result = partition_cost(g, &assignment).expect("same order");
    result.mode = mode;
    result
}

fn choose_mode(n: usize, config: &SearchConfig) -> Result<SearchMode> {
    if n <= config.exact_ceiling {
        Ok(SearchMode::Exact)
    } else if config.allow_heuristic {
        Ok(SearchMode::Heuristic)
    } else {
        Err(Error::CeilingExceeded { n, ceiling: config.exact_ceiling })
    }
}

/// Minimum edit distance from `g` to a complete multipartite graph with at
/// most `r` parts.
pub fn nearest_complete_multipartite(g: &Graph, r: usize, config: &SearchConfig) -> Result<DistanceResult> {
    if r == 0 {
        return Err(Error::ZeroParts);
    }
    let mode = choose_mode(g.n(), config)?;
    let start = heuristic_multipartite(g, r);
    let part_of = match mode {
        SearchMode::Heuristic => start,
        SearchMode::Exact => exact_search(g, r, true, None, assignment_cost(g, &start, r)),
    };
    Ok(finish(g, part_of, r, mode))
}

/// Minimum edit distance from `g` to a relabeling of the Turán graph `T(n, r)`.
pub fn nearest_turan(g: &Graph, r: usize, config: &SearchConfig) -> Result<DistanceResult> {
    let sizes = PartComposition::turan(g.n(), r)?.parts().to_vec();
    let mode = choose_mode(g.n(), config)?;
    let start = heuristic_sized(g, &sizes);
    let slots = sizes.len().max(1);
    let part_of = match mode {
        SearchMode::Heuristic => start,
        SearchMode::Exact => exact_search(g, r, true, Some(sizes), assignment_cost(g, &start, slots)),
    };
    Ok(finish(g, part_of, r, mode))
}

/// A partition into at most `r` parts maximizing the number of cross-part
/// edges, and that number.
pub fn max_rpartite_subgraph(g: &Graph, r: usize, ceiling: usize) -> Result<(PartitionAssignment, usize)> {
    if r == 0 {
        return Err(Error::ZeroParts);
    }
    if g.n() > ceiling {
        return Err(Error::CeilingExceeded { n: g.n(), ceiling });
    }
    let start = heuristic_multipartite(g, r);
    let within = |part_of: &[usize]| {
        let p = PartitionAssignment::new(part_of.to_vec(), r).expect("valid parts");
        partition_cost(g, &p).expect("same order").deletions
    };
    let part_of = exact_search(g, r, false, None, within(&start));
    let kept = g.edge_count() - within(&part_of);
    let assignment = PartitionAssignment::new(part_of, r).expect("valid parts").normalized();
    Ok((assignment, kept))
}

/// Number of edges of the Turán graph `T(n, r)`.
pub fn turan_edge_count(n: usize, r: usize) -> Result<usize> {
    let parts = PartComposition::turan(n, r)?;
    Ok((n * n - parts.parts().iter().map(|p| p * p).sum::<usize>()) / 2)
}

/// Both sides of `e(G) - e(G0) <= e(T(n, r)) - e(G)` for a largest
/// `r`-partite subgraph `G0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FurediGap {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

pub fn furedi_gap(g: &Graph, r: usize, ceiling: usize) -> Result<FurediGap> {
    if r == 0 {
        return Err(Error::ZeroParts);
    }
    if contains_subgraph(g, &complete(r + 1)?) {
        return Err(Error::Precondition(format!("graph contains K{}", r + 1)));
    }
    let (_, kept) = max_rpartite_subgraph(g, r, ceiling)?;
    let e = g.edge_count() as i64;
    let lhs = e - kept as i64;
    let rhs = turan_edge_count(g.n(), r)? as i64 - e;
    Ok(FurediGap { lhs, rhs, holds: lhs <= rhs })
}

/// Smallest `beta` with every degree at least `(1 - beta) n`: `1 - delta/n`.
pub fn beta_density(g: &Graph) -> Result<Ratio<i64>> {
    let delta = g
        .min_degree()
        .ok_or_else(|| Error::Precondition("density of the graph on no vertices".into()))?;
    Ok(Ratio::from_integer(1) - Ratio::new(delta as i64, g.n() as i64))
}

/// Both sides of
/// `inj(H, T(n,r)) - inj(H, G) >= 2 e(H) (1 - 3 beta h^3) (e(T(n,r)) - e(G)) n^(h-2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensiCheck {
    pub beta: Ratio<i64>,
    pub lhs: i128,
    pub rhs: Ratio<i128>,
    pub holds: bool,
}

/// Evaluates the injective-count inequality exactly. Requires `G` to be
/// `r`-partite with `beta_density(G) <= 1/4` and `H` to have an edge.
pub fn densi_inequality_check(h: &Graph, g: &Graph, r: usize) -> Result<DensiCheck> {
    if r == 0 {
        return Err(Error::ZeroParts);
    }
    if h.edge_count() == 0 {
        return Err(Error::Precondition("pattern has no edge".into()));
    }
    let beta = beta_density(g)?;
    if beta > Ratio::new(1, 4) {
        return Err(Error::Precondition(format!("beta = {beta} exceeds 1/4")));
    }
    if chromatic_number(g) > r {
        return Err(Error::Precondition(format!("graph is not {r}-partite")));
    }
    let n = g.n();
    let turan = PartComposition::turan(n, r)?;
    let lhs = inj_multipartite(h, &turan) as i128 - count_injective(h, g) as i128;
    let hv = h.n() as i128;
    let beta_wide = Ratio::new(*beta.numer() as i128, *beta.denom() as i128);
    let factor = Ratio::from_integer(1) - Ratio::from_integer(3 * hv * hv * hv) * beta_wide;
    let gap = turan_edge_count(n, r)? as i128 - g.edge_count() as i128;
    let power = (n as i128)
        .checked_pow(h.n() as u32 - 2)
        .ok_or_else(|| Error::Precondition("n^(h-2) overflows".into()))?;
    let rhs = Ratio::from_integer(2 * h.edge_count() as i128 * gap * power) * factor;
    Ok(DensiCheck { beta, lhs, holds: Ratio::from_integer(lhs) >= rhs, rhs })
}
