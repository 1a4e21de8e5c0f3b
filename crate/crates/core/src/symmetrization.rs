//! Symmetrization of one vertex to another, the copy-count-monotone process
//! that drives a `K_{r+1}`-free graph to a complete multipartite one, nice
//! families, and the odd-cycle bipartization pipeline.

use std::fmt::Write as _;

use rand::Rng;

use crate::counting::{copies_through_edge, copies_through_vertex, count_copies};
use crate::error::{Error, Result};
use crate::extremal::{enumerate_free_graphs, Ceilings, EnumerationSpec};
use crate::graph::{
    bit, complete, contains_subgraph, cycle, is_bipartite, shortest_odd_cycle, Bits, Edge, Graph,
    GraphFamily, PartComposition,
};
use crate::random::seeded;

/// Largest vertex count accepted by [`aes_min_degree_check`].
pub const AES_MAX_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetrizationStep {
    /// The vertex whose neighbourhood is replaced.
    pub source: usize,
    /// The vertex whose neighbourhood is copied.
    pub target: usize,
    pub copies_before: u128,
    pub copies_after: u128,
    /// Edges incident to `source` that were added or removed.
    pub edges_changed: usize,
}

/// How a run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Termination {
    /// The goal shape was reached (complete multipartite, or bipartite).
    Reached,
    /// The step budget ran out first.
    StepLimit,
    /// No admissible step exists but the goal was not reached.
    Stuck,
}

impl Termination {
    pub fn as_str(self) -> &'static str {
        match self {
            Termination::Reached => "reached",
            Termination::StepLimit => "step-limit",
            Termination::Stuck => "stuck",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizationTrace {
    pub initial: Graph,
    pub steps: Vec<SymmetrizationStep>,
    pub result: Graph,
    pub status: Termination,
}

impl SymmetrizationTrace {
    fn start(g: &Graph) -> Self {
        SymmetrizationTrace {
            initial: g.clone(),
            steps: Vec::new(),
            result: g.clone(),
            status: Termination::Reached,
        }
    }

    pub fn terminated_multipartite(&self) -> bool {
        self.status == Termination::Reached && is_complete_multipartite(&self.result).is_some()
    }

    /// Re-applies every step to `initial`; equals `result` for a valid trace.
    pub fn replay(&self) -> Result<Graph> {
        let mut g = self.initial.clone();
        for s in &self.steps {
            g = symmetrize(&g, s.source, s.target)?;
        }
        Ok(g)
    }

    /// Graphs `G_0, ..., G_l` visited by the run.
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        let mut out = vec![self.initial.clone()];
        for s in &self.steps {
            let next = symmetrize(out.last().expect("non-empty"), s.source, s.target)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Line-oriented log, one step per line.
    pub fn to_log(&self) -> String {
        let mut out = String::from("# step u v copies_before copies_after edges_changed\n");
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(
                out,
                "{} {} {} {} {} {}",
                i, s.source, s.target, s.copies_before, s.copies_after, s.edges_changed
            )
            .expect("writing to a String");
        }
        writeln!(out, "# status {}", self.status.as_str()).expect("writing to a String");
        out
    }
}

fn apply(g: &Graph, u: usize, v: usize) -> (Graph, usize) {
    let old = g.neighbors_mask(u);
    let new = g.neighbors_mask(v) & !bit(u);
    let mut out = g.clone();
    for w in Bits(old & !new) {
        out.clear_edge(u, w);
    }
    for w in Bits(new & !old) {
        out.set_edge(u, w);
    }
    (out, (old ^ new).count_ones() as usize)
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(())
}

/// Replaces the neighbourhood of `u` by that of `v`. If `u` and `v` are
/// adjacent the edge `uv` is deleted first, so the result always has
/// `N(u) = N(v) \ {u}` and `u`, `v` non-adjacent.
pub fn symmetrize(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    check_pair(g, u, v)?;
    Ok(apply(g, u, v).0)
}

/// As [`symmetrize`], but refuses adjacent pairs. Only this form preserves
/// freeness from a nice family.
pub fn symmetrize_nonadjacent(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    check_pair(g, u, v)?;
    if g.has_edge(u, v) {
        return Err(Error::Precondition(format!("vertices {u} and {v} are adjacent")));
    }
    Ok(apply(g, u, v).0)
}

/// Part sizes if non-adjacency is an equivalence relation, listed in order of
/// each part's smallest vertex; `None` otherwise.
pub fn is_complete_multipartite(g: &Graph) -> Option<PartComposition> {
    let all = g.vertex_mask();
    let mut seen = 0u64;
    let mut parts = Vec::new();
    for v in 0..g.n() {
        if seen & bit(v) != 0 {
            continue;
        }
        let class = all & !g.neighbors_mask(v);
        if Bits(class).any(|w| all & !g.neighbors_mask(w) != class) {
            return None;
        }
        seen |= class;
        parts.push(class.count_ones() as usize);
    }
    Some(PartComposition::new(parts).expect("classes are non-empty"))
}

/// Step budget used when none is given: `n^3`.
pub fn default_max_steps(n: usize) -> usize {
    n.pow(3).max(1)
}

/// Number of vertices sharing each vertex's neighbourhood (itself included).
fn twin_class_sizes(g: &Graph) -> Vec<usize> {
    (0..g.n())
        .map(|v| (0..g.n()).filter(|&w| g.neighbors_mask(w) == g.neighbors_mask(v)).count())
        .collect()
}

/// Drives a `K_{r+1}`-free graph towards a complete multipartite graph without
/// decreasing the number of copies of `h`.
///
/// Each step scans non-adjacent pairs with different neighbourhoods, ranks
/// them by the gap between their copies-through counts (largest first, then
/// lexicographically), and symmetrizes the endpoint with the smaller count to
/// the other one. On equal counts the vertex with the smaller twin class
/// moves, and on equal class sizes the lower index moves.
///
/// A step is taken only if it raises the copy count, or keeps it and lands
/// in a twin class at least as large as the one left. Twin classes are only
/// ever merged or joined by a non-adjacent step, so the second case strictly
/// raises the sum of squared class sizes; the pair (copies, that sum) grows
/// at every step and the run cannot cycle. Running out of steps or admissible
/// pairs is reported in [`SymmetrizationTrace::status`].
pub fn zykov_run(g: &Graph, h: &Graph, r: usize, max_steps: usize) -> Result<SymmetrizationTrace> {
    if r == 0 {
        return Err(Error::ZeroParts);
    }
    if contains_subgraph(g, &complete(r + 1)?) {
        return Err(Error::Precondition(format!("input graph contains K{}", r + 1)));
    }
    let mut trace = SymmetrizationTrace::start(g);
    let mut copies = count_copies(h, g);
    loop {
        let cur = &trace.result;
        if is_complete_multipartite(cur).is_some() {
            trace.status = Termination::Reached;
            return Ok(trace);
        }
        if trace.steps.len() >= max_steps {
            trace.status = Termination::StepLimit;
            return Ok(trace);
        }
        let through: Vec<u128> = (0..cur.n())
            .map(|w| copies_through_vertex(h, cur, w).expect("vertex in range"))
            .collect();
        let twins = twin_class_sizes(cur);
        let mut candidates: Vec<(u128, Edge, usize, usize)> = cur
            .non_edges()
            .filter(|&(a, b)| cur.neighbors_mask(a) != cur.neighbors_mask(b))
            .map(|(a, b)| {
                let a_moves = (through[a], twins[a]) <= (through[b], twins[b]);
                let (src, dst) = if a_moves { (a, b) } else { (b, a) };
                (through[dst] - through[src], (a, b), src, dst)
            })
            .collect();
        candidates.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));

        let mut chosen = None;
        for &(_, _, src, dst) in &candidates {
            let (next, changed) = apply(cur, src, dst);
            let after = count_copies(h, &next);
            if after > copies || (after == copies && twins[dst] >= twins[src]) {
                chosen = Some((next, src, dst, after, changed));
                break;
            }
        }
        let Some((next, src, dst, after, changed)) = chosen else {
            trace.status = Termination::Stuck;
            return Ok(trace);
        };
        trace.steps.push(SymmetrizationStep {
            source: src,
            target: dst,
            copies_before: copies,
            copies_after: after,
            edges_changed: changed,
        });
        trace.result = next;
        copies = after;
    }
}

/// The pair `(u, v)` of member `member` whose closure contains no earlier member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceWitness {
    pub member: usize,
    pub u: usize,
    pub v: usize,
    /// The member with `u` and `v` both joined to `N(u) ∪ N(v)`.
    pub closure: Graph,
    /// Indices of the earlier members, none of which the closure contains.
    pub absent: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NiceCheckReport {
    pub witnesses: Vec<NiceWitness>,
}

impl NiceCheckReport {
    pub fn is_nice(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Joins both `u` and `v` to every vertex of `N(u) ∪ N(v)`.
pub fn close_pair(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    check_pair(g, u, v)?;
    let union = (g.neighbors_mask(u) | g.neighbors_mask(v)) & !bit(u) & !bit(v);
    let mut out = g.clone();
    for w in Bits(union) {
        out.set_edge(u, w);
        out.set_edge(v, w);
    }
    Ok(out)
}

/// Checks every member and every non-adjacent pair in it: closing the pair
/// must produce a graph containing some earlier member.
pub fn nice_check(family: &GraphFamily) -> NiceCheckReport {
    let mut witnesses = Vec::new();
    for (i, f) in family.members().iter().enumerate() {
        for (u, v) in f.non_edges() {
            let closure = close_pair(f, u, v).expect("pair in range");
            let earlier = &family.members()[..i];
            if !earlier.iter().any(|e| contains_subgraph(&closure, e)) {
                witnesses.push(NiceWitness { member: i, u, v, closure, absent: (0..i).collect() });
            }
        }
    }
    NiceCheckReport { witnesses }
}

/// Which non-adjacent pairs a preservation check visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSelection {
    All,
    /// `trials` pairs drawn uniformly with replacement.
    Sample { trials: usize, seed: u64 },
}

/// Symmetrizes the selected non-adjacent pairs of a family-free `g`, in both
/// directions, and returns the first pair whose result is not family-free.
pub fn nice_preservation_counterexample(
    family: &GraphFamily,
    g: &Graph,
    selection: PairSelection,
) -> Result<Option<(usize, usize)>> {
    if !family.is_free(g) {
        return Err(Error::Precondition("graph is not free of the family".into()));
    }
    let pairs: Vec<Edge> = g.non_edges().collect();
    let chosen: Vec<Edge> = match selection {
        PairSelection::All => pairs,
        PairSelection::Sample { trials, seed } => {
            let mut rng = seeded(seed);
            if pairs.is_empty() {
                Vec::new()
            } else {
                (0..trials).map(|_| pairs[rng.gen_range(0..pairs.len())]).collect()
            }
        }
    };
    for (a, b) in chosen {
        for (u, v) in [(a, b), (b, a)] {
            if !family.is_free(&symmetrize_nonadjacent(g, u, v)?) {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

/// True iff no selected symmetrization leaves the family-free class.
pub fn nice_preservation_check(family: &GraphFamily, g: &Graph, selection: PairSelection) -> Result<bool> {
    Ok(nice_preservation_counterexample(family, g, selection)?.is_none())
}

/// Greedily deletes edges until no odd cycle of length at most `2k - 1` is
/// left. Each round takes a shortest odd cycle and deletes its edge lying on
/// the most short odd cycles (ties: smallest edge). Returns the remaining
/// graph and the deleted edges in order.
pub fn remove_short_odd_cycles(g: &Graph, k: usize) -> Result<(Graph, Vec<Edge>)> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let limit = 2 * k - 1;
    let patterns: Vec<Graph> = (3..=limit.min(g.n()))
        .step_by(2)
        .map(|len| cycle(len).expect("length at least 3"))
        .collect();
    let mut cur = g.clone();
    let mut deleted = Vec::new();
    while let Some(cyc) = shortest_odd_cycle(&cur) {
        if cyc.len() > limit {
            break;
        }
        let mut best: Option<(u128, Edge)> = None;
        for i in 0..cyc.len() {
            let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
            let e = (a.min(b), a.max(b));
            let hits: u128 = patterns
                .iter()
                .map(|p| copies_through_edge(p, &cur, e).expect("cycle edge"))
                .sum();
            let better = match best {
                None => true,
                Some((h, be)) => hits > h || (hits == h && e < be),
            };
            if better {
                best = Some((hits, e));
            }
        }
        let (_, e) = best.expect("cycle has edges");
        cur.clear_edge(e.0, e.1);
        deleted.push(e);
    }
    Ok((cur, deleted))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartizationRun {
    /// Edges removed to kill short odd cycles before any symmetrization.
    pub removed: Vec<Edge>,
    /// Symmetrization steps, starting from the graph after removal.
    pub trace: SymmetrizationTrace,
}

/// Deletes short odd cycles, then repeatedly symmetrizes a minimum-degree
/// vertex `u` to the vertex `v` lying on the most copies of `h` (ties: lowest
/// index; only vertices whose step changes the graph are eligible) until the
/// graph is bipartite.
pub fn bipartization_run(g: &Graph, h: &Graph, k: usize, max_steps: usize) -> Result<BipartizationRun> {
    if !is_bipartite(h) {
        return Err(Error::Precondition("pattern must be bipartite".into()));
    }
    if h.n() == 0 || h.min_degree() == Some(0) {
        return Err(Error::Precondition("pattern must have no isolated vertices".into()));
    }
    let (start, removed) = remove_short_odd_cycles(g, k)?;
    let mut trace = SymmetrizationTrace::start(&start);
    let mut copies = count_copies(h, &start);
    loop {
        let cur = &trace.result;
        if is_bipartite(cur) {
            trace.status = Termination::Reached;
            break;
        }
        if trace.steps.len() >= max_steps {
            trace.status = Termination::StepLimit;
            break;
        }
        let u = (0..cur.n()).min_by_key(|&w| (cur.degree(w), w)).expect("non-bipartite graph has vertices");
        let nu = cur.neighbors_mask(u);
        let target = (0..cur.n())
            .filter(|&w| w != u && (cur.has_edge(u, w) || cur.neighbors_mask(w) != nu))
            .map(|w| (copies_through_vertex(h, cur, w).expect("vertex in range"), w))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let Some((_, v)) = target else {
            trace.status = Termination::Stuck;
            break;
        };
        let (next, changed) = apply(cur, u, v);
        let after = count_copies(h, &next);
        trace.steps.push(SymmetrizationStep {
            source: u,
            target: v,
            copies_before: copies,
            copies_after: after,
            edges_changed: changed,
        });
        trace.result = next;
        copies = after;
    }
    Ok(BipartizationRun { removed, trace })
}

/// Outcome of the exhaustive minimum-degree scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AesReport {
    pub n: usize,
    pub k: usize,
    pub graphs_scanned: usize,
    pub non_bipartite: usize,
    /// Non-bipartite graphs whose minimum degree exceeds `2n / (2k + 1)`.
    pub counterexamples: Vec<Graph>,
}

impl AesReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Scans every graph on `n` vertices without odd cycles of length up to
/// `2k + 1`; each non-bipartite one must have a vertex of degree at most
/// `2n / (2k + 1)`. Refuses `n` above [`AES_MAX_N`].
pub fn aes_report(n: usize, k: usize) -> Result<AesReport> {
    if n > AES_MAX_N {
        return Err(Error::CeilingExceeded { n, ceiling: AES_MAX_N });
    }
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let spec = EnumerationSpec::exhaustive(n, GraphFamily::odd_cycles(k))
        .with_ceilings(Ceilings { general: AES_MAX_N, hard_pruning: AES_MAX_N });
    let graphs = enumerate_free_graphs(&spec)?.graphs;
    let mut report = AesReport { n, k, graphs_scanned: graphs.len(), non_bipartite: 0, counterexamples: Vec::new() };
    for g in graphs {
        if is_bipartite(&g) {
            continue;
        }
        report.non_bipartite += 1;
        let delta = g.min_degree().expect("non-bipartite graph has vertices");
        if delta * (2 * k + 1) > 2 * n {
            report.counterexamples.push(g);
        }
    }
    Ok(report)
}

pub fn aes_min_degree_check(n: usize, k: usize) -> Result<bool> {
    Ok(aes_report(n, k)?.holds())
}
