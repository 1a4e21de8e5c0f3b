//! Exhaustive enumeration of `F`-free graphs up to isomorphism, exact
//! generalized Turán numbers, the same maximum over complete multipartite
//! graphs, and the near-extremal profiles built on them.

use std::collections::BTreeMap;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::counting::{count_copies, count_copies_multipartite};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_labeling, complete, contains_subgraph, contains_subgraph_through,
    CanonicalForm, Graph, GraphFamily, PartComposition,
};
use crate::partition::{nearest_complete_multipartite, nearest_turan, SearchConfig};
use crate::random::{gnp, seeded};

/// Vertex-count limits for exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ceilings {
    pub general: usize,
    /// Applies when some forbidden member with an edge fits inside `K_3`,
    /// which keeps the free classes small.
    pub hard_pruning: usize,
}

impl Default for Ceilings {
    fn default() -> Self {
        Ceilings { general: 9, hard_pruning: 10 }
    }
}

impl Ceilings {
    /// One limit for every family.
    pub fn uniform(ceiling: usize) -> Self {
        Ceilings { general: ceiling, hard_pruning: ceiling }
    }

    pub fn for_family(&self, family: &GraphFamily) -> usize {
        let k3 = complete(3).expect("K3");
        let hard = family.members().iter().any(|f| f.edge_count() > 0 && contains_subgraph(&k3, f));
        if hard {
            self.hard_pruning.max(self.general)
        } else {
            self.general
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationMode {
    Exhaustive,
    /// Uniform labeled graphs, kept when free of the family.
    RandomSample { count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    pub forbidden: GraphFamily,
    pub mode: EnumerationMode,
    pub ceilings: Ceilings,
}

impl EnumerationSpec {
    pub fn exhaustive(n: usize, forbidden: GraphFamily) -> Self {
        EnumerationSpec { n, forbidden, mode: EnumerationMode::Exhaustive, ceilings: Ceilings::default() }
    }

    pub fn sample(n: usize, forbidden: GraphFamily, count: usize, seed: u64) -> Self {
        EnumerationSpec {
            n,
            forbidden,
            mode: EnumerationMode::RandomSample { count, seed },
            ceilings: Ceilings::default(),
        }
    }

    pub fn with_ceilings(mut self, ceilings: Ceilings) -> Self {
        self.ceilings = ceilings;
        self
    }

    pub fn ceiling(&self) -> usize {
        self.ceilings.for_family(&self.forbidden)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Exhaustive: canonical representatives sorted by canonical form.
    /// Sampled: accepted graphs as drawn, duplicates included.
    pub graphs: Vec<Graph>,
    /// Graphs drawn (sampling) or candidate extensions tried (exhaustive).
    pub attempts: usize,
}

impl Enumeration {
    /// Accepted graphs over attempts; meaningful for sampling.
    pub fn acceptance_rate(&self) -> Ratio<u64> {
        Ratio::new(self.graphs.len() as u64, self.attempts.max(1) as u64)
    }
}

fn canonical_pair(g: &Graph) -> (CanonicalForm, Graph) {
    let c = g.relabel(&canonical_labeling(g)).expect("labeling is a permutation");
    let form = crate::graph::canonical_form_of_canonical(&c);
    (form, c)
}

/// Adds one vertex in every possible way to every parent and keeps one
/// representative per isomorphism class. Every free graph on `m` vertices
/// arises, since deleting any vertex leaves a free graph on `m - 1`.
fn extend_level(parents: &[Graph], family: &GraphFamily) -> (Vec<Graph>, usize) {
    let per_parent: Vec<(Vec<(CanonicalForm, Graph)>, usize)> = parents
        .par_iter()
        .map(|p| {
            let m = p.n();
            let mut local = BTreeMap::new();
            let mut tried = 0;
            for mask in 0..(1u64 << m) {
                let child = p.with_vertex(mask).expect("below the vertex limit");
                tried += 1;
                if family.members().iter().any(|f| contains_subgraph_through(&child, f, m)) {
                    continue;
                }
                let (form, c) = canonical_pair(&child);
                local.entry(form).or_insert(c);
            }
            (local.into_iter().collect(), tried)
        })
        .collect();
    let mut merged = BTreeMap::new();
    let mut attempts = 0;
    for (list, tried) in per_parent {
        attempts += tried;
        for (form, g) in list {
            merged.entry(form).or_insert(g);
        }
    }
    (merged.into_values().collect(), attempts)
}

pub fn enumerate_free_graphs(spec: &EnumerationSpec) -> Result<Enumeration> {
    let family = &spec.forbidden;
    match spec.mode {
        EnumerationMode::Exhaustive => {
            let ceiling = spec.ceiling();
            if spec.n > ceiling {
                return Err(Error::CeilingExceeded { n: spec.n, ceiling });
            }
            if family.members().iter().any(|f| f.n() == 0) {
                return Ok(Enumeration { graphs: Vec::new(), attempts: 0 });
            }
            let mut level = vec![Graph::empty(0)?];
            let mut attempts = 0;
            for _ in 0..spec.n {
                let (next, tried) = extend_level(&level, family);
                level = next;
                attempts += tried;
            }
            Ok(Enumeration { graphs: level, attempts })
        }
        EnumerationMode::RandomSample { count, seed } => {
            let mut rng = seeded(seed);
            let mut graphs = Vec::new();
            for _ in 0..count {
                let g = gnp(spec.n, 0.5, &mut rng)?;
                if family.is_free(&g) {
                    graphs.push(g);
                }
            }
            Ok(Enumeration { graphs, attempts: count })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    /// `ex(n, H, F)`.
    pub value: u128,
    /// Canonical forms of every maximizer, sorted.
    pub extremal_graphs: Vec<CanonicalForm>,
    pub graphs_scanned: usize,
}

/// Copies of `h` in every free graph on `n` vertices, in enumeration order.
fn scan(n: usize, h: &Graph, forbidden: &GraphFamily, ceilings: Ceilings) -> Result<Vec<(Graph, u128)>> {
    let spec = EnumerationSpec::exhaustive(n, forbidden.clone()).with_ceilings(ceilings);
    let graphs = enumerate_free_graphs(&spec)?.graphs;
    Ok(graphs
        .into_par_iter()
        .map(|g| {
            let c = count_copies(h, &g);
            (g, c)
        })
        .collect())
}

/// The largest number of copies of `h` in an `n`-vertex graph free of every
/// member of `forbidden`, with all maximizers.
pub fn ex_exact(n: usize, h: &Graph, forbidden: &GraphFamily, ceilings: Ceilings) -> Result<ExtremalResult> {
    let rows = scan(n, h, forbidden, ceilings)?;
    let value = rows.iter().map(|(_, c)| *c).max().unwrap_or(0);
    let mut extremal_graphs: Vec<CanonicalForm> = rows
        .iter()
        .filter(|(_, c)| *c == value)
        .map(|(g, _)| crate::graph::canonical_form_of_canonical(g))
        .collect();
    extremal_graphs.sort();
    Ok(ExtremalResult { value, extremal_graphs, graphs_scanned: rows.len() })
}

/// Partitions of `n` into at most `r` positive parts, each listed largest
/// first, in lexicographic order.
pub fn partitions_at_most(n: usize, r: usize) -> Vec<PartComposition> {
    fn go(left: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for p in 1..=cap.min(left) {
            cur.push(p);
            go(left - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, r, &mut Vec::new(), &mut out);
    out.sort();
    out.into_iter().map(|p| PartComposition::new(p).expect("positive parts")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipartiteTable {
    pub value: u128,
    /// Lexicographically smallest maximizing composition.
    pub best: PartComposition,
    pub table: Vec<(PartComposition, u128)>,
}

/// Maximum of `N(h, K)` over complete multipartite `K` on `n` vertices with at
/// most `r` parts.
pub fn ex_multipartite(n: usize, h: &Graph, r: usize) -> Result<MultipartiteTable> {
    if r == 0 {
        return Err(Error::ZeroParts);
    }
    let table: Vec<(PartComposition, u128)> = partitions_at_most(n, r)
        .into_iter()
        .map(|p| {
            let c = count_copies_multipartite(h, &p);
            (p, c)
        })
        .collect();
    let value = table.iter().map(|(_, c)| *c).max().expect("at least one partition");
    let best = table.iter().find(|(_, c)| *c == value).expect("maximum attained").0.clone();
    Ok(MultipartiteTable { value, best, table })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeRow {
    pub composition: PartComposition,
    pub copies: u128,
    pub parts: usize,
    /// Smallest part size over `n`.
    pub min_fraction: Ratio<i128>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartSizesReport {
    pub optimum: u128,
    /// `zeta * n^h`: the allowed shortfall.
    pub slack: Ratio<i128>,
    /// Compositions within `slack` of the optimum, in table order.
    pub near_optimal: Vec<ProbeRow>,
}

impl PartSizesReport {
    /// The smallest minimum-part fraction among near-optimal compositions.
    pub fn min_fraction(&self) -> Option<Ratio<i128>> {
        self.near_optimal.iter().map(|r| r.min_fraction).min()
    }
}

fn n_pow_h(n: usize, h: &Graph) -> Result<i128> {
    (n as i128)
        .checked_pow(h.n() as u32)
        .ok_or_else(|| Error::Precondition("n^h overflows".into()))
}

/// Lists every composition into at most `r` parts whose copy count is within
/// `zeta * n^h` of the multipartite optimum.
pub fn part_sizes_probe(n: usize, h: &Graph, r: usize, zeta: Ratio<i128>) -> Result<PartSizesReport> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let table = ex_multipartite(n, h, r)?;
    let slack = zeta * Ratio::from_integer(n_pow_h(n, h)?);
    let near_optimal = table
        .table
        .iter()
        .filter(|(_, c)| Ratio::from_integer((table.value - c) as i128) <= slack)
        .map(|(p, c)| ProbeRow {
            composition: p.clone(),
            copies: *c,
            parts: p.len(),
            min_fraction: Ratio::new(p.min_part().unwrap_or(0) as i128, n as i128),
        })
        .collect();
    Ok(PartSizesReport { optimum: table.value, slack, near_optimal })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileRow {
    pub form: CanonicalForm,
    pub copies: u128,
    pub deficiency: u128,
    pub dist_turan: usize,
    pub dist_multipartite: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityProfile {
    pub n: usize,
    pub pattern: Graph,
    pub forbidden: GraphFamily,
    pub r: usize,
    /// `ex(n, H, F)` as found by the scan.
    pub ex: u128,
    /// Sorted by deficiency, then canonical form.
    pub rows: Vec<ProfileRow>,
}

impl StabilityProfile {
    /// `deficiency / n^h`.
    pub fn delta(&self, row: &ProfileRow) -> Ratio<i128> {
        let denom = n_pow_h(self.n, &self.pattern).expect("checked when built").max(1);
        Ratio::new(row.deficiency as i128, denom)
    }

    /// `distance / n^2`.
    pub fn epsilon(&self, distance: usize) -> Ratio<i128> {
        Ratio::new(distance as i128, (self.n * self.n).max(1) as i128)
    }

    /// True iff exactly one graph attains `ex` and it is `T(n, r)`.
    pub fn turan_uniquely_extremal(&self) -> bool {
        let top: Vec<&ProfileRow> = self.rows.iter().filter(|r| r.deficiency == 0).collect();
        let turan = crate::graph::turan_graph(self.n, self.r).map(|t| crate::graph::canonical_form(&t));
        top.len() == 1 && turan.is_ok_and(|t| t == top[0].form)
    }
}

/// Copies, deficiency and distances to `T(n, r)` and to the nearest complete
/// `r`-partite graph, for every free graph on `n` vertices.
pub fn stability_profile(
    n: usize,
    h: &Graph,
    forbidden: &GraphFamily,
    r: usize,
    ceilings: Ceilings,
) -> Result<StabilityProfile> {
    if r == 0 {
        return Err(Error::ZeroParts);
    }
    n_pow_h(n, h)?;
    let rows = scan(n, h, forbidden, ceilings)?;
    let ex = rows.iter().map(|(_, c)| *c).max().unwrap_or(0);
    let config = SearchConfig { exact_ceiling: n.max(crate::partition::DEFAULT_EXACT_CEILING), allow_heuristic: false };
    let mut out: Vec<ProfileRow> = rows
        .into_par_iter()
        .map(|(g, copies)| {
            let dist_turan = nearest_turan(&g, r, &config).map(|d| d.distance)?;
            let dist_multipartite = nearest_complete_multipartite(&g, r, &config).map(|d| d.distance)?;
            Ok(ProfileRow {
                form: crate::graph::canonical_form_of_canonical(&g),
                copies,
                deficiency: ex - copies,
                dist_turan,
                dist_multipartite,
            })
        })
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| a.deficiency.cmp(&b.deficiency).then_with(|| a.form.cmp(&b.form)));
    Ok(StabilityProfile { n, pattern: h.clone(), forbidden: forbidden.clone(), r, ex, rows: out })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnvelopePoint {
    pub deficiency: u128,
    pub max_dist_turan: usize,
    pub max_dist_multipartite: usize,
}

/// For each distinct deficiency `t`, the largest distances among rows with
/// deficiency at most `t`.
pub fn envelope(profile: &StabilityProfile) -> Vec<EnvelopePoint> {
    let mut out: Vec<EnvelopePoint> = Vec::new();
    let (mut turan, mut multi) = (0, 0);
    for row in &profile.rows {
        turan = turan.max(row.dist_turan);
        multi = multi.max(row.dist_multipartite);
        match out.last_mut() {
            Some(p) if p.deficiency == row.deficiency => {
                p.max_dist_turan = turan;
                p.max_dist_multipartite = multi;
            }
            _ => out.push(EnvelopePoint { deficiency: row.deficiency, max_dist_turan: turan, max_dist_multipartite: multi }),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn family(members: Vec<Graph>) -> GraphFamily {
        GraphFamily::new(members)
    }

    /// Brute force: every labeled graph on `n` vertices, filtered, then
    /// deduplicated by canonical form.
    fn brute_classes(n: usize, forbidden: &GraphFamily) -> usize {
        let pairs: Vec<(usize, usize)> = complete(n).unwrap().edges().collect();
        let mut forms = std::collections::BTreeSet::new();
        for mask in 0u64..(1 << pairs.len()) {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            if forbidden.is_free(&g) {
                forms.insert(canonical_form(&g));
            }
        }
        forms.len()
    }

    #[test]
    fn enumeration_examples() {
        let k3 = family(vec![complete(3).unwrap()]);
        let got = enumerate_free_graphs(&EnumerationSpec::exhaustive(4, k3.clone())).unwrap();
        assert_eq!(got.graphs.len(), 7);
        assert_eq!(brute_classes(4, &k3), 7);
        let none = family(vec![]);
        assert_eq!(enumerate_free_graphs(&EnumerationSpec::exhaustive(3, none.clone())).unwrap().graphs.len(), 4);
        let k2 = family(vec![complete(2).unwrap()]);
        assert_eq!(enumerate_free_graphs(&EnumerationSpec::exhaustive(5, k2)).unwrap().graphs.len(), 1);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let none = family(vec![]);
        for n in 0..=6 {
            let got = enumerate_free_graphs(&EnumerationSpec::exhaustive(n, none.clone())).unwrap();
            assert_eq!(got.graphs.len(), brute_classes(n, &none), "n = {n}");
        }
        let c4 = family(vec![cycle(4).unwrap()]);
        let got = enumerate_free_graphs(&EnumerationSpec::exhaustive(6, c4.clone())).unwrap();
        assert_eq!(got.graphs.len(), brute_classes(6, &c4));
    }

    #[test]
    fn ceilings_refuse() {
        let none = family(vec![]);
        assert!(matches!(
            enumerate_free_graphs(&EnumerationSpec::exhaustive(10, none)),
            Err(Error::CeilingExceeded { n: 10, ceiling: 9 })
        ));
        let k3 = family(vec![complete(3).unwrap()]);
        assert_eq!(EnumerationSpec::exhaustive(10, k3).ceiling(), 10);
    }

    #[test]
    fn sampling_reports_acceptance() {
        let k3 = family(vec![complete(3).unwrap()]);
        let spec = EnumerationSpec::sample(8, k3.clone(), 200, 1);
        let a = enumerate_free_graphs(&spec).unwrap();
        let b = enumerate_free_graphs(&spec).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.attempts, 200);
        assert!(a.graphs.iter().all(|g| k3.is_free(g)));
        assert!(a.acceptance_rate() < Ratio::new(1, 2));
    }

    #[test]
    fn ex_examples() {
        let k2 = complete(2).unwrap();
        let k3 = complete(3).unwrap();
        let r = ex_exact(5, &k2, &family(vec![k3.clone()]), Ceilings::default()).unwrap();
        assert_eq!(r.value, 6);
        assert_eq!(r.extremal_graphs, vec![canonical_form(&turan_graph(5, 2).unwrap())]);

        let r = ex_exact(6, &k3, &family(vec![complete(4).unwrap()]), Ceilings::default()).unwrap();
        assert_eq!(r.value, 8);
        assert!(r.extremal_graphs.contains(&canonical_form(&turan_graph(6, 3).unwrap())));

        // C4 in triangle-free graphs on 6 vertices: oracle is a direct max
        // over the brute-force class list.
        let c4 = cycle(4).unwrap();
        let f = family(vec![k3.clone()]);
        let r = ex_exact(6, &c4, &f, Ceilings::default()).unwrap();
        assert_eq!(r.value, 9);
        assert_eq!(r.extremal_graphs, vec![canonical_form(&complete_bipartite(3, 3).unwrap())]);
    }

    #[test]
    fn multipartite_examples() {
        let cherry = star(2).unwrap();
        let t = ex_multipartite(6, &cherry, 2).unwrap();
        assert_eq!((t.value, t.best.parts()), (18, &[3usize, 3][..]));
        for (p, c) in &t.table {
            let (a, b) = (p.parts()[0] as u128, *p.parts().get(1).unwrap_or(&0) as u128);
            assert_eq!(*c, a * b * (b.saturating_sub(1)) / 2 + b * a * (a - 1) / 2);
            assert_eq!(*c, count_copies(&cherry, &complete_multipartite(p).unwrap()));
        }
        let k3 = complete(3).unwrap();
        let t = ex_multipartite(6, &k3, 3).unwrap();
        assert_eq!((t.value, t.best.parts()), (8, &[2usize, 2, 2][..]));
        let t = ex_multipartite(7, &k3, 3).unwrap();
        assert_eq!((t.value, t.best.parts()), (12, &[3usize, 2, 2][..]));
    }

    #[test]
    fn partitions_are_complete() {
        assert_eq!(partitions_at_most(6, 6).len(), 11);
        assert_eq!(partitions_at_most(6, 2).len(), 4);
        assert_eq!(partitions_at_most(0, 3).len(), 1);
    }

    #[test]
    fn probe_examples() {
        let k3 = complete(3).unwrap();
        let p = part_sizes_probe(9, &k3, 3, Ratio::from_integer(0)).unwrap();
        assert_eq!(p.near_optimal.len(), 1);
        assert_eq!(p.near_optimal[0].composition.parts(), &[3, 3, 3]);
        assert_eq!(p.min_fraction(), Some(Ratio::new(1, 3)));

        let p = part_sizes_probe(9, &k3, 3, Ratio::new(2, 729)).unwrap();
        let table = ex_multipartite(9, &k3, 3).unwrap();
        let expect: Vec<_> = table.table.iter().filter(|(_, c)| *c + 2 >= 27).map(|(p, _)| p.clone()).collect();
        assert_eq!(p.near_optimal.iter().map(|r| r.composition.clone()).collect::<Vec<_>>(), expect);
        assert!(p.near_optimal.iter().all(|r| r.composition.parts() != [4, 3, 2]));

        let p = part_sizes_probe(8, &cycle(4).unwrap(), 2, Ratio::from_integer(0)).unwrap();
        assert_eq!(p.optimum, 36);
        assert_eq!(p.near_optimal[0].composition.parts(), &[4, 4]);
    }

    #[test]
    fn profile_examples() {
        let k2 = complete(2).unwrap();
        let k3 = complete(3).unwrap();
        let prof = stability_profile(5, &k2, &family(vec![k3.clone()]), 2, Ceilings::default()).unwrap();
        assert_eq!(prof.rows[0].deficiency, 0);
        assert_eq!(prof.rows[0].form, canonical_form(&turan_graph(5, 2).unwrap()));
        assert_eq!(prof.rows[0].dist_turan, 0);
        assert!(prof.turan_uniquely_extremal());
        let env = envelope(&prof);
        assert_eq!((env[0].deficiency, env[0].max_dist_turan), (0, 0));
        assert!(env.windows(2).all(|w| w[0].max_dist_turan <= w[1].max_dist_turan));

        let prof = stability_profile(6, &k3, &family(vec![complete(4).unwrap()]), 3, Ceilings::default()).unwrap();
        let env = envelope(&prof);
        assert_eq!((env[0].deficiency, env[0].max_dist_turan, env[0].max_dist_multipartite), (0, 0, 0));

        let prof = stability_profile(4, &k2, &family(vec![k3]), 2, Ceilings::default()).unwrap();
        assert_eq!(prof.rows[0].form, canonical_form(&cycle(4).unwrap()));
        assert_eq!(prof.rows[0].dist_turan, 0);
    }

    #[test]
    fn single_row_envelope() {
        let prof = StabilityProfile {
            n: 1,
            pattern: complete(1).unwrap(),
            forbidden: GraphFamily::default(),
            r: 1,
            ex: 1,
            rows: vec![ProfileRow { form: canonical_form(&empty(1).unwrap()), copies: 1, deficiency: 0, dist_turan: 0, dist_multipartite: 0 }],
        };
        assert_eq!(envelope(&prof), vec![EnvelopePoint { deficiency: 0, max_dist_turan: 0, max_dist_multipartite: 0 }]);
    }
}
