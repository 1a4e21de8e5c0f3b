//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is explored depth first. Leaves are compared by their
//! relabeled adjacency rows and the largest one wins. Two pruning rules keep
//! symmetric graphs cheap:
//! - a leaf equivalent to the first leaf yields an automorphism that maps the
//!   first path onto the current one, so the search unwinds to their common
//!   ancestor;
//! - at every node, children in the same orbit of the automorphisms found so
//!   far that fix the node's individualized vertices are skipped.

use super::{bit, graph6_encode, Bits, Graph};

/// Bytes that are equal for two graphs iff the graphs are isomorphic.
/// They are the graph6 encoding of the canonically relabeled graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical form as graph6 text.
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

type Cells = Vec<Vec<usize>>;

/// Splits cells by neighbour counts into each splitter cell until the
/// partition is equitable. Depends only on the cell structure, not on labels.
fn refine(g: &Graph, cells: &mut Cells) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s].iter().fold(0u64, |m, &v| m | bit(v));
            let mut split_any = false;
            let mut next: Cells = Vec::with_capacity(cells.len() + 1);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((g.neighbors_mask(v) & splitter).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let before = next.len();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                split_any |= next.len() - before > 1;
            }
            if split_any {
                *cells = next;
                continue 'outer;
            }
        }
        return;
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let up = parent[y];
        parent[y] = r;
        y = up;
    }
    r
}

struct Leaf {
    cert: Vec<u64>,
    order: Vec<usize>,
    prefix: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn certificate(&self, order: &[usize]) -> Vec<u64> {
        let n = order.len();
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        order
            .iter()
            .map(|&v| Bits(self.g.neighbors_mask(v)).fold(0u64, |m, w| m | bit(n - 1 - pos[w])))
            .collect()
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut perm = vec![0usize; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            perm[a] = b;
        }
        if perm.iter().enumerate().any(|(i, &p)| i != p) {
            self.automorphisms.push(perm);
        }
    }

    /// Returns `Some(depth)` to unwind the search to the node at that depth.
    fn visit(&mut self, cells: Cells, prefix: &mut Vec<usize>) -> Option<usize> {
        if cells.iter().all(|c| c.len() == 1) {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let cert = self.certificate(&order);
            let Some(first) = &self.first else {
                let leaf = Leaf { cert, order, prefix: prefix.clone() };
                self.best = Some(Leaf { cert: leaf.cert.clone(), order: leaf.order.clone(), prefix: leaf.prefix.clone() });
                self.first = Some(leaf);
                return None;
            };
            if cert == first.cert {
                let (from, common) = (
                    first.order.clone(),
                    first.prefix.iter().zip(prefix.iter()).take_while(|(a, b)| a == b).count(),
                );
                self.record_automorphism(&from, &order);
                return Some(common);
            }
            let best = self.best.as_ref().expect("best set with first");
            match cert.cmp(&best.cert) {
                std::cmp::Ordering::Equal => {
                    let from = best.order.clone();
                    self.record_automorphism(&from, &order);
                }
                std::cmp::Ordering::Greater => {
                    self.best = Some(Leaf { cert, order, prefix: prefix.clone() });
                }
                std::cmp::Ordering::Less => {}
            }
            return None;
        }

        let depth = prefix.len();
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let n = self.g.n();
        let mut tried: Vec<usize> = Vec::new();
        for &w in &cells[target] {
            if !tried.is_empty() {
                // Orbits of the automorphisms that fix the current prefix.
                let mut parent: Vec<usize> = (0..n).collect();
                for perm in &self.automorphisms {
                    if prefix.iter().all(|&p| perm[p] == p) {
                        for (a, &b) in perm.iter().enumerate() {
                            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                            if ra != rb {
                                parent[ra] = rb;
                            }
                        }
                    }
                }
                let rw = find(&mut parent, w);
                if tried.iter().any(|&t| find(&mut parent, t) == rw) {
                    continue;
                }
            }
            tried.push(w);

            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, cell) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![w]);
                    child.push(cell.iter().copied().filter(|&x| x != w).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            refine(self.g, &mut child);
            prefix.push(w);
            let jump = self.visit(child, prefix);
            prefix.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }
}

/// A canonical relabeling: `labeling[v]` is the new label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut cells: Cells = vec![(0..n).collect()];
    refine(g, &mut cells);
    let mut search = Search { g, first: None, best: None, automorphisms: Vec::new() };
    search.visit(cells, &mut Vec::new());
    let best = search.best.expect("search reaches a leaf");
    let mut labeling = vec![0; n];
    for (i, &v) in best.order.iter().enumerate() {
        labeling[v] = i;
    }
    labeling
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g)).expect("labeling is a permutation")
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_form_of_canonical(&canonical_graph(g))
}

/// Wraps a graph that is already canonically labeled.
pub(crate) fn canonical_form_of_canonical(c: &Graph) -> CanonicalForm {
    CanonicalForm(graph6_encode(c).into_bytes())
}
