//! Canonical labeling by color refinement and individualization.
//!
//! The search tree starts from the coarsest equitable partition, refined by
//! neighbor counts. An inner node individualizes each vertex of its first
//! smallest non-singleton cell in turn and refines again. A leaf is reached
//! once every non-singleton cell is homogeneous: each cell is a clique or a
//! coclique and is joined completely or not at all to every other cell, so
//! any order inside the cells yields the same relabeled graph. The code is
//! the lexicographically smallest graph6 string over all leaves.
//!
//! Automorphisms discovered when two leaves produce the same string prune
//! siblings lying in one orbit of the pointwise stabilizer of the current
//! individualized prefix.

use std::fmt;

use crate::graph::{BitIter, Graph};
use crate::graph6::{encode_with, parse_graph6};

/// Relabeling-invariant identifier of an isomorphism class.
///
/// The bytes are the graph6 encoding of the canonically relabeled graph, so
/// the first byte carries `n` and codes order lexicographically by the
/// column-major upper-triangle bit string.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // produced by the graph6 encoder, always ASCII
        std::str::from_utf8(&self.0).expect("canonical code is ASCII")
    }

    /// Vertex count of the class.
    pub fn n(&self) -> usize {
        (self.0[0] - 63) as usize
    }

    /// The canonical representative of the class.
    pub fn to_graph(&self) -> Graph {
        parse_graph6(self.as_str()).expect("canonical code is valid graph6")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.as_str())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalCode {
    Search::run(g).0
}

/// Canonical order: position `i` of the canonical graph is vertex `order[i]`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    Search::run(g).1
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g) == canonical_form(h)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    /// Automorphisms as vertex maps `v -> autos[k][v]`.
    autos: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn run(g: &'a Graph) -> (CanonicalCode, Vec<usize>) {
        let mut search = Search { g, best: None, autos: Vec::new() };
        let mut prefix = Vec::new();
        search.descend(vec![g.vertex_mask()], &mut prefix);
        let (code, order) = search.best.expect("search reaches at least one leaf");
        (CanonicalCode(code), order)
    }

    fn descend(&mut self, mut cells: Vec<u64>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        if is_homogeneous(self.g, &cells) {
            self.leaf(&cells);
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|&(i, c)| (c.count_ones(), i))
            .map(|(i, _)| i)
            .expect("non-homogeneous partition has a non-singleton cell");
        let cell = cells[target];
        let mut explored = 0u64;
        for v in BitIter(cell) {
            if explored != 0 && self.shares_orbit(v, explored, prefix) {
                continue;
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let order: Vec<usize> = cells.iter().flat_map(|&c| BitIter(c)).collect();
        let g = self.g;
        let code = encode_with(g.n(), |i, j| g.has_edge(order[i], order[j]));
        match &self.best {
            Some((best, _)) if code > *best => {}
            Some((best, best_order)) if code == *best => {
                let mut auto = vec![0; g.n()];
                for (&a, &b) in order.iter().zip(best_order) {
                    auto[a] = b;
                }
                if auto.iter().enumerate().any(|(v, &w)| v != w) {
                    self.autos.push(auto);
                }
            }
            _ => self.best = Some((code, order)),
        }
    }

    /// Whether `v` lies in the orbit of an explored vertex under the known
    /// automorphisms that fix every vertex of `prefix`.
    fn shares_orbit(&self, v: usize, explored: u64, prefix: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for auto in &self.autos {
            if prefix.iter().any(|&p| auto[p] != p) {
                continue;
            }
            any = true;
            for (a, &b) in auto.iter().enumerate() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        BitIter(explored).any(|w| find(&mut parent, w) == root)
    }
}

/// Splits cells by neighbor counts into other cells until the ordered
/// partition is equitable. New sub-cells replace the split cell in
/// ascending count order, so the result depends only on the structure.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut buckets = [0u64; 64];
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            for t in 0..cells.len() {
                let cell = cells[t];
                if cell.count_ones() < 2 {
                    continue;
                }
                let (mut lo, mut hi) = (usize::MAX, 0);
                for v in BitIter(cell) {
                    let c = (g.row(v) & splitter).count_ones() as usize;
                    buckets[c] |= 1 << v;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    buckets[lo] = 0;
                    continue;
                }
                let parts: Vec<u64> = (lo..=hi)
                    .filter_map(|c| {
                        let m = std::mem::take(&mut buckets[c]);
                        (m != 0).then_some(m)
                    })
                    .collect();
                cells.splice(t..=t, parts);
                continue 'outer;
            }
        }
        return;
    }
}

/// True when vertices may be ordered arbitrarily within each cell.
/// Requires an equitable partition.
fn is_homogeneous(g: &Graph, cells: &[u64]) -> bool {
    cells.iter().all(|&c| {
        if c.count_ones() == 1 {
            return true;
        }
        let v = c.trailing_zeros() as usize;
        cells.iter().all(|&d| {
            let hits = (g.row(v) & d).count_ones();
            let full = d.count_ones() - u32::from(c == d);
            hits == 0 || hits == full
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    /// Minimum graph6 string over all n! relabelings.
    fn brute_force_code(g: &Graph) -> Vec<u8> {
        (0..g.n())
            .permutations(g.n())
            .map(|order| encode_with(g.n(), |i, j| g.has_edge(order[i], order[j])))
            .min()
            .unwrap()
    }

    #[test]
    fn c4_invariant_under_all_permutations() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let code = canonical_form(&c4);
        for perm in (0..4).permutations(4) {
            assert_eq!(canonical_form(&c4.relabel(&perm).unwrap()), code);
        }
    }

    #[test]
    fn p4_differs_from_star() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(canonical_form(&p4), canonical_form(&star));
        assert!(!is_isomorphic(&p4, &star));
        assert!(is_isomorphic(&p4, &p4));
    }

    #[test]
    fn labeling_reproduces_code() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (0, 5)]);
        let order = canonical_labeling(&g);
        let mut inverse = vec![0; 6];
        for (pos, &v) in order.iter().enumerate() {
            inverse[v] = pos;
        }
        assert_eq!(g.relabel(&inverse).unwrap(), canonical_graph(&g));
    }

    #[test]
    fn agrees_with_brute_force_isomorphism_on_five_vertices() {
        // every labeled graph on 5 vertices: equal codes iff equal brute-force minima
        let mut by_code = std::collections::HashMap::new();
        for mask in 0..1u64 << 10 {
            let g = Graph::from_pair_mask(5, mask).unwrap();
            let code = canonical_form(&g);
            let brute = brute_force_code(&g);
            let prev = by_code.entry(code).or_insert_with(|| brute.clone());
            assert_eq!(*prev, brute);
        }
        assert_eq!(by_code.len(), 34);
        let distinct: std::collections::HashSet<_> = by_code.values().collect();
        assert_eq!(distinct.len(), 34);
    }

    #[test]
    fn symmetric_graphs_terminate_quickly() {
        let complete = Graph::from_edges(40, (0..40).tuple_combinations()).unwrap();
        let empty = Graph::empty(40).unwrap();
        assert_ne!(canonical_form(&complete), canonical_form(&empty));
        let big_cycle = Graph::from_edges(60, (0..60).map(|i| (i, (i + 1) % 60))).unwrap();
        let shifted = big_cycle.relabel(&(0..60).map(|i| (i * 7) % 60).collect::<Vec<_>>()).unwrap();
        assert_eq!(canonical_form(&big_cycle), canonical_form(&shifted));
        // 6K5: homogeneous only after individualizing inside each clique
        let cliques = Graph::from_edges(
            30,
            (0..6).flat_map(|b| (0..5).tuple_combinations().map(move |(i, j)| (5 * b + i, 5 * b + j))),
        )
        .unwrap();
        assert_eq!(canonical_form(&cliques).n(), 30);
    }

    #[test]
    fn code_round_trips_to_graph() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let code = canonical_form(&g);
        assert_eq!(code.n(), 5);
        assert_eq!(canonical_form(&code.to_graph()), code);
        assert!(is_isomorphic(&code.to_graph(), &g));
    }
}
