//! Labeled simple graphs with bit-row adjacency.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count (graph6 single-byte size field).
pub const MAX_VERTICES: usize = 62;

/// A labeled simple graph on `1..=62` vertices.
///
/// Row `v` of the adjacency matrix is a 64-bit mask whose bit `w` is set
/// iff `v ~ w`. Rows are kept symmetric with clear diagonals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// Builds a graph from a bitmask over vertex pairs, using the graph6
    /// pair order: `(i, j)` with `i < j` sits at bit `j(j-1)/2 + i`.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Self> {
        let pairs = n * n.saturating_sub(1) / 2;
        if pairs > 64 {
            return Err(Error::VertexCount(n));
        }
        let mut g = Graph::empty(n)?;
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    g.add_edge(i, j);
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    /// Builds a graph from already-symmetric rows.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(!rows.is_empty() && rows.len() <= MAX_VERTICES);
        debug_assert!((0..rows.len()).all(|v| rows[v] >> v & 1 == 0));
        Graph { n: rows.len(), rows }
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert!(a != b && a < self.n && b < self.n);
        self.rows[a] |= 1 << b;
        self.rows[b] |= 1 << a;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighborhood of `v` as a bitmask.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in ascending `(i, j)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| {
            let above = self.rows[i] & !((2u64 << i) - 1);
            BitIter(above).map(move |j| (i, j))
        })
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        BitIter(self.rows[v])
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// The common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn common_neighbors(&self, x: usize, y: usize) -> Result<usize> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::SameVertex(x));
        }
        Ok(self.common_count(x, y))
    }

    /// Unchecked `|N(x) ∩ N(y)|`.
    #[inline]
    pub(crate) fn common_count(&self, x: usize, y: usize) -> usize {
        (self.rows[x] & self.rows[y]).count_ones() as usize
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.n;
        let mut dist = vec![UNREACHABLE; n * n];
        for s in 0..n {
            let base = s * n;
            dist[base + s] = 0;
            let mut seen = 1u64 << s;
            let mut frontier = 1u64 << s;
            let mut d = 0u8;
            while frontier != 0 {
                d += 1;
                let mut next = 0u64;
                for v in BitIter(frontier) {
                    next |= self.rows[v];
                }
                next &= !seen;
                for v in BitIter(next) {
                    dist[base + v] = d;
                }
                seen |= next;
                frontier = next;
            }
        }
        DistanceMatrix { n, dist }
    }

    /// Induced subgraph on `keep`, renumbered in ascending original order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut mask = 0u64;
        for &v in keep {
            self.check_vertex(v)?;
            mask |= 1 << v;
        }
        self.induced_by_mask(mask)
    }

    /// Induced subgraph on the vertices whose bits are set in `mask`.
    pub fn induced_by_mask(&self, mask: u64) -> Result<Graph> {
        let mask = mask & self.vertex_mask();
        if mask == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let kept: Vec<usize> = BitIter(mask).collect();
        let rows = kept
            .iter()
            .map(|&v| {
                let r = self.rows[v] & mask;
                kept.iter().enumerate().filter(|&(_, &w)| r >> w & 1 == 1).fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Ok(Graph::from_rows(rows))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertex_mask()
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition(format!("permutation of length {} for {} vertices", perm.len(), self.n)));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= 1 << p;
        }
        if seen != self.vertex_mask() {
            return Err(Error::Precondition("relabeling is not a permutation".into()));
        }
        let mut rows = vec![0u64; self.n];
        for (a, b) in self.edges() {
            rows[perm[a]] |= 1 << perm[b];
            rows[perm[b]] |= 1 << perm[a];
        }
        Ok(Graph::from_rows(rows))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph::from_rows((0..self.n).map(|v| all & !self.rows[v] & !(1 << v)).collect())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::to_graph6(self))
    }
}

const UNREACHABLE: u8 = u8::MAX;

/// All-pairs shortest-path distances. Unreachable pairs read as `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u8>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        match self.dist[i * self.n + j] {
            UNREACHABLE => None,
            d => Some(d as usize),
        }
    }

    /// Largest finite distance, or `None` if some pair is unreachable.
    pub fn diameter(&self) -> Option<usize> {
        if self.dist.contains(&UNREACHABLE) {
            return None;
        }
        self.dist.iter().map(|&d| d as usize).max()
    }
}

/// Iterates over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4_plus_k1() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn from_edges_basics() {
        let k1 = Graph::from_edges(1, []).unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.edge_count(), 0);
        let c4 = cycle(4);
        assert_eq!(c4.degree_sequence(), vec![2, 2, 2, 2]);
        assert!(c4.has_edge(3, 0) && c4.has_edge(0, 3));
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(Graph::from_edges(0, []), Err(Error::VertexCount(0)));
        assert_eq!(Graph::from_edges(63, []), Err(Error::VertexCount(63)));
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::Loop(1)));
        assert!(Graph::from_edges(62, [(0, 61)]).is_ok());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn degree_sequence_of_c4_plus_k1() {
        assert_eq!(c4_plus_k1().degree_sequence(), vec![2, 2, 2, 2, 0]);
    }

    #[test]
    fn common_neighbors_checks() {
        let k33 = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        assert_eq!(k33.common_neighbors(0, 1), Ok(3));
        assert_eq!(k33.common_neighbors(0, 3), Ok(0));
        assert_eq!(k33.common_neighbors(2, 2), Err(Error::SameVertex(2)));
        assert!(k33.common_neighbors(0, 6).is_err());
    }

    #[test]
    fn distances() {
        let c6 = cycle(6);
        let d = c6.distance_matrix();
        assert_eq!(d.get(0, 3), Some(3));
        assert_eq!(d.get(1, 5), Some(2));
        assert_eq!(d.diameter(), Some(3));

        let k5 = Graph::from_edges(5, (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b)))).unwrap();
        let d = k5.distance_matrix();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(d.get(i, j), Some(usize::from(i != j)));
            }
        }

        let d = c4_plus_k1().distance_matrix();
        for v in 0..4 {
            assert_eq!(d.get(4, v), None);
            assert_eq!(d.get(v, 4), None);
        }
        assert_eq!(d.get(4, 4), Some(0));
        assert_eq!(d.diameter(), None);
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle(5);
        let p3 = c5.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        // order of `keep` does not matter
        assert_eq!(c5.induced_subgraph(&[3, 1, 2]).unwrap(), p3);
        assert_eq!(c5.induced_subgraph(&[]), Err(Error::EmptyVertexSet));
        assert!(c5.induced_subgraph(&[0, 5]).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(!c4_plus_k1().is_connected());
        assert!(cycle(7).is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
    }

    #[test]
    fn pair_mask_follows_graph6_order() {
        // bit 0: (0,1); bit 1: (0,2); bit 2: (1,2); bit 3: (0,3)
        let g = Graph::from_pair_mask(4, 0b1010).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 3)]);
        assert!(Graph::from_pair_mask(12, 0).is_err());
    }

    #[test]
    fn relabel_and_complement() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let q = p3.relabel(&[1, 0, 2]).unwrap();
        assert_eq!(q.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert!(p3.relabel(&[0, 0, 1]).is_err());
        assert_eq!(p3.complement().edges().collect::<Vec<_>>(), vec![(0, 2)]);
    }
}
