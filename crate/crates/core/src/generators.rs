//! Deterministic graph constructions and direct parameter checks.
//!
//! Vertex numbering is fixed:
//! - `cycle(n)`, `path(n)`: `0..n` consecutive.
//! - `petersen()`: outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram
//!   `5+i ~ 5+(i+2)%5`.
//! - `complete_multipartite(parts)`: parts are consecutive blocks.
//! - `hypercube(d)`: binary words, adjacent at Hamming distance 1.
//! - `rook(a, b)`: cell `(i, j)` is vertex `i*b + j`; same row or column.
//! - `disjoint_union(g, h)`: `h` shifted by `g.n()`.
//! - `subdivided_star()`: center 0, leaves 1 and 2, path 0-3-4.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::recognize::{SrgParams, WdrParams};

fn check_size(n: usize) -> Result<()> {
    if (1..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{n} vertices (supported: 1..=62)")))
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    check_size(n)?;
    Graph::from_edges(n, (0..n).tuple_combinations())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    check_size(n)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    check_size(n)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("fixed construction")
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidParameter("parts must be nonempty and positive".into()));
    }
    let n: usize = parts.iter().sum();
    check_size(n)?;
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    Graph::from_edges(n, (0..n).tuple_combinations().filter(|&(a, b)| part_of[a] != part_of[b]))
}

pub fn hypercube(d: usize) -> Result<Graph> {
    if d > 5 {
        return Err(Error::InvalidParameter(format!("hypercube dimension {d} > 5")));
    }
    let n = 1usize << d;
    Graph::from_edges(n, (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ 1 << b)).filter(|&(v, w)| v < w)))
}

/// Cartesian product `K_a □ K_b`.
pub fn rook(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("rook dimensions must be positive".into()));
    }
    check_size(a * b)?;
    let n = a * b;
    Graph::from_edges(n, (0..n).tuple_combinations().filter(|&(x, y)| x / b == y / b || x % b == y % b))
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.n() + h.n();
    check_size(n)?;
    let shift = g.n();
    Graph::from_edges(n, g.edges().chain(h.edges().map(|(a, b)| (a + shift, b + shift))))
}

/// `K_{1,3}` with one edge subdivided.
pub fn subdivided_star() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).expect("fixed construction")
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Paley graph on the integers mod a prime `q ≡ 1 (mod 4)`.
pub fn paley(q: usize) -> Result<Graph> {
    if !is_prime(q) {
        return Err(Error::InvalidParameter(format!("paley: {q} is not prime")));
    }
    if q % 4 != 1 {
        return Err(Error::InvalidParameter(format!("paley: {q} is not 1 mod 4")));
    }
    if q > 61 {
        return Err(Error::InvalidParameter(format!("paley: {q} > 61")));
    }
    let residues: Vec<bool> = {
        let mut r = vec![false; q];
        for x in 1..q {
            r[x * x % q] = true;
        }
        r
    };
    Graph::from_edges(q, (0..q).tuple_combinations().filter(|&(i, j)| residues[(j - i) % q]))
}

/// `(P_{2l}, C_{l+1} + P_{l-1})`, a pair sharing their `l`-decks.
pub fn collision_pair(l: usize) -> Result<(Graph, Graph)> {
    if l < 2 {
        return Err(Error::InvalidParameter(format!("collision pair needs l >= 2, got {l}")));
    }
    check_size(2 * l)?;
    Ok((path(2 * l)?, disjoint_union(&cycle(l + 1)?, &path(l - 1)?)?))
}

/// Strongly regular parameters by direct pairwise counting. Requires at
/// least one nonadjacent pair and `mu >= 1`, so only connected graphs of
/// diameter 2 qualify.
pub fn srg_params(g: &Graph) -> Option<SrgParams> {
    let k = g.regular_degree()?;
    let mut lambda = None;
    let mut mu = None;
    for (x, y) in (0..g.n()).tuple_combinations() {
        let slot = if g.has_edge(x, y) { &mut lambda } else { &mut mu };
        let c = g.common_count(x, y);
        if *slot.get_or_insert(c) != c {
            return None;
        }
    }
    let mu = mu.filter(|&m| m >= 1)?;
    Some(SrgParams { k, lambda: lambda.unwrap_or(0), mu })
}

/// Weakly distance-regular parameters: constant common-neighbor counts on
/// adjacent pairs and on pairs at distance exactly 2. Requires at least one
/// distance-2 pair.
pub fn wdr_params(g: &Graph) -> Option<WdrParams> {
    let k = g.regular_degree()?;
    let dist = g.distance_matrix();
    let mut lambda = None;
    let mut mu_prime = None;
    for (x, y) in (0..g.n()).tuple_combinations() {
        let slot = match dist.get(x, y) {
            Some(1) => &mut lambda,
            Some(2) => &mut mu_prime,
            _ => continue,
        };
        let c = g.common_count(x, y);
        if *slot.get_or_insert(c) != c {
            return None;
        }
    }
    Some(WdrParams { k, lambda: lambda.unwrap_or(0), mu_prime: mu_prime? })
}

/// Intersection array `(b0, b1, b2; c0, c1, c2)` of a diameter-2 graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntersectionArraySrg {
    pub b: [usize; 3],
    pub c: [usize; 3],
}

impl IntersectionArraySrg {
    pub fn from_params(p: SrgParams) -> Self {
        IntersectionArraySrg { b: [p.k, p.k - p.lambda - 1, 0], c: [0, 1, p.mu] }
    }
}

/// The intersection array of a strongly regular graph, confirmed against
/// neighbor counts over the distance partition of every vertex pair.
pub fn intersection_array_srg(g: &Graph) -> Option<IntersectionArraySrg> {
    let params = srg_params(g)?;
    let dist = g.distance_matrix();
    if dist.diameter()? != 2 {
        return None;
    }
    let expected = IntersectionArraySrg::from_params(params);
    let n = g.n();
    for u in 0..n {
        for v in 0..n {
            let j = dist.get(u, v)?;
            let (mut farther, mut closer) = (0, 0);
            for w in g.neighbors(u) {
                let dw = dist.get(w, v)?;
                if dw == j + 1 {
                    farther += 1;
                } else if dw + 1 == j {
                    closer += 1;
                }
            }
            if farther != expected.b[j] || closer != expected.c[j] {
                return None;
            }
        }
    }
    Some(expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{canonical_form, is_isomorphic};

    #[test]
    fn paley5_is_c5() {
        assert!(is_isomorphic(&paley(5).unwrap(), &cycle(5).unwrap()));
        assert_eq!(canonical_form(&paley(5).unwrap()), canonical_form(&cycle(5).unwrap()));
    }

    #[test]
    fn paley_preconditions() {
        assert!(paley(7).is_err());
        assert!(paley(9).is_err());
        assert!(paley(1).is_err());
        assert!(paley(73).is_err());
        assert!(paley(61).is_ok());
    }

    #[test]
    fn paley_parameters_match_formula() {
        for q in [5, 13, 17, 29, 37, 41, 53, 61] {
            let g = paley(q).unwrap();
            let p = srg_params(&g).unwrap();
            assert_eq!((p.k, p.lambda, p.mu), ((q - 1) / 2, (q - 5) / 4, (q - 1) / 4), "q = {q}");
        }
    }

    #[test]
    fn petersen_structure() {
        let p = petersen();
        assert_eq!(p.degree_sequence(), vec![3; 10]);
        assert_eq!(p.edge_count(), 15);
        assert_eq!(srg_params(&p), Some(SrgParams { k: 3, lambda: 0, mu: 1 }));
        assert_eq!(wdr_params(&p), Some(WdrParams { k: 3, lambda: 0, mu_prime: 1 }));
        assert_eq!(intersection_array_srg(&p), Some(IntersectionArraySrg { b: [3, 2, 0], c: [0, 1, 1] }));
    }

    #[test]
    fn small_families() {
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.n(), q3.regular_degree()), (8, Some(3)));
        assert_eq!(wdr_params(&q3), Some(WdrParams { k: 3, lambda: 0, mu_prime: 2 }));
        assert_eq!(srg_params(&q3), None);
        assert_eq!(srg_params(&rook(3, 3).unwrap()), Some(SrgParams { k: 4, lambda: 1, mu: 2 }));
        assert_eq!(
            disjoint_union(&cycle(4).unwrap(), &complete(1).unwrap()).unwrap().degree_sequence(),
            vec![2, 2, 2, 2, 0]
        );
        let k33 = complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(k33.degree_sequence(), vec![3; 6]);
        assert_eq!(srg_params(&k33), Some(SrgParams { k: 3, lambda: 0, mu: 3 }));
        let oct = complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(srg_params(&oct), Some(SrgParams { k: 4, lambda: 2, mu: 4 }));
        assert!(hypercube(6).is_err());
        assert_eq!(hypercube(0).unwrap().n(), 1);
    }

    #[test]
    fn cycles_and_completes() {
        assert_eq!(srg_params(&cycle(6).unwrap()), None);
        assert_eq!(wdr_params(&cycle(6).unwrap()), Some(WdrParams { k: 2, lambda: 0, mu_prime: 1 }));
        assert_eq!(wdr_params(&cycle(7).unwrap()), Some(WdrParams { k: 2, lambda: 0, mu_prime: 1 }));
        assert_eq!(srg_params(&complete(6).unwrap()), None);
        assert_eq!(wdr_params(&complete(6).unwrap()), None);
        assert_eq!(intersection_array_srg(&complete(6).unwrap()), None);
        assert!(cycle(2).is_err());
        assert!(complete(63).is_err());
    }

    #[test]
    fn paley13_intersection_array() {
        assert_eq!(
            intersection_array_srg(&paley(13).unwrap()),
            Some(IntersectionArraySrg { b: [6, 3, 0], c: [0, 1, 3] })
        );
    }

    #[test]
    fn subdivided_star_shape() {
        let t = subdivided_star();
        assert_eq!(t.degree_sequence(), vec![3, 2, 1, 1, 1]);
        assert!(t.is_connected());
        assert_eq!(t.edge_count(), 4);
    }

    #[test]
    fn collision_pairs() {
        let (a, b) = collision_pair(3).unwrap();
        assert_eq!((a.n(), b.n()), (6, 6));
        assert!(a.is_connected() && !b.is_connected());
        assert!(collision_pair(1).is_err());
        assert!(collision_pair(32).is_err());
        assert!(collision_pair(31).is_ok());
    }
}
