//! Helpers shared by the integration tests. The brute-force routines here
//! avoid the library's canonical labeling entirely.

#![allow(dead_code)]

use std::collections::BTreeMap;

use deckrec::Graph;
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n).tuple_combinations().filter(|_| rng.random_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Lexicographically largest upper-triangle bit string over all `n!`
/// relabelings. Two graphs are isomorphic iff their keys agree.
pub fn brute_key(g: &Graph) -> (usize, Vec<bool>) {
    let n = g.n();
    let best = (0..n)
        .permutations(n)
        .map(|p| (0..n).tuple_combinations().map(|(i, j)| g.has_edge(p[i], p[j])).collect::<Vec<bool>>())
        .max()
        .unwrap_or_default();
    (n, best)
}

/// `k`-deck as a map from brute-force key to multiplicity.
pub fn brute_deck(g: &Graph, k: usize) -> BTreeMap<(usize, Vec<bool>), u64> {
    let mut deck = BTreeMap::new();
    for subset in (0..g.n()).combinations(k) {
        *deck.entry(brute_key(&g.induced_subgraph(&subset).unwrap())).or_default() += 1;
    }
    deck
}

/// The library deck rekeyed by brute-force keys.
pub fn rekey(deck: &deckrec::Deck) -> BTreeMap<(usize, Vec<bool>), u64> {
    deck.cards().iter().map(|c| (brute_key(&c.representative), c.multiplicity)).collect()
}
