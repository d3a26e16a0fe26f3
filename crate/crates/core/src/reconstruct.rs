//! Reconstruction of regular graphs from a single card.
//!
//! With one vertex missing, its neighbors are the card vertices of degree
//! `k - 1`. With a nonadjacent pair `{u, v}` missing, the vertices of degree
//! `k - 2` are the common neighbors and those of degree `k - 1` form the set
//! `S` adjacent to exactly one of `u`, `v`. Two vertices of `S` hang off the
//! same omitted vertex exactly when they show one common neighbor fewer in
//! the card than their known count in the graph; this "same" relation
//! splits `S` into the two missing neighborhoods.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::canon::CanonicalCode;
use crate::deck::{compute_deck, decks_equal, Deck};
use crate::error::{Error, Result};
use crate::generators::{complete, disjoint_union};
use crate::graph::{Graph, MAX_VERTICES};
use crate::recognize::{classify_card, recognize_deck, Recognition, SrgParams, WdrParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairLabel {
    /// Both vertices are adjacent to the same omitted vertex.
    Same,
    Different,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionReport {
    pub branch: Recognition,
    /// Card used for single-card reconstruction.
    pub card_code: Option<CanonicalCode>,
    /// Sizes of the two sides of `S`.
    pub class_sizes: Option<(usize, usize)>,
    /// The reconstruction reproduces the input deck.
    pub verified: bool,
}

/// Restores the vertex missing from a card of a `k`-regular graph; the new
/// vertex gets label `card.n()`.
pub fn reconstruct_regular_1card(k: usize, card: &Graph) -> Result<Graph> {
    let n = card.n();
    if n + 1 > MAX_VERTICES {
        return Err(Error::VertexCount(n + 1));
    }
    let mut rows = card.rows().to_vec();
    let mut attach = 0u64;
    for v in 0..n {
        match card.degree(v) {
            d if d == k => {}
            d if d + 1 == k => attach |= 1 << v,
            _ => return Err(Error::NotACardOfRegular(k)),
        }
    }
    if attach.count_ones() as usize != k {
        return Err(Error::NotACardOfRegular(k));
    }
    for v in crate::graph::BitIter(attach) {
        rows[v] |= 1 << n;
    }
    rows.push(attach);
    Ok(Graph::from_rows(rows))
}

fn check_in_s(card: &Graph, k: usize, x: usize, y: usize) -> Result<()> {
    card.check_vertex(x)?;
    card.check_vertex(y)?;
    if x == y {
        return Err(Error::SameVertex(x));
    }
    for v in [x, y] {
        if card.degree(v) + 1 != k {
            return Err(Error::InconsistentCard(format!("vertex {v} is not of degree {}", k as i64 - 1)));
        }
    }
    Ok(())
}

/// `Different` when the card count equals `rho`, `Same` when it is `rho - 1`.
fn compare(count: usize, rho: usize, x: usize, y: usize) -> Result<PairLabel> {
    if count == rho {
        Ok(PairLabel::Different)
    } else if count + 1 == rho {
        Ok(PairLabel::Same)
    } else {
        Err(Error::InconsistentCard(format!(
            "pair ({x}, {y}) has {count} common neighbors in the card, expected {} or {rho}",
            rho as i64 - 1
        )))
    }
}

pub fn classify_pair_srg(card: &Graph, params: SrgParams, x: usize, y: usize) -> Result<PairLabel> {
    check_in_s(card, params.k, x, y)?;
    let rho = if card.has_edge(x, y) { params.lambda } else { params.mu };
    compare(card.common_count(x, y), rho, x, y)
}

/// A nonadjacent pair with no common neighbor in the card cannot share an
/// omitted neighbor: it would then sit at distance 2 with a single common
/// neighbor, below `mu' >= 2`.
pub fn classify_pair_wdr(card: &Graph, params: WdrParams, x: usize, y: usize) -> Result<PairLabel> {
    if params.mu_prime < 2 {
        return Err(Error::Mu1Unsupported(params.mu_prime));
    }
    check_in_s(card, params.k, x, y)?;
    let count = card.common_count(x, y);
    if card.has_edge(x, y) {
        compare(count, params.lambda, x, y)
    } else if count > 0 {
        compare(count, params.mu_prime, x, y)
    } else {
        Ok(PairLabel::Different)
    }
}

fn pair_key(x: usize, y: usize) -> (usize, usize) {
    (x.min(y), x.max(y))
}

/// Splits `s` into the classes of the "same" relation. The side holding the
/// smallest vertex of `s` comes first; both sides are sorted.
pub fn split_s(s: &[usize], labels: &BTreeMap<(usize, usize), PairLabel>) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    let Some(&anchor) = s.first() else {
        return Ok((Vec::new(), Vec::new()));
    };
    let label = |x: usize, y: usize| {
        labels
            .get(&pair_key(x, y))
            .copied()
            .ok_or_else(|| Error::InconsistentCard(format!("no label for pair ({x}, {y})")))
    };
    let mut a = vec![anchor];
    let mut b = Vec::new();
    for &x in &s[1..] {
        match label(anchor, x)? {
            PairLabel::Same => a.push(x),
            PairLabel::Different => b.push(x),
        }
    }
    let side_a: std::collections::HashSet<usize> = a.iter().copied().collect();
    for (x, y) in s.iter().copied().tuple_combinations() {
        let together = side_a.contains(&x) == side_a.contains(&y);
        if together != (label(x, y)? == PairLabel::Same) {
            return Err(Error::InconsistentCard(format!("labels on ({x}, {y}) contradict a two-class split")));
        }
    }
    Ok((a, b))
}

/// Adds `u` (label `n`) adjacent to `side_u ∪ common` and `v` (label
/// `n + 1`) adjacent to `side_v ∪ common`, with `u` and `v` nonadjacent.
pub fn complete_card(card: &Graph, side_u: &[usize], side_v: &[usize], common: &[usize]) -> Result<Graph> {
    let n = card.n();
    if n + 2 > MAX_VERTICES {
        return Err(Error::VertexCount(n + 2));
    }
    let (u, v) = (n, n + 1);
    let edges = card
        .edges()
        .chain(side_u.iter().chain(common).map(|&x| (x, u)))
        .chain(side_v.iter().chain(common).map(|&x| (x, v)));
    Graph::from_edges(n + 2, edges)
}

/// Degree classes of a card omitting a nonadjacent pair from a `k`-regular
/// graph on `n` vertices: `(common, s)` with degrees `k-2` and `k-1`.
fn nonadjacent_profile(n: usize, k: usize, card: &Graph) -> Result<(Vec<usize>, Vec<usize>)> {
    if card.n() + 2 != n {
        return Err(Error::Precondition(format!("card has {} vertices, expected {}", card.n(), n.saturating_sub(2))));
    }
    if !(n * k).is_multiple_of(2) || card.edge_count() + 2 * k != n * k / 2 {
        return Err(Error::NotANonadjacentCard);
    }
    let mut common = Vec::new();
    let mut s = Vec::new();
    for v in 0..card.n() {
        let d = card.degree(v);
        if d + 1 == k {
            s.push(v);
        } else if d + 2 == k {
            common.push(v);
        } else if d != k {
            return Err(Error::NotANonadjacentCard);
        }
    }
    Ok((common, s))
}

fn label_all(
    s: &[usize],
    classify: impl Fn(usize, usize) -> Result<PairLabel>,
) -> Result<BTreeMap<(usize, usize), PairLabel>> {
    s.iter().copied().tuple_combinations().map(|(x, y)| Ok((pair_key(x, y), classify(x, y)?))).collect()
}

fn finish(
    card: &Graph,
    k: usize,
    common: &[usize],
    s: &[usize],
    labels: &BTreeMap<(usize, usize), PairLabel>,
) -> Result<(Graph, (usize, usize))> {
    let (a, b) = split_s(s, labels)?;
    let side = k - common.len();
    if a.len() != side || b.len() != side {
        return Err(Error::InconsistentCard(format!(
            "split of S has sides {} and {}, expected {side} each",
            a.len(),
            b.len()
        )));
    }
    Ok((complete_card(card, &a, &b, common)?, (a.len(), b.len())))
}

fn srg_inner(n: usize, params: SrgParams, card: &Graph) -> Result<(Graph, (usize, usize))> {
    let (common, s) = nonadjacent_profile(n, params.k, card)?;
    if common.len() != params.mu || s.len() + 2 * params.mu != 2 * params.k {
        return Err(Error::NotANonadjacentCard);
    }
    let labels = label_all(&s, |x, y| classify_pair_srg(card, params, x, y))?;
    finish(card, params.k, &common, &s, &labels)
}

fn wdr_inner(n: usize, params: WdrParams, card: &Graph) -> Result<(Graph, (usize, usize))> {
    if params.mu_prime < 2 {
        return Err(Error::Mu1Unsupported(params.mu_prime));
    }
    let (common, s) = nonadjacent_profile(n, params.k, card)?;
    if common.is_empty() {
        return Err(Error::NeedDistance2Card);
    }
    if common.len() != params.mu_prime || s.len() + 2 * params.mu_prime != 2 * params.k {
        return Err(Error::NotANonadjacentCard);
    }
    let labels = label_all(&s, |x, y| classify_pair_wdr(card, params, x, y))?;
    finish(card, params.k, &common, &s, &labels)
}

/// Reconstructs a strongly regular graph from a card omitting a
/// nonadjacent pair. The omitted vertices get labels `n-2` and `n-1`.
pub fn reconstruct_srg(n: usize, params: SrgParams, card: &Graph) -> Result<Graph> {
    srg_inner(n, params, card).map(|(g, _)| g)
}

/// Reconstructs a weakly distance-regular graph with `mu' >= 2` from a card
/// omitting a pair at distance 2.
pub fn reconstruct_wdr(n: usize, params: WdrParams, card: &Graph) -> Result<Graph> {
    wdr_inner(n, params, card).map(|(g, _)| g)
}

fn clique_union(sizes: &[usize]) -> Result<Graph> {
    let mut parts = sizes.iter().map(|&s| complete(s));
    let first = parts.next().ok_or(Error::Unrecognized)??;
    parts.try_fold(first, |acc, next| disjoint_union(&acc, &next?))
}

/// Recognizes the deck and rebuilds the graph, then recomputes its
/// `(n-2)`-deck and requires equality with the input.
///
/// Single-card branches use the nonadjacent-omitted card with the smallest
/// canonical code (for weakly distance-regular decks, the smallest with a
/// positive common-neighbor count).
pub fn reconstruct_from_deck(n: usize, deck: &Deck) -> Result<(Graph, ReconstructionReport)> {
    let branch = recognize_deck(n, deck)?.ok_or(Error::Unrecognized)?;
    let mut card_code = None;
    let mut class_sizes = None;
    let graph = match &branch {
        Recognition::Complete => complete(n)?,
        Recognition::CliqueUnion(sizes) => clique_union(sizes)?,
        Recognition::Srg(p) => {
            let e = n * p.k / 2;
            let mut chosen = None;
            for card in deck.cards() {
                if !classify_card(card, p.k, e)?.omitted_adjacent {
                    chosen = Some(card);
                    break;
                }
            }
            let card = chosen.ok_or(Error::Unrecognized)?;
            let (g, sizes) = srg_inner(n, *p, &card.representative)?;
            card_code = Some(card.code.clone());
            class_sizes = Some(sizes);
            g
        }
        Recognition::Wdr(p) => {
            if p.mu_prime < 2 {
                return Err(Error::Mu1Unsupported(p.mu_prime));
            }
            let e = n * p.k / 2;
            let mut chosen = None;
            for card in deck.cards() {
                let c = classify_card(card, p.k, e)?;
                if !c.omitted_adjacent && c.common_count > 0 {
                    chosen = Some(card);
                    break;
                }
            }
            let card = chosen.ok_or(Error::NeedDistance2Card)?;
            let (g, sizes) = wdr_inner(n, *p, &card.representative)?;
            card_code = Some(card.code.clone());
            class_sizes = Some(sizes);
            g
        }
    };
    if !decks_equal(&compute_deck(&graph, n - 2)?, deck) {
        return Err(Error::DeckMismatch);
    }
    Ok((graph, ReconstructionReport { branch, card_code, class_sizes, verified: true }))
}
