//! Inference from an `(n-2)`-deck alone.
//!
//! For a `k`-regular graph with `e = kn/2` edges, a card omitting the pair
//! `{u, v}` lacks `2k - 1` edges when `u ~ v` and `2k` otherwise, and the
//! common neighbors of `u` and `v` are exactly the card vertices of degree
//! `k - 2`. Regularity is certified from these counts rather than from a
//! general degree-list reconstruction.

use std::fmt;

use crate::deck::{edge_count_from_deck, missing_edge_count, subdeck, Card, Deck};
use crate::error::{Error, Result};

/// Strongly regular parameters `(k, lambda, mu)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

/// Weakly distance-regular parameters `(k, lambda, mu')`, where `mu'` is the
/// common-neighbor count of pairs at distance exactly 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WdrParams {
    pub k: usize,
    pub lambda: usize,
    pub mu_prime: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CardClassification {
    pub omitted_adjacent: bool,
    /// Common neighbors of the omitted pair.
    pub common_count: usize,
}

/// Outcome of deck recognition, in pipeline order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    Complete,
    /// Disjoint union of cliques with these sizes.
    CliqueUnion(Vec<usize>),
    Srg(SrgParams),
    Wdr(WdrParams),
}

impl fmt::Display for Recognition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recognition::Complete => write!(f, "complete"),
            Recognition::CliqueUnion(sizes) => {
                write!(f, "clique-union")?;
                sizes.iter().try_for_each(|s| write!(f, " {s}"))
            }
            Recognition::Srg(p) => write!(f, "srg {} {} {}", p.k, p.lambda, p.mu),
            Recognition::Wdr(p) => write!(f, "wdr {} {} {}", p.k, p.lambda, p.mu_prime),
        }
    }
}

/// Checks `n >= 6` and that `deck` is an `(n-2)`-deck of an `n`-vertex graph.
fn check_shape(n: usize, deck: &Deck) -> Result<()> {
    if n < 6 {
        return Err(Error::Precondition(format!("deck recognition needs n >= 6, got n = {n}")));
    }
    if deck.n() != n || deck.k() + 2 != n {
        return Err(Error::Precondition(format!(
            "expected an (n-2)-deck with n = {n}, got n = {} k = {}",
            deck.n(),
            deck.k()
        )));
    }
    Ok(())
}

/// The degree `k` if the deck is consistent with a `k`-regular graph.
pub fn infer_regular_degree(n: usize, deck: &Deck) -> Result<Option<usize>> {
    check_shape(n, deck)?;
    let e = edge_count_from_deck(deck)?;
    if 2 * e % n != 0 {
        return Ok(None);
    }
    let k = 2 * e / n;
    for card in deck.cards() {
        let missing = missing_edge_count(card, e)?;
        if missing != 2 * k && missing + 1 != 2 * k {
            return Ok(None);
        }
    }
    Ok(Some(k))
}

pub fn classify_card(card: &Card, k: usize, e: usize) -> Result<CardClassification> {
    let missing = missing_edge_count(card, e)?;
    let omitted_adjacent = if missing == 2 * k {
        false
    } else if missing + 1 == 2 * k {
        true
    } else {
        return Err(Error::NotRegularConsistent { k, missing });
    };
    let g = &card.representative;
    let common_count = match k.checked_sub(2) {
        Some(d) => (0..g.n()).filter(|&v| g.degree(v) == d).count(),
        None => 0,
    };
    Ok(CardClassification { omitted_adjacent, common_count })
}

/// Regular degree, edge count, and every card's classification.
fn classify_all(n: usize, deck: &Deck) -> Result<Option<(usize, Vec<CardClassification>)>> {
    let Some(k) = infer_regular_degree(n, deck)? else {
        return Ok(None);
    };
    let e = n * k / 2;
    let classes = deck.cards().iter().map(|c| classify_card(c, k, e)).collect::<Result<_>>()?;
    Ok(Some((k, classes)))
}

/// The single value shared by all items, `Ok(None)` for no items, `Err(())`
/// if they disagree.
fn common_value(mut it: impl Iterator<Item = usize>) -> std::result::Result<Option<usize>, ()> {
    let Some(first) = it.next() else {
        return Ok(None);
    };
    if it.all(|x| x == first) {
        Ok(Some(first))
    } else {
        Err(())
    }
}

pub fn recognize_srg(n: usize, deck: &Deck) -> Result<Option<SrgParams>> {
    let Some((k, classes)) = classify_all(n, deck)? else {
        return Ok(None);
    };
    let adjacent = classes.iter().filter(|c| c.omitted_adjacent).map(|c| c.common_count);
    let nonadjacent = classes.iter().filter(|c| !c.omitted_adjacent).map(|c| c.common_count);
    let (Ok(lambda), Ok(Some(mu))) = (common_value(adjacent), common_value(nonadjacent)) else {
        return Ok(None);
    };
    if mu == 0 {
        return Ok(None);
    }
    Ok(Some(SrgParams { k, lambda: lambda.unwrap_or(0), mu }))
}

pub fn recognize_wdr(n: usize, deck: &Deck) -> Result<Option<WdrParams>> {
    let Some((k, classes)) = classify_all(n, deck)? else {
        return Ok(None);
    };
    let adjacent = classes.iter().filter(|c| c.omitted_adjacent).map(|c| c.common_count);
    // zero counts belong to pairs at distance > 2
    let distance2 = classes.iter().filter(|c| !c.omitted_adjacent && c.common_count > 0).map(|c| c.common_count);
    let (Ok(lambda), Ok(Some(mu_prime))) = (common_value(adjacent), common_value(distance2)) else {
        return Ok(None);
    };
    Ok(Some(WdrParams { k, lambda: lambda.unwrap_or(0), mu_prime }))
}

/// Whether every card is complete, i.e. the deck is that of `K_n`.
pub fn is_complete(n: usize, deck: &Deck) -> bool {
    deck.n() == n
        && deck.k() + 2 == n
        && deck.cards().iter().all(|c| {
            let g = &c.representative;
            g.edge_count() == g.n() * (g.n() - 1) / 2
        })
}

/// Clique sizes of a regular disjoint union of cliques, recognized by the
/// absence of induced `P3` in the derived 3-deck.
pub fn recognize_clique_union(n: usize, deck: &Deck) -> Result<Option<Vec<usize>>> {
    check_shape(n, deck)?;
    let three = subdeck(deck, 3)?;
    // on three vertices, two edges means P3
    if three.cards().iter().any(|c| c.representative.edge_count() == 2) {
        return Ok(None);
    }
    let Some(k) = infer_regular_degree(n, deck)? else {
        return Ok(None);
    };
    if !n.is_multiple_of(k + 1) {
        return Err(Error::InconsistentDeck(format!(
            "P3-free and {k}-regular, but {n} vertices do not split into cliques of size {}",
            k + 1
        )));
    }
    Ok(Some(vec![k + 1; n / (k + 1)]))
}

/// Runs the recognizers in pipeline order: complete, clique union, strongly
/// regular, weakly distance-regular.
pub fn recognize_deck(n: usize, deck: &Deck) -> Result<Option<Recognition>> {
    check_shape(n, deck)?;
    deck.check_total()?;
    if is_complete(n, deck) {
        return Ok(Some(Recognition::Complete));
    }
    if let Some(sizes) = recognize_clique_union(n, deck)? {
        return Ok(Some(Recognition::CliqueUnion(sizes)));
    }
    if let Some(p) = recognize_srg(n, deck)? {
        return Ok(Some(Recognition::Srg(p)));
    }
    Ok(recognize_wdr(n, deck)?.map(Recognition::Wdr))
}
