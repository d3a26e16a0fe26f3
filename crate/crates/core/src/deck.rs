//! Decks: multisets of induced subgraphs up to isomorphism.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::graph6::parse_graph6;

/// One isomorphism class of cards with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Card {
    pub code: CanonicalCode,
    /// A labeled witness of the class.
    pub representative: Graph,
    pub multiplicity: u64,
}

/// The `k`-deck of an `n`-vertex graph.
///
/// Cards are kept sorted by canonical code, one entry per class.
#[derive(Clone, Debug)]
pub struct Deck {
    n: usize,
    k: usize,
    cards: Vec<Card>,
}

impl Deck {
    /// Assembles a deck from explicit cards. Realizability is not checked,
    /// only that every card has `k` vertices and carries its own code.
    pub fn from_cards(n: usize, k: usize, mut cards: Vec<Card>) -> Result<Deck> {
        if n == 0 || n > MAX_VERTICES || k == 0 || k > n {
            return Err(Error::CardSize { n, k });
        }
        for card in &cards {
            if card.representative.n() != k {
                return Err(Error::DeckFormat(format!(
                    "card {} has {} vertices, expected {k}",
                    card.representative,
                    card.representative.n()
                )));
            }
            if card.multiplicity == 0 {
                return Err(Error::DeckFormat(format!("card {} has multiplicity 0", card.code)));
            }
            if canonical_form(&card.representative) != card.code {
                return Err(Error::DeckFormat(format!("card {} carries a wrong code", card.representative)));
            }
        }
        cards.sort_by(|a, b| a.code.cmp(&b.code));
        if let Some(w) = cards.windows(2).find(|w| w[0].code == w[1].code) {
            return Err(Error::DeckFormat(format!("class {} listed twice", w[0].code)));
        }
        Ok(Deck { n, k, cards })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Cards in ascending canonical-code order.
    pub fn cards(&self) -> &[Card] {
        &self.cards
    }

    pub fn get(&self, code: &CanonicalCode) -> Option<&Card> {
        self.cards.binary_search_by(|c| c.code.cmp(code)).ok().map(|i| &self.cards[i])
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u64 {
        self.cards.iter().map(|c| c.multiplicity).sum()
    }

    /// Errors unless the multiplicities sum to `C(n, k)`.
    pub fn check_total(&self) -> Result<()> {
        let expected = binomial(self.n, self.k);
        let total = self.total();
        if total == expected {
            Ok(())
        } else {
            Err(Error::InconsistentDeck(format!(
                "multiplicities sum to {total}, expected C({}, {}) = {expected}",
                self.n, self.k
            )))
        }
    }

    /// Order-independent 64-bit fingerprint of `(n, k)` and the
    /// code-to-multiplicity map. Equal decks have equal digests.
    pub fn digest(&self) -> u64 {
        let body = self
            .cards
            .iter()
            .map(|c| mix(fnv1a(c.code.as_bytes()) ^ mix(c.multiplicity)))
            .fold(0u64, u64::wrapping_add);
        mix(body ^ mix((self.n as u64) << 32 | self.k as u64))
    }

    /// Serializes in the deck file format: a `deck n=<n> k=<k>` header,
    /// then `<graph6>\t<multiplicity>` per class. The graph6 written is the
    /// canonical code, so isomorphic decks serialize to identical bytes.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("deck n={} k={}\n", self.n, self.k);
        for card in &self.cards {
            let _ = writeln!(out, "{}\t{}", card.code, card.multiplicity);
        }
        out
    }

    pub fn parse_file(text: &str) -> Result<Deck> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::DeckFormat("empty input".into()))?;
        let (n, k) = parse_header(header)?;
        if n == 0 || n > MAX_VERTICES || k == 0 || k > n {
            return Err(Error::DeckFormat(format!("invalid sizes n={n} k={k}")));
        }
        let mut cards = Vec::new();
        for (i, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let bad = |what: &str| Error::DeckFormat(format!("line {}: {what}", i + 2));
            let (g6, mult) = line.split_once('\t').ok_or_else(|| bad("expected <graph6>\\t<multiplicity>"))?;
            let representative = parse_graph6(g6).map_err(|e| bad(&e.to_string()))?;
            let multiplicity: u64 = mult.trim_end_matches('\r').parse().map_err(|_| bad("invalid multiplicity"))?;
            cards.push(Card { code: canonical_form(&representative), representative, multiplicity });
        }
        Deck::from_cards(n, k, cards)
    }
}

fn parse_header(line: &str) -> Result<(usize, usize)> {
    let bad = || Error::DeckFormat(format!("malformed header {line:?}"));
    let mut parts = line.trim_end_matches('\r').split(' ');
    if parts.next() != Some("deck") {
        return Err(bad());
    }
    let mut field = |name: &str| -> Result<usize> {
        parts.next().and_then(|p| p.strip_prefix(name)).and_then(|v| v.parse().ok()).ok_or_else(bad)
    };
    let n = field("n=")?;
    let k = field("k=")?;
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok((n, k))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325u64, |h, &b| (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3))
}

// splitmix64 finalizer
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// `k`-subsets of `0..n` as bitmasks, in increasing numeric order.
struct Subsets {
    next: Option<u64>,
    limit: u64,
}

impl Subsets {
    fn new(n: usize, k: usize) -> Self {
        let first = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        Subsets { next: Some(first), limit: 1u64 << n }
    }
}

impl Iterator for Subsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        // Gosper's hack
        let c = cur & cur.wrapping_neg();
        let r = cur.wrapping_add(c);
        self.next = if r == 0 || c == 0 {
            None
        } else {
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < self.limit).then_some(nxt)
        };
        Some(cur)
    }
}

/// Whether subset `a` precedes `b` when both are listed as ascending
/// vertex sequences (equal sizes).
#[inline]
fn lex_less(a: u64, b: u64) -> bool {
    let d = a ^ b;
    a & d & d.wrapping_neg() != 0
}

/// The multiset of `k`-vertex induced subgraphs of `g`.
///
/// Each class keeps the first subset in lexicographic order as its
/// representative. Subsets are processed in parallel.
pub fn compute_deck(g: &Graph, k: usize) -> Result<Deck> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::CardSize { n, k });
    }
    type Acc = HashMap<CanonicalCode, (u64, u64)>;
    let merge = |mut a: Acc, b: Acc| {
        for (code, (count, first)) in b {
            a.entry(code)
                .and_modify(|e| {
                    e.0 += count;
                    if lex_less(first, e.1) {
                        e.1 = first;
                    }
                })
                .or_insert((count, first));
        }
        a
    };
    let classes = Subsets::new(n, k)
        .par_bridge()
        .fold(Acc::new, |mut acc, mask| {
            let card = g.induced_by_mask(mask).expect("k >= 1");
            acc.entry(canonical_form(&card))
                .and_modify(|e| {
                    e.0 += 1;
                    if lex_less(mask, e.1) {
                        e.1 = mask;
                    }
                })
                .or_insert((1, mask));
            acc
        })
        .reduce(Acc::new, merge);
    let cards = classes
        .into_iter()
        .map(|(code, (multiplicity, first))| Card {
            code,
            representative: g.induced_by_mask(first).expect("k >= 1"),
            multiplicity,
        })
        .collect();
    Ok(Deck::from_cards_unchecked(n, k, cards))
}

impl Deck {
    fn from_cards_unchecked(n: usize, k: usize, mut cards: Vec<Card>) -> Deck {
        cards.sort_by(|a, b| a.code.cmp(&b.code));
        Deck { n, k, cards }
    }
}

/// Derives the `k'`-deck from a `k`-deck: every `k'`-set of vertices lies in
/// exactly `C(n-k', k-k')` of the `k`-sets.
pub fn subdeck(deck: &Deck, k_small: usize) -> Result<Deck> {
    if k_small == 0 || k_small >= deck.k {
        return Err(Error::CardSize { n: deck.k, k: k_small });
    }
    let mut acc: HashMap<CanonicalCode, (u64, Graph)> = HashMap::new();
    for card in &deck.cards {
        for sub in compute_deck(&card.representative, k_small)?.cards {
            acc.entry(sub.code).or_insert_with(|| (0, sub.representative)).0 += sub.multiplicity * card.multiplicity;
        }
    }
    let each = binomial(deck.n - k_small, deck.k - k_small);
    let cards = acc
        .into_iter()
        .map(|(code, (count, representative))| {
            if count % each != 0 {
                return Err(Error::InconsistentDeck(format!(
                    "class {code} occurs {count} times, not a multiple of {each}"
                )));
            }
            Ok(Card { code, representative, multiplicity: count / each })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Deck::from_cards_unchecked(deck.n, k_small, cards))
}

/// Same `n`, `k` and code-to-multiplicity map. Representatives are ignored.
pub fn decks_equal(a: &Deck, b: &Deck) -> bool {
    a.n == b.n
        && a.k == b.k
        && a.cards.len() == b.cards.len()
        && a.cards.iter().zip(&b.cards).all(|(x, y)| x.code == y.code && x.multiplicity == y.multiplicity)
}

impl PartialEq for Deck {
    fn eq(&self, other: &Self) -> bool {
        decks_equal(self, other)
    }
}

impl Eq for Deck {}

/// Edge count of the original graph: each edge appears in `C(n-2, k-2)`
/// cards.
pub fn edge_count_from_deck(deck: &Deck) -> Result<usize> {
    if deck.k < 2 {
        return Err(Error::Precondition(format!("edge count needs k >= 2, got k = {}", deck.k)));
    }
    let sum: u64 = deck.cards.iter().map(|c| c.multiplicity * c.representative.edge_count() as u64).sum();
    let each = binomial(deck.n - 2, deck.k - 2);
    if !sum.is_multiple_of(each) {
        return Err(Error::InconsistentDeck(format!("card edges total {sum}, not divisible by {each}")));
    }
    Ok((sum / each) as usize)
}

/// Edges of the original graph that the card does not show.
pub fn missing_edge_count(card: &Card, e: usize) -> Result<usize> {
    let inside = card.representative.edge_count();
    e.checked_sub(inside)
        .ok_or_else(|| Error::InconsistentDeck(format!("card {} has {inside} edges, more than {e}", card.code)))
}
