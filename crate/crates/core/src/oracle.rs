//! Brute-force ground truth over all graphs on at most 7 vertices.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::canon::{canonical_form, is_isomorphic, CanonicalCode};
use crate::deck::{compute_deck, decks_equal, Deck};
use crate::error::{Error, Result};
use crate::generators::{srg_params, wdr_params};
use crate::graph::Graph;
use crate::reconstruct::reconstruct_from_deck;

/// Largest `n` covered by the exhaustive sweep.
pub const ORACLE_MAX_N: usize = 7;

fn check_range(n: usize) -> Result<()> {
    if (1..=ORACLE_MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfOracleRange(n))
    }
}

static CLASSES: [OnceLock<Vec<CanonicalCode>>; ORACLE_MAX_N + 1] = [const { OnceLock::new() }; ORACLE_MAX_N + 1];

/// Canonical codes of all `n`-vertex isomorphism classes, sorted. Computed
/// once per `n` by canonizing every labeled graph.
pub fn class_codes(n: usize) -> Result<&'static [CanonicalCode]> {
    check_range(n)?;
    Ok(CLASSES[n].get_or_init(|| {
        let pairs = n * (n - 1) / 2;
        let codes = (0..1u64 << pairs)
            .into_par_iter()
            .fold(HashSet::new, |mut seen, mask| {
                seen.insert(canonical_form(&Graph::from_pair_mask(n, mask).expect("n <= 7")));
                seen
            })
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        let mut codes: Vec<_> = codes.into_iter().collect();
        codes.sort_unstable();
        codes
    }))
}

/// One canonical representative per isomorphism class on `n` vertices, in
/// canonical-code order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(class_codes(n)?.iter().map(CanonicalCode::to_graph).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreimageResult {
    /// Digest of the target deck.
    pub deck_code: u64,
    /// Pairwise non-isomorphic graphs with the target deck, in code order.
    pub preimages: Vec<CanonicalCode>,
    /// More than `cap` preimages exist; only the first `cap` are listed.
    pub truncated: bool,
}

pub fn find_deck_preimages(n: usize, deck: &Deck, cap: usize) -> Result<PreimageResult> {
    check_range(n)?;
    if deck.n() != n || deck.k() >= n {
        return Err(Error::Precondition(format!(
            "preimage search needs a k-deck with k < n = {n}, got n = {} k = {}",
            deck.n(),
            deck.k()
        )));
    }
    let codes = class_codes(n)?;
    let matches: Vec<bool> = codes
        .par_iter()
        .map(|code| compute_deck(&code.to_graph(), deck.k()).is_ok_and(|d| decks_equal(&d, deck)))
        .collect();
    let mut found = codes.iter().zip(matches).filter(|(_, m)| *m).map(|(c, _)| c.clone());
    let preimages: Vec<_> = found.by_ref().take(cap).collect();
    let truncated = found.next().is_some();
    Ok(PreimageResult { deck_code: deck.digest(), preimages, truncated })
}

/// Whether `g` is the only graph, up to isomorphism, with its `(n-l)`-deck.
pub fn is_l_reconstructible(g: &Graph, l: usize) -> Result<bool> {
    let n = g.n();
    check_range(n)?;
    if l == 0 || l >= n {
        return Err(Error::Precondition(format!("need 1 <= l < n = {n}, got l = {l}")));
    }
    let result = find_deck_preimages(n, &compute_deck(g, n - l)?, 2)?;
    Ok(result.preimages.len() == 1 && result.preimages[0] == canonical_form(g))
}

/// Groups of non-isomorphic `n`-vertex graphs sharing a `k`-deck. Groups
/// are sorted internally and by their first code.
pub fn find_collisions(n: usize, k: usize) -> Result<Vec<Vec<CanonicalCode>>> {
    check_range(n)?;
    if k == 0 || k >= n {
        return Err(Error::CardSize { n, k });
    }
    let codes = class_codes(n)?;
    let decks = class_decks(n, k)?;
    let mut buckets: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, d) in decks.iter().enumerate() {
        buckets.entry(d.digest()).or_default().push(i);
    }
    let mut groups = Vec::new();
    for members in buckets.into_values().filter(|m| m.len() > 1) {
        // the digest only proposes candidates; exact comparison decides
        let mut rest = members;
        while let Some(first) = rest.first().copied() {
            let (same, other): (Vec<usize>, Vec<usize>) =
                rest.into_iter().partition(|&i| decks_equal(&decks[i], &decks[first]));
            if same.len() > 1 {
                groups.push(same.iter().map(|&i| codes[i].clone()).collect::<Vec<_>>());
            }
            rest = other;
        }
    }
    groups.sort();
    Ok(groups)
}

/// Which graphs a certification run covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphClass {
    All,
    /// Strongly regular with `mu >= 1`.
    Srg,
    /// Connected, weakly distance-regular with `mu' >= 2`.
    Wdr,
}

impl GraphClass {
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::All => true,
            GraphClass::Srg => srg_params(g).is_some(),
            GraphClass::Wdr => g.is_connected() && wdr_params(g).is_some_and(|p| p.mu_prime >= 2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub code: CanonicalCode,
    /// Preimages of the `(n-l)`-deck, counted up to 2.
    pub preimages: usize,
    pub reconstructible: bool,
    /// For `l = 2`, `n >= 6`: whether the constructive pipeline returns
    /// this graph. `None` when not applicable.
    pub pipeline_agrees: Option<bool>,
}

/// `k`-decks of every `n`-vertex class, in class order.
fn class_decks(n: usize, k: usize) -> Result<Vec<Deck>> {
    class_codes(n)?.par_iter().map(|c| compute_deck(&c.to_graph(), k)).collect()
}

/// Checks `l`-reconstructibility of every class member on `n` vertices.
pub fn certify(n: usize, l: usize, class: GraphClass) -> Result<Vec<Certificate>> {
    check_range(n)?;
    if l == 0 || l >= n {
        return Err(Error::Precondition(format!("need 1 <= l < n = {n}, got l = {l}")));
    }
    let codes = class_codes(n)?;
    let decks = class_decks(n, n - l)?;
    let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, d) in decks.iter().enumerate() {
        buckets.entry(d.digest()).or_default().push(i);
    }
    let certificate = |i: usize| {
        let g = codes[i].to_graph();
        let deck = &decks[i];
        let preimages = buckets[&deck.digest()].iter().filter(|&&j| decks_equal(&decks[j], deck)).count();
        let pipeline_agrees = (l == 2 && n >= 6 && class != GraphClass::All)
            .then(|| reconstruct_from_deck(n, deck).is_ok_and(|(h, report)| report.verified && is_isomorphic(&g, &h)));
        Certificate {
            code: codes[i].clone(),
            preimages: preimages.min(2),
            reconstructible: preimages == 1,
            pipeline_agrees,
        }
    };
    Ok((0..codes.len()).into_par_iter().filter(|&i| class.contains(&codes[i].to_graph())).map(certificate).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn out_of_range() {
        assert_eq!(enumerate_graphs(8).unwrap_err(), Error::OutOfOracleRange(8));
        assert_eq!(enumerate_graphs(0).unwrap_err(), Error::OutOfOracleRange(0));
        assert!(is_l_reconstructible(&petersen(), 2).is_err());
        assert!(find_collisions(9, 3).is_err());
    }

    #[test]
    fn c4k1_preimages() {
        let g = disjoint_union(&cycle(4).unwrap(), &complete(1).unwrap()).unwrap();
        let r = find_deck_preimages(5, &compute_deck(&g, 3).unwrap(), 10).unwrap();
        assert!(r.preimages.contains(&canonical_form(&g)));
        assert!(r.preimages.contains(&canonical_form(&subdivided_star())));
        assert!(!r.truncated);
        let capped = find_deck_preimages(5, &compute_deck(&g, 3).unwrap(), 1).unwrap();
        assert_eq!(capped.preimages.len(), 1);
        assert!(capped.truncated);
        assert_eq!(is_l_reconstructible(&g, 2), Ok(false));
    }

    #[test]
    fn three_vertex_two_decks_do_not_collide() {
        // a 3-vertex graph is determined by its edge count
        assert_eq!(find_collisions(3, 2), Ok(vec![]));
    }

    #[test]
    fn c4k1_collision_group() {
        let groups = find_collisions(5, 3).unwrap();
        let mut want = [
            canonical_form(&disjoint_union(&cycle(4).unwrap(), &complete(1).unwrap()).unwrap()),
            canonical_form(&subdivided_star()),
        ];
        want.sort();
        assert!(groups.iter().any(|g| want.iter().all(|c| g.contains(c))));
    }
}
