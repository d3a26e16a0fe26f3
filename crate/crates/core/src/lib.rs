//! Graph decks and 2-reconstruction of strongly regular and weakly
//! distance-regular graphs.
//!
//! The `k`-deck of an `n`-vertex graph is the multiset of its `C(n, k)`
//! induced `k`-vertex subgraphs up to isomorphism. This crate computes decks,
//! recognizes strongly regular and weakly distance-regular graphs from their
//! `(n-2)`-decks, rebuilds such graphs from a single card, and checks the
//! results against an exhaustive oracle on small graphs.
//!
//! ```
//! use deckrec::{compute_deck, generators, is_isomorphic, reconstruct_from_deck};
//!
//! let petersen = generators::petersen();
//! let deck = compute_deck(&petersen, 8).unwrap();
//! let (g, report) = reconstruct_from_deck(10, &deck).unwrap();
//! assert!(report.verified);
//! assert!(is_isomorphic(&g, &petersen));
//! ```

// Graphs, graph6 and canonical codes
pub mod canon;
pub mod graph;
pub mod graph6;

// Decks and the operations on them
pub mod deck;
pub mod recognize;
pub mod reconstruct;

pub mod generators;

// Exhaustive ground truth for n <= 7
pub mod oracle;

mod error;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, is_isomorphic, CanonicalCode};
pub use deck::{compute_deck, decks_equal, edge_count_from_deck, missing_edge_count, subdeck, Card, Deck};
pub use error::{Category, Error, Result};
pub use graph::{DistanceMatrix, Graph, MAX_VERTICES};
pub use graph6::{parse_graph6, to_graph6};
pub use recognize::{
    classify_card, infer_regular_degree, is_complete, recognize_clique_union, recognize_deck, recognize_srg,
    recognize_wdr, CardClassification, Recognition, SrgParams, WdrParams,
};
pub use reconstruct::{
    classify_pair_srg, classify_pair_wdr, complete_card, reconstruct_from_deck, reconstruct_regular_1card,
    reconstruct_srg, reconstruct_wdr, split_s, PairLabel, ReconstructionReport,
};
