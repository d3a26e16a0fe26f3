use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside 1..=62")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("induced subgraph needs at least one vertex")]
    EmptyVertexSet,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("deck file: {0}")]
    DeckFormat(String),
    #[error("card size {k} out of range for n = {n}")]
    CardSize { n: usize, k: usize },
    #[error("inconsistent deck: {0}")]
    InconsistentDeck(String),
    #[error("card is not consistent with a regular graph of degree {k}: {missing} edges missing")]
    NotRegularConsistent { k: usize, missing: usize },
    #[error("card is not a vertex-deleted subgraph of a {0}-regular graph")]
    NotACardOfRegular(usize),
    #[error("card does not omit a nonadjacent pair with the expected common neighbors")]
    NotANonadjacentCard,
    #[error("inconsistent card: {0}")]
    InconsistentCard(String),
    #[error("weakly distance-regular reconstruction requires mu' >= 2 (got mu' = {0})")]
    Mu1Unsupported(usize),
    #[error("card omits a pair at distance greater than 2; a distance-2 card is required")]
    NeedDistance2Card,
    #[error("deck matches no supported graph class")]
    Unrecognized,
    #[error("reconstructed graph does not reproduce the input deck")]
    DeckMismatch,
    #[error("n = {0} is outside the exhaustive oracle range 1..=7")]
    OutOfOracleRange(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
}

/// Coarse error families, one per command-line exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    Usage,
    Parse,
    Unrecognized,
    Inconsistent,
    OracleRange,
}

impl Error {
    pub fn category(&self) -> Category {
        use Error::*;
        match self {
            VertexCount(_)
            | VertexOutOfRange { .. }
            | Loop(_)
            | SameVertex(_)
            | EmptyVertexSet
            | CardSize { .. }
            | InvalidParameter(_) => Category::Usage,
            Graph6(_) | DeckFormat(_) => Category::Parse,
            Mu1Unsupported(_) | NeedDistance2Card | Unrecognized | Precondition(_) => Category::Unrecognized,
            InconsistentDeck(_)
            | NotRegularConsistent { .. }
            | NotACardOfRegular(_)
            | NotANonadjacentCard
            | InconsistentCard(_)
            | DeckMismatch => Category::Inconsistent,
            OutOfOracleRange(_) => Category::OracleRange,
        }
    }
}
