use thiserror::Error;

/// Errors raised while building or operating on chain endomorphisms, carriers,
/// strings and self-maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a chain needs at least one element")]
    EmptyChain,

    #[error("chain of {n} elements exceeds the supported maximum of {max}")]
    ChainTooLarge { n: usize, max: usize },

    #[error("expected {expected} images, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("value {value} is outside the chain 0..{n}")]
    OutOfRange { value: usize, n: usize },

    #[error("images decrease at position {position}")]
    NotMonotone { position: usize },

    #[error("operands live on different chains ({left} vs {right})")]
    ChainMismatch { left: usize, right: usize },

    #[error("bad anchors {anchors:?} for a chain of {n} elements: {reason}")]
    BadAnchors {
        anchors: Vec<usize>,
        n: usize,
        reason: &'static str,
    },

    #[error("index {index} is outside 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("the set is not contained in the ambient carrier")]
    NotASubset,

    #[error("{label} sends an element outside the ambient carrier")]
    EscapesAmbient { label: String },

    #[error("domain is not closed under {operation}")]
    DomainNotClosed { operation: &'static str },

    #[error("self-maps have different domains or ambients")]
    DomainMismatch,

    #[error("{label} does not map its domain into itself")]
    NotInvariant { label: String },

    #[error("{label} is not a derivation on its domain")]
    NotADerivation { label: String },

    #[error("element is not a member of the string")]
    NotInString,

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("cannot resolve `{0}`")]
    SpecResolution(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
