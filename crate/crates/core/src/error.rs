use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alpha is not an involution at dart {0}")]
    NotInvolution(usize),
    #[error("alpha fixes dart {0}")]
    FixedPointInAlpha(usize),
    #[error("sigma is not a permutation")]
    NotPermutation,
    #[error("darts are not connected by sigma and alpha")]
    NotConnected,
    #[error("root dart {0} is out of range")]
    BadRoot(usize),
    #[error("map is not bicolorable")]
    NotBicolorable,
    #[error("map is not 4-valent")]
    NotFourValent,
    #[error("map is not unicellular")]
    NotUnicellular,
    #[error("stems are unbalanced: labels do not close up")]
    UnbalancedStems,
    #[error("blossoming map is not well-rooted")]
    NotWellRooted,
    #[error("core is not scheme-rooted")]
    NotSchemeRooted,
    #[error("stem {0} is not rootable")]
    NotRootable(usize),
    #[error("offset graph has a cycle")]
    CyclicOffsetGraph,
    #[error("naming is not consistent with the offset graph")]
    InconsistentNaming,
    #[error("walk does not connect heights {from} and {to}")]
    HeightMismatch { from: i64, to: i64 },
    #[error("bad interval [{0}, {1})")]
    BadInterval(i64, i64),
    #[error("fixed-point system is not contracting")]
    NonContracting,
    #[error("conversion failed: {0}")]
    ConversionFailure(String),
    #[error("out of domain: {0}")]
    DomainError(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("counterexample found: {0}")]
    CounterexampleFound(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
