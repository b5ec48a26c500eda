use thiserror::Error;

/// Errors raised by the analysis library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty ordering text")]
    EmptyInput,
    #[error("malformed ordering: {0}")]
    MalformedOrdering(String),
    #[error("unknown alternative `{0}`")]
    UnknownAlternative(String),
    #[error("alternative `{0}` appears more than once")]
    DuplicateAlternative(String),
    #[error("alternative `{0}` is missing from the ordering")]
    MissingAlternative(String),
    #[error("invalid alternative id `{0}` (expected [A-Za-z0-9_]+)")]
    InvalidAlternativeId(String),
    #[error("alternative index {0} is not in the alternative set")]
    NotInAlternativeSet(usize),
    #[error("triple members must be pairwise distinct")]
    DegenerateTriple,
    #[error("ordering covers {0} alternatives, expected exactly 3")]
    NotATripleOrdering(usize),
    #[error("ordering covers {found} alternatives, profile has {expected}")]
    AlternativeCountMismatch { expected: usize, found: usize },
    #[error("malformed line: {0}")]
    MalformedLine(String),
    #[error("invalid voter id `{0}` (expected a positive integer)")]
    InvalidVoterId(String),
    #[error("voter id {0} appears more than once")]
    DuplicateVoter(i64),
    #[error("rewrite no longer matches the profile (voter {0})")]
    StaleRewrite(i64),
    #[error("reduced structure still admits a rewrite")]
    NotSteady,
    #[error("no witness found with at most {0} additional orderings")]
    SearchBoundExceeded(usize),
    #[error("enumeration of {requested} items exceeds the budget of {budget}")]
    BudgetExceeded { requested: u128, budget: u128 },
    #[error("{what} exceeds the enumeration bound {bound}")]
    BoundExceeded { what: String, bound: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
