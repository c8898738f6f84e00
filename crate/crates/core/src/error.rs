use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a poset needs at least one element")]
    Empty,
    #[error("{0} elements exceed the supported maximum of {max}", max = crate::MAX_ELEMENTS)]
    TooLarge(usize),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("empty label")]
    EmptyLabel,
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("order relation has a cycle through `{0}` and `{1}`")]
    Cycle(String, String),
    #[error("order relation is not transitive: `{0}` <= `{1}` <= `{2}` but not `{0}` <= `{2}`")]
    NotTransitive(String, String, String),
    #[error("order matrix is not square or does not match the label count")]
    BadMatrix,
    #[error("relation is not a partition of the ground set")]
    NotPartition,
    #[error("relation is not an equivalence")]
    NotEquivalence,
    #[error("relation is not a congruence")]
    NotCongruence,
    #[error("relation is not reflexive")]
    NotReflexive,
    #[error("poset has no top element")]
    NoTop,
    #[error("poset is not bounded")]
    NotBounded,
    #[error("set does not contain the top element")]
    TopNotInSet,
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("set is not a strong filter closed under relative pseudocomplementation")]
    NotStrongFilter,
    #[error("brute-force enumeration limited to {limit} elements, poset has {size}")]
    TooLargeForBruteForce { size: usize, limit: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
