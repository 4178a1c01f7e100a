use thiserror::Error;

/// Errors surfaced by the workbench.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("inversion of zero in GF({p}^{n})")]
    ZeroInversion { p: u32, n: u32 },

    #[error("coset enumeration did not close within {bound} cosets")]
    EnumerationDidNotClose { bound: usize },

    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("subgroup is not normal (witness: g={g}, n={n})")]
    NotNormal { g: usize, n: usize },

    #[error("group table failed validation: {0}")]
    BadTable(String),

    #[error("size bound exceeded: {what} (got {got}, bound {bound})")]
    SizeBound {
        what: &'static str,
        got: usize,
        bound: usize,
    },

    #[error("group is abelian; the non-commuting graph has no vertices")]
    AbelianGroup,

    #[error("inconsistent Laplacian spectrum: {0}")]
    InconsistentSpectrum(String),

    #[error("commuting graph is not a disjoint union of cliques")]
    NotCliqueUnion,

    #[error("numeric spectrum could not be certified: {0}")]
    Uncertified(String),

    #[error("spectrum oracles disagree: {0}")]
    OracleDisagreement(String),

    #[error("hypothesis violated for {result}: {reason}")]
    HypothesisViolation { result: String, reason: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("config error: {0}")]
    Config(String),
}
