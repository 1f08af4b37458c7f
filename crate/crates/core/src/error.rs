use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the operation (or the
    /// hypothesis of the inequality it evaluates) is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// The logarithmic integral has a pole at 1.
    #[error("pole at x = 1")]
    Pole,

    /// A sieve window was requested with `lo > hi` or `lo = 0`.
    #[error("invalid sieve window [{lo}, {hi}]")]
    Window { lo: u64, hi: u64 },

    /// A sieve window exceeds the configured segment budget.
    #[error("window of {len} entries exceeds segment budget of {budget}")]
    SegmentTooLarge { len: u64, budget: u64 },

    #[error("unknown lemma id `{0}`")]
    UnknownLemma(String),

    #[error("constants catalogue: {0}")]
    Catalogue(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
