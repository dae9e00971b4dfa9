use thiserror::Error;

/// Reasons a complex description is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("grading violation on arrow {from} -> {to}: {reason}")]
    Grading {
        from: String,
        to: String,
        reason: String,
    },

    #[error("differential does not square to zero: {from} reaches {to} an odd number of times")]
    Differential { from: String, to: String },

    #[error(
        "HFK ranks are not symmetric: rank {rank} in Alexander grading {grading}, \
         rank {mirror_rank} in grading {}", -grading
    )]
    Symmetry {
        grading: i64,
        rank: usize,
        mirror_rank: usize,
    },

    #[error("homology of the {subquotient} subquotient has dimension {dimension}, expected 1")]
    Normalization {
        subquotient: &'static str,
        dimension: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Complex(#[from] ComplexError),

    /// No ε rule matched the computed (τ, ν) of a complex and its mirror.
    #[error(
        "no epsilon rule matches tau={tau}, nu={nu}, tau(-K)={tau_mirror}, nu(-K)={nu_mirror}"
    )]
    Exhaustiveness {
        tau: i64,
        nu: i64,
        tau_mirror: i64,
        nu_mirror: i64,
    },

    #[error("inference table rows {first} and {second} disagree on {field}")]
    RowConflict {
        first: u8,
        second: u8,
        field: &'static str,
    },

    #[error("no spin^c structure on either orientation of the trace is nontrivial, but framing {0} is even")]
    EvenFramingUndetermined(i64),

    #[error("framing mismatch: {0} vs {1}")]
    FramingMismatch(i64, i64),

    #[error("spin^c label {s} lies outside the truncation range [-{bound}, {bound}]")]
    OutOfTruncation { s: i64, bound: i64 },

    #[error("truncation {requested} is below the minimum {minimum} for this complex and framing")]
    TruncationTooSmall { requested: i64, minimum: i64 },

    #[error("inconsistent invariant input: {0}")]
    InconsistentInput(String),

    #[error("twisted satellite bound requires framing <= 0, got {0}")]
    PositiveTwist(i64),

    #[error("surface genus must be nonnegative, got {0}")]
    NegativeGenus(i64),

    #[error("unknown library entry `{0}`")]
    UnknownLibraryEntry(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Whether the failure is a broken internal consistency check rather than bad input.
    pub fn is_consistency_failure(&self) -> bool {
        matches!(
            self,
            Error::Exhaustiveness { .. } | Error::RowConflict { .. } | Error::EvenFramingUndetermined(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
