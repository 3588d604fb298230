use num_bigint::BigUint;

/// Crate-wide error type. Variants are deliberately fine-grained so callers
/// (and the CLI exit-code mapping) can tell precondition failures apart.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ambient variable counts differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("degrees differ: {0} vs {1}")]
    DegreeMismatch(u32, u32),

    #[error("segment ends out of lex order: {u} < {v}")]
    SegmentOrder { u: String, v: String },

    #[error("enumeration needs {required} monomials, over the cap of {cap} (raise LEXGOTZ_ENUM_CAP)")]
    EnumerationCap { required: BigUint, cap: u64 },

    #[error("generators are not all of one degree")]
    NotEquigenerated,

    #[error("ideal has no generators")]
    EmptyIdeal,

    #[error("{what} supports at most {cap} generators, got {got}")]
    GeneratorCap {
        what: &'static str,
        cap: usize,
        got: usize,
    },

    #[error("segment is not a completely lexsegment")]
    NotCompletely,

    #[error("segment is a completely lexsegment")]
    Completely,

    #[error("segment is an initial lexsegment")]
    InitialSegment,

    #[error("x1 does not divide the upper end of the segment")]
    NotNormalized,

    #[error("segment consists of a single monomial")]
    SingletonSegment,

    #[error("ideal has no verified admissible order (linear quotients required)")]
    NoLinearQuotients,

    #[error("lexification horizon {up_to} is below the maximal generator degree {max_deg}")]
    LexifyHorizon { up_to: u32, max_deg: u32 },

    #[error("expected 0 < b < c")]
    OrderedPairRequired,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
