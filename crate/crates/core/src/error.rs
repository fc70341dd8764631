use thiserror::Error;

use crate::curve::CurveType;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid curve type (g={g}, mu={mu}, eps={eps})")]
    InvalidCurveType { g: i64, mu: i64, eps: i64 },

    #[error("number of real components must be at least 1, got {0}")]
    NoRealComponents(i64),

    #[error("partition {side:?} is not a canonical partition of 1..={mu}")]
    NonCanonicalPartition { mu: u32, side: Vec<u32> },

    #[error("curve {0} has no real components, so its Jacobian components are not partitions")]
    EmptyRealPart(CurveType),

    #[error("rational base (g = 0) is handled by the rational table")]
    RationalBase,

    #[error("count 2^{0} does not fit in 64 bits")]
    CountOverflow(i64),

    #[error("inconsistent bundle: {0}")]
    InconsistentBundle(String),

    #[error("unknown point label `{0}`")]
    UnknownPoint(String),

    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),

    #[error("real structure {tag} is not admissible: {reason}")]
    InadmissibleTag { tag: String, reason: String },

    #[error("operation requires a bundle with relation antireal, both or trivial")]
    NotAntiSelfConjugate,

    #[error("self-duality of a degree-0 bundle with relation `none` is not recorded")]
    AmbiguousSelfDuality,

    #[error("conjugation witness rejected: {0}")]
    WitnessRejected(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("degenerate chart map: {0}")]
    DegenerateMap(String),

    #[error("rewriting did not terminate within {0} rule applications")]
    NonTermination(usize),

    #[error("hypotheses are inconsistent (they imply 1 = -1)")]
    InconsistentHypotheses,

    #[error("map is not an involution of the torus")]
    NotAnInvolution,

    #[error("divisor of degree {0} has no Jacobian class")]
    NonZeroDegree(i64),

    #[error("branch count {0} must be even and non-negative")]
    OddBranchCount(i64),

    #[error("no connected double cover of a genus {g} curve branched at {branch} points")]
    NoConnectedCover { g: i64, branch: i64 },

    #[error("quintuple {0} is not allowable")]
    NotAllowable(String),

    #[error("spin bit must be given exactly when mu = 0")]
    SpinMismatch,

    #[error("invalid recipe: {0}")]
    InvalidRecipe(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("fixture error: {0}")]
    Fixture(String),
}
