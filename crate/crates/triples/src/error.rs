use thiserror::Error;

/// Errors produced by construction, validation and search routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("block [{0}, {1}, {2}] has repeated points")]
    RepeatedPoint(usize, usize, usize),

    #[error("block [{0}, {1}, {2}] uses a point >= point count {3}")]
    PointOutOfRange(usize, usize, usize, usize),

    #[error("duplicate block [{0}, {1}, {2}]")]
    DuplicateBlock(usize, usize, usize),

    #[error("system is not linear: pair {{{0}, {1}}} lies in more than one block")]
    NotLinear(usize, usize),

    #[error("system is not a Steiner triple system")]
    NotSteiner,

    #[error("point {0} lies in no block (system is not in configuration mode)")]
    IsolatedPoint(usize),

    #[error("{0} is not admissible (n mod 6 must be 1 or 3)")]
    Inadmissible(usize),

    #[error("expected n = {expected} for this construction, got {got}")]
    WrongResidue { expected: &'static str, got: usize },

    #[error("pattern parse error: {0}")]
    PatternParse(String),

    #[error("color order does not match the forest's colors")]
    OrderMismatch,

    #[error("forest is not an s-pattern (no valid matching order exists)")]
    NotAPattern,

    #[error("invalid bridge color {0}: not a single-edge color class")]
    InvalidBridge(String),

    #[error("step budget of {0} exhausted without completing the system")]
    StepBudget(u64),

    #[error("set is not free of 3-term arithmetic progressions: {0}, {1}, {2}")]
    NotAp3Free(usize, usize, usize),

    #[error("unknown atlas name {0:?}")]
    UnknownAtlas(String),

    #[error("block count {0} out of range (expected 1..=5)")]
    BlockCountRange(usize),

    #[error("{0}")]
    Unsupported(String),

    #[error("3x3 color matrix is not properly colored")]
    ImproperMatrix,

    #[error("coloring has {got} entries for a system with {expected} blocks")]
    ColoringLength { expected: usize, got: usize },

    #[error("color {0} out of range for a {1}-coloring")]
    ColorOutOfRange(usize, usize),

    #[error("state space too large: {0} colorings exceeds the bound {1}")]
    StateSpace(u128, u128),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
