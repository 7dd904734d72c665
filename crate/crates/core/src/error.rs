use thiserror::Error;

use crate::mgmg::PadRequirement;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty game: {0}")]
    EmptyGame(String),

    #[error("strategy hierarchy violated for player {player}: {detail}")]
    HierarchyViolation { player: usize, detail: String },

    #[error("incomplete payoffs: expected {expected} entries of arity {arity}, {detail}")]
    IncompletePayoffs {
        expected: usize,
        arity: usize,
        detail: String,
    },

    #[error("out of bounds: {0}")]
    OutOfBounds(String),

    #[error("players have unequal maximal capabilities {0:?}")]
    UnequalBounds(Vec<usize>),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid mixed strategy: {0}")]
    InvalidDistribution(String),

    #[error("game of size {rows}x{cols} exceeds the support enumeration limit of {limit} per side")]
    SizeLimitExceeded {
        rows: usize,
        cols: usize,
        limit: usize,
    },

    #[error("operation requires exactly two players, game has {0}")]
    NotTwoPlayer(usize),

    #[error("location {index} outside [0, {len})")]
    OutOfRange { index: usize, len: usize },

    #[error("strategy lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("strategy does not conform to the discontinuity-point rule: {0}")]
    NonConformingInput(String),

    #[error("segment padding precondition violated: {0}")]
    PreconditionViolated(PadRequirement),

    #[error("invalid equilibrium class t = {t}: {reason}")]
    InvalidT { t: u8, reason: String },

    #[error("parameters violate 0 < rho < -mu < 1: {0}")]
    ParamsOutOfTheorem(String),

    #[error("invalid game parameters: {0}")]
    InvalidParams(String),

    #[error("scale M = {m} exceeds the brute-force oracle bound {limit}")]
    ScaleLimitExceeded { m: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
