use thiserror::Error;

/// Errors raised by the combinatorial and algebraic routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("partition has {parts} parts but only {rows} beta-numbers were requested")]
    TooManyParts { parts: usize, rows: usize },

    #[error("beta-word {0:?} is not strictly decreasing")]
    NotStrictlyDecreasing(Vec<i64>),

    #[error("beta-word {word:?} at charge {charge} yields a negative part")]
    NegativePart { word: Vec<i64>, charge: i64 },

    #[error("row {row} is out of range for a beta-word of length {len}")]
    RowOutOfRange { row: usize, len: usize },

    #[error("moving bead {from} to {to} collides with an existing bead")]
    BeadCollision { from: i64, to: i64 },

    #[error("bead position {to} falls below the lowest admissible position {floor}")]
    BeadBelowFloor { to: i64, floor: i64 },

    #[error("ribbon length must be positive")]
    EmptyRibbon,

    #[error("rewriting rule requires k1 <= k2, got ({0}, {1})")]
    NotAnInfraction(i64, i64),

    #[error("polynomial {0} is not antisymmetric under q -> 1/q")]
    NotAntisymmetric(String),

    #[error("straightened word {word:?} belongs to multicharge {found:?}, expected {expected:?}")]
    ComponentLeak {
        word: Vec<i64>,
        found: Vec<i64>,
        expected: Vec<i64>,
    },

    #[error("multicharge has {found} entries, expected level {expected}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("modulus and level must be positive (n = {n}, l = {l})")]
    BadParameters { n: i64, l: usize },

    #[error("valuation oracle is ambiguous: |value| = {0:e} lies in the tolerance band")]
    ToleranceAmbiguity(f64),

    #[error("valuation oracle found a zero of order at least two")]
    HigherOrderZero,

    #[error("pair is neither of ribbon-exchange type J1 nor J2")]
    NotARibbonPair,

    #[error("unknown key {0}")]
    UnknownKey(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
