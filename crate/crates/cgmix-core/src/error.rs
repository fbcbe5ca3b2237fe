//! Error type shared by all modules.
//!
//! Player indices reported in errors are 1-based, matching the indices used
//! in traces, certificates and the CLI.

use alloc::string::String;

/// Everything that can go wrong when constructing or querying a game.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("resource index {index} out of range ({count} resources)")]
    ResourceOutOfRange { index: usize, count: usize },

    #[error("unknown resource `{name}`")]
    UnknownResource { name: String },

    #[error("state has {got} strategies but the game has {expected} players")]
    StateArity { expected: usize, got: usize },

    #[error("player {player}: chosen set is not one of the player's strategies")]
    ChoiceNotInSpace { player: usize },

    #[error("player {player}: strategy index {index} out of range ({count} strategies)")]
    StrategyIndexOutOfRange {
        player: usize,
        index: usize,
        count: usize,
    },

    #[error("player {player}: chosen set is not a basis of the player's matroid")]
    ChoiceNotABasis { player: usize },

    #[error("resource `{resource}`: congestion {congestion} exceeds cost table of length {len}")]
    CongestionBeyondTable {
        resource: String,
        congestion: usize,
        len: usize,
    },

    #[error("element {element} outside the matroid ground set of size {ground}")]
    ElementOutsideGround { element: usize, ground: usize },

    #[error("matroid rejected: {reason}")]
    MalformedMatroid { reason: String },

    #[error("enumeration would need {required} entries, exceeding the cap of {cap}")]
    CapExceeded { required: u128, cap: u128 },

    #[error(
        "player {player}: best response intractable \
         (matroid ground set above the enumeration cap and no greedy route applies)"
    )]
    IntractableBestResponse { player: usize },

    #[error("operation requires `{flag}`, which does not hold for this game")]
    FlagNotSatisfied { flag: &'static str },

    #[error("beta must be at least 1")]
    BetaBelowOne,

    #[error("internal solver failure: {detail}")]
    InternalSolverFailure { detail: &'static str },

    #[error("graph rejected: {reason}")]
    BadGraph { reason: String },

    #[error("cannot parse rational from `{input}`")]
    BadRational { input: String },
}
