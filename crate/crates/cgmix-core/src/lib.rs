//! Congestion games with mixed objectives.
//!
//! Players allocate sets of resources. Every resource carries two
//! non-decreasing cost curves over its congestion: a latency cost and a
//! bottleneck cost. A player with preference value `alpha` pays
//!
//! ```text
//! cost = alpha * (sum of latency costs) + (1 - alpha) * (max of bottleneck costs)
//! ```
//!
//! over her allocated resources, so `alpha = 1` recovers a classic sum-based
//! congestion game and `alpha = 0` a bottleneck game.
//!
//! The crate provides:
//!
//! * exact rational cost evaluation ([`game`]),
//! * matroid strategy spaces with independence and greedy oracles ([`matroid`]),
//! * better/best/lazy-response improvement dynamics with cycle detection and a
//!   rank-indexed potential ([`dynamics`]),
//! * equilibrium enumeration, specialized polynomial-time solvers,
//!   beta-approximation certificates and approximate-equilibrium search
//!   ([`equilibrium`]),
//! * a library of hand-constructed instances with known equilibrium behavior,
//!   plus a reduction from Independent Set ([`gadgets`]).
//!
//! All arithmetic is exact: costs, preference values and certificates are
//! `i128`-backed rationals, so ties and strict improvements are decided
//! without rounding. The crate is `no_std` (it allocates, but performs no IO);
//! file formats and the command-line front end live in the companion `cgmix`
//! crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod dynamics;
pub mod equilibrium;
pub mod error;
pub mod game;
pub mod gadgets;
pub mod matroid;
mod player_specific;
pub mod rational;

#[cfg(feature = "testgen")]
pub mod testgen;

pub use error::Error;
pub use rational::{parse_rational, rat, Rational};

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
