//! File formats and text I/O for the `cgmix` command-line tool.
//!
//! The game document format is JSON with top-level keys `players` and
//! `resources`. Rational values may be written as integers, decimals, or
//! `"p/q"` strings; they are parsed exactly (decimals by base-10 expansion)
//! and always serialized as strings to keep round trips lossless.

pub mod document;
pub mod textio;
