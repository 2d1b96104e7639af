//! Exact construction and certification of non-injective surface group
//! representations into PSL(2, ℝ) that kill no power of a simple closed curve.
//!
//! The crate is `no_std` and needs only `alloc`. Everything here is a pure
//! function of immutable values; IO, configuration, and report formats live in
//! the `loopcert` companion crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod exact;
pub mod words;
pub mod rep;
pub mod scc;
pub mod certify;
