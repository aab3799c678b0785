//! Exact random-walk and spanning-tree quantities on wheel graphs.
//!
//! A wheel is an n-cycle plus a hub joined to every cycle vertex. For the
//! simple random walk on it, hitting times, effective resistances, and
//! spanning-tree counts (including the counts after identifying a pair of
//! vertices) all have closed forms in Fibonacci and Lucas numbers; this
//! crate computes them in exact rational arithmetic.
//!
//! The crate is organised as a pair of towers that must agree:
//!
//! * [`sequences`], [`wheel`], and [`closed_form`] build the answers out of
//!   Fibonacci/Lucas identities and the folded hitting-time system;
//! * [`graph`], [`matrix`], [`oracle`], and [`montecarlo`] recompute the
//!   same quantities from the bare graph — exact linear solves, a
//!   fraction-free determinant, brute-force enumeration, and seeded random
//!   walks — without knowing anything about wheels.
//!
//! Everything numeric is a [`BigInt`] or [`BigRational`]; floating point
//! appears only at the Monte Carlo boundary and in display helpers.

pub mod closed_form;
pub mod graph;
pub mod matrix;
pub mod montecarlo;
pub mod oracle;
pub mod sequences;
pub mod wheel;

mod error;

pub use error::Error;
pub use num::{BigInt, BigRational};
