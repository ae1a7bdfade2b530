//! Exact intersection theory on smooth quadrics.
//!
//! The crate reproduces the numerical side of the classification of
//! codimension-two scrolls and low-degree subvarieties of smooth quadrics
//! `Q^n`, `n >= 5`: Chow-ring arithmetic, characteristic classes of the
//! spinor and Cayley bundles, double point relations, the linear systems
//! attached to scrolls, genus bounds and the Hilbert-function exclusions,
//! and the final classification catalog.
//!
//! Everything is exact. Integers are arbitrary precision and rationals are
//! always kept in lowest terms; there is no floating point anywhere.
//!
//! The crate is `no_std` and only needs `alloc`. Text and JSON emitters, the
//! catalog loader and the command-line front end live in the companion
//! `quadscroll` crate.

#![no_std]

extern crate alloc;

pub mod bounds;
pub mod chern;
pub mod chow;
pub mod classify;
pub mod errata;
mod error;
pub mod exact;
pub mod hilbfn;
pub mod invariants;
pub mod scrolls;

pub use error::{Error, Result};
pub use exact::{binom, int, rat, RatMatrix, RatPoly, Rational, SolutionSpace};
