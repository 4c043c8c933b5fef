//! Cographs and the Castelnuovo–Mumford regularity of their binomial edge ideals.
//!
//! Everything here is pure computation over immutable values and builds
//! without `std` (only `alloc` is required). Parsing, serialization, parallel
//! drivers and the command-line front end live in the companion `cograph-bei`
//! crate.
//!
//! Vertices are 0-based throughout this crate. Text formats in the companion
//! crate translate to and from the 1-based labels used for presentation.
//!
//! - [`graph`]: the [`Graph`] value type and elementary operations.
//! - [`cotree`]: cograph recognition, cotrees, induced-P4 certificates.
//! - [`invariants`]: α, i, c by cotree recursion plus brute-force oracles.
//! - [`regularity`]: the regularity recursion and the bounds report.
//! - [`extremal`]: maximal-regularity and prescribed-regularity families.
//! - [`series`]: exact Hilbert-series arithmetic and the glued counterexample chain.
//! - [`enumeration`]: cotree enumeration up to isomorphism and exhaustive checks.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod cotree;
pub mod enumeration;
mod error;
pub mod extremal;
pub mod graph;
pub mod invariants;
pub mod regularity;
pub mod series;

pub use cotree::{build_cotree, find_induced_p4, Cotree, P4Witness, Recognition};
pub use error::Error;
pub use graph::Graph;
pub use invariants::InvariantReport;
pub use regularity::{bounds_report, reg_cograph, OrderBound, RegularityReport};
pub use series::{ChainReport, HilbertSeries, IntPoly};

/// Result alias used across the crate.
pub type Result<T, E = Error> = core::result::Result<T, E>;
