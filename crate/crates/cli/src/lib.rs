//! Graph file formats, JSON reports, parallel exhaustive runs and the
//! command implementations behind the `cograph-bei` binary.

pub mod commands;
pub mod formats;
pub mod json;
pub mod parallel;
pub mod text;

pub use formats::{parse_graph, write_graph, Format, ParseError};
