//! Text formats and command-line frontend for `twotorus-core`.

pub mod cli;
pub mod formats;
pub mod parse;

pub use parse::{parse_polynomial, ParseError};
