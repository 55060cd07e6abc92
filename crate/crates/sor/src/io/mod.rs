//! Input/output: expression parsing, canonical printing, the JSON
//! report schema and the command-line interface.

pub mod cli;
pub mod format;
pub mod parse;
pub mod report;

pub use format::{format_poly, format_ratfunc};
pub use parse::{parse_poly, ParseError};
