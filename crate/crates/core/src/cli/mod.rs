//! Text and JSON surface syntax, and the `weyl` command-line tool.

mod commands;
mod parse;
mod print;

pub use commands::{exit_code, parse_script, run, Outcome};
pub use parse::parse;
pub use print::{
    canonical_terms, from_json, print, rational_string, to_json, ElementJson, TermJson,
};
