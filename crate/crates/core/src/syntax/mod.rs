//! Parsing, representation, matching and serialization of restricted
//! (backreference-free, lookaround-free) regular expressions.

mod ast;
pub mod charset;
mod enumerate;
mod matcher;
mod parse;
mod serialize;
mod stats;

pub use ast::{MaxBound, RegexAst, TopLevel};
pub use charset::CharSet;
pub use enumerate::{enumerate_language, Enumeration};
pub use matcher::{matches, Matcher};
pub use parse::{parse, parse_with, Feature, ParseError, ParseOptions, MAX_BOUND};
pub use serialize::{escape_literal, serialize, serialize_class};
pub use stats::{ast_stats, AstStats};
