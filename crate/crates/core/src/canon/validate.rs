use std::fmt;

use serde::Serialize;

use super::rules::{canonicalize, Mode};
use crate::syntax::{charset::in_sigma, parse, serialize, Feature, ParseError, RegexAst};

/// Longest accepted canonical serialization.
pub const MAX_PATTERN_LEN: usize = 110;

/// Most alternatives accepted in a top-level union.
pub const MAX_TOP_BRANCHES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Reason {
    Unparsable,
    Lookaround,
    Backreference,
    NonPrintable,
    TooLong,
    UnionTooWide,
    EmptyAfterOptimize,
    Ok,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationVerdict {
    pub accepted: bool,
    pub reason: Reason,
}

impl ValidationVerdict {
    fn reject(reason: Reason) -> Self {
        ValidationVerdict {
            accepted: false,
            reason,
        }
    }
}

pub fn validate(pattern: &str) -> ValidationVerdict {
    match canonical_if_valid(pattern) {
        Ok(_) => ValidationVerdict {
            accepted: true,
            reason: Reason::Ok,
        },
        Err(reason) => ValidationVerdict::reject(reason),
    }
}

/// Runs the filters and returns the full-mode canonical AST on acceptance.
pub fn canonical_if_valid(pattern: &str) -> Result<RegexAst, Reason> {
    if !pattern.chars().all(in_sigma) {
        return Err(Reason::NonPrintable);
    }
    let raw = parse(pattern).map_err(|e| match e {
        ParseError::Unsupported { feature, .. } => match feature {
            Feature::Lookaround => Reason::Lookaround,
            Feature::Backreference => Reason::Backreference,
            Feature::OutsideAlphabet => Reason::NonPrintable,
            Feature::WordBoundary | Feature::InlineFlags => Reason::Unparsable,
        },
        ParseError::Syntax { .. } => Reason::Unparsable,
    })?;
    if top_branches(&raw) > MAX_TOP_BRANCHES {
        return Err(Reason::UnionTooWide);
    }
    let canonical = canonicalize(&raw, Mode::Full).map_err(|_| Reason::Unparsable)?;
    if canonical == RegexAst::Empty {
        return Err(Reason::EmptyAfterOptimize);
    }
    if top_branches(&canonical) > MAX_TOP_BRANCHES {
        return Err(Reason::UnionTooWide);
    }
    if serialize(&canonical).chars().count() > MAX_PATTERN_LEN {
        return Err(Reason::TooLong);
    }
    Ok(canonical)
}

fn top_branches(ast: &RegexAst) -> usize {
    match ast {
        RegexAst::Union(c) => c.len(),
        _ => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reason(p: &str) -> Reason {
        validate(p).reason
    }

    #[test]
    fn verdicts() {
        assert_eq!(reason("a(?=b)"), Reason::Lookaround);
        assert_eq!(reason("(a)\\1"), Reason::Backreference);
        assert_eq!(reason("a|b|c|d|e|f|g|h|i|j|k"), Reason::UnionTooWide);
        assert_eq!(reason("a|b|c|d|e|f|g|h|i|j"), Reason::Ok);
        assert_eq!(reason("abc"), Reason::Ok);
        assert!(validate("abc").accepted);
        assert_eq!(reason("a\u{7}"), Reason::NonPrintable);
        assert_eq!(reason("\\x00"), Reason::NonPrintable);
        assert_eq!(reason("(ab"), Reason::Unparsable);
        assert_eq!(reason("^$"), Reason::EmptyAfterOptimize);
        assert_eq!(reason("a{0}"), Reason::EmptyAfterOptimize);
        assert_eq!(reason(&"x".repeat(111)), Reason::TooLong);
        assert_eq!(reason(&"x".repeat(110)), Reason::Ok);
    }

    #[test]
    fn accepted_iff_ok() {
        for p in ["", "a", "(", "a(?!b)", "\\d+"] {
            let v = validate(p);
            assert_eq!(v.accepted, v.reason == Reason::Ok);
        }
    }
}
