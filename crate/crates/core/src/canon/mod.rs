//! Canonicalization: validation filters, fixed-point rewriting, literal
//! anonymization and sub-expression extraction.

pub mod anonymize;
mod extract;
mod rules;
mod validate;

pub use anonymize::{anonymize_literals, AnonymizationMap, AnonymizeError};
pub use extract::extract_subregexes;
pub use rules::{
    canonicalize, canonicalize_with_budget, CanonError, Mode, RewriteRule, RuleKind, CLIP_BOUND,
    DEFAULT_BUDGET,
};
pub use validate::{
    canonical_if_valid, validate, Reason, ValidationVerdict, MAX_PATTERN_LEN, MAX_TOP_BRANCHES,
};
