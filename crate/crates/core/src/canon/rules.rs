//! Fixed-point AST rewriting.
//!
//! Each pass rewrites children before their parent (innermost first) and,
//! at every node, tries the rules in [`RewriteRule::ALL`] order, feeding the
//! output of one rule into the next. Passes repeat until nothing changes.

use thiserror::Error;

use crate::syntax::{serialize, CharSet, RegexAst};

/// Largest finite repetition bound kept by [`RewriteRule::QuantifierClip`].
pub const CLIP_BOUND: u32 = 10;

/// Default cap on rule applications per canonicalization.
pub const DEFAULT_BUDGET: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleKind {
    SemanticsPreserving,
    Normalizing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RewriteRule {
    SingletonClass,
    AltToClass,
    EmptyRep,
    IdentityRep,
    FixedUnroll,
    OpFlattening,
    PrefixFactor,
    EmptyHandling,
    LiteralMerge,
    UnionSort,
    QuantifierClip,
    ClassNegation,
    AssertionRemoval,
    QuantUnify,
    EngineMode,
}

impl RewriteRule {
    pub const ALL: [RewriteRule; 15] = [
        RewriteRule::SingletonClass,
        RewriteRule::AltToClass,
        RewriteRule::EmptyRep,
        RewriteRule::IdentityRep,
        RewriteRule::FixedUnroll,
        RewriteRule::OpFlattening,
        RewriteRule::PrefixFactor,
        RewriteRule::EmptyHandling,
        RewriteRule::LiteralMerge,
        RewriteRule::UnionSort,
        RewriteRule::QuantifierClip,
        RewriteRule::ClassNegation,
        RewriteRule::AssertionRemoval,
        RewriteRule::QuantUnify,
        RewriteRule::EngineMode,
    ];

    pub fn kind(self) -> RuleKind {
        match self {
            RewriteRule::QuantifierClip
            | RewriteRule::ClassNegation
            | RewriteRule::AssertionRemoval
            | RewriteRule::EngineMode => RuleKind::Normalizing,
            _ => RuleKind::SemanticsPreserving,
        }
    }

    /// Rules whose input form the AST cannot represent; the parser applies
    /// them while building the tree (negated classes are complemented,
    /// anchors dropped, lazy/possessive quantifiers read as greedy, `.`
    /// built as the full alphabet).
    pub fn applied_by_parser(self) -> bool {
        matches!(
            self,
            RewriteRule::ClassNegation
                | RewriteRule::AssertionRemoval
                | RewriteRule::QuantUnify
                | RewriteRule::EngineMode
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            RewriteRule::SingletonClass => "SingletonClass",
            RewriteRule::AltToClass => "AltToClass",
            RewriteRule::EmptyRep => "EmptyRep",
            RewriteRule::IdentityRep => "IdentityRep",
            RewriteRule::FixedUnroll => "FixedUnroll",
            RewriteRule::OpFlattening => "OpFlattening",
            RewriteRule::PrefixFactor => "PrefixFactor",
            RewriteRule::EmptyHandling => "EmptyHandling",
            RewriteRule::LiteralMerge => "LiteralMerge",
            RewriteRule::UnionSort => "UnionSort",
            RewriteRule::QuantifierClip => "QuantifierClip",
            RewriteRule::ClassNegation => "ClassNegation",
            RewriteRule::AssertionRemoval => "AssertionRemoval",
            RewriteRule::QuantUnify => "QuantUnify",
            RewriteRule::EngineMode => "EngineMode",
        }
    }

    /// Rewrites `node` itself (not its descendants), or `None` when the rule
    /// does not apply.
    pub fn apply(self, node: &RegexAst) -> Option<RegexAst> {
        match self {
            RewriteRule::SingletonClass => singleton_class(node),
            RewriteRule::AltToClass => alt_to_class(node),
            RewriteRule::EmptyRep => empty_rep(node),
            RewriteRule::IdentityRep => identity_rep(node),
            RewriteRule::FixedUnroll => fixed_unroll(node),
            RewriteRule::OpFlattening => flatten(node),
            RewriteRule::PrefixFactor => prefix_factor(node),
            RewriteRule::EmptyHandling => empty_handling(node),
            RewriteRule::LiteralMerge => literal_merge(node),
            RewriteRule::UnionSort => union_sort(node),
            RewriteRule::QuantifierClip => quantifier_clip(node),
            RewriteRule::ClassNegation
            | RewriteRule::AssertionRemoval
            | RewriteRule::QuantUnify
            | RewriteRule::EngineMode => None,
        }
    }
}

/// Which rule set [`canonicalize`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Semantics-preserving rules only; the language is unchanged.
    Preserving,
    /// All rules, including bound clipping.
    #[default]
    Full,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "preserving" => Ok(Mode::Preserving),
            "full" => Ok(Mode::Full),
            other => Err(format!("unknown mode {other:?} (expected preserving|full)")),
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("rewrite budget of {budget} rule applications exhausted (last form: {last})")]
    NonTermination { budget: usize, last: String },
}

/// Canonicalizes with the default budget.
pub fn canonicalize(ast: &RegexAst, mode: Mode) -> Result<RegexAst, CanonError> {
    canonicalize_with_budget(ast, mode, DEFAULT_BUDGET)
}

pub fn canonicalize_with_budget(
    ast: &RegexAst,
    mode: Mode,
    budget: usize,
) -> Result<RegexAst, CanonError> {
    let rules: Vec<RewriteRule> = RewriteRule::ALL
        .into_iter()
        .filter(|r| !r.applied_by_parser())
        .filter(|r| mode == Mode::Full || r.kind() == RuleKind::SemanticsPreserving)
        .collect();
    let mut applications = 0usize;
    let mut current = ast.clone();
    loop {
        let before = applications;
        current = pass(current, &rules, &mut applications);
        if applications > budget {
            return Err(CanonError::NonTermination {
                budget,
                last: serialize(&current),
            });
        }
        if applications == before {
            return Ok(current);
        }
    }
}

fn pass(node: RegexAst, rules: &[RewriteRule], applications: &mut usize) -> RegexAst {
    let mut node = match node {
        RegexAst::Concat(c) => {
            RegexAst::Concat(c.into_iter().map(|x| pass(x, rules, applications)).collect())
        }
        RegexAst::Union(c) => {
            RegexAst::Union(c.into_iter().map(|x| pass(x, rules, applications)).collect())
        }
        RegexAst::Repeat { child, min, max } => RegexAst::Repeat {
            child: Box::new(pass(*child, rules, applications)),
            min,
            max,
        },
        atom => atom,
    };
    for rule in rules {
        if let Some(next) = rule.apply(&node) {
            if next != node {
                *applications += 1;
                node = next;
            }
        }
    }
    node
}

fn single_char_of(node: &RegexAst) -> Option<CharSet> {
    match node {
        RegexAst::Literal(s) if s.chars().count() == 1 => s.chars().next().map(CharSet::single),
        RegexAst::Class(set) => Some(*set),
        _ => None,
    }
}

fn singleton_class(node: &RegexAst) -> Option<RegexAst> {
    match node {
        RegexAst::Class(set) => set.single_char().map(|c| RegexAst::Literal(c.to_string())),
        _ => None,
    }
}

fn alt_to_class(node: &RegexAst) -> Option<RegexAst> {
    let RegexAst::Union(children) = node else {
        return None;
    };
    let singles: Vec<usize> = children
        .iter()
        .enumerate()
        .filter(|(_, c)| single_char_of(c).is_some())
        .map(|(i, _)| i)
        .collect();
    if singles.len() < 2 {
        return None;
    }
    let merged = singles
        .iter()
        .map(|&i| single_char_of(&children[i]).unwrap())
        .fold(CharSet::empty(), CharSet::union);
    let mut out = Vec::with_capacity(children.len() - singles.len() + 1);
    for (i, child) in children.iter().enumerate() {
        if i == singles[0] {
            out.push(RegexAst::Class(merged));
        } else if !singles.contains(&i) {
            out.push(child.clone());
        }
    }
    Some(RegexAst::union(out))
}

fn empty_rep(node: &RegexAst) -> Option<RegexAst> {
    match node {
        RegexAst::Repeat { max: Some(0), .. } => Some(RegexAst::Empty),
        RegexAst::Repeat { child, .. } if **child == RegexAst::Empty => Some(RegexAst::Empty),
        _ => None,
    }
}

fn identity_rep(node: &RegexAst) -> Option<RegexAst> {
    match node {
        RegexAst::Repeat {
            child,
            min: 1,
            max: Some(1),
        } => Some((**child).clone()),
        _ => None,
    }
}

fn fixed_unroll(node: &RegexAst) -> Option<RegexAst> {
    match node {
        RegexAst::Repeat {
            child,
            min,
            max: Some(max),
        } if min == max && *min >= 1 => match child.as_ref() {
            RegexAst::Literal(s) => Some(RegexAst::Literal(s.repeat(*min as usize))),
            _ => None,
        },
        _ => None,
    }
}

fn flatten(node: &RegexAst) -> Option<RegexAst> {
    match node {
        RegexAst::Concat(children) => {
            if children.len() >= 2 && !children.iter().any(|c| matches!(c, RegexAst::Concat(_))) {
                return None;
            }
            let mut out = Vec::new();
            for c in children {
                match c {
                    RegexAst::Concat(inner) => out.extend(inner.iter().cloned()),
                    other => out.push(other.clone()),
                }
            }
            Some(RegexAst::concat(out))
        }
        RegexAst::Union(children) => {
            if children.len() >= 2 && !children.iter().any(|c| matches!(c, RegexAst::Union(_))) {
                return None;
            }
            let mut out = Vec::new();
            for c in children {
                match c {
                    RegexAst::Union(inner) => out.extend(inner.iter().cloned()),
                    other => out.push(other.clone()),
                }
            }
            Some(RegexAst::union(out))
        }
        _ => None,
    }
}

/// A branch as a sequence of prefix-comparable items; literals split per char.
fn items(node: &RegexAst) -> Vec<RegexAst> {
    fn push(node: &RegexAst, out: &mut Vec<RegexAst>) {
        match node {
            RegexAst::Literal(s) => out.extend(s.chars().map(|c| RegexAst::Literal(c.to_string()))),
            RegexAst::Empty => {}
            other => out.push(other.clone()),
        }
    }
    let mut out = Vec::new();
    match node {
        RegexAst::Concat(children) => children.iter().for_each(|c| push(c, &mut out)),
        other => push(other, &mut out),
    }
    out
}

fn prefix_factor(node: &RegexAst) -> Option<RegexAst> {
    let RegexAst::Union(children) = node else {
        return None;
    };
    let seqs: Vec<Vec<RegexAst>> = children.iter().map(items).collect();
    let shortest = seqs.iter().map(Vec::len).min().unwrap_or(0);
    let mut common = 0;
    while common < shortest && seqs.iter().all(|s| s[common] == seqs[0][common]) {
        common += 1;
    }
    if common == 0 {
        return None;
    }
    let mut out: Vec<RegexAst> = seqs[0][..common].to_vec();
    let rests = seqs
        .iter()
        .map(|s| RegexAst::concat(s[common..].to_vec()))
        .collect();
    out.push(RegexAst::union(rests));
    Some(RegexAst::concat(out))
}

fn empty_handling(node: &RegexAst) -> Option<RegexAst> {
    match node {
        RegexAst::Concat(children) if children.contains(&RegexAst::Empty) => Some(RegexAst::concat(
            children
                .iter()
                .filter(|c| **c != RegexAst::Empty)
                .cloned()
                .collect(),
        )),
        RegexAst::Union(children) if children.contains(&RegexAst::Empty) => {
            let rest: Vec<RegexAst> = children
                .iter()
                .filter(|c| **c != RegexAst::Empty)
                .cloned()
                .collect();
            if rest.is_empty() {
                Some(RegexAst::Empty)
            } else {
                Some(RegexAst::optional(RegexAst::union(rest)))
            }
        }
        _ => None,
    }
}

fn literal_merge(node: &RegexAst) -> Option<RegexAst> {
    let RegexAst::Concat(children) = node else {
        return None;
    };
    let adjacent = children
        .windows(2)
        .any(|w| matches!((&w[0], &w[1]), (RegexAst::Literal(_), RegexAst::Literal(_))));
    if !adjacent {
        return None;
    }
    let mut out: Vec<RegexAst> = Vec::new();
    for c in children {
        match (out.last_mut(), c) {
            (Some(RegexAst::Literal(acc)), RegexAst::Literal(s)) => acc.push_str(s),
            _ => out.push(c.clone()),
        }
    }
    Some(RegexAst::concat(out))
}

fn union_sort(node: &RegexAst) -> Option<RegexAst> {
    let RegexAst::Union(children) = node else {
        return None;
    };
    let mut keyed: Vec<(String, RegexAst)> =
        children.iter().map(|c| (serialize(c), c.clone())).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.1 == b.1);
    let out: Vec<RegexAst> = keyed.into_iter().map(|(_, c)| c).collect();
    if out == *children {
        None
    } else {
        Some(RegexAst::union(out))
    }
}

fn quantifier_clip(node: &RegexAst) -> Option<RegexAst> {
    let RegexAst::Repeat { child, min, max } = node else {
        return None;
    };
    let clipped_min = (*min).min(CLIP_BOUND);
    let clipped_max = max.map(|m| m.min(CLIP_BOUND));
    if clipped_min == *min && clipped_max == *max {
        return None;
    }
    Some(RegexAst::Repeat {
        child: child.clone(),
        min: clipped_min,
        max: clipped_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn canon(p: &str) -> String {
        serialize(&canonicalize(&parse(p).unwrap(), Mode::Full).unwrap())
    }

    fn apply_one(rule: RewriteRule, p: &str) -> String {
        serialize(&rule.apply(&parse(p).unwrap()).unwrap())
    }

    #[test]
    fn single_rule_table_examples() {
        assert_eq!(apply_one(RewriteRule::SingletonClass, "[a]"), "a");
        assert_eq!(apply_one(RewriteRule::AltToClass, "a|b"), "[ab]");
        assert_eq!(apply_one(RewriteRule::IdentityRep, "a{1,1}"), "a");
        assert_eq!(apply_one(RewriteRule::EmptyRep, "a{0}"), "");
        assert_eq!(apply_one(RewriteRule::FixedUnroll, "(ab){3}"), "ababab");
        assert_eq!(apply_one(RewriteRule::PrefixFactor, "az|ab"), "a(z|b)");
        assert_eq!(apply_one(RewriteRule::QuantifierClip, "a{3,40}"), "a{3,10}");
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(canon("az|ab"), "a[bz]");
        assert_eq!(canon("a{1,1}"), "a");
        assert_eq!(canon("a|b"), "[ab]");
        assert_eq!(canon("[a]"), "a");
        assert_eq!(canon("a|ab"), "ab?");
        assert_eq!(canon("ab|ab"), "ab");
        assert_eq!(canon("(a)(b)(c)"), "abc");
        assert_eq!(canon("((ab)c)d*"), "abcd*");
        assert_eq!(canon("b|a|c|dd"), "[a-c]|dd");
        assert_eq!(canon("x{2}y"), "xxy");
        assert_eq!(canon("\\d{2,20}"), "\\d{2,10}");
        assert_eq!(canon("\\d{2,}"), "\\d{2,}");
        assert_eq!(canon("cat|dog|cow"), "cat|cow|dog");
    }

    #[test]
    fn preserving_mode_keeps_large_bounds() {
        let ast = canonicalize(&parse("a{3,40}").unwrap(), Mode::Preserving).unwrap();
        assert_eq!(serialize(&ast), "a{3,40}");
    }

    #[test]
    fn rule_kinds() {
        for rule in RewriteRule::ALL {
            let normalizing = matches!(
                rule,
                RewriteRule::QuantifierClip
                    | RewriteRule::AssertionRemoval
                    | RewriteRule::ClassNegation
                    | RewriteRule::EngineMode
            );
            assert_eq!(rule.kind() == RuleKind::Normalizing, normalizing, "{rule:?}");
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let ast = parse("(a|b)(c|d)(e|f)").unwrap();
        assert!(matches!(
            canonicalize_with_budget(&ast, Mode::Full, 1),
            Err(CanonError::NonTermination { .. })
        ));
    }
}
