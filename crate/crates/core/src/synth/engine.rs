use serde::Serialize;
use thiserror::Error;

use super::enumerative::DEFAULT_BASE_BUDGET;
use super::fallback::fallback_synthesize;
use super::strategy::{is_partition, RouterAction, StrategySuite, SubTask, Task};
use crate::canon::{canonicalize, Mode};
use crate::syntax::{Matcher, RegexAst};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisConfig {
    pub max_recursion_depth: usize,
    pub fallback_enabled: bool,
    pub base_budget: usize,
    /// Also hand the negatives to union children (they must reject them too).
    pub strict: bool,
}

impl Default for SynthesisConfig {
    fn default() -> Self {
        SynthesisConfig {
            max_recursion_depth: 12,
            fallback_enabled: true,
            base_budget: DEFAULT_BASE_BUDGET,
            strict: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LeafSource {
    Base,
    Fallback,
    Singleton,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleSet {
    pub positives: Vec<String>,
    pub negatives: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "node", rename_all = "lowercase")]
pub enum DerivationTree {
    Leaf {
        regex: RegexAst,
        source: LeafSource,
        examples: ExampleSet,
    },
    Concat {
        children: Vec<DerivationTree>,
        examples: ExampleSet,
    },
    Union {
        children: Vec<DerivationTree>,
        examples: ExampleSet,
    },
}

impl DerivationTree {
    pub fn examples(&self) -> &ExampleSet {
        match self {
            DerivationTree::Leaf { examples, .. }
            | DerivationTree::Concat { examples, .. }
            | DerivationTree::Union { examples, .. } => examples,
        }
    }

    pub fn children(&self) -> &[DerivationTree] {
        match self {
            DerivationTree::Leaf { .. } => &[],
            DerivationTree::Concat { children, .. } | DerivationTree::Union { children, .. } => {
                children
            }
        }
    }

    /// Pre-order traversal with each node's parent.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a DerivationTree, Option<&'a DerivationTree>)) {
        fn go<'a>(
            n: &'a DerivationTree,
            parent: Option<&'a DerivationTree>,
            f: &mut impl FnMut(&'a DerivationTree, Option<&'a DerivationTree>),
        ) {
            f(n, parent);
            for c in n.children() {
                go(c, Some(n), f);
            }
        }
        go(self, None, f);
    }
}

/// Concatenation and union nodes composed bottom-up, canonicalized in
/// preserving mode.
pub fn compose(tree: &DerivationTree) -> RegexAst {
    let raw = compose_raw(tree);
    canonicalize(&raw, Mode::Preserving).unwrap_or(raw)
}

fn compose_raw(tree: &DerivationTree) -> RegexAst {
    match tree {
        DerivationTree::Leaf { regex, .. } => regex.clone(),
        DerivationTree::Concat { children, .. } => {
            RegexAst::concat(children.iter().map(compose_raw).collect())
        }
        DerivationTree::Union { children, .. } => {
            RegexAst::union(children.iter().map(compose_raw).collect())
        }
    }
}

pub fn consistent<S: AsRef<str>>(regex: &RegexAst, positives: &[S], negatives: &[S]) -> bool {
    let m = Matcher::new(regex);
    positives.iter().all(|p| m.is_match(p.as_ref()))
        && negatives.iter().all(|n| !m.is_match(n.as_ref()))
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SynthError {
    #[error("no positive examples")]
    NoPositives,
    #[error("no consistent regex found")]
    Failure { partial: Option<Box<DerivationTree>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Synthesis {
    pub regex: RegexAst,
    pub tree: DerivationTree,
}

/// Recursive synthesis followed by the final consistency gate.
pub fn synthesize(
    task: &Task,
    suite: &StrategySuite,
    cfg: &SynthesisConfig,
) -> Result<Synthesis, SynthError> {
    if task.positives.is_empty() {
        return Err(SynthError::NoPositives);
    }
    let tree = recursive_synthesize(task, None, suite, cfg)
        .ok_or(SynthError::Failure { partial: None })?;
    let regex = compose(&tree);
    if !consistent(&regex, &task.positives, &task.negatives) {
        return Err(SynthError::Failure {
            partial: Some(Box::new(tree)),
        });
    }
    Ok(Synthesis { regex, tree })
}

/// One step of the recursion; `None` is failure.
pub fn recursive_synthesize(
    task: &Task,
    prev: Option<RouterAction>,
    suite: &StrategySuite,
    cfg: &SynthesisConfig,
) -> Option<DerivationTree> {
    let examples = ExampleSet {
        positives: task.positives.clone(),
        negatives: task.negatives.clone(),
    };
    if task.positives.len() == 1 {
        return Some(DerivationTree::Leaf {
            regex: RegexAst::literal(task.positives[0].clone()),
            source: LeafSource::Singleton,
            examples,
        });
    }
    if task.depth >= cfg.max_recursion_depth {
        return with_fallback(task, suite, cfg);
    }
    let action = suite.router.route(task, prev);

    if action == RouterAction::Segment && prev != Some(RouterAction::Segment) {
        if let Some(seg) = suite.segmenter.segment(task) {
            if seg.k() > 1 && seg.preserves(&task.positives) {
                let children = solve_all(task, seg.columns(), Vec::new(), RouterAction::Segment, suite, cfg);
                return match children {
                    Some(children) => Some(DerivationTree::Concat { children, examples }),
                    None => with_fallback(task, suite, cfg),
                };
            }
        }
    }
    if action == RouterAction::Partition && prev != Some(RouterAction::Partition) {
        if let Some(groups) = suite.partitioner.partition(task) {
            if groups.len() > 1 && is_partition(&groups, &task.positives) {
                if groups.iter().all(|g| g.positives.len() == 1) {
                    return with_fallback(task, suite, cfg);
                }
                let negatives = if cfg.strict {
                    task.negatives.clone()
                } else {
                    Vec::new()
                };
                let children = solve_all(task, groups, negatives, RouterAction::Partition, suite, cfg);
                return match children {
                    Some(children) => Some(DerivationTree::Union { children, examples }),
                    None => with_fallback(task, suite, cfg),
                };
            }
        }
    }
    with_fallback(task, suite, cfg)
}

fn solve_all(
    task: &Task,
    subs: Vec<SubTask>,
    negatives: Vec<String>,
    action: RouterAction,
    suite: &StrategySuite,
    cfg: &SynthesisConfig,
) -> Option<Vec<DerivationTree>> {
    subs.into_iter()
        .map(|s| {
            let child = Task {
                positives: s.positives,
                negatives: negatives.clone(),
                guide: s.guide,
                depth: task.depth + 1,
            };
            recursive_synthesize(&child, Some(action), suite, cfg)
        })
        .collect()
}

/// The base synthesizer if it yields a consistent regex, else the first
/// consistent fallback pattern.
fn with_fallback(
    task: &Task,
    suite: &StrategySuite,
    cfg: &SynthesisConfig,
) -> Option<DerivationTree> {
    let examples = ExampleSet {
        positives: task.positives.clone(),
        negatives: task.negatives.clone(),
    };
    if let Some(r) = suite.base.synthesize(&task.positives, &task.negatives) {
        if consistent(&r, &task.positives, &task.negatives) {
            return Some(DerivationTree::Leaf {
                regex: r,
                source: LeafSource::Base,
                examples,
            });
        }
    }
    if !cfg.fallback_enabled {
        return None;
    }
    fallback_synthesize(&task.positives, &task.negatives).map(|regex| DerivationTree::Leaf {
        regex,
        source: LeafSource::Fallback,
        examples,
    })
}
