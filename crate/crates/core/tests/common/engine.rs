//! Algorithm conformance checks shared by the engine and acceptance targets.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use resyn::synth::{
    consistent, synthesize, BaseSynthesizer, DerivationTree, LeafSource, Partitioner, Router,
    RouterAction, Segmentation, Segmenter, StrategySuite, SubTask, SynthError, SynthesisConfig,
    Task,
};
use resyn::syntax::{matches, serialize, RegexAst};

struct Always(RouterAction);

impl Router for Always {
    fn route(&self, _: &Task, _: Option<RouterAction>) -> RouterAction {
        self.0
    }
}

/// Splits every positive after its first character.
struct HeadTail(Arc<AtomicUsize>);

impl Segmenter for HeadTail {
    fn segment(&self, task: &Task) -> Option<Segmentation> {
        self.0.fetch_add(1, Ordering::SeqCst);
        let rows = task
            .positives
            .iter()
            .map(|p| {
                let cut = p.chars().next().map_or(0, char::len_utf8);
                vec![p[..cut].to_string(), p[cut..].to_string()]
            })
            .collect();
        Some(Segmentation {
            rows,
            guides: vec![None, None],
        })
    }
}

/// One group per positive.
struct Singletons(Arc<AtomicUsize>);

impl Partitioner for Singletons {
    fn partition(&self, task: &Task) -> Option<Vec<SubTask>> {
        self.0.fetch_add(1, Ordering::SeqCst);
        Some(
            task.positives
                .iter()
                .map(|p| SubTask {
                    positives: vec![p.clone()],
                    guide: None,
                })
                .collect(),
        )
    }
}

/// Groups by first character.
struct ByHead;

impl Partitioner for ByHead {
    fn partition(&self, task: &Task) -> Option<Vec<SubTask>> {
        let mut groups: Vec<SubTask> = Vec::new();
        for p in &task.positives {
            let head = p.chars().next();
            match groups.iter_mut().find(|g| g.positives[0].chars().next() == head) {
                Some(g) => g.positives.push(p.clone()),
                None => groups.push(SubTask {
                    positives: vec![p.clone()],
                    guide: None,
                }),
            }
        }
        Some(groups)
    }
}

/// Union of the positives as literals; records every call.
struct Recording(Arc<AtomicUsize>);

impl BaseSynthesizer for Recording {
    fn synthesize(&self, positives: &[String], _: &[String]) -> Option<RegexAst> {
        self.0.fetch_add(1, Ordering::SeqCst);
        let mut lits: Vec<RegexAst> = positives.iter().map(|p| RegexAst::literal(p.clone())).collect();
        Some(if lits.len() == 1 {
            lits.remove(0)
        } else {
            RegexAst::union(lits)
        })
    }
}

fn counter() -> Arc<AtomicUsize> {
    Arc::new(AtomicUsize::new(0))
}

fn suite(
    router: RouterAction,
    seg: Arc<AtomicUsize>,
    part: Arc<AtomicUsize>,
    base: Arc<AtomicUsize>,
) -> StrategySuite {
    StrategySuite {
        router: Box::new(Always(router)),
        partitioner: Box::new(Singletons(part)),
        segmenter: Box::new(HeadTail(seg)),
        base: Box::new(Recording(base)),
    }
}

pub fn check_tree(tree: &DerivationTree) {
    tree.walk(&mut |node, parent| {
        match node {
            DerivationTree::Leaf { regex, examples, .. } => {
                assert!(consistent(regex, &examples.positives, &examples.negatives));
            }
            DerivationTree::Concat { children, .. } => {
                assert!(children.len() >= 2);
                assert!(!matches!(parent, Some(DerivationTree::Concat { .. })));
            }
            DerivationTree::Union { children, .. } => {
                assert!(children.len() >= 2);
                assert!(!matches!(parent, Some(DerivationTree::Union { .. })));
            }
        }
        if parent.is_some() {
            assert!(node.examples().negatives.is_empty());
        }
    });
}

pub fn singleton_escape() {
    let cfg = SynthesisConfig::default();
    let base = counter();
    let s = suite(RouterAction::Segment, counter(), counter(), base.clone());
    let out = synthesize(&Task::new(&["a.b"], &[]), &s, &cfg).unwrap();
    assert_eq!(serialize(&out.regex), "a\\.b");
    assert!(matches(&out.regex, "a.b"));
    assert!(!matches(&out.regex, "axb"));
    assert!(matches!(out.tree, DerivationTree::Leaf { source: LeafSource::Singleton, .. }));
    assert_eq!(base.load(Ordering::SeqCst), 0);
}

pub fn empty_string_branch() {
    let cfg = SynthesisConfig::default();
    let s = StrategySuite::heuristic(&cfg);
    let out = synthesize(&Task::new(&[""], &[]), &s, &cfg).unwrap();
    assert_eq!(out.regex, RegexAst::Empty);
    assert!(matches(&out.regex, ""));
    assert!(!matches(&out.regex, "a"));
}

pub fn consecutive_segmentation_skipped() {
    let cfg = SynthesisConfig::default();
    let seg = counter();
    let base = counter();
    let s = suite(RouterAction::Segment, seg.clone(), counter(), base.clone());
    let out = synthesize(&Task::new(&["abc", "xyz"], &[]), &s, &cfg).unwrap();
    // The root segments once; each child was reached by Segment, so it must
    // not segment again and goes to the base instead.
    assert_eq!(seg.load(Ordering::SeqCst), 1);
    assert_eq!(base.load(Ordering::SeqCst), 2);
    let DerivationTree::Concat { children, .. } = &out.tree else {
        panic!("expected a concatenation root, got {:?}", out.tree);
    };
    assert_eq!(children.len(), 2);
    assert!(children.iter().all(|c| matches!(c, DerivationTree::Leaf { .. })));
    check_tree(&out.tree);
}

pub fn consecutive_partition_skipped() {
    let cfg = SynthesisConfig::default();
    let base = counter();
    let s = StrategySuite {
        router: Box::new(Always(RouterAction::Partition)),
        partitioner: Box::new(ByHead),
        segmenter: Box::new(HeadTail(counter())),
        base: Box::new(Recording(base.clone())),
    };
    let out = synthesize(&Task::new(&["ab", "ac", "xb", "xc"], &[]), &s, &cfg).unwrap();
    let DerivationTree::Union { children, .. } = &out.tree else {
        panic!("expected a union root");
    };
    assert_eq!(children.len(), 2);
    assert!(children.iter().all(|c| matches!(c, DerivationTree::Leaf { .. })));
    assert_eq!(base.load(Ordering::SeqCst), 2);
    check_tree(&out.tree);
}

pub fn all_singleton_partition_rejected() {
    let cfg = SynthesisConfig::default();
    let part = counter();
    let base = counter();
    let s = suite(RouterAction::Partition, counter(), part.clone(), base.clone());
    let out = synthesize(&Task::new(&["ab", "cd", "ef"], &[]), &s, &cfg).unwrap();
    assert_eq!(part.load(Ordering::SeqCst), 1);
    // The undivided set went to the base once, and the tree is a single leaf.
    assert_eq!(base.load(Ordering::SeqCst), 1);
    let DerivationTree::Leaf { source, examples, .. } = &out.tree else {
        panic!("expected a leaf");
    };
    assert_eq!(*source, LeafSource::Base);
    assert_eq!(examples.positives.len(), 3);
}

pub fn single_column_segmentation_falls_through() {
    struct Whole;
    impl Segmenter for Whole {
        fn segment(&self, task: &Task) -> Option<Segmentation> {
            Some(Segmentation {
                rows: task.positives.iter().map(|p| vec![p.clone()]).collect(),
                guides: vec![None],
            })
        }
    }
    let cfg = SynthesisConfig::default();
    let base = counter();
    let s = StrategySuite {
        router: Box::new(Always(RouterAction::Segment)),
        partitioner: Box::new(Singletons(counter())),
        segmenter: Box::new(Whole),
        base: Box::new(Recording(base.clone())),
    };
    let out = synthesize(&Task::new(&["ab", "cd"], &[]), &s, &cfg).unwrap();
    assert!(matches!(out.tree, DerivationTree::Leaf { .. }));
    assert_eq!(base.load(Ordering::SeqCst), 1);
}

pub fn final_gate_rejects_inconsistent_composition() {
    struct Class;
    impl BaseSynthesizer for Class {
        fn synthesize(&self, positives: &[String], _: &[String]) -> Option<RegexAst> {
            Some(RegexAst::Class(resyn::syntax::CharSet::from_chars(
                positives.iter().flat_map(|p| p.chars()),
            )))
        }
    }
    let cfg = SynthesisConfig::default();
    let s = StrategySuite {
        router: Box::new(Always(RouterAction::Segment)),
        partitioner: Box::new(Singletons(counter())),
        segmenter: Box::new(HeadTail(counter())),
        base: Box::new(Class),
    };
    // Columns {a,c} and {b,d} compose to [ac][bd], which accepts "ad".
    let task = Task::new(&["ab", "cd"], &["ad"]);
    match synthesize(&task, &s, &cfg) {
        Err(SynthError::Failure { partial: Some(tree) }) => {
            assert!(matches!(*tree, DerivationTree::Concat { .. }));
        }
        other => panic!("expected a gated failure, got {other:?}"),
    }
}

pub fn no_positives_is_an_error() {
    let cfg = SynthesisConfig::default();
    let s = StrategySuite::heuristic(&cfg);
    let empty: [&str; 0] = [];
    assert_eq!(
        synthesize(&Task::new(&empty, &["a"]), &s, &cfg),
        Err(SynthError::NoPositives)
    );
}

pub fn depth_limit_forces_base() {
    let cfg = SynthesisConfig {
        max_recursion_depth: 1,
        ..SynthesisConfig::default()
    };
    let seg = counter();
    let s = suite(RouterAction::Segment, seg.clone(), counter(), counter());
    let out = synthesize(&Task::new(&["abc", "xyz"], &[]), &s, &cfg).unwrap();
    assert_eq!(seg.load(Ordering::SeqCst), 1);
    check_tree(&out.tree);
}

pub fn oracle_reproduces_ground_truth() {
    let cfg = SynthesisConfig::default();
    let gt = resyn::canon::canonical_if_valid("[a-z]+-\\d+").unwrap();
    let task = Task::new(
        &["ab-12", "xyz-3", "q-456", "mm-7", "kfc-88", "b-0", "helloworldabc-20241231123", "zz-19"],
        &["ab12", "-12"],
    )
    .with_guide(gt.clone());
    let out = synthesize(&task, &StrategySuite::oracle(&cfg), &cfg).unwrap();
    assert_eq!(out.regex, gt);
    check_tree(&out.tree);
}

