use serde::Serialize;

use crate::syntax::RegexAst;

/// The three choices open to a router.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RouterAction {
    Synthesize,
    Partition,
    Segment,
}

/// A (sub-)problem: deduplicated positives in first-appearance order,
/// negatives, and an optional ground-truth subtree guiding oracle strategies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Task {
    pub positives: Vec<String>,
    pub negatives: Vec<String>,
    pub guide: Option<RegexAst>,
    pub depth: usize,
}

impl Task {
    pub fn new<S: AsRef<str>>(positives: &[S], negatives: &[S]) -> Self {
        Task {
            positives: dedup(positives.iter().map(|s| s.as_ref().to_string())),
            negatives: dedup(negatives.iter().map(|s| s.as_ref().to_string())),
            guide: None,
            depth: 0,
        }
    }

    pub fn with_guide(mut self, guide: RegexAst) -> Self {
        self.guide = Some(guide);
        self
    }
}

/// Removes repeats, keeping the first occurrence of each string.
pub fn dedup(strings: impl IntoIterator<Item = String>) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for s in strings {
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// One group of a partition, or one column of a segmentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubTask {
    pub positives: Vec<String>,
    pub guide: Option<RegexAst>,
}

/// Per-string splits into a common number of columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segmentation {
    pub rows: Vec<Vec<String>>,
    pub guides: Vec<Option<RegexAst>>,
}

impl Segmentation {
    pub fn k(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// True if every row rejoins to its source string and all rows share k.
    pub fn preserves(&self, positives: &[String]) -> bool {
        let k = self.k();
        self.rows.len() == positives.len()
            && self.guides.len() == k
            && self
                .rows
                .iter()
                .zip(positives)
                .all(|(row, w)| row.len() == k && row.concat() == *w)
    }

    /// Column `j` as a deduplicated example set.
    pub fn columns(&self) -> Vec<SubTask> {
        (0..self.k())
            .map(|j| SubTask {
                positives: dedup(self.rows.iter().map(|r| r[j].clone())),
                guide: self.guides[j].clone(),
            })
            .collect()
    }
}

/// True if the groups are non-empty, disjoint and cover `positives`.
pub fn is_partition(groups: &[SubTask], positives: &[String]) -> bool {
    let mut seen: Vec<&String> = Vec::new();
    for g in groups {
        if g.positives.is_empty() {
            return false;
        }
        for p in &g.positives {
            if seen.contains(&p) || !positives.contains(p) {
                return false;
            }
            seen.push(p);
        }
    }
    seen.len() == positives.len()
}

pub trait Router: Send + Sync {
    fn route(&self, task: &Task, prev: Option<RouterAction>) -> RouterAction;
}

pub trait Partitioner: Send + Sync {
    /// `None` when no grouping is available.
    fn partition(&self, task: &Task) -> Option<Vec<SubTask>>;
}

pub trait Segmenter: Send + Sync {
    /// `None` when no split is available.
    fn segment(&self, task: &Task) -> Option<Segmentation>;
}

pub trait BaseSynthesizer: Send + Sync {
    fn synthesize(&self, positives: &[String], negatives: &[String]) -> Option<RegexAst>;
}

/// Router, partitioner, segmenter and base synthesizer used together.
pub struct StrategySuite {
    pub router: Box<dyn Router>,
    pub partitioner: Box<dyn Partitioner>,
    pub segmenter: Box<dyn Segmenter>,
    pub base: Box<dyn BaseSynthesizer>,
}
