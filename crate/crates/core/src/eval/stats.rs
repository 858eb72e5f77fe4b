use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::examplegen::literal_abstracted;
use crate::syntax::{ast_stats, serialize, RegexAst, TopLevel};

/// Label of the depth bucket (`"1"` … `"5"`, `"6+"`).
pub fn depth_bucket(depth: usize) -> String {
    if depth >= 6 {
        "6+".to_string()
    } else {
        depth.max(1).to_string()
    }
}

pub const DEPTH_BUCKETS: [&str; 6] = ["1", "2", "3", "4", "5", "6+"];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorpusStats {
    pub instances: usize,
    pub unique_structures: usize,
    /// Means over unique literal-abstracted structures.
    pub mean_depth: Option<f64>,
    pub mean_nodes: Option<f64>,
    pub mean_unions: Option<f64>,
    /// Histograms over all instances.
    pub top_level: BTreeMap<TopLevel, usize>,
    pub depth_histogram: BTreeMap<String, usize>,
}

/// Structural statistics on canonical, literal-abstracted regexes.
pub fn corpus_stats<'a>(gts: impl IntoIterator<Item = &'a RegexAst>) -> CorpusStats {
    let mut seen = HashSet::new();
    let mut sums = (0usize, 0usize, 0usize);
    let mut stats = CorpusStats {
        instances: 0,
        unique_structures: 0,
        mean_depth: None,
        mean_nodes: None,
        mean_unions: None,
        top_level: BTreeMap::new(),
        depth_histogram: DEPTH_BUCKETS.iter().map(|b| (b.to_string(), 0)).collect(),
    };
    for gt in gts {
        let abs = literal_abstracted(gt);
        let s = ast_stats(&abs);
        stats.instances += 1;
        *stats.top_level.entry(s.top_level_operator).or_default() += 1;
        *stats.depth_histogram.entry(depth_bucket(s.depth)).or_default() += 1;
        if seen.insert(serialize(&abs)) {
            sums.0 += s.depth;
            sums.1 += s.node_count;
            sums.2 += s.union_count;
        }
    }
    let u = seen.len();
    stats.unique_structures = u;
    if u > 0 {
        stats.mean_depth = Some(sums.0 as f64 / u as f64);
        stats.mean_nodes = Some(sums.1 as f64 / u as f64);
        stats.mean_unions = Some(sums.2 as f64 / u as f64);
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    #[test]
    fn identical_structures() {
        let gts: Vec<RegexAst> = ["ab\\d+", "xyz\\d+", "q\\d+"]
            .iter()
            .map(|p| parse(p).unwrap())
            .collect();
        let s = corpus_stats(&gts);
        assert_eq!(s.instances, 3);
        assert_eq!(s.unique_structures, 1);
        assert_eq!(s.depth_histogram.values().sum::<usize>(), 3);
        assert_eq!(s.top_level[&TopLevel::Concat], 3);
    }

    #[test]
    fn empty_corpus() {
        let s = corpus_stats(std::iter::empty());
        assert_eq!(s.instances, 0);
        assert_eq!(s.mean_depth, None);
    }
}
