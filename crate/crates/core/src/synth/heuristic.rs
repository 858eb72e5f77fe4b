//! Non-learned stand-ins for the router, partitioner and segmenter.

use super::strategy::{
    Partitioner, Router, RouterAction, Segmentation, Segmenter, SubTask, Task,
};

/// Splits every string around the longest substring common to all of them
/// (ties: leftmost in the first string), at each string's first occurrence,
/// into (prefix, separator, suffix). The split counts only when some prefix
/// and some suffix are non-empty; otherwise `None` (k = 1).
pub fn heuristic_segment(positives: &[String]) -> Option<Vec<Vec<String>>> {
    if positives.len() < 2 {
        return None;
    }
    let sep = longest_common_substring(positives)?;
    let rows: Vec<Vec<String>> = positives
        .iter()
        .map(|w| {
            let at = w.find(&sep).expect("common substring occurs");
            vec![
                w[..at].to_string(),
                sep.clone(),
                w[at + sep.len()..].to_string(),
            ]
        })
        .collect();
    let proper = rows.iter().any(|r| !r[0].is_empty()) && rows.iter().any(|r| !r[2].is_empty());
    proper.then_some(rows)
}

fn longest_common_substring(strings: &[String]) -> Option<String> {
    let first: Vec<char> = strings[0].chars().collect();
    for len in (1..=first.len()).rev() {
        for start in 0..=first.len() - len {
            let cand: String = first[start..start + len].iter().collect();
            if strings[1..].iter().all(|w| w.contains(&cand)) {
                return Some(cand);
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Category {
    Digit,
    Lower,
    Upper,
    Space,
    Other,
}

fn category(c: char) -> Category {
    match c {
        '0'..='9' => Category::Digit,
        'a'..='z' => Category::Lower,
        'A'..='Z' => Category::Upper,
        ' ' | '\t' | '\n' | '\r' | '\x0c' => Category::Space,
        _ => Category::Other,
    }
}

fn signature(w: &str) -> Vec<Category> {
    let mut sig: Vec<Category> = w.chars().map(category).collect();
    sig.dedup();
    sig
}

/// Groups strings by their run-collapsed character-category sequence, in
/// order of first appearance.
pub fn heuristic_partition(positives: &[String]) -> Vec<Vec<String>> {
    let mut groups: Vec<(Vec<Category>, Vec<String>)> = Vec::new();
    for w in positives {
        let sig = signature(w);
        match groups.iter_mut().find(|(s, _)| *s == sig) {
            Some((_, g)) => g.push(w.clone()),
            None => groups.push((sig, vec![w.clone()])),
        }
    }
    groups.into_iter().map(|(_, g)| g).collect()
}

pub fn heuristic_router(positives: &[String], prev: Option<RouterAction>) -> RouterAction {
    if prev != Some(RouterAction::Segment) && heuristic_segment(positives).is_some() {
        return RouterAction::Segment;
    }
    if prev != Some(RouterAction::Partition) {
        // An all-singleton grouping is still reported; the engine rejects it.
        if heuristic_partition(positives).len() > 1 {
            return RouterAction::Partition;
        }
    }
    RouterAction::Synthesize
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Heuristic;

impl Router for Heuristic {
    fn route(&self, task: &Task, prev: Option<RouterAction>) -> RouterAction {
        heuristic_router(&task.positives, prev)
    }
}

impl Partitioner for Heuristic {
    fn partition(&self, task: &Task) -> Option<Vec<SubTask>> {
        Some(
            heuristic_partition(&task.positives)
                .into_iter()
                .map(|positives| SubTask {
                    positives,
                    guide: None,
                })
                .collect(),
        )
    }
}

impl Segmenter for Heuristic {
    fn segment(&self, task: &Task) -> Option<Segmentation> {
        let rows = heuristic_segment(&task.positives)?;
        let k = rows[0].len();
        Some(Segmentation {
            rows,
            guides: vec![None; k],
        })
    }
}

/// Always synthesizes; reduces the engine to the base synthesizer.
#[derive(Clone, Copy, Debug, Default)]
pub struct SynthesizeOnly;

impl Router for SynthesizeOnly {
    fn route(&self, _task: &Task, _prev: Option<RouterAction>) -> RouterAction {
        RouterAction::Synthesize
    }
}

/// Defers to the inner router at the root only; every sub-problem is
/// synthesized directly.
pub struct SingleLevel<R>(pub R);

impl<R: Router> Router for SingleLevel<R> {
    fn route(&self, task: &Task, prev: Option<RouterAction>) -> RouterAction {
        if task.depth == 0 {
            self.0.route(task, prev)
        } else {
            RouterAction::Synthesize
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn segment_on_separator() {
        assert_eq!(
            heuristic_segment(&s(&["ab-cd", "xy-zw"])),
            Some(vec![s(&["ab", "-", "cd"]), s(&["xy", "-", "zw"])])
        );
        assert_eq!(heuristic_segment(&s(&["abc", "xyz"])), None);
        assert_eq!(heuristic_segment(&s(&["ab-", "c-"])), None);
        assert_eq!(heuristic_segment(&s(&["aa", "ab"])), None);
    }

    #[test]
    fn partition_by_signature() {
        assert_eq!(
            heuristic_partition(&s(&["IIABC", "VVXYZ", "12"])),
            vec![s(&["IIABC", "VVXYZ"]), s(&["12"])]
        );
        assert_eq!(heuristic_partition(&s(&["ab", "cd"])).len(), 1);
    }

    #[test]
    fn router_choices() {
        assert_eq!(heuristic_router(&s(&["ab-cd", "xy-zw"]), None), RouterAction::Segment);
        assert_eq!(
            heuristic_router(&s(&["IIABC", "12"]), Some(RouterAction::Segment)),
            RouterAction::Partition
        );
        assert_eq!(
            heuristic_router(&s(&["aa", "ab"]), Some(RouterAction::Partition)),
            RouterAction::Synthesize
        );
    }
}
