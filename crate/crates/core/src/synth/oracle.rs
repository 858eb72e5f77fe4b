//! Strategies that read decisions off a ground-truth regex.

use thiserror::Error;

use super::strategy::{
    Partitioner, Router, RouterAction, Segmentation, Segmenter, SubTask, Task,
};
use crate::syntax::{Matcher, RegexAst};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("`{0}` matches no branch of the ground truth")]
    UnmatchedString(String),
    #[error("`{0}` admits no split along the ground truth")]
    SegmentationFailure(String),
    #[error("ground truth root is not a {0}")]
    WrongRoot(&'static str),
}

/// Partition for a union root, segment for a concatenation, synthesize
/// otherwise.
pub fn oracle_router(gt: &RegexAst) -> RouterAction {
    match gt {
        RegexAst::Union(_) => RouterAction::Partition,
        RegexAst::Concat(_) => RouterAction::Segment,
        _ => RouterAction::Synthesize,
    }
}

/// Groups strings by the first branch they match, in order of first
/// appearance. Returns `(branch index, members)` pairs.
pub fn oracle_partition(
    gt: &RegexAst,
    positives: &[String],
) -> Result<Vec<(usize, Vec<String>)>, OracleError> {
    let RegexAst::Union(branches) = gt else {
        return Err(OracleError::WrongRoot("union"));
    };
    let matchers: Vec<Matcher> = branches.iter().map(Matcher::new).collect();
    let mut groups: Vec<(usize, Vec<String>)> = Vec::new();
    for w in positives {
        let b = matchers
            .iter()
            .position(|m| m.is_match(w))
            .ok_or_else(|| OracleError::UnmatchedString(w.clone()))?;
        match groups.iter_mut().find(|(i, _)| *i == b) {
            Some((_, g)) => g.push(w.clone()),
            None => groups.push((b, vec![w.clone()])),
        }
    }
    Ok(groups)
}

/// Splits every string along the children of a concatenation, choosing at
/// each boundary the shortest segment that still lets the remainder split.
pub fn oracle_segment(
    gt: &RegexAst,
    positives: &[String],
) -> Result<Vec<Vec<String>>, OracleError> {
    let RegexAst::Concat(children) = gt else {
        return Err(OracleError::WrongRoot("concatenation"));
    };
    let matchers: Vec<Matcher> = children.iter().map(Matcher::new).collect();
    positives
        .iter()
        .map(|w| split_one(&matchers, w).ok_or_else(|| OracleError::SegmentationFailure(w.clone())))
        .collect()
}

fn split_one(matchers: &[Matcher], w: &str) -> Option<Vec<String>> {
    let chars: Vec<char> = w.chars().collect();
    let n = chars.len();
    let k = matchers.len();
    let piece = |a: usize, b: usize| chars[a..b].iter().collect::<String>();
    // tail[i][p]: children i.. can match chars[p..].
    let mut tail = vec![vec![false; n + 1]; k + 1];
    tail[k][n] = true;
    for i in (0..k).rev() {
        for p in 0..=n {
            tail[i][p] = (p..=n).any(|e| tail[i + 1][e] && matchers[i].is_match(&piece(p, e)));
        }
    }
    if !tail[0][0] {
        return None;
    }
    let mut out = Vec::with_capacity(k);
    let mut pos = 0;
    for i in 0..k {
        let end = (pos..=n).find(|&e| tail[i + 1][e] && matchers[i].is_match(&piece(pos, e)))?;
        out.push(piece(pos, end));
        pos = end;
    }
    Some(out)
}

/// Router, partitioner and segmenter driven by the task's guide.
#[derive(Clone, Copy, Debug, Default)]
pub struct Oracle;

impl Router for Oracle {
    fn route(&self, task: &Task, _prev: Option<RouterAction>) -> RouterAction {
        task.guide
            .as_ref()
            .map_or(RouterAction::Synthesize, oracle_router)
    }
}

impl Partitioner for Oracle {
    fn partition(&self, task: &Task) -> Option<Vec<SubTask>> {
        let gt = task.guide.as_ref()?;
        let RegexAst::Union(branches) = gt else {
            return None;
        };
        let groups = oracle_partition(gt, &task.positives).ok()?;
        Some(
            groups
                .into_iter()
                .map(|(b, positives)| SubTask {
                    positives,
                    guide: Some(branches[b].clone()),
                })
                .collect(),
        )
    }
}

impl Segmenter for Oracle {
    fn segment(&self, task: &Task) -> Option<Segmentation> {
        let gt = task.guide.as_ref()?;
        let RegexAst::Concat(children) = gt else {
            return None;
        };
        let rows = oracle_segment(gt, &task.positives).ok()?;
        Some(Segmentation {
            rows,
            guides: children.iter().cloned().map(Some).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{canonicalize, Mode};
    use crate::syntax::parse;

    fn strings(s: &[&str]) -> Vec<String> {
        s.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn routes_by_root() {
        assert_eq!(oracle_router(&parse("a|bc").unwrap()), RouterAction::Partition);
        assert_eq!(oracle_router(&parse("a\\d").unwrap()), RouterAction::Segment);
        assert_eq!(oracle_router(&parse("a*").unwrap()), RouterAction::Synthesize);
    }

    #[test]
    fn partition_first_appearance() {
        let gt = canonicalize(&parse("(b|c)at|dog").unwrap(), Mode::Full).unwrap();
        let groups = oracle_partition(&gt, &strings(&["dog", "bat", "cat"])).unwrap();
        let members: Vec<Vec<String>> = groups.into_iter().map(|(_, g)| g).collect();
        assert_eq!(members, vec![strings(&["dog"]), strings(&["bat", "cat"])]);
        assert!(matches!(
            oracle_partition(&gt, &strings(&["cow"])),
            Err(OracleError::UnmatchedString(_))
        ));
    }

    #[test]
    fn segment_leftmost_shortest() {
        let gt = RegexAst::Concat(vec![parse("\\d+").unwrap(), RegexAst::literal("-")]);
        assert_eq!(
            oracle_segment(&gt, &strings(&["12-"])).unwrap(),
            vec![strings(&["12", "-"])]
        );
        let aa = RegexAst::Concat(vec![parse("a*").unwrap(), parse("a*").unwrap()]);
        assert_eq!(
            oracle_segment(&aa, &strings(&["aa"])).unwrap(),
            vec![strings(&["", "aa"])]
        );
        assert!(matches!(
            oracle_segment(&gt, &strings(&["x"])),
            Err(OracleError::SegmentationFailure(_))
        ));
    }
}
