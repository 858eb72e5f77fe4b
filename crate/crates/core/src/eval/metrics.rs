use serde::Serialize;

use crate::syntax::{serialize, Matcher, RegexAst};

/// Held-out classification counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConfusionCounts {
    pub tp: u64,
    pub tn: u64,
    pub fp: u64,
    pub fn_: u64,
}

impl ConfusionCounts {
    pub fn of<S: AsRef<str>>(regex: &RegexAst, positives: &[S], negatives: &[S]) -> Self {
        let m = Matcher::new(regex);
        let tp = positives.iter().filter(|p| m.is_match(p.as_ref())).count() as u64;
        let fp = negatives.iter().filter(|n| m.is_match(n.as_ref())).count() as u64;
        ConfusionCounts {
            tp,
            fn_: positives.len() as u64 - tp,
            fp,
            tn: negatives.len() as u64 - fp,
        }
    }
}

/// Matthews correlation coefficient; 0 when any marginal is zero.
pub fn mcc(c: ConfusionCounts) -> f64 {
    let (tp, tn, fp, fn_) = (c.tp as f64, c.tn as f64, c.fp as f64, c.fn_ as f64);
    let denom = (tp + fp) * (tp + fn_) * (tn + fp) * (tn + fn_);
    if denom == 0.0 {
        return 0.0;
    }
    (tp * tn - fp * fn_) / denom.sqrt()
}

/// Ratio of serialized pattern lengths.
pub fn conciseness(pred: &RegexAst, gt: &RegexAst) -> f64 {
    serialize(pred).chars().count() as f64 / serialize(gt).chars().count().max(1) as f64
}

/// Stand-in for a failed synthesis: the sorted union of the positives as
/// escaped literals, left unfactored.
pub fn failure_substitute(positives: &[String]) -> RegexAst {
    let mut lits: Vec<String> = positives.to_vec();
    lits.sort();
    lits.dedup();
    match lits.len() {
        0 => RegexAst::Empty,
        1 => RegexAst::literal(lits.remove(0)),
        _ => RegexAst::Union(lits.into_iter().map(RegexAst::literal).collect()),
    }
}
