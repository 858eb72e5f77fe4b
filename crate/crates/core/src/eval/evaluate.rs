use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::metrics::{conciseness, failure_substitute, mcc, ConfusionCounts};
use super::stats::{depth_bucket, DEPTH_BUCKETS};
use crate::examplegen::Instance;
use crate::synth::{consistent, synthesize, StrategySuite, SynthesisConfig, Task};
use crate::syntax::{ast_stats, serialize, RegexAst};

/// Which strategy suite drives synthesis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteKind {
    Oracle,
    Heuristic,
    BaseOnly,
    SingleLevel,
}

impl SuiteKind {
    pub fn build(self, cfg: &SynthesisConfig) -> StrategySuite {
        match self {
            SuiteKind::Oracle => StrategySuite::oracle(cfg),
            SuiteKind::Heuristic => StrategySuite::heuristic(cfg),
            SuiteKind::BaseOnly => StrategySuite::base_only(cfg),
            SuiteKind::SingleLevel => StrategySuite::single_level(cfg),
        }
    }
}

impl FromStr for SuiteKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "oracle" => Ok(SuiteKind::Oracle),
            "heuristic" => Ok(SuiteKind::Heuristic),
            "base-only" | "base" => Ok(SuiteKind::BaseOnly),
            "single-level" => Ok(SuiteKind::SingleLevel),
            other => Err(format!("unknown suite `{other}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstanceRow {
    pub id: String,
    pub depth: usize,
    pub success: bool,
    /// `None` when the instance has no held-out examples.
    pub semantic_hit: Option<bool>,
    pub mcc: Option<f64>,
    pub conciseness: f64,
    /// The synthesized regex, or the positive-union stand-in on failure.
    pub regex: String,
    pub substituted: bool,
}

/// Scores one prediction (`None` = failed synthesis) against an instance.
pub fn evaluate_instance(pred: Option<&RegexAst>, inst: &Instance) -> InstanceRow {
    let success = pred.is_some_and(|r| consistent(r, &inst.positives, &inst.negatives));
    let substitute;
    let regex = match pred {
        Some(r) => r,
        None => {
            substitute = failure_substitute(&inst.positives);
            &substitute
        }
    };
    let (semantic_hit, row_mcc) = if inst.has_holdout() {
        let counts = ConfusionCounts::of(regex, &inst.holdout_positives, &inst.holdout_negatives);
        (Some(counts.fp == 0 && counts.fn_ == 0), Some(mcc(counts)))
    } else {
        (None, None)
    };
    InstanceRow {
        id: inst.id.clone(),
        depth: ast_stats(&inst.gt).depth,
        success,
        semantic_hit,
        mcc: row_mcc,
        conciseness: conciseness(regex, &inst.gt),
        regex: serialize(regex),
        substituted: pred.is_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DepthBucket {
    pub depth: String,
    pub instances: usize,
    pub successes: usize,
    pub success_rate: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvalReport {
    pub suite: SuiteKind,
    pub instances: usize,
    /// Percentages; `None` when undefined (no instances).
    pub success_rate: Option<f64>,
    pub semantic_accuracy: Option<f64>,
    pub conciseness_mean: Option<f64>,
    pub mcc_mean: Option<f64>,
    /// Instances without held-out examples, excluded from semantic accuracy
    /// and MCC.
    pub no_holdout: usize,
    pub depth_buckets: Vec<DepthBucket>,
    pub rows: Vec<InstanceRow>,
}

fn mean(xs: impl Iterator<Item = f64>) -> Option<f64> {
    let (s, n) = xs.fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
    (n > 0).then(|| s / n as f64)
}

impl EvalReport {
    pub fn from_rows(suite: SuiteKind, rows: Vec<InstanceRow>) -> Self {
        let n = rows.len();
        let pct = |k: usize, of: usize| (of > 0).then(|| 100.0 * k as f64 / of as f64);
        let held: Vec<&InstanceRow> = rows.iter().filter(|r| r.semantic_hit.is_some()).collect();
        let depth_buckets = DEPTH_BUCKETS
            .iter()
            .map(|b| {
                let in_bucket: Vec<&InstanceRow> =
                    rows.iter().filter(|r| depth_bucket(r.depth) == *b).collect();
                let successes = in_bucket.iter().filter(|r| r.success).count();
                DepthBucket {
                    depth: b.to_string(),
                    instances: in_bucket.len(),
                    successes,
                    success_rate: pct(successes, in_bucket.len()),
                }
            })
            .collect();
        EvalReport {
            suite,
            instances: n,
            success_rate: pct(rows.iter().filter(|r| r.success).count(), n),
            semantic_accuracy: pct(
                held.iter().filter(|r| r.semantic_hit == Some(true)).count(),
                held.len(),
            ),
            conciseness_mean: mean(rows.iter().map(|r| r.conciseness)),
            mcc_mean: mean(held.iter().filter_map(|r| r.mcc)),
            no_holdout: n - held.len(),
            depth_buckets,
            rows,
        }
    }

    pub fn bucket(&self, label: &str) -> Option<&DepthBucket> {
        self.depth_buckets.iter().find(|b| b.depth == label)
    }

    pub fn to_table(&self) -> String {
        let f = |x: Option<f64>| x.map_or("n/a".to_string(), |v| format!("{v:.2}"));
        let mut s = String::new();
        let _ = writeln!(s, "suite              {:?}", self.suite);
        let _ = writeln!(s, "instances          {}", self.instances);
        let _ = writeln!(s, "success rate (%)   {}", f(self.success_rate));
        let _ = writeln!(s, "semantic acc (%)   {}", f(self.semantic_accuracy));
        let _ = writeln!(s, "conciseness        {}", f(self.conciseness_mean));
        let _ = writeln!(s, "mcc                {}", f(self.mcc_mean));
        let _ = writeln!(s, "no holdout         {}", self.no_holdout);
        let _ = writeln!(s);
        let _ = writeln!(s, "{:<6} {:>9} {:>9} {:>9}", "depth", "instances", "success", "rate (%)");
        for b in &self.depth_buckets {
            let _ = writeln!(
                s,
                "{:<6} {:>9} {:>9} {:>9}",
                b.depth,
                b.instances,
                b.successes,
                f(b.success_rate)
            );
        }
        s
    }

    /// Depth-bucket success rates as CSV.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("depth,instances,successes,success_rate\n");
        for b in &self.depth_buckets {
            let rate = b.success_rate.map_or(String::new(), |r| format!("{r:.4}"));
            let _ = writeln!(s, "{},{},{},{}", b.depth, b.instances, b.successes, rate);
        }
        s
    }
}

/// Synthesizes every instance (in parallel) and aggregates the metrics.
/// Oracle tasks are guided by the instance's ground truth.
pub fn evaluate_corpus(
    instances: &[Instance],
    kind: SuiteKind,
    cfg: &SynthesisConfig,
) -> EvalReport {
    let suite = kind.build(cfg);
    let rows = instances
        .par_iter()
        .map(|inst| {
            let mut task = Task::new(&inst.positives, &inst.negatives);
            if kind == SuiteKind::Oracle {
                task = task.with_guide(inst.gt.clone());
            }
            let pred = synthesize(&task, &suite, cfg).ok().map(|s| s.regex);
            evaluate_instance(pred.as_ref(), inst)
        })
        .collect();
    EvalReport::from_rows(kind, rows)
}
