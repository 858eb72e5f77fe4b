//! Metrics, corpus evaluation and structural statistics.

mod evaluate;
mod metrics;
mod stats;

pub use evaluate::{
    evaluate_corpus, evaluate_instance, DepthBucket, EvalReport, InstanceRow, SuiteKind,
};
pub use metrics::{conciseness, failure_substitute, mcc, ConfusionCounts};
pub use stats::{corpus_stats, depth_bucket, CorpusStats, DEPTH_BUCKETS};
