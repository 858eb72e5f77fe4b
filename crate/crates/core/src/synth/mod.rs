//! Recursive divide-and-conquer synthesis with pluggable strategies.

mod engine;
mod enumerative;
mod fallback;
mod heuristic;
mod oracle;
mod strategy;

pub use engine::{
    compose, consistent, recursive_synthesize, synthesize, DerivationTree, ExampleSet,
    LeafSource, SynthError, Synthesis, SynthesisConfig,
};
pub use enumerative::{enumerative_base, EnumerativeBase, DEFAULT_BASE_BUDGET};
pub use fallback::{fallback_candidates, fallback_synthesize, ladder};
pub use heuristic::{
    heuristic_partition, heuristic_router, heuristic_segment, Heuristic, SingleLevel,
    SynthesizeOnly,
};
pub use oracle::{oracle_partition, oracle_router, oracle_segment, Oracle, OracleError};
pub use strategy::{
    dedup, is_partition, BaseSynthesizer, Partitioner, Router, RouterAction, Segmentation,
    Segmenter, StrategySuite, SubTask, Task,
};

impl StrategySuite {
    /// Ground-truth routing and decomposition; tasks must carry a guide.
    pub fn oracle(cfg: &SynthesisConfig) -> Self {
        StrategySuite {
            router: Box::new(Oracle),
            partitioner: Box::new(Oracle),
            segmenter: Box::new(Oracle),
            base: Box::new(EnumerativeBase {
                budget: cfg.base_budget,
            }),
        }
    }

    pub fn heuristic(cfg: &SynthesisConfig) -> Self {
        StrategySuite {
            router: Box::new(Heuristic),
            partitioner: Box::new(Heuristic),
            segmenter: Box::new(Heuristic),
            base: Box::new(EnumerativeBase {
                budget: cfg.base_budget,
            }),
        }
    }

    /// The base synthesizer (with fallback) alone.
    pub fn base_only(cfg: &SynthesisConfig) -> Self {
        StrategySuite {
            router: Box::new(SynthesizeOnly),
            ..StrategySuite::heuristic(cfg)
        }
    }

    /// Heuristic decomposition of the root only.
    pub fn single_level(cfg: &SynthesisConfig) -> Self {
        StrategySuite {
            router: Box::new(SingleLevel(Heuristic)),
            ..StrategySuite::heuristic(cfg)
        }
    }
}
