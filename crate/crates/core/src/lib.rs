//! Regex synthesis from examples by recursive decomposition.
//!
//! Positive strings are split column-wise (mirroring concatenation) or
//! grouped (mirroring union) until the pieces are simple enough for a base
//! synthesizer; the partial regexes are then composed bottom-up. Around
//! that engine sit a small regex toolkit ([`syntax`]), a canonicalizer
//! ([`canon`]), exact cost oracles ([`cost`]), example and corpus
//! generation ([`examplegen`]) and evaluation metrics ([`eval`]).
//!
//! ```
//! use resyn::synth::{synthesize, StrategySuite, SynthesisConfig, Task};
//!
//! let cfg = SynthesisConfig::default();
//! let suite = StrategySuite::heuristic(&cfg);
//! let task = Task::new(&["ab-12", "xy-345"], &["ab12"]);
//! let out = synthesize(&task, &suite, &cfg).unwrap();
//! assert!(resyn::synth::consistent(&out.regex, &task.positives, &task.negatives));
//! ```

pub mod canon;
pub mod config;
pub mod cost;
pub mod eval;
pub mod examplegen;
pub mod synth;
pub mod syntax;
