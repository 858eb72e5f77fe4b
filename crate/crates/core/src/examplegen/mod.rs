//! Example generation: positive sampling, hard-negative mutation, instance
//! assembly and JSON-lines corpora.

mod corpus;
mod instance;
mod random;
mod sample;

use std::time::Duration;

use thiserror::Error;

pub use corpus::{
    dedup_corpus, literal_abstracted, read_corpus, read_corpus_from, structural_signature,
    write_corpus, write_corpus_to, CorpusError,
};
pub use instance::{build_instance, expand_substrings, Instance, InstanceConfig};
pub use random::RandomGt;
pub use sample::{
    mutate_negatives, sample_one, sample_positives, sample_positives_with, NegativeSample,
    SampleOptions, DEFAULT_RETRIES, DEFAULT_TIMEOUT, MAX_REPEAT_SAMPLE,
};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("language yields only {found} distinct sample(s); at least 2 required")]
    InsufficientLanguage { found: usize },
    #[error("sampling exceeded {0:?}")]
    Timeout(Duration),
}
