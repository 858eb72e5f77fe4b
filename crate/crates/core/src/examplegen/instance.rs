use serde::{Deserialize, Serialize};

use super::sample::{mutate_negatives, sample_positives_with, SampleOptions};
use super::GenError;
use crate::synth::{oracle_partition, oracle_segment, dedup, OracleError};
use crate::syntax::RegexAst;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceConfig {
    pub positives: usize,
    pub negatives: usize,
    pub holdout_positives: usize,
    pub holdout_negatives: usize,
    pub sample: SampleOptions,
}

impl Default for InstanceConfig {
    fn default() -> Self {
        InstanceConfig {
            positives: 10,
            negatives: 10,
            holdout_positives: 10,
            holdout_negatives: 10,
            sample: SampleOptions::default(),
        }
    }
}

/// A ground truth with training and held-out examples. One JSON object per
/// corpus line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub id: String,
    #[serde(with = "pattern")]
    pub gt: RegexAst,
    pub positives: Vec<String>,
    pub negatives: Vec<String>,
    pub holdout_positives: Vec<String>,
    pub holdout_negatives: Vec<String>,
}

mod pattern {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use crate::syntax::{parse_with, ParseOptions, RegexAst};

    pub fn serialize<S: Serializer>(ast: &RegexAst, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&crate::syntax::serialize(ast))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<RegexAst, D::Error> {
        let p = String::deserialize(d)?;
        parse_with(&p, ParseOptions { allow_tokens: true }).map_err(D::Error::custom)
    }
}

impl Instance {
    pub fn has_holdout(&self) -> bool {
        !self.holdout_positives.is_empty() || !self.holdout_negatives.is_empty()
    }
}

/// Samples a pool of positives; the first ones (which cover the top-level
/// branches) train, the rest are held out. Negatives are edits of the
/// positives of the same split, and held-out negatives avoid the training
/// ones.
pub fn build_instance(
    id: impl Into<String>,
    gt: &RegexAst,
    cfg: &InstanceConfig,
    seed: u64,
) -> Result<Instance, GenError> {
    let pool = sample_positives_with(
        gt,
        cfg.positives + cfg.holdout_positives,
        seed,
        cfg.sample,
    )?;
    let split = cfg.positives.min(pool.len());
    let (train, held) = pool.split_at(split);
    let negatives = mutate_negatives(gt, train, cfg.negatives, seed ^ 0x9e37_79b9, &[]).strings;
    let holdout_negatives = if held.is_empty() {
        Vec::new()
    } else {
        mutate_negatives(gt, held, cfg.holdout_negatives, seed ^ 0x7f4a_7c15, &negatives).strings
    };
    Ok(Instance {
        id: id.into(),
        gt: gt.clone(),
        positives: train.to_vec(),
        negatives,
        holdout_positives: held.to_vec(),
        holdout_negatives,
    })
}

/// Sub-instances read off the ground truth: one per concatenation child
/// (with that column of every positive) or one per union branch hit (with
/// the strings it matches first). Other roots give nothing.
pub fn expand_substrings(
    gt: &RegexAst,
    positives: &[String],
) -> Result<Vec<(RegexAst, Vec<String>)>, OracleError> {
    match gt {
        RegexAst::Concat(children) => {
            let rows = oracle_segment(gt, positives)?;
            Ok(children
                .iter()
                .enumerate()
                .map(|(j, c)| (c.clone(), dedup(rows.iter().map(|r| r[j].clone()))))
                .collect())
        }
        RegexAst::Union(branches) => Ok(oracle_partition(gt, positives)?
            .into_iter()
            .map(|(b, g)| (branches[b].clone(), g))
            .collect()),
        _ => Ok(Vec::new()),
    }
}
