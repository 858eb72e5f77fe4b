//! `key=value` settings files.

use std::time::Duration;

use thiserror::Error;

use crate::cost::ClassCost;
use crate::examplegen::InstanceConfig;
use crate::synth::SynthesisConfig;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("line {line}: expected key=value")]
    Malformed { line: usize },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: bad value for `{key}`: {value}")]
    BadValue {
        line: usize,
        key: String,
        value: String,
    },
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Settings {
    pub synthesis: SynthesisConfig,
    pub instance: InstanceConfig,
    pub class_cost: ClassCost,
}

/// Parses `key=value` lines; blank lines and `#` comments are skipped.
///
/// Keys: `max_recursion_depth`, `fallback_enabled`, `base_budget`,
/// `strict`, `class_cost`, `positives`, `negatives`, `holdout_positives`,
/// `holdout_negatives`, `sample_retries`, `sample_timeout_secs`.
pub fn parse_settings(text: &str) -> Result<Settings, ConfigError> {
    let mut s = Settings::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (key, value) = body
            .split_once('=')
            .map(|(k, v)| (k.trim(), v.trim()))
            .ok_or(ConfigError::Malformed { line })?;
        let bad = || ConfigError::BadValue {
            line,
            key: key.to_string(),
            value: value.to_string(),
        };
        let num = || value.parse::<usize>().map_err(|_| bad());
        let flag = || value.parse::<bool>().map_err(|_| bad());
        match key {
            "max_recursion_depth" => {
                s.synthesis.max_recursion_depth = num()?;
                if s.synthesis.max_recursion_depth == 0 {
                    return Err(bad());
                }
            }
            "fallback_enabled" => s.synthesis.fallback_enabled = flag()?,
            "base_budget" => s.synthesis.base_budget = num()?,
            "strict" => s.synthesis.strict = flag()?,
            "class_cost" => s.class_cost = value.parse().map_err(|_| bad())?,
            "positives" => s.instance.positives = num()?,
            "negatives" => s.instance.negatives = num()?,
            "holdout_positives" => s.instance.holdout_positives = num()?,
            "holdout_negatives" => s.instance.holdout_negatives = num()?,
            "sample_retries" => s.instance.sample.retries = num()?,
            "sample_timeout_secs" => {
                s.instance.sample.timeout = Duration::from_secs(num()? as u64)
            }
            _ => {
                return Err(ConfigError::UnknownKey {
                    line,
                    key: key.to_string(),
                })
            }
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_known_keys() {
        let s = parse_settings("# comment\nbase_budget = 500\nstrict=true\n\nclass_cost=set-size\n")
            .unwrap();
        assert_eq!(s.synthesis.base_budget, 500);
        assert!(s.synthesis.strict);
        assert_eq!(s.class_cost, ClassCost::SetSize);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            parse_settings("nope"),
            Err(ConfigError::Malformed { line: 1 })
        );
        assert!(matches!(
            parse_settings("colour=red"),
            Err(ConfigError::UnknownKey { .. })
        ));
        assert!(matches!(
            parse_settings("max_recursion_depth=0"),
            Err(ConfigError::BadValue { .. })
        ));
    }
}
