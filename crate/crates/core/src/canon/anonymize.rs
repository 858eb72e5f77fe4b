//! Replacement of multi-character literals by single opaque tokens.
//!
//! Tokens come from the non-printable codes `[3, 8] ∪ [14, 31] ∪ {127}`;
//! codes 0, 1 and 2 are reserved (padding, epsilon, separator) and never
//! handed out. The literal-to-token assignment is a seeded shuffle, so the
//! same `(ast, seed)` always yields the same map.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::syntax::{charset::TOKEN_CODES, RegexAst};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum AnonymizeError {
    #[error("{found} distinct literals exceed the {available} available tokens")]
    TokenExhaustion { found: usize, available: usize },
}

/// Injective literal-to-token map, in first-occurrence order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnonymizationMap {
    entries: Vec<(String, char)>,
}

impl AnonymizationMap {
    pub fn entries(&self) -> &[(String, char)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn token_for(&self, literal: &str) -> Option<char> {
        self.entries.iter().find(|(l, _)| l == literal).map(|(_, t)| *t)
    }

    pub fn literal_for(&self, token: char) -> Option<&str> {
        self.entries
            .iter()
            .find(|(_, t)| *t == token)
            .map(|(l, _)| l.as_str())
    }

    /// Substitutes the original literals back.
    pub fn restore(&self, ast: &RegexAst) -> RegexAst {
        ast.clone().map_bottom_up(&mut |node| match node {
            RegexAst::Literal(s) => {
                let mut chars = s.chars();
                match (chars.next(), chars.next()) {
                    (Some(t), None) => match self.literal_for(t) {
                        Some(orig) => RegexAst::Literal(orig.to_string()),
                        None => RegexAst::Literal(s),
                    },
                    _ => RegexAst::Literal(s),
                }
            }
            other => other,
        })
    }
}

pub fn anonymize_literals(
    ast: &RegexAst,
    seed: u64,
) -> Result<(RegexAst, AnonymizationMap), AnonymizeError> {
    let mut literals: Vec<String> = Vec::new();
    ast.walk(&mut |node| {
        if let RegexAst::Literal(s) = node {
            if s.chars().count() >= 2 && !literals.contains(s) {
                literals.push(s.clone());
            }
        }
    });
    if literals.len() > TOKEN_CODES.len() {
        return Err(AnonymizeError::TokenExhaustion {
            found: literals.len(),
            available: TOKEN_CODES.len(),
        });
    }
    let mut codes = TOKEN_CODES;
    codes.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let map = AnonymizationMap {
        entries: literals
            .into_iter()
            .zip(codes.iter().map(|&c| c as char))
            .collect(),
    };
    let out = ast.clone().map_bottom_up(&mut |node| match node {
        RegexAst::Literal(s) => match map.token_for(&s) {
            Some(t) => RegexAst::Literal(t.to_string()),
            None => RegexAst::Literal(s),
        },
        other => other,
    });
    Ok((out, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{charset::is_token, parse, serialize, CharSet};

    #[test]
    fn long_literal_gets_one_token() {
        let ast = RegexAst::Concat(vec![
            RegexAst::Literal("http".into()),
            RegexAst::Class(CharSet::digit()),
        ]);
        let (anon, map) = anonymize_literals(&ast, 7).unwrap();
        assert_eq!(map.len(), 1);
        let tok = map.token_for("http").unwrap();
        assert!(is_token(tok));
        assert_eq!(
            anon,
            RegexAst::Concat(vec![
                RegexAst::Literal(tok.to_string()),
                RegexAst::Class(CharSet::digit()),
            ])
        );
        assert_eq!(serialize(&map.restore(&anon)), serialize(&ast));
    }

    #[test]
    fn short_literals_untouched_and_seed_deterministic() {
        let a = RegexAst::Literal("a".into());
        let (out, map) = anonymize_literals(&a, 1).unwrap();
        assert_eq!(out, a);
        assert!(map.is_empty());

        let ast = parse("foo|bar[0-9]|bazz").unwrap();
        assert_eq!(
            anonymize_literals(&ast, 42).unwrap(),
            anonymize_literals(&ast, 42).unwrap()
        );
    }

    #[test]
    fn too_many_literals() {
        let branches: Vec<RegexAst> = (0..26)
            .map(|i| RegexAst::Literal(format!("x{}", (b'a' + i as u8) as char)))
            .collect();
        let ast = RegexAst::Union(branches);
        assert_eq!(
            anonymize_literals(&ast, 0),
            Err(AnonymizeError::TokenExhaustion {
                found: 26,
                available: 25
            })
        );
    }
}
