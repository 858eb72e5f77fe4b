//! Random ground-truth regexes for synthetic corpora.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::canon::canonical_if_valid;
use crate::synth::ladder;
use crate::syntax::{serialize, CharSet, RegexAst};

/// Shape parameters for random ground truths. Leaves are fallback-ladder
/// classes under a quantifier, bare classes, or short literals.
#[derive(Clone, Debug)]
pub struct RandomGt {
    /// Indices into the fallback ladder usable as leaf classes.
    pub classes: Vec<usize>,
    /// `(min, max)` quantifiers for class leaves.
    pub quantifiers: Vec<(u32, Option<u32>)>,
    pub literal_chars: Vec<char>,
    pub max_literal_len: usize,
    pub max_concat: usize,
    pub max_branches: usize,
    /// Give every union branch its own leading literal with a distinct
    /// first character, so branches never overlap.
    pub prefixed_branches: bool,
    /// Put a literal between two adjacent non-literal concatenation items.
    pub separate_leaves: bool,
    /// Chance of wrapping a concatenation item in `( )?`.
    pub optional_prob: f64,
}

impl Default for RandomGt {
    fn default() -> Self {
        RandomGt {
            classes: (0..11).collect(),
            quantifiers: vec![(1, None), (0, None)],
            literal_chars: "abcdefghijklmnopqrstuvwxyz0123456789-_:@./#".chars().collect(),
            max_literal_len: 3,
            max_concat: 3,
            max_branches: 3,
            prefixed_branches: false,
            separate_leaves: false,
            optional_prob: 0.0,
        }
    }
}

impl RandomGt {
    /// Shapes whose structure is recoverable from ten positives: `+` leaves
    /// over the specific ladder classes, punctuation-led union branches and
    /// literal separators between adjacent leaves.
    pub fn identifiable() -> Self {
        RandomGt {
            classes: vec![0, 1, 2, 3, 5],
            quantifiers: vec![(1, None)],
            literal_chars: "-_:@./#=xyz".chars().collect(),
            max_literal_len: 2,
            max_concat: 3,
            max_branches: 2,
            prefixed_branches: true,
            separate_leaves: true,
            optional_prob: 0.0,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Parent {
    Root,
    Concat,
    Union,
}

impl RandomGt {
    /// A valid canonical regex built with at most `budget` nesting levels.
    pub fn generate<R: Rng>(&self, rng: &mut R, budget: usize) -> RegexAst {
        loop {
            let raw = self.node(rng, budget.max(1), Parent::Root);
            if let Ok(ast) = canonical_if_valid(&serialize(&raw)) {
                return ast;
            }
        }
    }

    fn literal<R: Rng>(&self, rng: &mut R) -> RegexAst {
        let n = rng.gen_range(1..=self.max_literal_len.max(1));
        RegexAst::literal(
            (0..n)
                .map(|_| *self.literal_chars.choose(rng).expect("literal alphabet"))
                .collect::<String>(),
        )
    }

    fn class<R: Rng>(&self, rng: &mut R) -> CharSet {
        ladder()[*self.classes.choose(rng).expect("leaf classes")]
    }

    fn leaf<R: Rng>(&self, rng: &mut R) -> RegexAst {
        let (min, max) = *self.quantifiers.choose(rng).expect("quantifiers");
        RegexAst::repeat(RegexAst::Class(self.class(rng)), min, max)
    }

    fn node<R: Rng>(&self, rng: &mut R, budget: usize, parent: Parent) -> RegexAst {
        match budget {
            1 => {
                if rng.gen_bool(0.5) {
                    self.literal(rng)
                } else {
                    RegexAst::Class(self.class(rng))
                }
            }
            2 => self.leaf(rng),
            _ => {
                let mut ops = vec![0u8];
                if parent != Parent::Concat {
                    ops.push(1);
                }
                if parent != Parent::Union && budget >= 4 {
                    ops.push(2);
                }
                match ops.choose(rng).copied().unwrap_or(0) {
                    1 => self.concat(rng, budget),
                    2 => self.union(rng, budget),
                    _ => self.leaf(rng),
                }
            }
        }
    }

    fn concat<R: Rng>(&self, rng: &mut R, budget: usize) -> RegexAst {
        let n = rng.gen_range(2..=self.max_concat.max(2));
        let deep = rng.gen_range(0..n);
        let mut items: Vec<RegexAst> = (0..n)
            .map(|i| {
                let b = if i == deep {
                    budget - 1
                } else {
                    rng.gen_range(1..=(budget - 1).min(2))
                };
                let item = self.node(rng, b, Parent::Concat);
                if self.optional_prob > 0.0 && rng.gen_bool(self.optional_prob) {
                    RegexAst::optional(item)
                } else {
                    item
                }
            })
            .collect();
        if self.separate_leaves {
            let mut sep = Vec::with_capacity(items.len() * 2);
            for item in items {
                let lit = matches!(item, RegexAst::Literal(_));
                let prev_lit = matches!(sep.last(), Some(RegexAst::Literal(_)) | None);
                if !lit && !prev_lit {
                    sep.push(self.literal(rng));
                }
                sep.push(item);
            }
            items = sep;
        }
        RegexAst::Concat(items)
    }

    fn union<R: Rng>(&self, rng: &mut R, budget: usize) -> RegexAst {
        let n = rng.gen_range(2..=self.max_branches.max(2));
        let mut firsts: Vec<char> = self.literal_chars.clone();
        firsts.shuffle(rng);
        let branches = (0..n)
            .map(|i| {
                if self.prefixed_branches {
                    let head = firsts[i % firsts.len()];
                    let mut prefix = self.literal(rng);
                    if let RegexAst::Literal(s) = &mut prefix {
                        s.replace_range(..1, &head.to_string());
                    }
                    let rest = if budget >= 4 {
                        self.node(rng, budget - 2, Parent::Concat)
                    } else {
                        self.leaf(rng)
                    };
                    RegexAst::Concat(vec![prefix, rest])
                } else {
                    self.node(rng, budget - 1, Parent::Union)
                }
            })
            .collect();
        RegexAst::Union(branches)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::ast_stats;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_are_valid_and_bounded() {
        let g = RandomGt::default();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let ast = g.generate(&mut rng, 5);
            assert!(canonical_if_valid(&serialize(&ast)).is_ok());
            assert!(ast_stats(&ast).depth <= 8);
        }
    }

    #[test]
    fn deterministic() {
        let g = RandomGt {
            prefixed_branches: true,
            separate_leaves: true,
            ..RandomGt::default()
        };
        let a = g.generate(&mut ChaCha8Rng::seed_from_u64(3), 6);
        let b = g.generate(&mut ChaCha8Rng::seed_from_u64(3), 6);
        assert_eq!(a, b);
    }
}
