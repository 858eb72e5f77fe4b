//! Random raw (non-canonical) regex trees over a small alphabet.

use rand::seq::SliceRandom;
use rand::Rng;
use resyn::syntax::{CharSet, RegexAst};

const BOUNDS: [(u32, Option<u32>); 9] = [
    (0, None),
    (1, None),
    (0, Some(1)),
    (1, Some(1)),
    (0, Some(0)),
    (2, Some(2)),
    (2, Some(3)),
    (3, None),
    (0, Some(2)),
];

/// A tree of at most `depth` levels. Operators are built directly, so nested
/// concatenations, one-element classes and identity bounds all occur.
pub fn raw_regex<R: Rng>(rng: &mut R, alphabet: &[char], depth: usize) -> RegexAst {
    if depth <= 1 || rng.gen_bool(0.25) {
        return leaf(rng, alphabet);
    }
    match rng.gen_range(0..3) {
        0 => {
            let n = rng.gen_range(2..=3);
            RegexAst::Concat((0..n).map(|_| raw_regex(rng, alphabet, depth - 1)).collect())
        }
        1 => {
            let n = rng.gen_range(2..=3);
            RegexAst::Union((0..n).map(|_| raw_regex(rng, alphabet, depth - 1)).collect())
        }
        _ => {
            let (min, max) = *BOUNDS.choose(rng).unwrap();
            RegexAst::Repeat {
                child: Box::new(raw_regex(rng, alphabet, depth - 1)),
                min,
                max,
            }
        }
    }
}

fn leaf<R: Rng>(rng: &mut R, alphabet: &[char]) -> RegexAst {
    if rng.gen_bool(0.6) {
        let n = rng.gen_range(1..=2);
        RegexAst::Literal((0..n).map(|_| *alphabet.choose(rng).unwrap()).collect())
    } else {
        let k = rng.gen_range(1..=alphabet.len());
        RegexAst::Class(CharSet::from_chars(alphabet.choose_multiple(rng, k).copied()))
    }
}

/// Every string over `alphabet` of length at most `max_len`.
pub fn all_strings(alphabet: &[char], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut frontier = vec![String::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &c in alphabet {
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
