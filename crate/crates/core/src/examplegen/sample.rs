use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::GenError;
use crate::syntax::{charset::sigma_chars, Matcher, RegexAst};

/// Cap on the repetition count drawn for any quantifier.
pub const MAX_REPEAT_SAMPLE: u32 = 20;

/// Rejection-sampling attempts per distinct string.
pub const DEFAULT_RETRIES: usize = 200;

/// Wall-clock budget for sampling one regex.
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleOptions {
    pub retries: usize,
    pub timeout: Duration,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions {
            retries: DEFAULT_RETRIES,
            timeout: DEFAULT_TIMEOUT,
        }
    }
}

/// One random member: uniform branch, uniform repetition count in
/// `[min, max(min, min(max, 20))]`, uniform class member.
pub fn sample_one<R: Rng>(ast: &RegexAst, rng: &mut R) -> String {
    let mut out = String::new();
    emit(ast, rng, &mut out);
    out
}

fn emit<R: Rng>(ast: &RegexAst, rng: &mut R, out: &mut String) {
    match ast {
        RegexAst::Empty => {}
        RegexAst::Literal(s) => out.push_str(s),
        RegexAst::Class(set) => {
            let members: Vec<char> = set.iter().collect();
            out.push(*members.choose(rng).expect("class is non-empty"));
        }
        RegexAst::Concat(children) => {
            for c in children {
                emit(c, rng, out);
            }
        }
        RegexAst::Union(branches) => emit(branches.choose(rng).expect("union"), rng, out),
        RegexAst::Repeat { child, min, max } => {
            let hi = max.unwrap_or(u32::MAX).min(MAX_REPEAT_SAMPLE).max(*min);
            for _ in 0..rng.gen_range(*min..=hi) {
                emit(child, rng, out);
            }
        }
    }
}

/// Up to `k` distinct members of the language, in sampling order. For a
/// top-level union the first draws cover one branch each.
pub fn sample_positives(ast: &RegexAst, k: usize, seed: u64) -> Result<Vec<String>, GenError> {
    sample_positives_with(ast, k, seed, SampleOptions::default())
}

pub fn sample_positives_with(
    ast: &RegexAst,
    k: usize,
    seed: u64,
    opts: SampleOptions,
) -> Result<Vec<String>, GenError> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<String> = Vec::new();
    let sources: Vec<&RegexAst> = match ast {
        RegexAst::Union(branches) => branches.iter().take(k).collect(),
        _ => Vec::new(),
    };
    let mut draw = |source: &RegexAst, out: &mut Vec<String>| -> Result<bool, GenError> {
        for _ in 0..opts.retries {
            if start.elapsed() > opts.timeout {
                return Err(GenError::Timeout(opts.timeout));
            }
            let s = sample_one(source, &mut rng);
            if !out.contains(&s) {
                out.push(s);
                return Ok(true);
            }
        }
        Ok(false)
    };
    for b in sources {
        draw(b, &mut out)?;
    }
    while out.len() < k {
        if !draw(ast, &mut out)? {
            break;
        }
    }
    if out.len() < 2 {
        return Err(GenError::InsufficientLanguage { found: out.len() });
    }
    Ok(out)
}

/// Hard negatives plus the number of requested strings that could not be
/// produced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NegativeSample {
    pub strings: Vec<String>,
    pub shortfall: usize,
}

/// Up to `k` distinct strings at edit distance exactly 1 from some positive
/// and rejected by `ast`. Strings in `exclude` are never returned.
pub fn mutate_negatives(
    ast: &RegexAst,
    positives: &[String],
    k: usize,
    seed: u64,
    exclude: &[String],
) -> NegativeSample {
    let matcher = Matcher::new(ast);
    let sigma: Vec<char> = sigma_chars().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<String> = Vec::new();
    if positives.is_empty() {
        return NegativeSample {
            strings: out,
            shortfall: k,
        };
    }
    for _ in 0..k.saturating_mul(DEFAULT_RETRIES) {
        if out.len() >= k {
            break;
        }
        let src: Vec<char> = positives.choose(&mut rng).expect("non-empty").chars().collect();
        let mut cand = src.clone();
        match rng.gen_range(0..3) {
            0 => {
                let at = rng.gen_range(0..=src.len());
                cand.insert(at, *sigma.choose(&mut rng).expect("alphabet"));
            }
            1 if !src.is_empty() => {
                cand.remove(rng.gen_range(0..src.len()));
            }
            2 if !src.is_empty() => {
                let at = rng.gen_range(0..src.len());
                cand[at] = *sigma.choose(&mut rng).expect("alphabet");
                if cand[at] == src[at] {
                    continue;
                }
            }
            _ => continue,
        }
        let cand: String = cand.into_iter().collect();
        if matcher.is_match(&cand)
            || out.contains(&cand)
            || exclude.contains(&cand)
            || positives.contains(&cand)
        {
            continue;
        }
        out.push(cand);
    }
    NegativeSample {
        shortfall: k - out.len(),
        strings: out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{matches, parse};

    #[test]
    fn union_branches_covered() {
        let ast = parse("(I{2,10}|V{2,10})[A-Z]{3,4}").unwrap();
        let p = sample_positives(&ast, 4, 3).unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.iter().all(|w| matches(&ast, w)));

        let top = crate::canon::canonicalize(&parse("I{2,10}[A-Z]{3,4}|V{2,10}[A-Z]{3,4}").unwrap(), crate::canon::Mode::Full).unwrap();
        let p = sample_positives(&top, 4, 3).unwrap();
        assert!(p.iter().any(|w| w.starts_with("II")));
        assert!(p.iter().any(|w| w.starts_with("VV")));
    }

    #[test]
    fn singleton_language() {
        assert_eq!(
            sample_positives(&RegexAst::literal("a"), 2, 0),
            Err(GenError::InsufficientLanguage { found: 1 })
        );
    }

    #[test]
    fn star_bounded() {
        let ast = parse("a*").unwrap();
        let p = sample_positives(&ast, 3, 9).unwrap();
        assert_eq!(p.len(), 3);
        assert!(p.iter().all(|w| matches(&ast, w) && w.len() <= 20));
    }

    #[test]
    fn dot_star_has_no_negatives() {
        let ast = parse(".*").unwrap();
        let n = mutate_negatives(&ast, &["a".to_string()], 5, 0, &[]);
        assert!(n.strings.is_empty());
        assert_eq!(n.shortfall, 5);
    }

    #[test]
    fn digit_negatives() {
        let ast = parse("\\d").unwrap();
        let n = mutate_negatives(&ast, &["5".to_string()], 3, 4, &[]);
        assert_eq!(n.strings.len(), 3);
        for s in &n.strings {
            assert!(!matches(&ast, s));
            assert_ne!(s, "5");
            assert!(s.chars().count() <= 2);
        }
    }
}
