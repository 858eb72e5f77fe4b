//! Cost-ordered bottom-up enumeration with observational equivalence.

use std::collections::{HashMap, HashSet};

use super::fallback::ladder;
use super::strategy::BaseSynthesizer;
use crate::canon::{canonicalize, Mode};
use crate::cost::expression_cost;
use crate::syntax::{serialize, CharSet, RegexAst};

pub const DEFAULT_BASE_BUDGET: usize = 50_000;

/// Longest string length tracked by the language-size estimate.
const SIZE_HORIZON: usize = 20;

/// Largest upper bound for a fitted `{a,b}` repetition.
const FIT_MAX: usize = 10;

/// Smallest number of distinct positives supporting a fitted repetition.
const FIT_MIN_SUPPORT: usize = 4;

/// Base synthesizer enumerating regexes by increasing expression cost.
#[derive(Clone, Copy, Debug)]
pub struct EnumerativeBase {
    pub budget: usize,
}

impl Default for EnumerativeBase {
    fn default() -> Self {
        EnumerativeBase {
            budget: DEFAULT_BASE_BUDGET,
        }
    }
}

impl BaseSynthesizer for EnumerativeBase {
    fn synthesize(&self, positives: &[String], negatives: &[String]) -> Option<RegexAst> {
        enumerative_base(positives, negatives, self.budget)
    }
}

type Bits = Vec<u64>;

fn get(b: &Bits, i: usize) -> bool {
    b[i / 64] & (1 << (i % 64)) != 0
}

fn set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// All substrings of the examples, shortest first, with their two-way splits.
/// The membership of a candidate on these strings determines its membership
/// on every composite built from it.
struct Universe {
    strs: Vec<Vec<char>>,
    splits: Vec<Vec<(usize, usize)>>,
    words: usize,
    positives: Vec<usize>,
    negatives: Vec<usize>,
}

impl Universe {
    fn new(positives: &[String], negatives: &[String]) -> Self {
        let mut all: HashSet<Vec<char>> = HashSet::new();
        for w in positives.iter().chain(negatives) {
            let c: Vec<char> = w.chars().collect();
            for i in 0..=c.len() {
                for j in i..=c.len() {
                    all.insert(c[i..j].to_vec());
                }
            }
        }
        let mut strs: Vec<Vec<char>> = all.into_iter().collect();
        strs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let index: HashMap<&[char], usize> =
            strs.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let splits = strs
            .iter()
            .map(|s| (0..=s.len()).map(|k| (index[&s[..k]], index[&s[k..]])).collect())
            .collect();
        let lookup = |w: &String| index[w.chars().collect::<Vec<_>>().as_slice()];
        Universe {
            words: strs.len().div_ceil(64),
            positives: positives.iter().map(lookup).collect(),
            negatives: negatives.iter().map(lookup).collect(),
            splits,
            strs,
        }
    }

    fn empty(&self) -> Bits {
        vec![0; self.words]
    }

    fn epsilon(&self) -> Bits {
        let mut b = self.empty();
        set(&mut b, 0);
        b
    }

    fn class(&self, set_: CharSet) -> Bits {
        let mut b = self.empty();
        for (i, s) in self.strs.iter().enumerate() {
            if s.len() == 1 && set_.contains(s[0]) {
                set(&mut b, i);
            }
        }
        b
    }

    fn concat(&self, x: &Bits, y: &Bits) -> Bits {
        let mut b = self.empty();
        for (i, sp) in self.splits.iter().enumerate() {
            if sp.iter().any(|&(u, v)| get(x, u) && get(y, v)) {
                set(&mut b, i);
            }
        }
        b
    }

    fn star(&self, x: &Bits) -> Bits {
        let mut b = self.epsilon();
        for i in 1..self.strs.len() {
            if self.splits[i][1..]
                .iter()
                .any(|&(u, v)| get(x, u) && get(&b, v))
            {
                set(&mut b, i);
            }
        }
        b
    }

    fn union(&self, x: &Bits, y: &Bits) -> Bits {
        x.iter().zip(y).map(|(a, b)| a | b).collect()
    }

    fn repeat(&self, x: &Bits, min: usize, max: usize) -> Bits {
        let mut acc = self.epsilon();
        let mut out = self.empty();
        for i in 0..=max {
            if i >= min {
                out = self.union(&out, &acc);
            }
            if i < max {
                acc = self.concat(&acc, x);
            }
        }
        out
    }

    fn consistent(&self, b: &Bits) -> bool {
        self.positives.iter().all(|&i| get(b, i)) && self.negatives.iter().all(|&i| !get(b, i))
    }
}

/// Strings of each length up to the horizon, counted with multiplicity.
type Sizes = [f64; SIZE_HORIZON + 1];

fn size_concat(a: &Sizes, b: &Sizes) -> Sizes {
    let mut out = [0.0; SIZE_HORIZON + 1];
    for i in 0..=SIZE_HORIZON {
        for j in 0..=SIZE_HORIZON - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

fn size_repeat(a: &Sizes, min: usize, max: Option<usize>) -> Sizes {
    let mut acc = [0.0; SIZE_HORIZON + 1];
    acc[0] = 1.0;
    let mut out = [0.0; SIZE_HORIZON + 1];
    let top = max.unwrap_or(SIZE_HORIZON).min(SIZE_HORIZON);
    for i in 0..=top {
        if i >= min {
            for (o, x) in out.iter_mut().zip(&acc) {
                *o += x;
            }
        }
        acc = size_concat(&acc, a);
    }
    out
}

struct Candidate {
    ast: RegexAst,
    sig: Bits,
    sizes: Sizes,
    repeat: bool,
}

/// Orders by estimated total size, then by the per-length counts from the
/// shortest length up (so `X+` precedes `X*` even when totals round equal).
fn size_order(a: &Sizes, b: &Sizes) -> std::cmp::Ordering {
    let (ta, tb): (f64, f64) = (a.iter().sum(), b.iter().sum());
    ta.total_cmp(&tb).then_with(|| {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    })
}

/// Smallest-cost regex consistent with the examples; among equal cost, the
/// smallest estimated language, then the first serialization.
///
/// Building blocks are the fallback ladder classes and the characters of the
/// positives. A block whose positives all lie in it may also be offered with
/// bounds fitted to the observed lengths, when enough distinct positives make
/// an unbounded repetition an unlikely source of that length range.
pub fn enumerative_base(
    positives: &[String],
    negatives: &[String],
    budget: usize,
) -> Option<RegexAst> {
    if positives.is_empty() {
        return None;
    }
    let u = Universe::new(positives, negatives);
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut levels: Vec<Vec<Candidate>> = vec![Vec::new(), Vec::new()];
    let mut work = 0usize;

    let mut blocks: Vec<CharSet> = ladder().to_vec();
    let mut chars: Vec<char> = positives.iter().flat_map(|w| w.chars()).collect();
    chars.sort_unstable();
    chars.dedup();
    blocks.extend(chars.iter().map(|&c| CharSet::single(c)));

    let lens: Vec<usize> = positives.iter().map(|w| w.chars().count()).collect();
    let (lo, hi) = (*lens.iter().min()?, *lens.iter().max()?);
    let fit = fitted_bounds(lo, hi, positives.len());

    let mut fresh: Vec<Candidate> = Vec::new();
    for set_ in blocks {
        let ast = if let Some(c) = set_.single_char() {
            RegexAst::literal(c.to_string())
        } else {
            RegexAst::Class(set_)
        };
        let mut sizes = [0.0; SIZE_HORIZON + 1];
        sizes[1] = set_.len() as f64;
        let atom = Candidate {
            sig: u.class(set_),
            ast,
            sizes,
            repeat: false,
        };
        if let Some((a, b)) = fit {
            if positives.iter().all(|w| w.chars().all(|c| set_.contains(c))) {
                fresh.push(Candidate {
                    ast: RegexAst::repeat(atom.ast.clone(), a as u32, Some(b as u32)),
                    sig: u.repeat(&atom.sig, a, b),
                    sizes: size_repeat(&atom.sizes, a, Some(b)),
                    repeat: true,
                });
            }
        }
        fresh.extend(repeats(&u, &atom));
        fresh.push(atom);
    }
    work += fresh.len();
    if let Some(found) = admit(&u, &mut seen, &mut levels[1], fresh) {
        return Some(finish(found));
    }

    // The union of the positives as literals costs their total length, so a
    // consistent regex, if one exists, appears by then.
    for cost in 2..=positives_total(positives) {
        let mut fresh: Vec<Candidate> = Vec::new();
        for a in 1..cost {
            let b = cost - a;
            if levels.get(b).is_none() {
                continue;
            }
            for (i, x) in levels[a].iter().enumerate() {
                for (j, y) in levels[b].iter().enumerate() {
                    work += 2;
                    if work > budget {
                        return None;
                    }
                    let cat = Candidate {
                        ast: RegexAst::Concat(vec![x.ast.clone(), y.ast.clone()]),
                        sig: u.concat(&x.sig, &y.sig),
                        sizes: size_concat(&x.sizes, &y.sizes),
                        repeat: false,
                    };
                    fresh.extend(repeats(&u, &cat));
                    fresh.push(cat);
                    if (a < b || (a == b && i < j))
                        && !subset(&x.sig, &y.sig)
                        && !subset(&y.sig, &x.sig)
                    {
                        let mut sizes = x.sizes;
                        for (s, t) in sizes.iter_mut().zip(&y.sizes) {
                            *s += t;
                        }
                        let alt = Candidate {
                            ast: RegexAst::Union(vec![x.ast.clone(), y.ast.clone()]),
                            sig: u.union(&x.sig, &y.sig),
                            sizes,
                            repeat: false,
                        };
                        fresh.extend(repeats(&u, &alt));
                        fresh.push(alt);
                    }
                }
            }
        }
        let mut level = Vec::new();
        if let Some(found) = admit(&u, &mut seen, &mut level, fresh) {
            return Some(finish(found));
        }
        levels.push(level);
    }
    None
}

fn positives_total(positives: &[String]) -> usize {
    positives.iter().map(|w| w.chars().count()).sum()
}

/// `X?`, `X*` and `X+` of a non-repetition candidate.
fn repeats(u: &Universe, x: &Candidate) -> Vec<Candidate> {
    if x.repeat {
        return Vec::new();
    }
    let star = u.star(&x.sig);
    vec![
        Candidate {
            ast: RegexAst::optional(x.ast.clone()),
            sig: u.union(&x.sig, &u.epsilon()),
            sizes: size_repeat(&x.sizes, 0, Some(1)),
            repeat: true,
        },
        Candidate {
            ast: RegexAst::plus(x.ast.clone()),
            sig: u.concat(&x.sig, &star),
            sizes: size_repeat(&x.sizes, 1, None),
            repeat: true,
        },
        Candidate {
            ast: RegexAst::star(x.ast.clone()),
            sig: star,
            sizes: size_repeat(&x.sizes, 0, None),
            repeat: true,
        },
    ]
}

/// Bounds `(lo, hi)` for a fitted repetition, if the evidence supports them:
/// the chance that `n` lengths drawn from 1..=20 all land in some window as
/// narrow as the observed one must be at most 5%.
fn fitted_bounds(lo: usize, hi: usize, n: usize) -> Option<(usize, usize)> {
    if hi > FIT_MAX || n < FIT_MIN_SUPPORT {
        return None;
    }
    let w = (hi - lo + 1) as f64;
    let p = (21.0 - w) * (w / 20.0).powi(n as i32);
    (p <= 0.05).then_some((lo, hi))
}

/// Sorts a cost level, drops observationally equivalent candidates and
/// returns the first consistent one.
fn admit(
    u: &Universe,
    seen: &mut HashSet<Bits>,
    level: &mut Vec<Candidate>,
    fresh: Vec<Candidate>,
) -> Option<RegexAst> {
    let mut keyed: Vec<(String, Candidate)> = fresh
        .into_iter()
        .filter(|c| c.sig.iter().any(|&w| w != 0))
        .map(|c| (serialize(&c.ast), c))
        .collect();
    keyed.sort_by(|a, b| size_order(&a.1.sizes, &b.1.sizes).then_with(|| a.0.cmp(&b.0)));
    for (_, c) in keyed {
        if !seen.insert(c.sig.clone()) {
            continue;
        }
        if u.consistent(&c.sig) {
            return Some(c.ast);
        }
        level.push(c);
    }
    None
}

fn finish(ast: RegexAst) -> RegexAst {
    debug_assert!(expression_cost(&ast) >= 1);
    canonicalize(&ast, Mode::Preserving).unwrap_or(ast)
}
