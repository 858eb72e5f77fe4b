use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::normalize;
use crate::syntax::RegexAst;

pub const DEFAULT_LANG_BUDGET: usize = 2_000_000;

/// Outcome of the finite-language expression search. `cost` is `None` when
/// the budget ran out before the minimum was certified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LanguageCost {
    pub cost: Option<usize>,
    pub best_bound: usize,
    pub witness: Option<RegexAst>,
}

enum Build {
    Ast(RegexAst),
    Concat((usize, usize), (usize, usize)),
    Union((usize, usize), (usize, usize)),
    Optional(usize),
}

fn build(fresh: &[(u128, Build)], k: usize, levels: &[Vec<Candidate>]) -> RegexAst {
    let get = |(c, i): (usize, usize)| levels[c][i].ast.clone();
    match &fresh[k].1 {
        Build::Ast(a) => a.clone(),
        Build::Concat(x, y) => RegexAst::concat(vec![get(*x), get(*y)]),
        Build::Union(x, y) => RegexAst::union(vec![get(*x), get(*y)]),
        Build::Optional(j) => RegexAst::optional(build(fresh, *j, levels)),
    }
}

fn bits(mut p: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (p != 0).then(|| {
            let i = p.trailing_zeros() as usize;
            p &= p - 1;
            i
        })
    })
}

struct Candidate {
    profile: u128,
    ast: RegexAst,
}

/// Minimum expression cost over regexes built from literals, concatenation,
/// union and option whose language contains every string of `strings`.
///
/// Candidates are abstracted to the set of substrings of the input they
/// accept. That abstraction is compositional for all three operators and
/// monotone, so a profile covered by an equal-or-cheaper one is dropped.
/// Levels are generated in increasing cost and the first profile covering
/// the input certifies the minimum.
pub fn language_expression_cost<S: AsRef<str>>(strings: &[S], budget: usize) -> LanguageCost {
    let words = normalize(strings);
    let total: usize = words.iter().map(Vec::len).sum();
    if words.is_empty() {
        return LanguageCost {
            cost: Some(0),
            best_bound: 0,
            witness: Some(RegexAst::Empty),
        };
    }
    let unknown = LanguageCost {
        cost: None,
        best_bound: total,
        witness: Some(RegexAst::union(
            words
                .iter()
                .map(|w| RegexAst::literal(w.iter().collect::<String>()))
                .collect(),
        )),
    };

    let mut subs: Vec<Vec<char>> = vec![Vec::new()];
    let mut index: HashMap<Vec<char>, usize> = HashMap::from([(Vec::new(), 0)]);
    for w in &words {
        for i in 0..w.len() {
            for j in i + 1..=w.len() {
                let s = w[i..j].to_vec();
                if !index.contains_key(&s) {
                    index.insert(s.clone(), subs.len());
                    subs.push(s);
                }
            }
        }
    }
    if subs.len() > 128 {
        return unknown;
    }
    let join: Vec<Vec<Option<usize>>> = subs
        .iter()
        .map(|u| {
            subs.iter()
                .map(|v| index.get(&[u.as_slice(), v.as_slice()].concat()).copied())
                .collect()
        })
        .collect();
    let goal: u128 = words.iter().map(|w| 1u128 << index[w]).fold(0, |a, b| a | b);
    let concat = |a: u128, b: u128| -> u128 {
        let mut out = 0u128;
        for u in bits(a) {
            for v in bits(b) {
                if let Some(k) = join[u][v] {
                    out |= 1u128 << k;
                }
            }
        }
        out
    };

    let mut kept: Vec<u128> = Vec::new();
    let mut seen: HashSet<u128> = HashSet::new();
    let mut levels: Vec<Vec<Candidate>> = Vec::new();
    let mut work = 0usize;

    for cost in 0..=total {
        let mut fresh: Vec<(u128, Build)> = Vec::new();
        if cost == 0 {
            fresh.push((1, Build::Ast(RegexAst::Empty)));
        } else if cost == 1 {
            for (i, s) in subs.iter().enumerate() {
                if s.len() == 1 {
                    fresh.push((1u128 << i, Build::Ast(RegexAst::literal(s[0].to_string()))));
                }
            }
        } else {
            for a in 1..cost {
                let b = cost - a;
                for (i, x) in levels[a].iter().enumerate() {
                    for (j, y) in levels[b].iter().enumerate() {
                        work += 1;
                        if work > budget {
                            return unknown;
                        }
                        fresh.push((concat(x.profile, y.profile), Build::Concat((a, i), (b, j))));
                        if a < b || (a == b && i < j) {
                            fresh.push((x.profile | y.profile, Build::Union((a, i), (b, j))));
                        }
                    }
                }
            }
        }
        let optional: Vec<(u128, Build)> = (0..fresh.len())
            .filter(|&k| fresh[k].0 & 1 == 0)
            .map(|k| (fresh[k].0 | 1, Build::Optional(k)))
            .collect();
        fresh.extend(optional);

        let mut level: Vec<Candidate> = Vec::new();
        for k in 0..fresh.len() {
            let profile = fresh[k].0;
            if !seen.insert(profile) || kept.iter().any(|&q| q & profile == profile) {
                continue;
            }
            let ast = build(&fresh, k, &levels);
            if profile & goal == goal {
                return LanguageCost {
                    cost: Some(cost),
                    best_bound: cost,
                    witness: Some(ast),
                };
            }
            kept.push(profile);
            level.push(Candidate { profile, ast });
        }
        levels.push(level);
    }
    unknown
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::expression_cost;
    use crate::syntax::matches;

    fn lc(s: &[&str]) -> LanguageCost {
        language_expression_cost(s, DEFAULT_LANG_BUDGET)
    }

    #[test]
    fn known_costs() {
        assert_eq!(lc(&["a"]).cost, Some(1));
        assert_eq!(lc(&["apple", "apply"]).cost, Some(6));
        assert_eq!(lc(&["bat", "cat", "dog"]).cost, Some(7));
        assert_eq!(lc(&[""]).cost, Some(0));
    }

    #[test]
    fn witness_is_sound() {
        for s in [&["bat", "cat", "dog"][..], &["ab", "ba", "a"], &["abc", "ac"]] {
            let r = lc(s);
            let w = r.witness.unwrap();
            assert_eq!(expression_cost(&w), r.cost.unwrap());
            assert!(w.is_finite());
            assert!(s.iter().all(|x| matches(&w, x)));
        }
    }

    #[test]
    fn exhausted_budget_is_unknown() {
        let r = language_expression_cost(&["abcd", "dcba", "bdca"], 10);
        assert_eq!(r.cost, None);
        assert_eq!(r.best_bound, 12);
    }
}
