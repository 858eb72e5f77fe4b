use serde::Serialize;

use super::{normalize, CostError, DEFAULT_STATE_BUDGET};

/// A sequence of tuples, one entry per input string; `None` stands for the
/// empty symbol.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Alignment {
    pub strings: Vec<String>,
    pub tuples: Vec<Vec<Option<char>>>,
}

impl Alignment {
    pub fn cost(&self) -> usize {
        self.tuples.len()
    }

    /// The string spelled by the tuples' symbols, a common supersequence.
    pub fn supersequence(&self) -> String {
        self.tuples
            .iter()
            .filter_map(|t| t.iter().flatten().next().copied())
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        let n = self.strings.len();
        let mut rebuilt = vec![String::new(); n];
        for t in &self.tuples {
            if t.len() != n {
                return false;
            }
            let mut symbols = t.iter().flatten();
            let Some(first) = symbols.next() else {
                return false;
            };
            if symbols.any(|c| c != first) {
                return false;
            }
            for (i, e) in t.iter().enumerate() {
                if let Some(c) = e {
                    rebuilt[i].push(*c);
                }
            }
        }
        rebuilt == self.strings
    }
}

pub fn optimal_alignment<S: AsRef<str>>(strings: &[S]) -> Result<Alignment, CostError> {
    optimal_alignment_with_budget(strings, DEFAULT_STATE_BUDGET)
}

/// Exact minimum-length alignment by shortest path over the lattice of
/// position vectors. Among optimal alignments the one spelling the
/// lexicographically smallest supersequence is returned.
pub fn optimal_alignment_with_budget<S: AsRef<str>>(
    strings: &[S],
    budget: usize,
) -> Result<Alignment, CostError> {
    let words = normalize(strings);
    let n = words.len();
    let total: usize = words.iter().map(Vec::len).sum();
    let mut radix = Vec::with_capacity(n);
    let mut states = 1usize;
    for w in &words {
        radix.push(states);
        states = states
            .checked_mul(w.len() + 1)
            .filter(|&s| s <= budget)
            .ok_or(CostError::BudgetExceeded { best_bound: total })?;
    }
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut pos = vec![0; n];
        for i in (0..n).rev() {
            pos[i] = idx / radix[i];
            idx %= radix[i];
        }
        pos
    };
    let transitions = |pos: &[usize]| -> Vec<(char, usize)> {
        let mut symbols: Vec<char> = (0..n)
            .filter(|&i| pos[i] < words[i].len())
            .map(|i| words[i][pos[i]])
            .collect();
        symbols.sort_unstable();
        symbols.dedup();
        let mut out = Vec::new();
        for sigma in symbols {
            let ready: Vec<usize> = (0..n)
                .filter(|&i| pos[i] < words[i].len() && words[i][pos[i]] == sigma)
                .collect();
            for mask in 1u32..(1 << ready.len()) {
                let mut subset = 0usize;
                for (b, &i) in ready.iter().enumerate() {
                    if mask & (1 << b) != 0 {
                        subset |= 1 << i;
                    }
                }
                out.push((sigma, subset));
            }
        }
        out
    };
    let advance = |idx: usize, subset: usize| -> usize {
        (0..n)
            .filter(|i| subset & (1 << i) != 0)
            .map(|i| radix[i])
            .sum::<usize>()
            + idx
    };

    // Every step strictly increases the state index, so a reverse sweep
    // yields exact distances to the goal.
    let goal = states - 1;
    let mut dist = vec![usize::MAX; states];
    dist[goal] = 0;
    for idx in (0..goal).rev() {
        let pos = decode(idx);
        dist[idx] = transitions(&pos)
            .into_iter()
            .map(|(_, s)| dist[advance(idx, s)])
            .min()
            .map_or(usize::MAX, |d| d + 1);
    }

    let mut parent: Vec<Option<(usize, char, usize)>> = vec![None; states];
    let mut frontier = vec![0usize];
    while !frontier.contains(&goal) {
        let d = dist[frontier[0]];
        let dist = &dist;
        let on_path = |idx: usize| -> Vec<(char, usize)> {
            transitions(&decode(idx))
                .into_iter()
                .filter(|&(_, s)| dist[advance(idx, s)] + 1 == d)
                .collect()
        };
        let sigma = frontier
            .iter()
            .flat_map(|&idx| on_path(idx).into_iter().map(|(c, _)| c))
            .min()
            .expect("goal reachable");
        let mut next: Vec<usize> = Vec::new();
        for &idx in &frontier {
            for (c, subset) in on_path(idx) {
                let t = advance(idx, subset);
                if c == sigma && !next.contains(&t) {
                    next.push(t);
                    parent[t] = Some((idx, c, subset));
                }
            }
        }
        frontier = next;
    }

    let mut tuples = Vec::new();
    let mut cur = goal;
    while cur != 0 {
        let (prev, sigma, subset) = parent[cur].expect("parent recorded");
        tuples.push(
            (0..n)
                .map(|i| (subset & (1 << i) != 0).then_some(sigma))
                .collect(),
        );
        cur = prev;
    }
    tuples.reverse();
    Ok(Alignment {
        strings: words.iter().map(|w| w.iter().collect()).collect(),
        tuples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn http_ftps() {
        let a = optimal_alignment(&["http", "ftps"]).unwrap();
        assert_eq!(a.cost(), 6);
        assert!(a.is_valid());
        assert_eq!(a.supersequence(), "fhttps");
    }

    #[test]
    fn three_words() {
        let a = optimal_alignment(&["bat", "cat", "dog"]).unwrap();
        assert_eq!(a.cost(), 7);
        assert!(a.is_valid());
    }

    #[test]
    fn single_and_empty() {
        let a = optimal_alignment(&["hello"]).unwrap();
        assert_eq!(a.cost(), 5);
        assert!(a.is_valid());
        assert_eq!(optimal_alignment::<&str>(&[]).unwrap().cost(), 0);
        assert_eq!(optimal_alignment(&["", "ab"]).unwrap().cost(), 2);
    }

    #[test]
    fn budget() {
        assert_eq!(
            optimal_alignment_with_budget(&["abcd", "efgh"], 10),
            Err(CostError::BudgetExceeded { best_bound: 8 })
        );
    }
}
