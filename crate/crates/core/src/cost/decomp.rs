use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use serde::Serialize;

use super::{normalize, CostError, DEFAULT_STATE_BUDGET};

/// Shared pieces plus, for every input string, the strictly increasing
/// indices of the pieces whose concatenation spells it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionWitness {
    pub strings: Vec<String>,
    pub pieces: Vec<String>,
    pub maps: Vec<Vec<usize>>,
}

impl DecompositionWitness {
    pub fn cost(&self) -> usize {
        self.pieces.iter().map(|p| p.chars().count()).sum()
    }

    pub fn is_valid(&self) -> bool {
        self.maps.len() == self.strings.len()
            && self.maps.iter().zip(&self.strings).all(|(map, w)| {
                map.windows(2).all(|p| p[0] < p[1])
                    && map.iter().all(|&k| k < self.pieces.len())
                    && map.iter().map(|&k| self.pieces[k].as_str()).collect::<String>() == *w
            })
    }
}

pub fn decomposition_cost<S: AsRef<str>>(
    strings: &[S],
) -> Result<DecompositionWitness, CostError> {
    decomposition_cost_with_budget(strings, DEFAULT_STATE_BUDGET)
}

/// Exact minimum total piece length. Each step emits one piece shared by a
/// non-empty group of strings that all continue with it; among minimum-cost
/// decompositions the one with the fewest pieces wins.
pub fn decomposition_cost_with_budget<S: AsRef<str>>(
    strings: &[S],
    budget: usize,
) -> Result<DecompositionWitness, CostError> {
    let words = normalize(strings);
    let n = words.len();
    let total: usize = words.iter().map(Vec::len).sum();
    let start = vec![0usize; n];
    let goal: Vec<usize> = words.iter().map(Vec::len).collect();

    type Step = (Vec<usize>, usize, usize);
    let mut best: HashMap<Vec<usize>, (usize, usize)> = HashMap::new();
    let mut parent: HashMap<Vec<usize>, Step> = HashMap::new();
    let mut heap = BinaryHeap::new();
    best.insert(start.clone(), (0, 0));
    heap.push(Reverse((0usize, 0usize, start.clone())));
    let mut settled = 0usize;

    while let Some(Reverse((cost, count, pos))) = heap.pop() {
        if best.get(&pos) != Some(&(cost, count)) {
            continue;
        }
        if pos == goal {
            break;
        }
        settled += 1;
        if settled > budget {
            return Err(CostError::BudgetExceeded { best_bound: total });
        }
        let open: Vec<usize> = (0..n).filter(|&i| pos[i] < words[i].len()).collect();
        for mask in 1u32..(1 << open.len()) {
            let group: Vec<usize> = open
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &i)| i)
                .collect();
            let lead = group[0];
            let mut lcp = words[lead].len() - pos[lead];
            for &i in &group[1..] {
                let shared = words[lead][pos[lead]..]
                    .iter()
                    .zip(&words[i][pos[i]..])
                    .take_while(|(a, b)| a == b)
                    .count();
                lcp = lcp.min(shared);
            }
            let mut subset = 0usize;
            for &i in &group {
                subset |= 1 << i;
            }
            for len in 1..=lcp {
                let mut next = pos.clone();
                for &i in &group {
                    next[i] += len;
                }
                let key = (cost + len, count + 1);
                if best.get(&next).is_none_or(|&b| key < b) {
                    best.insert(next.clone(), key);
                    parent.insert(next.clone(), (pos.clone(), subset, len));
                    heap.push(Reverse((key.0, key.1, next)));
                }
            }
        }
    }

    let mut steps = Vec::new();
    let mut cur = goal;
    while let Some((prev, subset, len)) = parent.get(&cur) {
        steps.push((prev.clone(), *subset, *len));
        cur = prev.clone();
    }
    steps.reverse();
    let mut pieces = Vec::new();
    let mut maps = vec![Vec::new(); n];
    for (k, (pos, subset, len)) in steps.into_iter().enumerate() {
        let lead = (0..n).find(|i| subset & (1 << i) != 0).expect("non-empty");
        pieces.push(words[lead][pos[lead]..pos[lead] + len].iter().collect());
        for (i, map) in maps.iter_mut().enumerate() {
            if subset & (1 << i) != 0 {
                map.push(k);
            }
        }
    }
    Ok(DecompositionWitness {
        strings: words.iter().map(|w| w.iter().collect()).collect(),
        pieces,
        maps,
    })
}
