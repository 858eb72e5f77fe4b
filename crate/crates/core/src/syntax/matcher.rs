//! Full-string membership by Thompson NFA simulation.
//!
//! Interval repetitions are unrolled into counted copies, so matching is
//! linear in the input length for a fixed pattern and never backtracks.

use super::ast::RegexAst;
use super::charset::CharSet;

#[derive(Clone, Debug)]
enum State {
    Char(CharSet, usize),
    Fork(Vec<usize>),
    Match,
}

/// A compiled pattern. Cheap to reuse across many inputs.
#[derive(Clone, Debug)]
pub struct Matcher {
    states: Vec<State>,
    start: usize,
}

impl Matcher {
    pub fn new(ast: &RegexAst) -> Self {
        let mut states = vec![State::Match];
        let start = compile(ast, 0, &mut states);
        Matcher { states, start }
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn is_match(&self, input: &str) -> bool {
        let n = self.states.len();
        let mut current = Vec::with_capacity(n);
        let mut next = Vec::with_capacity(n);
        let mut seen = vec![usize::MAX; n];
        let mut stack = Vec::new();
        self.add(self.start, 0, &mut current, &mut seen, &mut stack);
        for (step, c) in input.chars().enumerate() {
            next.clear();
            for &id in &current {
                if let State::Char(set, to) = &self.states[id] {
                    if set.contains(c) {
                        self.add(*to, step + 1, &mut next, &mut seen, &mut stack);
                    }
                }
            }
            std::mem::swap(&mut current, &mut next);
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|&id| matches!(self.states[id], State::Match))
    }

    fn add(
        &self,
        id: usize,
        generation: usize,
        list: &mut Vec<usize>,
        seen: &mut [usize],
        stack: &mut Vec<usize>,
    ) {
        stack.push(id);
        while let Some(id) = stack.pop() {
            if seen[id] == generation {
                continue;
            }
            seen[id] = generation;
            match &self.states[id] {
                State::Fork(targets) => stack.extend(targets.iter().rev()),
                _ => list.push(id),
            }
        }
    }
}

fn push(states: &mut Vec<State>, s: State) -> usize {
    states.push(s);
    states.len() - 1
}

/// Compiles `ast` so that a successful match continues at `next`.
fn compile(ast: &RegexAst, next: usize, states: &mut Vec<State>) -> usize {
    match ast {
        RegexAst::Empty => next,
        RegexAst::Literal(s) => {
            let mut cur = next;
            for c in s.chars().rev() {
                cur = push(states, State::Char(CharSet::single(c), cur));
            }
            cur
        }
        RegexAst::Class(set) => push(states, State::Char(*set, next)),
        RegexAst::Concat(children) => children
            .iter()
            .rev()
            .fold(next, |cur, child| compile(child, cur, states)),
        RegexAst::Union(children) => {
            let starts = children.iter().map(|c| compile(c, next, states)).collect();
            push(states, State::Fork(starts))
        }
        RegexAst::Repeat { child, min, max } => {
            let mut cur = match max {
                Some(max) => {
                    let mut cur = next;
                    for _ in *min..*max {
                        let body = compile(child, cur, states);
                        cur = push(states, State::Fork(vec![body, next]));
                    }
                    cur
                }
                None => {
                    let head = push(states, State::Fork(Vec::new()));
                    let body = compile(child, head, states);
                    states[head] = State::Fork(vec![body, next]);
                    head
                }
            };
            for _ in 0..*min {
                cur = compile(child, cur, states);
            }
            cur
        }
    }
}

/// Full-match membership test.
pub fn matches(ast: &RegexAst, w: &str) -> bool {
    Matcher::new(ast).is_match(w)
}
