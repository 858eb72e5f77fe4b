//! Brute-force enumeration of bounded-length language members.
//!
//! This deliberately shares nothing with [`super::matcher`], so the two can
//! check each other.

use std::collections::BTreeSet;

use super::ast::RegexAst;

/// Result of [`enumerate_language`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub strings: BTreeSet<String>,
    /// Some intermediate set exceeded the cap and was truncated, so
    /// `strings` may be missing members.
    pub overflow: bool,
}

/// All members of `L(ast)` of length at most `max_len`, capped at `cap`
/// strings per intermediate set.
pub fn enumerate_language(ast: &RegexAst, max_len: usize, cap: usize) -> Enumeration {
    let mut e = Enumerator {
        max_len,
        cap,
        overflow: false,
    };
    let strings = e.go(ast);
    Enumeration {
        strings,
        overflow: e.overflow,
    }
}

struct Enumerator {
    max_len: usize,
    cap: usize,
    overflow: bool,
}

impl Enumerator {
    fn clip(&mut self, mut set: BTreeSet<String>) -> BTreeSet<String> {
        if set.len() > self.cap {
            self.overflow = true;
            while set.len() > self.cap {
                set.pop_last();
            }
        }
        set
    }

    fn product(&mut self, left: &BTreeSet<String>, right: &BTreeSet<String>) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for a in left {
            let room = self.max_len - a.chars().count();
            for b in right {
                if b.chars().count() <= room {
                    out.insert(format!("{a}{b}"));
                }
            }
            if out.len() > self.cap {
                break;
            }
        }
        self.clip(out)
    }

    fn go(&mut self, ast: &RegexAst) -> BTreeSet<String> {
        match ast {
            RegexAst::Empty => BTreeSet::from([String::new()]),
            RegexAst::Literal(s) => {
                if s.chars().count() <= self.max_len {
                    BTreeSet::from([s.clone()])
                } else {
                    BTreeSet::new()
                }
            }
            RegexAst::Class(set) => {
                if self.max_len == 0 {
                    BTreeSet::new()
                } else {
                    let out = set.iter().map(String::from).collect();
                    self.clip(out)
                }
            }
            RegexAst::Concat(children) => {
                let mut acc = BTreeSet::from([String::new()]);
                for child in children {
                    let part = self.go(child);
                    acc = self.product(&acc, &part);
                    if acc.is_empty() {
                        break;
                    }
                }
                acc
            }
            RegexAst::Union(children) => {
                let mut out = BTreeSet::new();
                for child in children {
                    out.extend(self.go(child));
                }
                self.clip(out)
            }
            RegexAst::Repeat { child, min, max } => {
                let base = self.go(child);
                let mut out = BTreeSet::new();
                let mut power = BTreeSet::from([String::new()]);
                if *min == 0 {
                    out.insert(String::new());
                }
                let mut k: u32 = 0;
                loop {
                    if max.is_some_and(|m| k >= m) {
                        break;
                    }
                    let next = self.product(&power, &base);
                    k += 1;
                    let stable = next == power;
                    power = next;
                    if k >= *min || stable {
                        out.extend(power.iter().cloned());
                    }
                    if power.is_empty() || stable {
                        break;
                    }
                }
                self.clip(out)
            }
        }
    }
}
