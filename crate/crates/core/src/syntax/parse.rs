//! Recursive-descent parser for the restricted regex dialect.
//!
//! Accepted syntax: alternation `|`, groups `(...)`, `(?:...)` and named
//! groups, bracket classes with ranges and negation, the named classes
//! `\d \w \s \D \W \S .`, the quantifiers `* + ? {m} {m,} {,n} {m,n}` with
//! optional lazy (`?`) or possessive (`+`) suffixes, and backslash escapes.
//!
//! A few normalizations happen here because the AST has no node to carry
//! them: negated classes are complemented over the alphabet, `^ $ \A \Z`
//! anchors are dropped (full-match semantics), lazy and possessive
//! quantifiers collapse to their greedy form, and `.` is the whole alphabet.

use thiserror::Error;

use super::ast::RegexAst;
use super::charset::{in_sigma, is_token, CharSet};

/// Largest accepted repetition bound.
pub const MAX_BOUND: u32 = 1000;

/// Constructs outside the supported regular fragment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Feature {
    Lookaround,
    Backreference,
    /// A character (literal or escaped) outside the alphabet.
    OutsideAlphabet,
    WordBoundary,
    InlineFlags,
}

impl std::fmt::Display for Feature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Feature::Lookaround => "lookaround assertion",
            Feature::Backreference => "backreference",
            Feature::OutsideAlphabet => "character outside the alphabet",
            Feature::WordBoundary => "word boundary assertion",
            Feature::InlineFlags => "inline flag group",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {position}: {reason}")]
    Syntax { position: usize, reason: String },
    #[error("unsupported {feature} at {position}")]
    Unsupported { position: usize, feature: Feature },
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ParseOptions {
    /// Accept anonymization token codes as literal characters.
    pub allow_tokens: bool,
}

/// Parses `pattern` with default options.
pub fn parse(pattern: &str) -> Result<RegexAst, ParseError> {
    parse_with(pattern, ParseOptions::default())
}

pub fn parse_with(pattern: &str, options: ParseOptions) -> Result<RegexAst, ParseError> {
    let mut p = Parser {
        chars: pattern.chars().collect(),
        pos: 0,
        options,
    };
    let ast = p.parse_union()?;
    if p.pos < p.chars.len() {
        return Err(p.syntax("unbalanced parenthesis"));
    }
    Ok(ast)
}

enum Atom {
    /// A single character; adjacent ones merge into one literal.
    Char(char),
    Node(RegexAst),
    /// Zero-width anchor, dropped.
    Anchor,
}

enum ClassItem {
    Char(char),
    Set(CharSet),
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    options: ParseOptions,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn looking_at(&self, s: &str) -> bool {
        s.chars().enumerate().all(|(i, c)| self.peek_at(i) == Some(c))
    }

    fn syntax(&self, reason: &str) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            reason: reason.to_string(),
        }
    }

    fn unsupported(&self, position: usize, feature: Feature) -> ParseError {
        ParseError::Unsupported { position, feature }
    }

    fn check_char(&self, c: char, position: usize) -> Result<char, ParseError> {
        if in_sigma(c) || (self.options.allow_tokens && is_token(c)) {
            Ok(c)
        } else {
            Err(self.unsupported(position, Feature::OutsideAlphabet))
        }
    }

    fn parse_union(&mut self) -> Result<RegexAst, ParseError> {
        let mut alternatives = vec![self.parse_concat()?];
        while self.eat('|') {
            alternatives.push(self.parse_concat()?);
        }
        Ok(RegexAst::union(alternatives))
    }

    fn parse_concat(&mut self) -> Result<RegexAst, ParseError> {
        let mut items: Vec<RegexAst> = Vec::new();
        let mut pending = String::new();
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            let start = self.pos;
            let atom = self.parse_atom()?;
            let quantifier = self.parse_quantifier()?;
            match (atom, quantifier) {
                (Atom::Anchor, Some(_)) => {
                    return Err(ParseError::Syntax {
                        position: start,
                        reason: "nothing to repeat".into(),
                    })
                }
                (Atom::Anchor, None) => {}
                (Atom::Char(ch), None) => pending.push(ch),
                (atom, quantifier) => {
                    if !pending.is_empty() {
                        items.push(RegexAst::Literal(std::mem::take(&mut pending)));
                    }
                    let node = match atom {
                        Atom::Char(ch) => RegexAst::Literal(ch.to_string()),
                        Atom::Node(n) => n,
                        Atom::Anchor => unreachable!(),
                    };
                    items.push(match quantifier {
                        Some((min, max)) => RegexAst::repeat(node, min, max),
                        None => node,
                    });
                }
            }
        }
        if !pending.is_empty() {
            items.push(RegexAst::Literal(pending));
        }
        Ok(RegexAst::concat(items))
    }

    fn parse_atom(&mut self) -> Result<Atom, ParseError> {
        let start = self.pos;
        let c = self.bump().expect("parse_atom at end of input");
        match c {
            '(' => self.parse_group(start).map(Atom::Node),
            '[' => self.parse_class().map(|s| Atom::Node(RegexAst::Class(s))),
            '.' => Ok(Atom::Node(RegexAst::Class(CharSet::sigma()))),
            '^' | '$' => Ok(Atom::Anchor),
            '\\' => self.parse_escape(start),
            '*' | '+' | '?' => Err(ParseError::Syntax {
                position: start,
                reason: "nothing to repeat".into(),
            }),
            '{' => {
                self.pos = start;
                if self.try_bounds()?.is_some() {
                    self.pos = start;
                    return Err(self.syntax("nothing to repeat"));
                }
                self.pos = start + 1;
                Ok(Atom::Char('{'))
            }
            other => self.check_char(other, start).map(Atom::Char),
        }
    }

    fn parse_group(&mut self, start: usize) -> Result<RegexAst, ParseError> {
        if self.eat('?') {
            if self.looking_at("=") || self.looking_at("!") || self.looking_at("<=")
                || self.looking_at("<!")
            {
                return Err(self.unsupported(start, Feature::Lookaround));
            }
            if self.looking_at("P=") {
                return Err(self.unsupported(start, Feature::Backreference));
            }
            if self.eat(':') {
                // non-capturing
            } else if self.looking_at("P<") || self.looking_at("<") {
                if self.peek() == Some('P') {
                    self.pos += 1;
                }
                self.pos += 1;
                let mut name_len = 0;
                while let Some(c) = self.peek() {
                    if c == '>' {
                        break;
                    }
                    if !(c.is_ascii_alphanumeric() || c == '_') {
                        return Err(self.syntax("bad character in group name"));
                    }
                    name_len += 1;
                    self.pos += 1;
                }
                if name_len == 0 || !self.eat('>') {
                    return Err(self.syntax("missing group name"));
                }
            } else {
                return Err(self.unsupported(start, Feature::InlineFlags));
            }
        }
        let inner = self.parse_union()?;
        if !self.eat(')') {
            return Err(ParseError::Syntax {
                position: start,
                reason: "missing ), unterminated subpattern".into(),
            });
        }
        Ok(inner)
    }

    fn parse_escape(&mut self, start: usize) -> Result<Atom, ParseError> {
        let Some(c) = self.bump() else {
            return Err(self.syntax("bad escape (end of pattern)"));
        };
        let set = match c {
            'd' => Some(CharSet::digit()),
            'w' => Some(CharSet::word()),
            's' => Some(CharSet::space()),
            'D' => Some(CharSet::non_digit()),
            'W' => Some(CharSet::non_word()),
            'S' => Some(CharSet::non_space()),
            _ => None,
        };
        if let Some(set) = set {
            return Ok(Atom::Node(RegexAst::Class(set)));
        }
        match c {
            'A' | 'Z' => Ok(Atom::Anchor),
            'b' | 'B' => Err(self.unsupported(start, Feature::WordBoundary)),
            '1'..='9' => Err(self.unsupported(start, Feature::Backreference)),
            _ => self.escaped_char(c, start).map(Atom::Char),
        }
    }

    /// Single-character escapes shared by both contexts.
    fn escaped_char(&mut self, c: char, start: usize) -> Result<char, ParseError> {
        let ch = match c {
            't' => '\t',
            'n' => '\n',
            'r' => '\r',
            'f' => '\x0c',
            'v' => '\x0b',
            'a' => '\x07',
            '0' => '\0',
            'x' => self.hex_digits(2)?,
            'u' => self.hex_digits(4)?,
            c if c.is_ascii_alphanumeric() => {
                return Err(ParseError::Syntax {
                    position: start,
                    reason: format!("bad escape \\{c}"),
                })
            }
            c => c,
        };
        self.check_char(ch, start)
    }

    fn hex_digits(&mut self, n: usize) -> Result<char, ParseError> {
        let mut code = 0u32;
        for _ in 0..n {
            let d = self
                .bump()
                .and_then(|c| c.to_digit(16))
                .ok_or_else(|| self.syntax("incomplete hex escape"))?;
            code = code * 16 + d;
        }
        char::from_u32(code).ok_or_else(|| self.syntax("invalid code point"))
    }

    fn parse_class(&mut self) -> Result<CharSet, ParseError> {
        let open = self.pos - 1;
        let negated = self.eat('^');
        let mut set = CharSet::empty();
        let mut first = true;
        loop {
            let Some(c) = self.peek() else {
                return Err(ParseError::Syntax {
                    position: open,
                    reason: "unterminated character set".into(),
                });
            };
            if c == ']' && !first {
                self.pos += 1;
                break;
            }
            first = false;
            let item_start = self.pos;
            let item = self.parse_class_item()?;
            match item {
                ClassItem::Set(s) => set = set.union(s),
                ClassItem::Char(lo) => {
                    if self.peek() == Some('-')
                        && self.peek_at(1).is_some()
                        && self.peek_at(1) != Some(']')
                    {
                        self.pos += 1;
                        match self.parse_class_item()? {
                            ClassItem::Char(hi) => {
                                if hi < lo {
                                    return Err(ParseError::Syntax {
                                        position: item_start,
                                        reason: "bad character range".into(),
                                    });
                                }
                                for code in lo as u32..=hi as u32 {
                                    let ch = char::from_u32(code).unwrap();
                                    if in_sigma(ch) || (self.options.allow_tokens && is_token(ch))
                                    {
                                        set.insert(ch);
                                    }
                                }
                            }
                            ClassItem::Set(_) => {
                                return Err(ParseError::Syntax {
                                    position: item_start,
                                    reason: "bad character range".into(),
                                })
                            }
                        }
                    } else {
                        set.insert(lo);
                    }
                }
            }
        }
        if negated {
            set = set.complement();
        }
        if set.is_empty() {
            return Err(ParseError::Syntax {
                position: open,
                reason: "empty character class".into(),
            });
        }
        Ok(set)
    }

    fn parse_class_item(&mut self) -> Result<ClassItem, ParseError> {
        let start = self.pos;
        let c = self.bump().ok_or_else(|| self.syntax("unterminated character set"))?;
        if c != '\\' {
            return self.check_char(c, start).map(ClassItem::Char);
        }
        let Some(e) = self.bump() else {
            return Err(self.syntax("bad escape (end of pattern)"));
        };
        let set = match e {
            'd' => CharSet::digit(),
            'w' => CharSet::word(),
            's' => CharSet::space(),
            'D' => CharSet::non_digit(),
            'W' => CharSet::non_word(),
            'S' => CharSet::non_space(),
            'b' => return Err(self.unsupported(start, Feature::OutsideAlphabet)),
            '1'..='9' => return Err(self.unsupported(start, Feature::OutsideAlphabet)),
            other => return self.escaped_char(other, start).map(ClassItem::Char),
        };
        Ok(ClassItem::Set(set))
    }

    fn parse_number(&mut self) -> Option<u64> {
        let mut value: Option<u64> = None;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = Some(value.unwrap_or(0).saturating_mul(10).saturating_add(d as u64));
            self.pos += 1;
        }
        value
    }

    /// Attempts `{m}`, `{m,}`, `{,n}` or `{m,n}` at the cursor. On a
    /// non-match the cursor is left unspecified and `Ok(None)` returned.
    fn try_bounds(&mut self) -> Result<Option<(u32, Option<u32>)>, ParseError> {
        let start = self.pos;
        if !self.eat('{') {
            return Ok(None);
        }
        let min = self.parse_number();
        let (min, max) = if self.eat(',') {
            let max = self.parse_number();
            (min.unwrap_or(0), max)
        } else {
            match min {
                Some(m) => (m, Some(m)),
                None => return Ok(None),
            }
        };
        if !self.eat('}') {
            return Ok(None);
        }
        if min > MAX_BOUND as u64 || max.is_some_and(|m| m > MAX_BOUND as u64) {
            return Err(ParseError::Syntax {
                position: start,
                reason: format!("repetition bound exceeds {MAX_BOUND}"),
            });
        }
        if let Some(max) = max {
            if max < min {
                return Err(ParseError::Syntax {
                    position: start,
                    reason: "min repeat greater than max repeat".into(),
                });
            }
        }
        Ok(Some((min as u32, max.map(|m| m as u32))))
    }

    fn parse_quantifier(&mut self) -> Result<Option<(u32, Option<u32>)>, ParseError> {
        let bounds = self.one_quantifier()?;
        if bounds.is_some() {
            // lazy or possessive suffix: same language
            if !self.eat('?') {
                self.eat('+');
            }
            let before = self.pos;
            if self.one_quantifier()?.is_some() {
                return Err(ParseError::Syntax {
                    position: before,
                    reason: "multiple repeat".into(),
                });
            }
            self.pos = before;
        }
        Ok(bounds)
    }

    fn one_quantifier(&mut self) -> Result<Option<(u32, Option<u32>)>, ParseError> {
        match self.peek() {
            Some('*') => {
                self.pos += 1;
                Ok(Some((0, None)))
            }
            Some('+') => {
                self.pos += 1;
                Ok(Some((1, None)))
            }
            Some('?') => {
                self.pos += 1;
                Ok(Some((0, Some(1))))
            }
            Some('{') => {
                let start = self.pos;
                match self.try_bounds()? {
                    Some(b) => Ok(Some(b)),
                    None => {
                        self.pos = start;
                        Ok(None)
                    }
                }
            }
            _ => Ok(None),
        }
    }
}
