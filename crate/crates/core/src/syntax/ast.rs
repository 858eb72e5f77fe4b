use std::fmt;

use super::charset::CharSet;

/// Upper bound of a repetition. `None` is unbounded.
pub type MaxBound = Option<u32>;

/// Abstract syntax tree of a restricted regular expression.
///
/// Exactly six node kinds exist. Raw parse trees may violate the canonical
/// invariants (flat operators, sorted unions, merged literals); see
/// [`crate::canon::canonicalize`] for the normal form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RegexAst {
    /// The empty string.
    Empty,
    /// A non-empty character sequence matched verbatim.
    Literal(String),
    /// Any single character of a non-empty set.
    Class(CharSet),
    /// Two or more children in sequence.
    Concat(Vec<RegexAst>),
    /// Two or more alternatives.
    Union(Vec<RegexAst>),
    Repeat {
        child: Box<RegexAst>,
        min: u32,
        max: MaxBound,
    },
}

/// Root-variant category used by corpus statistics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, serde::Serialize)]
pub enum TopLevel {
    CharClass,
    Concat,
    Repetition,
    Union,
    Atomic,
}

impl fmt::Display for TopLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TopLevel::CharClass => "CharClass",
            TopLevel::Concat => "Concat",
            TopLevel::Repetition => "Repetition",
            TopLevel::Union => "Union",
            TopLevel::Atomic => "Atomic",
        };
        f.write_str(s)
    }
}

impl RegexAst {
    pub fn literal(s: impl Into<String>) -> Self {
        let s = s.into();
        if s.is_empty() {
            RegexAst::Empty
        } else {
            RegexAst::Literal(s)
        }
    }

    pub fn class(set: CharSet) -> Self {
        RegexAst::Class(set)
    }

    pub fn repeat(child: RegexAst, min: u32, max: MaxBound) -> Self {
        RegexAst::Repeat {
            child: Box::new(child),
            min,
            max,
        }
    }

    pub fn star(child: RegexAst) -> Self {
        RegexAst::repeat(child, 0, None)
    }

    pub fn plus(child: RegexAst) -> Self {
        RegexAst::repeat(child, 1, None)
    }

    pub fn optional(child: RegexAst) -> Self {
        RegexAst::repeat(child, 0, Some(1))
    }

    /// Builds a concatenation, collapsing the zero- and one-child cases.
    pub fn concat(mut children: Vec<RegexAst>) -> Self {
        match children.len() {
            0 => RegexAst::Empty,
            1 => children.pop().unwrap(),
            _ => RegexAst::Concat(children),
        }
    }

    /// Builds a union, collapsing the one-child case. Panics on zero children.
    pub fn union(mut children: Vec<RegexAst>) -> Self {
        match children.len() {
            0 => panic!("union of zero alternatives"),
            1 => children.pop().unwrap(),
            _ => RegexAst::Union(children),
        }
    }

    pub fn children(&self) -> &[RegexAst] {
        match self {
            RegexAst::Concat(c) | RegexAst::Union(c) => c,
            RegexAst::Repeat { child, .. } => std::slice::from_ref(child.as_ref()),
            _ => &[],
        }
    }

    pub fn is_atomic(&self) -> bool {
        matches!(
            self,
            RegexAst::Empty | RegexAst::Literal(_) | RegexAst::Class(_)
        )
    }

    pub fn top_level(&self) -> TopLevel {
        match self {
            RegexAst::Class(_) => TopLevel::CharClass,
            RegexAst::Concat(_) => TopLevel::Concat,
            RegexAst::Repeat { .. } => TopLevel::Repetition,
            RegexAst::Union(_) => TopLevel::Union,
            RegexAst::Empty | RegexAst::Literal(_) => TopLevel::Atomic,
        }
    }

    /// True if the language contains the empty string.
    pub fn nullable(&self) -> bool {
        match self {
            RegexAst::Empty => true,
            RegexAst::Literal(_) | RegexAst::Class(_) => false,
            RegexAst::Concat(c) => c.iter().all(RegexAst::nullable),
            RegexAst::Union(c) => c.iter().any(RegexAst::nullable),
            RegexAst::Repeat { child, min, .. } => *min == 0 || child.nullable(),
        }
    }

    /// True if the language is finite.
    pub fn is_finite(&self) -> bool {
        match self {
            RegexAst::Repeat { child, max, .. } => {
                child.is_finite() && (max.is_some() || child.only_empty())
            }
            other => other.children().iter().all(RegexAst::is_finite),
        }
    }

    fn only_empty(&self) -> bool {
        match self {
            RegexAst::Empty => true,
            RegexAst::Literal(_) | RegexAst::Class(_) => false,
            RegexAst::Concat(c) | RegexAst::Union(c) => c.iter().all(RegexAst::only_empty),
            RegexAst::Repeat { child, max, .. } => *max == Some(0) || child.only_empty(),
        }
    }

    /// Applies `f` to every node bottom-up, rebuilding the tree.
    pub fn map_bottom_up(self, f: &mut impl FnMut(RegexAst) -> RegexAst) -> RegexAst {
        let node = match self {
            RegexAst::Concat(c) => {
                RegexAst::Concat(c.into_iter().map(|x| x.map_bottom_up(f)).collect())
            }
            RegexAst::Union(c) => {
                RegexAst::Union(c.into_iter().map(|x| x.map_bottom_up(f)).collect())
            }
            RegexAst::Repeat { child, min, max } => RegexAst::Repeat {
                child: Box::new(child.map_bottom_up(f)),
                min,
                max,
            },
            atom => atom,
        };
        f(node)
    }

    /// Pre-order traversal.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a RegexAst)) {
        f(self);
        for c in self.children() {
            c.walk(f);
        }
    }
}

impl fmt::Display for RegexAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::serialize(self))
    }
}

/// Serialized as its pattern string.
impl serde::Serialize for RegexAst {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::serialize(self))
    }
}
