//! The fixed symbol universe and 7-bit character sets over it.
//!
//! The alphabet is printable ASCII (`0x20..=0x7e`) plus tab, line feed,
//! carriage return and form feed. Vertical tab is deliberately absent, so
//! `\s` never matches it. Anonymization tokens (see
//! [`crate::canon::anonymize`]) live in the non-printable code ranges and are
//! representable in a [`CharSet`], but they are never members of
//! [`CharSet::sigma`].

use std::fmt;

/// Codes usable as anonymization tokens: `[3, 8] ∪ [14, 31] ∪ {127}`.
pub const TOKEN_CODES: [u8; 25] = [
    3, 4, 5, 6, 7, 8, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 127,
];

/// Returns true if `c` belongs to the supported alphabet.
pub fn in_sigma(c: char) -> bool {
    matches!(c, '\t' | '\n' | '\x0c' | '\r' | ' '..='~')
}

/// Returns true if `c` is one of the anonymization token codes.
pub fn is_token(c: char) -> bool {
    (c as u32) < 128 && TOKEN_CODES.contains(&(c as u8))
}

/// All members of the alphabet in code order.
pub fn sigma_chars() -> impl Iterator<Item = char> {
    CharSet::sigma().iter()
}

/// A set of 7-bit characters stored as a 128-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CharSet(u128);

/// Named classes recognized by the parser and preferred by the serializer.
/// The order is the serializer's lookup order.
pub const NAMED_CLASSES: [(&str, fn() -> CharSet); 7] = [
    (".", CharSet::sigma),
    ("\\d", CharSet::digit),
    ("\\w", CharSet::word),
    ("\\s", CharSet::space),
    ("\\D", CharSet::non_digit),
    ("\\W", CharSet::non_word),
    ("\\S", CharSet::non_space),
];

impl CharSet {
    pub const fn empty() -> Self {
        CharSet(0)
    }

    pub fn single(c: char) -> Self {
        let mut s = CharSet::empty();
        s.insert(c);
        s
    }

    /// Inclusive range; both ends must be 7-bit.
    pub fn range(lo: char, hi: char) -> Self {
        let mut s = CharSet::empty();
        for code in lo as u32..=hi as u32 {
            s.insert(char::from_u32(code).unwrap());
        }
        s
    }

    pub fn from_chars<I: IntoIterator<Item = char>>(chars: I) -> Self {
        let mut s = CharSet::empty();
        for c in chars {
            s.insert(c);
        }
        s
    }

    pub fn sigma() -> Self {
        let mut s = CharSet::range(' ', '~');
        for c in ['\t', '\n', '\x0c', '\r'] {
            s.insert(c);
        }
        s
    }

    pub fn digit() -> Self {
        CharSet::range('0', '9')
    }

    pub fn lower() -> Self {
        CharSet::range('a', 'z')
    }

    pub fn upper() -> Self {
        CharSet::range('A', 'Z')
    }

    pub fn word() -> Self {
        CharSet::digit()
            .union(CharSet::lower())
            .union(CharSet::upper())
            .union(CharSet::single('_'))
    }

    pub fn space() -> Self {
        CharSet::from_chars([' ', '\t', '\n', '\r', '\x0c'])
    }

    pub fn non_digit() -> Self {
        CharSet::digit().complement()
    }

    pub fn non_word() -> Self {
        CharSet::word().complement()
    }

    pub fn non_space() -> Self {
        CharSet::space().complement()
    }

    /// Panics if `c` is not a 7-bit character.
    pub fn insert(&mut self, c: char) {
        let code = c as u32;
        assert!(code < 128, "character {c:?} outside 7-bit range");
        self.0 |= 1u128 << code;
    }

    pub fn contains(&self, c: char) -> bool {
        let code = c as u32;
        code < 128 && self.0 & (1u128 << code) != 0
    }

    pub fn union(self, other: CharSet) -> CharSet {
        CharSet(self.0 | other.0)
    }

    pub fn intersection(self, other: CharSet) -> CharSet {
        CharSet(self.0 & other.0)
    }

    /// Complement relative to the alphabet.
    pub fn complement(self) -> CharSet {
        CharSet(!self.0 & CharSet::sigma().0)
    }

    pub fn is_subset(&self, other: &CharSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    /// The only member, if the set has exactly one.
    pub fn single_char(&self) -> Option<char> {
        if self.len() == 1 {
            char::from_u32(self.0.trailing_zeros())
        } else {
            None
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = char> + use<> {
        let bits = self.0;
        (0u32..128)
            .filter(move |i| bits & (1u128 << i) != 0)
            .map(|i| char::from_u32(i).unwrap())
    }

    /// Name of the predefined class equal to this set, if any.
    pub fn named(&self) -> Option<&'static str> {
        NAMED_CLASSES
            .iter()
            .find(|(_, f)| f() == *self)
            .map(|(name, _)| *name)
    }
}

impl fmt::Debug for CharSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharSet(")?;
        f.debug_list().entries(self.iter()).finish()?;
        write!(f, ")")
    }
}
