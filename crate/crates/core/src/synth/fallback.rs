use crate::syntax::{CharSet, RegexAst};

use super::engine::consistent;

/// Fallback base classes, most specific first.
pub fn ladder() -> [CharSet; 11] {
    [
        CharSet::digit(),
        CharSet::lower(),
        CharSet::upper(),
        CharSet::lower().union(CharSet::upper()),
        CharSet::digit()
            .union(CharSet::range('a', 'f'))
            .union(CharSet::range('A', 'F')),
        CharSet::word(),
        CharSet::space(),
        CharSet::non_digit(),
        CharSet::non_word(),
        CharSet::non_space(),
        CharSet::sigma(),
    ]
}

/// The 22 fallback patterns in priority order: each base with `+`, then `*`.
pub fn fallback_candidates() -> Vec<RegexAst> {
    ladder()
        .into_iter()
        .flat_map(|c| {
            [
                RegexAst::plus(RegexAst::Class(c)),
                RegexAst::star(RegexAst::Class(c)),
            ]
        })
        .collect()
}

/// The first consistent pattern of the ladder. Earlier patterns are taken to
/// describe smaller languages, so the first hit is also the smallest.
pub fn fallback_synthesize(positives: &[String], negatives: &[String]) -> Option<RegexAst> {
    fallback_candidates()
        .into_iter()
        .find(|h| consistent(h, positives, negatives))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::serialize;

    fn fb(p: &[&str], n: &[&str]) -> Option<String> {
        let p: Vec<String> = p.iter().map(|s| s.to_string()).collect();
        let n: Vec<String> = n.iter().map(|s| s.to_string()).collect();
        fallback_synthesize(&p, &n).map(|r| serialize(&r))
    }

    #[test]
    fn ladder_examples() {
        assert_eq!(fb(&["123", "45"], &["a1"]).as_deref(), Some("\\d+"));
        assert_eq!(fb(&["12", ""], &[]).as_deref(), Some("\\d*"));
        assert_eq!(fb(&["abc", "XYZ"], &["a b"]).as_deref(), Some("[A-Za-z]+"));
        assert_eq!(fb(&["a"], &["a"]), None);
    }

    #[test]
    fn candidate_order() {
        let c: Vec<String> = fallback_candidates().iter().map(serialize).collect();
        assert_eq!(c.len(), 22);
        assert_eq!(&c[..4], &["\\d+", "\\d*", "[a-z]+", "[a-z]*"]);
        assert_eq!(c[21], ".*");
    }
}
