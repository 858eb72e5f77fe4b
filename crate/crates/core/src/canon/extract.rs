use super::rules::{canonicalize, Mode};
use crate::syntax::RegexAst;

/// The expression itself followed by every operator operand, recursively,
/// each re-canonicalized and deduplicated structurally. Empty operands are
/// skipped.
pub fn extract_subregexes(ast: &RegexAst) -> Vec<RegexAst> {
    let mut out: Vec<RegexAst> = Vec::new();
    let mut stack = vec![ast.clone()];
    while let Some(node) = stack.pop() {
        let canonical = canonicalize(&node, Mode::Preserving).unwrap_or(node);
        if canonical != RegexAst::Empty && !out.contains(&canonical) {
            out.push(canonical.clone());
        }
        stack.extend(canonical.children().iter().rev().cloned());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse, serialize};

    fn subs(p: &str) -> Vec<String> {
        let ast = canonicalize(&parse(p).unwrap(), Mode::Full).unwrap();
        extract_subregexes(&ast).iter().map(serialize).collect()
    }

    #[test]
    fn star_of_union() {
        assert_eq!(subs("(a|bc)*"), vec!["(a|bc)*", "a|bc", "a", "bc"]);
    }

    #[test]
    fn atoms_and_duplicates() {
        assert_eq!(subs("a"), vec!["a"]);
        assert_eq!(subs("ab|ab"), vec!["ab"]);
        assert_eq!(subs("\\d+-\\d+"), vec!["\\d+-\\d+", "\\d+", "\\d", "-"]);
    }
}
