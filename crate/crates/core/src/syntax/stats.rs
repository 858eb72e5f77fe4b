use serde::Serialize;

use super::ast::{RegexAst, TopLevel};

/// Structural size measures of one AST.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AstStats {
    /// Nesting levels; an atomic node has depth 1.
    pub depth: usize,
    pub node_count: usize,
    pub union_count: usize,
    pub top_level_operator: TopLevel,
}

pub fn ast_stats(ast: &RegexAst) -> AstStats {
    fn visit(node: &RegexAst, depth: usize, acc: &mut AstStats) {
        acc.depth = acc.depth.max(depth);
        acc.node_count += 1;
        if matches!(node, RegexAst::Union(_)) {
            acc.union_count += 1;
        }
        for child in node.children() {
            visit(child, depth + 1, acc);
        }
    }
    let mut acc = AstStats {
        depth: 0,
        node_count: 0,
        union_count: 0,
        top_level_operator: ast.top_level(),
    };
    visit(ast, 1, &mut acc);
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    #[test]
    fn optional_union_tree() {
        let s = ast_stats(&parse("a(b|c)?").unwrap());
        assert_eq!(s.depth, 4);
        assert_eq!(s.node_count, 6);
        assert_eq!(s.union_count, 1);
        assert_eq!(s.top_level_operator, TopLevel::Concat);
    }

    #[test]
    fn atoms() {
        let s = ast_stats(&RegexAst::Literal("a".into()));
        assert_eq!((s.depth, s.node_count, s.union_count), (1, 1, 0));
        assert_eq!(s.top_level_operator, TopLevel::Atomic);
        assert_eq!(
            ast_stats(&parse("(a|b)*").unwrap()).top_level_operator,
            TopLevel::Repetition
        );
    }
}
