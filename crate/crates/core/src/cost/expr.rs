use std::str::FromStr;

use serde::Serialize;

use crate::syntax::RegexAst;

/// How a character class contributes to expression cost.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum ClassCost {
    /// One symbol per class occurrence.
    #[default]
    One,
    /// The number of member characters.
    SetSize,
}

impl FromStr for ClassCost {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1" | "one" => Ok(ClassCost::One),
            "set-size" | "set_size" => Ok(ClassCost::SetSize),
            other => Err(format!("unknown class cost `{other}`")),
        }
    }
}

/// Number of alphabet symbols written in the expression; operators,
/// grouping and quantifiers are free.
pub fn expression_cost(ast: &RegexAst) -> usize {
    expression_cost_with(ast, ClassCost::One)
}

pub fn expression_cost_with(ast: &RegexAst, class_cost: ClassCost) -> usize {
    match ast {
        RegexAst::Empty => 0,
        RegexAst::Literal(s) => s.chars().count(),
        RegexAst::Class(set) => match class_cost {
            ClassCost::One => 1,
            ClassCost::SetSize => set.len(),
        },
        RegexAst::Concat(c) | RegexAst::Union(c) => {
            c.iter().map(|x| expression_cost_with(x, class_cost)).sum()
        }
        RegexAst::Repeat { child, .. } => expression_cost_with(child, class_cost),
    }
}
