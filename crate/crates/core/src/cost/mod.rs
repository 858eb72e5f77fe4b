//! Exact desk-scale cost oracles: alignment cost, string decomposition cost,
//! expression cost and language expression cost.

mod align;
mod decomp;
mod expr;
mod lang;
mod scs;

use serde::Serialize;
use thiserror::Error;

pub use align::{optimal_alignment, optimal_alignment_with_budget, Alignment};
pub use decomp::{decomposition_cost, decomposition_cost_with_budget, DecompositionWitness};
pub use expr::{expression_cost, expression_cost_with, ClassCost};
pub use lang::{language_expression_cost, LanguageCost, DEFAULT_LANG_BUDGET};
pub use scs::scs_length;

/// Default cap on lattice states visited by the exact searches.
pub const DEFAULT_STATE_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CostError {
    #[error("search budget exceeded; best known bound {best_bound}")]
    BudgetExceeded { best_bound: usize },
    #[error("cost mismatch: alignment {c_align}, decomposition {c_decomp}, expression {c_lang_expr:?}")]
    Inequality {
        c_align: usize,
        c_decomp: usize,
        c_lang_expr: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CostReport {
    pub c_align: usize,
    pub c_decomp: usize,
    pub c_lang_expr: Option<usize>,
    pub alignment: Alignment,
    pub decomposition: DecompositionWitness,
    pub expression: LanguageCost,
    pub search_budget_exhausted: bool,
}

/// Computes the three costs independently and checks that every exactly
/// known value agrees.
pub fn verify_cost_equalities<S: AsRef<str>>(strings: &[S]) -> Result<CostReport, CostError> {
    let alignment = optimal_alignment(strings)?;
    let decomposition = decomposition_cost(strings)?;
    let expression = language_expression_cost(strings, DEFAULT_LANG_BUDGET);
    let c_align = alignment.cost();
    let c_decomp = decomposition.cost();
    let c_lang_expr = expression.cost;
    if c_align != c_decomp || c_lang_expr.is_some_and(|c| c != c_align) {
        return Err(CostError::Inequality {
            c_align,
            c_decomp,
            c_lang_expr,
        });
    }
    Ok(CostReport {
        c_align,
        c_decomp,
        c_lang_expr,
        search_budget_exhausted: c_lang_expr.is_none(),
        alignment,
        decomposition,
        expression,
    })
}

/// Deduplicated, sorted character vectors; the inputs are a set.
fn normalize<S: AsRef<str>>(strings: &[S]) -> Vec<Vec<char>> {
    let mut words: Vec<Vec<char>> = strings.iter().map(|s| s.as_ref().chars().collect()).collect();
    words.sort();
    words.dedup();
    words
}
