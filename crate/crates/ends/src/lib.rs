//! Eventually periodic ends of free groups, the orderings defined by surface
//! word sets, and the action of automorphisms on ends.

mod end;
mod order;
pub mod suites;

pub use end::End;
pub use order::{divergence_bound, OrderContext};
pub use suites::{lemma_rep_suite, order_preservation_suite, t_squarefree_theorem_suite, SuiteReport};

use mcg_words::{Endomorphism, WordError};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EndError {
    #[error("period reduces to the empty word")]
    EmptyPeriod,
    #[error("expected `prefix ~ (period)`, found `{0}`")]
    Syntax(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Image of `e` under the automorphism `m`.
pub fn apply_aut_to_end(m: &Endomorphism, e: &End) -> Result<End, EndError> {
    e.apply(m)
}
