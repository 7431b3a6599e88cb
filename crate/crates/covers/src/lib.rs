//! Finite-index normal subgroups of surface groups given as kernels onto
//! permutation groups.

mod basis;
mod deck;
pub mod fixtures;
mod graph;
mod perm;

pub use basis::{AdaptedBasis, BasisReport, BasisRole};
pub use deck::DeckData;
pub use fixtures::Cover;
pub use graph::{CosetGraph, FiniteQuotientSpec};
pub use perm::Perm;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("not a permutation: `{0}`")]
    NotPermutation(String),
    #[error("bad quotient spec: {0}")]
    Spec(String),
    #[error("bad adapted basis: {0}")]
    Basis(String),
    #[error("rank {rank} with {boundary} boundary components and {punctures} punctures leaves no integral genus")]
    Inconsistent { rank: usize, boundary: usize, punctures: usize },
    #[error("`{0}` is not in the cover group")]
    NotInCover(String),
}
