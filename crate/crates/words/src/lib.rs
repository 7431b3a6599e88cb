//! Exact arithmetic in finite-rank free groups.
//!
//! Words are stored freely reduced and carry no alphabet; an [`Alphabet`]
//! supplies names, surface roles and the range check for its generators.

mod alphabet;
mod cyclic;
mod endo;
mod error;
mod fold;
mod word;

pub use alphabet::{Alphabet, Role};
pub use cyclic::{conjugate_eq, CyclicWord};
pub use endo::Endomorphism;
pub use error::WordError;
pub use fold::SubgroupGraph;
pub use word::{Letter, Word};
