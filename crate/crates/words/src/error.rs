use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("cannot parse `{text}` at byte {pos}")]
    Parse { text: String, pos: usize },
    #[error("generator {gen} is outside an alphabet of rank {rank}")]
    AlphabetMismatch { gen: usize, rank: usize },
    #[error("alphabets differ")]
    AlphabetsDiffer,
    #[error("expected {expected} images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("invalid generator name `{0}`")]
    BadName(String),
    #[error("endomorphism is not an automorphism")]
    NotAutomorphism,
}
