use std::collections::{HashSet, VecDeque};

use mcg_whitehead::SurfaceWordSet;
use mcg_words::{Endomorphism, Word};
use thiserror::Error;

use crate::moves::{apply_nielsen, enumerate_moves, image, NielsenMove};

pub const DEFAULT_DEPTH: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("map is not an automorphism")]
    NotAutomorphism,
    #[error("source image is not the target")]
    WrongTarget,
    #[error("ranks differ")]
    Rank,
}

/// An automorphism carrying one surface word set onto another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidMorphism {
    source: SurfaceWordSet,
    target: SurfaceWordSet,
    map: Endomorphism,
}

impl GroupoidMorphism {
    pub fn new(source: SurfaceWordSet, map: Endomorphism) -> Result<GroupoidMorphism, MorphismError> {
        if source.rank() != map.alphabet().rank() {
            return Err(MorphismError::Rank);
        }
        if !map.is_automorphism() {
            return Err(MorphismError::NotAutomorphism);
        }
        let target = image(map.alphabet(), &source, &map).map_err(|_| MorphismError::WrongTarget)?;
        Ok(GroupoidMorphism { source, target, map })
    }

    /// Checks that `source` maps onto `target`.
    pub fn between(source: SurfaceWordSet, target: SurfaceWordSet, map: Endomorphism) -> Result<GroupoidMorphism, MorphismError> {
        let m = GroupoidMorphism::new(source, map)?;
        if m.target != target {
            return Err(MorphismError::WrongTarget);
        }
        Ok(m)
    }

    pub fn source(&self) -> &SurfaceWordSet {
        &self.source
    }

    pub fn target(&self) -> &SurfaceWordSet {
        &self.target
    }

    pub fn map(&self) -> &Endomorphism {
        &self.map
    }
}

/// Breadth-first search for Nielsen moves composing exactly to `m`'s automorphism.
///
/// Moves at each state are tried in sorted order, so the result is deterministic.
/// `None` is inconclusive.
pub fn factor_bfs(m: &GroupoidMorphism, depth_limit: usize) -> Option<Vec<NielsenMove>> {
    let alphabet = m.map.alphabet();
    let goal = m.map.images();
    let start = Endomorphism::identity(alphabet.clone());
    if start.images() == goal {
        return Some(Vec::new());
    }
    let mut seen: HashSet<Vec<Word>> = HashSet::new();
    seen.insert(start.images().to_vec());
    let mut queue: VecDeque<(SurfaceWordSet, Endomorphism, Vec<NielsenMove>)> = VecDeque::new();
    queue.push_back((m.source.clone(), start, Vec::new()));
    while let Some((set, acc, path)) = queue.pop_front() {
        if path.len() >= depth_limit {
            continue;
        }
        let mut moves = enumerate_moves(set.sequence());
        moves.sort();
        moves.dedup();
        for mv in moves {
            let Ok(next) = apply_nielsen(alphabet, &set, &mv) else { continue };
            let acc2 = acc.then(&mv.endomorphism(alphabet));
            if !seen.insert(acc2.images().to_vec()) {
                continue;
            }
            let mut path2 = path.clone();
            path2.push(mv);
            if acc2.images() == goal {
                return Some(path2);
            }
            queue.push_back((next, acc2, path2));
        }
    }
    None
}
