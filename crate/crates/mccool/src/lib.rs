//! Nielsen moves on surface word sets, the groupoid of their morphisms, and
//! certified elements of the algebraic mapping class group.

mod factor;
mod mcg;
mod moves;

pub use factor::{factor_bfs, GroupoidMorphism, MorphismError, DEFAULT_DEPTH};
pub use mcg::{
    catalog_generator, catalog_names, generator_catalog, parse_provenance, random_element, random_nontrivial,
    verify_membership, McgElement, MembershipError,
};
pub use moves::{apply_nielsen, enumerate_moves, image, sequence_rule, type1_generators, NielsenError, NielsenMove, SignedPermutation};

use mcg_whitehead::SurfaceWordSet;
use mcg_words::Alphabet;

/// `{boundary word, [t1^-1], ..., [tp^-1]}` over the `(g, p)` alphabet.
pub fn standard_surface_set(g: usize, p: usize) -> Option<SurfaceWordSet> {
    ((g, p) != (0, 0)).then(|| SurfaceWordSet::standard(&Alphabet::surface(g, p)))
}
