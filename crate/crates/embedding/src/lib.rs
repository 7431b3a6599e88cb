//! Restriction of mapping classes to an invariant cover, followed by
//! elimination of the lifted punctures.

use mcg_covers::{BasisRole, Cover, CoverError};
use mcg_mccool::{generator_catalog, verify_membership, McgElement, MembershipError};
use mcg_words::{conjugate_eq, Alphabet, Endomorphism, Letter, Word};
use thiserror::Error;

pub const DEFAULT_CONJUGATOR_BOUND: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("punctures have different orders in the quotient: {0:?}")]
    UnequalOrders(Vec<(usize, usize)>),
    #[error("configuration (g, p, d) = (0, 2, 2) is excluded")]
    Excluded,
    #[error("cover group is not invariant under `{0}`")]
    NotInvariant(String),
    #[error("surface type ({0}, {1}) does not match the cover alphabet")]
    WrongSurface(usize, usize),
    #[error("adapted basis does not verify against the cover")]
    BadBasis,
    #[error("image of basis word `{0}` is not in the cover group")]
    ImageOutside(String),
    #[error("eliminated map is not a mapping class: {0}")]
    Target(MembershipError),
    #[error(transparent)]
    Cover(#[from] CoverError),
}

/// A cover fixed for embedding, with the common puncture order and target type.
#[derive(Clone, Debug)]
pub struct EmbeddingContext {
    cover: Cover,
    g: usize,
    p: usize,
    order: Option<usize>,
    roles: Vec<BasisRole>,
    target: Alphabet,
    display: Alphabet,
}

impl EmbeddingContext {
    pub fn new(cover: Cover) -> Result<EmbeddingContext, EmbeddingError> {
        let a = cover.graph.alphabet().clone();
        let (g, p) = (a.g(), a.p());
        let deck = &cover.deck;
        let order = deck.common_order();
        if p > 0 && order.is_none() {
            let listed = deck.puncture_orders.iter().enumerate().map(|(k, &d)| (k + 1, d)).collect();
            return Err(EmbeddingError::UnequalOrders(listed));
        }
        if (g, p, order) == (0, 2, Some(2)) {
            return Err(EmbeddingError::Excluded);
        }
        if !cover.basis.verify(&cover.graph, deck).passes() {
            return Err(EmbeddingError::BadBasis);
        }
        for e in generator_catalog(g, p) {
            if !cover.graph.is_invariant(e.endomorphism()) {
                return Err(EmbeddingError::NotInvariant(e.provenance().unwrap_or("?").to_string()));
            }
        }
        let roles = cover.basis.effective_roles(deck);
        let (tg, tp) = (deck.genus, deck.boundary_count - 1);
        let kept: Vec<String> = cover.basis.alphabet().names()[..2 * tg + tp].to_vec();
        let display = Alphabet::custom(kept, tg, tp).expect("basis names are valid");
        Ok(EmbeddingContext { target: Alphabet::surface(tg, tp), display, cover, g, p, order, roles })
    }

    pub fn cover(&self) -> &Cover {
        &self.cover
    }

    pub fn source_type(&self) -> (usize, usize) {
        (self.g, self.p)
    }

    pub fn target_type(&self) -> (usize, usize) {
        (self.target.g(), self.target.p())
    }

    /// Common order `d` of the punctures in the quotient, if there are punctures.
    pub fn order(&self) -> Option<usize> {
        self.order
    }

    /// Surface alphabet of the target.
    pub fn target_alphabet(&self) -> &Alphabet {
        &self.target
    }

    /// The target alphabet spelled with the kept basis names.
    pub fn display_alphabet(&self) -> &Alphabet {
        &self.display
    }

    fn is_killed(&self, gen: usize) -> bool {
        self.roles[gen] == BasisRole::Puncture
    }

    /// Deletes the puncture basis letters and renumbers the rest into the target.
    pub fn kill_punctures(&self, w: &Word) -> Word {
        w.letters().iter().copied().filter(|l| !self.is_killed(l.gen())).collect()
    }

    fn check_source(&self, e: &Endomorphism) -> Result<(), EmbeddingError> {
        if e.alphabet() != self.cover.graph.alphabet() {
            return Err(EmbeddingError::WrongSurface(self.g, self.p));
        }
        Ok(())
    }
}

/// The restriction to the cover group, in basis coordinates.
pub fn restrict(ctx: &EmbeddingContext, m: &McgElement) -> Result<Endomorphism, EmbeddingError> {
    ctx.check_source(m.endomorphism())?;
    let basis = &ctx.cover.basis;
    let mut images = Vec::with_capacity(basis.rank());
    for (name, w) in basis.alphabet().names().iter().zip(basis.words()) {
        let im = m.endomorphism().map(w);
        images.push(basis.rewrite(&im).map_err(|_| EmbeddingError::ImageOutside(name.clone()))?);
    }
    Ok(Endomorphism::new(basis.alphabet().clone(), images).expect("coordinates lie in the basis alphabet"))
}

/// Kills the lifted punctures and reads the rest over the target surface.
pub fn eliminate_punctures(ctx: &EmbeddingContext, e: &Endomorphism) -> Result<McgElement, EmbeddingError> {
    let kept = ctx.target.rank();
    let images: Vec<Word> = e.images()[..kept].iter().map(|w| ctx.kill_punctures(w)).collect();
    let out = Endomorphism::new(ctx.target.clone(), images).expect("kept letters precede killed ones");
    verify_membership(&out, ctx.target.g(), ctx.target.p()).map_err(EmbeddingError::Target)
}

pub fn embed(ctx: &EmbeddingContext, m: &McgElement) -> Result<McgElement, EmbeddingError> {
    let out = eliminate_punctures(ctx, &restrict(ctx, m)?)?;
    Ok(match m.provenance() {
        Some(p) => out.with_provenance(p),
        None => out,
    })
}

/// `name -> image` lines over the display alphabet.
pub fn format_table(alphabet: &Alphabet, e: &Endomorphism) -> Vec<String> {
    alphabet.names().iter().zip(e.images()).map(|(n, w)| format!("{n} -> {}", alphabet.format(w))).collect()
}

/// Both containments between the normal closures of the puncture powers and of the puncture basis words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalClosureReport {
    /// Puncture basis words that are not conjugate to a `t_k^d`.
    pub forward_failures: Vec<String>,
    /// Number of conjugates `(t_k^d)^w` tested.
    pub samples: usize,
    /// Conjugates whose coordinates survive killing the puncture basis words.
    pub backward_failures: Vec<String>,
    pub vacuous: bool,
}

impl NormalClosureReport {
    pub fn passes(&self) -> bool {
        self.forward_failures.is_empty() && self.backward_failures.is_empty()
    }
}

pub fn check_normal_closure(ctx: &EmbeddingContext, bound: usize) -> NormalClosureReport {
    let basis = &ctx.cover.basis;
    let a = basis.ambient();
    let punct: Vec<usize> = (0..basis.rank()).filter(|&i| ctx.is_killed(i)).collect();
    if punct.is_empty() {
        return NormalClosureReport { forward_failures: vec![], samples: 0, backward_failures: vec![], vacuous: true };
    }
    let d = ctx.order.expect("punctures present") as i64;
    let powers: Vec<Word> = (0..a.p()).map(|k| Word::letter(a.t(k)).pow(d)).collect();
    let forward_failures = punct
        .iter()
        .filter(|&&i| !powers.iter().any(|t| conjugate_eq(&basis.words()[i], t)))
        .map(|&i| basis.alphabet().names()[i].clone())
        .collect();
    let mut samples = 0;
    let mut backward_failures = Vec::new();
    for w in words_up_to(a.rank(), bound) {
        for t in &powers {
            samples += 1;
            let c = t.conj(&w);
            let ok = basis.rewrite(&c).map(|coords| ctx.kill_punctures(&coords).is_empty()).unwrap_or(false);
            if !ok {
                backward_failures.push(a.format(&c));
            }
        }
    }
    NormalClosureReport { forward_failures, samples, backward_failures, vacuous: false }
}

/// All reduced words of length at most `bound`, shortest first.
pub fn words_up_to(rank: usize, bound: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for w in &layer {
            for l in Letter::all(rank) {
                if w.last() != Some(l.inverse()) {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
