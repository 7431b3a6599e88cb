use crate::{Alphabet, Letter, SubgroupGraph, Word, WordError};

/// Endomorphism acting on the right: `compose(a, b)` applies `a` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl Endomorphism {
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Endomorphism, WordError> {
        if images.len() != alphabet.rank() {
            return Err(WordError::ImageCount { expected: alphabet.rank(), found: images.len() });
        }
        for w in &images {
            alphabet.check(w)?;
        }
        Ok(Endomorphism { alphabet, images })
    }

    pub fn identity(alphabet: Alphabet) -> Endomorphism {
        let images = (0..alphabet.rank()).map(Word::gen).collect();
        Endomorphism { alphabet, images }
    }

    /// Images given as text, one per generator in roster order.
    pub fn parse(alphabet: Alphabet, images: &[&str]) -> Result<Endomorphism, WordError> {
        let ws = images.iter().map(|s| alphabet.parse(s)).collect::<Result<Vec<_>, _>>()?;
        Endomorphism::new(alphabet, ws)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, gen: usize) -> &Word {
        &self.images[gen]
    }

    pub fn image_of_letter(&self, l: Letter) -> Word {
        let w = &self.images[l.gen()];
        if l.is_inverse() {
            w.inverse()
        } else {
            w.clone()
        }
    }

    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        self.alphabet.check(w)?;
        Ok(self.map(w))
    }

    /// `apply` for words already known to lie in the alphabet.
    pub fn map(&self, w: &Word) -> Word {
        let mut out = Word::empty();
        for &l in w.letters() {
            let im = &self.images[l.gen()];
            if l.is_inverse() {
                for &m in im.letters().iter().rev() {
                    out.push(m.inverse());
                }
            } else {
                out.append(im);
            }
        }
        out
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Endomorphism) -> Result<Endomorphism, WordError> {
        if self.alphabet != other.alphabet {
            return Err(WordError::AlphabetsDiffer);
        }
        Ok(self.then(other))
    }

    pub fn then(&self, other: &Endomorphism) -> Endomorphism {
        let images = self.images.iter().map(|w| other.map(w)).collect();
        Endomorphism { alphabet: self.alphabet.clone(), images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| *w == Word::gen(i))
    }

    fn rose(&self) -> Option<SubgroupGraph> {
        let g = SubgroupGraph::fold(self.alphabet.rank(), &self.images);
        (g.is_free_basis() && g.vertex_count() == 1 && g.is_complete()).then_some(g)
    }

    /// Images generate the whole group; surjective endomorphisms of free groups of finite rank are injective.
    pub fn is_automorphism(&self) -> bool {
        self.rose().is_some()
    }

    pub fn inverse(&self) -> Result<Endomorphism, WordError> {
        let g = self.rose().ok_or(WordError::NotAutomorphism)?;
        let images = (0..self.alphabet.rank())
            .map(|i| g.rewrite(&Word::gen(i)).expect("complete graph"))
            .collect();
        Ok(Endomorphism { alphabet: self.alphabet.clone(), images })
    }
}
