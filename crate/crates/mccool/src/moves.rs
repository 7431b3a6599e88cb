use mcg_whitehead::{AssociatedSequence, SurfaceError, SurfaceWordSet};
use mcg_words::{Alphabet, CyclicWord, Endomorphism, Letter, Word};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NielsenError {
    #[error("pair ({0:?}, {1:?}) uses one generator twice")]
    SameGenerator(Letter, Letter),
    #[error("letter images do not form a signed permutation")]
    NotPermutation,
    #[error("move is not admissible for this sequence")]
    Inadmissible,
    #[error("image is not a surface word set: {0}")]
    NotSurface(SurfaceError),
    #[error("sequence rule and direct image disagree")]
    Disagreement,
    #[error("cannot parse move `{0}`")]
    Parse(String),
}

/// Bijection of signed letters commuting with inversion, stored on positive letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation(Vec<Letter>);

impl SignedPermutation {
    pub fn new(images: Vec<Letter>) -> Result<SignedPermutation, NielsenError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for l in &images {
            if l.gen() >= n || std::mem::replace(&mut seen[l.gen()], true) {
                return Err(NielsenError::NotPermutation);
            }
        }
        Ok(SignedPermutation(images))
    }

    /// From a full table on signed letters; rejects tables not commuting with inversion.
    pub fn from_pairs(rank: usize, pairs: &[(Letter, Letter)]) -> Result<SignedPermutation, NielsenError> {
        let mut images: Vec<Option<Letter>> = vec![None; rank];
        for &(from, to) in pairs {
            if from.gen() >= rank {
                return Err(NielsenError::NotPermutation);
            }
            let to = if from.is_inverse() { to.inverse() } else { to };
            match images[from.gen()] {
                Some(prev) if prev != to => return Err(NielsenError::NotPermutation),
                _ => images[from.gen()] = Some(to),
            }
        }
        let images = (0..rank).map(|g| images[g].unwrap_or(Letter::new(g, false))).collect();
        SignedPermutation::new(images)
    }

    pub fn apply(&self, l: Letter) -> Letter {
        let im = self.0[l.gen()];
        if l.is_inverse() {
            im.inverse()
        } else {
            im
        }
    }

    pub fn images(&self) -> &[Letter] {
        &self.0
    }
}

/// Type 1 (signed permutation) or type 2 (`a -> a b`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NielsenMove {
    Permutation(SignedPermutation),
    Right { a: Letter, b: Letter },
}

impl NielsenMove {
    pub fn right(a: Letter, b: Letter) -> Result<NielsenMove, NielsenError> {
        if a.gen() == b.gen() {
            return Err(NielsenError::SameGenerator(a, b));
        }
        Ok(NielsenMove::Right { a, b })
    }

    /// `c -> d c`, which is `c^-1 -> c^-1 d^-1`.
    pub fn left(c: Letter, d: Letter) -> Result<NielsenMove, NielsenError> {
        NielsenMove::right(c.inverse(), d.inverse())
    }

    pub fn endomorphism(&self, alphabet: &Alphabet) -> Endomorphism {
        let rank = alphabet.rank();
        let mut images: Vec<Word> = (0..rank).map(Word::gen).collect();
        match self {
            NielsenMove::Permutation(p) => {
                for (g, im) in images.iter_mut().enumerate() {
                    *im = Word::letter(p.apply(Letter::new(g, false)));
                }
            }
            NielsenMove::Right { a, b } => {
                let x = Word::gen(a.gen());
                let b = Word::letter(*b);
                images[a.gen()] = if a.is_inverse() { b.inverse().mul(&x) } else { x.mul(&b) };
            }
        }
        Endomorphism::new(alphabet.clone(), images).expect("letters in range")
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        match self {
            NielsenMove::Permutation(p) => {
                let parts: Vec<String> = p
                    .images()
                    .iter()
                    .enumerate()
                    .map(|(g, &im)| format!("{}->{}", alphabet.letter_name(Letter::new(g, false)), alphabet.letter_name(im)))
                    .collect();
                format!("perm: {}", parts.join(","))
            }
            NielsenMove::Right { a, b } => format!("right: {}*{}", alphabet.letter_name(*a), alphabet.letter_name(*b)),
        }
    }

    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<NielsenMove, NielsenError> {
        let err = || NielsenError::Parse(text.to_string());
        let one = |s: &str| -> Result<Letter, NielsenError> {
            match alphabet.parse_raw(s.trim()) {
                Ok(v) if v.len() == 1 => Ok(v[0]),
                _ => Err(err()),
            }
        };
        if let Some(rest) = text.trim().strip_prefix("perm:") {
            let mut pairs = Vec::new();
            for item in rest.split(',').filter(|s| !s.trim().is_empty()) {
                let (from, to) = item.split_once("->").ok_or_else(err)?;
                pairs.push((one(from)?, one(to)?));
            }
            Ok(NielsenMove::Permutation(SignedPermutation::from_pairs(alphabet.rank(), &pairs)?))
        } else if let Some(rest) = text.trim().strip_prefix("right:") {
            let (a, b) = rest.split_once('*').ok_or_else(err)?;
            NielsenMove::right(one(a)?, one(b)?)
        } else {
            Err(err())
        }
    }
}

/// Type-2 moves admissible for `seq` (both forms), then adjacent swaps and one inversion.
pub fn enumerate_moves(seq: &AssociatedSequence) -> Vec<NielsenMove> {
    let a = seq.letters();
    let mut out = Vec::new();
    for i in 1..a.len() {
        if a[i] != a[i - 1].inverse() {
            out.push(NielsenMove::Right { a: a[i].inverse(), b: a[i - 1].inverse() });
        }
    }
    for i in 0..a.len() - 1 {
        if a[i] != a[i + 1].inverse() {
            out.push(NielsenMove::Right { a: a[i].inverse(), b: a[i + 1].inverse() });
        }
    }
    out.extend(type1_generators(seq.rank()));
    out
}

/// Adjacent generator transpositions and inversion of the first generator.
pub fn type1_generators(rank: usize) -> Vec<NielsenMove> {
    let id: Vec<Letter> = (0..rank).map(|g| Letter::new(g, false)).collect();
    let mut out = Vec::new();
    for i in 0..rank.saturating_sub(1) {
        let mut v = id.clone();
        v.swap(i, i + 1);
        out.push(NielsenMove::Permutation(SignedPermutation(v)));
    }
    if rank > 0 {
        let mut v = id;
        v[0] = v[0].inverse();
        out.push(NielsenMove::Permutation(SignedPermutation(v)));
    }
    out
}

/// Image sequence under the move, or `None` if a type-2 move is not admissible.
pub fn sequence_rule(seq: &AssociatedSequence, m: &NielsenMove) -> Option<AssociatedSequence> {
    let a = seq.letters();
    match m {
        NielsenMove::Permutation(p) => AssociatedSequence::new(a.iter().map(|&l| p.apply(l)).collect()),
        NielsenMove::Right { a: ra, b: rb } => {
            let (c, d) = (ra.inverse(), rb.inverse());
            let i = seq.position(c);
            let mut v = a.to_vec();
            if i > 0 && a[i - 1] == d && c != d.inverse() {
                v.remove(i);
                let j = v.iter().position(|&l| l == d.inverse())?;
                v.insert(j, c);
            } else if i + 1 < a.len() && a[i + 1] == d && c != d.inverse() {
                v.remove(i);
                let j = v.iter().position(|&l| l == d.inverse())?;
                v.insert(j + 1, c);
            } else {
                return None;
            }
            AssociatedSequence::new(v)
        }
    }
}

/// `T^m`, computed by direct image and by the sequence rule, which must agree.
pub fn apply_nielsen(alphabet: &Alphabet, t: &SurfaceWordSet, m: &NielsenMove) -> Result<SurfaceWordSet, NielsenError> {
    let by_rule = sequence_rule(t.sequence(), m).ok_or(NielsenError::Inadmissible)?;
    let direct = image(alphabet, t, &m.endomorphism(alphabet))?;
    if direct.sequence() != &by_rule || SurfaceWordSet::recover(&by_rule) != direct {
        return Err(NielsenError::Disagreement);
    }
    Ok(direct)
}

/// `T^e` for an arbitrary endomorphism.
pub fn image(alphabet: &Alphabet, t: &SurfaceWordSet, e: &Endomorphism) -> Result<SurfaceWordSet, NielsenError> {
    let plain = e.map(t.plain());
    let cyclic = t.cyclic().iter().map(|c| CyclicWord::new(&e.map(c.word()))).collect();
    SurfaceWordSet::new(alphabet.rank(), plain, cyclic).map_err(NielsenError::NotSurface)
}
