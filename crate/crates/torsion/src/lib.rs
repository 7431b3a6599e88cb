//! The quotient of a punctured surface group by `t_k^d`, a free product of the
//! handle group with `p` cyclic groups of order `d`.

use mcg_mccool::McgElement;
use mcg_words::{Alphabet, CyclicWord, Letter, Word};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TorsionError {
    #[error("torsion orders differ ({0} vs {1})")]
    OrderMismatch(u32, u32),
    #[error("torsion order must be at least 2")]
    BadOrder,
    #[error("image of tau{0} does not have order dividing d")]
    NotWellDefined(usize),
    #[error("image count {found} does not match rank {expected}")]
    ImageCount { expected: usize, found: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Syllable {
    /// Nonempty reduced word in handle letters.
    Handle(Word),
    /// `tau_{k+1}^e` with `1 <= e < d`.
    Tau { k: usize, e: u32 },
}

/// Syllable normal form: no adjacent handle syllables, no adjacent taus with equal index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorsionWord {
    d: u32,
    handles: usize,
    syllables: Vec<Syllable>,
}

impl TorsionWord {
    /// `handles` is the number of handle letters `2g`; later generators are punctures.
    pub fn empty(d: u32, handles: usize) -> TorsionWord {
        assert!(d >= 2, "torsion order must be at least 2");
        TorsionWord { d, handles, syllables: Vec::new() }
    }

    pub fn order(&self) -> u32 {
        self.d
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn tau(d: u32, handles: usize, k: usize, e: i64) -> TorsionWord {
        let mut w = TorsionWord::empty(d, handles);
        w.push_tau(k, e.rem_euclid(d as i64) as u32);
        w
    }

    pub fn push_letter(&mut self, l: Letter) {
        if l.gen() >= self.handles {
            let e = if l.is_inverse() { self.d - 1 } else { 1 };
            self.push_tau(l.gen() - self.handles, e);
            return;
        }
        match self.syllables.last_mut() {
            Some(Syllable::Handle(w)) => {
                w.push(l);
                if w.is_empty() {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push(Syllable::Handle(Word::letter(l))),
        }
    }

    fn push_tau(&mut self, k: usize, e: u32) {
        let e = e % self.d;
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(Syllable::Tau { k: top, e: f }) if *top == k => {
                *f = (*f + e) % self.d;
                if *f == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push(Syllable::Tau { k, e }),
        }
    }

    fn push_syllable(&mut self, s: &Syllable) {
        match s {
            Syllable::Handle(w) => {
                for &l in w.letters() {
                    self.push_letter(l);
                }
            }
            Syllable::Tau { k, e } => self.push_tau(*k, *e),
        }
    }

    pub fn mul(&self, other: &TorsionWord) -> Result<TorsionWord, TorsionError> {
        if self.d != other.d {
            return Err(TorsionError::OrderMismatch(self.d, other.d));
        }
        let mut out = self.clone();
        for s in &other.syllables {
            out.push_syllable(s);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> TorsionWord {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| match s {
                Syllable::Handle(w) => Syllable::Handle(w.inverse()),
                Syllable::Tau { k, e } => Syllable::Tau { k: *k, e: self.d - e },
            })
            .collect();
        TorsionWord { syllables, ..*self }
    }

    pub fn pow(&self, n: u32) -> TorsionWord {
        let mut out = TorsionWord::empty(self.d, self.handles);
        for _ in 0..n {
            out = out.mul(self).expect("same order");
        }
        out
    }

    /// Letters obtained by expanding each `tau^e` into `e` copies of `t`.
    pub fn expand(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for s in &self.syllables {
            match s {
                Syllable::Handle(w) => out.extend_from_slice(w.letters()),
                Syllable::Tau { k, e } => out.extend(std::iter::repeat_n(Letter::new(self.handles + k, false), *e as usize)),
            }
        }
        out
    }

    /// Cyclically reduced conjugate.
    pub fn cyclic_core(&self) -> TorsionWord {
        let mut w = self.clone();
        loop {
            let n = w.syllables.len();
            let mergeable = n >= 2
                && match (&w.syllables[0], &w.syllables[n - 1]) {
                    (Syllable::Handle(_), Syllable::Handle(_)) => true,
                    (Syllable::Tau { k: a, .. }, Syllable::Tau { k: b, .. }) => a == b,
                    _ => false,
                };
            if !mergeable {
                break;
            }
            let first = w.syllables.remove(0);
            let mut rest = TorsionWord { syllables: w.syllables, ..w };
            rest.push_syllable(&first);
            w = rest;
        }
        if let [Syllable::Handle(h)] = w.syllables.as_slice() {
            let core = h.cyclic_split().1;
            w.syllables = vec![Syllable::Handle(core)];
        }
        w
    }

    pub fn is_conjugate(&self, other: &TorsionWord) -> bool {
        if self.d != other.d {
            return false;
        }
        let (a, b) = (self.cyclic_core(), other.cyclic_core());
        match (a.syllables.as_slice(), b.syllables.as_slice()) {
            ([Syllable::Handle(u)], [Syllable::Handle(v)]) => CyclicWord::new(u) == CyclicWord::new(v),
            (x, y) if x.len() != y.len() => false,
            ([], []) => true,
            (x, y) => (0..x.len()).any(|r| x.iter().cycle().skip(r).take(x.len()).eq(y.iter())),
        }
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.syllables.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|s| match s {
                Syllable::Handle(w) => alphabet.format(w),
                Syllable::Tau { k, e } => format!("tau{}^{}", k + 1, e),
            })
            .collect();
        parts.join(" . ")
    }
}

/// Image of `w` in the quotient of order `d`.
pub fn project(alphabet: &Alphabet, w: &Word, d: u32) -> TorsionWord {
    let mut out = TorsionWord::empty(d, 2 * alphabet.g());
    for &l in w.letters() {
        out.push_letter(l);
    }
    out
}

/// Endomorphism of the torsion quotient given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionEndomorphism {
    alphabet: Alphabet,
    d: u32,
    images: Vec<TorsionWord>,
}

impl TorsionEndomorphism {
    pub fn new(alphabet: Alphabet, d: u32, images: Vec<TorsionWord>) -> Result<TorsionEndomorphism, TorsionError> {
        if d < 2 {
            return Err(TorsionError::BadOrder);
        }
        if images.len() != alphabet.rank() {
            return Err(TorsionError::ImageCount { expected: alphabet.rank(), found: images.len() });
        }
        if let Some(w) = images.iter().find(|w| w.d != d) {
            return Err(TorsionError::OrderMismatch(d, w.d));
        }
        let handles = 2 * alphabet.g();
        for (k, im) in images[handles..].iter().enumerate() {
            if !im.pow(d).is_empty() {
                return Err(TorsionError::NotWellDefined(k + 1));
            }
        }
        Ok(TorsionEndomorphism { alphabet, d, images })
    }

    pub fn identity(alphabet: Alphabet, d: u32) -> TorsionEndomorphism {
        let images = (0..alphabet.rank()).map(|g| project(&alphabet, &Word::gen(g), d)).collect();
        TorsionEndomorphism { alphabet, d, images }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> u32 {
        self.d
    }

    pub fn images(&self) -> &[TorsionWord] {
        &self.images
    }

    pub fn apply(&self, w: &TorsionWord) -> Result<TorsionWord, TorsionError> {
        if w.d != self.d {
            return Err(TorsionError::OrderMismatch(self.d, w.d));
        }
        let handles = 2 * self.alphabet.g();
        let mut out = TorsionWord::empty(self.d, handles);
        for s in &w.syllables {
            match s {
                Syllable::Handle(h) => {
                    for &l in h.letters() {
                        let im = &self.images[l.gen()];
                        let im = if l.is_inverse() { im.inverse() } else { im.clone() };
                        out = out.mul(&im)?;
                    }
                }
                Syllable::Tau { k, e } => out = out.mul(&self.images[handles + k].pow(*e))?,
            }
        }
        Ok(out)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &TorsionEndomorphism) -> Result<TorsionEndomorphism, TorsionError> {
        let images = self.images.iter().map(|w| other.apply(w)).collect::<Result<Vec<_>, _>>()?;
        Ok(TorsionEndomorphism { alphabet: self.alphabet.clone(), d: self.d, images })
    }

    /// Every generator maps to itself.
    pub fn is_identity(&self) -> bool {
        *self == TorsionEndomorphism::identity(self.alphabet.clone(), self.d)
    }

    /// Fixes the projected boundary word and permutes the classes of the `tau_k^-1`.
    pub fn respects_structure(&self) -> bool {
        let a = &self.alphabet;
        let z = project(a, &a.boundary_word(), self.d);
        if self.apply(&z).ok() != Some(z) {
            return false;
        }
        let handles = 2 * a.g();
        let taus: Vec<TorsionWord> = (0..a.p()).map(|k| TorsionWord::tau(self.d, handles, k, -1)).collect();
        let mut used = vec![false; taus.len()];
        for t in &taus {
            let Ok(im) = self.apply(t) else { return false };
            match (0..taus.len()).find(|&j| !used[j] && im.is_conjugate(&taus[j])) {
                Some(j) => used[j] = true,
                None => return false,
            }
        }
        true
    }
}

/// The induced map on the torsion quotient.
pub fn psi(m: &McgElement, d: u32) -> TorsionEndomorphism {
    let a = m.alphabet();
    let images = m.endomorphism().images().iter().map(|w| project(a, w, d)).collect();
    let out = TorsionEndomorphism::new(a.clone(), d, images).expect("images of a certified element are well defined");
    assert!(out.respects_structure(), "induced map must respect the boundary word and puncture classes");
    out
}
