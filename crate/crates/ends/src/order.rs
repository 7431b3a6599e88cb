use std::cmp::Ordering;

use mcg_whitehead::{AssociatedSequence, SurfaceWordSet};
use mcg_words::{Alphabet, Letter, Word};

use crate::End;

/// The ordering of ends determined by a surface word set.
///
/// The first letters are ordered as in the associated sequence. After a
/// letter `l` with `l^-1 = a_i`, the next letters are ordered cyclically
/// starting from `a_(i+1)`, for every `i` in `1..=2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderContext {
    set: SurfaceWordSet,
    pos: Vec<usize>,
}

impl OrderContext {
    pub fn new(set: SurfaceWordSet) -> OrderContext {
        let pos = set.sequence().positions();
        OrderContext { set, pos }
    }

    pub fn from_sequence(seq: &AssociatedSequence) -> OrderContext {
        OrderContext::new(SurfaceWordSet::recover(seq))
    }

    /// The order `<` of the standard `(g, p)` set.
    pub fn standard(alphabet: &Alphabet) -> OrderContext {
        OrderContext::new(SurfaceWordSet::standard(alphabet))
    }

    pub fn surface_set(&self) -> &SurfaceWordSet {
        &self.set
    }

    pub fn sequence(&self) -> &AssociatedSequence {
        self.set.sequence()
    }

    pub fn rank(&self) -> usize {
        self.set.rank()
    }

    /// Rank of `next` among the children of a vertex reached by `last`.
    pub fn child_key(&self, last: Option<Letter>, next: Letter) -> usize {
        let n2 = self.pos.len();
        match last {
            None => self.pos[next.code()],
            Some(l) => (self.pos[next.code()] + n2 - self.pos[l.inverse().code()] - 1) % n2,
        }
    }

    /// Smallest child of a vertex reached by `last`.
    fn least_child(&self, last: Option<Letter>) -> Letter {
        let seq = self.sequence().letters();
        match last {
            None => seq[0],
            Some(l) => seq[(self.pos[l.inverse().code()] + 1) % seq.len()],
        }
    }

    /// Largest child of a vertex reached by `last`.
    fn greatest_child(&self, last: Option<Letter>) -> Letter {
        let seq = self.sequence().letters();
        let n2 = seq.len();
        match last {
            None => seq[n2 - 1],
            Some(l) => seq[(self.pos[l.inverse().code()] + n2 - 1) % n2],
        }
    }

    pub fn compare(&self, e: &End, f: &End) -> Ordering {
        let bound = divergence_bound(e, f);
        for i in 0..bound {
            let (a, b) = (e.letter(i), f.letter(i));
            if a != b {
                let last = (i > 0).then(|| e.letter(i - 1));
                return self.child_key(last, a).cmp(&self.child_key(last, b));
            }
        }
        Ordering::Equal
    }

    pub fn less(&self, e: &End, f: &End) -> bool {
        self.compare(e, f) == Ordering::Less
    }

    /// `lo <= e <= hi`.
    pub fn in_interval(&self, e: &End, lo: &End, hi: &End) -> bool {
        self.compare(lo, e) != Ordering::Greater && self.compare(e, hi) != Ordering::Greater
    }

    /// Least end beginning with `w`: after `w`, always take the least child.
    pub fn min_in_shadow(&self, w: &Word) -> End {
        self.greedy(w, |c, last| c.least_child(last))
    }

    /// Greatest end beginning with `w`.
    pub fn max_in_shadow(&self, w: &Word) -> End {
        self.greedy(w, |c, last| c.greatest_child(last))
    }

    // The next letter depends only on the last one, so the stream becomes
    // periodic as soon as a letter repeats.
    fn greedy(&self, w: &Word, step: impl Fn(&OrderContext, Option<Letter>) -> Letter) -> End {
        let mut stream = w.letters().to_vec();
        let mut first_seen = vec![None; self.pos.len()];
        loop {
            let next = step(self, stream.last().copied());
            if let Some(start) = first_seen[next.code()] {
                let (pre, per) = stream.split_at(start);
                return End::new(&Word::reduce(pre.iter().copied()), &Word::reduce(per.iter().copied()))
                    .expect("greedy streams are reduced");
            }
            first_seen[next.code()] = Some(stream.len());
            stream.push(next);
        }
    }
}

/// Past this many letters two distinct eventually periodic streams have diverged.
pub fn divergence_bound(e: &End, f: &End) -> usize {
    let (pe, pf) = (e.period().len(), f.period().len());
    e.prefix().len() + f.prefix().len() + pe * pf + pe.max(pf)
}
