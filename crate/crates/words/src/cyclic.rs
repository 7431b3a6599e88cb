use crate::Word;

/// Conjugacy class of a word: cyclically reduced, at its least rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord(Word);

impl CyclicWord {
    pub fn new(w: &Word) -> CyclicWord {
        let (_, core) = w.cyclic_split();
        let n = core.len();
        if n == 0 {
            return CyclicWord(core);
        }
        let ls = core.letters();
        let best = (0..n)
            .min_by(|&i, &j| {
                let a = ls[i..].iter().chain(&ls[..i]);
                let b = ls[j..].iter().chain(&ls[..j]);
                a.cmp(b)
            })
            .unwrap_or(0);
        CyclicWord(core.rotate(best))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord::new(&self.0.inverse())
    }
}

/// True iff `u` and `v` are conjugate.
pub fn conjugate_eq(u: &Word, v: &Word) -> bool {
    CyclicWord::new(u) == CyclicWord::new(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Alphabet, Letter};
    use proptest::prelude::*;

    #[test]
    fn rotation_and_generators() {
        let a = Alphabet::letters(2);
        assert!(conjugate_eq(&a.parse("ab").unwrap(), &a.parse("ba").unwrap()));
        let s = Alphabet::surface(0, 2);
        assert!(!conjugate_eq(&s.parse("t1").unwrap(), &s.parse("t2").unwrap()));
    }

    #[test]
    fn conjugated_commutator() {
        let a = Alphabet::letters(2);
        let c = a.parse("BAba").unwrap();
        assert!(conjugate_eq(&c.conj(&a.parse("b").unwrap()), &c));
    }

    #[test]
    fn canonical_is_idempotent() {
        let a = Alphabet::letters(3);
        let w = a.parse("cAbBBac").unwrap();
        let c = CyclicWord::new(&w);
        assert_eq!(CyclicWord::new(c.word()), c);
        assert!(c.word().is_cyclically_reduced());
    }

    fn word(rank: usize, max: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((0..2 * rank).prop_map(Letter::from_code), 0..=max).prop_map(Word::reduce)
    }

    fn all_words(rank: usize, max: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 0..max {
            let mut next = Vec::new();
            for w in &frontier {
                for l in Letter::all(rank) {
                    if w.last() != Some(l.inverse()) {
                        let mut v = w.clone();
                        v.push(l);
                        next.push(v);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn brute_force_conjugator_search_agrees() {
        let conjugators = all_words(2, 6);
        let samples = all_words(2, 3);
        for u in samples.iter().step_by(3) {
            for v in samples.iter().step_by(5) {
                let brute = conjugators.iter().any(|c| &u.conj(c) == v);
                assert_eq!(brute, conjugate_eq(u, v), "{u:?} {v:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn conjugates_are_equal(u in word(3, 10), c in word(3, 6)) {
            prop_assert!(conjugate_eq(&u, &u.conj(&c)));
        }

        #[test]
        fn equivalence_relation(u in word(2, 5), v in word(2, 5), w in word(2, 5)) {
            prop_assert!(conjugate_eq(&u, &u));
            prop_assert_eq!(conjugate_eq(&u, &v), conjugate_eq(&v, &u));
            if conjugate_eq(&u, &v) && conjugate_eq(&v, &w) {
                prop_assert!(conjugate_eq(&u, &w));
            }
        }
    }
}
