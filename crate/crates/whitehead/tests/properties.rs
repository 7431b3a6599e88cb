use mcg_whitehead::{AssociatedSequence, SurfaceWordSet, WhiteheadGraph, WordSet};
use mcg_words::{Alphabet, CyclicWord, Letter, Word};
use proptest::prelude::*;

fn permutation(rank: usize) -> impl Strategy<Value = Vec<Letter>> {
    Just((0..2 * rank).map(Letter::from_code).collect::<Vec<_>>()).prop_shuffle()
}

fn word(rank: usize, min: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..2 * rank).prop_map(Letter::from_code), min..=max).prop_map(Word::reduce)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn recover_then_sequence_is_identity(rank in 1usize..6, seed in permutation(5)) {
        let letters: Vec<Letter> = seed.into_iter().filter(|l| l.gen() < rank).collect();
        let seq = AssociatedSequence::new(letters).unwrap();
        let t = SurfaceWordSet::recover(&seq);
        prop_assert_eq!(t.sequence(), &seq);
        let again = SurfaceWordSet::new(rank, t.plain().clone(), t.cyclic().to_vec()).unwrap();
        prop_assert_eq!(&again, &t);
        prop_assert_eq!(SurfaceWordSet::recover(again.sequence()), t);
    }

    #[test]
    fn recovered_graph_is_a_segment(seq in permutation(4)) {
        let t = SurfaceWordSet::recover(&AssociatedSequence::new(seq).unwrap());
        let g = WhiteheadGraph::build(4, &t.word_set());
        prop_assert!(g.edge_count() <= 7);
        prop_assert!(g.is_segment());
        let (gg, p) = t.surface_type();
        prop_assert_eq!(2 * gg + p, 4);
    }

    #[test]
    fn edge_total_matches_subword_count(
        words in prop::collection::vec(word(3, 0, 8), 0..3),
        cyc in prop::collection::vec(word(3, 1, 6), 0..3),
    ) {
        let cyclic: Vec<CyclicWord> = cyc.iter().map(CyclicWord::new).filter(|c| !c.is_empty()).collect();
        let expected: usize = words.iter().map(|w| w.len().saturating_sub(1)).sum::<usize>()
            + cyclic.iter().map(|c| c.len()).sum::<usize>();
        let set = WordSet::new(words, cyclic);
        prop_assert_eq!(WhiteheadGraph::build(3, &set).edge_count(), expected);
    }
}

#[test]
fn standard_sets_are_surface_sets() {
    for g in 0..=3 {
        for p in 0..=4 {
            if (g, p) == (0, 0) {
                continue;
            }
            let a = Alphabet::surface(g, p);
            let t = SurfaceWordSet::standard(&a);
            assert!(WhiteheadGraph::build(a.rank(), &t.word_set()).is_segment());
            assert_eq!(t.surface_type(), (g, p));
        }
    }
}

#[test]
fn singleton_cyclic_word_gives_one_edge() {
    let a = Alphabet::surface(0, 1);
    let set = WordSet::parse(&a, "t1 [T1]").unwrap();
    let g = WhiteheadGraph::build(1, &set);
    assert_eq!(g.format(&a), vec!["t1->T1".to_string()]);
    assert_eq!(a.format_letters(&g.chain().unwrap()), "t1, T1");
}
