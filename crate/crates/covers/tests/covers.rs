use mcg_covers::fixtures::{self, two_sheeted_spec, Cover};
use mcg_covers::{AdaptedBasis, CosetGraph, DeckData, FiniteQuotientSpec};
use mcg_mccool::{generator_catalog, random_element};
use mcg_words::{Letter, Word};
use proptest::prelude::*;

fn cover_of(spec: &str) -> (CosetGraph, DeckData) {
    let g = CosetGraph::build(FiniteQuotientSpec::parse(spec).unwrap());
    let d = DeckData::compute(&g).unwrap();
    (g, d)
}

#[test]
fn two_sheeted_deck_data() {
    for p in 2..=6 {
        let (g, d) = cover_of(&two_sheeted_spec(p));
        assert_eq!(g.index(), 2);
        assert_eq!(g.schreier_basis().len(), 2 * p - 1);
        let expected = if p % 2 == 0 { (2, p, (p - 2) / 2) } else { (1, p, (p - 1) / 2) };
        assert_eq!((d.boundary_count, d.lifted_punctures, d.genus), expected, "p = {p}");
    }
}

#[test]
fn fixture_deck_data() {
    let cases = [("paper-2", 4, (4, 0, 1), 5), ("paper-3a", 8, (4, 12, 1), 17), ("paper-3b", 8, (4, 4, 5), 17)];
    for (name, m, shape, rank) in cases {
        let c = fixtures::load(name).unwrap();
        assert_eq!(c.graph.index(), m);
        assert_eq!((c.deck.boundary_count, c.deck.lifted_punctures, c.deck.genus), shape, "{name}");
        assert_eq!(c.graph.schreier_basis().len(), rank);
        assert_eq!(c.deck.cover_rank, rank);
    }
    let c = fixtures::load("paper-2").unwrap();
    assert_eq!(c.deck.boundary_order, 1);
}

#[test]
fn deck_identities_hold() {
    for name in fixtures::NAMES {
        let d = fixtures::load(name).unwrap().deck;
        assert_eq!(d.index, d.boundary_count * d.boundary_order);
        assert_eq!(d.lifted_punctures, d.puncture_orders.iter().map(|o| d.index / o).sum::<usize>());
        assert_eq!(2 * d.genus + d.boundary_count - 1 + d.lifted_punctures, d.cover_rank);
        assert_eq!(d.boundary_reps.len(), d.boundary_count - 1);
        for (k, reps) in d.puncture_reps.iter().enumerate() {
            assert_eq!(reps.len(), d.puncture_lifts[k]);
            assert!(d.puncture_orders[k] >= 2);
        }
    }
}

#[test]
fn fixture_bases_verify() {
    for name in fixtures::NAMES {
        let c = fixtures::load(name).unwrap();
        let r = c.basis.verify(&c.graph, &c.deck);
        assert!(r.passes(), "{name}: {r:?}");
        assert_eq!(c.basis.rank(), c.deck.cover_rank);
    }
}

#[test]
fn squared_word_breaks_generation() {
    let (spec, basis) = fixtures::texts("paper-2").unwrap();
    let c = Cover::from_texts(&spec, &basis.replace("xhat = x1 x1", "xhat = x1 x1 x1 x1")).unwrap();
    let r = c.basis.verify(&c.graph, &c.deck);
    assert!(!r.generates);
    assert!(r.outside.is_empty());
}

#[test]
fn cover_membership_examples() {
    let c = fixtures::load("paper-1-odd").unwrap();
    let a = c.graph.alphabet().clone();
    assert!(c.graph.contains(&a.parse("t1 t2").unwrap()));
    assert!(!c.graph.contains(&a.parse("t1").unwrap()));
    let c = fixtures::load("paper-2").unwrap();
    assert!(c.graph.contains(&c.graph.alphabet().parse("x1 x1").unwrap()));
}

#[test]
fn invariance_under_catalog() {
    for (name, g, p) in [("paper-1-odd", 0, 3), ("paper-1-even", 0, 4), ("paper-2", 1, 0), ("paper-3a", 0, 3), ("paper-3b", 1, 1)] {
        let c = fixtures::load(name).unwrap();
        for e in generator_catalog(g, p) {
            assert!(c.graph.is_invariant(e.endomorphism()), "{name} {:?}", e.provenance());
        }
    }
    let (g, _) = cover_of("degree 2\nt1: (1 2)\nt2: ()\n");
    let s = &generator_catalog(0, 2)[0];
    assert!(!g.is_invariant(s.endomorphism()));
}

#[test]
fn rewrite_matches_printed_coordinates() {
    let c = fixtures::load("paper-2").unwrap();
    let (a, b) = (c.basis.ambient().clone(), c.basis.alphabet().clone());
    let alpha_x = a.parse("Y1 x1 Y1 x1").unwrap();
    let coords = c.basis.rewrite(&alpha_x).unwrap();
    assert_eq!(coords, b.parse("Yhat xhat yhat that2 that3 That2 Yhat").unwrap());
    assert_eq!(c.basis.expand(&coords), alpha_x);
    let beta_y = a.parse("x1 y1 x1 y1").unwrap();
    assert_eq!(b.format(&c.basis.rewrite(&beta_y).unwrap()), "xhat yhat that2");
    assert_eq!(b.format(&c.basis.rewrite(&a.parse("x1 x1").unwrap()).unwrap()), "xhat");
    assert!(c.basis.rewrite(&a.parse("x1").unwrap()).is_err());
}

#[test]
fn basis_text_round_trip() {
    for name in fixtures::NAMES {
        let c = fixtures::load(name).unwrap();
        let again = AdaptedBasis::parse(c.basis.ambient(), &c.basis.format()).unwrap();
        assert_eq!(again.words(), c.basis.words());
    }
}

fn word(rank: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..2 * rank).prop_map(Letter::from_code), 0..=max).prop_map(Word::reduce)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn membership_matches_permutation_image(w in word(3, 10)) {
        for name in ["paper-3a", "paper-3b"] {
            let c = fixtures::load(name).unwrap();
            prop_assert_eq!(c.graph.contains(&w), c.graph.spec().image_of(&w).is_identity());
        }
    }

    #[test]
    fn rewrite_round_trips(walk in prop::collection::vec(0usize..6, 0..14), name in prop::sample::select(fixtures::NAMES.to_vec())) {
        let c = fixtures::load(name).unwrap();
        let rank = c.graph.alphabet().rank();
        let mut s = 0;
        let mut w = Word::empty();
        for code in walk {
            let l = Letter::from_code(code % (2 * rank));
            w.push(l);
            s = c.graph.target(s, l);
        }
        w.append(&c.graph.tree_word(s).inverse());
        prop_assert!(c.graph.contains(&w));
        let coords = c.basis.rewrite(&w).unwrap();
        prop_assert_eq!(c.basis.expand(&coords), w);
    }

    #[test]
    fn random_elements_keep_covers_invariant(seed in any::<u64>()) {
        let c = fixtures::load("paper-3a").unwrap();
        let e = random_element(0, 3, 6, seed);
        prop_assert!(c.graph.is_invariant(e.endomorphism()));
    }
}

#[test]
fn schreier_basis_generates_cover() {
    for name in fixtures::NAMES {
        let c = fixtures::load(name).unwrap();
        let schreier = c.graph.schreier_basis();
        let folded = mcg_words::SubgroupGraph::fold(c.graph.alphabet().rank(), &schreier);
        assert!(folded.is_free_basis());
        assert_eq!(folded.vertex_count(), c.graph.index());
        assert!(folded.is_complete());
        assert!(schreier.iter().all(|w| c.graph.contains(w)));
    }
}
