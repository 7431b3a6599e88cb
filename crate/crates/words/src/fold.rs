use std::collections::HashMap;

use crate::{Letter, Word};

#[derive(Clone, Debug)]
struct Edge {
    from: usize,
    to: usize,
    gen: usize,
    // word over generator indices of the input list
    label: Word,
}

/// Folded graph of the subgroup generated by a list of words.
///
/// Each edge carries a word over the input list, so a closed path at the
/// base spells an element both in the ambient letters and in the generators.
#[derive(Clone, Debug)]
pub struct SubgroupGraph {
    rank: usize,
    vertices: usize,
    // step[v][code] = (target, label read along that direction)
    step: Vec<Vec<Option<(usize, Word)>>>,
    dependent: bool,
}

impl SubgroupGraph {
    /// Stallings folding of the wedge of loops spelling `gens`.
    pub fn fold(rank: usize, gens: &[Word]) -> SubgroupGraph {
        let mut f = Folder { rank, alive: vec![true], edges: Vec::new(), inc: HashMap::new(), dependent: false };
        for (i, w) in gens.iter().enumerate() {
            assert!(w.max_gen().is_none_or(|g| g < rank), "word outside alphabet");
            if w.is_empty() {
                f.dependent = true;
                continue;
            }
            let mut v = 0;
            for (j, &l) in w.letters().iter().enumerate() {
                let next = if j + 1 == w.len() {
                    0
                } else {
                    f.alive.push(true);
                    f.alive.len() - 1
                };
                let label = if j == 0 { Word::gen(i) } else { Word::empty() };
                let (from, to, label) = if l.is_inverse() { (next, v, label.inverse()) } else { (v, next, label) };
                f.add_edge(Edge { from, to, gen: l.gen(), label });
                v = next;
            }
        }
        f.run();
        f.finish()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// True iff the inputs are free generators of the subgroup they generate.
    pub fn is_free_basis(&self) -> bool {
        !self.dependent
    }

    /// Every vertex has every letter leaving it.
    pub fn is_complete(&self) -> bool {
        self.step.iter().all(|row| row.iter().all(Option::is_some))
    }

    pub fn target(&self, v: usize, l: Letter) -> Option<usize> {
        self.step[v][l.code()].as_ref().map(|(u, _)| *u)
    }

    pub fn label(&self, v: usize, l: Letter) -> Option<&Word> {
        self.step[v][l.code()].as_ref().map(|(_, w)| w)
    }

    /// Word over the generators equal to `w`, or `None` if `w` is not in the subgroup.
    pub fn rewrite(&self, w: &Word) -> Option<Word> {
        let mut v = 0;
        let mut out = Word::empty();
        for &l in w.letters() {
            let (u, lab) = self.step[v][l.code()].as_ref()?;
            out.append(lab);
            v = *u;
        }
        (v == 0).then_some(out)
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.rewrite(w).is_some()
    }
}

struct Folder {
    rank: usize,
    alive: Vec<bool>,
    edges: Vec<Option<Edge>>,
    inc: HashMap<(usize, usize), Vec<usize>>,
    dependent: bool,
}

impl Folder {
    fn add_edge(&mut self, e: Edge) -> usize {
        let id = self.edges.len();
        self.inc.entry((e.from, 2 * e.gen)).or_default().push(id);
        self.inc.entry((e.to, 2 * e.gen + 1)).or_default().push(id);
        self.edges.push(Some(e));
        id
    }

    fn remove_edge(&mut self, id: usize) -> Edge {
        let e = self.edges[id].take().expect("live edge");
        for key in [(e.from, 2 * e.gen), (e.to, 2 * e.gen + 1)] {
            if let Some(list) = self.inc.get_mut(&key) {
                list.retain(|&x| x != id);
            }
        }
        e
    }

    // endpoint and label of edge `id` read away from `v` along `code`
    fn traverse(&self, id: usize, code: usize) -> (usize, Word) {
        let e = self.edges[id].as_ref().expect("live edge");
        if code.is_multiple_of(2) {
            (e.to, e.label.clone())
        } else {
            (e.from, e.label.inverse())
        }
    }

    fn run(&mut self) {
        let mut work: Vec<(usize, usize)> = self.inc.iter().filter(|(_, l)| l.len() > 1).map(|(k, _)| *k).collect();
        work.sort_unstable();
        while let Some(key) = work.pop() {
            loop {
                let list = match self.inc.get(&key) {
                    Some(l) if l.len() > 1 => l.clone(),
                    _ => break,
                };
                let (e1, e2) = (list[0], list[1]);
                let mut a = (e1, self.traverse(e1, key.1));
                let mut b = (e2, self.traverse(e2, key.1));
                // the base never moves
                if b.1 .0 == 0 && a.1 .0 != 0 {
                    std::mem::swap(&mut a, &mut b);
                }
                let (e2, (w2, l2)) = b;
                let (w1, l1) = a.1;
                if w1 == w2 {
                    if l1 != l2 {
                        self.dependent = true;
                    }
                    self.remove_edge(e2);
                    continue;
                }
                // merge w2 into w1; paths through w2 keep their labels
                let delta = l1.inverse().mul(&l2);
                self.remove_edge(e2);
                let touching: Vec<usize> = (0..2 * self.rank)
                    .flat_map(|c| self.inc.get(&(w2, c)).cloned().unwrap_or_default())
                    .collect::<std::collections::BTreeSet<_>>()
                    .into_iter()
                    .collect();
                for id in touching {
                    let mut e = self.remove_edge(id);
                    if e.from == w2 {
                        e.from = w1;
                        e.label = delta.mul(&e.label);
                    }
                    if e.to == w2 {
                        e.to = w1;
                        e.label = e.label.mul(&delta.inverse());
                    }
                    let gen = e.gen;
                    let (f, t) = (e.from, e.to);
                    self.add_edge(e);
                    for k in [(f, 2 * gen), (t, 2 * gen + 1)] {
                        if self.inc.get(&k).is_some_and(|l| l.len() > 1) {
                            work.push(k);
                        }
                    }
                }
                self.alive[w2] = false;
            }
        }
    }

    fn finish(self) -> SubgroupGraph {
        let mut index = vec![usize::MAX; self.alive.len()];
        let mut n = 0;
        for (v, &a) in self.alive.iter().enumerate() {
            if a {
                index[v] = n;
                n += 1;
            }
        }
        let mut step = vec![vec![None; 2 * self.rank]; n];
        for e in self.edges.into_iter().flatten() {
            let (f, t) = (index[e.from], index[e.to]);
            step[t][2 * e.gen + 1] = Some((f, e.label.inverse()));
            step[f][2 * e.gen] = Some((t, e.label));
        }
        SubgroupGraph { rank: self.rank, vertices: n, step, dependent: self.dependent }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Alphabet;
    use proptest::prelude::*;

    fn words(a: &Alphabet, ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|w| a.parse(w).unwrap()).collect()
    }

    #[test]
    fn square_generates_proper_subgroup() {
        let a = Alphabet::letters(2);
        let g = SubgroupGraph::fold(2, &words(&a, &["aa", "b"]));
        assert!(g.is_free_basis());
        assert!(!g.contains(&a.parse("a").unwrap()));
        assert!(g.contains(&a.parse("aabaa").unwrap()));
    }

    #[test]
    fn nielsen_basis_folds_to_rose() {
        let a = Alphabet::letters(2);
        let g = SubgroupGraph::fold(2, &words(&a, &["Ba", "b"]));
        assert!(g.is_free_basis());
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.rewrite(&a.parse("a").unwrap()).unwrap(), Word::reduce([Letter::new(1, false), Letter::new(0, false)]));
    }

    #[test]
    fn dependent_list_is_detected() {
        let a = Alphabet::letters(2);
        assert!(!SubgroupGraph::fold(2, &words(&a, &["ab", "a", "b"])).is_free_basis());
        assert!(!SubgroupGraph::fold(2, &words(&a, &["a", "1"])).is_free_basis());
    }

    #[test]
    fn index_two_subgroup() {
        let a = Alphabet::letters(2);
        let g = SubgroupGraph::fold(2, &words(&a, &["aa", "ab", "aB"]));
        assert!(g.is_free_basis());
        assert_eq!(g.vertex_count(), 2);
        assert!(g.is_complete());
    }

    fn word(rank: usize, max: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((0..2 * rank).prop_map(Letter::from_code), 1..=max).prop_map(Word::reduce)
    }

    proptest! {
        #[test]
        fn rewrite_expands_back(gens in prop::collection::vec(word(2, 5), 1..4), pick in prop::collection::vec((0usize..4, any::<bool>()), 0..6)) {
            let g = SubgroupGraph::fold(2, &gens);
            let mut w = Word::empty();
            for (i, inv) in pick {
                let u = &gens[i % gens.len()];
                w.append(&if inv { u.inverse() } else { u.clone() });
            }
            let r = g.rewrite(&w);
            prop_assert!(r.is_some());
            let expanded = Word::reduce(r.unwrap().letters().iter().flat_map(|l| {
                let u = &gens[l.gen()];
                if l.is_inverse() { u.inverse().into_letters() } else { u.clone().into_letters() }
            }));
            prop_assert_eq!(expanded, w);
        }
    }
}
