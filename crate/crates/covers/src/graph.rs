use std::collections::{HashMap, VecDeque};

use mcg_words::{Alphabet, Endomorphism, Letter, Word};

use crate::{CoverError, Perm};

/// Images of the generators in a finite permutation group; the cover is the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuotientSpec {
    alphabet: Alphabet,
    degree: usize,
    images: Vec<Perm>,
}

impl FiniteQuotientSpec {
    pub fn new(alphabet: Alphabet, images: Vec<Perm>) -> Result<FiniteQuotientSpec, CoverError> {
        if images.len() != alphabet.rank() {
            return Err(CoverError::Spec(format!("expected {} generator images, found {}", alphabet.rank(), images.len())));
        }
        let degree = images.first().map_or(1, Perm::degree);
        if images.iter().any(|p| p.degree() != degree) {
            return Err(CoverError::Spec("permutations have different degrees".into()));
        }
        Ok(FiniteQuotientSpec { alphabet, degree, images })
    }

    /// `degree D` followed by one `name: cycles` line per generator.
    ///
    /// The surface type is read from the generator names; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<FiniteQuotientSpec, CoverError> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| CoverError::Spec("empty spec".into()))?;
        let degree: usize = header
            .strip_prefix("degree")
            .and_then(|s| s.trim().parse().ok())
            .filter(|&d| d >= 1)
            .ok_or_else(|| CoverError::Spec(format!("bad header `{header}`")))?;
        let mut entries: Vec<(char, usize, Perm)> = Vec::new();
        for line in lines {
            let (name, cyc) = line.split_once(':').ok_or_else(|| CoverError::Spec(format!("bad line `{line}`")))?;
            let name = name.trim();
            let mut cs = name.chars();
            let kind = cs.next().filter(|c| matches!(c, 'x' | 'y' | 't'));
            let idx = cs.as_str().parse::<usize>().ok().filter(|&i| i >= 1);
            let (Some(kind), Some(idx)) = (kind, idx) else {
                return Err(CoverError::Spec(format!("bad generator name `{name}`")));
            };
            if entries.iter().any(|(k, i, _)| *k == kind && *i == idx) {
                return Err(CoverError::Spec(format!("generator `{name}` given twice")));
            }
            entries.push((kind, idx, Perm::parse_cycles(degree, cyc)?));
        }
        let max = |k: char| entries.iter().filter(|e| e.0 == k).map(|e| e.1).max().unwrap_or(0);
        let (g, p) = (max('x').max(max('y')), max('t'));
        let alphabet = Alphabet::surface(g, p);
        if entries.len() != alphabet.rank() {
            return Err(CoverError::Spec(format!("expected images for all {} generators", alphabet.rank())));
        }
        let mut images = vec![Perm::identity(degree); alphabet.rank()];
        for (kind, idx, perm) in entries {
            let gen = match kind {
                'x' => idx - 1,
                'y' => g + idx - 1,
                _ => 2 * g + idx - 1,
            };
            images[gen] = perm;
        }
        FiniteQuotientSpec::new(alphabet, images)
    }

    pub fn format(&self) -> String {
        let mut out = format!("degree {}\n", self.degree);
        for (name, p) in self.alphabet.names().iter().zip(&self.images) {
            out.push_str(&format!("{name}: {p}\n"));
        }
        out
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    pub fn image_of(&self, w: &Word) -> Perm {
        let mut p = Perm::identity(self.degree);
        for &l in w.letters() {
            let g = &self.images[l.gen()];
            p = if l.is_inverse() { p.then(&g.inverse()) } else { p.then(g) };
        }
        p
    }
}

/// Cayley graph of the finite quotient; loops at the base spell the cover group.
#[derive(Clone, Debug)]
pub struct CosetGraph {
    spec: FiniteQuotientSpec,
    states: Vec<Perm>,
    index: HashMap<Perm, usize>,
    // step[s][code]
    step: Vec<Vec<usize>>,
    // tree path from the base; parent[s] = (predecessor, letter read)
    tree: Vec<Word>,
    parent: Vec<Option<(usize, Letter)>>,
}

impl CosetGraph {
    pub fn build(spec: FiniteQuotientSpec) -> CosetGraph {
        let rank = spec.alphabet.rank();
        let gens: Vec<Perm> = spec.images.clone();
        let inverses: Vec<Perm> = gens.iter().map(Perm::inverse).collect();
        let base = Perm::identity(spec.degree);
        let mut states = vec![base.clone()];
        let mut index = HashMap::from([(base, 0)]);
        let mut tree = vec![Word::empty()];
        let mut parent = vec![None];
        let mut step: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(s) = queue.pop_front() {
            let mut row = vec![0; 2 * rank];
            for l in Letter::all(rank) {
                let g = if l.is_inverse() { &inverses[l.gen()] } else { &gens[l.gen()] };
                let t = states[s].then(g);
                let id = match index.get(&t) {
                    Some(&id) => id,
                    None => {
                        let id = states.len();
                        index.insert(t.clone(), id);
                        states.push(t);
                        let mut w = tree[s].clone();
                        w.push(l);
                        tree.push(w);
                        parent.push(Some((s, l)));
                        queue.push_back(id);
                        id
                    }
                };
                row[l.code()] = id;
            }
            if step.len() <= s {
                step.resize(s + 1, Vec::new());
            }
            step[s] = row;
        }
        CosetGraph { spec, states, index, step, tree, parent }
    }

    pub fn spec(&self) -> &FiniteQuotientSpec {
        &self.spec
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.spec.alphabet
    }

    /// Order of the quotient group.
    pub fn index(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[Perm] {
        &self.states
    }

    pub fn state_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn target(&self, s: usize, l: Letter) -> usize {
        self.step[s][l.code()]
    }

    pub fn tree_word(&self, s: usize) -> &Word {
        &self.tree[s]
    }

    pub fn trace(&self, from: usize, w: &Word) -> usize {
        w.letters().iter().fold(from, |s, &l| self.step[s][l.code()])
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.trace(0, w) == 0
    }

    /// Schreier generators of the cover group for the breadth-first spanning tree.
    pub fn schreier_basis(&self) -> Vec<Word> {
        let rank = self.alphabet().rank();
        let mut out = Vec::new();
        for s in 0..self.states.len() {
            for g in 0..rank {
                let l = Letter::new(g, false);
                let t = self.step[s][l.code()];
                if self.parent[t] == Some((s, l)) || self.parent[s] == Some((t, l.inverse())) {
                    continue;
                }
                let mut w = self.tree[s].clone();
                w.push(l);
                out.push(w.mul(&self.tree[t].inverse()));
            }
        }
        out
    }

    /// `m(n - 1) + 1`.
    pub fn cover_rank(&self) -> usize {
        self.index() * (self.alphabet().rank() - 1) + 1
    }

    /// Images of the Schreier basis stay in the cover group.
    pub fn is_invariant(&self, e: &Endomorphism) -> bool {
        e.alphabet() == self.alphabet() && self.schreier_basis().iter().all(|w| self.contains(&e.map(w)))
    }

    /// Left multiplication of a state by the group element `p`.
    pub fn left_mul(&self, p: &Perm, s: usize) -> usize {
        self.index[&p.then(&self.states[s])]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1(p: usize) -> CosetGraph {
        let text = std::iter::once("degree 2".to_string()).chain((1..=p).map(|k| format!("t{k}: (1 2)"))).collect::<Vec<_>>().join("\n");
        CosetGraph::build(FiniteQuotientSpec::parse(&text).unwrap())
    }

    #[test]
    fn two_sheeted_cover() {
        let g = example1(3);
        assert_eq!(g.index(), 2);
        let a = g.alphabet().clone();
        assert!(g.contains(&a.parse("t1 t2").unwrap()));
        assert!(!g.contains(&a.parse("t1").unwrap()));
        assert!(g.contains(&Word::empty()));
        assert_eq!(g.schreier_basis().len(), 5);
    }

    #[test]
    fn spec_round_trip() {
        let s = FiniteQuotientSpec::parse("degree 4\nx1: (1 2)(3 4)\ny1: (1 3)(2 4)\n").unwrap();
        assert_eq!(s.alphabet(), &Alphabet::surface(1, 0));
        assert_eq!(FiniteQuotientSpec::parse(&s.format()).unwrap(), s);
    }

    #[test]
    fn spec_errors() {
        assert!(FiniteQuotientSpec::parse("").is_err());
        assert!(FiniteQuotientSpec::parse("degree 2\nt2: (1 2)").is_err());
        assert!(FiniteQuotientSpec::parse("degree 2\nt1: (1 3)").is_err());
        assert!(FiniteQuotientSpec::parse("degree 2\nq1: (1 2)").is_err());
        assert!(FiniteQuotientSpec::parse("degree 2\nt1: (1 2)\nt1: ()").is_err());
    }

    #[test]
    fn tree_words_reach_states() {
        let g = example1(2);
        for s in 0..g.index() {
            assert_eq!(g.trace(0, g.tree_word(s)), s);
        }
    }
}
