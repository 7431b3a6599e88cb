//! Whitehead graphs of word sets and the surface word sets whose graph is an
//! oriented segment.

use std::collections::BTreeMap;

use mcg_words::{Alphabet, CyclicWord, Letter, Word, WordError};
use thiserror::Error;

/// Plain words together with cyclic words, all over one alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordSet {
    pub words: Vec<Word>,
    pub cyclic: Vec<CyclicWord>,
}

impl WordSet {
    pub fn new(words: Vec<Word>, cyclic: Vec<CyclicWord>) -> WordSet {
        WordSet { words, cyclic }
    }

    /// Items separated by commas, or by whitespace when there is no comma; `[w]` marks a cyclic word.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<WordSet, WordError> {
        let mut set = WordSet::default();
        if text.contains(',') {
            for item in text.split(',').map(str::trim) {
                match item.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                    Some(inner) => set.cyclic.push(CyclicWord::new(&Word::reduce(alphabet.parse_raw(inner)?))),
                    None => set.words.push(alphabet.parse(item)?),
                }
            }
            return Ok(set);
        }
        let mut rest = text.trim();
        while !rest.is_empty() {
            if let Some(stripped) = rest.strip_prefix('[') {
                let end = stripped
                    .find(']')
                    .ok_or_else(|| WordError::Parse { text: text.to_string(), pos: text.len() - rest.len() })?;
                let raw = alphabet.parse_raw(&stripped[..end])?;
                set.cyclic.push(CyclicWord::new(&Word::reduce(raw)));
                rest = stripped[end + 1..].trim_start();
            } else {
                let end = rest.find(|c: char| c.is_whitespace() || c == '[').unwrap_or(rest.len());
                set.words.push(alphabet.parse(&rest[..end])?);
                rest = rest[end..].trim_start();
            }
        }
        Ok(set)
    }

    /// Space-separated items for one-character names, comma-separated otherwise.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        let sep = if alphabet.names().iter().all(|n| n.len() == 1) { " " } else { ", " };
        self.words
            .iter()
            .map(|w| alphabet.format(w))
            .chain(self.cyclic.iter().map(|c| format!("[{}]", alphabet.format(c.word()))))
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn len(&self) -> usize {
        self.words.len() + self.cyclic.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Directed multigraph on the `2n` letters; `a^-1 b` as a subword gives `a -> b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiteheadGraph {
    rank: usize,
    edges: BTreeMap<(Letter, Letter), usize>,
}

impl WhiteheadGraph {
    pub fn build(rank: usize, set: &WordSet) -> WhiteheadGraph {
        let mut edges = BTreeMap::new();
        let mut add = |a: Letter, b: Letter| *edges.entry((a.inverse(), b)).or_insert(0) += 1;
        for w in &set.words {
            for p in w.letters().windows(2) {
                add(p[0], p[1]);
            }
        }
        for c in &set.cyclic {
            let ls = c.word().letters();
            for i in 0..ls.len() {
                add(ls[i], ls[(i + 1) % ls.len()]);
            }
        }
        WhiteheadGraph { rank, edges }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Edges with multiplicity, sorted.
    pub fn edges(&self) -> impl Iterator<Item = ((Letter, Letter), usize)> + '_ {
        self.edges.iter().map(|(&e, &m)| (e, m))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.values().sum()
    }

    pub fn multiplicity(&self, a: Letter, b: Letter) -> usize {
        self.edges.get(&(a, b)).copied().unwrap_or(0)
    }

    fn connected(&self) -> bool {
        let n = 2 * self.rank;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in self.edges.keys() {
            let (ra, rb) = (find(&mut parent, a.code()), find(&mut parent, b.code()));
            parent[ra] = rb;
        }
        let root = find(&mut parent, 0);
        (0..n).all(|v| find(&mut parent, v) == root)
    }

    fn degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let n = 2 * self.rank;
        let (mut out, mut inc) = (vec![0; n], vec![0; n]);
        for (&(a, b), &m) in &self.edges {
            out[a.code()] += m;
            inc[b.code()] += m;
        }
        (out, inc)
    }

    /// Failed segment conditions, in the order connectivity, edge count, out-degrees, in-degrees.
    pub fn segment_failures(&self) -> Vec<SegmentFailure> {
        let mut f = Vec::new();
        if !self.connected() {
            f.push(SegmentFailure::Disconnected);
        }
        let expected = (2 * self.rank).saturating_sub(1);
        if self.edge_count() != expected {
            f.push(SegmentFailure::EdgeCount { found: self.edge_count(), expected });
        }
        let (out, inc) = self.degrees();
        let bad = |d: &[usize]| d.iter().any(|&x| x > 1) || d.iter().filter(|&&x| x == 0).count() != 1;
        if bad(&out) {
            f.push(SegmentFailure::OutDegree);
        }
        if bad(&inc) {
            f.push(SegmentFailure::InDegree);
        }
        f
    }

    pub fn is_segment(&self) -> bool {
        self.segment_failures().is_empty()
    }

    /// Vertex listing along the segment, if the graph is one.
    pub fn chain(&self) -> Option<Vec<Letter>> {
        if !self.is_segment() {
            return None;
        }
        let (_, inc) = self.degrees();
        let start = Letter::from_code(inc.iter().position(|&d| d == 0)?);
        let next: BTreeMap<Letter, Letter> = self.edges.keys().copied().collect();
        let mut seq = vec![start];
        while let Some(&b) = next.get(seq.last()?) {
            seq.push(b);
        }
        (seq.len() == 2 * self.rank).then_some(seq)
    }

    pub fn format(&self, alphabet: &Alphabet) -> Vec<String> {
        let mut out = Vec::new();
        for ((a, b), m) in self.edges() {
            for _ in 0..m {
                out.push(format!("{}->{}", alphabet.letter_name(a), alphabet.letter_name(b)));
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SegmentFailure {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {found} edges, expected {expected}")]
    EdgeCount { found: usize, expected: usize },
    #[error("out-degrees are not those of a segment")]
    OutDegree,
    #[error("in-degrees are not those of a segment")]
    InDegree,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("a surface word set has exactly one plain word, found {0}")]
    PlainWords(usize),
    #[error("word is not reduced or lies outside the alphabet")]
    BadWord,
    #[error("Whitehead graph is not an oriented segment: {0:?}")]
    NotSegment(Vec<SegmentFailure>),
}

/// Listing `a_1 .. a_2n` of all signed letters along the segment.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AssociatedSequence(Vec<Letter>);

impl AssociatedSequence {
    /// Checks that every signed letter appears once.
    pub fn new(letters: Vec<Letter>) -> Option<AssociatedSequence> {
        let n = letters.len();
        if !n.is_multiple_of(2) || n == 0 {
            return None;
        }
        let mut seen = vec![false; n];
        for l in &letters {
            if l.code() >= n || std::mem::replace(&mut seen[l.code()], true) {
                return None;
            }
        }
        Some(AssociatedSequence(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len() / 2
    }

    pub fn position(&self, l: Letter) -> usize {
        self.0.iter().position(|&x| x == l).expect("letter in sequence")
    }

    /// Positions indexed by letter code.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, l) in self.0.iter().enumerate() {
            pos[l.code()] = i;
        }
        pos
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        alphabet.format_letters(&self.0)
    }
}

/// One plain word and cyclic words whose Whitehead graph is an oriented segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceWordSet {
    rank: usize,
    plain: Word,
    cyclic: Vec<CyclicWord>,
    sequence: AssociatedSequence,
}

impl SurfaceWordSet {
    pub fn new(rank: usize, plain: Word, mut cyclic: Vec<CyclicWord>) -> Result<SurfaceWordSet, SurfaceError> {
        let in_range = |w: &Word| w.max_gen().is_none_or(|g| g < rank);
        if !in_range(&plain) || cyclic.iter().any(|c| !in_range(c.word())) {
            return Err(SurfaceError::BadWord);
        }
        cyclic.sort();
        let set = WordSet::new(vec![plain.clone()], cyclic.clone());
        let graph = WhiteheadGraph::build(rank, &set);
        let failures = graph.segment_failures();
        if !failures.is_empty() {
            return Err(SurfaceError::NotSegment(failures));
        }
        let sequence = AssociatedSequence(graph.chain().expect("segment"));
        Ok(SurfaceWordSet { rank, plain, cyclic, sequence })
    }

    pub fn from_word_set(rank: usize, set: &WordSet) -> Result<SurfaceWordSet, SurfaceError> {
        if set.words.len() != 1 {
            return Err(SurfaceError::PlainWords(set.words.len()));
        }
        SurfaceWordSet::new(rank, set.words[0].clone(), set.cyclic.clone())
    }

    /// Inverse of `sequence()`: the successor of `a_i^-1` is `a_(i+1)`.
    pub fn recover(seq: &AssociatedSequence) -> SurfaceWordSet {
        let ls = seq.letters();
        let n2 = ls.len();
        let mut succ: Vec<Option<Letter>> = vec![None; n2];
        for i in 0..n2 - 1 {
            succ[ls[i].inverse().code()] = Some(ls[i + 1]);
        }
        let mut seen = vec![false; n2];
        let mut plain = vec![ls[0]];
        seen[ls[0].code()] = true;
        while let Some(nx) = succ[plain[plain.len() - 1].code()] {
            seen[nx.code()] = true;
            plain.push(nx);
        }
        let mut cyclic = Vec::new();
        for &start in ls {
            if seen[start.code()] {
                continue;
            }
            let mut cy = vec![start];
            seen[start.code()] = true;
            loop {
                let nx = succ[cy[cy.len() - 1].code()].expect("closed chain");
                if nx == start {
                    break;
                }
                seen[nx.code()] = true;
                cy.push(nx);
            }
            cyclic.push(CyclicWord::new(&Word::reduce(cy)));
        }
        cyclic.sort();
        SurfaceWordSet {
            rank: seq.rank(),
            plain: Word::reduce(plain),
            cyclic,
            sequence: seq.clone(),
        }
    }

    /// Standard set `{zbar_1, [T_1], ..., [T_p]}`.
    pub fn standard(alphabet: &Alphabet) -> SurfaceWordSet {
        let cyclic = (0..alphabet.p())
            .map(|k| CyclicWord::new(&Word::letter(alphabet.t(k).inverse())))
            .collect();
        SurfaceWordSet::new(alphabet.rank(), alphabet.boundary_word(), cyclic).expect("standard set is a surface set")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn plain(&self) -> &Word {
        &self.plain
    }

    pub fn cyclic(&self) -> &[CyclicWord] {
        &self.cyclic
    }

    pub fn sequence(&self) -> &AssociatedSequence {
        &self.sequence
    }

    pub fn word_set(&self) -> WordSet {
        WordSet::new(vec![self.plain.clone()], self.cyclic.clone())
    }

    /// `(g, p)` with `p = |T| - 1`.
    pub fn surface_type(&self) -> (usize, usize) {
        let p = self.cyclic.len();
        ((self.rank - p) / 2, p)
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        self.word_set().format(alphabet)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abcd() -> Alphabet {
        Alphabet::letters(4)
    }

    fn seq(a: &Alphabet, s: &str) -> AssociatedSequence {
        AssociatedSequence::new(a.parse_raw(s).unwrap()).unwrap()
    }

    #[test]
    fn chain_of_example_one() {
        let a = abcd();
        let set = WordSet::parse(&a, "AdcB [Db] [Ca]").unwrap();
        let g = WhiteheadGraph::build(4, &set);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(a.format_letters(&g.chain().unwrap()), "A,C,B,D,c,a,d,b");
    }

    #[test]
    fn empty_set_has_no_edges() {
        let g = WhiteheadGraph::build(3, &WordSet::default());
        assert_eq!(g.edge_count(), 0);
        assert!(!g.is_segment());
    }

    #[test]
    fn double_edge_in_example_three() {
        let a = abcd();
        let set = WordSet::parse(&a, "AdcB dc [Db] [Ca]").unwrap();
        let g = WhiteheadGraph::build(4, &set);
        let (d, c) = (a.parse_raw("D").unwrap()[0], a.parse_raw("c").unwrap()[0]);
        assert_eq!(g.multiplicity(d, c), 2);
        let f = g.segment_failures();
        assert!(f.contains(&SegmentFailure::EdgeCount { found: 8, expected: 7 }));
    }

    #[test]
    fn disconnected_example_two() {
        let a = abcd();
        let set = WordSet::parse(&a, "AdcB Db [Ca]").unwrap();
        let f = WhiteheadGraph::build(4, &set).segment_failures();
        assert_eq!(f[0], SegmentFailure::Disconnected);
    }

    #[test]
    fn recover_examples() {
        let a = abcd();
        let t = SurfaceWordSet::recover(&seq(&a, "abcdABCD"));
        assert_eq!(t.format(&a), "aBcDAbCd");
        let t = SurfaceWordSet::recover(&seq(&a, "abcdDCBA"));
        let expected = WordSet::parse(&a, "a [bA] [cB] [dC] [D]").unwrap();
        assert_eq!(t.plain(), &expected.words[0]);
        let mut cyc = expected.cyclic.clone();
        cyc.sort();
        assert_eq!(t.cyclic(), cyc.as_slice());
    }

    #[test]
    fn surface_sets_round_trip_with_indexed_names() {
        let s = Alphabet::surface(1, 2);
        let t = SurfaceWordSet::standard(&s);
        let text = t.format(&s);
        assert_eq!(text, "X1 Y1 x1 y1 t1 t2, [T1], [T2]");
        let again = SurfaceWordSet::from_word_set(s.rank(), &WordSet::parse(&s, &text).unwrap()).unwrap();
        assert_eq!(again, t);
        assert_eq!(WordSet::parse(&s, "t1 [T1]").unwrap().len(), 2);
    }

    #[test]
    fn surface_types() {
        let a = abcd();
        let set = WordSet::parse(&a, "AdcB [Db] [Ca]").unwrap();
        assert_eq!(SurfaceWordSet::from_word_set(4, &set).unwrap().surface_type(), (1, 2));
        let one = SurfaceWordSet::recover(&seq(&a, "abcdABCD"));
        assert_eq!(one.surface_type(), (2, 0));
        let s = Alphabet::surface(2, 3);
        assert_eq!(SurfaceWordSet::standard(&s).surface_type(), (2, 3));
    }

    #[test]
    fn standard_sequences() {
        let s = Alphabet::surface(1, 0);
        let t = SurfaceWordSet::standard(&s);
        assert_eq!(t.sequence().format(&s), "X1, y1, x1, Y1");
        let s = Alphabet::surface(0, 1);
        assert_eq!(SurfaceWordSet::standard(&s).sequence().format(&s), "t1, T1");
        let s = Alphabet::surface(2, 2);
        assert_eq!(
            SurfaceWordSet::standard(&s).sequence().format(&s),
            "X1, y1, x1, Y1, X2, y2, x2, Y2, t1, T1, t2, T2"
        );
    }

    #[test]
    fn round_trip_standard() {
        for g in 0..=3 {
            for p in 0..=4 {
                if g == 0 && p == 0 {
                    continue;
                }
                let s = Alphabet::surface(g, p);
                let t = SurfaceWordSet::standard(&s);
                assert_eq!(SurfaceWordSet::recover(t.sequence()), t);
            }
        }
    }
}
