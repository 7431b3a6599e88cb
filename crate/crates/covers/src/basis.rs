use std::collections::HashMap;

use mcg_words::{conjugate_eq, Alphabet, Letter, SubgroupGraph, Word};

use crate::{CosetGraph, CoverError, DeckData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisRole {
    HandleX,
    HandleY,
    Boundary,
    Puncture,
}

impl BasisRole {
    fn from_name(name: &str) -> Option<BasisRole> {
        [("xhat", BasisRole::HandleX), ("yhat", BasisRole::HandleY), ("zhat", BasisRole::Boundary), ("that", BasisRole::Puncture)]
            .into_iter()
            .find(|(prefix, _)| name.starts_with(prefix))
            .map(|(_, r)| r)
    }
}

/// Named basis words of the cover group, in role order `xhat, yhat, zhat, that`.
#[derive(Clone, Debug)]
pub struct AdaptedBasis {
    ambient: Alphabet,
    alphabet: Alphabet,
    words: Vec<Word>,
    roles: Vec<BasisRole>,
    folded: SubgroupGraph,
}

impl AdaptedBasis {
    pub fn new(ambient: Alphabet, entries: Vec<(String, Word)>) -> Result<AdaptedBasis, CoverError> {
        let mut roles = Vec::with_capacity(entries.len());
        for (name, w) in &entries {
            let role = BasisRole::from_name(name).ok_or_else(|| CoverError::Basis(format!("name `{name}` has no role prefix")))?;
            if roles.last().is_some_and(|&r| r > role) {
                return Err(CoverError::Basis(format!("`{name}` is out of role order")));
            }
            ambient.check(w).map_err(|e| CoverError::Basis(e.to_string()))?;
            roles.push(role);
        }
        let count = |r| roles.iter().filter(|&&x| x == r).count();
        let g = count(BasisRole::HandleX);
        if count(BasisRole::HandleY) != g {
            return Err(CoverError::Basis("unequal numbers of xhat and yhat words".into()));
        }
        let (names, words): (Vec<String>, Vec<Word>) = entries.into_iter().unzip();
        let alphabet = Alphabet::custom(names, g, words.len() - 2 * g).map_err(|e| CoverError::Basis(e.to_string()))?;
        let folded = SubgroupGraph::fold(ambient.rank(), &words);
        Ok(AdaptedBasis { ambient, alphabet, words, roles, folded })
    }

    /// One `name = word` per line; blank lines and `#` comments are skipped.
    pub fn parse(ambient: &Alphabet, text: &str) -> Result<AdaptedBasis, CoverError> {
        let mut entries = Vec::new();
        for line in text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()) {
            let (name, word) = line.split_once('=').ok_or_else(|| CoverError::Basis(format!("bad line `{line}`")))?;
            let w = ambient.parse(word.trim()).map_err(|e| CoverError::Basis(e.to_string()))?;
            entries.push((name.trim().to_string(), w));
        }
        AdaptedBasis::new(ambient.clone(), entries)
    }

    pub fn format(&self) -> String {
        self.alphabet.names().iter().zip(&self.words).map(|(n, w)| format!("{n} = {}\n", self.ambient.format(w))).collect()
    }

    pub fn ambient(&self) -> &Alphabet {
        &self.ambient
    }

    /// Alphabet on the basis names, with the boundary and puncture words in the puncture slots.
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn roles(&self) -> &[BasisRole] {
        &self.roles
    }

    pub fn rank(&self) -> usize {
        self.words.len()
    }

    /// Roles as used against `deck`: with no lifted punctures and no `zhat` names,
    /// the `that` words stand for the boundary components.
    pub fn effective_roles(&self, deck: &DeckData) -> Vec<BasisRole> {
        let has_boundary = self.roles.contains(&BasisRole::Boundary);
        let punct = self.roles.iter().filter(|&&r| r == BasisRole::Puncture).count();
        if deck.lifted_punctures == 0 && !has_boundary && punct == deck.boundary_count - 1 {
            self.roles.iter().map(|&r| if r == BasisRole::Puncture { BasisRole::Boundary } else { r }).collect()
        } else {
            self.roles.clone()
        }
    }

    /// Substitutes the basis words into a word over the basis alphabet.
    pub fn expand(&self, w: &Word) -> Word {
        let mut out = Word::empty();
        for &l in w.letters() {
            let b = &self.words[l.gen()];
            out.append(&if l.is_inverse() { b.inverse() } else { b.clone() });
        }
        out
    }

    /// Coordinates of `w` in the basis.
    pub fn rewrite(&self, w: &Word) -> Result<Word, CoverError> {
        self.folded.rewrite(w).ok_or_else(|| CoverError::NotInCover(self.ambient.format(w)))
    }

    pub fn verify(&self, graph: &CosetGraph, deck: &DeckData) -> BasisReport {
        let names = self.alphabet.names();
        let roles = self.effective_roles(deck);
        let count = |r| roles.iter().filter(|&&x| x == r).count();
        let shape = count(BasisRole::HandleX) == deck.genus
            && count(BasisRole::Boundary) + 1 == deck.boundary_count
            && count(BasisRole::Puncture) == deck.lifted_punctures;
        let outside = names.iter().zip(&self.words).filter(|(_, w)| !graph.contains(w)).map(|(n, _)| n.clone()).collect();
        let generates = self.folded.is_free_basis() && same_graph(&self.folded, graph);
        let z = self.ambient.boundary_word();
        let zc = z.pow(deck.boundary_order as i64);
        let relation = self.expand(&self.alphabet.boundary_word()) == zc;
        let a = &self.ambient;
        let mut conjugacy = Vec::new();
        let mut puncture_match = Vec::new();
        for ((name, w), role) in names.iter().zip(&self.words).zip(&roles) {
            match role {
                BasisRole::Boundary => {
                    if !conjugate_eq(w, &zc.inverse()) {
                        conjugacy.push(name.clone());
                    }
                }
                BasisRole::Puncture => {
                    let k = (0..a.p()).find(|&k| conjugate_eq(w, &Word::letter(a.t(k)).pow(deck.puncture_orders[k] as i64)));
                    if k.is_none() {
                        conjugacy.push(name.clone());
                    }
                    puncture_match.push(k);
                }
                _ => {}
            }
        }
        BasisReport { shape, outside, generates, relation, conjugacy, puncture_match }
    }
}

/// Label-preserving isomorphism from the base of the folded graph onto the coset graph.
fn same_graph(folded: &SubgroupGraph, graph: &CosetGraph) -> bool {
    if folded.vertex_count() != graph.index() || !folded.is_complete() {
        return false;
    }
    let rank = graph.alphabet().rank();
    let mut map: HashMap<usize, usize> = HashMap::from([(0, 0)]);
    let mut back: HashMap<usize, usize> = HashMap::from([(0, 0)]);
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        let s = map[&v];
        for l in Letter::all(rank) {
            let (Some(v2), s2) = (folded.target(v, l), graph.target(s, l)) else { return false };
            match (map.get(&v2), back.get(&s2)) {
                (Some(&x), _) if x != s2 => return false,
                (_, Some(&y)) if y != v2 => return false,
                (None, None) => {
                    map.insert(v2, s2);
                    back.insert(s2, v2);
                    stack.push(v2);
                }
                _ => {}
            }
        }
    }
    map.len() == graph.index()
}

/// Outcome of each adapted-basis check, reported separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReport {
    /// Role counts match `g'`, `b - 1` and `q`.
    pub shape: bool,
    /// Names of words outside the cover group.
    pub outside: Vec<String>,
    /// The words freely generate exactly the cover group.
    pub generates: bool,
    /// The product relation holds as reduced words.
    pub relation: bool,
    /// Names of words failing their conjugacy condition.
    pub conjugacy: Vec<String>,
    /// For each puncture word, the puncture whose power it conjugates to.
    pub puncture_match: Vec<Option<usize>>,
}

impl BasisReport {
    pub fn passes(&self) -> bool {
        self.shape && self.outside.is_empty() && self.generates && self.relation && self.conjugacy.is_empty()
    }

    pub fn lines(&self) -> Vec<(String, bool)> {
        vec![
            ("shape".to_string(), self.shape),
            ("membership".to_string(), self.outside.is_empty()),
            ("generation".to_string(), self.generates),
            ("relation".to_string(), self.relation),
            ("conjugacy".to_string(), self.conjugacy.is_empty()),
        ]
    }
}
