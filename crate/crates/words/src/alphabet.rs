use std::sync::Arc;

use crate::{Letter, Word, WordError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    HandleX,
    HandleY,
    Puncture,
}

/// Generator roster `x_1..x_g, y_1..y_g, t_1..t_p`, possibly renamed.
///
/// A name is lowercase-initial; its capitalized form denotes the inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Arc<[String]>,
    g: usize,
    p: usize,
}

impl Alphabet {
    pub fn surface(g: usize, p: usize) -> Alphabet {
        let names = (1..=g)
            .map(|i| format!("x{i}"))
            .chain((1..=g).map(|i| format!("y{i}")))
            .chain((1..=p).map(|k| format!("t{k}")))
            .collect::<Vec<_>>();
        Alphabet { names: names.into(), g, p }
    }

    /// `names.len()` must be `2g + p`, ordered by role.
    pub fn custom(names: Vec<String>, g: usize, p: usize) -> Result<Alphabet, WordError> {
        if names.len() != 2 * g + p {
            return Err(WordError::ImageCount { expected: 2 * g + p, found: names.len() });
        }
        for (i, name) in names.iter().enumerate() {
            let mut chars = name.chars();
            let ok = chars.next().is_some_and(|c| c.is_ascii_lowercase())
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok || names[..i].contains(name) {
                return Err(WordError::BadName(name.clone()));
            }
        }
        Ok(Alphabet { names: names.into(), g, p })
    }

    /// Rank-`n` alphabet `a, b, c, ...` with every generator tagged as a puncture.
    pub fn letters(n: usize) -> Alphabet {
        assert!(n <= 26);
        let names = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        Alphabet { names, g: 0, p: n }
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn role(&self, gen: usize) -> Role {
        if gen < self.g {
            Role::HandleX
        } else if gen < 2 * self.g {
            Role::HandleY
        } else {
            Role::Puncture
        }
    }

    pub fn x(&self, i: usize) -> Letter {
        assert!(i < self.g);
        Letter::new(i, false)
    }

    pub fn y(&self, i: usize) -> Letter {
        assert!(i < self.g);
        Letter::new(self.g + i, false)
    }

    pub fn t(&self, k: usize) -> Letter {
        assert!(k < self.p);
        Letter::new(2 * self.g + k, false)
    }

    pub fn is_puncture(&self, l: Letter) -> bool {
        self.role(l.gen()) == Role::Puncture
    }

    pub fn check(&self, w: &Word) -> Result<(), WordError> {
        match w.max_gen() {
            Some(gen) if gen >= self.rank() => Err(WordError::AlphabetMismatch { gen, rank: self.rank() }),
            _ => Ok(()),
        }
    }

    /// `prod [x_i, y_i] * prod t_k` with `[a, b] = a^-1 b^-1 a b`.
    pub fn boundary_word(&self) -> Word {
        let mut w = Word::empty();
        for i in 0..self.g {
            let (x, y) = (self.x(i), self.y(i));
            w.append(&Word::reduce([x.inverse(), y.inverse(), x, y]));
        }
        for k in 0..self.p {
            w.push(self.t(k));
        }
        w
    }

    pub fn boundary_inverse(&self) -> Word {
        self.boundary_word().inverse()
    }

    /// False iff two adjacent letters are the same puncture letter.
    pub fn is_t_squarefree(&self, w: &Word) -> bool {
        w.letters().windows(2).all(|p| !(p[0] == p[1] && self.is_puncture(p[0])))
    }

    pub fn letter_name(&self, l: Letter) -> String {
        let name = &self.names[l.gen()];
        if l.is_inverse() {
            let mut c = name.chars();
            let head = c.next().map(|h| h.to_ascii_uppercase()).unwrap_or_default();
            std::iter::once(head).chain(c).collect()
        } else {
            name.clone()
        }
    }

    fn compact(&self) -> bool {
        self.names.iter().all(|n| n.len() == 1)
    }

    /// `1` for the empty word; juxtaposition for one-character names, spaces otherwise.
    pub fn format(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let sep = if self.compact() { "" } else { " " };
        w.letters().iter().map(|&l| self.letter_name(l)).collect::<Vec<_>>().join(sep)
    }

    pub fn format_letters(&self, ls: &[Letter]) -> String {
        let sep = if self.compact() { "," } else { ", " };
        ls.iter().map(|&l| self.letter_name(l)).collect::<Vec<_>>().join(sep)
    }

    /// Longest match against the roster, case of the first character giving the sign.
    pub fn parse_letter_at(&self, s: &str, pos: usize) -> Option<(Letter, usize)> {
        let rest = &s[pos..];
        let mut best: Option<(Letter, usize)> = None;
        for (gen, name) in self.names.iter().enumerate() {
            if rest.len() < name.len() || !rest.is_char_boundary(name.len()) {
                continue;
            }
            let cand = &rest[..name.len()];
            let inverse = if cand == name.as_str() {
                false
            } else if cand.is_char_boundary(1) && cand[1..] == name[1..] && cand.as_bytes()[0] == name.as_bytes()[0].to_ascii_uppercase() {
                true
            } else {
                continue;
            };
            if best.is_none_or(|(_, len)| name.len() > len) {
                best = Some((Letter::new(gen, inverse), name.len()));
            }
        }
        best
    }

    pub fn parse(&self, s: &str) -> Result<Word, WordError> {
        Ok(Word::reduce(self.parse_raw(s)?))
    }

    /// Letters as written, without reduction.
    pub fn parse_raw(&self, s: &str) -> Result<Vec<Letter>, WordError> {
        let mut out = Vec::new();
        let mut pos = 0;
        while pos < s.len() {
            let c = s[pos..].chars().next().unwrap_or(' ');
            if c.is_whitespace() {
                pos += c.len_utf8();
                continue;
            }
            if let Some((l, len)) = self.parse_letter_at(s, pos) {
                out.push(l);
                pos += len;
            } else if c == '1' {
                pos += 1;
            } else {
                return Err(WordError::Parse { text: s.to_string(), pos });
            }
        }
        Ok(out)
    }
}
