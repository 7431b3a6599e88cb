use std::fmt;

use mcg_words::{Alphabet, Endomorphism, Letter, Word};

use crate::EndError;

/// The eventually periodic end `prefix * period^inf`.
///
/// Canonical form: the period is cyclically reduced and primitive, the
/// prefix does not cancel against the period, and the prefix is as short
/// as possible. Equal ends have identical fields.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct End {
    prefix: Word,
    period: Word,
}

impl End {
    /// Canonical representative of `prefix * period^inf`.
    pub fn new(prefix: &Word, period: &Word) -> Result<End, EndError> {
        let (s, core) = period.cyclic_split();
        if core.is_empty() {
            return Err(EndError::EmptyPeriod);
        }
        let mut prefix = prefix.mul(&s).into_letters();
        let mut period = core.primitive_root();
        while let (Some(&last), Some(first)) = (prefix.last(), period.first()) {
            if last != first.inverse() {
                break;
            }
            prefix.pop();
            period = period.rotate(1);
        }
        while let (Some(&last), Some(end)) = (prefix.last(), period.last()) {
            if last != end {
                break;
            }
            prefix.pop();
            period = period.rotate(period.len() - 1);
        }
        Ok(End { prefix: Word::reduce(prefix), period })
    }

    /// `u^inf` for nonempty `u`.
    pub fn power(u: &Word) -> Result<End, EndError> {
        End::new(&Word::empty(), u)
    }

    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// Letter at position `i` of the stream.
    pub fn letter(&self, i: usize) -> Letter {
        let pre = self.prefix.letters();
        if i < pre.len() {
            pre[i]
        } else {
            let per = self.period.letters();
            per[(i - pre.len()) % per.len()]
        }
    }

    /// First `n` letters of the stream.
    pub fn stream(&self, n: usize) -> Vec<Letter> {
        (0..n).map(|i| self.letter(i)).collect()
    }

    /// Membership in the shadow of `w`: the stream begins with `w`.
    pub fn in_shadow(&self, w: &Word) -> bool {
        w.letters().iter().enumerate().all(|(i, &l)| self.letter(i) == l)
    }

    /// The end `u * self`.
    pub fn left_mul(&self, u: &Word) -> End {
        End::new(&u.mul(&self.prefix), &self.period).expect("period already nonempty")
    }

    /// Image under an automorphism, as the limit of images of finite initial segments.
    ///
    /// With `e(period) = s v s^-1` and `v` cyclically reduced the result is
    /// `e(prefix) s v^inf`.
    pub fn apply(&self, e: &Endomorphism) -> Result<End, EndError> {
        let (s, v) = e.map(&self.period).cyclic_split();
        if v.is_empty() {
            return Err(EndError::EmptyPeriod);
        }
        End::new(&e.map(&self.prefix).mul(&s), &v)
    }

    /// No two adjacent stream letters are the same puncture letter.
    pub fn is_t_squarefree(&self, alphabet: &Alphabet) -> bool {
        let mut window = self.prefix.letters().to_vec();
        window.extend_from_slice(self.period.letters());
        window.extend_from_slice(self.period.letters());
        window.windows(2).all(|p| !(p[0] == p[1] && alphabet.is_puncture(p[0])))
    }

    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<End, EndError> {
        let bad = || EndError::Syntax(text.to_string());
        let (pre, rest) = text.split_once('~').ok_or_else(bad)?;
        let rest = rest.trim();
        let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let prefix = alphabet.parse(pre)?;
        let period = alphabet.parse(inner)?;
        End::new(&prefix, &period)
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        format!("{} ~ ({})", alphabet.format(&self.prefix), alphabet.format(&self.period))
    }
}

impl fmt::Debug for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} ~ ({:?})", self.prefix, self.period)
    }
}
