use mcg_words::{conjugate_eq, Alphabet, Endomorphism, Word, WordError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MembershipError {
    #[error("map is not an automorphism")]
    NotAutomorphism,
    #[error("boundary word is not fixed")]
    BoundaryMoved,
    #[error("image of puncture {0} is not conjugate to a puncture generator")]
    PunctureClassBroken(usize),
    #[error("map is over a different alphabet than the ({0}, {1}) surface")]
    WrongAlphabet(usize, usize),
    #[error("unknown catalog generator `{0}`")]
    UnknownGenerator(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A certified element of the algebraic mapping class group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McgElement {
    endo: Endomorphism,
    /// `perm[k]` is the puncture that `k` is carried to, 0-based.
    perm: Vec<usize>,
    provenance: Option<String>,
}

impl McgElement {
    pub fn endomorphism(&self) -> &Endomorphism {
        &self.endo
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn with_provenance(mut self, text: impl Into<String>) -> McgElement {
        self.provenance = Some(text.into());
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.endo.alphabet()
    }

    pub fn identity(g: usize, p: usize) -> McgElement {
        McgElement { endo: Endomorphism::identity(Alphabet::surface(g, p)), perm: (0..p).collect(), provenance: Some(String::new()) }
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &McgElement) -> McgElement {
        let provenance = match (&self.provenance, &other.provenance) {
            (Some(a), Some(b)) => Some([a.as_str(), b.as_str()].iter().filter(|s| !s.is_empty()).copied().collect::<Vec<_>>().join(" ")),
            _ => None,
        };
        McgElement {
            endo: self.endo.then(&other.endo),
            perm: self.perm.iter().map(|&k| other.perm[k]).collect(),
            provenance,
        }
    }

    pub fn inverse(&self) -> McgElement {
        let mut perm = vec![0; self.perm.len()];
        for (k, &j) in self.perm.iter().enumerate() {
            perm[j] = k;
        }
        let provenance = self.provenance.as_ref().map(|s| s.split_whitespace().rev().map(invert_name).collect::<Vec<_>>().join(" "));
        McgElement { endo: self.endo.inverse().expect("certified automorphism"), perm, provenance }
    }
}

/// Certifies `e` as an automorphism fixing the boundary word and permuting puncture classes.
pub fn verify_membership(e: &Endomorphism, g: usize, p: usize) -> Result<McgElement, MembershipError> {
    let a = e.alphabet();
    if a.g() != g || a.p() != p || a.rank() != 2 * g + p {
        return Err(MembershipError::WrongAlphabet(g, p));
    }
    if !e.is_automorphism() {
        return Err(MembershipError::NotAutomorphism);
    }
    let z = a.boundary_word();
    if e.map(&z) != z {
        return Err(MembershipError::BoundaryMoved);
    }
    let mut perm = Vec::with_capacity(p);
    let mut used = vec![false; p];
    for k in 0..p {
        let im = e.image_of_letter(a.t(k));
        let j = (0..p)
            .find(|&j| !used[j] && conjugate_eq(&im, &Word::letter(a.t(j))))
            .ok_or(MembershipError::PunctureClassBroken(k + 1))?;
        used[j] = true;
        perm.push(j);
    }
    Ok(McgElement { endo: e.clone(), perm, provenance: None })
}

/// Catalog generator names in order: braids `s{i}`, then `a{i}`, `b{i}` per handle.
pub fn catalog_names(g: usize, p: usize) -> Vec<String> {
    let mut out: Vec<String> = (1..p).map(|i| format!("s{i}")).collect();
    for i in 1..=g {
        out.push(format!("a{i}"));
        out.push(format!("b{i}"));
    }
    out
}

fn invert_name(name: &str) -> String {
    let mut cs = name.chars();
    match cs.next() {
        Some(c) if c.is_ascii_uppercase() => format!("{}{}", c.to_ascii_lowercase(), cs.as_str()),
        Some(c) => format!("{}{}", c.to_ascii_uppercase(), cs.as_str()),
        None => String::new(),
    }
}

/// The generator called `name` (uppercase first letter for the inverse; a bare letter means index 1).
pub fn catalog_generator(g: usize, p: usize, name: &str) -> Result<McgElement, MembershipError> {
    let unknown = || MembershipError::UnknownGenerator(name.to_string());
    let mut cs = name.chars();
    let head = cs.next().ok_or_else(unknown)?;
    let rest = cs.as_str();
    let i: usize = if rest.is_empty() { 1 } else { rest.parse().map_err(|_| unknown())? };
    let a = Alphabet::surface(g, p);
    let mut images: Vec<Word> = (0..a.rank()).map(Word::gen).collect();
    match head.to_ascii_lowercase() {
        's' if i >= 1 && i < p => {
            let (ti, tj) = (a.t(i - 1), a.t(i));
            images[ti.gen()] = Word::letter(tj);
            images[tj.gen()] = Word::letter(ti).conj(&Word::letter(tj));
        }
        'a' if i >= 1 && i <= g => {
            let (x, y) = (a.x(i - 1), a.y(i - 1));
            images[x.gen()] = Word::letter(y.inverse()).mul(&Word::letter(x));
        }
        'b' if i >= 1 && i <= g => {
            let (x, y) = (a.x(i - 1), a.y(i - 1));
            images[y.gen()] = Word::letter(x).mul(&Word::letter(y));
        }
        _ => return Err(unknown()),
    }
    let e = Endomorphism::new(a, images)?;
    let el = verify_membership(&e, g, p)?;
    let canonical = format!("{}{}", head.to_ascii_lowercase(), i);
    Ok(if head.is_ascii_uppercase() { el.with_provenance(canonical).inverse() } else { el.with_provenance(canonical) })
}

/// Braids, then the two handle twists per handle, each certified.
pub fn generator_catalog(g: usize, p: usize) -> Vec<McgElement> {
    catalog_names(g, p).iter().map(|n| catalog_generator(g, p, n).expect("catalog generators are certified")).collect()
}

/// Product of catalog generators written as space-separated names, applied left to right.
pub fn parse_provenance(g: usize, p: usize, text: &str) -> Result<McgElement, MembershipError> {
    let mut out = McgElement::identity(g, p);
    for name in text.split_whitespace() {
        out = out.then(&catalog_generator(g, p, name)?);
    }
    Ok(out)
}

/// Seeded product of `length` catalog letters with no letter followed by its inverse.
pub fn random_element(g: usize, p: usize, length: usize, seed: u64) -> McgElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_with(&mut rng, g, p, length)
}

/// Like `random_element`, resampling until the result is not the identity.
pub fn random_nontrivial(g: usize, p: usize, length: usize, seed: u64) -> McgElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if catalog_names(g, p).is_empty() {
        return McgElement::identity(g, p);
    }
    loop {
        let e = random_with(&mut rng, g, p, length.max(1));
        if !e.endomorphism().is_identity() {
            return e;
        }
    }
}

fn random_with(rng: &mut ChaCha8Rng, g: usize, p: usize, length: usize) -> McgElement {
    let names = catalog_names(g, p);
    let mut letters: Vec<String> = names.iter().cloned().chain(names.iter().map(|n| invert_name(n))).collect();
    letters.sort();
    let mut chosen: Vec<String> = Vec::with_capacity(length);
    if letters.is_empty() {
        return McgElement::identity(g, p);
    }
    while chosen.len() < length {
        let cand = &letters[rng.gen_range(0..letters.len())];
        if letters.len() > 1 && chosen.last().map(|l| invert_name(l)) == Some(cand.clone()) {
            continue;
        }
        chosen.push(cand.clone());
    }
    parse_provenance(g, p, &chosen.join(" ")).expect("catalog names")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_transposes() {
        let s = catalog_generator(0, 2, "s1").unwrap();
        assert_eq!(s.permutation(), &[1, 0]);
    }

    #[test]
    fn handle_twists_fix_punctures() {
        for e in generator_catalog(1, 0) {
            assert!(e.permutation().is_empty());
        }
        let c = generator_catalog(1, 2);
        assert_eq!(c.len(), 3);
        assert!(c.iter().all(|e| verify_membership(e.endomorphism(), 1, 2).is_ok()));
    }

    #[test]
    fn swap_moves_boundary() {
        let e = Endomorphism::parse(Alphabet::surface(1, 0), &["y1", "x1"]).unwrap();
        assert_eq!(verify_membership(&e, 1, 0), Err(MembershipError::BoundaryMoved));
    }

    #[test]
    fn non_automorphism_named() {
        let e = Endomorphism::parse(Alphabet::surface(0, 2), &["t1 t1", "t2"]).unwrap();
        assert_eq!(verify_membership(&e, 0, 2), Err(MembershipError::NotAutomorphism));
    }

    #[test]
    fn broken_puncture_class() {
        // fixes t1 t2 t3 but sends t1 outside every puncture class
        let e = Endomorphism::parse(Alphabet::surface(0, 3), &["t1 t2", "T2", "t2 t3"]).unwrap();
        assert_eq!(verify_membership(&e, 0, 3), Err(MembershipError::PunctureClassBroken(1)));
    }

    #[test]
    fn braid_relation_for_handle() {
        let a = catalog_generator(1, 0, "a").unwrap();
        let b = catalog_generator(1, 0, "b1").unwrap();
        assert_eq!(a.then(&b).then(&a).endomorphism(), b.then(&a).then(&b).endomorphism());
    }

    #[test]
    fn inverse_names() {
        let e = parse_provenance(1, 2, "a1 S1 b1").unwrap();
        let inv = e.inverse();
        assert_eq!(inv.provenance(), Some("B1 s1 A1"));
        assert!(e.then(&inv).endomorphism().is_identity());
        assert_eq!(parse_provenance(1, 2, "B1 s1 A1").unwrap().endomorphism(), inv.endomorphism());
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(random_element(1, 3, 12, 7), random_element(1, 3, 12, 7));
        assert!(random_element(1, 3, 0, 7).endomorphism().is_identity());
        assert!(!random_nontrivial(0, 2, 2, 3).endomorphism().is_identity());
        let e = random_element(1, 3, 9, 1);
        assert_eq!(e.provenance().unwrap().split_whitespace().count(), 9);
        assert_eq!(parse_provenance(1, 3, e.provenance().unwrap()).unwrap().endomorphism(), e.endomorphism());
    }

    #[test]
    fn unknown_names() {
        assert!(catalog_generator(1, 0, "s1").is_err());
        assert!(catalog_generator(0, 3, "q1").is_err());
        assert!(catalog_generator(0, 3, "s3").is_err());
    }
}
