//! Turning command-line text into library values.

use std::fs;

use mcg_covers::{fixtures, Cover, CosetGraph, DeckData, FiniteQuotientSpec};
use mcg_words::Alphabet;

use crate::Failure;

/// Parses `G,P`.
pub fn parse_surface(text: &str) -> Result<(usize, usize), String> {
    let (g, p) = text.split_once(',').ok_or_else(|| format!("expected `G,P`, found `{text}`"))?;
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("bad number `{s}`"));
    let (g, p) = (num(g)?, num(p)?);
    if (g, p) == (0, 0) {
        return Err("surface type (0,0) has rank zero".into());
    }
    Ok((g, p))
}

/// Alphabet from explicit flags, or inferred from the texts.
///
/// Texts with indexed names use the surface alphabet sized by the largest `x`, `y`
/// and `t` indices; otherwise single letters `a, b, ...` sized by the largest letter.
pub fn alphabet_for(surface: Option<(usize, usize)>, rank: Option<usize>, texts: &[&str]) -> Result<Alphabet, Failure> {
    if let Some((g, p)) = surface {
        return Ok(Alphabet::surface(g, p));
    }
    if let Some(n) = rank {
        if n == 0 || n > 26 {
            return Err(Failure::Input(format!("rank {n} is outside 1..=26")));
        }
        return Ok(Alphabet::letters(n));
    }
    let joined = texts.join(" ");
    if has_indexed_names(&joined) {
        let (mut g, mut p) = (0, 0);
        let bytes = joined.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i].to_ascii_lowercase();
            let start = i + 1;
            let mut j = start;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if matches!(c, b'x' | b'y' | b't') && j > start {
                let k: usize = joined[start..j].parse().map_err(|_| Failure::Input("index overflow".into()))?;
                if c == b't' {
                    p = p.max(k);
                } else {
                    g = g.max(k);
                }
                i = j;
            } else {
                i += 1;
            }
        }
        if (g, p) == (0, 0) {
            return Err(Failure::Input("cannot infer an alphabet; pass --surface or --rank".into()));
        }
        return Ok(Alphabet::surface(g, p));
    }
    let rank = joined
        .chars()
        .filter(|c| c.is_ascii_alphabetic())
        .map(|c| (c.to_ascii_lowercase() as u8 - b'a') as usize + 1)
        .max()
        .ok_or_else(|| Failure::Input("cannot infer an alphabet; pass --surface or --rank".into()))?;
    Ok(Alphabet::letters(rank))
}

fn has_indexed_names(text: &str) -> bool {
    let b = text.as_bytes();
    b.windows(2).any(|w| matches!(w[0].to_ascii_lowercase(), b'x' | b'y' | b't') && w[1].is_ascii_digit())
}

/// Where a cover comes from: a built-in fixture or spec and basis files.
#[derive(Clone, Debug, Default)]
pub struct CoverSource {
    pub example: Option<String>,
    pub spec: Option<String>,
    pub basis: Option<String>,
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read `{path}`: {e}")))
}

impl CoverSource {
    fn spec_text(&self) -> Result<String, Failure> {
        match (&self.example, &self.spec) {
            (Some(name), _) => Ok(fixtures::texts(name).ok_or_else(|| unknown_example(name))?.0),
            (None, Some(path)) => read(path),
            (None, None) => Err(Failure::Input("pass --example NAME or --spec FILE".into())),
        }
    }

    /// Coset graph and deck data; no basis needed.
    pub fn graph(&self) -> Result<(CosetGraph, DeckData), Failure> {
        let spec = FiniteQuotientSpec::parse(&self.spec_text()?).map_err(|e| Failure::Input(e.to_string()))?;
        let graph = CosetGraph::build(spec);
        let deck = DeckData::compute(&graph).map_err(|e| Failure::Input(e.to_string()))?;
        Ok((graph, deck))
    }

    pub fn cover(&self) -> Result<Cover, Failure> {
        let spec = self.spec_text()?;
        let basis = match (&self.example, &self.basis) {
            (_, Some(path)) => read(path)?,
            (Some(name), None) => fixtures::texts(name).ok_or_else(|| unknown_example(name))?.1.to_string(),
            (None, None) => return Err(Failure::Input("pass --basis FILE with --spec".into())),
        };
        Cover::from_texts(&spec, &basis).map_err(|e| Failure::Input(e.to_string()))
    }
}

fn unknown_example(name: &str) -> Failure {
    Failure::Input(format!("unknown example `{name}`; known: {}", fixtures::NAMES.join(", ")))
}
