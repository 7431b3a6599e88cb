//! Built-in covers with verified adapted bases.

use crate::{AdaptedBasis, CosetGraph, CoverError, DeckData, FiniteQuotientSpec};

pub const NAMES: [&str; 5] = ["paper-1-even", "paper-1-odd", "paper-2", "paper-3a", "paper-3b"];

/// Every puncture generator maps to the transposition of a two-point set.
pub fn two_sheeted_spec(p: usize) -> String {
    let mut s = String::from("degree 2\n");
    for k in 1..=p {
        s.push_str(&format!("t{k}: (1 2)\n"));
    }
    s
}

const PAPER_2_SPEC: &str = "degree 4\nx1: (1 2)(3 4)\ny1: (1 3)(2 4)\n";

const PAPER_3A_SPEC: &str = "degree 6\nt1: (1 2)\nt2: (3 4)\nt3: (5 6)\n";

const PAPER_3B_SPEC: &str = "degree 6\nx1: (1 2)\ny1: (3 4)\nt1: (5 6)\n";

const PAPER_1_ODD_BASIS: &str = "\
xhat1 = t1 t1 t2 T1
yhat1 = t1 T3 T2 T2 T1 T1
that1 = t1 t1
that2 = t2 t2
that3 = t3 t3
";

const PAPER_1_EVEN_BASIS: &str = "\
xhat1 = t1 T4 T3 T1
yhat1 = t1 T3 T2 t3 t4 T1
zhat1 = t1 T4 T3 T2 T1 T1
that1 = t1 t1
that2 = t2 t2
that3 = t3 t3
that4 = t4 t4
";

// x^2, y^2 and three conjugates of the commutator
const PAPER_2_BASIS: &str = "\
xhat = x1 x1
yhat = y1 y1
that1 = Y1 Y1 X1 X1 y1 y1 x1 Y1 X1 Y1 x1 x1 y1 y1
that2 = Y1 Y1 X1 y1 x1 y1
that3 = Y1 X1 Y1 X1 y1 x1 x1 y1
";

const PAPER_3A_BASIS: &str = "\
xhat1 = t1 t2 t3 T2 T1 T3 T2 T3 T2 T1 t2 T3 T2 T1
yhat1 = t1 t2 t3 T2 T1 T3 T2 T3 T2 T2 T1 T2 t1 t2 t3 t2 t3 t1 t2 T3 T2 T1
zhat1 = t1 t2 t3 T2 T1 T3 T2 T1 T3 T3 T2 T1
zhat2 = t1 t2 t3 t3 t1 T3 T2 T1 T3 T2 T1 T1 T3 T3 T2 T1
zhat3 = t1 t2 t3 t3 t1 t1 t2 t3 t2 T1 T3 T2 T1 T3 T2 T2 T3 T2 T1 T1 T3 T3 T2 T1
that1 = t1 t2 t3 t3 T2 T1
that2 = t1 t2 t1 t1 T2 T1
that3 = t1 t2 t2 T1
that4 = t1 t3 t2 t2 T3 T1
that5 = t1 t3 t3 T1
that6 = t1 t1
that7 = t2 t3 t1 t1 T3 T2
that8 = t2 t3 t2 t2 T3 T2
that9 = t2 t3 t3 T2
that10 = t2 t2
that11 = t3 t1 t1 T3
that12 = t3 t3
";

const PAPER_3B_BASIS: &str = "\
xhat1 = X1 y1 x1 y1 t1 X1 T1 Y1 Y1 x1
xhat2 = y1 t1 y1 x1 T1 Y1 Y1 t1 Y1 x1 T1 Y1
xhat3 = y1 t1 x1 T1 Y1 X1 y1 x1 Y1 t1 Y1 X1 T1 Y1
xhat4 = y1 t1 Y1 X1 y1 t1 Y1 t1 Y1 X1 y1 x1 T1 Y1 X1 Y1 x1 y1 t1 x1 T1 Y1 X1 y1 x1 y1 t1 y1 T1 Y1
xhat5 = y1 t1 t1 y1 x1 T1 Y1 X1 y1 x1 T1 Y1 X1 Y1 x1 y1 t1 x1 T1 Y1 X1 y1 x1 T1 T1 Y1
yhat1 = X1 y1 x1 y1 t1 X1 T1 y1 y1 t1 x1 T1 Y1 X1 Y1 x1
yhat2 = y1 t1 y1 x1 x1 T1 Y1 X1 Y1 x1 y1 t1 X1 y1 T1 y1 y1 t1 X1 Y1 T1 Y1
yhat3 = y1 t1 x1 T1 Y1 X1 y1 x1 y1 t1 X1 Y1 x1 y1 T1 y1 X1 Y1 x1 y1 t1 X1 T1 Y1
yhat4 = y1 t1 Y1 X1 y1 t1 X1 Y1 x1 y1 t1 X1 Y1 T1 Y1 X1 Y1 x1 y1 t1 X1 T1 Y1 X1 y1 x1 y1 t1 X1 Y1 x1 y1 T1 y1 T1 Y1 x1 y1 T1 Y1
yhat5 = y1 t1 t1 y1 x1 T1 T1 y1 T1 Y1 x1 y1 t1 X1 Y1 x1 y1 t1 X1 T1 Y1 X1 y1 x1 y1 t1 X1 Y1 x1 y1 t1 X1 Y1 T1 T1 Y1
zhat1 = y1 t1 t1 y1 x1 T1 Y1 X1 y1 x1 T1 Y1 X1 T1 T1 Y1
zhat2 = y1 t1 t1 Y1 x1 y1 t1 x1 T1 Y1 X1 y1 x1 T1 Y1 X1 y1 T1 Y1 X1 y1 T1 T1 Y1
zhat3 = y1 t1 t1 Y1 x1 y1 t1 t1 Y1 t1 t1 X1 t1 y1 x1 T1 Y1 X1 y1 x1 T1 Y1 X1 T1 x1 T1 T1 y1 T1 T1 Y1 X1 y1 T1 T1 Y1
that1 = y1 t1 t1 Y1
that2 = x1 y1 t1 t1 Y1 X1
that3 = x1 t1 t1 X1
that4 = t1 t1
";

/// Source texts of a named cover: quotient spec and adapted basis.
pub fn texts(name: &str) -> Option<(String, &'static str)> {
    Some(match name {
        "paper-1-even" => (two_sheeted_spec(4), PAPER_1_EVEN_BASIS),
        "paper-1-odd" => (two_sheeted_spec(3), PAPER_1_ODD_BASIS),
        "paper-2" => (PAPER_2_SPEC.to_string(), PAPER_2_BASIS),
        "paper-3a" => (PAPER_3A_SPEC.to_string(), PAPER_3A_BASIS),
        "paper-3b" => (PAPER_3B_SPEC.to_string(), PAPER_3B_BASIS),
        _ => return None,
    })
}

/// A parsed cover with its deck data and adapted basis.
#[derive(Clone, Debug)]
pub struct Cover {
    pub graph: CosetGraph,
    pub deck: DeckData,
    pub basis: AdaptedBasis,
}

impl Cover {
    pub fn from_texts(spec: &str, basis: &str) -> Result<Cover, CoverError> {
        let spec = FiniteQuotientSpec::parse(spec)?;
        let basis = AdaptedBasis::parse(spec.alphabet(), basis)?;
        let graph = CosetGraph::build(spec);
        let deck = DeckData::compute(&graph)?;
        Ok(Cover { graph, deck, basis })
    }
}

pub fn load(name: &str) -> Option<Cover> {
    let (spec, basis) = texts(name)?;
    Some(Cover::from_texts(&spec, basis).expect("built-in fixtures parse"))
}
