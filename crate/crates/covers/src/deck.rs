use mcg_words::Word;

use crate::{CosetGraph, CoverError};

/// Covering data of the kernel cover: sheets, boundary components, lifted punctures and genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeckData {
    /// Number of sheets `m`.
    pub index: usize,
    /// Order `c` of the boundary word in the quotient.
    pub boundary_order: usize,
    /// `b = m / c`.
    pub boundary_count: usize,
    /// `d_k`, order of `t_k` in the quotient.
    pub puncture_orders: Vec<usize>,
    /// `m_k = m / d_k`, lifts of puncture `k`.
    pub puncture_lifts: Vec<usize>,
    /// `q`, the sum of the lifts.
    pub lifted_punctures: usize,
    pub cover_rank: usize,
    /// `g'` with `2g' + b - 1 + q = cover_rank`.
    pub genus: usize,
    /// One word per right coset of `<t_k>`, for each puncture.
    pub puncture_reps: Vec<Vec<Word>>,
    /// One word per right coset of `<boundary>` other than the trivial one.
    pub boundary_reps: Vec<Word>,
}

impl DeckData {
    pub fn compute(graph: &CosetGraph) -> Result<DeckData, CoverError> {
        let a = graph.alphabet();
        let m = graph.index();
        let spec = graph.spec();
        let z = spec.image_of(&a.boundary_word());
        let c = z.order();
        let b = m / c;
        let orders: Vec<usize> = (0..a.p()).map(|k| spec.images()[a.t(k).gen()].order()).collect();
        let lifts: Vec<usize> = orders.iter().map(|d| m / d).collect();
        let q: usize = lifts.iter().sum();
        let rank = graph.cover_rank();
        let twice_genus = rank
            .checked_sub(b - 1 + q)
            .filter(|v| v % 2 == 0)
            .ok_or(CoverError::Inconsistent { rank, boundary: b, punctures: q })?;
        let puncture_reps = (0..a.p()).map(|k| coset_reps(graph, &spec.images()[a.t(k).gen()])).collect();
        let mut boundary_reps = coset_reps(graph, &z);
        boundary_reps.retain(|w| !w.is_empty());
        Ok(DeckData {
            index: m,
            boundary_order: c,
            boundary_count: b,
            puncture_orders: orders,
            puncture_lifts: lifts,
            lifted_punctures: q,
            cover_rank: rank,
            genus: twice_genus / 2,
            puncture_reps,
            boundary_reps,
        })
    }

    /// Common value of the `d_k`, if any.
    pub fn common_order(&self) -> Option<usize> {
        let first = *self.puncture_orders.first()?;
        self.puncture_orders.iter().all(|&d| d == first).then_some(first)
    }
}

/// Tree words of the least state in each orbit of left multiplication by `p`.
fn coset_reps(graph: &CosetGraph, p: &crate::Perm) -> Vec<Word> {
    let m = graph.index();
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for s in 0..m {
        if seen[s] {
            continue;
        }
        out.push(graph.tree_word(s).clone());
        let mut t = s;
        while !seen[t] {
            seen[t] = true;
            t = graph.left_mul(p, t);
        }
    }
    out
}
