//! The suite plan run by `mcg suites`, plus the injectivity and normal-closure suites
//! that combine several library crates.

use mcg_covers::fixtures;
use mcg_embedding::{check_normal_closure, embed, EmbeddingContext};
use mcg_ends::{lemma_rep_suite, order_preservation_suite, t_squarefree_theorem_suite, SuiteReport};
use mcg_mccool::random_nontrivial;
use mcg_torsion::psi;

/// Surface types and fixtures sampled by the injectivity suite.
pub const INJECTIVITY_TYPES: [(usize, usize); 3] = [(0, 3), (1, 1), (1, 2)];
pub const INJECTIVITY_ORDERS: [u32; 2] = [2, 3];

/// Fixture cover whose embedding is checked for the surface type, if any.
pub fn embedding_fixture(g: usize, p: usize) -> Option<&'static str> {
    match (g, p) {
        (0, 3) => Some("paper-3a"),
        (1, 1) => Some("paper-3b"),
        _ => None,
    }
}

fn case_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index as u64)
}

/// Random nonidentity elements of length `1..=8` have nonidentity images under the
/// torsion map of every order in `orders` and under the fixture embedding, if given.
pub fn injectivity_suite(g: usize, p: usize, orders: &[u32], fixture: Option<&str>, samples: usize, seed: u64) -> SuiteReport {
    let mut r = SuiteReport { name: format!("injectivity ({g},{p})"), cases: 0, checks: 0, failures: Vec::new() };
    let ctx = fixture.map(|name| {
        let cover = fixtures::load(name).expect("known fixture");
        EmbeddingContext::new(cover).expect("fixture supports embedding")
    });
    for i in 0..samples {
        let m = random_nontrivial(g, p, 1 + i % 8, case_seed(seed, i));
        let what = m.provenance().unwrap_or("?").to_string();
        r.cases += 1;
        for &d in orders {
            if (g, p, d) == (0, 2, 2) {
                continue;
            }
            r.checks += 1;
            if psi(&m, d).is_identity() {
                r.failures.push(format!("torsion map of order {d} kills {what}"));
            }
        }
        if let Some(ctx) = &ctx {
            r.checks += 1;
            match embed(ctx, &m) {
                Ok(e) if e.endomorphism().is_identity() => r.failures.push(format!("embedding kills {what}")),
                Ok(_) => {}
                Err(e) => r.failures.push(format!("embedding of {what} failed: {e}")),
            }
        }
    }
    r
}

/// Both containments of the normal-closure lemma for a fixture.
pub fn normal_closure_suite(fixture: &str, bound: usize) -> SuiteReport {
    let mut r = SuiteReport { name: format!("normal closure {fixture}"), cases: 1, checks: 0, failures: Vec::new() };
    let ctx = EmbeddingContext::new(fixtures::load(fixture).expect("known fixture")).expect("fixture supports embedding");
    let rep = check_normal_closure(&ctx, bound);
    r.checks = rep.samples + ctx.cover().basis.rank();
    r.failures.extend(rep.forward_failures.iter().map(|n| format!("{n} is not conjugate to a puncture power")));
    r.failures.extend(rep.backward_failures.iter().map(|w| format!("{w} survives filling the punctures")));
    if rep.vacuous {
        r.failures.push("no puncture basis words".into());
    }
    r
}

/// A named suite with its default sample count; `None` for suites without sampling.
pub struct PlannedSuite {
    pub name: String,
    pub default_samples: Option<usize>,
    run: Box<dyn Fn(usize, u64) -> SuiteReport>,
}

impl PlannedSuite {
    fn sampled(name: String, default: usize, run: impl Fn(usize, u64) -> SuiteReport + 'static) -> PlannedSuite {
        PlannedSuite { name, default_samples: Some(default), run: Box::new(run) }
    }

    fn fixed(name: String, run: impl Fn() -> SuiteReport + 'static) -> PlannedSuite {
        PlannedSuite { name, default_samples: None, run: Box::new(move |_, _| run()) }
    }

    pub fn run(&self, samples: Option<usize>, seed: u64) -> SuiteReport {
        (self.run)(samples.or(self.default_samples).unwrap_or(0), seed)
    }
}

/// Every suite, in output order.
pub fn plan() -> Vec<PlannedSuite> {
    let mut out = Vec::new();
    for (g, p) in [(0, 3), (1, 1), (1, 2)] {
        out.push(PlannedSuite::sampled(format!("interval lemma ({g},{p})"), 200, move |n, s| lemma_rep_suite(g, p, n, s)));
    }
    out.push(PlannedSuite::sampled("order preservation".into(), 500, order_preservation_suite));
    for (g, p) in [(0, 2), (0, 3), (1, 2)] {
        out.push(PlannedSuite::sampled(format!("t-squarefree ({g},{p})"), 100, move |n, s| {
            t_squarefree_theorem_suite(g, p, n, s)
        }));
    }
    for (g, p) in INJECTIVITY_TYPES {
        out.push(PlannedSuite::sampled(format!("injectivity ({g},{p})"), 100, move |n, s| {
            injectivity_suite(g, p, &INJECTIVITY_ORDERS, embedding_fixture(g, p), n, s)
        }));
    }
    for name in ["paper-1-odd", "paper-3a"] {
        out.push(PlannedSuite::fixed(format!("normal closure {name}"), move || {
            normal_closure_suite(name, mcg_embedding::DEFAULT_CONJUGATOR_BOUND)
        }));
    }
    out
}
