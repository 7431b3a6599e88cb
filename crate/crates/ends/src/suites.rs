//! Randomized checks of the ordering facts about surface ends.
//!
//! Each case draws from its own generator seeded by `(seed, case index)`,
//! so a failing case can be replayed alone.

use std::cmp::Ordering;

use mcg_mccool::{apply_nielsen, catalog_generator, enumerate_moves, random_element, NielsenMove};
use mcg_whitehead::{AssociatedSequence, SurfaceWordSet};
use mcg_words::{Alphabet, Endomorphism, Letter, Word};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{End, OrderContext};

/// Outcome of one suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: impl Into<String>) -> SuiteReport {
        SuiteReport { name: name.into(), cases: 0, checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        let verdict = if self.passes() { "pass" } else { "FAIL" };
        format!("{}: {verdict} ({} cases, {} checks, {} failures)", self.name, self.cases, self.checks, self.failures.len())
    }
}

/// Generator for case `index` of a run seeded by `seed`.
pub fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Uniform reduced word of length `len`.
pub fn random_word(rng: &mut impl Rng, rank: usize, len: usize) -> Word {
    let mut out = Word::empty();
    while out.len() < len {
        let l = Letter::from_code(rng.gen_range(0..2 * rank));
        if out.last() != Some(l.inverse()) {
            out.push(l);
        }
    }
    out
}

/// End with a prefix of at most `max_prefix` letters and a period of `1..=max_period` letters.
pub fn random_end(rng: &mut impl Rng, rank: usize, max_prefix: usize, max_period: usize) -> End {
    loop {
        let (lp, lq) = (rng.gen_range(0..=max_prefix), rng.gen_range(1..=max_period));
        let pre = random_word(rng, rank, lp);
        let per = random_word(rng, rank, lq);
        if let Ok(e) = End::new(&pre, &per) {
            return e;
        }
    }
}

/// Sampled end of the shadow of `w`.
pub fn random_end_in_shadow(rng: &mut impl Rng, w: &Word, rank: usize) -> End {
    loop {
        let e = random_end(rng, rank, 5, 4).left_mul(w);
        if e.in_shadow(w) {
            return e;
        }
    }
}

fn prod(ls: impl IntoIterator<Item = Word>) -> Word {
    ls.into_iter().fold(Word::empty(), |acc, w| acc.mul(&w))
}

fn commutators(a: &Alphabet) -> Word {
    prod((0..a.g()).map(|i| Word::reduce([a.x(i).inverse(), a.y(i).inverse(), a.x(i), a.y(i)])))
}

/// `t_k .. t_p * prod [x_i, y_i] * t_1 .. t_(k-1)` for 0-based `k`.
fn rotated_boundary(a: &Alphabet, k: usize) -> Word {
    let ts = |r: std::ops::Range<usize>| prod(r.map(|j| Word::letter(a.t(j))));
    prod([ts(k..a.p()), commutators(a), ts(0..k)])
}

/// `T_k .. T_1 * prod [y_i, x_i] (i descending) * T_p .. T_(k+1)` for 0-based `k`.
fn rotated_boundary_inverse(a: &Alphabet, k: usize) -> Word {
    let ts = |r: Vec<usize>| prod(r.into_iter().map(|j| Word::letter(a.t(j).inverse())));
    prod([ts((0..=k).rev().collect()), commutators(a).inverse(), ts((k + 1..a.p()).rev().collect())])
}

/// Parts (i)-(vi) of the interval lemma for the standard order of `(g, p)`.
///
/// `w` avoids ending in `t_k^{+-1}`; parts (v) and (vi) need `2g + p >= 3`
/// and (vi) needs `g >= 1`. Every `k` is also tried with `w = 1`.
pub fn lemma_rep_suite(g: usize, p: usize, samples: usize, seed: u64) -> SuiteReport {
    let a = Alphabet::surface(g, p);
    let mut report = SuiteReport::new(format!("interval lemma (g,p)=({g},{p})"));
    if p == 0 {
        return report;
    }
    let ctx = OrderContext::standard(&a);
    let n = a.rank();
    let zbar = a.boundary_word();
    let zbar_inf = End::power(&zbar).expect("boundary word is nonempty");
    let z_inf = End::power(&zbar.inverse()).expect("boundary word is nonempty");
    let tp_bar = Word::letter(a.t(p - 1).inverse());
    report.check(ctx.less(&zbar_inf, &z_inf), || "min end is not below max end".into());

    let total = samples + p;
    for case in 0..total {
        let mut rng = case_rng(seed, case);
        let (k, w) = if case < p {
            (case, Word::empty())
        } else {
            let k = rng.gen_range(0..p);
            let t = a.t(k);
            let w = loop {
                let len = rng.gen_range(0..=8);
                let w = random_word(&mut rng, n, len);
                if w.last().is_none_or(|l| l != t && l != t.inverse()) {
                    break w;
                }
            };
            (k, w)
        };
        report.cases += 1;
        let t = Word::letter(a.t(k));
        let tbar = t.inverse();
        let label = || format!("k={} w={}", k + 1, a.format(&w));
        let wt = w.mul(&t);
        let wtbar = w.mul(&tbar);
        let lo = zbar_inf.left_mul(&wt.mul(&w.inverse()));
        let hi = z_inf.left_mul(&wtbar.mul(&w.inverse()));
        let sq = wt.mul(&t);
        let sq_bar = wtbar.mul(&tbar);

        // (i)
        let closed_min = End::new(&wt, &rotated_boundary(&a, k)).expect("nonempty");
        let min_sq = ctx.min_in_shadow(&sq);
        report.check(closed_min == min_sq, || format!("(i) closed form of min: {}", label()));
        report.check(ctx.compare(&lo, &min_sq) != Ordering::Greater, || format!("(i) {}", label()));
        // (ii)
        let max_sq = ctx.max_in_shadow(&sq);
        let min_sq_bar = ctx.min_in_shadow(&sq_bar);
        report.check(ctx.less(&max_sq, &min_sq_bar), || format!("(ii) {}", label()));
        // (iii)
        let closed_max = End::new(&wtbar, &rotated_boundary_inverse(&a, k)).expect("nonempty");
        let max_sq_bar = ctx.max_in_shadow(&sq_bar);
        report.check(closed_max == max_sq_bar, || format!("(iii) closed form of max: {}", label()));
        report.check(ctx.compare(&max_sq_bar, &hi) != Ordering::Greater, || format!("(iii) {}", label()));
        // (iv)
        for _ in 0..4 {
            for base in [&sq, &sq_bar] {
                let e = random_end_in_shadow(&mut rng, base, n);
                report.check(ctx.in_interval(&e, &lo, &hi), || format!("(iv) {} end {}", label(), e.format(&a)));
            }
        }
        if 2 * g + p < 3 {
            continue;
        }
        // (v)
        let e5 = zbar_inf.left_mul(&tp_bar);
        report.check(!ctx.in_interval(&e5, &lo, &hi), || format!("(v) {}", label()));
        // (vi)
        if g > 0 {
            let i0 = rng.gen_range(0..g);
            for l in [a.x(i0), a.x(i0).inverse(), a.y(i0), a.y(i0).inverse()] {
                let e6 = z_inf.left_mul(&Word::letter(l));
                report.check(!ctx.in_interval(&e6, &lo, &hi), || format!("(vi) a={} {}", a.letter_name(l), label()));
            }
        }
    }
    report
}

/// Uniformly random associated sequence of the given rank.
pub fn random_sequence(rng: &mut impl Rng, rank: usize) -> AssociatedSequence {
    let mut ls: Vec<Letter> = Letter::all(rank).collect();
    ls.shuffle(rng);
    AssociatedSequence::new(ls).expect("a permutation of all letters")
}

/// Order preservation along chains of one to four Nielsen moves on rank-4 sets.
pub fn order_preservation_suite(samples: usize, seed: u64) -> SuiteReport {
    const RANK: usize = 4;
    let a = Alphabet::letters(RANK);
    let mut report = SuiteReport::new("order preservation (rank 4)");
    for case in 0..samples {
        let mut rng = case_rng(seed, case);
        report.cases += 1;
        let source = SurfaceWordSet::recover(&random_sequence(&mut rng, RANK));
        let src_ctx = OrderContext::new(source.clone());
        let (e, f) = loop {
            let e = random_end(&mut rng, RANK, 6, 4);
            let f = random_end(&mut rng, RANK, 6, 4);
            match src_ctx.compare(&e, &f) {
                Ordering::Less => break (e, f),
                Ordering::Greater => break (f, e),
                Ordering::Equal => continue,
            }
        };
        let steps = rng.gen_range(1..=4);
        let mut current = source;
        let mut map = Endomorphism::identity(a.clone());
        let mut names = Vec::new();
        for _ in 0..steps {
            let moves = enumerate_moves(current.sequence());
            let m: NielsenMove = moves.choose(&mut rng).expect("moves exist").clone();
            let next = match apply_nielsen(&a, &current, &m) {
                Ok(t) => t,
                Err(err) => {
                    report.check(false, || format!("move {} rejected: {err}", m.format(&a)));
                    break;
                }
            };
            names.push(m.format(&a));
            map = map.then(&m.endomorphism(&a));
            current = next;
            let ctx = OrderContext::new(current.clone());
            let (ie, jf) = (e.apply(&map).expect("automorphism"), f.apply(&map).expect("automorphism"));
            report.check(ctx.less(&ie, &jf), || {
                format!("{} < {} not kept by [{}]", e.format(&a), f.format(&a), names.join("; "))
            });
        }
    }
    report
}

/// Orbit of `t_2` under powers of the braid generator of `(0, 2)` against its closed form, for `|m| <= bound`.
pub fn braid_orbit_matches(bound: i64) -> bool {
    let s = catalog_generator(0, 2, "s1").expect("braid generator exists");
    let a = s.alphabet().clone();
    let (t1, t2) = (Word::letter(a.t(0)), Word::letter(a.t(1)));
    let c = t1.mul(&t2);
    let power = |j: i64| {
        let step = if j >= 0 { s.clone() } else { s.inverse() };
        (0..j.abs()).fold(t2.clone(), |w, _| step.endomorphism().map(&w))
    };
    let mut orbit: Vec<Word> = Vec::new();
    let mut closed: Vec<Word> = Vec::new();
    for m in -bound..=bound {
        orbit.push(power(2 * m));
        orbit.push(power(2 * m - 1));
        closed.push(t2.conj(&c.pow(m)));
        closed.push(t1.conj(&c.pow(m)));
    }
    orbit.sort();
    closed.sort();
    orbit == closed
}

/// Generator images and the two families of ends stay t-squarefree under random mapping classes.
pub fn t_squarefree_theorem_suite(g: usize, p: usize, samples: usize, seed: u64) -> SuiteReport {
    let a = Alphabet::surface(g, p);
    let mut report = SuiteReport::new(format!("t-squarefree images (g,p)=({g},{p})"));
    if (g, p) == (0, 0) {
        return report;
    }
    let zbar = a.boundary_word();
    let zbar_inf = End::power(&zbar).expect("nonempty");
    let z_inf = End::power(&zbar.inverse()).expect("nonempty");
    if (g, p) == (0, 2) {
        report.check(braid_orbit_matches(5), || "braid orbit of t2 differs from its closed form".into());
    }
    for case in 0..samples {
        let mut rng = case_rng(seed, case);
        report.cases += 1;
        let len = rng.gen_range(1..=8);
        let phi = random_element(g, p, len, rng.gen());
        let e = phi.endomorphism();
        let label = || phi.provenance().unwrap_or("?").to_string();
        for (gen, w) in e.images().iter().enumerate() {
            report.check(a.is_t_squarefree(w), || format!("image of {} under {}", a.names()[gen], label()));
        }
        if 2 * g + p < 3 {
            continue;
        }
        if p > 0 {
            let u = e.image_of_letter(a.t(p - 1).inverse());
            let end = zbar_inf.left_mul(&u);
            report.check(end.is_t_squarefree(&a), || format!("T{p}^phi (zbar^inf) under {}", label()));
        }
        for i in 0..g {
            for l in [a.x(i), a.x(i).inverse(), a.y(i), a.y(i).inverse()] {
                let end = z_inf.left_mul(&e.image_of_letter(l));
                report.check(end.is_t_squarefree(&a), || format!("{}^phi (z^inf) under {}", a.letter_name(l), label()));
            }
        }
    }
    report
}
