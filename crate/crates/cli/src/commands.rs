use mcg_covers::CoverError;
use mcg_embedding::{check_normal_closure, embed, format_table, EmbeddingContext};
use mcg_ends::{End, OrderContext};
use mcg_mccool::{
    apply_nielsen, enumerate_moves, factor_bfs, generator_catalog, parse_provenance, random_element, standard_surface_set,
    verify_membership, GroupoidMorphism, McgElement, NielsenError, NielsenMove,
};
use mcg_torsion::{project, psi};
use mcg_whitehead::{AssociatedSequence, SurfaceWordSet, WhiteheadGraph, WordSet};
use mcg_words::{Alphabet, Endomorphism, Letter};
use serde_json::{json, Value};

use crate::input::alphabet_for;
use crate::suites::{injectivity_suite, plan};
use crate::{AlphabetArgs, Command, Failure, Report};

fn input(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn alphabet(args: &AlphabetArgs, texts: &[&str]) -> Result<Alphabet, Failure> {
    alphabet_for(args.surface, args.rank, texts)
}

fn report(lines: Vec<String>, json: Value, ok: bool) -> Result<Report, Failure> {
    Ok(Report { lines, json, ok })
}

fn surface_set(a: &Alphabet, text: &str) -> Result<Result<SurfaceWordSet, String>, Failure> {
    let set = WordSet::parse(a, text).map_err(input)?;
    Ok(SurfaceWordSet::from_word_set(a.rank(), &set).map_err(|e| e.to_string()))
}

fn parse_sequence(a: &Alphabet, text: &str) -> Result<AssociatedSequence, Failure> {
    let letters = a.parse_raw(&text.replace(',', " ")).map_err(input)?;
    AssociatedSequence::new(letters).ok_or_else(|| input("not a listing of every signed letter exactly once"))
}

fn image_lines(a: &Alphabet, e: &Endomorphism) -> Vec<String> {
    (0..a.rank()).map(|i| format!("{} -> {}", a.letter_name(Letter::new(i, false)), a.format(e.image(i)))).collect()
}

fn chain_text(a: &Alphabet, chain: &[Letter]) -> String {
    chain.iter().map(|&l| a.letter_name(l)).collect::<Vec<_>>().join("->")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn element(g: usize, p: usize, text: &str) -> Result<McgElement, Failure> {
    parse_provenance(g, p, text).map_err(input)
}

pub(crate) fn execute(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::Graph { set, alphabet: al } => {
            let a = alphabet(al, &[set])?;
            let g = WhiteheadGraph::build(a.rank(), &WordSet::parse(&a, set).map_err(input)?);
            let edges = g.format(&a);
            report(edges.clone(), json!({ "edges": edges, "edge_count": g.edge_count() }), true)
        }
        Command::SurfaceCheck { set, alphabet: al } => {
            let a = alphabet(al, &[set])?;
            let ws = WordSet::parse(&a, set).map_err(input)?;
            let graph = WhiteheadGraph::build(a.rank(), &ws);
            match SurfaceWordSet::from_word_set(a.rank(), &ws) {
                Ok(t) => {
                    let (g, p) = t.surface_type();
                    let chain = chain_text(&a, t.sequence().letters());
                    let lines = vec![format!("surface word set of type ({g},{p})"), format!("chain: {chain}")];
                    report(lines, json!({ "surface": true, "type": [g, p], "chain": chain }), true)
                }
                Err(e) => {
                    let failures: Vec<String> = graph.segment_failures().iter().map(|f| f.to_string()).collect();
                    let mut lines = vec![format!("not a surface word set: {e}")];
                    lines.extend(failures.iter().map(|f| format!("  {f}")));
                    report(lines, json!({ "surface": false, "reason": e.to_string(), "failures": failures }), false)
                }
            }
        }
        Command::Sequence { set, alphabet: al } => {
            let a = alphabet(al, &[set])?;
            let t = surface_set(&a, set)?.map_err(input)?;
            let seq = t.sequence().format(&a);
            report(vec![seq.clone()], json!({ "sequence": seq }), true)
        }
        Command::Recover { sequence, alphabet: al } => {
            let a = alphabet(al, &[sequence])?;
            let t = SurfaceWordSet::recover(&parse_sequence(&a, sequence)?);
            let (g, p) = t.surface_type();
            let set = t.format(&a);
            report(vec![set.clone(), format!("type ({g},{p})")], json!({ "set": set, "type": [g, p] }), true)
        }
        Command::Nielsen { set, mv, alphabet: al } => {
            let a = alphabet(al, &[set])?;
            let t = surface_set(&a, set)?.map_err(input)?;
            match mv {
                None => {
                    let moves: Vec<String> = enumerate_moves(t.sequence()).iter().map(|m| m.format(&a)).collect();
                    report(moves.clone(), json!({ "moves": moves }), true)
                }
                Some(text) => {
                    let m = NielsenMove::parse(&a, text).map_err(input)?;
                    match apply_nielsen(&a, &t, &m) {
                        Ok(out) => {
                            let (s, q) = (out.format(&a), out.sequence().format(&a));
                            let lines = vec![format!("set: {s}"), format!("sequence: {q}")];
                            report(lines, json!({ "admissible": true, "set": s, "sequence": q }), true)
                        }
                        Err(e @ (NielsenError::Inadmissible | NielsenError::NotSurface(_))) => {
                            report(vec![format!("inadmissible: {e}")], json!({ "admissible": false, "reason": e.to_string() }), false)
                        }
                        Err(e) => Err(input(e)),
                    }
                }
            }
        }
        Command::VerifyMcg { surface: (g, p), images, factor, depth } => {
            let a = Alphabet::surface(*g, *p);
            if images.len() != a.rank() {
                return Err(input(format!("expected {} images, found {}", a.rank(), images.len())));
            }
            let texts: Vec<&str> = images.iter().map(String::as_str).collect();
            let e = Endomorphism::parse(a.clone(), &texts).map_err(input)?;
            match verify_membership(&e, *g, *p) {
                Err(err) => report(vec![format!("not a mapping class: {err}")], json!({ "member": false, "reason": err.to_string() }), false),
                Ok(m) => {
                    let perm: Vec<usize> = m.permutation().iter().map(|k| k + 1).collect();
                    let mut lines = vec!["mapping class: yes".to_string(), format!("puncture permutation: {perm:?}")];
                    let mut doc = json!({ "member": true, "permutation": perm });
                    if *factor {
                        let source = standard_surface_set(*g, *p).ok_or_else(|| input("surface has rank zero"))?;
                        let morphism = GroupoidMorphism::new(source, e).map_err(input)?;
                        match factor_bfs(&morphism, *depth) {
                            Some(moves) => {
                                let names: Vec<String> = moves.iter().map(|m| m.format(&a)).collect();
                                lines.push(format!("factorization ({} moves):", names.len()));
                                lines.extend(names.iter().map(|n| format!("  {n}")));
                                doc["factorization"] = json!(names);
                            }
                            None => {
                                lines.push(format!("no factorization within depth {depth}"));
                                doc["factorization"] = Value::Null;
                            }
                        }
                    }
                    report(lines, doc, true)
                }
            }
        }
        Command::Random { surface: (g, p), length, seed } => {
            let m = random_element(*g, *p, *length, *seed);
            let word = m.provenance().unwrap_or("").to_string();
            let images = image_lines(m.alphabet(), m.endomorphism());
            let mut lines = vec![format!("element: {}", if word.is_empty() { "1" } else { &word })];
            lines.extend(images.iter().cloned());
            report(lines, json!({ "element": word, "images": images }), true)
        }
        Command::Project { word, order, alphabet: al } => {
            if *order < 2 {
                return Err(input("order must be at least 2"));
            }
            let a = alphabet(al, &[word])?;
            let w = a.parse(word).map_err(input)?;
            let nf = project(&a, &w, *order).format(&a);
            report(vec![nf.clone()], json!({ "normal_form": nf }), true)
        }
        Command::PsiCheck { surface: (g, p), order, element: el, samples, seed } => {
            if *order < 2 {
                return Err(input("order must be at least 2"));
            }
            if (*g, *p, *order) == (0, 2, 2) {
                return Err(input("surface (0,2) with order 2 is excluded"));
            }
            match el {
                Some(text) => {
                    let m = element(*g, *p, text)?;
                    let t = psi(&m, *order);
                    let a = m.alphabet();
                    let images: Vec<String> = (0..a.rank())
                        .map(|i| format!("{} -> {}", a.letter_name(Letter::new(i, false)), t.images()[i].format(a)))
                        .collect();
                    let (trivial, induced) = (m.endomorphism().is_identity(), t.is_identity());
                    let mut lines = images.clone();
                    lines.push(format!("element is identity: {}", yes(trivial)));
                    lines.push(format!("induced map is identity: {}", yes(induced)));
                    let doc = json!({ "images": images, "element_identity": trivial, "induced_identity": induced });
                    report(lines, doc, trivial == induced)
                }
                None => {
                    let r = injectivity_suite(*g, *p, &[*order], None, *samples, *seed);
                    report(vec![r.summary()], suite_json(&r), r.passes())
                }
            }
        }
        Command::CoverAnalyze { cover } => {
            let (graph, deck) = cover.source().graph()?;
            let a = graph.alphabet().clone();
            let invariant: Vec<(String, bool)> = generator_catalog(a.g(), a.p())
                .iter()
                .map(|m| (m.provenance().unwrap_or("?").to_string(), graph.is_invariant(m.endomorphism())))
                .collect();
            let all = invariant.iter().all(|(_, ok)| *ok);
            let lines = vec![
                format!("sheets: {}", deck.index),
                format!("boundary order: {}", deck.boundary_order),
                format!("boundary components: {}", deck.boundary_count),
                format!("puncture orders: {:?}", deck.puncture_orders),
                format!("lifted punctures: {}", deck.lifted_punctures),
                format!("cover rank: {}", deck.cover_rank),
                format!("genus: {}", deck.genus),
                format!("triple (b,q,g'): ({},{},{})", deck.boundary_count, deck.lifted_punctures, deck.genus),
                format!(
                    "invariant under catalog: {}",
                    if all { "yes".to_string() } else { format!("no ({})", failed_names(&invariant)) }
                ),
            ];
            let doc = json!({
                "sheets": deck.index,
                "boundary_order": deck.boundary_order,
                "boundary_components": deck.boundary_count,
                "puncture_orders": deck.puncture_orders,
                "lifted_punctures": deck.lifted_punctures,
                "cover_rank": deck.cover_rank,
                "genus": deck.genus,
                "invariant": all,
                "not_invariant": invariant.iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect::<Vec<_>>(),
            });
            report(lines, doc, all)
        }
        Command::BasisVerify { cover } => {
            let c = cover.source().cover()?;
            let rep = c.basis.verify(&c.graph, &c.deck);
            let checks = rep.lines();
            let mut lines: Vec<String> = checks.iter().map(|(n, ok)| format!("{n}: {}", if *ok { "pass" } else { "FAIL" })).collect();
            lines.extend(rep.outside.iter().map(|n| format!("  {n} is outside the cover group")));
            lines.extend(rep.conjugacy.iter().map(|n| format!("  {n} fails its conjugacy condition")));
            let doc = json!({
                "passes": rep.passes(),
                "checks": checks.iter().map(|(n, ok)| json!({ "name": n, "pass": ok })).collect::<Vec<_>>(),
                "outside": rep.outside,
                "conjugacy": rep.conjugacy,
            });
            report(lines, doc, rep.passes())
        }
        Command::Rewrite { word, cover } => {
            let c = cover.source().cover()?;
            let w = c.graph.alphabet().parse(word).map_err(input)?;
            match c.basis.rewrite(&w) {
                Ok(coords) => {
                    let text = c.basis.alphabet().format(&coords);
                    report(vec![text.clone()], json!({ "member": true, "coordinates": text }), true)
                }
                Err(CoverError::NotInCover(_)) => {
                    report(vec!["not in the cover group".into()], json!({ "member": false }), false)
                }
                Err(e) => Err(input(e)),
            }
        }
        Command::Embed { cover, element: el, normal_closure, bound } => {
            let ctx = EmbeddingContext::new(cover.source().cover()?).map_err(input)?;
            if el.is_none() && !normal_closure {
                return Err(input("pass --element WORD or --normal-closure"));
            }
            let (g, p) = ctx.source_type();
            let (tg, tp) = ctx.target_type();
            let mut lines = Vec::new();
            let mut doc = json!({ "source": [g, p], "target": [tg, tp] });
            let mut ok = true;
            if let Some(text) = el {
                let m = element(g, p, text)?;
                let img = embed(&ctx, &m).map_err(input)?;
                let table = format_table(ctx.display_alphabet(), img.endomorphism());
                lines.extend(table.iter().cloned());
                doc["table"] = json!(table);
            }
            if *normal_closure {
                let rep = check_normal_closure(&ctx, *bound);
                ok = rep.passes();
                lines.push(format!(
                    "normal closure (bound {bound}): {} ({} conjugates, {} forward failures, {} backward failures{})",
                    if ok { "pass" } else { "FAIL" },
                    rep.samples,
                    rep.forward_failures.len(),
                    rep.backward_failures.len(),
                    if rep.vacuous { ", vacuous" } else { "" }
                ));
                doc["normal_closure"] = json!({
                    "passes": ok,
                    "samples": rep.samples,
                    "forward_failures": rep.forward_failures,
                    "backward_failures": rep.backward_failures,
                    "vacuous": rep.vacuous,
                });
            }
            report(lines, doc, ok)
        }
        Command::EndsCompare { left, right, set, alphabet: al } => {
            let mut texts = vec![left.as_str(), right.as_str()];
            texts.extend(set.as_deref());
            let a = alphabet(al, &texts)?;
            let ctx = match set {
                Some(s) => OrderContext::new(surface_set(&a, s)?.map_err(input)?),
                None => OrderContext::standard(&a),
            };
            let e = End::parse(&a, left).map_err(input)?;
            let f = End::parse(&a, right).map_err(input)?;
            let sym = match ctx.compare(&e, &f) {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            let (es, fs) = (e.format(&a), f.format(&a));
            let doc = json!({ "left": es, "right": fs, "order": sym, "sequence": ctx.sequence().format(&a) });
            report(vec![format!("{es} {sym} {fs}")], doc, true)
        }
        Command::Suites { all: _, only, samples, seed } => {
            let mut lines = Vec::new();
            let mut docs = Vec::new();
            let mut ok = true;
            for s in plan() {
                if only.as_ref().is_some_and(|o| !s.name.contains(o.as_str())) {
                    continue;
                }
                let r = s.run(*samples, *seed);
                ok &= r.passes();
                lines.push(r.summary());
                lines.extend(r.failures.iter().take(5).map(|f| format!("  {f}")));
                docs.push(suite_json(&r));
            }
            if docs.is_empty() {
                return Err(input("no suite matches"));
            }
            report(lines, json!({ "passes": ok, "seed": seed, "suites": docs }), ok)
        }
    }
}

fn failed_names(checks: &[(String, bool)]) -> String {
    checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect::<Vec<_>>().join(", ")
}

fn suite_json(r: &mcg_ends::SuiteReport) -> Value {
    json!({ "name": r.name, "passes": r.passes(), "cases": r.cases, "checks": r.checks, "failures": r.failures })
}
