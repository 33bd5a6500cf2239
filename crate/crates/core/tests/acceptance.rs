//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use collage::diagram::{compose_vertical, OneCellPath, SlicedDiagram};
use collage::fincat::random::{random_twisted, rng};
use collage::fincat::{
    ceil4, ceil_half, chain3, discrete_cyclic, identity_functor, kleisli_promonad, lax_mutations,
    tensor_bimodular_profunctors, tensor_partition_brute, z2,
};
use collage::oracle;
use collage::presentations::{
    chosen, collage_of, elaborate_collage, hom_enumerate, present, syn_functor_box, unit_iso_check, TypeError,
};
use collage::rewrite::{bounded_eq, kit_adjunction, trace_from_json, validate_trace, SearchConfig, Verdict};
use collage::semantics::{comb_eval, interpretations_of, optic_class_check, soundness_check, CombInstance};
use collage::sig::reserved::{FUNCTOR_DOWN, FUNCTOR_UP};
use collage::sig::{parse_document, BimodularGraph, Document, Edge, FunctorBoxSignature, Signature, TwoGraph};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn load(name: &str) -> Document {
    let src = std::fs::read_to_string(corpus().join(name)).expect("corpus file");
    parse_document(&src).expect("corpus parses")
}

fn bimodular(doc: &Document) -> &BimodularGraph {
    match &doc.theories[0].signature {
        Signature::Bimodular(g) => g,
        other => panic!("expected a bimodular theory, found {}", other.kind()),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn interchange() -> Outcome {
    let g = oracle::test_graph();
    ensure(
        g.zero_cells.len() == 2 && g.one_generators.len() == 4 && g.two_generators.len() == 3,
        || "test graph has the wrong shape".into(),
    )?;
    let r = oracle::exchange_suite(4);
    let diagrams: usize = r
        .lines
        .iter()
        .filter_map(|l| l.split(": ").nth(1)?.split(' ').next()?.parse::<usize>().ok())
        .sum();
    ensure(r.agree(), || r.mismatches.join("; "))?;
    Ok(format!("{diagrams} diagrams on {} domains", r.lines.len()))
}

/// `n` snakes on one wire, all cups first: `(Fup Fdown)^n Fup` is built
/// on the left of `Fup` and consumed again, or the mirror image on `Fdown`.
fn zigzag(g: &TwoGraph, unit: &str, counit: &str, n: usize, up: bool) -> SlicedDiagram {
    let s = |x: &str| x.to_string();
    let mut d = SlicedDiagram::identity(OneCellPath::new(
        if up { "A" } else { "X" },
        &[if up { FUNCTOR_UP } else { FUNCTOR_DOWN }],
    ));
    let pair = [s(FUNCTOR_UP), s(FUNCTOR_DOWN)];
    let wire = |k: usize| -> Vec<String> {
        let mut w: Vec<String> = Vec::new();
        if !up {
            w.push(s(FUNCTOR_DOWN));
        }
        for _ in 0..k {
            w.extend(pair.iter().cloned());
        }
        if up {
            w.push(s(FUNCTOR_UP));
        }
        w
    };
    let layer = |gen: &str, left: Vec<String>, right: Vec<String>| {
        SlicedDiagram::generator(g, gen).unwrap().whisker(g, &left, &right).unwrap()
    };
    for k in 0..n {
        let l = if up {
            layer(unit, vec![], wire(k))
        } else {
            layer(unit, wire(k), vec![])
        };
        d = compose_vertical(g, &d, &l).unwrap();
    }
    for k in (0..n).rev() {
        let l = if up {
            layer(counit, vec![s(FUNCTOR_UP)], wire(k)[1..].to_vec())
        } else {
            layer(counit, vec![], wire(k))
        };
        d = compose_vertical(g, &d, &l).unwrap();
    }
    d
}

fn snake_termination() -> Outcome {
    let p = syn_functor_box(&FunctorBoxSignature {
        plain_objects: vec!["Z".into()],
        box_objects: vec!["Y".into()],
        plain_edges: vec![Edge::new("z", &[], &["Z"])],
        ..Default::default()
    });
    let g = &p.graph;
    let rules = kit_adjunction(g, &p.pair, ["snakeUp", "snakeDown"]).map_err(|e| e.to_string())?;
    let cfg = SearchConfig::default();
    let mut checked = 0;
    for up in [true, false] {
        for n in 1..=6 {
            let d = zigzag(g, &p.pair.unit, &p.pair.counit, n, up);
            let dom = d.domain.clone();
            let id = SlicedDiagram::identity(dom);
            let steps = match bounded_eq(g, &d, &id, &rules, &cfg, None).map_err(|e| e.to_string())? {
                Verdict::Equal(steps) => steps,
                v => return Err(format!("zig-zag of {n}: {}", v.label())),
            };
            ensure(steps.len() == n, || format!("zig-zag of {n} took {} steps", steps.len()))?;
            let chain = validate_trace(g, &d, &steps, &rules, &cfg).map_err(|e| e.to_string())?;
            ensure(chain.last() == Some(&id), || format!("zig-zag of {n} ends elsewhere"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} zig-zags"))
}

fn unit_isomorphism() -> Outcome {
    let mut homs = 0;
    for file in ["shared_state.collage", "semaphore.collage", "channel.collage"] {
        let doc = load(file);
        let g = bimodular(&doc);
        let r = unit_iso_check(g);
        ensure(r.holds(), || format!("{file}: {r}"))?;
        let here = collage_of(g).graph;
        let there = collage_of(&chosen(&collage_of(g))).graph;
        let bounds: Vec<(OneCellPath, OneCellPath)> = here
            .two_generators
            .iter()
            .map(|t| SlicedDiagram::generator(&here, &t.name).unwrap().boundary(&here).unwrap())
            .collect();
        for (dom, _) in &bounds {
            for (_, cod) in &bounds {
                if dom.start != cod.start || dom.target(&here) != cod.target(&here) {
                    continue;
                }
                let a = hom_enumerate(&here, &[], dom, cod, 3).map_err(|e| e.to_string())?;
                let b = hom_enumerate(&there, &[], dom, cod, 3).map_err(|e| e.to_string())?;
                ensure(a.diagrams.len() == b.diagrams.len(), || {
                    format!("{file}: {dom} -> {cod} has {} and {}", a.diagrams.len(), b.diagrams.len())
                })?;
                homs += 1;
            }
        }
    }
    Ok(format!("{homs} hom-sets compared"))
}

fn coend_oracle() -> Outcome {
    let r = oracle::coend_suite(2024, 100);
    ensure(r.agree(), || r.mismatches.join("; "))?;
    Ok(format!("{} instances", r.lines.len()))
}

fn lax_laws() -> Outcome {
    let f = ceil_half();
    let d = f.check();
    ensure(d.is_empty(), || format!("ceil_half: {d:?}"))?;
    let ms = lax_mutations(&f, 11);
    ensure(ms.len() == 5, || format!("{} mutations", ms.len()))?;
    for (what, law, m) in &ms {
        let d = m.check();
        ensure(!d.is_empty(), || format!("{what} passed"))?;
        ensure(d.iter().all(|x| &x.law == law), || format!("{what}: {d:?}"))?;
    }
    Ok("5 mutations caught".into())
}

fn promonad_laws() -> Outcome {
    for (name, f) in [("z2", identity_functor(&z2())), ("ceil_half", ceil_half())] {
        let k = kleisli_promonad(&f);
        for (side, p) in [("right", &k.rtimes), ("left", &k.ltimes)] {
            let d = p.check();
            ensure(d.is_empty(), || format!("{name} {side}: {d:?}"))?;
        }
    }
    Ok("2 promonads, both sides".into())
}

fn tensor_quotient() -> Outcome {
    let mut r = rng(99);
    let mut n = 0;
    for v in [z2(), discrete_cyclic(2), discrete_cyclic(3), chain3(), ceil4()] {
        for _ in 0..12 {
            let t = random_twisted(&mut r, &v);
            let s = random_twisted(&mut r, &v);
            let tr = tensor_bimodular_profunctors(&t, &s).map_err(|e| e.to_string())?;
            ensure(tr.diagnostics.is_empty(), || format!("instance {n}: {:?}", tr.diagnostics))?;
            let brute = tensor_partition_brute(&t, &s).map_err(|e| e.to_string())?;
            ensure(tr.partition == brute, || format!("instance {n}: partitions differ"))?;
            n += 1;
        }
    }
    Ok(format!("{n} instances"))
}

fn rewrite_soundness() -> Outcome {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus().join("traces"))
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    let mut models = 0;
    for f in &files {
        let name = f.file_name().unwrap().to_string_lossy().to_string();
        let parts: Vec<&str> = name.trim_end_matches(".json").split('.').collect();
        let [stem, lhs, rhs, ..] = parts[..] else {
            return Err(format!("{name}: not stem.lhs.rhs.json"));
        };
        let doc = load(&format!("{stem}.collage"));
        let t = doc.find_diagram(lhs).ok_or(format!("{name}: no `{lhs}`"))?.0;
        let pres = present(t).map_err(|e| e.to_string())?;
        let d1 = pres.diagram(t, lhs).map_err(|e| e.to_string())?;
        let d2 = pres.diagram(t, rhs).map_err(|e| e.to_string())?;
        let steps = trace_from_json(&std::fs::read_to_string(f).unwrap()).map_err(|e| e.to_string())?;
        let interps = interpretations_of(&doc, t).map_err(|e| e.to_string())?;
        ensure(!interps.is_empty(), || format!("{name}: no model"))?;
        let r = soundness_check(t, &pres, &d1, &d2, &steps, &interps).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.holds(), || format!("{name}: {:?}", r.verdicts))?;
        models += r.verdicts.len();
    }
    ensure(files.len() >= 5, || format!("only {} traces", files.len()))?;
    Ok(format!("{} traces, {models} model checks", files.len()))
}

fn semaphore_typing() -> Outcome {
    let doc = load("shared_state.collage");
    let t = &doc.theories[0];
    elaborate_collage(bimodular(&doc), t.diagram("race").unwrap(), &t.diagrams)
        .map_err(|e| format!("shared state race: {e}"))?;
    let doc = load("semaphore.collage");
    let t = &doc.theories[0];
    match elaborate_collage(bimodular(&doc), t.diagram("race").unwrap(), &t.diagrams) {
        Err(TypeError::CentralMismatch { expected, found }) => Ok(format!("rejected: `{found}` for `{expected}`")),
        Err(e) => Err(format!("wrong error: {e}")),
        Ok(_) => Err("semaphore race typechecks".into()),
    }
}

fn comb_evaluation() -> Outcome {
    let mut insts = CombInstance::all_over_delooping(&z2());
    let exhaustive = insts.len();
    ensure(exhaustive == 8, || format!("{exhaustive} combs over z2"))?;
    let mut r = rng(314);
    let v = ceil4();
    insts.extend((0..20).map(|_| CombInstance::random(&v, &mut r)));
    for (k, inst) in insts.iter().enumerate() {
        let res = comb_eval(inst).map_err(|e| format!("comb {k}: {e}"))?;
        ensure(res.agree(), || format!("comb {k}: {res:?}"))?;
        optic_class_check(inst).map_err(|e| format!("comb {k}: {e}"))?;
    }
    Ok(format!("{exhaustive} exhaustive and 20 seeded combs"))
}

fn run_cli(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_collage"))
        .args(args)
        .output()
        .expect("binary runs");
    let mut bytes = out.stdout;
    bytes.extend(out.stderr);
    (out.status.code(), bytes)
}

fn determinism() -> Outcome {
    let dir = corpus();
    let mut runs: Vec<Vec<String>> = Vec::new();
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "collage"))
        .collect();
    files.sort();
    for f in &files {
        let doc = parse_document(&std::fs::read_to_string(f).unwrap()).map_err(|e| e.to_string())?;
        let file = f.to_string_lossy().to_string();
        for t in &doc.theories {
            for d in &t.diagrams {
                let name = d.name.clone();
                runs.push(vec!["normalize".into(), file.clone(), name.clone()]);
                for fmt in ["svg", "dot", "tikz"] {
                    runs.push(vec!["render".into(), file.clone(), name.clone(), "--format".into(), fmt.into()]);
                }
            }
        }
    }
    let dir_s = dir.to_string_lossy().to_string();
    runs.push(vec!["examples".into(), "--dir".into(), dir_s]);
    for o in [
        vec!["oracle", "exchange-bfs"],
        vec!["oracle", "hom-count"],
        vec!["oracle", "coend-closure", "--seed", "7", "--count", "25"],
    ] {
        runs.push(o.into_iter().map(String::from).collect());
    }
    for args in &runs {
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = run_cli(&a);
        let second = run_cli(&a);
        ensure(first == second, || format!("`{}` differs between runs", args.join(" ")))?;
        ensure(!first.1.is_empty(), || format!("`{}` printed nothing", args.join(" ")))?;
    }
    Ok(format!("{} invocations twice", runs.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("interchange completeness", interchange),
        ("snake termination", snake_termination),
        ("collage unit isomorphism", unit_isomorphism),
        ("coend oracle equivalence", coend_oracle),
        ("lax functor laws", lax_laws),
        ("promonad laws", promonad_laws),
        ("tensor quotient", tensor_quotient),
        ("rewrite soundness", rewrite_soundness),
        ("semaphore typing", semaphore_typing),
        ("comb evaluation", comb_evaluation),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why}; {secs:.2}s)", k + 1)
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
